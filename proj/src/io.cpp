#include "extalg/io.hpp"

#include <fstream>
#include <sstream>

namespace extalg::io {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail_at(size_t lineno, const std::string& msg) {
  throw Error("line " + std::to_string(lineno) + ": " + msg);
}

std::string arrow_str(const Quiver& q, const Arrow& a) {
  std::string s = a.label + ": " + q.vertex_label(a.src) + " -> " + q.vertex_label(a.tgt);
  if (a.degree != 1) s += " degree " + std::to_string(a.degree);
  return s;
}

// precedence chain, greatest arrow first
std::vector<std::string> chain_of(const Quiver& q, const MonomialOrder& ord) {
  std::vector<std::pair<int, std::string>> ranked;
  for (size_t i = 0; i < q.num_arrows(); ++i)
    ranked.push_back({ord.chain_position(int(i)), q.arrow(int(i)).label});
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> chain;
  for (auto& [pos, label] : ranked) chain.push_back(label);
  return chain;
}

const char* kind_name(MonomialOrder::Kind k) {
  return k == MonomialOrder::Kind::ShortMajorRlex ? "short_major_rlex" : "degree_then_llex";
}

}  // namespace

std::unique_ptr<Algebra> parse_algebra(const std::string& text, const std::string& name,
                                       int degree_bound) {
  struct Line {
    size_t no;
    std::vector<std::string> toks;
    std::string raw;
  };
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    for (size_t no = 1; std::getline(in, raw); ++no) {
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      auto toks = tokens_of(raw);
      if (!toks.empty()) lines.push_back({no, std::move(toks), raw});
    }
  }

  auto q = std::make_unique<Quiver>();
  uint32_t p = 0;
  size_t field_line = 0, order_line = 0;
  std::string order_kind;
  std::vector<std::string> order_chain;

  // first pass: field, vertices, arrows
  for (const Line& ln : lines) {
    const auto& t = ln.toks;
    if (t[0] == "field") {
      if (field_line) fail_at(ln.no, "duplicate field directive");
      if (t.size() != 2) fail_at(ln.no, "expected: field <p>");
      try {
        p = uint32_t(std::stoul(t[1]));
      } catch (...) {
        fail_at(ln.no, "field characteristic '" + t[1] + "' is not a number");
      }
      if (p < 2) fail_at(ln.no, "field characteristic must be at least 2");
      field_line = ln.no;
    } else if (t[0] == "vertex") {
      if (t.size() < 2) fail_at(ln.no, "expected: vertex <labels...>");
      for (size_t i = 1; i < t.size(); ++i)
        try {
          q->add_vertex(t[i]);
        } catch (const Error& e) {
          fail_at(ln.no, e.what());
        }
    } else if (t[0] == "arrow") {
      // arrow <name>: <src> -> <tgt> [degree <k>]
      std::vector<std::string> a(t.begin() + 1, t.end());
      if (!a.empty() && a[0].size() > 1 && a[0].back() == ':') {
        a[0].pop_back();
        a.insert(a.begin() + 1, ":");
      }
      bool shape = a.size() >= 5 && a[1] == ":" && a[3] == "->" &&
                   (a.size() == 5 || (a.size() == 7 && a[5] == "degree"));
      if (!shape) fail_at(ln.no, "expected: arrow <name>: <src> -> <tgt> [degree <k>]");
      int degree = 1;
      if (a.size() == 7) {
        try {
          degree = std::stoi(a[6]);
        } catch (...) {
          fail_at(ln.no, "arrow degree '" + a[6] + "' is not a number");
        }
      }
      try {
        q->add_arrow(a[0], a[2], a[4], degree);
      } catch (const Error& e) {
        fail_at(ln.no, e.what());
      }
    } else if (t[0] == "order") {
      if (order_line) fail_at(ln.no, "duplicate order directive");
      if (t.size() < 2) fail_at(ln.no, "expected: order <kind> <label> > <label> > ...");
      order_kind = t[1];
      for (size_t i = 2; i < t.size(); ++i) {
        if (i % 2 == 1) {
          if (t[i] != ">") fail_at(ln.no, "expected '>' between order labels");
        } else {
          order_chain.push_back(t[i]);
        }
      }
      if (t.size() % 2 == 0) fail_at(ln.no, "order list ends with a dangling '>'");
      order_line = ln.no;
    } else if (t[0] != "relation") {
      fail_at(ln.no, "unknown directive '" + t[0] + "'");
    }
  }
  if (!field_line) throw Error("missing field directive");
  if (!order_line) throw Error("missing order directive");
  if (q->num_vertices() == 0) throw Error("missing vertex directive");

  MonomialOrder ord = [&] {
    for (const std::string& label : order_chain)
      if (q->arrow_index(label) < 0)
        fail_at(order_line, "order mentions unknown arrow '" + label + "'");
    if (order_chain.size() != q->num_arrows())
      fail_at(order_line, "order must list every arrow exactly once");
    if (order_kind == "short_major_rlex") return MonomialOrder::short_major_rlex(*q, order_chain);
    if (order_kind == "degree_then_llex") {
      // files list the chain greatest-first; the constructor wants it ascending
      std::vector<std::string> ascending(order_chain.rbegin(), order_chain.rend());
      return MonomialOrder::degree_then_llex(*q, ascending);
    }
    fail_at(order_line, "unknown order kind '" + order_kind + "'");
  }();

  // second pass: relations
  std::vector<Element> relations;
  for (const Line& ln : lines) {
    if (ln.toks[0] != "relation") continue;
    std::string body = ln.raw.substr(ln.raw.find("relation") + 8);
    size_t eq = body.find('=');
    if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos)
      fail_at(ln.no, "expected: relation <expr> = <expr|0>");
    try {
      Element lhs = parse_element(body.substr(0, eq), *q, p);
      Element rhs = parse_element(body.substr(eq + 1), *q, p);
      relations.push_back(lhs - rhs);
    } catch (const Error& e) {
      fail_at(ln.no, e.what());
    }
  }

  try {
    return std::make_unique<Algebra>(std::move(q), p, ord, std::move(relations), name,
                                     degree_bound);
  } catch (const Error& e) {
    throw Error(std::string("algebra construction failed: ") + e.what());
  }
}

std::unique_ptr<Algebra> load_algebra(const std::string& spec) {
  if (spec == "builtin:m11") return m11::make_algebra();
  if (spec.rfind("builtin:", 0) == 0) throw Error("unknown builtin algebra '" + spec + "'");
  std::ifstream in(spec);
  if (!in) throw Error("cannot open algebra file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = spec;
  if (size_t slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (size_t dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
    stem = stem.substr(0, dot);
  try {
    return parse_algebra(buf.str(), stem);
  } catch (const Error& e) {
    throw Error(spec + ": " + e.what());
  }
}

std::string serialize_algebra(const Algebra& alg) {
  const Quiver& q = alg.quiver();
  std::ostringstream out;
  if (!alg.name().empty()) out << "# " << alg.name() << "\n";
  out << "field " << alg.field() << "\n";
  out << "vertex";
  for (size_t v = 0; v < q.num_vertices(); ++v) out << " " << q.vertex_label(int(v));
  out << "\n";
  for (size_t a = 0; a < q.num_arrows(); ++a)
    out << "arrow " << arrow_str(q, q.arrow(int(a))) << "\n";
  const MonomialOrder& ord = alg.system().order();
  out << "order " << kind_name(ord.kind());
  bool first = true;
  for (const std::string& label : chain_of(q, ord)) {
    out << (first ? " " : " > ") << label;
    first = false;
  }
  out << "\n";
  for (const RewriteRule& r : alg.system().rules())
    out << "relation " << r.lhs.str() << " = " << r.rhs.str() << "\n";
  return out.str();
}

json algebra_summary(const Algebra& alg) {
  const Quiver& q = alg.quiver();
  json j;
  j["name"] = alg.name();
  j["field"] = alg.field();
  json verts = json::array();
  for (size_t v = 0; v < q.num_vertices(); ++v) verts.push_back(q.vertex_label(int(v)));
  j["vertices"] = verts;
  json arrows = json::array();
  for (size_t a = 0; a < q.num_arrows(); ++a) arrows.push_back(arrow_str(q, q.arrow(int(a))));
  j["arrows"] = arrows;
  json rels = json::array();
  for (const RewriteRule& r : alg.system().rules())
    rels.push_back(r.lhs.str() + " = " + r.rhs.str());
  j["relations"] = rels;
  if (alg.degree_bound() >= 0)
    j["degree_bound"] = alg.degree_bound();
  else
    j["dimension"] = alg.dimension();
  return j;
}

json resolution_json(const Resolution& res) {
  const Quiver& q = res.algebra().quiver();
  json j;
  j["simple"] = q.vertex_label(res.simple());
  j["top"] = res.top();
  json terms = json::array();
  for (size_t n = 0; n <= res.top(); ++n) {
    json t = json::array();
    for (int v : res.term(n).summands()) t.push_back(q.vertex_label(v));
    terms.push_back(t);
  }
  j["terms"] = terms;
  json diffs = json::array();
  for (size_t n = 1; n <= res.top(); ++n) {
    json m = json::array();
    for (const auto& row : res.d(n).entries()) {
      json r = json::array();
      for (const Element& e : row) r.push_back(e.str());
      m.push_back(r);
    }
    diffs.push_back(m);
  }
  j["differentials"] = diffs;
  return j;
}

json checks_json(const std::vector<m11::Check>& checks) {
  json arr = json::array();
  for (const m11::Check& c : checks) {
    json j;
    j["name"] = c.name;
    j["status"] = c.status;
    j["details"] = c.details;
    arr.push_back(j);
  }
  return arr;
}

json report_skeleton(const Algebra& alg) {
  json j;
  j["schema_version"] = 1;
  j["algebra"] = algebra_summary(alg);
  return j;
}

json verification_json(const m11::VerificationReport& rep) {
  auto alg = m11::make_algebra();
  json j = report_skeleton(*alg);
  j["bound"] = rep.bound;
  j["checks"] = checks_json(rep.checks);
  return j;
}

std::string report_text(const json& report) { return report.dump(2) + "\n"; }

void write_report(const json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report to '" + path + "'");
  out << report_text(report);
}

}  // namespace extalg::io
