#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "extalg/io.hpp"

using namespace extalg;

namespace {

int vertex_of(const Algebra& alg, const std::string& label) {
  int v = alg.quiver().vertex_index(label);
  if (v < 0) throw Error("unknown vertex '" + label + "'");
  return v;
}

std::string arrow_line(const Quiver& q, const Arrow& a) {
  std::string s = a.label + ": " + q.vertex_label(a.src) + " -> " + q.vertex_label(a.tgt);
  if (a.degree != 1) s += " degree " + std::to_string(a.degree);
  return s;
}

void maybe_write(const io::json& report, const std::string& out) {
  if (!out.empty()) io::write_report(report, out);
}

int finish(const std::vector<m11::Check>& checks) {
  for (const auto& c : checks)
    if (c.status == "fail") return 1;
  return 0;
}

int run_resolve(const std::string& algebra, const std::string& simple, int degree,
                const std::string& out) {
  auto alg = io::load_algebra(algebra);
  int v = vertex_of(*alg, simple);
  Resolution res = Resolution::minimal(*alg, v, size_t(degree));
  const Quiver& q = alg->quiver();
  std::cout << "minimal resolution of simple " << simple << " over " << alg->name() << "\n";
  for (size_t n = 0; n <= res.top(); ++n) {
    std::cout << "  " << std::setw(3) << n << ": ";
    bool first = true;
    for (int s : res.term(n).summands()) {
      std::cout << (first ? "P_" : " + P_") << q.vertex_label(s);
      first = false;
    }
    std::cout << "\n";
  }
  auto degree_checks = verify_resolution(res);
  std::string detail;
  for (const auto& dc : degree_checks)
    if (!(dc.complex && dc.minimal && dc.exact)) {
      if (!detail.empty()) detail += ", ";
      detail += "degree " + std::to_string(dc.degree);
    }
  bool ok = detail.empty();
  std::vector<m11::Check> checks = {
      {"resolution_" + simple + "_verified", ok ? "pass" : "fail",
       ok ? "complex, radical-valued and exact through degree " + std::to_string(degree)
          : "verification failed at " + detail}};
  std::cout << (ok ? "verified: minimal and exact through degree " + std::to_string(degree)
                   : "FAILED at " + detail)
            << "\n";
  io::json report = io::report_skeleton(*alg);
  report["resolutions"] = io::json::array({io::resolution_json(res)});
  report["checks"] = io::checks_json(checks);
  maybe_write(report, out);
  return finish(checks);
}

int run_ext(const std::string& algebra, const std::string& from, const std::string& to,
            int degree, const std::string& out) {
  auto alg = io::load_algebra(algebra);
  int s = vertex_of(*alg, from), t = vertex_of(*alg, to);
  ExtContext ctx(*alg);
  size_t dim = ctx.ext_dim(s, t, size_t(degree));
  std::cout << dim << "\n";
  io::json report = io::report_skeleton(*alg);
  io::json entry;
  entry["from"] = from;
  entry["to"] = to;
  entry["degree"] = degree;
  entry["dim"] = dim;
  report["ext_dims"] = io::json::array({entry});
  maybe_write(report, out);
  return 0;
}

int run_present(const std::string& algebra, int max_degree, const std::string& order_str,
                const std::string& out) {
  auto alg = io::load_algebra(algebra);
  ExtContext ctx(*alg);
  std::vector<ExtClass> gens = minimal_generators(ctx, max_degree);
  if (gens.empty()) throw Error("no generators found up to degree " + std::to_string(max_degree));

  std::vector<std::string> names;
  std::set<std::string> used;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::string nm;
    if (alg->name() == "m11") nm = m11::name_for_signature(*alg, gens[i]);
    if (nm.empty() || used.count(nm)) nm = "g" + std::to_string(i + 1);
    used.insert(nm);
    names.push_back(nm);
  }

  // precedence chain, smallest generator first
  std::vector<std::string> chain = names;
  if (!order_str.empty()) {
    chain.clear();
    std::string cur;
    auto flush = [&] {
      size_t b = cur.find_first_not_of(" \t");
      size_t e = cur.find_last_not_of(" \t");
      if (b == std::string::npos) throw Error("--order: empty generator name");
      chain.push_back(cur.substr(b, e - b + 1));
      cur.clear();
    };
    for (char ch : order_str) {
      if (ch == '<')
        flush();
      else
        cur += ch;
    }
    flush();
    if (std::set<std::string>(chain.begin(), chain.end()) != used)
      throw Error("--order must list each generator name exactly once; the generators are: " +
                  [&] {
                    std::string all;
                    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
                    return all;
                  }());
  }

  std::unique_ptr<Quiver> eq = make_ext_quiver(*alg, gens, names);
  MonomialOrder ord = MonomialOrder::degree_then_llex(*eq, chain);
  std::vector<Element> rels = find_relations(ctx, *eq, gens, ord, max_degree);
  std::vector<RewriteRule> rules;
  for (const Element& r : rels) rules.push_back(orient(r, ord));
  RewriteSystem sys(*eq, ord, alg->field(), rules);
  bool grob = is_groebner(sys);

  const Quiver& q = alg->quiver();
  std::cout << "Ext algebra of " << alg->name() << " through degree " << max_degree << "\n";
  io::json jgens = io::json::array(), jrels = io::json::array();
  for (size_t i = 0; i < gens.size(); ++i) {
    std::string line = arrow_line(*eq, eq->arrow(int(i)));
    std::cout << "  generator " << line << "   # Ext^" << gens[i].degree << "("
              << q.vertex_label(gens[i].source) << "," << q.vertex_label(gens[i].target) << ")\n";
    jgens.push_back(line);
  }
  for (const RewriteRule& r : rules) {
    std::cout << "  relation " << r.lhs.str() << " = " << r.rhs.str() << "\n";
    jrels.push_back(r.lhs.str() + " = " + r.rhs.str());
  }
  std::vector<m11::Check> checks = {
      {"presentation_groebner", grob ? "pass" : "fail",
       grob ? "the relations form a Groebner basis"
            : "some overlap s-polynomial does not reduce to zero at this bound"}};
  std::cout << (grob ? "the relations form a Groebner basis\n"
                     : "NOT a Groebner basis at this bound\n");
  io::json report = io::report_skeleton(*alg);
  io::json pres;
  pres["generators"] = jgens;
  pres["relations"] = jrels;
  report["presentation"] = pres;
  report["checks"] = io::checks_json(checks);
  maybe_write(report, out);
  return finish(checks);
}

int run_hilbert(const std::string& algebra, const std::string& source, int degree,
                const std::string& out) {
  auto alg = io::load_algebra(algebra);
  int v = vertex_of(*alg, source);
  Resolution res = Resolution::minimal(*alg, v, size_t(degree));
  std::vector<size_t> dims = hilbert_from_resolution(res);
  std::cout << "dim Ext^n(" << source << ",-) for n = 0.." << degree << ":\n ";
  for (size_t d : dims) std::cout << " " << d;
  std::cout << "\n";
  io::json entry;
  entry["source"] = source;
  entry["coefficients"] = dims;
  if (alg->name() == "m11") {
    RationalSeries s = v == 0 ? m11::series_k() : v == 1 ? m11::series_m() : m11::series_n();
    entry["closed_form"] = s.str();
    std::cout << "closed form: " << s.str() << "\n";
  }
  io::json report = io::report_skeleton(*alg);
  report["hilbert"] = io::json::array({entry});
  maybe_write(report, out);
  return 0;
}

int run_groebner(const std::string& algebra, bool complete, int bound, const std::string& out) {
  auto alg = io::load_algebra(algebra);
  std::vector<m11::Check> checks;
  io::json report = io::report_skeleton(*alg);
  if (!complete) {
    bool g = is_groebner(alg->system());
    size_t n = overlaps(alg->system()).size();
    std::cout << (g ? "the relations form a Groebner basis ("
                    : "the relations do NOT form a Groebner basis (")
              << n << " overlaps checked)\n";
    checks.push_back({"relations_groebner", g ? "pass" : "fail",
                      std::to_string(n) + " overlap s-polynomials checked"});
  } else {
    RewriteSystem done = buchberger_complete(alg->system(), bound);
    size_t added = done.rules().size() - alg->system().rules().size();
    std::cout << "completion added " << added << " rule(s) up to degree " << bound << "\n";
    io::json jrels = io::json::array();
    for (const RewriteRule& r : done.rules()) {
      std::cout << "  " << r.lhs.str() << " -> " << r.rhs.str() << "\n";
      jrels.push_back(r.lhs.str() + " = " + r.rhs.str());
    }
    io::json pres;
    pres["relations"] = jrels;
    report["presentation"] = pres;
    bool g = is_groebner(done);
    checks.push_back({"groebner_completed", g ? "pass" : "fail",
                      "added " + std::to_string(added) + " rule(s) up to degree " +
                          std::to_string(bound)});
    std::cout << (g ? "completed system is a Groebner basis\n"
                    : "completed system still has unresolved overlaps\n");
  }
  report["checks"] = io::checks_json(checks);
  maybe_write(report, out);
  return finish(checks);
}

int run_verify(int bound, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  m11::VerificationReport rep = m11::verify_m11(bound);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "verify-m11: basic algebra of the principal 2-block of M11, bound " << rep.bound
            << "\n\n";
  size_t np = 0, nf = 0, ng = 0, ns = 0;
  for (const m11::Check& c : rep.checks) {
    if (c.status == "pass") ++np;
    if (c.status == "fail") ++nf;
    if (c.status == "flag") ++ng;
    if (c.status == "skipped") ++ns;
    std::cout << "  " << std::left << std::setw(9) << c.status << std::setw(40) << c.name << " "
              << c.details << "\n";
  }
  std::cout << "\n"
            << np << " passed, " << nf << " failed, " << ng << " flagged, " << ns
            << " skipped in " << std::fixed << std::setprecision(1) << secs << "s\n";
  maybe_write(io::verification_json(rep), out);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal resolutions and Ext algebra presentations of bounded quiver algebras"};
  app.require_subcommand(1);

  std::string algebra, simple, from, to, source, order_str, out;
  int degree = 0, max_degree = 12, bound = 12;
  bool complete = false;

  CLI::App* c_resolve = app.add_subcommand("resolve", "compute a minimal projective resolution");
  c_resolve->add_option("--algebra", algebra, "algebra file or builtin:m11")->required();
  c_resolve->add_option("--simple", simple, "vertex label of the simple module")->required();
  c_resolve->add_option("--degree", degree, "top homological degree")->required();
  c_resolve->add_option("--out", out, "write a JSON report");

  CLI::App* c_ext = app.add_subcommand("ext", "dimension of one Ext group");
  c_ext->add_option("--algebra", algebra, "algebra file or builtin:m11")->required();
  c_ext->add_option("--from", from, "resolved simple")->required();
  c_ext->add_option("--to", to, "coefficient simple")->required();
  c_ext->add_option("--degree", degree, "cohomological degree")->required();
  c_ext->add_option("--out", out, "write a JSON report");

  CLI::App* c_present =
      app.add_subcommand("present", "generators and relations of the Ext algebra");
  c_present->add_option("--algebra", algebra, "algebra file or builtin:m11")->required();
  c_present->add_option("--max-degree", max_degree, "search bound")->required();
  c_present->add_option("--order", order_str, "generator precedence, e.g. \"a < b < c\"");
  c_present->add_option("--out", out, "write a JSON report");

  CLI::App* c_hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients of Ext(S,-)");
  c_hilbert->add_option("--algebra", algebra, "algebra file or builtin:m11")->required();
  c_hilbert->add_option("--source", source, "resolved simple")->required();
  c_hilbert->add_option("--degree", degree, "top degree")->required();
  c_hilbert->add_option("--out", out, "write a JSON report");

  CLI::App* c_groebner = app.add_subcommand("groebner", "check or complete the relation set");
  c_groebner->add_option("--algebra", algebra, "algebra file or builtin:m11")->required();
  c_groebner->add_flag("--complete", complete, "run Buchberger completion");
  c_groebner->add_option("--bound", bound, "degree bound for completion");
  c_groebner->add_option("--out", out, "write a JSON report");

  CLI::App* c_verify = app.add_subcommand("verify-m11", "run the full M11 verification suite");
  c_verify->add_option("--bound", bound, "resolution bound (default 12)");
  c_verify->add_option("--out", out, "write a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_resolve->parsed()) return run_resolve(algebra, simple, degree, out);
    if (c_ext->parsed()) return run_ext(algebra, from, to, degree, out);
    if (c_present->parsed()) return run_present(algebra, max_degree, order_str, out);
    if (c_hilbert->parsed()) return run_hilbert(algebra, source, degree, out);
    if (c_groebner->parsed()) return run_groebner(algebra, complete, bound, out);
    if (c_verify->parsed()) return run_verify(bound, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
