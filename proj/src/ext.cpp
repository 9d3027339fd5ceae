#include "extalg/ext.hpp"

#include <algorithm>

namespace extalg {

bool verify_chain_map(const Resolution& from, const Resolution& to, const ChainMap& f) {
  if (f.components.empty()) return false;
  for (size_t m = 0; m < f.components.size(); ++m) {
    const ModuleMap& c = f.components[m];
    if (!c.domain().same_summands(from.term(m + f.shift)) ||
        !c.codomain().same_summands(to.term(m)))
      return false;
  }
  for (size_t m = 1; m < f.components.size(); ++m) {
    Mat lhs = to.d(m).to_matrix().mul(f.components[m].to_matrix());
    Mat rhs = f.components[m - 1].to_matrix().mul(from.d(m + f.shift).to_matrix());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ExtClass chain_map_class(const Resolution& from, const ChainMap& f) {
  if (f.components.empty()) throw Error("chain_map_class: empty chain map");
  const ModuleMap& c0 = f.components.front();
  if (c0.codomain().num_summands() != 1)
    throw Error("chain_map_class: degree-zero term is not a single projective");
  ExtClass out;
  out.source = f.source;
  out.target = f.target;
  out.degree = f.shift;
  const FreeModule& dom = c0.domain();
  Word idt = Word::idempotent(from.algebra().quiver(), f.target);
  for (size_t s = 0; s < dom.num_summands(); ++s) {
    if (dom.summand_vertex(s) != f.target) continue;
    const Element& e = c0.entry(0, s);
    out.v.push_back(e.is_zero() ? 0 : e.coeff(idt));
  }
  return out;
}

Resolution& ExtContext::resolution(int simple, size_t top) {
  auto it = resolutions_.find(simple);
  if (it == resolutions_.end())
    it = resolutions_.emplace(simple, Resolution::minimal(*alg_, simple, top)).first;
  it->second.extend(top);
  return it->second;
}

std::vector<size_t> ExtContext::ext_coords(int from, int to, size_t degree) {
  if (to < 0 || size_t(to) >= alg_->quiver().num_vertices())
    throw Error("ext_coords: no such vertex");
  const FreeModule& t = resolution(from, degree).term(degree);
  std::vector<size_t> out;
  for (size_t s = 0; s < t.num_summands(); ++s)
    if (t.summand_vertex(s) == to) out.push_back(s);
  return out;
}

size_t ExtContext::ext_dim(int from, int to, size_t degree) {
  return ext_coords(from, to, degree).size();
}

ExtClass ExtContext::zero_class(int from, int to, size_t degree) {
  ExtClass c;
  c.source = from;
  c.target = to;
  c.degree = degree;
  c.v.assign(ext_dim(from, to, degree), 0);
  return c;
}

ExtClass ExtContext::unit_class(int from, int to, size_t degree, size_t index) {
  ExtClass c = zero_class(from, to, degree);
  if (index >= c.v.size()) throw Error("unit_class: index out of range");
  c.v[index] = 1;
  return c;
}

const ChainMap& ExtContext::lift(const ExtClass& c, size_t levels, bool reverse_priority) {
  if (c.v.size() != ext_dim(c.source, c.target, c.degree))
    throw Error("lift: class vector has the wrong length");
  auto key = std::make_tuple(c.source, c.target, c.degree, c.v, reverse_priority);
  auto it = lifts_.find(key);
  if (it == lifts_.end()) {
    ChainMap f;
    f.source = c.source;
    f.target = c.target;
    f.shift = c.degree;
    it = lifts_.emplace(std::move(key), std::move(f)).first;
  }
  ChainMap& f = it->second;
  if (levels == 0) levels = 1;
  if (f.components.size() >= levels) return f;

  Resolution& rs = resolution(c.source, c.degree + levels - 1);
  Resolution& rt = resolution(c.target, levels - 1);
  const Quiver& q = alg_->quiver();
  uint32_t p = alg_->field();
  Element zero(q, p);

  if (f.components.empty()) {
    const FreeModule& dom = rs.term(c.degree);
    FreeModule cod = rt.term(0);
    std::vector<std::vector<Element>> entries(1);
    entries[0].assign(dom.num_summands(), zero);
    auto coords = ext_coords(c.source, c.target, c.degree);
    for (size_t i = 0; i < coords.size(); ++i)
      if (c.v[i])
        entries[0][coords[i]] = Element::from_word(Word::idempotent(q, c.target), p, c.v[i]);
    f.components.emplace_back(dom, cod, std::move(entries));
  }
  while (f.components.size() < levels) {
    size_t m = f.components.size();
    ModuleMap rhs = f.components[m - 1].compose(rs.d(m + c.degree));
    const Mat& rhs_mat = rhs.to_matrix();
    const FreeModule& dom = rs.term(m + c.degree);
    const FreeModule& cod = rt.term(m);
    const Mat& dmat = rt.d(m).to_matrix();
    std::vector<std::vector<Element>> entries(cod.num_summands());
    for (auto& row : entries) row.assign(dom.num_summands(), zero);
    for (size_t t = 0; t < dom.num_summands(); ++t) {
      int vt = dom.summand_vertex(t);
      size_t top_coord = dom.coord_of(t, Word::idempotent(q, vt));
      std::vector<uint32_t> b(rhs_mat.rows());
      for (size_t i = 0; i < b.size(); ++i) b[i] = rhs_mat.at(i, top_coord);
      // a module map may only send this summand top into coordinates ending at vt
      std::vector<size_t> cols;
      for (size_t cc = 0; cc < cod.dim(); ++cc)
        if (cod.coord_target(cc) == vt) cols.push_back(cc);
      Mat sub(dmat.rows(), cols.size(), p);
      for (size_t i = 0; i < dmat.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.set(i, j, dmat.at(i, cols[j]));
      auto x = sub.solve_lex_min(b, reverse_priority);
      if (!x) throw Error("lift: step " + std::to_string(m) + " has no solution");
      std::vector<uint32_t> y(cod.dim(), 0);
      for (size_t j = 0; j < cols.size(); ++j) y[cols[j]] = (*x)[j];
      for (size_t i = 0; i < cod.num_summands(); ++i) {
        Element comp = cod.component(y, i);
        if (!comp.is_zero()) entries[i][t] = comp;
      }
    }
    f.components.emplace_back(dom, cod, std::move(entries));
  }
  return f;
}

ExtClass ExtContext::yoneda(const ExtClass& a, const ExtClass& b, bool reverse_priority) {
  if (a.source != b.target) throw Error("yoneda: classes do not compose");
  if (a.v.size() != ext_dim(a.source, a.target, a.degree) ||
      b.v.size() != ext_dim(b.source, b.target, b.degree))
    throw Error("yoneda: class vector has the wrong length");
  ExtClass out;
  out.source = b.source;
  out.target = a.target;
  out.degree = a.degree + b.degree;
  auto tcoords = ext_coords(b.source, a.target, out.degree);
  out.v.assign(tcoords.size(), 0);
  if (a.is_zero() || b.is_zero()) return out;
  const ChainMap& fb = lift(b, a.degree + 1, reverse_priority);
  const ModuleMap& comp = fb.components[a.degree];
  auto scoords = ext_coords(a.source, a.target, a.degree);
  Word idt = Word::idempotent(alg_->quiver(), a.target);
  uint32_t p = alg_->field();
  for (size_t ti = 0; ti < tcoords.size(); ++ti)
    for (size_t si = 0; si < scoords.size(); ++si) {
      if (!a.v[si]) continue;
      const Element& e = comp.entry(scoords[si], tcoords[ti]);
      if (e.is_zero()) continue;
      uint32_t cf = e.coeff(idt);
      if (cf) out.v[ti] = uint32_t((out.v[ti] + uint64_t(a.v[si]) * cf) % p);
    }
  return out;
}

std::vector<ExtClass> minimal_generators(ExtContext& ctx, int max_degree) {
  std::vector<ExtClass> out;
  if (max_degree <= 0) return out;
  int nv = int(ctx.algebra().quiver().num_vertices());
  uint32_t p = ctx.algebra().field();
  for (int d = 1; d <= max_degree; ++d)
    for (int s = 0; s < nv; ++s)
      for (int t = 0; t < nv; ++t) {
        size_t r = ctx.ext_dim(s, t, d);
        if (!r) continue;
        // span of every product of two positive-degree classes
        Subspace span(r, p);
        for (int i = 1; i < d; ++i)
          for (int x = 0; x < nv; ++x) {
            size_t ra = ctx.ext_dim(x, t, i);
            size_t rb = ctx.ext_dim(s, x, d - i);
            for (size_t ka = 0; ka < ra; ++ka)
              for (size_t kb = 0; kb < rb; ++kb)
                span.insert(
                    ctx.yoneda(ctx.unit_class(x, t, i, ka), ctx.unit_class(s, x, d - i, kb)).v);
          }
        for (size_t k = 0; k < r; ++k) {
          ExtClass u = ctx.unit_class(s, t, d, k);
          if (span.insert(u.v)) out.push_back(u);
        }
      }
  return out;
}

std::unique_ptr<Quiver> make_ext_quiver(const Algebra& alg, const std::vector<ExtClass>& gens,
                                        const std::vector<std::string>& names) {
  if (gens.size() != names.size()) throw Error("make_ext_quiver: need one name per generator");
  auto eq = std::make_unique<Quiver>();
  const Quiver& q = alg.quiver();
  for (size_t v = 0; v < q.num_vertices(); ++v) eq->add_vertex(q.vertex_label(v));
  for (size_t i = 0; i < gens.size(); ++i)
    eq->add_arrow(names[i], q.vertex_label(gens[i].target), q.vertex_label(gens[i].source),
                  int(gens[i].degree));
  return eq;
}

ExtClass evaluate_word(ExtContext& ctx, const std::vector<ExtClass>& gen_classes, const Word& w) {
  ExtClass cls = ctx.unit_class(w.source(), w.source(), 0, 0);
  for (int a : w.arrows()) cls = ctx.yoneda(cls, gen_classes.at(a));
  return cls;
}

std::vector<Element> find_relations(ExtContext& ctx, const Quiver& eq,
                                    const std::vector<ExtClass>& gen_classes,
                                    const MonomialOrder& order, int max_degree) {
  const Algebra& alg = ctx.algebra();
  uint32_t p = alg.field();
  if (eq.num_arrows() != gen_classes.size())
    throw Error("find_relations: need one class per generator arrow");
  if (eq.num_vertices() != alg.quiver().num_vertices())
    throw Error("find_relations: generator quiver has the wrong vertices");
  for (size_t i = 0; i < gen_classes.size(); ++i) {
    const ExtClass& g = gen_classes[i];
    const Arrow& a = eq.arrow(int(i));
    if (a.src != g.target || a.tgt != g.source || a.degree != int(g.degree) || g.degree == 0)
      throw Error("find_relations: arrow " + a.label + " does not match its class");
  }

  struct Node {
    Word w;
    ExtClass cls;
  };
  std::map<int, std::vector<Node>> pending;
  for (size_t v = 0; v < eq.num_vertices(); ++v)
    pending[0].push_back(
        {Word::idempotent(eq, int(v)), ctx.unit_class(int(v), int(v), 0, 0)});

  std::vector<Element> relations;
  std::vector<RewriteRule> rules;
  for (int d = 0; d <= max_degree; ++d) {
    auto it = pending.find(d);
    if (it == pending.end()) continue;
    RewriteSystem sys(eq, order, p, rules);
    std::vector<Node> words;
    for (auto& n : it->second)
      if (!sys.is_reducible(n.w)) words.push_back(std::move(n));
    pending.erase(it);

    if (d >= 1 && !words.empty()) {
      std::map<std::pair<int, int>, std::vector<size_t>> groups;
      for (size_t i = 0; i < words.size(); ++i)
        groups[{words[i].w.source(), words[i].w.target()}].push_back(i);
      bool found = false;
      for (auto& [key, idx] : groups) {
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return order.less(words[b].w, words[a].w); });
        size_t r = words[idx[0]].cls.v.size();
        Mat eval(r, idx.size(), p);
        for (size_t j = 0; j < idx.size(); ++j)
          for (size_t i = 0; i < r; ++i) eval.set(i, j, words[idx[j]].cls.v[i]);
        Mat null = eval.null_space();
        if (!null.rows()) continue;
        // echelonize so each relation is led by a distinct greatest word
        Mat red = null.rref();
        for (size_t row = 0; row < red.rows(); ++row) {
          Element rel(eq, p);
          for (size_t j = 0; j < red.cols(); ++j)
            if (red.at(row, j)) rel = rel + Element::from_word(words[idx[j]].w, p, red.at(row, j));
          if (rel.is_zero()) continue;
          relations.push_back(rel);
          rules.push_back(orient(rel, order));
          found = true;
        }
      }
      if (found) {
        RewriteSystem sys2(eq, order, p, rules);
        std::vector<Node> kept;
        for (auto& n : words)
          if (!sys2.is_reducible(n.w)) kept.push_back(std::move(n));
        words = std::move(kept);
      }
    }

    for (const auto& n : words) {
      int at = n.w.target();
      for (size_t g = 0; g < eq.num_arrows(); ++g) {
        if (eq.arrow(int(g)).src != at) continue;
        int nd = d + eq.arrow(int(g)).degree;
        if (nd > max_degree) continue;
        pending[nd].push_back(
            {n.w.concat(Word::arrow_word(eq, int(g))), ctx.yoneda(n.cls, gen_classes[g])});
      }
    }
  }
  return relations;
}

std::vector<size_t> hilbert_from_resolution(const Resolution& res) {
  std::vector<size_t> out(res.top() + 1);
  for (size_t n = 0; n <= res.top(); ++n) out[n] = res.term(n).num_summands();
  return out;
}

std::map<int, std::vector<size_t>> hilbert_from_presentation(const Algebra& pres,
                                                             int max_degree) {
  if (pres.degree_bound() >= 0 && pres.degree_bound() < max_degree)
    throw Error("hilbert_from_presentation: basis bound is below the requested degree");
  if (!is_groebner(pres.system()))
    throw Error("hilbert_from_presentation: relations are not a complete rewrite system");
  std::map<int, std::vector<size_t>> out;
  for (size_t v = 0; v < pres.quiver().num_vertices(); ++v)
    out[int(v)] = std::vector<size_t>(max_degree + 1, 0);
  for (const Word& w : pres.basis().words)
    if (w.degree() <= max_degree) out[w.target()][w.degree()]++;
  return out;
}

static std::string poly_str(const std::vector<int64_t>& c) {
  std::string out;
  for (size_t k = 0; k < c.size(); ++k) {
    if (!c[k]) continue;
    int64_t a = c[k];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    int64_t mag = a < 0 ? -a : a;
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string RationalSeries::str() const {
  std::string n = poly_str(num), d = poly_str(den);
  if (d == "1") return n;
  return "(" + n + ")/(" + d + ")";
}

std::vector<int64_t> series_expand(const RationalSeries& s, size_t degree) {
  if (s.den.empty() || s.den[0] == 0)
    throw Error("series_expand: denominator has zero constant term");
  std::vector<int64_t> c(degree + 1, 0);
  for (size_t n = 0; n <= degree; ++n) {
    int64_t acc = n < s.num.size() ? s.num[n] : 0;
    for (size_t k = 1; k < s.den.size() && k <= n; ++k) acc -= s.den[k] * c[n - k];
    if (acc % s.den[0]) throw Error("series_expand: expansion is not integral");
    c[n] = acc / s.den[0];
  }
  return c;
}

}  // namespace extalg
