#include "extalg/rewrite.hpp"

#include <algorithm>

namespace extalg {

RewriteRule orient(const Element& rel, const MonomialOrder& order) {
  if (rel.is_zero()) throw Error("orient: zero relation");
  const Word* lead = nullptr;
  for (const auto& [w, c] : rel.terms())
    if (!lead || order.compare(w, *lead) > 0) lead = &w;
  if (lead->length() == 0) throw Error("orient: relation would rewrite the idempotent " + lead->str());
  uint32_t p = rel.field();
  Element monic = rel.scale(gf_inv(rel.coeff(*lead), p));
  Element rhs = Element::from_word(*lead, p) - monic;
  return {*lead, rhs};
}

RewriteSystem::RewriteSystem(const Quiver& q, MonomialOrder order, uint32_t p,
                             std::vector<RewriteRule> rules, size_t step_cap)
    : q_(&q), order_(std::move(order)), p_(p), rules_(std::move(rules)), step_cap_(step_cap) {
  if (!is_prime_u32(p)) throw Error("rewrite: field characteristic must be prime");
  for (const auto& r : rules_) {
    if (r.lhs.length() == 0) throw Error("rewrite: rule rewrites an idempotent");
    if (!r.rhs.is_zero()) {
      if (r.rhs.source() != r.lhs.source() || r.rhs.target() != r.lhs.target())
        throw Error("rewrite: rule sides have mismatched endpoints: " + r.lhs.str() + " vs " +
                    r.rhs.str());
      for (const auto& [w, c] : r.rhs.terms())
        if (order_.compare(r.lhs, w) <= 0)
          throw Error("rewrite: rule not oriented by the order: " + r.lhs.str() + " -> " +
                      r.rhs.str());
    }
  }
}

bool RewriteSystem::is_reducible(const Word& w) const {
  for (const auto& r : rules_)
    if (w.find(r.lhs) != Word::npos) return true;
  return false;
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::find_redex(const Word& w) const {
  std::optional<std::pair<size_t, size_t>> best;
  for (size_t i = 0; i < rules_.size(); ++i) {
    size_t pos = w.find(rules_[i].lhs);
    if (pos == Word::npos) continue;
    if (!best) {
      best = {i, pos};
      continue;
    }
    int c = order_.cmp_total(rules_[i].lhs, rules_[best->first].lhs);
    if (c > 0 || (c == 0 && pos < best->second)) best = {i, pos};
  }
  return best;
}

// replace the factor of w at [pos, pos+len) by rule's rhs
static Element one_step(const RewriteSystem& sys, const Word& w, const RewriteRule& rule,
                        size_t pos) {
  uint32_t p = sys.field();
  Word u = w.subword(0, pos);
  Word v = w.subword(pos + rule.lhs.length(), w.length() - pos - rule.lhs.length());
  return Element::from_word(u, p).concat(rule.rhs).concat(Element::from_word(v, p));
}

Element RewriteSystem::normal_form(const Element& x) const {
  Element cur = x;
  size_t steps = 0;
  for (;;) {
    const Word* pick = nullptr;
    for (const auto& [w, c] : cur.terms())
      if (is_reducible(w) && (!pick || order_.cmp_total(w, *pick) > 0)) pick = &w;
    if (!pick) return cur;
    Word w = *pick;
    uint32_t c = cur.coeff(w);
    auto [ri, pos] = *find_redex(w);
    cur += Element::from_word(w, p_, p_ - c);           // remove the term
    cur += one_step(*this, w, rules_[ri], pos).scale(c);  // add its replacement
    if (++steps > step_cap_)
      throw Error("rewrite: step cap " + std::to_string(step_cap_) +
                  " exceeded; system may not terminate");
  }
}

Element RewriteSystem::normal_form(const Word& w) const {
  return normal_form(Element::from_word(w, p_));
}

std::vector<Overlap> overlaps(const RewriteSystem& sys) {
  const auto& rules = sys.rules();
  std::vector<Overlap> out;
  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // proper suffix of li equals proper prefix of lj
      for (size_t k = 1; k < std::min(li.length(), lj.length()); ++k) {
        if (li.subword(li.length() - k, k) != lj.subword(0, k)) continue;
        Word w = li.subword(0, li.length() - k).concat(lj);
        out.push_back({i, j, w, 0, li.length() - k});
      }
      // containment: li inside lj
      if (i != j && li.length() <= lj.length()) {
        for (size_t pos = lj.find(li); pos != Word::npos; pos = lj.find(li, pos + 1)) {
          out.push_back({i, j, lj, pos, 0});
          if (pos + 1 + li.length() > lj.length()) break;
        }
      }
    }
  }
  return out;
}

Element s_polynomial(const RewriteSystem& sys, const Overlap& o) {
  const auto& rules = sys.rules();
  return one_step(sys, o.word, rules[o.rule1], o.pos1) -
         one_step(sys, o.word, rules[o.rule2], o.pos2);
}

bool s_polynomial_reduces(const RewriteSystem& sys, const Overlap& o) {
  return sys.normal_form(s_polynomial(sys, o)).is_zero();
}

bool is_groebner(const RewriteSystem& sys) {
  for (const auto& o : overlaps(sys))
    if (!s_polynomial_reduces(sys, o)) return false;
  return true;
}

static std::vector<RewriteRule> inter_reduce(const Quiver& q, const MonomialOrder& order,
                                             uint32_t p, std::vector<RewriteRule> rules,
                                             size_t step_cap) {
  for (size_t pass = 0;; ++pass) {
    if (pass > 10000) throw Error("rewrite: inter-reduction did not stabilize");
    bool changed = false;
    for (size_t i = 0; i < rules.size(); ++i) {
      std::vector<RewriteRule> others;
      for (size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      RewriteSystem sub(q, order, p, others, step_cap);
      Element full = Element::from_word(rules[i].lhs, p) - rules[i].rhs;
      Element nf = sub.normal_form(full);
      if (nf == full) continue;
      rules.erase(rules.begin() + i);
      if (!nf.is_zero()) rules.push_back(orient(nf, order));
      changed = true;
      break;
    }
    if (!changed) break;
  }
  // fully reduce right-hand sides (a rule may reduce its own rhs)
  RewriteSystem whole(q, order, p, rules, step_cap);
  for (auto& r : rules) r.rhs = whole.normal_form(r.rhs);
  return rules;
}

RewriteSystem buchberger_complete(const RewriteSystem& sys, int degree_bound) {
  const Quiver& q = sys.quiver();
  const MonomialOrder& order = sys.order();
  uint32_t p = sys.field();
  auto rules = inter_reduce(q, order, p, sys.rules(), sys.step_cap());
  for (size_t additions = 0;; ++additions) {
    if (additions > 4096) throw Error("rewrite: completion did not stabilize");
    RewriteSystem cur(q, order, p, rules, sys.step_cap());
    Element stuck;
    for (const auto& o : overlaps(cur)) {
      if (o.word.degree() > degree_bound) continue;
      Element nf = cur.normal_form(s_polynomial(cur, o));
      if (!nf.is_zero()) {
        stuck = nf;
        break;
      }
    }
    if (stuck.is_zero()) return cur;
    rules.push_back(orient(stuck, order));
    rules = inter_reduce(q, order, p, rules, sys.step_cap());
  }
}

MinimalityResult relations_minimal(const RewriteSystem& sys, int degree_bound) {
  const auto& rules = sys.rules();
  for (const auto& r : rules) {
    for (const auto& [w, c] : r.rhs.terms())
      if (w.degree() != r.lhs.degree())
        throw Error("relations_minimal: rule " + r.lhs.str() + " = " + r.rhs.str() +
                    " is not homogeneous");
  }
  for (size_t i = 0; i < rules.size(); ++i) {
    int d = rules[i].lhs.degree();
    if (d > degree_bound) continue;
    std::vector<RewriteRule> others;
    for (size_t j = 0; j < rules.size(); ++j)
      if (j != i) others.push_back(rules[j]);
    RewriteSystem sub(sys.quiver(), sys.order(), sys.field(), others, sys.step_cap());
    RewriteSystem done = buchberger_complete(sub, d);
    Element full = Element::from_word(rules[i].lhs, sys.field()) - rules[i].rhs;
    if (done.normal_form(full).is_zero())
      return {false, rules[i].lhs.str() + " = " + rules[i].rhs.str()};
  }
  return {true, ""};
}

std::vector<Word> StandardMonomialBasis::with_source(int v) const {
  std::vector<Word> out;
  for (const auto& w : words)
    if (w.source() == v) out.push_back(w);
  return out;
}

const std::vector<Word>& StandardMonomialBasis::pair(int src, int tgt) const {
  static const std::vector<Word> empty;
  auto it = by_pair.find({src, tgt});
  return it == by_pair.end() ? empty : it->second;
}

static StandardMonomialBasis finalize_basis(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), listing_less);
  StandardMonomialBasis b;
  b.words = std::move(words);
  for (const auto& w : b.words) {
    b.by_pair[{w.source(), w.target()}].push_back(w);
    ++b.count_by_degree[w.degree()];
  }
  return b;
}

// BFS by length; a fresh word w·a is irreducible iff no lhs is a suffix of it
// (every shorter factor lies inside the already-irreducible w)
static StandardMonomialBasis enumerate_basis(const RewriteSystem& sys, size_t length_cap,
                                             int max_degree) {
  const Quiver& q = sys.quiver();
  auto suffix_clean = [&](const Word& w) {
    for (const auto& r : sys.rules()) {
      size_t n = r.lhs.length();
      if (n <= w.length() && w.subword(w.length() - n, n) == r.lhs) return false;
    }
    return true;
  };
  std::vector<Word> all, level;
  for (size_t v = 0; v < q.num_vertices(); ++v) level.push_back(Word::idempotent(q, int(v)));
  size_t length = 0;
  // exponential growth hits the count guard long before the length guard
  const size_t count_cap = 200000;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (max_degree < 0 && all.size() > count_cap)
      throw Error("standard_monomials: more than " + std::to_string(count_cap) +
                  " standard words; quotient is not finite-dimensional");
    if (++length > length_cap)
      throw Error("standard_monomials: still growing at length " + std::to_string(length) +
                  "; quotient is not finite-dimensional");
    std::vector<Word> next;
    for (const auto& w : level)
      for (size_t a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(int(a)).src != w.target()) continue;
        Word ext = w.concat(Word::arrow_word(q, int(a)));
        if (max_degree >= 0 && ext.degree() > max_degree) continue;
        if (suffix_clean(ext)) next.push_back(ext);
      }
    level = std::move(next);
  }
  return finalize_basis(std::move(all));
}

StandardMonomialBasis standard_monomials(const RewriteSystem& sys, size_t length_cap) {
  return enumerate_basis(sys, length_cap ? length_cap : sys.step_cap(), -1);
}

StandardMonomialBasis standard_monomials_bounded(const RewriteSystem& sys, int max_degree) {
  return enumerate_basis(sys, size_t(-1), max_degree);
}

static RewriteSystem make_system(const Quiver& q, const MonomialOrder& order, uint32_t p,
                                 const std::vector<Element>& relations) {
  std::vector<RewriteRule> rules;
  for (const auto& rel : relations) rules.push_back(orient(rel, order));
  return RewriteSystem(q, order, p, rules);
}

Algebra::Algebra(std::unique_ptr<Quiver> q, uint32_t p, MonomialOrder order,
                 std::vector<Element> relations, std::string name, int degree_bound)
    : q_(std::move(q)),
      p_(p),
      name_(std::move(name)),
      degree_bound_(degree_bound),
      relations_(std::move(relations)),
      sys_(make_system(*q_, order, p, relations_)),
      basis_(degree_bound_ < 0 ? standard_monomials(sys_)
                               : standard_monomials_bounded(sys_, degree_bound_)) {
  sys_.set_step_cap(4 * std::max<size_t>(basis_.dim(), 1024));
  for (const auto& w : basis_.words) pim_[w.source()].push_back(w);
}

const std::vector<Word>& Algebra::pim_basis(int vertex) const {
  static const std::vector<Word> empty;
  auto it = pim_.find(vertex);
  return it == pim_.end() ? empty : it->second;
}

}  // namespace extalg
