#pragma once

#include <map>
#include <memory>
#include <optional>

#include "extalg/element.hpp"

namespace extalg {

// oriented relation: lhs rewrites to rhs, lhs strictly greater than every rhs word
struct RewriteRule {
  Word lhs;
  Element rhs;
};

// pick the greatest word of rel as lhs, normalize its coefficient to 1
RewriteRule orient(const Element& rel, const MonomialOrder& order);

class RewriteSystem {
 public:
  RewriteSystem(const Quiver& q, MonomialOrder order, uint32_t p,
                std::vector<RewriteRule> rules, size_t step_cap = 4096);

  const Quiver& quiver() const { return *q_; }
  const MonomialOrder& order() const { return order_; }
  uint32_t field() const { return p_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  size_t step_cap() const { return step_cap_; }
  void set_step_cap(size_t cap) { step_cap_ = cap; }

  bool is_reducible(const Word& w) const;
  // chosen reduction step for w: (rule index, position); greatest matching lhs,
  // ties broken by leftmost occurrence then rule index
  std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const;
  Element normal_form(const Element& x) const;
  Element normal_form(const Word& w) const;

 private:
  const Quiver* q_;
  MonomialOrder order_;
  uint32_t p_;
  std::vector<RewriteRule> rules_;
  size_t step_cap_;
};

// ambiguity between two rules: `word` contains lhs of rule1 at pos1 and lhs of
// rule2 at pos2, either by suffix/prefix overlap or by containment
struct Overlap {
  size_t rule1;
  size_t rule2;
  Word word;
  size_t pos1;
  size_t pos2;
};

std::vector<Overlap> overlaps(const RewriteSystem& sys);
// difference of the two one-step reductions of the overlap word
Element s_polynomial(const RewriteSystem& sys, const Overlap& o);
bool s_polynomial_reduces(const RewriteSystem& sys, const Overlap& o);
bool is_groebner(const RewriteSystem& sys);

// add normal forms of failing s-polynomials (overlap words of degree <= bound)
// until none remain; the result is inter-reduced
RewriteSystem buchberger_complete(const RewriteSystem& sys, int degree_bound);

struct MinimalityResult {
  bool minimal = true;
  std::string witness;  // a redundant relation, when not minimal
};
// delete-one test: each rule must stay outside the ideal of the others
// (rules must be homogeneous in degree)
MinimalityResult relations_minimal(const RewriteSystem& sys, int degree_bound);

struct StandardMonomialBasis {
  std::vector<Word> words;  // listing order: degree, length, declaration-index lex
  std::map<std::pair<int, int>, std::vector<Word>> by_pair;
  std::map<int, size_t> count_by_degree;

  size_t dim() const { return words.size(); }
  std::vector<Word> with_source(int v) const;
  const std::vector<Word>& pair(int src, int tgt) const;
};

// enumerate every irreducible word; errors if new words keep appearing past the
// length cap (0 = use the system's step cap)
StandardMonomialBasis standard_monomials(const RewriteSystem& sys, size_t length_cap = 0);
// irreducible words of degree <= max_degree only (for non-finite quotients)
StandardMonomialBasis standard_monomials_bounded(const RewriteSystem& sys, int max_degree);

// a quiver with an oriented, validated relation set and its monomial basis
class Algebra {
 public:
  // degree_bound < 0: full enumeration (quotient must be finite-dimensional);
  // degree_bound >= 0: basis holds words of degree <= bound only
  Algebra(std::unique_ptr<Quiver> q, uint32_t p, MonomialOrder order,
          std::vector<Element> relations, std::string name = "", int degree_bound = -1);

  const Quiver& quiver() const { return *q_; }
  const RewriteSystem& system() const { return sys_; }
  const StandardMonomialBasis& basis() const { return basis_; }
  const std::vector<Element>& relations() const { return relations_; }
  uint32_t field() const { return p_; }
  const std::string& name() const { return name_; }
  int degree_bound() const { return degree_bound_; }
  size_t dimension() const { return basis_.dim(); }
  const std::vector<Word>& pim_basis(int vertex) const;
  Element nf(const Element& x) const { return sys_.normal_form(x); }

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

 private:
  std::unique_ptr<Quiver> q_;
  uint32_t p_;
  std::string name_;
  int degree_bound_;
  std::vector<Element> relations_;
  RewriteSystem sys_;
  StandardMonomialBasis basis_;
  std::map<int, std::vector<Word>> pim_;
};

}  // namespace extalg
