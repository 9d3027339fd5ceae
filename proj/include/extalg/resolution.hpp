#pragma once

#include <optional>

#include "extalg/module.hpp"

namespace extalg {

// Chain complex of free modules ... -> term(2) -> term(1) -> term(0) with
// differentials d(n): term(n) -> term(n-1) given by left multiplication.
class Resolution {
 public:
  // minimal projective resolution of the simple module at `simple`,
  // computed out to term(top) by iterated kernel extraction
  static Resolution minimal(const Algebra& alg, int simple, size_t top);

  // wrap externally supplied terms/differentials (diffs[n-1] maps term n -> n-1)
  static Resolution from_data(const Algebra& alg, int simple, std::vector<FreeModule> terms,
                              std::vector<ModuleMap> diffs);

  const Algebra& algebra() const { return *alg_; }
  int simple() const { return simple_; }
  size_t top() const { return terms_.size() - 1; }
  const FreeModule& term(size_t n) const;
  const ModuleMap& d(size_t n) const;  // n >= 1

  // push the resolution further out (no-op if new_top <= top())
  void extend(size_t new_top);

 private:
  Resolution(const Algebra& alg, int simple) : alg_(&alg), simple_(simple) {}
  void grow_once();

  const Algebra* alg_;
  int simple_;
  std::vector<FreeModule> terms_;
  std::vector<ModuleMap> diffs_;
};

struct DegreeCheck {
  size_t degree = 0;
  bool complex = true;  // d(n) o d(n+1) = 0
  bool minimal = true;  // all entries of d(n) lie in the radical
  bool exact = true;    // rank conditions (at 0: rank d(1) = dim term(0) - 1)
};

// one entry per degree 0..top; exactness at top() only covers what is measurable there
std::vector<DegreeCheck> verify_resolution(const Resolution& res);
bool all_pass(const std::vector<DegreeCheck>& checks);

// smallest p <= max_period with term(n+p) = term(n) (same summand lists) and
// d(n+p) = d(n) as matrices for every n >= 1 in range; errors unless
// top() >= 2*max_period + 1 so each candidate is witnessed at least once
std::optional<size_t> detect_periodicity(const Resolution& res, size_t max_period);

// matrix of left multiplication by x, as a map P_{target(x)} -> P_{source(x)}
Mat left_mult_matrix(const Algebra& alg, const Word& x);

// splitting h_x of left multiplication by x on its image: h_x(w) = v when
// nf(x*v) = w for a (necessarily unique) standard monomial v, else 0.
// domain P_{source(x)}, codomain P_{target(x)}
LinearMap homotopy_hx(const Algebra& alg, const Word& x);

// h'(w) = v when w = nf(beta*v) and w is not of the form nf(x*u):
// the analogous splitting of beta restricted away from the image of x.
// domain P_{source(beta)}, codomain P_{target(beta)}; source(x) must equal source(beta)
LinearMap homotopy_hprime(const Algebra& alg, const Word& beta, const Word& x);

// commutative square used to assemble contracting homotopies:
//   R --alpha--> P
//   |y           |x      (arrows denote left multiplication maps,
//   S --beta---> Q        so alpha is a path from vertex(P) to vertex(R), etc.)
struct HomotopySquare {
  std::string name;
  Word alpha, x, y, beta;
  bool has_hprime = false;
};

// x h_x + h_y y = id on P_{source(x)}, for consecutive maps P --x--> Q --y--> R
bool check_splitting_pair(const Algebra& alg, const Word& x, const Word& y);
// alpha h_y = h_x beta as maps S -> P
bool check_square_homotopy(const Algebra& alg, const HomotopySquare& sq);
// h' x = 0, and beta h' + x h_x = projection onto im(x) + im(beta)
bool check_hprime_identities(const Algebra& alg, const HomotopySquare& sq);

struct ContractingHomotopy {
  std::vector<LinearMap> maps;  // maps[n]: term(n) -> term(n+1)
};

struct HomotopyCheck {
  size_t degree = 0;
  bool ok = false;
};

// d(n+1) h(n) + h(n-1) d(n) = id for 1 <= n < top, and at degree 0
// d(1) h(0) = id minus the projection onto the idempotent coordinates of term(0)
std::vector<HomotopyCheck> verify_contracting_homotopy(const Resolution& res,
                                                       const ContractingHomotopy& h);

}  // namespace extalg
