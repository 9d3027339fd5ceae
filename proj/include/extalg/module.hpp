#pragma once

#include "extalg/rewrite.hpp"

namespace extalg {

// direct sum of projective indecomposables P_{v_0} ⊕ P_{v_1} ⊕ …, coordinates
// given by the standard-monomial bases of the summands in order
class FreeModule {
 public:
  FreeModule(const Algebra& alg, std::vector<int> summands,
             std::vector<std::pair<int, int>> bidegrees = {});
  static FreeModule pim(const Algebra& alg, int vertex);

  const Algebra& algebra() const { return *alg_; }
  size_t num_summands() const { return summands_.size(); }
  int summand_vertex(size_t i) const { return summands_.at(i); }
  const std::vector<int>& summands() const { return summands_; }
  const std::vector<std::pair<int, int>>& bidegrees() const { return bidegrees_; }

  size_t dim() const { return dim_; }
  size_t summand_offset(size_t i) const { return offsets_.at(i); }
  size_t summand_dim(size_t i) const { return summand_basis(i).size(); }
  const std::vector<Word>& summand_basis(size_t i) const;
  std::pair<size_t, Word> coord_word(size_t c) const;  // (summand, basis word)
  size_t coord_of(size_t summand, const Word& w) const;
  int coord_target(size_t c) const { return coord_word(c).second.target(); }

  // accumulate an element supported on one summand into a coordinate vector
  void add_element(std::vector<uint32_t>& v, size_t summand, const Element& x) const;
  // read the summand-i component of a coordinate vector back as an element
  Element component(const std::vector<uint32_t>& v, size_t summand) const;

  std::string label() const;  // e.g. "P_KN"
  bool same_summands(const FreeModule& o) const {
    return alg_ == o.alg_ && summands_ == o.summands_;
  }

 private:
  const Algebra* alg_;
  std::vector<int> summands_;
  std::vector<std::pair<int, int>> bidegrees_;
  std::vector<size_t> offsets_;
  size_t dim_ = 0;
};

// module homomorphism in matrix form: entry (i, j) routes domain summand j to
// codomain summand i by left multiplication; entries are kept normal-formed
class ModuleMap {
 public:
  ModuleMap(FreeModule domain, FreeModule codomain, std::vector<std::vector<Element>> entries);
  static ModuleMap zero(const FreeModule& domain, const FreeModule& codomain);
  static ModuleMap identity(const FreeModule& m);

  const FreeModule& domain() const { return domain_; }
  const FreeModule& codomain() const { return codomain_; }
  const Element& entry(size_t row, size_t col) const { return entries_.at(row).at(col); }
  const std::vector<std::vector<Element>>& entries() const { return entries_; }

  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const { return mat_.apply(v); }
  const Mat& to_matrix() const { return mat_; }
  // this ∘ g (apply g first)
  ModuleMap compose(const ModuleMap& g) const;
  bool is_zero() const;
  bool same_entries(const ModuleMap& o) const { return entries_ == o.entries_; }

 private:
  FreeModule domain_, codomain_;
  std::vector<std::vector<Element>> entries_;
  Mat mat_;
};

// plain linear map between the underlying vector spaces (homotopies)
struct LinearMap {
  FreeModule domain;
  FreeModule codomain;
  Mat m;  // codomain.dim() × domain.dim()
};

// right action of one arrow on a coordinate vector
std::vector<uint32_t> act_right(const FreeModule& mod, const std::vector<uint32_t>& v, int arrow);

// coordinates of the basis words of length >= 1
std::vector<size_t> radical_coords(const FreeModule& mod);
bool is_zero_mod_radical(const ModuleMap& f);

struct KernelResult {
  Mat basis;  // rows span the kernel as a vector space
  std::vector<std::vector<uint32_t>> generators;  // minimal module generators
  std::vector<int> generator_targets;  // common target vertex of each generator's words
};

KernelResult kernel_with_generators(const ModuleMap& f);
// same extraction applied to the radical of a module (kernel of the augmentation
// onto the top of each summand)
KernelResult radical_kernel(const FreeModule& mod);

// package generator vectors as a map ⊕_j P_{targets[j]} -> codomain whose j-th
// column sends 1_{targets[j]} to the j-th vector
ModuleMap map_from_generator_vectors(const FreeModule& codomain,
                                     const std::vector<std::vector<uint32_t>>& vectors,
                                     const std::vector<int>& targets);

}  // namespace extalg
