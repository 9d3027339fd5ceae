#pragma once

#include <map>
#include <tuple>

#include "extalg/resolution.hpp"

namespace extalg {

// element of Ext^degree(S, T): a cocycle Hom(term(degree) of the resolution of
// S, T), written in coordinates over the P_T summands of that term
struct ExtClass {
  int source = -1;  // S, the resolved simple
  int target = -1;  // T, the coefficient simple
  size_t degree = 0;
  std::vector<uint32_t> v;

  bool is_zero() const {
    for (uint32_t c : v)
      if (c) return false;
    return true;
  }
  bool operator==(const ExtClass& o) const = default;
};

// chain-map lift of a class in Ext^shift(source, target):
// components[m] maps term(m + shift) of D(source) to term(m) of D(target)
struct ChainMap {
  int source = -1;
  int target = -1;
  size_t shift = 0;
  std::vector<ModuleMap> components;
};

// commutation d o f = f o d in every available degree, plus matching endpoints
bool verify_chain_map(const Resolution& from, const Resolution& to, const ChainMap& f);
// cocycle induced by components[0]
ExtClass chain_map_class(const Resolution& from, const ChainMap& f);

// shared workspace: resolutions of the simple modules plus memoized lifts
class ExtContext {
 public:
  explicit ExtContext(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }
  // resolution of the given simple, extended at least out to `top`
  Resolution& resolution(int simple, size_t top);
  size_t ext_dim(int from, int to, size_t degree);
  // summand positions of the P_to summands in term(degree) of D(from)
  std::vector<size_t> ext_coords(int from, int to, size_t degree);
  ExtClass zero_class(int from, int to, size_t degree);
  ExtClass unit_class(int from, int to, size_t degree, size_t index);

  // chain-map lift with at least `levels` components; deterministic
  // (each step takes the lexicographically minimal solution; reverse_priority
  // flips the coordinate priority, giving an equally valid but generally
  // different lift)
  const ChainMap& lift(const ExtClass& c, size_t levels, bool reverse_priority = false);

  // composition product: a o (lift of b), defined when a.source == b.target;
  // lands in Ext^{a.degree+b.degree}(b.source, a.target)
  ExtClass yoneda(const ExtClass& a, const ExtClass& b, bool reverse_priority = false);

 private:
  const Algebra* alg_;
  std::map<int, Resolution> resolutions_;
  std::map<std::tuple<int, int, size_t, std::vector<uint32_t>, bool>, ChainMap> lifts_;
};

// classes outside the span of all products of lower-degree classes, located
// degree by degree up to max_degree; returned in discovery order
std::vector<ExtClass> minimal_generators(ExtContext& ctx, int max_degree);

// quiver with one arrow per generator: the arrow for a class in Ext^d(S, T)
// runs from the vertex of T to the vertex of S and carries degree d, so that
// left-to-right path words match composition order
std::unique_ptr<Quiver> make_ext_quiver(const Algebra& alg, const std::vector<ExtClass>& gens,
                                        const std::vector<std::string>& names);

// value of a path word in the generator arrows, multiplied left to right
ExtClass evaluate_word(ExtContext& ctx, const std::vector<ExtClass>& gen_classes, const Word& w);

// minimal rewriting relations among the generators in degrees <= max_degree:
// per degree, the kernel of evaluating all words that are standard with
// respect to the relations already found, echelonized so each relation is
// led by its greatest word under `order`
std::vector<Element> find_relations(ExtContext& ctx, const Quiver& ext_quiver,
                                    const std::vector<ExtClass>& gen_classes,
                                    const MonomialOrder& order, int max_degree);

// total number of summands per term: the coefficients of the Hilbert series
// of Ext(S, -) for the resolved simple
std::vector<size_t> hilbert_from_resolution(const Resolution& res);

// standard-monomial counts of a presented Ext algebra, per resolved simple
// (= path target) and degree; requires a completed rewrite system
std::map<int, std::vector<size_t>> hilbert_from_presentation(const Algebra& pres, int max_degree);

// power series given as num/den, coefficient lists with constant term first
struct RationalSeries {
  std::vector<int64_t> num;
  std::vector<int64_t> den;
  std::string str() const;
};
// coefficients 0..degree; errors when den has zero constant term or the
// expansion is not integral
std::vector<int64_t> series_expand(const RationalSeries& s, size_t degree);

}  // namespace extalg
