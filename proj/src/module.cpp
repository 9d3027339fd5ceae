#include "extalg/module.hpp"

#include <algorithm>

namespace extalg {

FreeModule::FreeModule(const Algebra& alg, std::vector<int> summands,
                       std::vector<std::pair<int, int>> bidegrees)
    : alg_(&alg), summands_(std::move(summands)), bidegrees_(std::move(bidegrees)) {
  if (!bidegrees_.empty() && bidegrees_.size() != summands_.size())
    throw Error("module: bidegree list does not match summands");
  for (int v : summands_) {
    if (v < 0 || size_t(v) >= alg.quiver().num_vertices())
      throw Error("module: bad summand vertex");
    offsets_.push_back(dim_);
    dim_ += alg.pim_basis(v).size();
  }
}

FreeModule FreeModule::pim(const Algebra& alg, int vertex) {
  return FreeModule(alg, {vertex});
}

const std::vector<Word>& FreeModule::summand_basis(size_t i) const {
  return alg_->pim_basis(summands_.at(i));
}

std::pair<size_t, Word> FreeModule::coord_word(size_t c) const {
  for (size_t i = summands_.size(); i-- > 0;)
    if (c >= offsets_[i]) return {i, summand_basis(i).at(c - offsets_[i])};
  throw Error("module: coordinate out of range");
}

size_t FreeModule::coord_of(size_t summand, const Word& w) const {
  const auto& basis = summand_basis(summand);
  for (size_t k = 0; k < basis.size(); ++k)
    if (basis[k] == w) return offsets_.at(summand) + k;
  throw Error("module: " + w.str() + " is not a basis word of summand " +
              std::to_string(summand));
}

void FreeModule::add_element(std::vector<uint32_t>& v, size_t summand, const Element& x) const {
  uint32_t p = alg_->field();
  for (const auto& [w, c] : x.terms()) {
    size_t idx = coord_of(summand, w);
    v.at(idx) = (v.at(idx) + c) % p;
  }
}

Element FreeModule::component(const std::vector<uint32_t>& v, size_t summand) const {
  Element x(alg_->quiver(), alg_->field());
  const auto& basis = summand_basis(summand);
  for (size_t k = 0; k < basis.size(); ++k) {
    uint32_t c = v.at(offsets_.at(summand) + k);
    if (c) x += Element::from_word(basis[k], alg_->field(), c);
  }
  return x;
}

std::string FreeModule::label() const {
  if (summands_.empty()) return "0";
  std::string out = "P_";
  for (int v : summands_) out += alg_->quiver().vertex_label(v);
  return out;
}

ModuleMap::ModuleMap(FreeModule domain, FreeModule codomain,
                     std::vector<std::vector<Element>> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
  const Algebra& alg = domain_.algebra();
  if (&alg != &codomain_.algebra()) throw Error("module map: mixed algebras");
  if (entries_.size() != codomain_.num_summands())
    throw Error("module map: entry rows do not match codomain summands");
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != domain_.num_summands())
      throw Error("module map: entry columns do not match domain summands");
    for (size_t j = 0; j < entries_[i].size(); ++j) {
      Element& x = entries_[i][j];
      x = alg.nf(x);
      if (x.is_zero()) continue;
      if (x.source() != codomain_.summand_vertex(i) || x.target() != domain_.summand_vertex(j))
        throw Error("module map: entry " + x.str() + " at (" + std::to_string(i) + "," +
                    std::to_string(j) + ") has wrong endpoints");
    }
  }
  // column c of the matrix = image of the c-th domain basis word
  mat_ = Mat(codomain_.dim(), domain_.dim(), alg.field());
  for (size_t j = 0; j < domain_.num_summands(); ++j) {
    const auto& basis = domain_.summand_basis(j);
    for (size_t k = 0; k < basis.size(); ++k) {
      size_t col = domain_.summand_offset(j) + k;
      for (size_t i = 0; i < codomain_.num_summands(); ++i) {
        if (entries_[i][j].is_zero()) continue;
        Element img = alg.nf(entries_[i][j].concat(basis[k]));
        for (const auto& [w, c] : img.terms())
          mat_.add_at(codomain_.coord_of(i, w), col, c);
      }
    }
  }
}

ModuleMap ModuleMap::zero(const FreeModule& domain, const FreeModule& codomain) {
  const Algebra& alg = domain.algebra();
  std::vector<std::vector<Element>> entries(
      codomain.num_summands(),
      std::vector<Element>(domain.num_summands(), Element(alg.quiver(), alg.field())));
  return ModuleMap(domain, codomain, std::move(entries));
}

ModuleMap ModuleMap::identity(const FreeModule& m) {
  const Algebra& alg = m.algebra();
  std::vector<std::vector<Element>> entries(
      m.num_summands(),
      std::vector<Element>(m.num_summands(), Element(alg.quiver(), alg.field())));
  for (size_t i = 0; i < m.num_summands(); ++i)
    entries[i][i] = Element::from_word(Word::idempotent(alg.quiver(), m.summand_vertex(i)),
                                       alg.field());
  return ModuleMap(m, m, std::move(entries));
}

ModuleMap ModuleMap::compose(const ModuleMap& g) const {
  if (!domain_.same_summands(g.codomain_)) throw Error("module map: compose shape mismatch");
  const Algebra& alg = domain_.algebra();
  std::vector<std::vector<Element>> entries(
      codomain_.num_summands(),
      std::vector<Element>(g.domain_.num_summands(), Element(alg.quiver(), alg.field())));
  for (size_t i = 0; i < codomain_.num_summands(); ++i)
    for (size_t k = 0; k < g.domain_.num_summands(); ++k)
      for (size_t j = 0; j < domain_.num_summands(); ++j) {
        if (entries_[i][j].is_zero() || g.entries_[j][k].is_zero()) continue;
        entries[i][k] += entries_[i][j].concat(g.entries_[j][k]);
      }
  return ModuleMap(g.domain_, codomain_, std::move(entries));
}

bool ModuleMap::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<uint32_t> act_right(const FreeModule& mod, const std::vector<uint32_t>& v,
                                int arrow) {
  const Algebra& alg = mod.algebra();
  const Quiver& q = alg.quiver();
  Word a = Word::arrow_word(q, arrow);
  std::vector<uint32_t> out(mod.dim(), 0);
  for (size_t c = 0; c < v.size(); ++c) {
    if (!v[c]) continue;
    auto [i, w] = mod.coord_word(c);
    if (w.target() != q.arrow(arrow).src) continue;
    Element img = alg.nf(Element::from_word(w.concat(a), alg.field(), v[c]));
    mod.add_element(out, i, img);
  }
  return out;
}

std::vector<size_t> radical_coords(const FreeModule& mod) {
  std::vector<size_t> out;
  for (size_t c = 0; c < mod.dim(); ++c)
    if (mod.coord_word(c).second.length() >= 1) out.push_back(c);
  return out;
}

bool is_zero_mod_radical(const ModuleMap& f) {
  for (const auto& row : f.entries())
    for (const auto& x : row)
      for (const auto& [w, c] : x.terms())
        if (w.length() == 0) return false;
  return true;
}

// minimal generators: a basis of K/K·rad lifted deterministically — process
// target vertices in declaration order, take echelon rows of each target
// block's projection, keep those independent of K·rad and earlier picks,
// each reduced against K·rad alone
static KernelResult extract_generators(const FreeModule& dom, Mat null_rows) {
  const Algebra& alg = dom.algebra();
  const Quiver& q = alg.quiver();
  uint32_t p = alg.field();
  size_t n = dom.dim();

  Subspace kr(n, p);
  for (size_t r = 0; r < null_rows.rows(); ++r)
    for (size_t a = 0; a < q.num_arrows(); ++a)
      kr.insert(act_right(dom, null_rows.row(r), int(a)));

  Subspace seen = kr;
  KernelResult out;
  out.basis = std::move(null_rows);
  for (size_t t = 0; t < q.num_vertices(); ++t) {
    Subspace block(n, p);
    for (size_t r = 0; r < out.basis.rows(); ++r) {
      std::vector<uint32_t> proj = out.basis.row(r);
      for (size_t c = 0; c < n; ++c)
        if (dom.coord_target(c) != int(t)) proj[c] = 0;
      block.insert(proj);
    }
    for (size_t k = 0; k < block.rank(); ++k) {
      std::vector<uint32_t> row = block.basis_row(k);
      if (!seen.insert(row)) continue;
      out.generators.push_back(kr.reduce(row));
      out.generator_targets.push_back(int(t));
    }
  }
  return out;
}

KernelResult kernel_with_generators(const ModuleMap& f) {
  return extract_generators(f.domain(), f.to_matrix().null_space());
}

KernelResult radical_kernel(const FreeModule& mod) {
  std::vector<std::vector<uint32_t>> rows;
  for (size_t c : radical_coords(mod)) {
    std::vector<uint32_t> e(mod.dim(), 0);
    e[c] = 1;
    rows.push_back(e);
  }
  return extract_generators(mod, Mat::from_rows(rows, mod.dim(), mod.algebra().field()));
}

ModuleMap map_from_generator_vectors(const FreeModule& codomain,
                                     const std::vector<std::vector<uint32_t>>& vectors,
                                     const std::vector<int>& targets) {
  const Algebra& alg = codomain.algebra();
  if (vectors.size() != targets.size()) throw Error("module: generator/target count mismatch");
  FreeModule dom(alg, targets);
  std::vector<std::vector<Element>> entries(
      codomain.num_summands(),
      std::vector<Element>(vectors.size(), Element(alg.quiver(), alg.field())));
  for (size_t j = 0; j < vectors.size(); ++j)
    for (size_t i = 0; i < codomain.num_summands(); ++i)
      entries[i][j] = codomain.component(vectors[j], i);
  return ModuleMap(dom, codomain, std::move(entries));
}

}  // namespace extalg
