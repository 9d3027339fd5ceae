#include "extalg/resolution.hpp"

#include <algorithm>
#include <set>

namespace extalg {

namespace {

// normal form of x*v, which must be zero or a single monic basis word
std::optional<Word> monomial_image(const Algebra& alg, const Word& x, const Word& v) {
  Element e = alg.nf(Element::from_word(x.concat(v), alg.field()));
  if (e.is_zero()) return std::nullopt;
  const auto& t = e.terms();
  if (t.size() != 1 || t.begin()->second != 1)
    throw Error("homotopy splitting needs monomial images, got " + e.str());
  return t.begin()->first;
}

}  // namespace

const FreeModule& Resolution::term(size_t n) const {
  if (n >= terms_.size()) throw Error("Resolution::term: degree out of range");
  return terms_[n];
}

const ModuleMap& Resolution::d(size_t n) const {
  if (n < 1 || n > diffs_.size()) throw Error("Resolution::d: degree out of range");
  return diffs_[n - 1];
}

Resolution Resolution::minimal(const Algebra& alg, int simple, size_t top) {
  if (simple < 0 || size_t(simple) >= alg.quiver().num_vertices())
    throw Error("Resolution::minimal: no such vertex");
  Resolution res(alg, simple);
  res.terms_.push_back(FreeModule::pim(alg, simple));
  res.extend(top);
  return res;
}

Resolution Resolution::from_data(const Algebra& alg, int simple, std::vector<FreeModule> terms,
                                 std::vector<ModuleMap> diffs) {
  if (terms.empty() || diffs.size() + 1 != terms.size())
    throw Error("Resolution::from_data: need one differential per pair of adjacent terms");
  for (size_t n = 1; n < terms.size(); ++n) {
    if (!diffs[n - 1].domain().same_summands(terms[n]) ||
        !diffs[n - 1].codomain().same_summands(terms[n - 1]))
      throw Error("Resolution::from_data: differential " + std::to_string(n) +
                  " does not match the terms");
  }
  Resolution res(alg, simple);
  res.terms_ = std::move(terms);
  res.diffs_ = std::move(diffs);
  return res;
}

void Resolution::extend(size_t new_top) {
  while (top() < new_top) grow_once();
}

void Resolution::grow_once() {
  KernelResult k =
      diffs_.empty() ? radical_kernel(terms_[0]) : kernel_with_generators(diffs_.back());
  ModuleMap d_new = map_from_generator_vectors(terms_.back(), k.generators, k.generator_targets);
  terms_.push_back(d_new.domain());
  diffs_.push_back(std::move(d_new));
}

std::vector<DegreeCheck> verify_resolution(const Resolution& res) {
  std::vector<DegreeCheck> out;
  size_t top = res.top();
  for (size_t n = 0; n <= top; ++n) {
    DegreeCheck c;
    c.degree = n;
    if (n >= 1) c.minimal = is_zero_mod_radical(res.d(n));
    if (n >= 1 && n + 1 <= top) c.complex = res.d(n).compose(res.d(n + 1)).is_zero();
    if (n == 0) {
      if (top >= 1) c.exact = res.d(1).to_matrix().rank() + 1 == res.term(0).dim();
    } else if (n + 1 <= top) {
      c.exact =
          res.d(n).to_matrix().rank() + res.d(n + 1).to_matrix().rank() == res.term(n).dim();
    }
    out.push_back(c);
  }
  return out;
}

bool all_pass(const std::vector<DegreeCheck>& checks) {
  for (const auto& c : checks)
    if (!c.complex || !c.minimal || !c.exact) return false;
  return true;
}

std::optional<size_t> detect_periodicity(const Resolution& res, size_t max_period) {
  if (max_period == 0) throw Error("detect_periodicity: max_period must be positive");
  if (res.top() < 2 * max_period + 1)
    throw Error("detect_periodicity: resolve to degree " + std::to_string(2 * max_period + 1) +
                " or beyond to certify periods up to " + std::to_string(max_period));
  auto sorted = [](const std::vector<int>& v) {
    auto s = v;
    std::sort(s.begin(), s.end());
    return s;
  };
  for (size_t p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (size_t n = 1; n + p <= res.top() && ok; ++n) {
      if (sorted(res.term(n).summands()) != sorted(res.term(n + p).summands())) {
        ok = false;
        break;
      }
      const Mat& a = res.d(n).to_matrix();
      const Mat& b = res.d(n + p).to_matrix();
      ok = a.rows() == b.rows() && a.cols() == b.cols() && a == b;
    }
    if (ok) return p;
  }
  return std::nullopt;
}

Mat left_mult_matrix(const Algebra& alg, const Word& x) {
  FreeModule dom = FreeModule::pim(alg, x.target());
  FreeModule cod = FreeModule::pim(alg, x.source());
  ModuleMap f(dom, cod, {{Element::from_word(x, alg.field())}});
  return f.to_matrix();
}

LinearMap homotopy_hx(const Algebra& alg, const Word& x) {
  if (x.length() == 0) throw Error("homotopy_hx: multiplication by an idempotent has no use here");
  FreeModule dom = FreeModule::pim(alg, x.source());
  FreeModule cod = FreeModule::pim(alg, x.target());
  Mat m(cod.dim(), dom.dim(), alg.field());
  std::vector<bool> hit(dom.dim(), false);
  const auto& vb = alg.pim_basis(x.target());
  for (size_t j = 0; j < vb.size(); ++j) {
    auto w = monomial_image(alg, x, vb[j]);
    if (!w) continue;
    size_t c = dom.coord_of(0, *w);
    if (hit[c]) throw Error("homotopy_hx: splitting ambiguous at " + w->str());
    hit[c] = true;
    m.set(j, c, 1);
  }
  return LinearMap{dom, cod, m};
}

LinearMap homotopy_hprime(const Algebra& alg, const Word& beta, const Word& x) {
  if (beta.source() != x.source())
    throw Error("homotopy_hprime: the two maps must share a codomain");
  FreeModule dom = FreeModule::pim(alg, beta.source());
  FreeModule cod = FreeModule::pim(alg, beta.target());
  std::set<Word> im_x;
  for (const Word& u : alg.pim_basis(x.target())) {
    auto w = monomial_image(alg, x, u);
    if (w) im_x.insert(*w);
  }
  Mat m(cod.dim(), dom.dim(), alg.field());
  std::vector<bool> hit(dom.dim(), false);
  const auto& vb = alg.pim_basis(beta.target());
  for (size_t j = 0; j < vb.size(); ++j) {
    auto w = monomial_image(alg, beta, vb[j]);
    if (!w || im_x.count(*w)) continue;
    size_t c = dom.coord_of(0, *w);
    if (hit[c]) throw Error("homotopy_hprime: splitting ambiguous at " + w->str());
    hit[c] = true;
    m.set(j, c, 1);
  }
  return LinearMap{dom, cod, m};
}

bool check_splitting_pair(const Algebra& alg, const Word& x, const Word& y) {
  if (y.target() != x.source())
    throw Error("check_splitting_pair: maps are not consecutive");
  Mat lx = left_mult_matrix(alg, x);
  Mat ly = left_mult_matrix(alg, y);
  Mat hx = homotopy_hx(alg, x).m;
  Mat hy = homotopy_hx(alg, y).m;
  Mat sum = lx.mul(hx).add(hy.mul(ly));
  return sum == Mat::identity(sum.rows(), alg.field());
}

bool check_square_homotopy(const Algebra& alg, const HomotopySquare& sq) {
  if (sq.x.source() != sq.beta.source() || sq.y.target() != sq.alpha.target() ||
      sq.alpha.source() != sq.x.target() || sq.y.source() != sq.beta.target())
    throw Error("check_square_homotopy: square " + sq.name + " has mismatched corners");
  Mat lhs = left_mult_matrix(alg, sq.alpha).mul(homotopy_hx(alg, sq.y).m);
  Mat rhs = homotopy_hx(alg, sq.x).m.mul(left_mult_matrix(alg, sq.beta));
  return lhs == rhs;
}

bool check_hprime_identities(const Algebra& alg, const HomotopySquare& sq) {
  LinearMap hp = homotopy_hprime(alg, sq.beta, sq.x);
  Mat lx = left_mult_matrix(alg, sq.x);
  Mat lb = left_mult_matrix(alg, sq.beta);
  if (!hp.m.mul(lx).is_zero()) return false;
  // beta h' + x h_x projects exactly onto im(x) + im(beta)
  Mat proj = lb.mul(hp.m).add(lx.mul(homotopy_hx(alg, sq.x).m));
  std::set<Word> image;
  for (const Word& u : alg.pim_basis(sq.x.target()))
    if (auto w = monomial_image(alg, sq.x, u)) image.insert(*w);
  for (const Word& u : alg.pim_basis(sq.beta.target()))
    if (auto w = monomial_image(alg, sq.beta, u)) image.insert(*w);
  FreeModule q = FreeModule::pim(alg, sq.x.source());
  Mat want(q.dim(), q.dim(), alg.field());
  for (size_t c = 0; c < q.dim(); ++c)
    if (image.count(q.coord_word(c).second)) want.set(c, c, 1);
  return proj == want;
}

std::vector<HomotopyCheck> verify_contracting_homotopy(const Resolution& res,
                                                       const ContractingHomotopy& h) {
  if (h.maps.empty()) throw Error("verify_contracting_homotopy: no homotopy maps given");
  size_t levels = std::min(res.top(), h.maps.size());
  for (size_t n = 0; n < levels; ++n) {
    if (!h.maps[n].domain.same_summands(res.term(n)) ||
        !h.maps[n].codomain.same_summands(res.term(n + 1)))
      throw Error("verify_contracting_homotopy: h_" + std::to_string(n) +
                  " does not match the terms");
  }
  std::vector<HomotopyCheck> out;
  for (size_t n = 0; n < levels; ++n) {
    Mat sum = res.d(n + 1).to_matrix().mul(h.maps[n].m);
    if (n == 0) {
      // the missing term is the projection onto the tops of the summands
      const FreeModule& t0 = res.term(0);
      for (size_t c = 0; c < t0.dim(); ++c)
        if (t0.coord_word(c).second.length() == 0) sum.set(c, c, (sum.at(c, c) + 1) % res.algebra().field());
      out.push_back({n, sum == Mat::identity(t0.dim(), res.algebra().field())});
    } else {
      sum = sum.add(h.maps[n - 1].m.mul(res.d(n).to_matrix()));
      out.push_back({n, sum == Mat::identity(res.term(n).dim(), res.algebra().field())});
    }
  }
  return out;
}

}  // namespace extalg
