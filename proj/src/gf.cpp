#include "extalg/gf.hpp"

#include <algorithm>

namespace extalg {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t gf_inv(uint32_t a, uint32_t p) {
  a %= p;
  if (a == 0) throw Error("gf_inv: zero has no inverse");
  // extended euclid on (a, p)
  int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(s0 -= q * s1, s1);
  }
  int64_t s = s0 % p;
  if (s < 0) s += p;
  return static_cast<uint32_t>(s);
}

Mat::Mat(size_t rows, size_t cols, uint32_t p) : rows_(rows), cols_(cols), p_(p) {
  if (!is_prime_u32(p) || p >= (1u << 16))
    throw Error("Mat: field order must be a prime below 2^16");
  data_.assign(rows * cols, 0);
}

Mat Mat::identity(size_t n, uint32_t p) {
  Mat m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<uint32_t>>& rows, size_t cols, uint32_t p) {
  Mat m(rows.size(), cols, p);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("Mat::from_rows: ragged rows");
    for (size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<uint32_t> Mat::row(size_t i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

Mat Mat::mul(const Mat& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw Error("Mat::mul: shape/field mismatch");
  Mat out(rows_, other.cols_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t a = at(i, k);
      if (!a) continue;
      for (size_t j = 0; j < other.cols_; ++j)
        out.data_[i * other.cols_ + j] =
            (out.data_[i * other.cols_ + j] + a * other.at(k, j)) % p_;
    }
  return out;
}

Mat Mat::add(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
    throw Error("Mat::add: shape/field mismatch");
  Mat out(rows_, cols_, p_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = (data_[i] + other.data_[i]) % p_;
  return out;
}

Mat Mat::scale(uint32_t c) const {
  Mat out(rows_, cols_, p_);
  uint64_t cc = c % p_;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = uint32_t((data_[i] * cc) % p_);
  return out;
}

std::vector<uint32_t> Mat::apply(const std::vector<uint32_t>& v) const {
  if (v.size() != cols_) throw Error("Mat::apply: length mismatch");
  std::vector<uint32_t> out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < cols_; ++j) acc += uint64_t(at(i, j)) * v[j];
    out[i] = acc % p_;
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && p_ == other.p_ && data_ == other.data_;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint32_t x) { return x == 0; });
}

Mat Mat::rref(std::vector<size_t>* pivots) const {
  Mat m = *this;
  if (pivots) pivots->clear();
  size_t r = 0;
  for (size_t col = 0; col < cols_ && r < rows_; ++col) {
    size_t sel = r;
    while (sel < rows_ && m.at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (size_t j = 0; j < cols_; ++j) {
        uint32_t t = m.at(r, j);
        m.set(r, j, m.at(sel, j));
        m.set(sel, j, t);
      }
    uint32_t inv = gf_inv(m.at(r, col), p_);
    for (size_t j = col; j < cols_; ++j) m.set(r, j, uint32_t(uint64_t(m.at(r, j)) * inv % p_));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, col);
      if (!f) continue;
      for (size_t j = col; j < cols_; ++j) {
        uint64_t v = m.at(i, j) + uint64_t(p_ - f) * m.at(r, j);
        m.set(i, j, uint32_t(v % p_));
      }
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return m;
}

size_t Mat::rank() const {
  std::vector<size_t> piv;
  rref(&piv);
  return piv.size();
}

Mat Mat::null_space() const {
  std::vector<size_t> piv;
  Mat r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols_; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat out(free_cols.size(), cols_, p_);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t f = free_cols[k];
    out.set(k, f, 1);
    for (size_t i = 0; i < piv.size(); ++i) {
      uint32_t v = r.at(i, f);
      if (v) out.set(k, piv[i], p_ - v);
    }
  }
  return out;
}

std::optional<std::vector<uint32_t>> Mat::solve_any(const std::vector<uint32_t>& b) const {
  if (b.size() != rows_) throw Error("Mat::solve_any: length mismatch");
  Mat aug(rows_, cols_ + 1, p_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  std::vector<size_t> piv;
  Mat r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<uint32_t> x(cols_, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, cols_);
  return x;
}

std::optional<std::vector<uint32_t>> Mat::solve_lex_min(const std::vector<uint32_t>& b,
                                                        bool reverse_priority) const {
  auto x0 = solve_any(b);
  if (!x0) return std::nullopt;
  Mat ns = null_space();
  if (ns.rows() == 0) return x0;
  // view coordinates in priority order, echelonize the null space there,
  // then zero out x at each pivot in turn; entries before the next pivot
  // are fixed once earlier multipliers are chosen, so greedy is optimal
  auto pc = [&](size_t j) { return reverse_priority ? cols_ - 1 - j : j; };
  Mat nsp(ns.rows(), cols_, p_);
  for (size_t i = 0; i < ns.rows(); ++i)
    for (size_t j = 0; j < cols_; ++j) nsp.set(i, j, ns.at(i, pc(j)));
  std::vector<size_t> piv;
  Mat r = nsp.rref(&piv);
  std::vector<uint32_t> x = *x0;
  for (size_t i = 0; i < piv.size(); ++i) {
    uint32_t c = x[pc(piv[i])];
    if (!c) continue;
    for (size_t j = 0; j < cols_; ++j)
      x[pc(j)] = uint32_t((x[pc(j)] + uint64_t(p_ - c) * r.at(i, j)) % p_);
  }
  return x;
}

Subspace::Subspace(size_t ambient, uint32_t p) : ambient_(ambient), p_(p) {
  if (!is_prime_u32(p) || p >= (1u << 16))
    throw Error("Subspace: field order must be a prime below 2^16");
  words_ = (ambient + 63) / 64;
}

std::vector<uint64_t> Subspace::pack(const std::vector<uint32_t>& v) const {
  std::vector<uint64_t> w(words_, 0);
  for (size_t j = 0; j < ambient_; ++j)
    if (v[j] & 1) w[j / 64] |= uint64_t(1) << (j % 64);
  return w;
}

std::vector<uint32_t> Subspace::unpack(const std::vector<uint64_t>& w) const {
  std::vector<uint32_t> v(ambient_, 0);
  for (size_t j = 0; j < ambient_; ++j) v[j] = (w[j / 64] >> (j % 64)) & 1;
  return v;
}

std::vector<uint32_t> Subspace::reduce(const std::vector<uint32_t>& v) const {
  if (v.size() != ambient_) throw Error("Subspace: length mismatch");
  if (p_ == 2) {
    auto w = pack(v);
    for (size_t k = 0; k < bit_rows_.size(); ++k) {
      size_t pvt = pivots_[k];
      if ((w[pvt / 64] >> (pvt % 64)) & 1)
        for (size_t t = 0; t < words_; ++t) w[t] ^= bit_rows_[k][t];
    }
    return unpack(w);
  }
  std::vector<uint32_t> w = v;
  for (auto& e : w) e %= p_;
  for (size_t k = 0; k < gen_rows_.size(); ++k) {
    uint32_t c = w[pivots_[k]];
    if (!c) continue;
    for (size_t j = 0; j < ambient_; ++j)
      w[j] = uint32_t((w[j] + uint64_t(p_ - c) * gen_rows_[k][j]) % p_);
  }
  return w;
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::insert(const std::vector<uint32_t>& v) {
  auto r = reduce(v);
  size_t lead = ambient_;
  for (size_t j = 0; j < ambient_; ++j)
    if (r[j]) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;
  if (p_ != 2) {
    uint32_t inv = gf_inv(r[lead], p_);
    for (auto& e : r) e = uint32_t(uint64_t(e) * inv % p_);
  }
  size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  if (p_ == 2) {
    auto w = pack(r);
    bit_rows_.insert(bit_rows_.begin() + pos, w);
    for (size_t k = 0; k < bit_rows_.size(); ++k) {
      if (k == pos) continue;
      if ((bit_rows_[k][lead / 64] >> (lead % 64)) & 1)
        for (size_t t = 0; t < words_; ++t) bit_rows_[k][t] ^= w[t];
    }
  } else {
    gen_rows_.insert(gen_rows_.begin() + pos, r);
    for (size_t k = 0; k < gen_rows_.size(); ++k) {
      if (k == pos) continue;
      uint32_t c = gen_rows_[k][lead];
      if (!c) continue;
      for (size_t j = 0; j < ambient_; ++j)
        gen_rows_[k][j] = uint32_t((gen_rows_[k][j] + uint64_t(p_ - c) * r[j]) % p_);
    }
  }
  return true;
}

std::vector<uint32_t> Subspace::basis_row(size_t k) const {
  if (k >= pivots_.size()) throw Error("Subspace::basis_row: out of range");
  return p_ == 2 ? unpack(bit_rows_[k]) : gen_rows_[k];
}

}  // namespace extalg
