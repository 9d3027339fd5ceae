#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_prime_u32(uint32_t n);

// multiplicative inverse mod p (p prime, a != 0 mod p)
uint32_t gf_inv(uint32_t a, uint32_t p);

// dense matrix over GF(p)
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, uint32_t p);
  static Mat identity(size_t n, uint32_t p);
  static Mat from_rows(const std::vector<std::vector<uint32_t>>& rows, size_t cols, uint32_t p);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t p() const { return p_; }

  uint32_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  void set(size_t i, size_t j, uint32_t v) { data_[i * cols_ + j] = v % p_; }
  void add_at(size_t i, size_t j, uint32_t v) {
    auto& e = data_[i * cols_ + j];
    e = (e + v) % p_;
  }
  std::vector<uint32_t> row(size_t i) const;

  Mat mul(const Mat& other) const;
  Mat add(const Mat& other) const;
  Mat scale(uint32_t c) const;
  // matrix * column vector
  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;
  Mat transpose() const;
  bool operator==(const Mat& other) const;
  bool is_zero() const;

  size_t rank() const;
  // reduced row echelon form; pivot columns (one per nonzero row) in *pivots
  Mat rref(std::vector<size_t>* pivots = nullptr) const;
  // basis of the right null space, one vector per row
  Mat null_space() const;
  // some solution x of (*this) x = b, or nullopt
  std::optional<std::vector<uint32_t>> solve_any(const std::vector<uint32_t>& b) const;
  // the solution minimizing (x[0], x[1], ...) lexicographically
  // (coordinates compared as integers in [0,p)); reverse_priority
  // minimizes (x[n-1], ..., x[0]) instead
  std::optional<std::vector<uint32_t>> solve_lex_min(const std::vector<uint32_t>& b,
                                                     bool reverse_priority = false) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  uint32_t p_ = 2;
  std::vector<uint32_t> data_;
};

// row space maintained in reduced echelon form; packed bit rows when p == 2
class Subspace {
 public:
  Subspace(size_t ambient, uint32_t p);

  // returns true if v was independent of the current rows
  bool insert(const std::vector<uint32_t>& v);
  bool contains(const std::vector<uint32_t>& v) const;
  // residue of v after elimination by the stored rows
  std::vector<uint32_t> reduce(const std::vector<uint32_t>& v) const;

  size_t rank() const { return pivots_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<uint32_t> basis_row(size_t k) const;

 private:
  size_t ambient_;
  uint32_t p_;
  size_t words_;  // packed row length when p == 2
  std::vector<std::vector<uint64_t>> bit_rows_;
  std::vector<std::vector<uint32_t>> gen_rows_;
  std::vector<size_t> pivots_;  // strictly increasing

  std::vector<uint64_t> pack(const std::vector<uint32_t>& v) const;
  std::vector<uint32_t> unpack(const std::vector<uint64_t>& w) const;
};

}  // namespace extalg
