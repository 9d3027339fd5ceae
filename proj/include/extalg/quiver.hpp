#pragma once

#include <string>
#include <vector>

#include "extalg/gf.hpp"

namespace extalg {

struct Arrow {
  std::string label;
  int src;
  int tgt;
  int degree;
};

// vertices and degree-weighted arrows; labels unique across both
class Quiver {
 public:
  int add_vertex(const std::string& label);
  int add_arrow(const std::string& label, const std::string& src, const std::string& tgt,
                int degree = 1);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_label(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  int vertex_index(const std::string& label) const;  // -1 if absent
  int arrow_index(const std::string& label) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  void check_fresh_label(const std::string& label) const;
};

// a path: either a vertex idempotent or a composable arrow sequence, read left to right
class Word {
 public:
  Word() = default;
  static Word idempotent(const Quiver& q, int vertex);
  static Word arrow_word(const Quiver& q, int arrow);
  static Word path(const Quiver& q, const std::vector<int>& arrows);

  const Quiver* quiver() const { return q_; }
  int source() const { return base_; }
  int target() const { return arrows_.empty() ? base_ : q_->arrow(arrows_.back()).tgt; }
  size_t length() const { return arrows_.size(); }
  int degree() const { return degree_; }
  const std::vector<int>& arrows() const { return arrows_; }

  Word concat(const Word& other) const;
  Word subword(size_t pos, size_t len) const;
  // position of the first occurrence of w at or after `from`, or npos
  size_t find(const Word& w, size_t from = 0) const;
  static constexpr size_t npos = size_t(-1);

  bool operator==(const Word& o) const { return base_ == o.base_ && arrows_ == o.arrows_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  // structural order for use as a map key; not the monomial order
  bool operator<(const Word& o) const {
    if (arrows_ != o.arrows_) return arrows_ < o.arrows_;
    return base_ < o.base_;
  }

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  int base_ = -1;  // source vertex
  std::vector<int> arrows_;
  int degree_ = 0;
};

Word parse_word(const std::string& text, const Quiver& q);

// total order on composable words; two named kinds
class MonomialOrder {
 public:
  enum class Kind { ShortMajorRlex, DegreeThenLlex };

  // chain lists arrow labels greatest-first ("a > b > ...")
  static MonomialOrder short_major_rlex(const Quiver& q, const std::vector<std::string>& chain);
  // chain lists arrow labels smallest-first ("alpha < beta < ...")
  static MonomialOrder degree_then_llex(const Quiver& q, const std::vector<std::string>& chain);

  Kind kind() const { return kind_; }
  // -1, 0, +1 for a < b, a == b, a > b; endpoints must match
  int compare(const Word& a, const Word& b) const;
  // same comparison logic extended to a deterministic total order on all words
  int cmp_total(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  // position of `arrow` in the precedence chain, greatest arrow first
  int chain_position(int arrow) const;
  size_t chain_size() const { return prec_.size(); }

 private:
  Kind kind_;
  std::vector<uint32_t> prec_;  // larger value = greater arrow
  int primary_key(const Word& w) const;
  int cmp_positions(const Word& a, const Word& b) const;
};

// listing order for standard-monomial tables: by degree then length,
// then position-lexicographically by arrow declaration index
bool listing_less(const Word& a, const Word& b);

}  // namespace extalg
