#pragma once

#include <map>

#include "extalg/quiver.hpp"

namespace extalg {

// GF(p)-linear combination of words; all terms share source and target,
// or the element is zero (a zero element carries no endpoints)
class Element {
 public:
  Element() = default;
  Element(const Quiver& q, uint32_t p);  // zero
  static Element from_word(const Word& w, uint32_t p, uint32_t coeff = 1);

  uint32_t field() const { return p_; }
  const Quiver* quiver() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  int source() const;  // error on the zero element
  int target() const;
  const std::map<Word, uint32_t>& terms() const { return terms_; }
  uint32_t coeff(const Word& w) const;

  Element operator+(const Element& o) const;
  Element& operator+=(const Element& o);
  Element operator-(const Element& o) const;
  Element scale(uint32_t c) const;
  // bilinear concatenation product; zero absorbs
  Element concat(const Element& o) const;
  Element concat(const Word& w) const;

  bool operator==(const Element& o) const { return p_ == o.p_ && terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const Quiver* q_ = nullptr;
  uint32_t p_ = 0;
  std::map<Word, uint32_t> terms_;
  void add_term(const Word& w, uint32_t c);
  void check_compatible(const Element& o) const;
};

// grammar: `0`, or `+`-separated terms, each an optional `k*` scalar prefix
// followed by word syntax
Element parse_element(const std::string& text, const Quiver& q, uint32_t p);

}  // namespace extalg
