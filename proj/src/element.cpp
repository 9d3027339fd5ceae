#include "extalg/element.hpp"

#include <cctype>

namespace extalg {

Element::Element(const Quiver& q, uint32_t p) : q_(&q), p_(p) {
  if (p < 2 || !is_prime_u32(p)) throw Error("element: field characteristic must be prime");
}

Element Element::from_word(const Word& w, uint32_t p, uint32_t coeff) {
  if (!w.quiver()) throw Error("element: word has no quiver");
  Element e(*w.quiver(), p);
  e.add_term(w, coeff);
  return e;
}

int Element::source() const {
  if (is_zero()) throw Error("element: zero element has no source");
  return terms_.begin()->first.source();
}

int Element::target() const {
  if (is_zero()) throw Error("element: zero element has no target");
  return terms_.begin()->first.target();
}

uint32_t Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Word& w, uint32_t c) {
  c %= p_;
  if (c == 0) return;
  if (!is_zero() && (w.source() != source() || w.target() != target()))
    throw Error("element: mixed endpoints (" + w.str() + " vs " + terms_.begin()->first.str() +
                ")");
  auto [it, fresh] = terms_.try_emplace(w, 0);
  it->second = (it->second + c) % p_;
  if (it->second == 0) terms_.erase(it);
}

void Element::check_compatible(const Element& o) const {
  if (!q_ || !o.q_) throw Error("element: uninitialized operand");
  if (q_ != o.q_ || p_ != o.p_) throw Error("element: operands from different algebras");
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element Element::operator-(const Element& o) const {
  return *this + o.scale(o.p_ - 1);
}

Element Element::scale(uint32_t c) const {
  Element r(*q_, p_);
  c %= p_;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

Element Element::concat(const Element& o) const {
  check_compatible(o);
  Element r(*q_, p_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1.concat(w2), c1 * c2);
  return r;
}

Element Element::concat(const Word& w) const {
  return concat(Element::from_word(w, p_));
}

std::string Element::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += w.str();
  }
  return out;
}

Element parse_element(const std::string& text, const Quiver& q, uint32_t p) {
  Element e(q, p);
  size_t pos = 0;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t t = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, t - b + 1);
  };
  while (pos <= text.size()) {
    size_t plus = text.find('+', pos);
    std::string term =
        trim(text.substr(pos, plus == std::string::npos ? plus : plus - pos));
    if (term.empty()) throw Error("parse_element: empty term in '" + text + "'");
    if (term == "0") {
      if (plus != std::string::npos || pos != 0)
        throw Error("parse_element: '0' cannot appear in a sum");
      return e;
    }
    uint32_t coeff = 1;
    size_t star = term.find('*');
    std::string head = star == std::string::npos ? term : term.substr(0, star);
    bool numeric = !head.empty();
    for (char ch : head)
      if (!std::isdigit(static_cast<unsigned char>(ch))) numeric = false;
    if (numeric) {
      coeff = uint32_t(std::stoul(head) % p);
      if (star == std::string::npos)
        throw Error("parse_element: bare scalar '" + term + "' needs a word factor");
      term = trim(term.substr(star + 1));
    }
    e += Element::from_word(parse_word(term, q), p, coeff);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return e;
}

}  // namespace extalg
