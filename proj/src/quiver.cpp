#include "extalg/quiver.hpp"

#include <algorithm>

namespace extalg {

void Quiver::check_fresh_label(const std::string& label) const {
  if (label.empty()) throw Error("quiver: empty label");
  if (vertex_index(label) >= 0 || arrow_index(label) >= 0)
    throw Error("quiver: duplicate label '" + label + "'");
}

int Quiver::add_vertex(const std::string& label) {
  check_fresh_label(label);
  vertices_.push_back(label);
  return int(vertices_.size()) - 1;
}

int Quiver::add_arrow(const std::string& label, const std::string& src, const std::string& tgt,
                      int degree) {
  check_fresh_label(label);
  int s = vertex_index(src), t = vertex_index(tgt);
  if (s < 0) throw Error("quiver: unknown vertex '" + src + "'");
  if (t < 0) throw Error("quiver: unknown vertex '" + tgt + "'");
  if (degree < 1) throw Error("quiver: arrow degree must be positive");
  arrows_.push_back({label, s, t, degree});
  return int(arrows_.size()) - 1;
}

int Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return int(i);
  return -1;
}

int Quiver::arrow_index(const std::string& label) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return int(i);
  return -1;
}

Word Word::idempotent(const Quiver& q, int vertex) {
  if (vertex < 0 || size_t(vertex) >= q.num_vertices()) throw Error("word: bad vertex index");
  Word w;
  w.q_ = &q;
  w.base_ = vertex;
  return w;
}

Word Word::arrow_word(const Quiver& q, int arrow) {
  return path(q, {arrow});
}

Word Word::path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error("word: path needs at least one arrow");
  Word w;
  w.q_ = &q;
  w.arrows_ = arrows;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] < 0 || size_t(arrows[i]) >= q.num_arrows())
      throw Error("word: bad arrow index");
    if (i > 0 && q.arrow(arrows[i - 1]).tgt != q.arrow(arrows[i]).src)
      throw Error("word: arrows '" + q.arrow(arrows[i - 1]).label + "' and '" +
                  q.arrow(arrows[i]).label + "' do not compose");
    w.degree_ += q.arrow(arrows[i]).degree;
  }
  w.base_ = q.arrow(arrows[0]).src;
  return w;
}

Word Word::concat(const Word& other) const {
  if (q_ != other.q_) throw Error("word: concat across quivers");
  if (target() != other.source())
    throw Error("word: cannot compose, left ends at " + q_->vertex_label(target()) +
                " but right starts at " + q_->vertex_label(other.source()));
  if (arrows_.empty()) return other;
  if (other.arrows_.empty()) return *this;
  std::vector<int> joined = arrows_;
  joined.insert(joined.end(), other.arrows_.begin(), other.arrows_.end());
  return path(*q_, joined);
}

Word Word::subword(size_t pos, size_t len) const {
  if (pos + len > arrows_.size()) throw Error("word: subword out of range");
  if (len == 0) {
    int v = pos == arrows_.size() ? target() : q_->arrow(arrows_[pos]).src;
    return idempotent(*q_, v);
  }
  return path(*q_, {arrows_.begin() + pos, arrows_.begin() + pos + len});
}

size_t Word::find(const Word& w, size_t from) const {
  if (w.arrows_.empty()) throw Error("word: find of an idempotent");
  if (w.arrows_.size() > arrows_.size()) return npos;
  for (size_t i = from; i + w.arrows_.size() <= arrows_.size(); ++i)
    if (std::equal(w.arrows_.begin(), w.arrows_.end(), arrows_.begin() + i)) return i;
  return npos;
}

std::string Word::str() const {
  if (arrows_.empty()) return "1_" + q_->vertex_label(base_);
  std::string out;
  for (size_t i = 0; i < arrows_.size();) {
    size_t j = i;
    while (j < arrows_.size() && arrows_[j] == arrows_[i]) ++j;
    if (!out.empty()) out += "*";
    out += q_->arrow(arrows_[i]).label;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word parse_word(const std::string& text, const Quiver& q) {
  if (text.empty()) throw Error("parse_word: empty text");
  if (text.rfind("1_", 0) == 0) {
    std::string v = text.substr(2);
    int idx = q.vertex_index(v);
    if (idx < 0) throw Error("parse_word: unknown vertex '" + v + "'");
    return Word::idempotent(q, idx);
  }
  std::vector<int> arrows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    if (tok.empty()) throw Error("parse_word: empty factor in '" + text + "'");
    size_t caret = tok.find('^');
    std::string label = tok.substr(0, caret);
    long power = 1;
    if (caret != std::string::npos) {
      try {
        power = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error("parse_word: bad exponent in '" + tok + "'");
      }
      if (power < 1) throw Error("parse_word: bad exponent in '" + tok + "'");
    }
    int a = q.arrow_index(label);
    if (a < 0) throw Error("parse_word: unknown arrow " + label);
    for (long k = 0; k < power; ++k) arrows.push_back(a);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Word::path(q, arrows);
}

static std::vector<uint32_t> chain_precedence(const Quiver& q,
                                              const std::vector<std::string>& chain,
                                              bool greatest_first) {
  if (chain.size() != q.num_arrows())
    throw Error("order: precedence chain must list every arrow exactly once");
  std::vector<uint32_t> prec(q.num_arrows(), 0);
  std::vector<bool> seen(q.num_arrows(), false);
  for (size_t i = 0; i < chain.size(); ++i) {
    int a = q.arrow_index(chain[i]);
    if (a < 0) throw Error("order: unknown arrow '" + chain[i] + "'");
    if (seen[a]) throw Error("order: arrow '" + chain[i] + "' listed twice");
    seen[a] = true;
    prec[a] = uint32_t(greatest_first ? chain.size() - 1 - i : i);
  }
  return prec;
}

MonomialOrder MonomialOrder::short_major_rlex(const Quiver& q,
                                              const std::vector<std::string>& chain) {
  MonomialOrder o;
  o.kind_ = Kind::ShortMajorRlex;
  o.prec_ = chain_precedence(q, chain, true);
  return o;
}

MonomialOrder MonomialOrder::degree_then_llex(const Quiver& q,
                                              const std::vector<std::string>& chain) {
  MonomialOrder o;
  o.kind_ = Kind::DegreeThenLlex;
  o.prec_ = chain_precedence(q, chain, false);
  return o;
}

int MonomialOrder::chain_position(int arrow) const {
  return int(prec_.size()) - 1 - int(prec_.at(arrow));
}

// primary comparison key; the scan below settles ties
int MonomialOrder::primary_key(const Word& w) const {
  // short-major-rlex: fewer arrows = greater, so negate length
  return kind_ == Kind::ShortMajorRlex ? -int(w.length()) : w.degree();
}

int MonomialOrder::cmp_positions(const Word& a, const Word& b) const {
  const auto& x = a.arrows();
  const auto& y = b.arrows();
  size_t n = std::min(x.size(), y.size());
  for (size_t k = 0; k < n; ++k) {
    size_t i = kind_ == Kind::ShortMajorRlex ? x.size() - 1 - k : k;
    size_t j = kind_ == Kind::ShortMajorRlex ? y.size() - 1 - k : k;
    if (prec_[x[i]] != prec_[y[j]]) return prec_[x[i]] < prec_[y[j]] ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.source() != b.source() || a.target() != b.target())
    throw Error("order: compared words must share source and target");
  if (primary_key(a) != primary_key(b)) return primary_key(a) < primary_key(b) ? -1 : 1;
  return cmp_positions(a, b);
}

int MonomialOrder::cmp_total(const Word& a, const Word& b) const {
  if (primary_key(a) != primary_key(b)) return primary_key(a) < primary_key(b) ? -1 : 1;
  if (int c = cmp_positions(a, b)) return c;
  if (a.source() != b.source()) return a.source() < b.source() ? -1 : 1;
  return 0;
}

bool listing_less(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& x = a.arrows();
  const auto& y = b.arrows();
  for (size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) return x[k] < y[k];
  return a.source() < b.source();
}

}  // namespace extalg
