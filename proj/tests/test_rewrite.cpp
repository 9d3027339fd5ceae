#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "extalg/m11.hpp"
#include "extalg/rewrite.hpp"

using namespace extalg;

namespace {

// GF(3)[x,y]/(yx - xy, x^3, y^3), dimension 9
std::unique_ptr<Algebra> make_poly2() {
  auto q = std::make_unique<Quiver>();
  q->add_vertex("v");
  q->add_arrow("x", "v", "v");
  q->add_arrow("y", "v", "v");
  MonomialOrder ord = MonomialOrder::short_major_rlex(*q, {"x", "y"});
  std::vector<Element> rels = {
      parse_element("y*x + 2*x*y", *q, 3),
      parse_element("x^3", *q, 3),
      parse_element("y^3", *q, 3),
  };
  return std::make_unique<Algebra>(std::move(q), 3, ord, std::move(rels), "poly2");
}

// linear A3 quiver modulo paths of length two, dimension 5
std::unique_ptr<Algebra> make_a3() {
  auto q = std::make_unique<Quiver>();
  q->add_vertex("1");
  q->add_vertex("2");
  q->add_vertex("3");
  q->add_arrow("u", "1", "2");
  q->add_arrow("w", "2", "3");
  MonomialOrder ord = MonomialOrder::short_major_rlex(*q, {"u", "w"});
  std::vector<Element> rels = {parse_element("u*w", *q, 2)};
  return std::make_unique<Algebra>(std::move(q), 2, ord, std::move(rels), "a3");
}

std::vector<Word> all_words_up_to(const Quiver& q, int max_degree) {
  std::vector<Word> out;
  for (size_t v = 0; v < q.num_vertices(); ++v) out.push_back(Word::idempotent(q, int(v)));
  size_t head = 0;
  while (head < out.size()) {
    Word w = out[head++];
    for (size_t a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(int(a)).src != w.target()) continue;
      Word ext = w.concat(Word::arrow_word(q, int(a)));
      if (ext.degree() <= max_degree) out.push_back(ext);
    }
  }
  return out;
}

// membership in the two-sided relation ideal, by spanning all bounded
// sandwiches u * rel * v; `cap` must leave room above the degrees tested
struct IdealSpan {
  std::vector<Word> words;
  std::map<Word, size_t> index;
  Subspace span;

  IdealSpan(const Algebra& alg, int cap) : span(0, alg.field()) {
    const Quiver& q = alg.quiver();
    words = all_words_up_to(q, cap);
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    span = Subspace(words.size(), alg.field());
    for (const Element& rel : alg.relations()) {
      int rel_deg = 0;
      for (const auto& [w, c] : rel.terms()) rel_deg = std::max(rel_deg, w.degree());
      for (const Word& u : words) {
        if (u.target() != rel.source()) continue;
        for (const Word& v : words) {
          if (v.source() != rel.target()) continue;
          if (u.degree() + rel_deg + v.degree() > cap) continue;
          Element g = Element::from_word(u, alg.field()).concat(rel).concat(v);
          span.insert(coords(g));
        }
      }
    }
  }

  std::vector<uint32_t> coords(const Element& e) const {
    std::vector<uint32_t> vec(words.size(), 0);
    for (const auto& [w, c] : e.terms()) vec[index.at(w)] = c;
    return vec;
  }

  bool contains(const Element& e) const { return span.contains(coords(e)); }
};

Element random_element(std::mt19937& rng, const std::vector<Word>& words, uint32_t p,
                       int terms) {
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<uint32_t> coin(1, p - 1);
  // all terms share the source and target of the first pick
  Word first = words[pick(rng)];
  Element e = Element::from_word(first, p, coin(rng));
  for (int t = 1; t < terms; ++t) {
    const Word& w = words[pick(rng)];
    if (w.source() != first.source() || w.target() != first.target()) continue;
    e += Element::from_word(w, p, coin(rng));
  }
  return e;
}

}  // namespace

TEST_CASE("orientation picks the greater side") {
  auto alg = make_poly2();
  const Quiver& q = alg->quiver();
  RewriteRule r = orient(parse_element("y*x + 2*x*y", q, 3), alg->system().order());
  CHECK(r.lhs == parse_word("y*x", q));
  CHECK(r.rhs == parse_element("x*y", q, 3));
  // the zero element carries no leading word to orient
  CHECK_THROWS_AS(orient(Element(q, 3), alg->system().order()), Error);
}

TEST_CASE("poly2 basis and normal forms") {
  auto alg = make_poly2();
  const Quiver& q = alg->quiver();
  CHECK(alg->dimension() == 9);
  CHECK(alg->basis().count_by_degree ==
        (std::map<int, size_t>{{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}}));
  CHECK(alg->nf(parse_element("y*x", q, 3)) == parse_element("x*y", q, 3));
  CHECK(alg->nf(parse_element("x^3", q, 3)).is_zero());
  // (x+y)^3 = 3 x^2 y + 3 x y^2 = 0 over GF(3)
  Element xy = parse_element("x + y", q, 3);
  CHECK(alg->nf(xy.concat(xy).concat(xy)).is_zero());
}

TEST_CASE("single-step reductions all reach the same normal form") {
  auto alg = make_poly2();
  const Quiver& q = alg->quiver();
  const RewriteSystem& sys = alg->system();
  for (const Word& w : all_words_up_to(q, 6)) {
    Element full = sys.normal_form(w);
    for (const RewriteRule& r : sys.rules()) {
      for (size_t pos = w.find(r.lhs); pos != Word::npos; pos = w.find(r.lhs, pos + 1)) {
        Element stepped = Element::from_word(w.subword(0, pos), 3)
                              .concat(r.rhs)
                              .concat(Element::from_word(
                                  w.subword(pos + r.lhs.length(), w.length() - pos - r.lhs.length()),
                                  3));
        CHECK(sys.normal_form(stepped) == full);
      }
    }
  }
}

TEST_CASE("normal form is idempotent, linear and multiplicative") {
  auto alg = m11::make_algebra();
  const Quiver& q = alg->quiver();
  auto words = all_words_up_to(q, 5);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Element a = random_element(rng, words, 2, 3);
    Element b = random_element(rng, words, 2, 3);
    CHECK(alg->nf(alg->nf(a)) == alg->nf(a));
    if (a.is_zero() || b.is_zero()) continue;
    if (a.source() == b.source() && a.target() == b.target())
      CHECK(alg->nf(a + b) == alg->nf(a) + alg->nf(b));
    if (a.target() == b.source())
      CHECK(alg->nf(a.concat(b)) == alg->nf(alg->nf(a).concat(alg->nf(b))));
  }
}

TEST_CASE("reducibility and redex search") {
  auto alg = make_poly2();
  const Quiver& q = alg->quiver();
  const RewriteSystem& sys = alg->system();
  CHECK(sys.is_reducible(parse_word("x*y*x", q)));
  CHECK(!sys.is_reducible(parse_word("x*y^2", q)));
  CHECK(sys.find_redex(parse_word("x^2*y", q)) == std::nullopt);
  auto hit = sys.find_redex(parse_word("x^2*y*x", q));
  REQUIRE(hit.has_value());
}

TEST_CASE("overlaps contain both rules") {
  auto alg = make_poly2();
  auto os = overlaps(alg->system());
  CHECK(!os.empty());
  for (const Overlap& o : os) {
    const auto& rules = alg->system().rules();
    CHECK(o.word.find(rules[o.rule1].lhs, o.pos1) == o.pos1);
    CHECK(o.word.find(rules[o.rule2].lhs, o.pos2) == o.pos2);
  }
}

TEST_CASE("poly2 and a3 are groebner") {
  auto alg = make_poly2();
  CHECK(is_groebner(alg->system()));
  for (const Overlap& o : overlaps(alg->system()))
    CHECK(s_polynomial_reduces(alg->system(), o));
  auto a3 = make_a3();
  CHECK(a3->dimension() == 5);
  CHECK(is_groebner(a3->system()));
}

TEST_CASE("buchberger completion closes a non-confluent system") {
  // x^2 -> x*y alone is not confluent: the overlap x^3 exposes x*y*x vs x*y^2
  auto q = std::make_unique<Quiver>();
  q->add_vertex("v");
  q->add_arrow("x", "v", "v");
  q->add_arrow("y", "v", "v");
  MonomialOrder ord = MonomialOrder::short_major_rlex(*q, {"x", "y"});
  std::vector<RewriteRule> rules = {orient(parse_element("x^2 + x*y", *q, 2), ord)};
  RewriteSystem sys(*q, ord, 2, rules);
  CHECK(!is_groebner(sys));
  RewriteSystem done = buchberger_complete(sys, 8);
  CHECK(done.rules().size() > sys.rules().size());
  for (const Overlap& o : overlaps(done))
    if (o.word.degree() <= 8) CHECK(s_polynomial_reduces(done, o));
}

TEST_CASE("relations_minimal flags a redundant relation") {
  auto alg = make_poly2();
  const Quiver& q = alg->quiver();
  auto mr = relations_minimal(alg->system(), 6);
  CHECK(mr.minimal);
  // x^4 lies in the ideal generated by the rest
  MonomialOrder ord = MonomialOrder::short_major_rlex(q, {"x", "y"});
  std::vector<RewriteRule> rules;
  for (const Element& rel : alg->relations()) rules.push_back(orient(rel, ord));
  rules.push_back(orient(parse_element("x^4", q, 3), ord));
  RewriteSystem padded(q, ord, 3, rules);
  auto mr2 = relations_minimal(padded, 6);
  CHECK(!mr2.minimal);
  CHECK(mr2.witness.find("x^4") != std::string::npos);
}

TEST_CASE("ideal membership agrees with the spanning oracle") {
  std::mt19937 rng(29);
  auto check_algebra = [&](const Algebra& alg, int sample_degree, int cap, int n_random) {
    IdealSpan oracle(alg, cap);
    const Quiver& q = alg.quiver();
    auto small = all_words_up_to(q, sample_degree);
    // random elements: both directions of the equivalence
    for (int t = 0; t < n_random; ++t) {
      Element e = random_element(rng, small, alg.field(), 3);
      CHECK(alg.nf(e).is_zero() == oracle.contains(e));
    }
    // known members: sandwiched relations
    for (const Element& rel : alg.relations()) {
      for (const Word& u : small) {
        if (u.target() != rel.source() || u.degree() > 2) continue;
        Element g = Element::from_word(u, alg.field()).concat(rel);
        CHECK(alg.nf(g).is_zero());
        CHECK(oracle.contains(g));
      }
    }
    // known non-members: standard monomials are never in the ideal
    int seen = 0;
    for (const auto& w : alg.basis().words) {
      if (w.degree() > sample_degree || ++seen > 12) break;
      CHECK(!oracle.contains(Element::from_word(w, alg.field())));
    }
  };
  check_algebra(*make_poly2(), 3, 8, 30);
  check_algebra(*make_a3(), 2, 5, 10);
  check_algebra(*m11::make_algebra(), 3, 9, 20);
}

TEST_CASE("standard monomial tables") {
  auto alg = make_poly2();
  const auto& basis = alg->basis();
  CHECK(basis.dim() == 9);
  CHECK(basis.with_source(0).size() == 9);
  for (const Word& w : basis.words) CHECK(!alg->system().is_reducible(w));
}

TEST_CASE("infinite algebras refuse full enumeration but accept a bound") {
  auto mk_free = [] {
    auto q = std::make_unique<Quiver>();
    q->add_vertex("v");
    q->add_arrow("x", "v", "v");
    q->add_arrow("y", "v", "v");
    return q;
  };
  auto q1 = mk_free();
  MonomialOrder ord = MonomialOrder::short_major_rlex(*q1, {"x", "y"});
  CHECK_THROWS_AS(Algebra(std::move(q1), 2, ord, {}, "free"), Error);
  auto q2 = mk_free();
  Algebra bounded(std::move(q2), 2, ord, {}, "free", 3);
  CHECK(bounded.dimension() == 15);  // 1 + 2 + 4 + 8
}

TEST_CASE("m11 loads with dimension 22") {
  auto alg = m11::make_algebra();
  CHECK(alg->dimension() == 22);
  CHECK(alg->field() == 2);
  CHECK(is_groebner(alg->system()));
}
