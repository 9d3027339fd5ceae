#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "extalg/quiver.hpp"

using namespace extalg;

namespace {

Quiver two_loop() {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("x", "v", "v");
  q.add_arrow("y", "v", "v");
  return q;
}

Quiver a3_quiver() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("u", "1", "2");
  q.add_arrow("w", "2", "3");
  return q;
}

}  // namespace

TEST_CASE("vertices and arrows") {
  Quiver q = a3_quiver();
  CHECK(q.num_vertices() == 3);
  CHECK(q.num_arrows() == 2);
  CHECK(q.vertex_index("2") == 1);
  CHECK(q.vertex_index("nope") == -1);
  CHECK(q.arrow_index("w") == 1);
  CHECK(q.arrow(0).src == 0);
  CHECK(q.arrow(0).tgt == 1);
  CHECK(q.arrow(0).degree == 1);
  CHECK_THROWS_AS(q.add_vertex("1"), Error);
  CHECK_THROWS_AS(q.add_arrow("u", "1", "2"), Error);
  CHECK_THROWS_AS(q.add_arrow("z", "1", "missing"), Error);
}

TEST_CASE("idempotent words") {
  Quiver q = two_loop();
  Word e = Word::idempotent(q, 0);
  CHECK(e.length() == 0);
  CHECK(e.degree() == 0);
  CHECK(e.source() == 0);
  CHECK(e.target() == 0);
  CHECK(e.str() == "1_v");
}

TEST_CASE("concat tracks endpoints") {
  Quiver q = a3_quiver();
  Word u = Word::arrow_word(q, 0);
  Word w = Word::arrow_word(q, 1);
  Word uw = u.concat(w);
  CHECK(uw.source() == 0);
  CHECK(uw.target() == 2);
  CHECK(uw.length() == 2);
  CHECK(uw.str() == "u*w");
  CHECK_THROWS_AS(w.concat(u), Error);
  CHECK(Word::idempotent(q, 0).concat(u) == u);
}

TEST_CASE("str collapses runs, parse accepts both spellings") {
  Quiver q = two_loop();
  Word w = parse_word("x*x*x*y", q);
  CHECK(w.str() == "x^3*y");
  CHECK(parse_word("x^3*y", q) == w);
  CHECK(parse_word("1_v", q) == Word::idempotent(q, 0));
  CHECK(w.degree() == 4);
  CHECK_THROWS_AS(parse_word("x*q", q), Error);
  CHECK_THROWS_AS(parse_word("", q), Error);
}

TEST_CASE("parse rejects non-composable paths") {
  Quiver q = a3_quiver();
  CHECK_THROWS_AS(parse_word("u*u", q), Error);
  CHECK_THROWS_AS(parse_word("w*u", q), Error);
  CHECK(parse_word("u*w", q).str() == "u*w");
}

TEST_CASE("find and subword") {
  Quiver q = two_loop();
  Word w = parse_word("x*y*x*y*y", q);
  Word xy = parse_word("x*y", q);
  CHECK(w.find(xy) == 0);
  CHECK(w.find(xy, 1) == 2);
  CHECK(w.find(parse_word("y^3", q)) == Word::npos);
  CHECK(w.subword(2, 3).str() == "x*y^2");
  CHECK(w.subword(0, 0) == Word::idempotent(q, 0));
}

TEST_CASE("arrow degrees weight words") {
  Quiver q = two_loop();
  q.add_arrow("z", "v", "v", 4);
  Word w = parse_word("x*z*y", q);
  CHECK(w.length() == 3);
  CHECK(w.degree() == 6);
}

TEST_CASE("short-major rlex: fewer arrows means greater") {
  Quiver q = two_loop();
  MonomialOrder ord = MonomialOrder::short_major_rlex(q, {"x", "y"});
  CHECK(ord.kind() == MonomialOrder::Kind::ShortMajorRlex);
  Word x = parse_word("x", q);
  Word xy = parse_word("x*y", q);
  CHECK(ord.less(xy, x));       // longer is smaller
  CHECK(!ord.less(x, xy));
  CHECK(ord.compare(x, x) == 0);
  // equal length: decided right-to-left by the chain, x > y
  CHECK(ord.less(parse_word("x*y", q), parse_word("y*x", q)));
  CHECK(ord.less(parse_word("y*y", q), parse_word("y*x", q)));
  // idempotent beats every positive word
  CHECK(ord.less(x, Word::idempotent(q, 0)));
}

TEST_CASE("degree-then-llex respects arrow degrees") {
  Quiver q = two_loop();
  q.add_arrow("z", "v", "v", 4);
  MonomialOrder ord = MonomialOrder::degree_then_llex(q, {"x", "y", "z"});
  CHECK(ord.kind() == MonomialOrder::Kind::DegreeThenLlex);
  // degree decides first: x^3 has degree 3, z has degree 4
  CHECK(ord.less(parse_word("x^3", q), parse_word("z", q)));
  // same degree: left-to-right by the chain, x < y
  CHECK(ord.less(parse_word("x*y", q), parse_word("y*x", q)));
  CHECK(ord.less(parse_word("x*z", q), parse_word("z*x", q)));
}

TEST_CASE("chain positions") {
  Quiver q = two_loop();
  MonomialOrder ord = MonomialOrder::short_major_rlex(q, {"x", "y"});
  CHECK(ord.chain_size() == 2);
  CHECK(ord.chain_position(q.arrow_index("x")) == 0);  // greatest first
  CHECK(ord.chain_position(q.arrow_index("y")) == 1);
}

TEST_CASE("cmp_total orders words with different endpoints") {
  Quiver q = a3_quiver();
  MonomialOrder ord = MonomialOrder::short_major_rlex(q, {"u", "w"});
  Word a = parse_word("u", q);
  Word b = parse_word("w", q);
  CHECK(ord.cmp_total(a, b) != 0);
  CHECK(ord.cmp_total(a, b) == -ord.cmp_total(b, a));
  CHECK(ord.cmp_total(a, a) == 0);
}

TEST_CASE("listing order: degree, then length, then arrow indices") {
  Quiver q = two_loop();
  Word e = Word::idempotent(q, 0);
  Word x = parse_word("x", q);
  Word y = parse_word("y", q);
  Word xy = parse_word("x*y", q);
  Word yx = parse_word("y*x", q);
  CHECK(listing_less(e, x));
  CHECK(listing_less(x, y));
  CHECK(listing_less(y, xy));
  CHECK(listing_less(xy, yx));
  CHECK(!listing_less(yx, xy));
}
