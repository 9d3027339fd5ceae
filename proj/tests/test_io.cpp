#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "extalg/io.hpp"

using namespace extalg;

namespace {

const char* a3_text = R"(# three vertices, two arrows, one zero relation
field 2
vertex 1 2 3
arrow u: 1 -> 2
arrow w: 2 -> 3
order short_major_rlex w > u
relation u*w = 0
)";

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing the line format") {
  auto alg = io::parse_algebra(a3_text, "a3");
  CHECK(alg->name() == "a3");
  CHECK(alg->field() == 2);
  CHECK(alg->dimension() == 5);
  CHECK(alg->quiver().num_arrows() == 2);
  CHECK(alg->nf(parse_element("u*w", alg->quiver(), 2)).is_zero());
}

TEST_CASE("parse errors carry line numbers") {
  auto msg = [&](const std::string& text) {
    return message_of([&] { io::parse_algebra(text); });
  };
  CHECK(msg("field 2\nvortex v\n").find("line 2") != std::string::npos);
  CHECK(msg("field 2\nvertex v\narrow x: v -> v\norder short_major_rlex y\n")
            .find("line 4") != std::string::npos);
  // missing pieces are reported without a line to blame
  CHECK(msg("vertex v\n").find("field") != std::string::npos);
  CHECK(msg("field 2\nvertex v\narrow x: v -> v\n").find("order") != std::string::npos);
  CHECK(msg("field 2\nfield 3\nvertex v\n").find("line 2") != std::string::npos);
  CHECK(msg("field 2\nvertex v\narrow x: v -> v\n"
            "order short_major_rlex x\nrelation x = x^2 = x^3\n")
            .find("line 5") != std::string::npos);
  CHECK(msg("field 2\nvertex v\narrow x: v -> v\norder sideways x\n").find("line 4") !=
        std::string::npos);
  CHECK(msg("field 2\nvertex v\narrow x: v => v\n").find("line 3") != std::string::npos);
}

TEST_CASE("serialization round trips") {
  auto alg = io::parse_algebra(a3_text, "a3");
  std::string text = io::serialize_algebra(*alg);
  auto again = io::parse_algebra(text, "a3");
  CHECK(io::serialize_algebra(*again) == text);
  CHECK(again->dimension() == alg->dimension());
  CHECK(again->field() == alg->field());
}

TEST_CASE("the shipped m11 file matches the builtin algebra") {
  auto builtin = io::load_algebra("builtin:m11");
  CHECK(builtin->name() == "m11");
  CHECK(builtin->dimension() == 22);
  auto from_file = io::load_algebra(EXTALG_DATA_DIR "/m11.qa");
  CHECK(from_file->dimension() == 22);
  CHECK(io::serialize_algebra(*from_file) == io::serialize_algebra(*builtin));
  CHECK(message_of([] { io::load_algebra("/no/such/file.qa"); }).find("file") !=
        std::string::npos);
}

TEST_CASE("summary and resolution reports") {
  auto alg = io::load_algebra("builtin:m11");
  io::json s = io::algebra_summary(*alg);
  CHECK(s["name"] == "m11");
  CHECK(s["field"] == 2);
  CHECK(s["dimension"] == 22);
  CHECK(s["vertices"].size() == 3);
  CHECK(s["relations"].size() == 11);
  Resolution res = Resolution::minimal(*alg, 2, 4);
  io::json r = io::resolution_json(res);
  CHECK(r["simple"] == "N");
  CHECK(r["top"] == 4);
  CHECK(r["terms"][0] == io::json::array({"N"}));
  CHECK(r["terms"][1] == io::json::array({"K", "N"}));
  CHECK(r["differentials"].size() == 4);
  // first differential is the row (e f)
  CHECK(r["differentials"][0][0][0] == "e");
  CHECK(r["differentials"][0][0][1] == "f");
}

TEST_CASE("reports serialize deterministically") {
  m11::VerificationReport rep = m11::verify_m11(3);
  io::json j = io::verification_json(rep);
  std::string once = io::report_text(j);
  std::string twice = io::report_text(io::verification_json(m11::verify_m11(3)));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  // the text is valid json and keeps its key order
  io::json back = io::json::parse(once);
  CHECK(back["bound"] == 3);
  CHECK(back["checks"].size() == j["checks"].size());
  auto it = back.begin();
  CHECK(it.key() == "schema_version");
}
