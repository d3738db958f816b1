#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinetorsion/census.hpp"
#include "spinetorsion/io.hpp"

using namespace spinetorsion;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("serialize then parse reproduces the spine and the text") {
  for (int n : {1, 2, 3}) {
    for (const auto& sp : census(n)) {
      std::string text = serialize_spine(sp);
      auto again = read_spine(text);
      CHECK(serialize_spine(again) == text);
      CHECK(again.triangulation() == sp.triangulation());
      CHECK(again.branching() == sp.branching());
      CHECK(canonical_form(again) == canonical_form(sp));
    }
  }
}

TEST_CASE("fixture files validate and round-trip byte for byte") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".spine") continue;
    std::string text = slurp(entry.path());
    CAPTURE(entry.path().string());
    auto sp = read_spine(text);
    CHECK(serialize_spine(sp) == text);
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("syntax errors name the line") {
  try {
    parse_spine_text("branched-spine 1\ntets 1\n\nglue 0.0 -> 0.1 : 02\n");
    FAIL("no error");
  } catch (const SpineError& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spine_text("tets 1\n"), SpineError);
  CHECK_THROWS_AS(parse_spine_text("branched-spine 2\n"), SpineError);
  CHECK_THROWS_AS(parse_spine_text("branched-spine 1\ntets 1\nbranching 0:0\n"), SpineError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto raw = parse_spine_text(
      "# one vertex\nbranched-spine 1\n\ntets 1   # count\nglue 0.0 -> 0.1 : 023\n"
      "glue 0.2 -> 0.3 : 012\nbranching 0:01 0:02 0:03\n");
  CHECK(raw.tets == 1);
  CHECK(raw.gluings.size() == 2);
  CHECK_FALSE(raw.orientation.has_value());
}

TEST_CASE("move log round trip") {
  std::vector<MoveRecord> log{{true, 3, 1}, {false, 7, 0}, {true, 0, 0}};
  auto text = serialize_move_log(log);
  auto back = parse_move_log(text);
  REQUIRE(back.size() == 3);
  CHECK(back[0].positive);
  CHECK(back[0].site == 3);
  CHECK(back[0].variant == 1);
  CHECK_FALSE(back[1].positive);
  CHECK(back[1].site == 7);
  CHECK(serialize_move_log(back) == text);
  CHECK_THROWS_AS(parse_move_log("sideways 1\n"), SpineError);
}
