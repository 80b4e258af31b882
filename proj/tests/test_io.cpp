#include "doctest.h"

#include "indpro/harness.hpp"
#include "indpro/io.hpp"
#include "indpro/tate.hpp"

using namespace indpro;

namespace {

void roundtrips(const io::Document& doc) {
  std::string text = io::serialize(doc);
  io::Document back = io::parse_document(text);
  CHECK(back == doc);
  CHECK(io::serialize(back) == text);
}

}  // namespace

TEST_CASE("documents round-trip bit-exactly") {
  PrimeField f2(2);
  Mat i21 = Mat::from_rows(f2, {{1}, {0}});
  Mat i32 = Mat::from_rows(f2, {{1, 0}, {0, 1}, {0, 0}});
  IndWindow chain(f2, {1, 2, 3}, {i21, i32});

  roundtrips(io::doc_of(chain));
  roundtrips(io::doc_of(ProWindow(f2, {2, 2}, {Mat::from_rows(f2, {{1, 0}, {0, 0}})})));
  roundtrips(io::doc_of(laurent_window(LaurentSpec{3, -2, 2})));
  roundtrips(io::doc_of(SesTriple{i21, Mat::from_rows(f2, {{0, 1}})}));
  roundtrips(io::doc_of(IndRoof::reindexing(chain, CofinalMap::shift(1))));
  roundtrips(io::doc_of(shift_lattice(LaurentSpec{2, -2, 2}, 1)));
  roundtrips(io::doc_of(harness::gen_three_squares(11, 4, 3)));
}

TEST_CASE("syntax errors carry a position") {
  try {
    io::parse_document("{\n  \"kind\": \"ses\",\n  broken\n}");
    FAIL("expected parse_error");
  } catch (const io::parse_error& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 0);
  }
}

TEST_CASE("semantic errors name the violated invariant") {
  SUBCASE("nonzero diagonal cell") {
    std::string text = R"({
      "kind": "pi_window", "p": 2, "lo": 0, "hi": 0,
      "dims": {"0,0": 1},
      "maps": {}
    })";
    CHECK_THROWS_WITH_AS(io::parse_document(text), doctest::Contains("diagonal"),
                         io::semantic_error);
  }
  SUBCASE("entry not reduced mod p") {
    std::string text = R"({
      "kind": "ses", "p": 3,
      "mono": {"rows": 1, "cols": 1, "entries": [5]},
      "epi": {"rows": 1, "cols": 1, "entries": [1]}
    })";
    CHECK_THROWS_WITH_AS(io::parse_document(text), doctest::Contains("residue"),
                         io::semantic_error);
  }
  SUBCASE("composite modulus") {
    std::string text = R"({"kind": "ses", "p": 6,
      "mono": {"rows": 0, "cols": 0, "entries": []},
      "epi": {"rows": 0, "cols": 0, "entries": []}})";
    CHECK_THROWS_AS(io::parse_document(text), io::semantic_error);
  }
  SUBCASE("unknown kind") {
    CHECK_THROWS_AS(io::parse_document(R"({"kind": "mystery", "p": 2})"), io::parse_error);
  }
}
