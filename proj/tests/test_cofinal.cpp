#include "doctest.h"

#include <stdexcept>

#include "indpro/cofinal.hpp"
#include "indpro/rng.hpp"

using namespace indpro;

namespace {

// Literal three-case construction, used as the independent oracle for the
// floor inverse. Scanning i <= j is exhaustive because id <= m.
int three_case_psi(const CofinalMap& m, int j) {
  int best = -1;
  for (int i = 0; i <= j; ++i) {
    if (m.eval(i) == j) best = i;  // case (1): largest preimage of j itself
  }
  if (best >= 0) return best;
  for (int j0 = j - 1; j0 >= 0; --j0) {  // case (2): largest value below j
    int hit = -1;
    for (int i = 0; i <= j0; ++i) {
      if (m.eval(i) == j0) hit = i;
    }
    if (hit >= 0) return hit;
  }
  return 0;  // case (3)
}

}  // namespace

TEST_CASE("cofinality of stored windows") {
  CHECK(is_cofinal(CofinalMap::identity(4)));
  CHECK(is_cofinal(CofinalMap({0, 0, 0})));
  CHECK_FALSE(is_cofinal(CofinalMap({0, 2, 1})));
  CHECK_THROWS_AS(CofinalMap({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CofinalMap(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("canonical trimming makes equality structural") {
  CHECK(CofinalMap({0, 1, 2, 3}) == CofinalMap::identity(1));
  CHECK(CofinalMap({2, 3, 4}) == CofinalMap({2}));
  CHECK(CofinalMap({0, 0, 1, 2}) == CofinalMap({0, 0}));
  for (int n = 0; n < 8; ++n) {
    CHECK(CofinalMap({0, 0, 1, 2}).eval(n) == CofinalMap({0, 0, 1, 2, 3, 4}).eval(n));
  }
}

TEST_CASE("composition and order") {
  CofinalMap id = CofinalMap::identity();
  CofinalMap doubling({0, 2, 4, 6, 8});
  CHECK(compose(id, doubling) == doubling);
  CHECK(compose(doubling, id) == doubling);
  CHECK(leq(id, id));
  CHECK(leq(id, doubling));
  CHECK_FALSE(leq(doubling, id));

  SUBCASE("composition is associative, identity two-sided") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
      auto rnd = [&]() {
        std::vector<int> w;
        int v = int(rng.below(3));
        for (int i = 0; i <= int(rng.below(5)); ++i) {
          w.push_back(v);
          v += int(rng.below(3));
        }
        return CofinalMap(w);
      };
      CofinalMap a = rnd(), b = rnd(), c = rnd();
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, id) == a);
      CHECK(compose(id, a) == a);
    }
  }

  SUBCASE("leq is a partial order") {
    Rng rng(6);
    for (int t = 0; t < 40; ++t) {
      auto rnd = [&]() {
        std::vector<int> w;
        int v = int(rng.below(3));
        for (int i = 0; i <= int(rng.below(4)); ++i) {
          w.push_back(v);
          v += int(rng.below(2));
        }
        return CofinalMap(w);
      };
      CofinalMap a = rnd(), b = rnd(), c = rnd();
      CHECK(leq(a, a));
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    }
  }
}

TEST_CASE("floor inverse matches the stated examples") {
  SUBCASE("identity gives identity") {
    CofinalMap psi = floor_inverse(CofinalMap::identity(), 8);
    for (int j = 0; j <= 8; ++j) CHECK(psi.eval(j) == j);
  }
  SUBCASE("doubling gives halving") {
    CofinalMap psi = floor_inverse(CofinalMap({0, 2, 4, 6, 8, 10, 12, 14, 16}), 8);
    for (int j = 0; j <= 8; ++j) CHECK(psi.eval(j) == j / 2);
  }
  SUBCASE("shift up gives clamped shift down") {
    CofinalMap psi = floor_inverse(CofinalMap::shift(3), 9);
    for (int j = 0; j <= 9; ++j) CHECK(psi.eval(j) == std::max(j - 3, 0));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(floor_inverse(CofinalMap({0, 2, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(floor_inverse(CofinalMap({0, 0, 1}), 4), std::invalid_argument);
  }
}

TEST_CASE("floor inverse against the three-case oracle") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> w;
    int v = 0;
    int len = 1 + int(rng.below(6));
    for (int i = 0; i < len; ++i) {
      v = std::max(v + int(rng.below(3)), i);
      w.push_back(v);
      v = w.back();
    }
    CofinalMap m(w);
    REQUIRE(dominates_identity(m));
    CofinalMap psi = floor_inverse(m, 12);
    for (int j = 0; j <= 12; ++j) CHECK(psi.eval(j) == three_case_psi(m, j));
    CHECK(below_identity(psi));
    // One-sided inverse bound, on the range the stored window covers.
    for (int i = 0; i <= 8; ++i) {
      if (m.eval(i) <= 12) CHECK(psi.eval(m.eval(i)) >= i);
    }
  }
}

TEST_CASE("pi points and bicofinal maps") {
  CHECK_THROWS_AS(PiPoint(2, 1), std::invalid_argument);

  BicofinalMap id = BicofinalMap::identity(-2, 2);
  CHECK(id.map_pair(PiPoint(0, 2)) == PiPoint(0, 2));
  CHECK(BicofinalMap::shift(1).map_pair(PiPoint(0, 2)) == PiPoint(1, 3));

  BicofinalMap doubling(-1, {-2, 0, 2});
  CHECK(doubling.map_pair(PiPoint(-1, 1)) == PiPoint(-2, 2));
  CHECK(doubling.eval(-3) == -4);  // slope-1 tail below the window
  CHECK(doubling.eval(3) == 4);

  SUBCASE("canonical trimming at both ends") {
    CHECK(BicofinalMap(-3, {-3, -2, -1, 0, 1}) == BicofinalMap::identity());
    CHECK(BicofinalMap(-1, {5, 6, 7}) == BicofinalMap(-1, {5}));
  }

  SUBCASE("pair action is functorial") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
      auto rnd = [&]() {
        std::vector<int> w;
        int v = -int(rng.below(4));
        for (int i = 0; i <= int(rng.below(4)); ++i) {
          w.push_back(v);
          v += int(rng.below(3));
        }
        return BicofinalMap(-int(rng.below(3)), w);
      };
      BicofinalMap a = rnd(), b = rnd();
      BicofinalMap ab = compose(a, b);
      for (int i = -4; i <= 4; ++i) {
        for (int j = i; j <= 4; ++j) {
          CHECK(ab.map_pair(PiPoint(i, j)) == a.map_pair(b.map_pair(PiPoint(i, j))));
        }
      }
    }
  }
}
