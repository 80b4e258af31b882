#include "doctest.h"

#include "test_support.hpp"

#include "indpro/pi_window.hpp"
#include "indpro/tate.hpp"

using namespace indpro;
using namespace testsup;

namespace {

const PrimeField F2(2);

PiWindow zero_window(PrimeField k, int lo, int hi) {
  PiWindowBuilder b(k, lo, hi);
  for (int i = lo; i <= hi; ++i) {
    for (int j = i; j <= hi; ++j) {
      b.set_dim(i, j, 0);
      if (i + 1 <= j) b.set_epi(i, j, Mat(k, 0, 0));
      if (j + 1 <= hi) b.set_mono(i, j, Mat(k, 0, 0));
    }
  }
  return b.build();
}

// Window [0,2] with a dead corner: the epi out of (0,2) is the zero map, so
// the triple (0,1,2) cannot be exact and the square at (0,1) is not
// cartesian.
PiWindow fattened_corner() {
  PiWindowBuilder b(F2, 0, 2);
  b.set_dim(0, 0, 0);
  b.set_dim(0, 1, 1);
  b.set_dim(0, 2, 2);
  b.set_dim(1, 1, 0);
  b.set_dim(1, 2, 1);
  b.set_dim(2, 2, 0);
  b.set_mono(0, 0, Mat(F2, 1, 0));
  b.set_mono(0, 1, Mat::from_rows(F2, {{1}, {0}}));
  b.set_mono(1, 1, Mat(F2, 1, 0));
  b.set_epi(0, 1, Mat(F2, 0, 1));
  b.set_epi(0, 2, Mat(F2, 1, 2));  // zero, not surjective
  b.set_epi(1, 2, Mat(F2, 0, 1));
  return b.build();
}

IndWindow chain123() {
  Mat i21 = Mat::from_rows(F2, {{1}, {0}});
  Mat i32 = Mat::from_rows(F2, {{1, 0}, {0, 1}, {0, 0}});
  return IndWindow(F2, {1, 2, 3}, {i21, i32});
}

}  // namespace

TEST_CASE("builder enforces structural invariants") {
  PiWindowBuilder b(F2, 0, 1);
  b.set_dim(0, 1, 2);
  b.set_epi(0, 1, Mat(F2, 0, 2));
  b.set_mono(0, 0, Mat(F2, 2, 0));
  CHECK_NOTHROW(b.build());

  SUBCASE("nonzero diagonal is rejected") {
    PiWindowBuilder bad(F2, 0, 1);
    bad.set_dim(0, 1, 1);
    bad.set_dim(1, 1, 3);
    bad.set_epi(0, 1, Mat(F2, 0, 1));
    bad.set_mono(0, 0, Mat(F2, 1, 0));
    CHECK_THROWS_WITH_AS(bad.build(), doctest::Contains("diagonal"), std::invalid_argument);
    // Same invariant through the raw constructor.
    std::vector<int> dims{1, 1, 0, 0};
    std::vector<Mat> epis(4, Mat(F2, 0, 0));
    std::vector<Mat> monos(4, Mat(F2, 0, 0));
    CHECK_THROWS_WITH_AS(PiWindow(F2, 0, 1, dims, epis, monos),
                         doctest::Contains("diagonal"), std::invalid_argument);
  }

  SUBCASE("non-commuting elementary square is rejected") {
    PiWindowBuilder bad(F2, 0, 2);
    bad.set_dim(0, 1, 1);
    bad.set_dim(0, 2, 2);
    bad.set_dim(1, 2, 2);
    bad.set_mono(0, 0, Mat(F2, 1, 0));
    bad.set_mono(0, 1, Mat::from_rows(F2, {{1}, {0}}));
    bad.set_mono(1, 1, Mat(F2, 2, 0));
    bad.set_epi(0, 1, Mat(F2, 0, 1));
    bad.set_epi(0, 2, Mat::from_rows(F2, {{0, 1}, {1, 0}}));
    bad.set_epi(1, 2, Mat(F2, 0, 2));
    // Square at (0,1): epi(0,2) . mono(0,1) must equal mono(1,1) . epi(0,1).
    CHECK_THROWS_WITH_AS(bad.build(), doctest::Contains("does not commute"),
                         std::invalid_argument);
  }
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(zero_window(F2, -2, 2)).ok);
  CHECK(is_admissible(laurent_window(LaurentSpec{2, -2, 2})).ok);

  AdmissibleReport r = is_admissible(fattened_corner());
  CHECK_FALSE(r.ok);
  REQUIRE(r.failing_triple.has_value());
  CHECK((*r.failing_triple) == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("kato predicate") {
  CHECK(is_kato(zero_window(F2, 0, 3)).ok);
  CHECK(is_kato(laurent_window(LaurentSpec{3, -1, 2})).ok);

  KatoReport r = is_kato(fattened_corner());
  CHECK_FALSE(r.ok);

  SUBCASE("admissible windows are always Kato windows") {
    for (std::uint64_t s = 0; s < 12; ++s) {
      PiWindow w = random_kato_window(2 + 3 * (s % 2), -2, 2, 4, s);
      REQUIRE(is_admissible(w).ok);
      CHECK(is_kato(w).ok);
    }
  }
}

TEST_CASE("square ses roundtrip") {
  CHECK(square_ses_roundtrip(zero_window(F2, 0, 2)));
  CHECK(square_ses_roundtrip(laurent_window(LaurentSpec{2, -2, 2})));
  CHECK(square_ses_roundtrip(laurent_window(LaurentSpec{5, 0, 3})));
  CHECK_THROWS_AS(square_ses_roundtrip(fattened_corner()), std::invalid_argument);

  SUBCASE("every Kato window satisfies the roundtrip") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      PiWindow w = random_kato_window(3, -1, 2, 4, s + 100);
      REQUIRE(is_kato(w).ok);
      CHECK(square_ses_roundtrip(w));
    }
  }
}

TEST_CASE("full grid view") {
  PiWindow w = laurent_window(LaurentSpec{2, -1, 2});
  FullGridView g(w);
  CHECK(g.dim(2, -1) == 0);
  CHECK(g.dim(1, 1) == 0);
  CHECK(g.dim(-1, 2) == 3);
  CHECK(g.map(2, 2, 2, 2).rows() == 0);
  CHECK(g.map(-1, 1, 0, 2) == w.transport(-1, 1, 0, 2));
  CHECK(g.map(1, -1, 1, 2).cols() == 0);
}

TEST_CASE("clamped transports extend the window") {
  PiWindow w = laurent_window(LaurentSpec{2, -1, 1});
  CHECK(w.dim_clamped(-5, 0) == w.dim(-1, 0));
  CHECK(w.dim_clamped(-5, 7) == w.dim(-1, 1));
  CHECK(w.dim_clamped(4, 9) == 0);
  // Below lo the pro direction is constant: transports are identities.
  CHECK(w.transport(-5, 0, -2, 0).is_identity());
  // Above hi the ind direction is constant.
  CHECK(w.transport(-1, 3, -1, 9).is_identity());
}

TEST_CASE("reindexing pi windows") {
  PiWindow w = laurent_window(LaurentSpec{2, -2, 2});

  SUBCASE("identity") {
    CHECK(reindex(w, BicofinalMap::identity(), -2, 2) == w);
  }
  SUBCASE("translation") {
    PiWindow t = reindex(w, BicofinalMap::shift(1), -2, 1);
    for (int i = -2; i <= 1; ++i) {
      for (int j = i; j <= 1; ++j) CHECK(t.dim(i, j) == w.dim(i + 1, j + 1));
    }
  }
  SUBCASE("doubling the Laurent window doubles the gaps") {
    BicofinalMap doubling(-1, {-2, 0, 2});
    PiWindow d = reindex(w, doubling, -1, 1);
    for (int i = -1; i <= 1; ++i) {
      for (int j = i; j <= 1; ++j) CHECK(d.dim(i, j) == 2 * (j - i));
    }
    CHECK(is_admissible(d).ok);
    CHECK(is_kato(d).ok);
  }
  SUBCASE("underflow is refused") {
    CHECK_THROWS_WITH_AS(reindex(w, BicofinalMap::shift(4), -2, 2),
                         doctest::Contains("window underflow"), std::invalid_argument);
  }
  SUBCASE("reindexing preserves admissibility and the Kato property") {
    for (std::uint64_t s = 0; s < 8; ++s) {
      PiWindow r = random_kato_window(2, -2, 2, 4, s + 55);
      PiWindow shifted = reindex(r, BicofinalMap::shift(-1), -1, 2);
      CHECK(is_admissible(shifted).ok);
      CHECK(is_kato(shifted).ok);
    }
  }
}

TEST_CASE("dualize") {
  PiWindow zero = zero_window(F2, -1, 1);
  CHECK(dualize(zero) == zero);

  SUBCASE("involution on the nose") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      PiWindow w = random_kato_window(5, -2, 1, 4, s + 7);
      CHECK(dualize(dualize(w)) == w);
      CHECK(is_kato(dualize(w)).ok);
    }
  }

  SUBCASE("laurent window dualizes to the reflected window up to reversal") {
    LaurentSpec spec{2, -2, 1};
    PiWindow dual = dualize(laurent_window(spec));
    PiWindow reflected = laurent_window(LaurentSpec{2, -1, 2});
    REQUIRE(dual.lo() == reflected.lo());
    REQUIRE(dual.hi() == reflected.hi());
    auto reversal = [&](int i, int j) {
      int n = reflected.dim(i, j);
      Mat r(F2, n, n);
      for (int c = 0; c < n; ++c) r.set(n - 1 - c, c, 1);
      return r;
    };
    CHECK(conjugate(dual, reversal) == reflected);
  }
}

TEST_CASE("embedding of strict chains") {
  IndWindow x = chain123();
  PiWindow e = embed_ind_window(x);
  CHECK(e.lo() == -1);
  CHECK(e.hi() == 2);
  for (int j = 0; j <= 2; ++j) CHECK(e.dim(-1, j) == x.dim_at(j));
  for (int i = 0; i <= 2; ++i) {
    for (int j = i; j <= 2; ++j) CHECK(e.dim(i, j) == x.dim_at(j) - x.dim_at(i));
  }
  CHECK(is_admissible(e).ok);
  CHECK(is_kato(e).ok);

  SUBCASE("single object") {
    IndWindow one(F2, {2}, {});
    PiWindow w = embed_ind_window(one);
    CHECK(w.lo() == -1);
    CHECK(w.hi() == 0);
    CHECK(w.dim(-1, 0) == 2);
    CHECK(w.dim(0, 0) == 0);
    CHECK(is_kato(w).ok);
  }

  SUBCASE("zero chain") {
    IndWindow z(F2, {0, 0}, {Mat(F2, 0, 0)});
    PiWindow w = embed_ind_window(z);
    CHECK(is_kato(w).ok);
    for (int i = -1; i <= 1; ++i) {
      for (int j = i; j <= 1; ++j) CHECK(w.dim(i, j) == 0);
    }
  }

  SUBCASE("non-strict input is refused") {
    IndWindow bad(F2, {1, 1}, {Mat(F2, 1, 1)});
    CHECK_THROWS_WITH_AS(embed_ind_window(bad), doctest::Contains("strict"),
                         std::invalid_argument);
  }

  SUBCASE("pro mirror") {
    ProWindow y(F2, {1, 2, 3},
                {Mat::from_rows(F2, {{1, 0}}), Mat::from_rows(F2, {{1, 0, 0}, {0, 1, 0}})});
    PiWindow w = embed_pro_window(y);
    CHECK(w.lo() == -2);
    CHECK(w.hi() == 1);
    CHECK(is_kato(w).ok);
    CHECK(w.dim(-2, 1) == 3);
    ProWindow bad(F2, {2, 2}, {Mat(F2, 2, 2)});
    CHECK_THROWS_AS(embed_pro_window(bad), std::invalid_argument);
  }
}

TEST_CASE("pi morphisms and componentwise exact sequences") {
  PiWindow w = laurent_window(LaurentSpec{2, -1, 1});
  PiMorphism id = PiMorphism::identity(w);
  CHECK(id.component(-1, 1).is_identity());

  PiWindow dbl = direct_sum(w, w);
  std::size_t n = std::size_t(w.span() + 1);
  std::vector<Mat> monos(n * n, Mat(F2, 0, 0));
  std::vector<Mat> epis(n * n, Mat(F2, 0, 0));
  for (int i = w.lo(); i <= w.hi(); ++i) {
    for (int j = i; j <= w.hi(); ++j) {
      int d = w.dim(i, j);
      Mat m(F2, 2 * d, d);
      for (int t = 0; t < d; ++t) m.set(t, t, 1);
      Mat e(F2, d, 2 * d);
      for (int t = 0; t < d; ++t) e.set(t, d + t, 1);
      monos[std::size_t(i - w.lo()) * n + std::size_t(j - w.lo())] = m;
      epis[std::size_t(i - w.lo()) * n + std::size_t(j - w.lo())] = e;
    }
  }
  PiSes ses{PiMorphism(w, dbl, monos), PiMorphism(dbl, w, epis)};
  CHECK(is_pi_ses(ses));
}

TEST_CASE("pi roofs") {
  PiWindow w = laurent_window(LaurentSpec{2, -2, 2});

  SUBCASE("reindexing roofs are localization denominators") {
    BicofinalMap phi = BicofinalMap::shift(1);
    PiRoof r = PiRoof::reindexing(w, phi);
    CHECK(equivalent(r, r));
    PiRoof id_roof = PiRoof::from_straight(PiMorphism::identity(w));
    CHECK(equivalent(compose(r, id_roof), r));
    CHECK(equivalent(compose(id_roof, id_roof), id_roof));
    // Denominators become identities after localizing.
    CHECK(equivalent(id_roof, r));
  }

  SUBCASE("a non-identity automorphism separates roofs at the stable corner") {
    PrimeField f3(3);
    PiWindow v = laurent_window(LaurentSpec{3, -1, 1});
    std::size_t n = std::size_t(v.span() + 1);
    std::vector<Mat> comps(n * n, Mat(f3, 0, 0));
    for (int i = v.lo(); i <= v.hi(); ++i) {
      for (int j = i; j <= v.hi(); ++j) {
        comps[std::size_t(i - v.lo()) * n + std::size_t(j - v.lo())] =
            scale(Mat::identity(f3, v.dim(i, j)), 2);
      }
    }
    PiRoof doubled = PiRoof::from_straight(PiMorphism(v, v, comps));
    PiRoof id_roof = PiRoof::from_straight(PiMorphism::identity(v));
    CHECK_FALSE(equivalent(id_roof, doubled));
  }

  SUBCASE("pure reindexing roofs compose to the composite reindexing") {
    BicofinalMap a = BicofinalMap::shift(1);
    BicofinalMap b = BicofinalMap::shift(2);
    PiRoof ra = PiRoof::reindexing(w, a);
    PiRoof rb = PiRoof::reindexing(w, b);
    PiRoof both = compose(rb, ra);
    CHECK(equivalent(both, PiRoof::reindexing(w, compose(b, a))));
  }

  SUBCASE("composition respects equivalence") {
    // Two presentations of the same morphism compose to equivalent roofs.
    PiRoof id_roof = PiRoof::from_straight(PiMorphism::identity(w));
    PiRoof denom = PiRoof::reindexing(w, BicofinalMap::shift(1));
    REQUIRE(equivalent(id_roof, denom));
    PiRoof shiftr = shift_lattice(LaurentSpec{2, -2, 2}, 1);
    CHECK(equivalent(compose(shiftr, id_roof), compose(shiftr, denom)));
    PiRoof back = shift_lattice(LaurentSpec{2, -1, 3}, -1);
    CHECK(equivalent(compose(back, compose(shiftr, id_roof)),
                     compose(back, compose(shiftr, denom))));
  }

  SUBCASE("endpoint mismatch is an error") {
    PiRoof id_roof = PiRoof::from_straight(PiMorphism::identity(w));
    PiWindow other = laurent_window(LaurentSpec{2, -1, 1});
    PiRoof other_roof = PiRoof::from_straight(PiMorphism::identity(other));
    CHECK_THROWS_AS(equivalent(id_roof, other_roof), std::invalid_argument);
    CHECK_THROWS_AS(compose(id_roof, other_roof), std::invalid_argument);
  }
}
