#include "doctest.h"

#include "test_support.hpp"

#include "indpro/windows.hpp"

using namespace indpro;
using namespace testsup;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

IndWindow chain123(PrimeField k) {
  Mat i21 = Mat::from_rows(k, {{1}, {0}});
  Mat i32 = Mat::from_rows(k, {{1, 0}, {0, 1}, {0, 0}});
  return IndWindow(k, {1, 2, 3}, {i21, i32});
}

IndWindow random_window(Rng& rng, PrimeField k, int max_dim, int len) {
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int i = 0; i <= len; ++i) dims.push_back(rng.range(0, max_dim));
  for (int i = 0; i < len; ++i) {
    maps.push_back(random_mat(rng, k, dims[std::size_t(i + 1)], dims[std::size_t(i)]));
  }
  return IndWindow(k, std::move(dims), std::move(maps));
}

ProWindow random_pro(Rng& rng, PrimeField k, int max_dim, int len) {
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int i = 0; i <= len; ++i) dims.push_back(rng.range(0, max_dim));
  for (int i = 0; i < len; ++i) {
    maps.push_back(random_mat(rng, k, dims[std::size_t(i)], dims[std::size_t(i + 1)]));
  }
  return ProWindow(k, std::move(dims), std::move(maps));
}

}  // namespace

TEST_CASE("window structural validation") {
  CHECK_THROWS_AS(IndWindow(F2, {1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(IndWindow(F2, {1, 2}, {Mat(F2, 1, 2)}), std::invalid_argument);
  IndWindow x = chain123(F2);
  CHECK(x.top() == 2);
  CHECK(x.dim_at(100) == 3);
  CHECK(x.map_at(57).is_identity());
  CHECK(x.transport(0, 2) == Mat::from_rows(F2, {{1}, {0}, {0}}));
  CHECK(x.transport(1, 1).is_identity());
}

TEST_CASE("reindex of inductive windows") {
  IndWindow x = chain123(F2);
  CHECK(reindex(x, CofinalMap::identity()) == x);

  IndWindow shifted = reindex(x, CofinalMap::shift(1));
  CHECK(shifted.dim_at(0) == 2);
  CHECK(shifted.dim_at(1) == 3);

  IndWindow doubled = reindex(x, CofinalMap({0, 2, 4}));
  CHECK(doubled.dim_at(0) == 1);
  CHECK(doubled.dim_at(1) == 3);
  CHECK(doubled.map_at(0) == x.transport(0, 2));

  SUBCASE("realization is reindexing-invariant") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      IndWindow w = random_window(rng, F3, 4, 3);
      std::vector<int> phi_w;
      int v = int(rng.below(2));
      for (int i = 0; i < 4; ++i) {
        phi_w.push_back(v);
        v += int(rng.below(3));
      }
      CofinalMap phi(phi_w);
      Realization a = realize_ind(w);
      Realization b = realize_ind(reindex(w, phi));
      CHECK(a.space_dim == b.space_dim);
      for (std::size_t i = 0; i < b.legs.size(); ++i) {
        CHECK(b.legs[i] == w.transport(std::min(phi.eval(int(i)), w.top()), w.top()));
      }
    }
  }
}

TEST_CASE("eventual equality of straight morphisms") {
  IndWindow x = chain123(F2);
  IndMorphism f = IndMorphism::identity(x);
  CHECK(eventually_equal(f, f));

  // Differ only at index 0: still the same morphism. The window starts with
  // a zero map so a nonzero early perturbation stays natural.
  IndWindow z(F2, {1, 1, 1}, {Mat(F2, 1, 1), Mat::identity(F2, 1)});
  IndMorphism zid = IndMorphism::identity(z);
  IndMorphism zg(z, z, {Mat(F2, 1, 1), Mat::identity(F2, 1), Mat::identity(F2, 1)});
  CHECK(eventually_equal(zid, zg));

  // Differ at the stabilized top index: permanently different.
  Mat swap3 = Mat::from_rows(F2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  std::vector<Mat> comps2{Mat::identity(F2, 1), Mat::identity(F2, 2), swap3};
  CHECK_THROWS_AS(IndMorphism(x, x, comps2), std::invalid_argument);  // not natural
  IndWindow c2 = IndWindow::constant(F2, 2, 3);
  Mat flip = Mat::from_rows(F2, {{0, 1}, {1, 0}});
  IndMorphism h(c2, c2, {flip, flip, flip});
  CHECK_FALSE(eventually_equal(IndMorphism::identity(c2), h));

  IndWindow other = IndWindow::constant(F2, 1, 2);
  CHECK_THROWS_AS(eventually_equal(f, IndMorphism::identity(other)), std::invalid_argument);
}

TEST_CASE("roof equivalence") {
  IndWindow x = chain123(F2);
  CofinalMap phi = CofinalMap::shift(1);
  IndRoof r = IndRoof::reindexing(x, phi);
  CHECK(equivalent(r, r));

  SUBCASE("pushing into a larger reindexing stays equivalent") {
    CofinalMap psi = CofinalMap::shift(2);
    IndRoof pushed = push_into(r, psi);
    CHECK(equivalent(r, pushed));
    CHECK(equivalent(pushed, r));
  }

  SUBCASE("a stable-corner automorphism separates roofs") {
    IndWindow c2 = IndWindow::constant(F2, 2, 3);
    Mat flip = Mat::from_rows(F2, {{0, 1}, {1, 0}});
    IndRoof id_roof = IndRoof::from_straight(IndMorphism::identity(c2));
    IndRoof flip_roof = IndRoof::from_straight(IndMorphism(c2, c2, {flip, flip, flip}));
    CHECK_FALSE(equivalent(id_roof, flip_roof));
  }

  SUBCASE("composition with the identity roof") {
    IndRoof id_roof = IndRoof::from_straight(IndMorphism::identity(x));
    CHECK(equivalent(compose(r, id_roof), r));
    CHECK(equivalent(compose(id_roof, r), r));
  }

  SUBCASE("pure reindexing roofs compose to the composite reindexing") {
    CofinalMap a = CofinalMap::shift(1);
    CofinalMap b = CofinalMap::shift(2);
    IndRoof ra = IndRoof::reindexing(x, a);
    IndRoof rb = IndRoof::reindexing(x, b);
    IndRoof both = compose(rb, ra);
    CHECK(both.phi() == compose(b, a));
    CHECK(equivalent(both, IndRoof::reindexing(x, compose(b, a))));
  }
}

TEST_CASE("roof composition is associative up to equivalence") {
  Rng rng(21);
  for (int t = 0; t < 15; ++t) {
    IndWindow x = random_window(rng, F2, 3, 2);
    auto mk_phi = [&]() {
      std::vector<int> w;
      int v = int(rng.below(2));
      for (int i = 0; i < 3; ++i) {
        w.push_back(i + v);
        v += int(rng.below(2));
      }
      return CofinalMap(w);
    };
    IndRoof r1 = IndRoof::reindexing(x, mk_phi());
    IndWindow y = r1.dst();
    IndRoof r2 = IndRoof::reindexing(y, mk_phi());
    IndWindow z = r2.dst();
    IndRoof r3 = IndRoof::reindexing(z, mk_phi());
    CHECK(equivalent(compose(compose(r3, r2), r1), compose(r3, compose(r2, r1))));
  }
}

TEST_CASE("realization") {
  IndWindow constant = IndWindow::constant(F2, 2, 1);
  Realization r = realize_ind(constant);
  CHECK(r.space_dim == 2);
  CHECK(r.legs[0].is_identity());

  Realization chain = realize_ind(chain123(F2));
  CHECK(chain.space_dim == 3);
  CHECK(chain.legs[0] == Mat::from_rows(F2, {{1}, {0}, {0}}));

  // A collapse: the leg factors through the image.
  IndWindow collapse(F2, {2, 1}, {Mat::from_rows(F2, {{1, 0}})});
  Realization c = realize_ind(collapse);
  CHECK(c.space_dim == 1);
  CHECK(c.legs[0] == Mat::from_rows(F2, {{1, 0}}));

  ProWindow pro = ProWindow::constant(F3, 2, 2);
  Realization pr = realize_pro(pro);
  CHECK(pr.space_dim == 2);
  CHECK(pr.legs[0].is_identity());
}

TEST_CASE("strictify_pro on the worked examples") {
  Mat idem = Mat::from_rows(F2, {{1, 0}, {0, 0}});
  Mat nilp = Mat::from_rows(F2, {{0, 1}, {0, 0}});

  SUBCASE("already strict windows return unchanged") {
    ProWindow y(F2, {1, 2}, {Mat::from_rows(F2, {{1, 0}})});
    ProStrictification s = strictify_pro(y);
    CHECK(s.strict == y);
    CHECK(s.fwd.component_at(0).is_identity());
    CHECK(s.bwd.component_at(1).is_identity());
  }

  SUBCASE("idempotent maps cut every stored level to the fixed line") {
    ProWindow y(F2, {2, 2, 2, 2}, {idem, idem, idem});
    ProStrictification s = strictify_pro(y);
    CHECK(s.strict.dim_at(0) == 1);
    CHECK(s.strict.dim_at(1) == 1);
    CHECK(s.strict.dim_at(2) == 1);
    CHECK(s.strict.dim_at(3) == 2);  // identity tail keeps the top space whole
    CHECK(s.strict.map_at(0).is_identity());
    CHECK(s.strict.map_at(1).is_identity());
    CHECK(s.strict.map_at(2) == Mat::from_rows(F2, {{1, 0}}));
    // The stabilized line is spanned by e1.
    CHECK(s.bwd.component_at(0) == Mat::from_rows(F2, {{1}, {0}}));
  }

  SUBCASE("nilpotent maps kill everything two or more steps down") {
    ProWindow y(F2, {2, 2, 2, 2}, {nilp, nilp, nilp});
    ProStrictification s = strictify_pro(y);
    CHECK(s.strict.dim_at(0) == 0);
    CHECK(s.strict.dim_at(1) == 0);
    CHECK(s.strict.dim_at(2) == 1);  // one step below the top: image of nilp
    CHECK(s.strict.dim_at(3) == 2);
  }
}

TEST_CASE("strictify_pro invariants on random windows") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    PrimeField k(t % 2 == 0 ? 2 : 3);
    ProWindow y = random_pro(rng, k, 5, rng.range(1, 4));
    ProStrictification s = strictify_pro(y);
    for (int i = 0; i < s.strict.top(); ++i) {
      CHECK(is_surjective(s.strict.map_at(i)));
    }
    for (std::size_t j = 0; j < s.chain_steps.size(); ++j) {
      CHECK(s.chain_steps[j] <= y.dim_at(int(j)) + 1);
    }
    // Round trips: retraction exactly, section after stabilization.
    CHECK(eventually_equal(compose(s.fwd, s.bwd), ProMorphism::identity(s.strict)));
    CHECK(eventually_equal(compose(s.bwd, s.fwd), ProMorphism::identity(y)));
    for (int i = 0; i <= s.strict.top(); ++i) {
      CHECK((s.fwd.component_at(i) * s.bwd.component_at(i)).is_identity());
    }
  }
}

TEST_CASE("strictify_ind") {
  SUBCASE("strict chains are unchanged") {
    IndWindow x = chain123(F2);
    IndStrictification s = strictify_ind(x);
    CHECK(s.strict == x);
  }
  SUBCASE("collapse shrinks to images inside the realization") {
    IndWindow x(F2, {2, 1}, {Mat::from_rows(F2, {{1, 0}})});
    IndStrictification s = strictify_ind(x);
    CHECK(s.strict.dim_at(0) == 1);
    CHECK(s.strict.dim_at(1) == 1);
    CHECK(is_injective(s.strict.map_at(0)));
  }
  SUBCASE("random windows: injective maps and exact round trips") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
      PrimeField k(t % 2 == 0 ? 2 : 5);
      IndWindow x = random_window(rng, k, 5, rng.range(1, 4));
      IndStrictification s = strictify_ind(x);
      for (int i = 0; i < s.strict.top(); ++i) CHECK(is_injective(s.strict.map_at(i)));
      CHECK(eventually_equal(compose(s.fwd, s.bwd), IndMorphism::identity(s.strict)));
      CHECK(eventually_equal(compose(s.bwd, s.fwd), IndMorphism::identity(x)));
      for (int i = 0; i <= s.strict.top(); ++i) {
        CHECK((s.fwd.component_at(i) * s.bwd.component_at(i)).is_identity());
      }
    }
  }
}

TEST_CASE("pro roofs mirror the ind machinery") {
  ProWindow y(F2, {1, 2, 2}, {Mat::from_rows(F2, {{1, 0}}), Mat::from_rows(F2, {{1, 0}, {0, 0}})});
  CofinalMap rho({0, 0, 1});
  ProRoof r = ProRoof::reindexing(y, rho);
  CHECK(equivalent(r, r));

  ProRoof id_roof = ProRoof::from_straight(ProMorphism::identity(y));
  ProRoof composite = compose(r, id_roof);
  CHECK(equivalent(composite, r));

  SUBCASE("deep-end difference separates pro roofs") {
    ProWindow c2 = ProWindow::constant(F2, 2, 3);
    Mat flip = Mat::from_rows(F2, {{0, 1}, {1, 0}});
    ProRoof a = ProRoof::from_straight(ProMorphism::identity(c2));
    ProRoof b = ProRoof::from_straight(ProMorphism(c2, c2, {flip, flip, flip}));
    CHECK_FALSE(equivalent(a, b));
  }

  SUBCASE("rho must stay below the identity") {
    CHECK_THROWS_AS(ProRoof::reindexing(y, CofinalMap::shift(1)), std::invalid_argument);
  }
}
