#include "doctest.h"
#include "test_support.hpp"
#include "twisted_h1/error.hpp"
#include "twisted_h1/folding.hpp"
#include "twisted_h1/lattice.hpp"
#include "twisted_h1/oracle.hpp"

using namespace twisted_h1;
using twisted_h1::testing::Case;

TEST_CASE("diagram automorphisms") {
  const RootDatum a3({Family::A, 3}, Isogeny::simply_connected);
  CHECK(diagram_automorphism(a3, 2).node_permutation == Permutation{2, 1, 0});
  CHECK(diagram_automorphism(a3, 1).node_permutation == Permutation{0, 1, 2});

  const RootDatum d4({Family::D, 4}, Isogeny::simply_connected);
  const auto tri = diagram_automorphism(d4, 3);
  CHECK(tri.node_permutation == Permutation{2, 1, 3, 0});  // 1 -> 3 -> 4 -> 1
  CHECK(diagram_automorphism(d4, 2).node_permutation == Permutation{0, 1, 3, 2});

  for (const Case& c : std::vector<Case>{{Family::E, 8, 2}, {Family::A, 5, 3}, {Family::A, 1, 2}, {Family::B, 3, 2},
                                         {Family::D, 5, 3}, {Family::G, 2, 2}, {Family::E, 7, 2}, {Family::A, 3, 4}}) {
    const RootDatum d(c.type(), Isogeny::simply_connected);
    const int r = c.r;
    try {
      diagram_automorphism(d, r);
      FAIL("expected UnsupportedAutomorphism");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unsupported_automorphism);
    }
  }

  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto da = c.automorphism(Isogeny::adjoint);
    CAPTURE(c.name());
    CHECK(da.lattice_action.power(static_cast<unsigned>(c.r)) == LatticeMap::identity(da.lattice_action.dimension()));
  }
}

TEST_CASE("invariant sublattices") {
  const RootDatum a3({Family::A, 3}, Isogeny::simply_connected);
  CHECK(invariant_sublattice(diagram_automorphism(a3, 2)) == std::vector<IntVec>{{1, 0, 1}, {0, 1, 0}});
  const RootDatum d4({Family::D, 4}, Isogeny::simply_connected);
  CHECK(invariant_sublattice(diagram_automorphism(d4, 3)) == std::vector<IntVec>{{1, 0, 1, 1}, {0, 1, 0, 0}});
  CHECK(invariant_sublattice(diagram_automorphism(d4, 1)).size() == 4);
}

TEST_CASE("invariant generators match the tabulated orbit sums") {
  // X^tau is spanned by orbit sums of the basis vectors, for every case.
  for (const Case& c : twisted_h1::testing::all_cases(8))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da = c.automorphism(iso);
      CAPTURE(c.name());
      std::vector<IntVec> sums;
      for (const auto& orbit : da.orbits) {
        IntVec v(da.lattice_action.dimension(), 0);
        for (int i : orbit) v[static_cast<std::size_t>(i)] = 1;
        sums.push_back(v);
      }
      CHECK(hermite_normal_form(sums, sums.front().size()) == invariant_sublattice(da));
    }
}

TEST_CASE("norm and averaging operators") {
  const RootDatum a3({Family::A, 3}, Isogeny::simply_connected);
  const auto da = diagram_automorphism(a3, 2);
  CHECK(norm_operator(da, 2).apply(IntVec{1, 0, 0}) == IntVec{1, 0, 1});
  const auto av = averaging(diagram_automorphism(a3, 1));
  CHECK(av.apply(IntVec{3, -1, 2}) == to_rational(IntVec{3, -1, 2}));

  for (const Case& c : twisted_h1::testing::all_cases(6)) {
    const auto da2 = c.automorphism(Isogeny::simply_connected);
    const auto inv = invariant_sublattice(da2);
    for (int k = 1; k <= 3; ++k) {
      const int m = c.r * k;
      const auto nm = norm_operator(da2, m);
      // N_{tau,kr} = k N_{tau,r}.
      IntMatrix expected(nm.dimension(), nm.dimension());
      for (int j = 0; j < k; ++j) expected = expected + norm_operator(da2, c.r).matrix();
      CHECK(nm.matrix() == expected);
      for (std::size_t i = 0; i < nm.dimension(); ++i) CHECK_NOTHROW(coordinates_in_basis(inv, nm.matrix().column(i)));
    }
  }
}

TEST_CASE("folded types, Cartan matrices and theta_0") {
  for (const Case& c : twisted_h1::testing::all_cases(8))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto fd = folded_datum(c.automorphism(iso));
      CAPTURE(c.name());
      CHECK(fd.cartan() == cartan_matrix(fd.fixed_type));
      // theta_0 = sum a_i beta_i.
      IntVec sum(fd.theta0.size(), 0);
      for (std::size_t i = 0; i < fd.rank(); ++i) sum = add(sum, scale(fd.simple_roots[i], fd.kac_labels[i + 1]));
      CHECK(sum == fd.theta0);
      CHECK(fd.kac_labels[0] == 1);
      CHECK(dot(std::span<const Rational>(fd.theta0_check), std::span<const std::int64_t>(fd.theta0)) == Rational(2));
    }

  const RootDatum d4({Family::D, 4}, Isogeny::simply_connected);
  const auto g2 = folded_datum(diagram_automorphism(d4, 3));
  CHECK(g2.fixed_type == SimpleType{Family::G, 2});
  // Highest short root of G2 is 2 beta_1 + beta_2 with beta_1 short.
  CHECK(g2.theta0 == add(scale(g2.simple_roots[0], 2), g2.simple_roots[1]));

  const RootDatum a4({Family::A, 4}, Isogeny::simply_connected);
  const auto b2 = folded_datum(diagram_automorphism(a4, 2));
  CHECK(b2.fixed_type == SimpleType{Family::B, 2});
  // B2 highest short root is beta_1 + beta_2; theta_0 doubles it.
  CHECK(b2.theta0 == scale(add(b2.simple_roots[0], b2.simple_roots[1]), 2));

  const RootDatum a3({Family::A, 3}, Isogeny::simply_connected);
  const auto c2 = folded_datum(diagram_automorphism(a3, 2));
  CHECK(c2.kac_labels == IntVec{1, 1, 1});
  CHECK(c2.affine_symmetries == std::vector<Permutation>{{0, 1, 2}, {1, 0, 2}});
}

TEST_CASE("folded Weyl groups") {
  const RootDatum a3({Family::A, 3}, Isogeny::simply_connected);
  const auto da = diagram_automorphism(a3, 2);
  const auto gens = folded_weyl_generators(da);
  CHECK(gens.size() == 2);
  CHECK(twisted_h1::testing::group_order(gens) == 8);

  for (const Case& c : twisted_h1::testing::all_cases(6))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da2 = c.automorphism(iso);
      const auto fd = folded_datum(da2);
      CAPTURE(c.name());
      if (c.rank <= 6) CHECK(twisted_h1::testing::group_order(fd.weyl_generators) == weyl_group_order(fd.fixed_type));
      // The folded reflections agree with longest parabolic elements of W.
      const auto ambient = invariant_weyl_generators(da2);
      REQUIRE(ambient.size() == fd.weyl_generators.size());
      for (std::size_t i = 0; i < ambient.size(); ++i)
        for (std::size_t k = 0; k < fd.invariant_basis.size(); ++k)
          CHECK(to_invariant_coordinates(fd, ambient[i].apply(fd.invariant_basis[k])) ==
                fd.weyl_generators[i].matrix().column(k));
      // W^tau preserves N_tau(X).
      const auto image = norm_image(da2, fd);
      for (const auto& w : fd.weyl_generators) {
        std::vector<IntVec> moved;
        for (const auto& v : image) moved.push_back(w.apply(v));
        CHECK(hermite_normal_form(moved, fd.invariant_basis.size()) == image);
      }
    }
}

TEST_CASE("translation lattice versus the norm image") {
  for (const Case& c : twisted_h1::testing::all_cases(7))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da = c.automorphism(iso);
      const auto fd = folded_datum(da);
      CAPTURE(c.name());
      CAPTURE(std::string(to_string(iso)));
      const auto image = norm_image(da, fd);
      // M is contained in N_tau(X): the quotient is finite.
      const auto q = quotient(image, fd.translation_lattice);
      CHECK(q.cardinality() >= 1);
      if (iso == Isogeny::simply_connected) CHECK(q.cardinality() == 1);
    }
}

TEST_CASE("affine symmetries preserve the Kac labels") {
  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto fd = folded_datum(c.automorphism(Isogeny::adjoint));
    CAPTURE(c.name());
    Permutation id(fd.rank() + 1);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    CHECK(fd.affine_symmetries.front() == id);
    const auto a = twisted_h1::testing::affine_cartan(fd);
    for (const auto& p : fd.affine_symmetries)
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(fd.kac_labels[static_cast<std::size_t>(p[i])] == fd.kac_labels[i]);
        for (std::size_t j = 0; j < p.size(); ++j)
          CHECK(a[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])] == a[i][j]);
      }
  }
}

TEST_CASE("affine Cartan matrices") {
  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto fd = folded_datum(c.automorphism(Isogeny::simply_connected));
    CAPTURE(c.name());
    const auto a = twisted_h1::testing::affine_cartan(fd);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i][i] == Rational(2));
      // The Kac labels span the kernel: sum_j a_ij a_j = 0.
      Rational s = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[i][j].is_integer());
        if (i != j) CHECK(a[i][j] <= Rational(0));
        s += a[i][j] * Rational(fd.kac_labels[j]);
      }
      CHECK(s == Rational(0));
    }
  }
  // A_2^(2): the 4 / -1 affine Cartan matrix.
  const auto fd = folded_datum(diagram_automorphism(RootDatum({Family::A, 2}, Isogeny::simply_connected), 2));
  const auto a = twisted_h1::testing::affine_cartan(fd);
  CHECK(((a[0][1] == Rational(-4) && a[1][0] == Rational(-1)) || (a[0][1] == Rational(-1) && a[1][0] == Rational(-4))));
}

TEST_CASE("first cohomology of the permutation lattice vanishes") {
  // ker N_{tau,m} = image(tau - 1) on X, for r | m.
  for (const Case& c : twisted_h1::testing::all_cases(6))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da = c.automorphism(iso);
      const std::size_t n = da.lattice_action.dimension();
      for (int k = 1; k <= 3; ++k) {
        const auto kernel = integer_kernel(norm_operator(da, c.r * k).matrix());
        const IntMatrix diff = da.lattice_action.matrix() - IntMatrix::identity(n);
        std::vector<IntVec> image;
        for (std::size_t i = 0; i < n; ++i) image.push_back(diff.column(i));
        CHECK(hermite_normal_form(image, n) == kernel);
      }
    }
}
