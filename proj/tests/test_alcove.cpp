#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "twisted_h1/alcove.hpp"
#include "twisted_h1/error.hpp"
#include "twisted_h1/lattice.hpp"

using namespace twisted_h1;
using twisted_h1::testing::Case;

namespace {

FoldedDatum folded(Family f, int n, int r, Isogeny iso) {
  return folded_datum(diagram_automorphism(RootDatum({f, n}, iso), r));
}

// Alcove vertices from the inverse of the simple-root matrix: beta_j(v_i) = delta_ij / a_i.
std::vector<RatVec> vertices(const FoldedDatum& fd) {
  const auto inv = rational_inverse(IntMatrix::from_rows(fd.simple_roots));
  std::vector<RatVec> out{RatVec(fd.rank(), Rational(0))};
  for (std::size_t i = 0; i < fd.rank(); ++i) {
    RatVec v(fd.rank());
    for (std::size_t k = 0; k < fd.rank(); ++k) v[k] = inv[k][i] / Rational(fd.kac_labels[i + 1]);
    out.push_back(v);
  }
  return out;
}

// Box scan over (1/q) X^tau inside the bounding box of the vertices.
std::set<RatVec> scanned_alcove_points(const FoldedDatum& fd, int m) {
  const std::int64_t q = m / fd.tau_order;
  const auto vs = vertices(fd);
  IntVec lo(fd.rank()), hi(fd.rank());
  for (std::size_t k = 0; k < fd.rank(); ++k) {
    Rational a = vs[0][k], b = vs[0][k];
    for (const auto& v : vs) {
      a = std::min(a, v[k]);
      b = std::max(b, v[k]);
    }
    lo[k] = (a * Rational(q)).floor();
    hi[k] = -(-(b * Rational(q))).floor();
  }
  std::set<RatVec> out;
  IntVec y = lo;
  while (true) {
    RatVec x(fd.rank());
    for (std::size_t k = 0; k < fd.rank(); ++k) x[k] = Rational(y[k], q);
    if (in_alcove(fd, x)) out.insert(x);
    std::size_t k = 0;
    while (k < y.size() && y[k] == hi[k]) y[k] = lo[k], ++k;
    if (k == y.size()) break;
    ++y[k];
  }
  return out;
}

// Number of non-negative solutions of sum a_i s_i = n.
std::uint64_t count_solutions(const IntVec& a, std::int64_t n) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (auto ai : a)
    for (std::int64_t t = ai; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - ai)];
  return ways[static_cast<std::size_t>(n)];
}

RatVec random_point(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-25, 25), den(1, 6);
  RatVec x(n);
  for (auto& c : x) c = Rational(num(rng), den(rng));
  return x;
}

std::set<std::vector<std::int64_t>> group_elements(const std::vector<LatticeMap>& gens, std::size_t n) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<IntMatrix> todo{IntMatrix::identity(n)};
  auto key = [](const IntMatrix& m) {
    std::vector<std::int64_t> k;
    for (const auto& row : m.to_rows()) k.insert(k.end(), row.begin(), row.end());
    return k;
  };
  seen.insert(key(todo.front()));
  while (!todo.empty()) {
    const IntMatrix g = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      IntMatrix h = s.matrix() * g;
      if (seen.insert(key(h)).second) todo.push_back(std::move(h));
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("fundamental alcove inequalities") {
  const auto a1 = folded(Family::A, 1, 1, Isogeny::simply_connected);
  const auto walls1 = fundamental_alcove(a1);
  REQUIRE(walls1.size() == 2);
  CHECK(walls1[0].constant == 1);
  CHECK(walls1[0].linear == IntVec{-2});
  CHECK(walls1[1].linear == IntVec{2});
  CHECK(in_alcove(a1, {Rational(1, 2)}));
  CHECK_FALSE(in_alcove(a1, {Rational(2, 3)}));

  // In invariant coordinates (A, B): 2A - B >= 0, -2A + 2B >= 0, B <= 1.
  const auto c2 = folded(Family::A, 3, 2, Isogeny::simply_connected);
  const auto walls = fundamental_alcove(c2);
  REQUIRE(walls.size() == 3);
  CHECK(walls[0].constant == 1);
  CHECK(walls[0].linear == IntVec{0, -1});
  CHECK(walls[1].linear == IntVec{2, -1});
  CHECK(walls[2].linear == IntVec{-2, 2});

  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto fd = folded_datum(c.automorphism(Isogeny::adjoint));
    CAPTURE(c.name());
    CHECK(fundamental_alcove(fd).size() == fd.rank() + 1);
    for (const auto& v : vertices(fd)) CHECK(in_alcove(fd, v));
  }
}

TEST_CASE("alcove point counts") {
  const auto c2 = folded(Family::A, 3, 2, Isogeny::simply_connected);
  CHECK(enumerate_alcove_points(c2, 4).size() == 4);
  CHECK(enumerate_alcove_points(c2, 6).size() == 6);
  CHECK(enumerate_alcove_points(c2, 2).size() == 2);
  try {
    enumerate_alcove_points(c2, 3);
    FAIL("expected IncompatibleOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incompatible_order);
  }

  for (const Case& c : twisted_h1::testing::all_cases(5))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto fd = folded_datum(c.automorphism(iso));
      if (fd.rank() > 4) continue;
      for (int k = 1; k <= 4; ++k) {
        const int m = c.r * k;
        CAPTURE(c.name());
        CAPTURE(m);
        const auto points = enumerate_alcove_points(fd, m);
        const std::set<RatVec> as_set(points.begin(), points.end());
        CHECK(as_set.size() == points.size());
        CHECK(as_set == scanned_alcove_points(fd, m));
        CHECK(as_set.count(RatVec(fd.rank(), Rational(0))) == 1);
      }
    }
}

TEST_CASE("Kac coordinates") {
  const auto a1 = folded(Family::A, 1, 1, Isogeny::adjoint);
  CHECK(enumerate_kac_coordinates(a1, 2) == std::vector<KacCoordinates>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(kac_classes(a1, 2) == std::vector<KacCoordinates>{{1, 1}, {0, 2}});

  const auto c2 = folded(Family::A, 3, 2, Isogeny::adjoint);
  CHECK(enumerate_kac_coordinates(c2, 2) == std::vector<KacCoordinates>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(kac_classes(c2, 2).size() == 2);
  CHECK(kac_classes(folded(Family::A, 4, 2, Isogeny::adjoint), 2).size() == 1);

  try {
    kac_classes(folded(Family::A, 3, 2, Isogeny::simply_connected), 2);
    FAIL("expected NotAdjoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_adjoint);
  }

  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto fd = folded_datum(c.automorphism(Isogeny::adjoint));
    for (int k = 1; k <= 5; ++k) {
      const int m = c.r * k;
      CAPTURE(c.name());
      CAPTURE(m);
      const auto tuples = enumerate_kac_coordinates(fd, m);
      CHECK(tuples.size() == count_solutions(fd.kac_labels, k));
      CHECK(std::is_sorted(tuples.rbegin(), tuples.rend()));
      for (const auto& s : tuples) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(s[i] >= 0);
          sum += fd.kac_labels[i] * s[i];
        }
        CHECK(sum == k);
      }
      // m = r: tuples live on label-one nodes.
      if (k == 1)
        for (const auto& s : tuples)
          for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != 0) CHECK(fd.kac_labels[i] == 1);

      // Classes: canonical forms are invariant under every affine symmetry.
      const auto classes = kac_classes(fd, m);
      std::set<KacCoordinates> canon;
      for (const auto& s : tuples) {
        const auto cs = canonical_kac(fd, s);
        canon.insert(cs);
        for (const auto& p : fd.affine_symmetries) {
          KacCoordinates moved(s.size());
          for (std::size_t i = 0; i < s.size(); ++i) moved[static_cast<std::size_t>(p[i])] = s[i];
          CHECK(canonical_kac(fd, moved) == cs);
          CHECK(cs <= moved);
        }
      }
      CHECK(std::set<KacCoordinates>(classes.begin(), classes.end()) == canon);
      CHECK(classes.size() == canon.size());
    }
  }
}

TEST_CASE("alcove and Kac coordinates correspond") {
  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto fd = folded_datum(c.automorphism(Isogeny::adjoint));
    for (int k = 1; k <= 4; ++k) {
      const int m = c.r * k;
      CAPTURE(c.name());
      CAPTURE(m);
      const auto tuples = enumerate_kac_coordinates(fd, m);
      if (fd.rank() <= 4) CHECK(enumerate_alcove_points(fd, m).size() == tuples.size());
      for (const auto& s : tuples) {
        const auto x = kac_to_alcove(fd, m, s);
        CHECK(in_alcove(fd, x));
        CHECK(alcove_to_kac(fd, m, x) == s);
      }
      KacCoordinates origin(fd.rank() + 1, 0);
      origin[0] = k;
      CHECK(alcove_to_kac(fd, m, RatVec(fd.rank(), Rational(0))) == origin);
    }
  }
  const auto c2 = folded(Family::A, 3, 2, Isogeny::adjoint);
  CHECK_THROWS_AS(kac_to_alcove(c2, 2, {1, 1, 0}), Error);
  try {
    alcove_to_kac(c2, 2, {Rational(1, 3), Rational(1, 3)});
    FAIL("expected NotInLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_in_lattice);
  }
  try {
    alcove_to_kac(c2, 2, {Rational(0), Rational(2)});
    FAIL("expected NotInAlcove");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_in_alcove);
  }
}

TEST_CASE("reduction into the alcove") {
  const auto a1 = folded(Family::A, 1, 1, Isogeny::simply_connected);
  CHECK(reduce_to_alcove(a1, {Rational(1)}).point == RatVec{Rational(0)});
  CHECK(reduce_to_alcove(a1, {Rational(3, 4)}).point == RatVec{Rational(1, 4)});

  std::mt19937 rng(20241016);
  for (const Case& c : twisted_h1::testing::all_cases(6))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto fd = folded_datum(c.automorphism(iso));
      CAPTURE(c.name());
      const bool small = fd.rank() <= 4;
      const auto weyl = small ? group_elements(fd.weyl_generators, fd.rank()) : std::set<std::vector<std::int64_t>>{};
      for (int trial = 0; trial < 25; ++trial) {
        const RatVec x = random_point(rng, fd.rank());
        const auto red = reduce_to_alcove(fd, x);
        CHECK(in_alcove(fd, red.point));
        CHECK(add(red.linear.apply(x), to_rational(red.translation)) == red.point);
        CHECK_NOTHROW(coordinates_in_basis(fd.translation_lattice, red.translation));
        if (small) {
          std::vector<std::int64_t> k;
          for (const auto& row : red.linear.to_rows()) k.insert(k.end(), row.begin(), row.end());
          CHECK(weyl.count(k) == 1);
        }
        const auto again = reduce_to_alcove(fd, red.point);
        CHECK(again.point == red.point);
        CHECK(again.word.empty());
        for (const auto& w : fd.weyl_generators) CHECK(reduce_to_alcove(fd, w.apply(x)).point == red.point);
        for (const auto& mu : fd.translation_lattice)
          CHECK(reduce_to_alcove(fd, add(x, to_rational(mu))).point == red.point);
      }
    }
}

TEST_CASE("affine symmetries from translations by the norm image") {
  // For adjoint groups, x -> reduce(x + mu) with mu in N_tau(X) permutes the
  // alcove vertices; the permutations obtained are the affine symmetries.
  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    const auto da = c.automorphism(Isogeny::adjoint);
    const auto fd = folded_datum(da);
    CAPTURE(c.name());
    const auto vs = vertices(fd);
    const auto group = quotient(norm_image(da, fd), fd.translation_lattice);
    std::set<Permutation> found;
    for (const auto& e : group.enumerate()) {
      Permutation p(vs.size(), -1);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto image = reduce_to_alcove(fd, add(vs[i], to_rational(e.ambient))).point;
        for (std::size_t j = 0; j < vs.size(); ++j)
          if (vs[j] == image) p[i] = static_cast<int>(j);
        CHECK(p[i] >= 0);
      }
      found.insert(p);
    }
    CHECK(found == std::set<Permutation>(fd.affine_symmetries.begin(), fd.affine_symmetries.end()));
    CHECK(found.size() == group.cardinality());
  }
}

TEST_CASE("automorphism descriptors") {
  const RootDatum a1({Family::A, 1}, Isogeny::simply_connected);
  const auto d = classify_automorphisms(diagram_automorphism(a1, 1), 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0].isogeny == Isogeny::adjoint);
  CHECK(std::count_if(d.begin(), d.end(), [](const auto& x) { return is_zero(x.lambda); }) == 1);

  const RootDatum d4({Family::D, 4}, Isogeny::adjoint);
  const auto da = diagram_automorphism(d4, 3);
  CHECK(classify_automorphisms(da, 3).size() == kac_classes(folded_datum(da), 3).size());
  for (const auto& x : classify_automorphisms(da, 3))
    if (is_zero(x.lambda)) CHECK(x.sigma() == "tau");
  for (const auto& x : classify_automorphisms(diagram_automorphism(a1, 1), 2))
    if (is_zero(x.lambda)) CHECK(x.sigma() == "id");

  for (const Case& c : twisted_h1::testing::all_cases(6)) {
    const auto da2 = c.automorphism(Isogeny::adjoint);
    const auto fd = folded_datum(da2);
    for (int k = 1; k <= 3; ++k) {
      const int m = c.r * k;
      const auto descs = classify_automorphisms(da2, m);
      CAPTURE(c.name());
      CHECK(descs.size() == kac_classes(fd, m).size());
      for (const auto& x : descs) {
        RatVec point(x.lambda.size());
        // lambda = (m / r) x for the alcove point x.
        for (std::size_t i = 0; i < point.size(); ++i) point[i] = Rational(x.lambda[i] * c.r, m);
        CHECK(in_alcove(fd, point));
        REQUIRE(x.kac.has_value());
        CHECK(alcove_to_kac(fd, m, point) == *x.kac);
        CHECK(x.lambda_ambient == to_ambient(fd, x.lambda));
      }
    }
  }
}

TEST_CASE("parahoric descriptors") {
  const auto fd = folded(Family::A, 3, 2, Isogeny::simply_connected);
  const auto zero = parahoric_descriptor(fd, {Rational(0), Rational(0)});
  CHECK(zero.m_min == 1);
  CHECK(zero.lambda == IntVec{0, 0});
  CHECK(zero.descriptor.sigma() == "tau");

  // theta = alpha_2^vee / 2 in invariant coordinates (A, B) = (0, 1/2).
  const auto p = parahoric_descriptor(fd, {Rational(0), Rational(1, 2)});
  CHECK(p.m_min == 2);
  CHECK(p.lambda == IntVec{0, 1});
  CHECK(to_ambient(fd, p.lambda) == IntVec{0, 1, 0});
  CHECK(in_alcove(fd, p.alcove_point));
  CHECK(p.descriptor.m == 2);
  CHECK(to_rational(p.descriptor.lambda) == scale(p.alcove_point, Rational(2)));

  std::mt19937 rng(7);
  for (const Case& c : twisted_h1::testing::all_cases(6)) {
    const auto fd2 = folded_datum(c.automorphism(Isogeny::simply_connected));
    for (int trial = 0; trial < 10; ++trial) {
      const RatVec theta = random_point(rng, fd2.rank());
      const auto pd = parahoric_descriptor(fd2, theta);
      std::int64_t den = 1;
      for (const auto& t : theta) den = lcm64(den, t.den());
      CHECK(pd.m_min == den);
      CHECK(to_rational(pd.lambda) == scale(theta, Rational(den)));
      CHECK(pd.alcove_point == reduce_to_alcove(fd2, theta).point);
      // M-translations keep denominators, so the reduced point has the same m_min.
      std::int64_t den2 = 1;
      for (const auto& t : pd.alcove_point) den2 = lcm64(den2, t.den());
      CHECK(den2 == den);
    }
  }
}
