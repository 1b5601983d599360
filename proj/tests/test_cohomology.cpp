#include <cstdlib>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "twisted_h1/cohomology.hpp"
#include "twisted_h1/error.hpp"

using namespace twisted_h1;
using twisted_h1::testing::Case;

namespace {

DiagramAutomorphism automorphism(Family f, int n, Isogeny iso, int r) {
  return diagram_automorphism(RootDatum({f, n}, iso), r);
}

const Isogeny sc = Isogeny::simply_connected;

struct ScopedCap {
  explicit ScopedCap(const char* value) { setenv("TWISTED_H1_ENUM_CAP", value, 1); }
  ~ScopedCap() { unsetenv("TWISTED_H1_ENUM_CAP"); }
};

}  // namespace

TEST_CASE("torus cohomology examples") {
  CHECK(h1_torus(automorphism(Family::A, 3, sc, 2), 2).invariant_factors() == IntVec{2});
  CHECK(h1_torus(automorphism(Family::A, 2, sc, 2), 2).cardinality() == 1);
  CHECK(h1_torus(automorphism(Family::D, 4, sc, 3), 3).invariant_factors() == IntVec{3});
  CHECK(h1_torus(automorphism(Family::A, 3, sc, 2), 4).invariant_factors() == IntVec{2, 4});
  CHECK(h1_torus(automorphism(Family::E, 6, sc, 2), 2).invariant_factors() == IntVec{2, 2});
  for (const Case& c : twisted_h1::testing::all_cases(8)) {
    if (c.r != 1) continue;
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(c.name());
      CHECK(h1_torus(c.automorphism(sc), m).invariant_factors() == IntVec(static_cast<std::size_t>(m > 1 ? c.rank : 0), m));
    }
  }
  try {
    h1_torus(automorphism(Family::A, 3, sc, 2), 3);
    FAIL("expected IncompatibleOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incompatible_order);
  }
}

TEST_CASE("torus cohomology through the averaging operator") {
  // X^tau / N_{tau,m}(X) equals (1/m) X^tau / Av_tau(X) scaled by m.
  for (const Case& c : twisted_h1::testing::all_cases(7))
    for (auto iso : {sc, Isogeny::adjoint}) {
      const auto da = c.automorphism(iso);
      const auto fd = folded_datum(da);
      const auto av = averaging(da);
      for (int k = 1; k <= 3; ++k) {
        const int m = c.r * k;
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < av.numerator.cols(); ++i) {
          RatVec img = scale(av.apply(twisted_h1::testing::unit(av.numerator.cols(), i)), Rational(m));
          gens.push_back(to_invariant_coordinates(fd, to_integral(img)));
        }
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < fd.rank(); ++i) basis.push_back(twisted_h1::testing::unit(fd.rank(), i));
        CAPTURE(c.name());
        CHECK(quotient(basis, gens).invariant_factors() == h1_torus(da, m).invariant_factors());
      }
    }
}

TEST_CASE("cohomology set examples") {
  const auto a3 = automorphism(Family::A, 3, sc, 2);
  const auto set = h1_group(a3, 2);
  REQUIRE(set.cardinality() == 2);
  CHECK(set.provenance == Method::orbit);
  REQUIRE(set.cross_check.has_value());
  CHECK(set.cross_check->first == Method::alcove);
  CHECK(set.cross_check->second == 2);
  CHECK(representative_coweight(set.classes[0]) == std::make_pair(IntVec{0, 0, 0}, 2));
  CHECK(representative_coweight(set.classes[1]) == std::make_pair(IntVec{0, 1, 0}, 2));

  CHECK(h1_group(a3, 4).cardinality() == 4);
  CHECK(h1_group(automorphism(Family::A, 1, sc, 1), 5).cardinality() == 3);
  CHECK(h1_group(automorphism(Family::A, 4, sc, 2), 2).cardinality() == 1);
  CHECK(h1_group(automorphism(Family::A, 5, sc, 2), 2).cardinality() == 2);
  CHECK(h1_group(automorphism(Family::A, 5, sc, 2), 6).cardinality() == 8);
  CHECK(h1_group(automorphism(Family::D, 4, sc, 3), 3).cardinality() == 2);

  CHECK(parse_method("auto") == Method::automatic);
  CHECK(to_string(Method::kac) == "kac");
  CHECK_THROWS_AS(parse_method("fastest"), Error);
}

TEST_CASE("method availability") {
  auto expect = [](const DiagramAutomorphism& da, Method m) {
    try {
      h1_group(da, da.order, m);
      FAIL("expected MethodUnavailable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::method_unavailable);
    }
  };
  expect(automorphism(Family::A, 3, sc, 2), Method::kac);
  expect(automorphism(Family::A, 3, Isogeny::adjoint, 2), Method::alcove);
}

TEST_CASE("orbit, alcove and Kac methods agree class by class") {
  for (const Case& c : twisted_h1::testing::all_cases(6))
    for (auto iso : {sc, Isogeny::adjoint})
      for (int k = 1; k <= (c.rank <= 4 ? 4 : 2); ++k) {
        const int m = c.r * k;
        const auto da = c.automorphism(iso);
        const auto fd = folded_datum(da);
        CAPTURE(c.name());
        CAPTURE(std::string(to_string(iso)));
        CAPTURE(m);
        const auto orbit = h1_group(da, m, Method::orbit);
        const auto other = h1_group(da, m, iso == sc ? Method::alcove : Method::kac);
        REQUIRE(orbit.cardinality() == other.cardinality());

        // Each alcove / Kac representative lands in a distinct W^tau-orbit.
        std::set<std::size_t> hit;
        for (const auto& cls : other.classes) hit.insert(classify_torus_element(da, orbit, cls.lambda));
        CHECK(hit.size() == orbit.cardinality());

        // Orbit sizes partition the torus cohomology.
        std::uint64_t total = 0;
        for (const auto& cls : orbit.classes) total += cls.orbit_size;
        CHECK(total == h1_torus(da, m).cardinality());

        for (const auto& cls : orbit.classes) {
          CHECK(cls.lambda_ambient == to_ambient(fd, cls.lambda));
          for (auto x : cls.lambda) CHECK((x >= 0 && x < m));
        }
        for (const auto& cls : other.classes) REQUIRE(cls.alcove_point.has_value());
      }
}

TEST_CASE("the folded Weyl group preserves the norm image") {
  for (const Case& c : twisted_h1::testing::all_cases(7))
    for (auto iso : {sc, Isogeny::adjoint})
      for (int k = 1; k <= 3; ++k) {
        const auto da = c.automorphism(iso);
        const auto fd = folded_datum(da);
        const auto group = h1_torus(da, c.r * k);
        CAPTURE(c.name());
        for (const auto& w : fd.weyl_generators)
          for (const auto& rel : group.relations())
            CHECK_NOTHROW(coordinates_in_basis(group.relations(), w.apply(rel)));
      }
}

TEST_CASE("enumeration cap") {
  const auto da = automorphism(Family::A, 3, sc, 2);
  {
    ScopedCap cap("3");
    try {
      h1_group(da, 4, Method::orbit);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::too_large);
    }
    // auto falls back to the alcove method.
    const auto set = h1_group(da, 4);
    CHECK(set.provenance == Method::alcove);
    CHECK(set.cardinality() == 4);
    CHECK_FALSE(set.cross_check.has_value());
  }
  CHECK(h1_group(da, 4, Method::orbit).cardinality() == 4);
}
