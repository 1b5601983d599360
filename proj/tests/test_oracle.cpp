#include <cstdlib>

#include "doctest.h"
#include "test_support.hpp"
#include "twisted_h1/cohomology.hpp"
#include "twisted_h1/error.hpp"
#include "twisted_h1/oracle.hpp"

using namespace twisted_h1;
using twisted_h1::testing::Case;

namespace {

DiagramAutomorphism automorphism(Family f, int n, Isogeny iso, int r) {
  return diagram_automorphism(RootDatum({f, n}, iso), r);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

}  // namespace

TEST_CASE("brute force examples") {
  const auto a1 = automorphism(Family::A, 1, Isogeny::simply_connected, 1);
  const auto t = brute_force_h1_torus(a1, 2);
  CHECK(t.classes.size() == 2);
  CHECK(t.cocycles == 2);
  CHECK(t.coboundaries == 1);
  CHECK(brute_force_h1_group(a1, 5) == 3);
  CHECK(brute_force_h1_torus(a1, 1).classes.size() == 1);

  const auto a3 = automorphism(Family::A, 3, Isogeny::simply_connected, 2);
  const auto t3 = brute_force_h1_torus(a3, 2);
  CHECK(t3.classes.size() == 2);
  CHECK(t3.cocycles * 1 == t3.coboundaries * 2);
  CHECK(brute_force_h1_group(a3, 2) == 2);
  CHECK(brute_force_h1_group(automorphism(Family::A, 4, Isogeny::simply_connected, 2), 2) == 1);

  try {
    brute_force_h1_torus(a3, 3);
    FAIL("expected IncompatibleOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incompatible_order);
  }
  setenv("TWISTED_H1_ENUM_CAP", "100", 1);
  try {
    brute_force_h1_torus(a3, 6);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::too_large);
  }
  unsetenv("TWISTED_H1_ENUM_CAP");
}

TEST_CASE("invariant Weyl generators") {
  // Longest elements of the tau-stable parabolics commute with tau and are involutions.
  for (const Case& c : twisted_h1::testing::all_cases(8))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da = c.automorphism(iso);
      CAPTURE(c.name());
      for (const auto& w : invariant_weyl_generators(da)) {
        CHECK(w.compose(da.lattice_action) == da.lattice_action.compose(w));
        CHECK(w.compose(w) == LatticeMap::identity(w.dimension()));
      }
    }
}

TEST_CASE("brute force agrees with the lattice computation on the grid") {
  for (const Case& c : twisted_h1::testing::all_cases(4))
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint})
      for (int m = c.r; m <= 6; m += c.r) {
        if (ipow(static_cast<std::uint64_t>(m), c.rank) > 10'000'000) continue;
        const auto da = c.automorphism(iso);
        CAPTURE(c.name());
        CAPTURE(std::string(to_string(iso)));
        CAPTURE(m);
        const auto t = brute_force_h1_torus(da, m);
        CHECK(t.classes.size() == h1_torus(da, m).cardinality());
        CHECK(t.cocycles == t.coboundaries * t.classes.size());
        CHECK(brute_force_h1_group(da, m) == h1_group(da, m).cardinality());
      }
}

TEST_CASE("brute force on larger twisted cases") {
  struct Row {
    Family f;
    int n, r, m;
  };
  const std::vector<Row> rows{{Family::A, 5, 2, 4}, {Family::D, 5, 2, 2}, {Family::D, 5, 2, 4}, {Family::E, 6, 2, 2},
                              {Family::D, 6, 2, 2}, {Family::A, 6, 2, 4}, {Family::A, 7, 2, 2}, {Family::D, 4, 3, 6}};
  for (const auto& [f, n, r, m] : rows)
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto da = automorphism(f, n, iso, r);
      CAPTURE(da.base.name());
      CAPTURE(m);
      CHECK(brute_force_h1_torus(da, m).classes.size() == h1_torus(da, m).cardinality());
      CHECK(brute_force_h1_group(da, m) == h1_group(da, m).cardinality());
    }
}
