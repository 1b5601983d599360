#pragma once

#include <cstdint>
#include <vector>

#include "twisted_h1/folding.hpp"

namespace twisted_h1 {

/// Element of T_m = X / mX, coordinates in [0, m).
using TorsionTorusElement = IntVec;

struct BruteForceTorus {
  std::uint64_t cocycles = 0;     // |Z^1|: t with N_{tau,m} t = 0
  std::uint64_t coboundaries = 0; // |(1 - tau) T_m|
  std::vector<TorsionTorusElement> classes;  // least element of each coset
};

/// Direct enumeration of H^1_tau(Z/m, T_m) inside T_m. Throws TooLarge when
/// m^rank exceeds the enumeration cap.
BruteForceTorus brute_force_h1_torus(const DiagramAutomorphism& da, int m);

/// Number of W^tau-orbits on the brute-force torus classes, with W^tau built
/// from ordinary simple reflections reduced mod m.
std::size_t brute_force_h1_group(const DiagramAutomorphism& da, int m);

/// Generators of W^tau on the full cocharacter lattice: for each tau-orbit of
/// simple nodes, the longest element of the parabolic subgroup it spans.
/// Listed in the order of da.orbits.
std::vector<LatticeMap> invariant_weyl_generators(const DiagramAutomorphism& da);

}  // namespace twisted_h1
