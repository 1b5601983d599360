#pragma once

#include <optional>
#include <vector>

#include "twisted_h1/folding.hpp"

namespace twisted_h1 {

/// Rational point on invariant coordinates.
using RationalCoweight = RatVec;
/// (s_0, ..., s_l') with sum a_i s_i = m / r.
using KacCoordinates = IntVec;

/// value(x) = constant + <linear, x>; the alcove is where all values are >= 0.
struct AffineInequality {
  int node = 0;  // affine node index, 0 is the theta_0 wall
  IntVec linear;
  std::int64_t constant = 0;

  Rational value(const RationalCoweight& x) const;
};

std::vector<AffineInequality> fundamental_alcove(const FoldedDatum& fd);
bool in_alcove(const FoldedDatum& fd, const RationalCoweight& x);

/// m / r, throwing IncompatibleOrder unless r divides m.
std::int64_t level(const FoldedDatum& fd, int m);

/// A_{r/m}: alcove points in (r/m) X^tau, ordered by their values on the
/// simple walls (descending lexicographic, matching Kac tuples).
std::vector<RationalCoweight> enumerate_alcove_points(const FoldedDatum& fd, int m);

struct AlcoveReduction {
  RationalCoweight point;  // in the alcove
  IntMatrix linear;        // element of W^tau on invariant coordinates
  IntVec translation;      // element of M, invariant coordinates
  std::vector<int> word;   // affine reflections applied, first to last
};

/// The alcove point equivalent to x under M semidirect W^tau, with the
/// witness point = linear * x + translation.
AlcoveReduction reduce_to_alcove(const FoldedDatum& fd, const RationalCoweight& x);

/// S_{r/m}, descending lexicographic order.
std::vector<KacCoordinates> enumerate_kac_coordinates(const FoldedDatum& fd, int m);
/// Lexicographically least tuple in the orbit of s under the affine symmetries.
KacCoordinates canonical_kac(const FoldedDatum& fd, const KacCoordinates& s);
/// S_{r/m} modulo affine symmetries; adjoint only. Descending lexicographic
/// order of the canonical representatives.
std::vector<KacCoordinates> kac_classes(const FoldedDatum& fd, int m);

KacCoordinates alcove_to_kac(const FoldedDatum& fd, int m, const RationalCoweight& x);
RationalCoweight kac_to_alcove(const FoldedDatum& fd, int m, const KacCoordinates& s);

/// sigma = tau o Ad(t), t = zeta_m^lambda.
struct AutomorphismDescriptor {
  SimpleType type;
  Isogeny isogeny = Isogeny::adjoint;
  int tau_order = 1;
  int m = 1;
  IntVec lambda;          // invariant coordinates
  IntVec lambda_ambient;  // cocharacter coordinates
  std::optional<KacCoordinates> kac;

  /// Human readable form, e.g. "tau o Ad(zeta_4^(0,1))".
  std::string sigma() const;
};

/// One descriptor per Kac class, computed on the adjoint datum of da's type.
/// Each uses the lexicographically largest tuple of its class.
std::vector<AutomorphismDescriptor> classify_automorphisms(const DiagramAutomorphism& da, int m);

struct ParahoricDescriptor {
  int m_min = 1;
  IntVec lambda;  // m_min * theta, invariant coordinates
  AutomorphismDescriptor descriptor;  // lambda / m_min reduced into the alcove
  RationalCoweight alcove_point;
};

ParahoricDescriptor parahoric_descriptor(const FoldedDatum& fd, const RationalCoweight& theta);

}  // namespace twisted_h1
