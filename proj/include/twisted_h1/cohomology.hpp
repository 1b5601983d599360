#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "twisted_h1/alcove.hpp"
#include "twisted_h1/folding.hpp"
#include "twisted_h1/lattice.hpp"

namespace twisted_h1 {

enum class Method { automatic, orbit, alcove, kac };

std::string_view to_string(Method m);
/// Accepts "auto", "orbit", "alcove", "kac".
Method parse_method(std::string_view text);

/// One class of H^1_tau(Z/m, G), represented by t = zeta_m^lambda, i.e. by
/// the rational coweight lambda / m.
struct CohomologyClass {
  IntVec lambda;          // invariant coordinates
  IntVec lambda_ambient;  // cocharacter coordinates
  int m = 1;
  std::uint64_t orbit_size = 0;          // torus classes in this W^tau-orbit (orbit method)
  std::optional<RationalCoweight> alcove_point;  // in A_{r/m} (alcove and kac methods)
  std::optional<KacCoordinates> kac;

  RationalCoweight coweight() const;  // lambda / m
};

struct CohomologySet {
  SimpleType type;
  Isogeny isogeny = Isogeny::simply_connected;
  int tau_order = 1;
  int m = 1;
  Method provenance = Method::orbit;
  std::vector<CohomologyClass> classes;
  /// Cardinality found by the second algorithm when `automatic` ran one.
  std::optional<std::pair<Method, std::size_t>> cross_check;

  std::size_t cardinality() const { return classes.size(); }
};

/// X^tau / N_{tau,m}(X), on the invariant basis.
FiniteAbelianGroup h1_torus(const DiagramAutomorphism& da, int m);

/// W^tau-orbits on h1_torus(da, m), or the alcove / Kac description.
CohomologySet h1_group(const DiagramAutomorphism& da, int m, Method method = Method::automatic);

/// (lambda, m) with class = [lambda / m], lambda in X^tau (ambient coordinates).
std::pair<IntVec, int> representative_coweight(const CohomologyClass& c);

/// Index of the W^tau-orbit of zeta_m^lambda inside an orbit-method set.
/// lambda is given in invariant coordinates.
std::size_t classify_torus_element(const DiagramAutomorphism& da, const CohomologySet& set, const IntVec& lambda);

}  // namespace twisted_h1
