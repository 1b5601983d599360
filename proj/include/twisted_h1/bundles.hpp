#pragma once

#include <string>
#include <vector>

#include "twisted_h1/cohomology.hpp"

namespace twisted_h1 {

/// A ramified orbit of the Gamma-action on the curve: stabilizer Z/m acting
/// on G through the diagram automorphism of order tau_order.
struct RamifiedOrbit {
  int m = 2;
  int tau_order = 1;
};

/// Base genus plus ramified orbits, all for the same simple type.
struct CoveringData {
  int genus = 0;
  SimpleType type;
  std::vector<RamifiedOrbit> orbits;

  /// Throws InvalidInput unless genus >= 0, every m >= 2 and tau_order | m.
  void validate() const;
};

/// {"genus": g, "orbits": [{"m": .., "type": "A", "rank": 3, "tau_order": 2}, ...]}
/// Every orbit must name the same type and rank.
CoveringData parse_covering(const std::string& json_text);
std::string covering_to_json(const CoveringData& cd);

struct CoveringVerdict {
  bool exists = true;
  std::string reason;
};

/// Whether a Galois covering of a genus-g curve with these ramification
/// indices exists.
CoveringVerdict covering_exists(int genus, const std::vector<int>& indices);

/// One cohomology set per ramified orbit.
std::vector<CohomologySet> local_type_sets(const CoveringData& cd, Isogeny isogeny);

/// Product of the local type counts; simply connected only.
std::uint64_t component_count(const CoveringData& cd, Isogeny isogeny = Isogeny::simply_connected);

/// Canonical label of the component with the chosen local types
/// (assignment[i] indexes local_type_sets(...)[i].classes).
std::string bundle_label(const CoveringData& cd, const std::vector<CohomologySet>& sets,
                         const std::vector<std::size_t>& assignment);

}  // namespace twisted_h1
