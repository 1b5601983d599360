#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twisted_h1/matrix.hpp"

namespace twisted_h1 {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidRank with a family-specific message.
  void validate() const;
  std::string to_string() const;  // e.g. "A3"
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

char to_char(Family f);
Family parse_family(std::string_view text);

enum class Isogeny { simply_connected, adjoint };

std::string_view to_string(Isogeny iso);
/// Accepts "sc", "simply_connected", "adjoint", "ad".
Isogeny parse_isogeny(std::string_view text);

/// Cartan matrix in Bourbaki numbering, cartan(i, j) = <coroot_i, root_j>.
IntMatrix cartan_matrix(const SimpleType& type);

/// Order of the Weyl group from the closed-form product formulas.
std::uint64_t weyl_group_order(const SimpleType& type);

/// Abstract reduced root system generated from a Cartan matrix by reflection
/// closure. Roots and coroots are stored as coefficient vectors on the simple
/// roots and simple coroots respectively; roots[k] and coroots[k] pair up.
class RootSystem {
 public:
  explicit RootSystem(const IntMatrix& cartan);

  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& coroots() const { return coroots_; }
  std::size_t positive_count() const { return roots_.size() / 2; }

  /// Relative squared length, proportional to the invariant form.
  std::int64_t norm(const IntVec& root_coefficients) const;
  bool is_long(std::size_t index) const;
  bool simply_laced() const;

  std::size_t highest_root() const;
  std::size_t highest_short_root() const;

 private:
  IntMatrix cartan_;
  IntVec symmetrizer_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::int64_t max_norm_ = 0;
};

/// A root together with its coroot, in several coordinate systems.
struct Root {
  IntVec coefficients;         // on simple roots
  IntVec coroot_coefficients;  // on simple coroots
  IntVec functional;           // on the cocharacter lattice, ambient coordinates
  IntVec coroot;               // cocharacter, ambient coordinates
};

/// Root datum of a simple group in simply-connected or adjoint isogeny.
///
/// Cocharacter coordinates: simple coroots for simply connected, fundamental
/// coweights for adjoint. Roots are integer functionals on those
/// coordinates, so `pairing(coroot_i, root_j) == cartan(i, j)` in both cases.
class RootDatum {
 public:
  RootDatum(SimpleType type, Isogeny isogeny);

  const SimpleType& type() const { return type_; }
  Isogeny isogeny() const { return isogeny_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<IntVec>& simple_coroots() const { return coroots_; }
  const std::vector<IntVec>& simple_roots() const { return roots_; }
  const std::vector<RatVec>& fundamental_coweights() const { return coweights_; }
  const RootSystem& root_system() const { return system_; }

  static std::int64_t pairing(const IntVec& cocharacter, const IntVec& root) { return dot(cocharacter, root); }

  /// s_i(x) = x - <x, alpha_i> coroot_i on ambient coordinates.
  std::vector<LatticeMap> weyl_generators() const;
  LatticeMap simple_reflection(std::size_t i) const;

  Root root(std::size_t index) const;
  Root highest_root() const;
  Root highest_short_root() const;

  std::string name() const;  // e.g. "A3/sc"

 private:
  SimpleType type_;
  Isogeny isogeny_;
  IntMatrix cartan_;
  std::vector<std::string> labels_;
  std::vector<IntVec> coroots_;
  std::vector<IntVec> roots_;
  std::vector<RatVec> coweights_;
  RootSystem system_;
};

inline RootDatum build_root_datum(SimpleType type, Isogeny isogeny) { return RootDatum(type, isogeny); }

}  // namespace twisted_h1
