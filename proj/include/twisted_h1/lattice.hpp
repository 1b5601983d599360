#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twisted_h1/matrix.hpp"

namespace twisted_h1 {

/// Row-style Hermite normal form of the lattice spanned by `generators`:
/// nonzero rows only, echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). Canonical for the spanned lattice.
std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& generators, std::size_t dimension);

/// Saturated integer basis of {x : m x = 0}, in Hermite normal form.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

/// Coordinates of `v` on the linearly independent vectors `basis`.
/// Throws NotInLattice when v is outside their integer span, or outside the
/// rational span altogether.
IntVec coordinates_in_basis(const std::vector<IntVec>& basis, const IntVec& v);
std::optional<RatVec> rational_coordinates(const std::vector<IntVec>& basis, const RatVec& v);

struct SmithForm {
  IntVec diagonal;          // d_1 | d_2 | ..., zeros last
  IntMatrix column_op;      // V with U A V = D
  IntMatrix column_op_inv;  // V^{-1}
};

/// Smith normal form of an integer matrix; arbitrary precision internally.
SmithForm smith_normal_form(const IntMatrix& a);

/// One element of a FiniteAbelianGroup.
struct QuotientElement {
  IntVec coordinates;     // on the invariant-factor generators, each in [0, d_i)
  IntVec representative;  // canonical lift on the ambient basis (Hermite-reduced)
  IntVec ambient;         // the same lift in ambient lattice coordinates

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.coordinates == b.coordinates;
  }
};

/// Finite quotient L / M of a lattice L (given by a basis) by a full-rank
/// sublattice M. Invariant factors equal to 1 are stripped.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup(std::vector<IntVec> ambient_basis, const std::vector<IntVec>& sublattice_generators);

  const IntVec& invariant_factors() const { return factors_; }
  std::uint64_t cardinality() const { return cardinality_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& ambient_basis() const { return basis_; }
  /// Lifts of the invariant-factor generators, in ambient coordinates.
  const std::vector<IntVec>& lift_basis() const { return lifts_; }
  /// Hermite basis of the sublattice, in coordinates on the ambient basis.
  const std::vector<IntVec>& relations() const { return hnf_; }

  /// Class of a vector given in coordinates on the ambient basis.
  QuotientElement element_from_coordinates(const IntVec& basis_coords) const;
  /// Class of a vector given in ambient lattice coordinates.
  QuotientElement element(const IntVec& ambient_vector) const;

  /// Hermite-reduced representative: coordinate j lies in [0, h_jj).
  IntVec reduce(IntVec basis_coords) const;

  /// Mixed-radix index in [0, cardinality) of a reduced representative, and
  /// its inverse. Index order equals lexicographic order of representatives.
  std::uint64_t index_of(const IntVec& reduced) const;
  IntVec representative_at(std::uint64_t index) const;

  /// All elements in lexicographic order of their representatives.
  /// Throws TooLarge beyond `cap` (default: enumeration_cap()).
  std::vector<QuotientElement> enumerate(std::optional<std::uint64_t> cap = std::nullopt) const;

  std::string to_string() const;  // e.g. "Z/4 x Z/2", "0" when trivial

 private:
  std::vector<IntVec> basis_;
  std::vector<IntVec> hnf_;
  IntVec factors_;
  std::vector<std::size_t> kept_;  // positions of nontrivial Smith factors
  IntMatrix v_;
  std::vector<IntVec> lifts_;
  std::uint64_t cardinality_ = 1;
};

inline FiniteAbelianGroup quotient(std::vector<IntVec> ambient_basis, const std::vector<IntVec>& sublattice_generators) {
  return FiniteAbelianGroup(std::move(ambient_basis), sublattice_generators);
}

}  // namespace twisted_h1
