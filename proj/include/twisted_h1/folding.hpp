#pragma once

#include <vector>

#include "twisted_h1/matrix.hpp"
#include "twisted_h1/root_data.hpp"

namespace twisted_h1 {

using Permutation = std::vector<int>;  // p[i] = image of i, 0-based

/// A Dynkin diagram automorphism of order r acting on the cocharacter
/// lattice by permuting the basis (simple coroots or fundamental coweights).
struct DiagramAutomorphism {
  RootDatum base;
  Permutation node_permutation;
  int order = 1;
  LatticeMap lattice_action;
  /// tau-orbits of simple nodes, in the Bourbaki order of the folded type.
  std::vector<std::vector<int>> orbits;
};

/// The canonical order-r automorphism in Bourbaki numbering. Throws
/// UnsupportedAutomorphism when the type has none of that order.
DiagramAutomorphism diagram_automorphism(const RootDatum& d, int r);

/// Saturated basis of the tau-fixed cocharacters, in ambient coordinates.
std::vector<IntVec> invariant_sublattice(const DiagramAutomorphism& da);

/// 1 + tau + ... + tau^{m-1}.
LatticeMap norm_operator(const DiagramAutomorphism& da, int m);
/// N_tau / r.
ScaledLatticeMap averaging(const DiagramAutomorphism& da);

/// Type of the fixed-point group G^tau.
SimpleType fixed_type(const SimpleType& type, int r);

struct FoldedDatum {
  SimpleType base_type;
  Isogeny isogeny = Isogeny::simply_connected;
  int tau_order = 1;
  SimpleType fixed_type;
  /// Basis of X^tau in ambient coordinates; all "invariant coordinates"
  /// below are coordinates on this basis.
  std::vector<IntVec> invariant_basis;
  std::vector<std::vector<int>> orbits;
  /// Folded simple roots, as functionals on invariant coordinates.
  std::vector<IntVec> simple_roots;
  /// Folded simple coroots, in invariant coordinates.
  std::vector<IntVec> simple_coroots;
  /// theta_0 as a functional on invariant coordinates.
  IntVec theta0;
  /// theta_0^vee in invariant coordinates.
  RatVec theta0_check;
  /// Hermite basis of M = span(W^tau . theta_0^vee), invariant coordinates.
  std::vector<IntVec> translation_lattice;
  /// a_0, ..., a_l' with a_0 = 1.
  IntVec kac_labels;
  /// Every element of the affine symmetry group, as permutations of the
  /// affine nodes 0..l'. The identity comes first.
  std::vector<Permutation> affine_symmetries;
  /// Folded simple reflections x -> x - beta_i(x) beta_i^vee, acting on
  /// invariant coordinates.
  std::vector<LatticeMap> weyl_generators;

  std::size_t rank() const { return simple_roots.size(); }
  /// Folded Cartan matrix <beta_i^vee, beta_j>.
  IntMatrix cartan() const;
};

FoldedDatum folded_datum(const DiagramAutomorphism& da);

/// Generators of W^tau on invariant coordinates (same as folded_datum(da).weyl_generators).
std::vector<LatticeMap> folded_weyl_generators(const DiagramAutomorphism& da);

/// Static Kac label table a_0..a_l' for X_N^(r), with the A_2l^(2) shift.
IntVec kac_labels(const SimpleType& type, int r);

/// Generators of the affine diagram symmetry group, before closure.
std::vector<Permutation> affine_symmetry_generators(const SimpleType& type, int r);

/// Group generated by permutations, identity first, remaining elements in
/// lexicographic order.
std::vector<Permutation> close_permutation_group(const std::vector<Permutation>& generators, std::size_t degree);

/// Invariant coordinates of an ambient vector lying in X^tau (NotInLattice otherwise).
IntVec to_invariant_coordinates(const FoldedDatum& fd, const IntVec& ambient);
IntVec to_ambient(const FoldedDatum& fd, const IntVec& invariant_coords);
RatVec to_ambient(const FoldedDatum& fd, const RatVec& invariant_coords);

/// The image N_tau(X) as a Hermite basis in invariant coordinates.
std::vector<IntVec> norm_image(const DiagramAutomorphism& da, const FoldedDatum& fd);

}  // namespace twisted_h1
