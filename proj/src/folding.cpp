#include "twisted_h1/folding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "twisted_h1/error.hpp"
#include "twisted_h1/lattice.hpp"

namespace twisted_h1 {

namespace {

[[noreturn]] void unsupported(const SimpleType& t, int r) {
  fail(ErrorKind::unsupported_automorphism,
       "type " + t.to_string() + " has no diagram automorphism of order " + std::to_string(r));
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::vector<int>> permutation_orbits(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

int permutation_order(const Permutation& p) {
  int order = 1;
  for (const auto& o : permutation_orbits(p)) order = std::lcm(order, static_cast<int>(o.size()));
  return order;
}

}  // namespace

DiagramAutomorphism diagram_automorphism(const RootDatum& d, int r) {
  const SimpleType& t = d.type();
  const int n = t.rank;
  Permutation p = identity_permutation(static_cast<std::size_t>(n));
  if (r == 2 && t.family == Family::A && n >= 2) {
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
  } else if (r == 2 && t.family == Family::D) {
    std::swap(p[static_cast<std::size_t>(n - 2)], p[static_cast<std::size_t>(n - 1)]);
  } else if (r == 2 && t.family == Family::E && n == 6) {
    p = {5, 1, 4, 3, 2, 0};
  } else if (r == 3 && t.family == Family::D && n == 4) {
    p = {2, 1, 3, 0};
  } else if (r != 1) {
    unsupported(t, r);
  }

  const auto& a = d.cartan();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (a(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j])) != a(i, j))
        fail(ErrorKind::internal, "node permutation does not preserve the Cartan matrix");
  if (permutation_order(p) != r) fail(ErrorKind::internal, "node permutation has the wrong order");

  IntMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;

  auto orbits = permutation_orbits(p);
  std::sort(orbits.begin(), orbits.end());
  if (r == 2 && t.family == Family::E) {
    // F4 numbering: the two fixed nodes carry the long roots.
    orbits = {{1}, {3}, {2, 4}, {0, 5}};
  }
  return DiagramAutomorphism{d, std::move(p), r, LatticeMap(std::move(m)), std::move(orbits)};
}

std::vector<IntVec> invariant_sublattice(const DiagramAutomorphism& da) {
  const std::size_t n = da.lattice_action.dimension();
  return integer_kernel(da.lattice_action.matrix() - IntMatrix::identity(n));
}

LatticeMap norm_operator(const DiagramAutomorphism& da, int m) {
  if (m < 1) fail(ErrorKind::invalid_input, "m must be positive");
  const std::size_t n = da.lattice_action.dimension();
  IntMatrix sum(n, n);
  IntMatrix power = IntMatrix::identity(n);
  for (int k = 0; k < m; ++k) {
    sum = sum + power;
    power = da.lattice_action.matrix() * power;
  }
  return LatticeMap(sum);
}

ScaledLatticeMap averaging(const DiagramAutomorphism& da) {
  return ScaledLatticeMap{norm_operator(da, da.order).matrix(), da.order};
}

SimpleType fixed_type(const SimpleType& type, int r) {
  type.validate();
  const int n = type.rank;
  if (r == 1) return type;
  if (r == 2 && type.family == Family::A && n >= 2) {
    if (n % 2 == 1) return {Family::C, (n + 1) / 2};
    return n == 2 ? SimpleType{Family::A, 1} : SimpleType{Family::B, n / 2};
  }
  if (r == 2 && type.family == Family::D) return {Family::B, n - 1};
  if (r == 2 && type.family == Family::E && n == 6) return {Family::F, 4};
  if (r == 3 && type.family == Family::D && n == 4) return {Family::G, 2};
  unsupported(type, r);
}

IntVec kac_labels(const SimpleType& type, int r) {
  const SimpleType ft = fixed_type(type, r);
  const int l = ft.rank;
  IntVec a(static_cast<std::size_t>(l) + 1, 1);
  auto set = [&](std::initializer_list<std::int64_t> tail) { std::copy(tail.begin(), tail.end(), a.begin() + 1); };
  auto fill = [&](int from, int to, std::int64_t v) {  // 1-based inclusive
    for (int i = from; i <= to; ++i) a[static_cast<std::size_t>(i)] = v;
  };
  if (r == 1) {
    switch (type.family) {
      case Family::A: break;
      case Family::B: fill(2, l, 2); break;
      case Family::C: fill(1, l - 1, 2); break;
      case Family::D: fill(2, l - 2, 2); break;
      case Family::E:
        if (l == 6) set({1, 2, 2, 3, 2, 1});
        if (l == 7) set({2, 2, 3, 4, 3, 2, 1});
        if (l == 8) set({2, 3, 4, 6, 5, 4, 3, 2});
        break;
      case Family::F: set({2, 3, 4, 2}); break;
      case Family::G: set({3, 2}); break;
    }
    return a;
  }
  if (type.family == Family::A && type.rank % 2 == 1) {
    fill(2, l - 1, 2);  // A_{2l-1}^(2)
  } else if (type.family == Family::A) {
    fill(1, l, 2);  // A_{2l}^(2), labels shifted by one vertex
  } else if (type.family == Family::D && r == 2) {
    // D_{l+1}^(2): all ones
  } else if (type.family == Family::E) {
    set({1, 2, 3, 2});
  } else {
    set({2, 1});  // D_4^(3)
  }
  return a;
}

std::vector<Permutation> affine_symmetry_generators(const SimpleType& type, int r) {
  const SimpleType ft = fixed_type(type, r);
  const int l = ft.rank;
  const auto size = static_cast<std::size_t>(l) + 1;
  auto transpositions = [&](std::initializer_list<std::pair<int, int>> swaps) {
    Permutation p = identity_permutation(size);
    for (auto [i, j] : swaps) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return p;
  };
  auto reversal = [&](int from) {  // i -> l - i on {from..l-from}
    Permutation p = identity_permutation(size);
    for (int i = from; i <= l - from; ++i) p[static_cast<std::size_t>(i)] = l - i;
    return p;
  };
  if (r == 1) {
    switch (type.family) {
      case Family::A: {
        Permutation p(size);
        for (std::size_t i = 0; i < size; ++i) p[i] = static_cast<int>((i + 1) % size);
        return {p};
      }
      case Family::B: return {transpositions({{0, 1}})};
      case Family::C: return {reversal(0)};
      case Family::D: {
        std::vector<Permutation> gens{transpositions({{0, 1}, {l - 1, l}})};
        if (l % 2 == 0) {
          gens.push_back(reversal(0));
        } else {
          Permutation p = reversal(2);
          p[0] = l;
          p[static_cast<std::size_t>(l)] = 1;
          p[1] = l - 1;
          p[static_cast<std::size_t>(l - 1)] = 0;
          gens.push_back(p);
        }
        return gens;
      }
      case Family::E:
        if (l == 6) return {Permutation{1, 6, 3, 5, 4, 2, 0}};
        if (l == 7) return {transpositions({{0, 7}, {1, 6}, {3, 5}})};
        return {};
      case Family::F:
      case Family::G: return {};
    }
  }
  if (type.family == Family::A && type.rank % 2 == 1) return {transpositions({{0, 1}})};
  if (type.family == Family::D && r == 2) return {reversal(0)};
  return {};
}

std::vector<Permutation> close_permutation_group(const std::vector<Permutation>& generators, std::size_t degree) {
  std::set<Permutation> group{identity_permutation(degree)};
  std::deque<Permutation> queue(group.begin(), group.end());
  while (!queue.empty()) {
    const Permutation g = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation h(degree);
      for (std::size_t i = 0; i < degree; ++i) h[i] = s[static_cast<std::size_t>(g[i])];
      if (group.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {group.begin(), group.end()};  // the identity is lexicographically least
}

IntVec to_invariant_coordinates(const FoldedDatum& fd, const IntVec& ambient) {
  return coordinates_in_basis(fd.invariant_basis, ambient);
}

IntVec to_ambient(const FoldedDatum& fd, const IntVec& coords) {
  if (coords.size() != fd.rank())
    fail(ErrorKind::internal, "to_ambient: expected " + std::to_string(fd.rank()) + " invariant coordinates, got " +
                                  std::to_string(coords.size()));
  IntVec out(fd.invariant_basis.empty() ? 0 : fd.invariant_basis.front().size(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) out = add(out, scale(fd.invariant_basis[k], coords[k]));
  return out;
}

RatVec to_ambient(const FoldedDatum& fd, const RatVec& coords) {
  if (coords.size() != fd.rank())
    fail(ErrorKind::internal, "to_ambient: expected " + std::to_string(fd.rank()) + " invariant coordinates, got " +
                                  std::to_string(coords.size()));
  RatVec out(fd.invariant_basis.empty() ? 0 : fd.invariant_basis.front().size(), Rational(0));
  for (std::size_t k = 0; k < coords.size(); ++k)
    out = add(out, scale(to_rational(fd.invariant_basis[k]), coords[k]));
  return out;
}

IntMatrix FoldedDatum::cartan() const {
  const std::size_t n = rank();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dot(simple_coroots[i], simple_roots[j]);
  return a;
}

FoldedDatum folded_datum(const DiagramAutomorphism& da) {
  const RootDatum& d = da.base;
  FoldedDatum fd;
  fd.base_type = d.type();
  fd.isogeny = d.isogeny();
  fd.tau_order = da.order;
  fd.fixed_type = fixed_type(d.type(), da.order);
  fd.invariant_basis = invariant_sublattice(da);
  fd.orbits = da.orbits;
  const std::size_t k = fd.invariant_basis.size();

  for (const auto& orbit : fd.orbits) {
    const auto j = static_cast<std::size_t>(orbit.front());
    IntVec beta(k);
    for (std::size_t b = 0; b < k; ++b) beta[b] = dot(fd.invariant_basis[b], d.simple_roots()[j]);
    IntVec c(static_cast<std::size_t>(d.rank()), 0);
    for (int i : orbit) c = add(c, d.simple_coroots()[static_cast<std::size_t>(i)]);
    // 2c / <c, alpha_j>: the orbit sum, doubled when the orbit is an edge.
    const std::int64_t pair = dot(c, d.simple_roots()[j]);
    if (pair != 1 && pair != 2) fail(ErrorKind::internal, "unexpected orbit shape in folding");
    fd.simple_roots.push_back(std::move(beta));
    fd.simple_coroots.push_back(to_invariant_coordinates(fd, scale(c, 2 / pair)));
  }
  if (fd.cartan() != cartan_matrix(fd.fixed_type))
    fail(ErrorKind::internal, "folded Cartan matrix does not match " + fd.fixed_type.to_string());

  const RootSystem folded(fd.cartan());
  const std::size_t top = da.order == 1 ? folded.highest_root() : folded.highest_short_root();
  const IntVec& root_coeffs = folded.roots()[top];
  const IntVec& coroot_coeffs = folded.coroots()[top];
  fd.theta0.assign(k, 0);
  IntVec theta_check(k, 0);
  for (std::size_t i = 0; i < fd.rank(); ++i) {
    fd.theta0 = add(fd.theta0, scale(fd.simple_roots[i], root_coeffs[i]));
    theta_check = add(theta_check, scale(fd.simple_coroots[i], coroot_coeffs[i]));
  }
  fd.theta0_check = to_rational(theta_check);
  const bool doubled = da.order == 2 && d.type().family == Family::A && d.rank() % 2 == 0;
  if (doubled) {
    fd.theta0 = scale(fd.theta0, 2);
    fd.theta0_check = scale(fd.theta0_check, Rational(1, 2));
  }

  for (std::size_t i = 0; i < fd.rank(); ++i) {
    IntMatrix s = IntMatrix::identity(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) s(r, c) -= fd.simple_coroots[i][r] * fd.simple_roots[i][c];
    fd.weyl_generators.emplace_back(std::move(s));
  }

  const IntVec start = to_integral(fd.theta0_check);
  std::set<IntVec> orbit{start};
  std::deque<IntVec> queue{start};
  while (!queue.empty()) {
    const IntVec x = queue.front();
    queue.pop_front();
    for (const auto& s : fd.weyl_generators) {
      IntVec y = s.apply(x);
      if (orbit.insert(y).second) queue.push_back(std::move(y));
    }
  }
  fd.translation_lattice = hermite_normal_form({orbit.begin(), orbit.end()}, k);

  fd.kac_labels = kac_labels(d.type(), da.order);
  fd.affine_symmetries =
      close_permutation_group(affine_symmetry_generators(d.type(), da.order), fd.rank() + 1);
  return fd;
}

std::vector<LatticeMap> folded_weyl_generators(const DiagramAutomorphism& da) {
  return folded_datum(da).weyl_generators;
}

std::vector<IntVec> norm_image(const DiagramAutomorphism& da, const FoldedDatum& fd) {
  const LatticeMap n = norm_operator(da, da.order);
  std::vector<IntVec> images;
  const auto dim = n.dimension();
  for (std::size_t i = 0; i < dim; ++i) images.push_back(to_invariant_coordinates(fd, n.matrix().column(i)));
  return hermite_normal_form(images, fd.invariant_basis.size());
}

}  // namespace twisted_h1
