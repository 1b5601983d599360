#include "twisted_h1/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "twisted_h1/config.hpp"
#include "twisted_h1/error.hpp"

namespace twisted_h1 {

std::vector<LatticeMap> invariant_weyl_generators(const DiagramAutomorphism& da) {
  const RootDatum& d = da.base;
  const auto n = static_cast<std::size_t>(d.rank());
  std::vector<LatticeMap> out;
  // Orbits are recomputed from the permutation; da.orbits only fixes the order.
  for (const auto& listed : da.orbits) {
    std::vector<std::size_t> orbit;
    auto j = static_cast<std::size_t>(listed.front());
    do {
      orbit.push_back(j);
      j = static_cast<std::size_t>(da.node_permutation[j]);
    } while (j != static_cast<std::size_t>(listed.front()));
    bool connected = false;
    for (auto a : orbit)
      for (auto b : orbit)
        if (a != b && d.cartan()(a, b) != 0) connected = true;
    if (connected) {
      if (orbit.size() != 2) fail(ErrorKind::internal, "unexpected connected orbit");
      const LatticeMap sa = d.simple_reflection(orbit[0]), sb = d.simple_reflection(orbit[1]);
      out.push_back(sa.compose(sb).compose(sa));
    } else {
      LatticeMap w = LatticeMap::identity(n);
      for (auto a : orbit) w = w.compose(d.simple_reflection(a));
      out.push_back(w);
    }
  }
  return out;
}

namespace {

struct TorsionTorus {
  std::size_t rank;
  std::int64_t m;
  std::uint64_t size;

  IntVec decode(std::uint64_t index) const {
    IntVec t(rank);
    for (std::size_t j = rank; j-- > 0;) {
      t[j] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(m));
      index /= static_cast<std::uint64_t>(m);
    }
    return t;
  }
  std::uint64_t encode(const IntVec& t) const {
    std::uint64_t index = 0;
    for (auto x : t) index = index * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(mod_floor(x, m));
    return index;
  }
};

struct UnionFind {
  std::vector<std::uint64_t> parent;
  explicit UnionFind(std::uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::uint64_t{0}); }
  std::uint64_t find(std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

struct Enumeration {
  TorsionTorus torus;
  std::vector<bool> cocycle;
  UnionFind cosets;
};

Enumeration enumerate_torus(const DiagramAutomorphism& da, int m) {
  if (m < 1) fail(ErrorKind::invalid_input, "m must be positive");
  if (m % da.order != 0)
    fail(ErrorKind::incompatible_order, "tau has order " + std::to_string(da.order) +
                                            ", which does not divide m = " + std::to_string(m));
  const auto rank = static_cast<std::size_t>(da.base.rank());
  std::uint64_t size = 1;
  const std::uint64_t cap = enumeration_cap();
  for (std::size_t i = 0; i < rank; ++i) {
    size *= static_cast<std::uint64_t>(m);
    if (size > cap)
      fail(ErrorKind::too_large, "torsion torus of size " + std::to_string(m) + "^" + std::to_string(rank) +
                                     " exceeds the enumeration cap " + std::to_string(cap));
  }
  Enumeration e{TorsionTorus{rank, m, size}, std::vector<bool>(size), UnionFind(size)};

  const IntMatrix& tau = da.lattice_action.matrix();
  IntMatrix norm(rank, rank), power = IntMatrix::identity(rank);
  for (int k = 0; k < m; ++k) {
    norm = norm + power;
    power = tau * power;
  }
  std::vector<IntVec> coboundary_gens;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVec e_i(rank, 0);
    e_i[i] = 1;
    coboundary_gens.push_back(sub(e_i, tau.apply(e_i)));
  }
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const IntVec t = e.torus.decode(idx);
    const IntVec nt = norm.apply(t);
    e.cocycle[idx] = std::all_of(nt.begin(), nt.end(), [&](std::int64_t x) { return x % m == 0; });
    for (const auto& b : coboundary_gens) e.cosets.unite(idx, e.torus.encode(add(t, b)));
  }
  return e;
}

}  // namespace

BruteForceTorus brute_force_h1_torus(const DiagramAutomorphism& da, int m) {
  Enumeration e = enumerate_torus(da, m);
  BruteForceTorus out;
  const std::uint64_t zero_root = e.cosets.find(0);
  for (std::uint64_t idx = 0; idx < e.torus.size; ++idx) {
    if (e.cosets.find(idx) == zero_root) ++out.coboundaries;
    if (!e.cocycle[idx]) continue;
    ++out.cocycles;
    if (e.cosets.find(idx) == idx) out.classes.push_back(e.torus.decode(idx));
  }
  return out;
}

std::size_t brute_force_h1_group(const DiagramAutomorphism& da, int m) {
  Enumeration e = enumerate_torus(da, m);
  const auto gens = invariant_weyl_generators(da);
  for (std::uint64_t idx = 0; idx < e.torus.size; ++idx) {
    if (!e.cocycle[idx]) continue;
    const IntVec t = e.torus.decode(idx);
    for (const auto& w : gens) e.cosets.unite(idx, e.torus.encode(w.apply(t)));
  }
  std::set<std::uint64_t> roots;
  for (std::uint64_t idx = 0; idx < e.torus.size; ++idx)
    if (e.cocycle[idx]) roots.insert(e.cosets.find(idx));
  return roots.size();
}

}  // namespace twisted_h1
