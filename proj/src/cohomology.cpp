#include "twisted_h1/cohomology.hpp"

#include <numeric>

#include "twisted_h1/config.hpp"
#include "twisted_h1/error.hpp"

namespace twisted_h1 {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::orbit: return "orbit";
    case Method::alcove: return "alcove";
    case Method::kac: return "kac";
  }
  return "auto";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "orbit") return Method::orbit;
  if (text == "alcove") return Method::alcove;
  if (text == "kac") return Method::kac;
  fail(ErrorKind::invalid_input, "unknown method '" + std::string(text) + "' (expected auto, orbit, alcove or kac)");
}

RationalCoweight CohomologyClass::coweight() const { return scale(to_rational(lambda), Rational(1, m)); }

std::pair<IntVec, int> representative_coweight(const CohomologyClass& c) { return {c.lambda_ambient, c.m}; }

namespace {

void check_order(const DiagramAutomorphism& da, int m) {
  if (m < 1) fail(ErrorKind::invalid_input, "m must be positive, got " + std::to_string(m));
  if (m % da.order != 0)
    fail(ErrorKind::incompatible_order, "tau has order " + std::to_string(da.order) +
                                            ", which does not divide m = " + std::to_string(m));
}

// Union-find over the torus classes, indexed in lexicographic order of their
// reduced representatives. Roots are always the least index of their set.
struct OrbitPartition {
  FiniteAbelianGroup group;
  std::vector<std::uint64_t> parent;

  std::uint64_t find(std::uint64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
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

OrbitPartition orbit_partition(const DiagramAutomorphism& da, const FoldedDatum& fd, int m) {
  OrbitPartition p{h1_torus(da, m), {}};
  const std::uint64_t n = p.group.cardinality();
  const std::uint64_t cap = enumeration_cap();
  if (n > cap)
    fail(ErrorKind::too_large,
         "torus cohomology has " + std::to_string(n) + " elements, above the enumeration cap " + std::to_string(cap));
  p.parent.resize(n);
  std::iota(p.parent.begin(), p.parent.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < n; ++i) {
    const IntVec x = p.group.representative_at(i);
    for (const auto& w : fd.weyl_generators) p.unite(i, p.group.index_of(p.group.reduce(w.apply(x))));
  }
  return p;
}

CohomologyClass make_class(const FoldedDatum& fd, int m, IntVec lambda) {
  CohomologyClass c;
  c.lambda_ambient = to_ambient(fd, lambda);
  c.lambda = std::move(lambda);
  c.m = m;
  return c;
}

CohomologySet by_orbits(const DiagramAutomorphism& da, const FoldedDatum& fd, int m) {
  OrbitPartition p = orbit_partition(da, fd, m);
  CohomologySet out;
  std::vector<std::size_t> slot(p.parent.size(), 0);
  for (std::uint64_t i = 0; i < p.parent.size(); ++i) {
    const std::uint64_t root = p.find(i);
    if (root == i) {
      slot[i] = out.classes.size();
      out.classes.push_back(make_class(fd, m, p.group.representative_at(i)));
    }
    ++out.classes[slot[root]].orbit_size;
  }
  return out;
}

CohomologySet by_alcove(const FoldedDatum& fd, int m) {
  if (fd.isogeny != Isogeny::simply_connected)
    fail(ErrorKind::method_unavailable, "the alcove method requires the simply connected isogeny");
  const std::int64_t q = level(fd, m);
  CohomologySet out;
  for (auto& x : enumerate_alcove_points(fd, m)) {
    CohomologyClass c = make_class(fd, m, to_integral(scale(x, Rational(q))));
    c.alcove_point = std::move(x);
    out.classes.push_back(std::move(c));
  }
  return out;
}

CohomologySet by_kac(const FoldedDatum& fd, int m) {
  if (fd.isogeny != Isogeny::adjoint)
    fail(ErrorKind::method_unavailable, "the kac method requires the adjoint isogeny");
  const std::int64_t q = level(fd, m);
  CohomologySet out;
  for (const auto& s : kac_classes(fd, m)) {
    RationalCoweight x = kac_to_alcove(fd, m, s);
    CohomologyClass c = make_class(fd, m, to_integral(scale(x, Rational(q))));
    c.alcove_point = std::move(x);
    c.kac = s;
    out.classes.push_back(std::move(c));
  }
  return out;
}

}  // namespace

FiniteAbelianGroup h1_torus(const DiagramAutomorphism& da, int m) {
  check_order(da, m);
  const LatticeMap n = norm_operator(da, m);
  std::vector<IntVec> images;
  for (std::size_t i = 0; i < n.dimension(); ++i) images.push_back(n.matrix().column(i));
  return quotient(invariant_sublattice(da), images);
}

CohomologySet h1_group(const DiagramAutomorphism& da, int m, Method method) {
  check_order(da, m);
  const FoldedDatum fd = folded_datum(da);
  const Method second = fd.isogeny == Isogeny::simply_connected ? Method::alcove : Method::kac;
  auto run = [&](Method which) {
    switch (which) {
      case Method::alcove: return by_alcove(fd, m);
      case Method::kac: return by_kac(fd, m);
      default: return by_orbits(da, fd, m);
    }
  };

  CohomologySet out;
  if (method != Method::automatic) {
    out = run(method);
    out.provenance = method;
  } else {
    try {
      out = run(Method::orbit);
      out.provenance = Method::orbit;
      const std::size_t other = run(second).cardinality();
      out.cross_check = std::make_pair(second, other);
      if (other != out.cardinality())
        fail(ErrorKind::internal, "orbit method found " + std::to_string(out.cardinality()) + " classes but the " +
                                      std::string(to_string(second)) + " method found " + std::to_string(other));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::too_large) throw;
      out = run(second);
      out.provenance = second;
    }
  }
  out.type = da.base.type();
  out.isogeny = da.base.isogeny();
  out.tau_order = da.order;
  out.m = m;
  return out;
}

std::size_t classify_torus_element(const DiagramAutomorphism& da, const CohomologySet& set, const IntVec& lambda) {
  const FoldedDatum fd = folded_datum(da);
  OrbitPartition p = orbit_partition(da, fd, set.m);
  const auto root_of = [&](const IntVec& v) { return p.find(p.group.index_of(p.group.reduce(v))); };
  const std::uint64_t target = root_of(lambda);
  for (std::size_t i = 0; i < set.classes.size(); ++i)
    if (root_of(set.classes[i].lambda) == target) return i;
  fail(ErrorKind::internal, "torus element " + format_vector(lambda) + " matches no class of the set");
}

}  // namespace twisted_h1
