#include "twisted_h1/alcove.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "twisted_h1/error.hpp"
#include "twisted_h1/lattice.hpp"

namespace twisted_h1 {

namespace {

constexpr std::size_t kWalkBound = 1'000'000;

RatVec solve_simple_roots(const FoldedDatum& fd, const IntVec& values) {
  // x with beta_i(x) = values_i.
  const auto inv = rational_inverse(IntMatrix::from_rows(fd.simple_roots));
  RatVec x(inv.size(), Rational(0));
  for (std::size_t r = 0; r < inv.size(); ++r)
    for (std::size_t c = 0; c < values.size(); ++c) x[r] += inv[r][c] * Rational(values[c]);
  return x;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
}

void require_adjoint(const FoldedDatum& fd, const char* what) {
  if (fd.isogeny != Isogeny::adjoint)
    fail(ErrorKind::not_adjoint, std::string(what) + " requires the adjoint isogeny");
}

}  // namespace

Rational AffineInequality::value(const RationalCoweight& x) const {
  return Rational(constant) + dot(std::span<const Rational>(x), std::span<const std::int64_t>(linear));
}

std::vector<AffineInequality> fundamental_alcove(const FoldedDatum& fd) {
  std::vector<AffineInequality> out;
  out.push_back({0, scale(fd.theta0, -1), 1});
  for (std::size_t i = 0; i < fd.rank(); ++i) out.push_back({static_cast<int>(i) + 1, fd.simple_roots[i], 0});
  return out;
}

bool in_alcove(const FoldedDatum& fd, const RationalCoweight& x) {
  for (const auto& ineq : fundamental_alcove(fd))
    if (ineq.value(x) < Rational(0)) return false;
  return true;
}

std::int64_t level(const FoldedDatum& fd, int m) {
  if (m < 1) fail(ErrorKind::invalid_input, "m must be positive, got " + std::to_string(m));
  if (m % fd.tau_order != 0)
    fail(ErrorKind::incompatible_order, "tau has order " + std::to_string(fd.tau_order) +
                                            ", which does not divide m = " + std::to_string(m));
  return m / fd.tau_order;
}

std::vector<KacCoordinates> enumerate_kac_coordinates(const FoldedDatum& fd, int m) {
  const std::int64_t q = level(fd, m);
  const IntVec& a = fd.kac_labels;
  std::vector<KacCoordinates> out;
  KacCoordinates s(a.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == a.size()) {
      if (rest % a[i] != 0) return;
      s[i] = rest / a[i];
      out.push_back(s);
      return;
    }
    for (std::int64_t v = rest / a[i]; v >= 0; --v) {
      s[i] = v;
      rec(i + 1, rest - v * a[i]);
    }
  };
  rec(0, q);
  return out;
}

std::vector<RationalCoweight> enumerate_alcove_points(const FoldedDatum& fd, int m) {
  const std::int64_t q = level(fd, m);
  std::vector<RationalCoweight> out;
  for (const auto& s : enumerate_kac_coordinates(fd, m)) {
    const RatVec v = solve_simple_roots(fd, IntVec(s.begin() + 1, s.end()));
    if (is_integral(v)) out.push_back(scale(v, Rational(1, q)));
  }
  return out;
}

AlcoveReduction reduce_to_alcove(const FoldedDatum& fd, const RationalCoweight& x) {
  const std::size_t k = fd.invariant_basis.size();
  if (x.size() != k)
    fail(ErrorKind::invalid_input, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                       std::to_string(k));
  const IntVec theta_check = to_integral(fd.theta0_check);
  IntMatrix s0 = IntMatrix::identity(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) s0(r, c) -= theta_check[r] * fd.theta0[c];

  AlcoveReduction red{x, IntMatrix::identity(k), IntVec(k, 0), {}};
  for (std::size_t step = 0;; ++step) {
    if (step > kWalkBound) fail(ErrorKind::internal, "alcove walk did not terminate");
    int wall = -1;
    for (std::size_t i = 0; i < fd.rank() && wall < 0; ++i)
      if (dot(std::span<const Rational>(red.point), std::span<const std::int64_t>(fd.simple_roots[i])) < Rational(0))
        wall = static_cast<int>(i) + 1;
    if (wall < 0 &&
        dot(std::span<const Rational>(red.point), std::span<const std::int64_t>(fd.theta0)) > Rational(1))
      wall = 0;
    if (wall < 0) break;
    const IntMatrix& s = wall == 0 ? s0 : fd.weyl_generators[static_cast<std::size_t>(wall - 1)].matrix();
    red.point = s.apply(red.point);
    red.linear = s * red.linear;
    red.translation = s.apply(red.translation);
    if (wall == 0) {
      red.point = add(red.point, to_rational(theta_check));
      red.translation = add(red.translation, theta_check);
    }
    red.word.push_back(wall);
  }
  return red;
}

KacCoordinates canonical_kac(const FoldedDatum& fd, const KacCoordinates& s) {
  KacCoordinates best = s;
  KacCoordinates t(s.size());
  for (const auto& p : fd.affine_symmetries) {
    for (std::size_t i = 0; i < s.size(); ++i) t[static_cast<std::size_t>(p[i])] = s[i];
    if (t < best) best = t;
  }
  return best;
}

std::vector<KacCoordinates> kac_classes(const FoldedDatum& fd, int m) {
  require_adjoint(fd, "Kac classes");
  std::set<KacCoordinates, std::greater<>> reps;
  for (const auto& s : enumerate_kac_coordinates(fd, m)) reps.insert(canonical_kac(fd, s));
  return {reps.begin(), reps.end()};
}

KacCoordinates alcove_to_kac(const FoldedDatum& fd, int m, const RationalCoweight& x) {
  require_adjoint(fd, "Kac coordinates");
  const std::int64_t q = level(fd, m);
  if (!in_alcove(fd, x)) fail(ErrorKind::not_in_alcove, "point " + format_vector(x) + " is outside the alcove");
  if (!is_integral(scale(x, Rational(q))))
    fail(ErrorKind::not_in_lattice, "point " + format_vector(x) + " is not in (r/m) X^tau");
  KacCoordinates s(fd.rank() + 1);
  std::int64_t rest = q;
  for (std::size_t i = 0; i < fd.rank(); ++i) {
    const Rational v = Rational(q) * dot(std::span<const Rational>(x), std::span<const std::int64_t>(fd.simple_roots[i]));
    s[i + 1] = v.to_integer();
    rest -= fd.kac_labels[i + 1] * s[i + 1];
  }
  s[0] = rest;
  return s;
}

RationalCoweight kac_to_alcove(const FoldedDatum& fd, int m, const KacCoordinates& s) {
  require_adjoint(fd, "Kac coordinates");
  const std::int64_t q = level(fd, m);
  if (s.size() != fd.rank() + 1)
    fail(ErrorKind::invalid_input, "expected " + std::to_string(fd.rank() + 1) + " Kac coordinates");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) fail(ErrorKind::invalid_input, "Kac coordinates must be non-negative");
    total += fd.kac_labels[i] * s[i];
  }
  if (total != q)
    fail(ErrorKind::invalid_input, "Kac coordinates sum to " + std::to_string(total) + " instead of m/r = " +
                                       std::to_string(q));
  return scale(solve_simple_roots(fd, IntVec(s.begin() + 1, s.end())), Rational(1, q));
}

std::string AutomorphismDescriptor::sigma() const {
  const std::string head = tau_order == 1 ? "" : "tau o ";
  if (is_zero(lambda)) return tau_order == 1 ? "id" : "tau";
  return head + "Ad(zeta_" + std::to_string(m) + "^" + format_vector(lambda_ambient) + ")";
}

std::vector<AutomorphismDescriptor> classify_automorphisms(const DiagramAutomorphism& da, int m) {
  const RootDatum adjoint(da.base.type(), Isogeny::adjoint);
  const FoldedDatum fd = folded_datum(diagram_automorphism(adjoint, da.order));
  const std::int64_t q = level(fd, m);
  std::vector<AutomorphismDescriptor> out;
  for (const auto& cls : kac_classes(fd, m)) {
    // Lex-max member of the class: the trivial class lands on lambda = 0.
    KacCoordinates s = cls, t(cls.size());
    for (const auto& p : fd.affine_symmetries) {
      for (std::size_t i = 0; i < cls.size(); ++i) t[static_cast<std::size_t>(p[i])] = cls[i];
      if (t > s) s = t;
    }
    AutomorphismDescriptor desc;
    desc.type = fd.base_type;
    desc.isogeny = Isogeny::adjoint;
    desc.tau_order = fd.tau_order;
    desc.m = m;
    desc.lambda = to_integral(scale(kac_to_alcove(fd, m, s), Rational(q)));
    desc.lambda_ambient = to_ambient(fd, desc.lambda);
    desc.kac = s;
    out.push_back(std::move(desc));
  }
  return out;
}

ParahoricDescriptor parahoric_descriptor(const FoldedDatum& fd, const RationalCoweight& theta) {
  if (theta.size() != fd.invariant_basis.size())
    fail(ErrorKind::invalid_input, "theta has " + std::to_string(theta.size()) + " coordinates, expected " +
                                       std::to_string(fd.invariant_basis.size()));
  std::int64_t m = 1;
  for (const auto& c : theta) m = lcm64(m, c.den());
  ParahoricDescriptor out;
  out.m_min = static_cast<int>(m);
  out.lambda = to_integral(scale(theta, Rational(m)));
  out.alcove_point = reduce_to_alcove(fd, theta).point;

  AutomorphismDescriptor& desc = out.descriptor;
  desc.type = fd.base_type;
  desc.isogeny = fd.isogeny;
  desc.tau_order = fd.tau_order;
  desc.m = out.m_min;
  desc.lambda = to_integral(scale(out.alcove_point, Rational(m)));
  desc.lambda_ambient = to_ambient(fd, desc.lambda);
  return out;
}

}  // namespace twisted_h1
