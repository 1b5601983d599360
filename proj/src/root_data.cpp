#include "twisted_h1/root_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "twisted_h1/error.hpp"

namespace twisted_h1 {

char to_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  fail(ErrorKind::invalid_input, "unknown type family '" + std::string(text) + "' (expected one of A-G)");
}

void SimpleType::validate() const {
  const std::string name(1, to_char(family));
  switch (family) {
    case Family::A:
      if (rank < 1) fail(ErrorKind::invalid_rank, "type A requires rank >= 1, got " + std::to_string(rank));
      return;
    case Family::B:
    case Family::C:
      if (rank < 2) fail(ErrorKind::invalid_rank, "type " + name + " requires rank >= 2, got " + std::to_string(rank));
      return;
    case Family::D:
      if (rank < 3) fail(ErrorKind::invalid_rank, "type D requires rank >= 3, got " + std::to_string(rank));
      return;
    case Family::E:
      if (rank < 6 || rank > 8)
        fail(ErrorKind::invalid_rank, "type E requires rank 6, 7 or 8, got " + std::to_string(rank));
      return;
    case Family::F:
      if (rank != 4) fail(ErrorKind::invalid_rank, "type F requires rank 4, got " + std::to_string(rank));
      return;
    case Family::G:
      if (rank != 2) fail(ErrorKind::invalid_rank, "type G requires rank 2, got " + std::to_string(rank));
      return;
  }
}

std::string SimpleType::to_string() const { return std::string(1, to_char(family)) + std::to_string(rank); }

std::string_view to_string(Isogeny iso) { return iso == Isogeny::simply_connected ? "sc" : "adjoint"; }

Isogeny parse_isogeny(std::string_view text) {
  if (text == "sc" || text == "simply_connected" || text == "simply-connected") return Isogeny::simply_connected;
  if (text == "adjoint" || text == "ad") return Isogeny::adjoint;
  fail(ErrorKind::invalid_input, "unknown isogeny '" + std::string(text) + "' (expected sc or adjoint)");
}

namespace {

// Doubled squared lengths of the simple roots and the inner products along
// the Dynkin edges; the Cartan matrix follows as 2 (a_i, a_j) / (a_i, a_i).
struct Gram {
  IntVec norms;
  std::vector<std::tuple<int, int, std::int64_t>> edges;  // 0-based
};

Gram gram_for(const SimpleType& t) {
  const int n = t.rank;
  Gram g;
  g.norms.assign(static_cast<std::size_t>(n), 2);
  auto chain = [&](int from, int to, std::int64_t ip) {
    for (int i = from; i < to; ++i) g.edges.emplace_back(i, i + 1, ip);
  };
  switch (t.family) {
    case Family::A:
      chain(0, n - 1, -1);
      break;
    case Family::B:  // last root short
      std::fill(g.norms.begin(), g.norms.end(), 4);
      g.norms[static_cast<std::size_t>(n - 1)] = 2;
      chain(0, n - 1, -2);
      break;
    case Family::C:  // last root long
      g.norms[static_cast<std::size_t>(n - 1)] = 4;
      chain(0, n - 2, -1);
      g.edges.emplace_back(n - 2, n - 1, -2);
      break;
    case Family::D:
      chain(0, n - 2, -1);
      g.edges.emplace_back(n - 3, n - 1, -1);
      break;
    case Family::E:
      g.edges = {{0, 2, -1}, {2, 3, -1}, {1, 3, -1}, {3, 4, -1}};
      for (int i = 4; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1, -1);
      break;
    case Family::F:
      g.norms = {4, 4, 2, 2};
      g.edges = {{0, 1, -2}, {1, 2, -2}, {2, 3, -1}};
      break;
    case Family::G:  // first root short
      g.norms = {2, 6};
      g.edges = {{0, 1, -3}};
      break;
  }
  return g;
}

}  // namespace

IntMatrix cartan_matrix(const SimpleType& type) {
  type.validate();
  const Gram g = gram_for(type);
  const auto n = static_cast<std::size_t>(type.rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (auto [i, j, ip] : g.edges) {
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    a(ui, uj) = 2 * ip / g.norms[ui];
    a(uj, ui) = 2 * ip / g.norms[uj];
  }
  return a;
}

std::uint64_t weyl_group_order(const SimpleType& type) {
  type.validate();
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

RootSystem::RootSystem(const IntMatrix& cartan) : cartan_(cartan) {
  const std::size_t n = cartan.rows();

  // Symmetrizer d with d_i A_ij = d_j A_ji, propagated along the diagram.
  std::vector<Rational> d(n, Rational(0));
  if (n > 0) {
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan(i, j) == 0 || d[j] != Rational(0)) continue;
        d[j] = d[i] * Rational(cartan(i, j), cartan(j, i));
        queue.push_back(j);
      }
    }
  }
  std::int64_t common = 1;
  for (const auto& x : d) {
    if (x == Rational(0)) fail(ErrorKind::internal, "Cartan matrix is not connected");
    common = lcm64(common, x.den());
  }
  for (const auto& x : d) symmetrizer_.push_back((x * Rational(common)).to_integer());

  // Reflection closure on (root, coroot) pairs.
  std::map<IntVec, IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.emplace(e, e);
    queue.push_back(e);
  }
  constexpr std::size_t kClosureBound = 100000;
  while (!queue.empty()) {
    if (seen.size() > kClosureBound) fail(ErrorKind::internal, "root closure did not terminate");
    const IntVec c = queue.front();
    queue.pop_front();
    const IntVec dc = seen.at(c);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t root_pair = 0;    // <coroot_j, root>
      std::int64_t coroot_pair = 0;  // <coroot, root_j>
      for (std::size_t k = 0; k < n; ++k) {
        root_pair += cartan(j, k) * c[k];
        coroot_pair += dc[k] * cartan(k, j);
      }
      IntVec c2 = c, d2 = dc;
      c2[j] -= root_pair;
      d2[j] -= coroot_pair;
      if (seen.emplace(c2, d2).second) queue.push_back(c2);
    }
  }
  for (auto& [c, dc] : seen) {
    roots_.push_back(c);
    coroots_.push_back(dc);
  }
  for (const auto& r : roots_) max_norm_ = std::max(max_norm_, norm(r));
}

std::int64_t RootSystem::norm(const IntVec& c) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s += c[i] * c[j] * symmetrizer_[i] * cartan_(i, j);
  return s;
}

bool RootSystem::is_long(std::size_t index) const { return norm(roots_.at(index)) == max_norm_; }

bool RootSystem::simply_laced() const {
  return std::all_of(symmetrizer_.begin(), symmetrizer_.end(), [&](auto x) { return x == symmetrizer_.front(); });
}

namespace {

std::size_t highest_among(const std::vector<IntVec>& roots, auto&& keep) {
  std::size_t best = roots.size();
  std::int64_t best_height = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!keep(k)) continue;
    const std::int64_t h = std::accumulate(roots[k].begin(), roots[k].end(), std::int64_t{0});
    if (h > best_height) {
      best_height = h;
      best = k;
    }
  }
  if (best == roots.size()) fail(ErrorKind::internal, "root system has no positive roots");
  return best;
}

}  // namespace

std::size_t RootSystem::highest_root() const {
  return highest_among(roots_, [](std::size_t) { return true; });
}

std::size_t RootSystem::highest_short_root() const {
  if (simply_laced()) return highest_root();
  return highest_among(roots_, [&](std::size_t k) { return !is_long(k); });
}

RootDatum::RootDatum(SimpleType type, Isogeny isogeny)
    : type_(type), isogeny_(isogeny), cartan_(cartan_matrix(type)), system_(cartan_) {
  const auto n = static_cast<std::size_t>(type.rank);
  const auto inverse = rational_inverse(cartan_);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    if (isogeny == Isogeny::simply_connected) {
      labels_.push_back("alpha_check_" + std::to_string(i + 1));
      coroots_.push_back(e);
      roots_.push_back(cartan_.column(i));
      coweights_.push_back(inverse[i]);
    } else {
      labels_.push_back("omega_check_" + std::to_string(i + 1));
      coroots_.push_back(cartan_.row(i));
      roots_.push_back(e);
      coweights_.push_back(to_rational(e));
    }
  }
}

LatticeMap RootDatum::simple_reflection(std::size_t i) const {
  const auto n = static_cast<std::size_t>(rank());
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= coroots_[i][r] * roots_[i][c];
  return LatticeMap(m);
}

std::vector<LatticeMap> RootDatum::weyl_generators() const {
  std::vector<LatticeMap> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank()); ++i) out.push_back(simple_reflection(i));
  return out;
}

Root RootDatum::root(std::size_t index) const {
  const auto n = static_cast<std::size_t>(rank());
  Root r;
  r.coefficients = system_.roots().at(index);
  r.coroot_coefficients = system_.coroots().at(index);
  r.functional.assign(n, 0);
  r.coroot.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    r.functional = add(r.functional, scale(roots_[j], r.coefficients[j]));
    r.coroot = add(r.coroot, scale(coroots_[j], r.coroot_coefficients[j]));
  }
  return r;
}

Root RootDatum::highest_root() const { return root(system_.highest_root()); }
Root RootDatum::highest_short_root() const { return root(system_.highest_short_root()); }

std::string RootDatum::name() const { return type_.to_string() + "/" + std::string(to_string(isogeny_)); }

}  // namespace twisted_h1
