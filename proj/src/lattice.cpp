#include "twisted_h1/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "twisted_h1/config.hpp"
#include "twisted_h1/error.hpp"

namespace twisted_h1 {

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("TWISTED_H1_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

namespace {

using Big = boost::multiprecision::cpp_int;
using BigRow = std::vector<Big>;
using BigRows = std::vector<BigRow>;

BigRow to_big(const IntVec& v) { return BigRow(v.begin(), v.end()); }

std::int64_t to_small(const Big& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("normal form entry exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

IntVec to_small(const BigRow& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_small(x));
  return out;
}

Big floor_div(const Big& a, const Big& b) {  // b > 0
  Big q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

void axpy(BigRow& target, const Big& q, const BigRow& source) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Row echelon form by unimodular row operations, pivoting only on the first
// `ncols` columns. Pivots are chosen with minimal absolute value to keep
// entries small. Returns the pivot columns; rows past their count are zero
// on the pivoting columns.
std::vector<std::size_t> echelon(BigRows& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], rows[i][c] / rows[r][c], rows[r]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void reduce_above(BigRows& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t c = pivots[k];
    for (std::size_t i = 0; i < k; ++i) axpy(rows[i], floor_div(rows[i][c], rows[k][c]), rows[k]);
  }
}

}  // namespace

std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& generators, std::size_t dimension) {
  BigRows rows;
  for (const auto& g : generators) {
    if (g.size() != dimension) throw std::invalid_argument("generator dimension mismatch");
    rows.push_back(to_big(g));
  }
  const auto pivots = echelon(rows, dimension);
  rows.resize(pivots.size());
  reduce_above(rows, pivots);
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(to_small(r));
  return out;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  // Echelonize [m^T | I]; the identity part of the vanishing rows is a
  // unimodular completion, hence a saturated kernel basis.
  const std::size_t rows_m = m.rows(), n = m.cols();
  BigRows rows(n, BigRow(rows_m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows_m; ++i) rows[j][i] = m(i, j);
    rows[j][rows_m + j] = 1;
  }
  const auto pivots = echelon(rows, rows_m);
  std::vector<IntVec> kernel;
  for (std::size_t j = pivots.size(); j < n; ++j)
    kernel.push_back(to_small(BigRow(rows[j].begin() + static_cast<std::ptrdiff_t>(rows_m), rows[j].end())));
  return hermite_normal_form(kernel, n);
}

std::optional<RatVec> rational_coordinates(const std::vector<IntVec>& basis, const RatVec& v) {
  const std::size_t k = basis.size(), n = v.size();
  // Augmented system [B | v] with B having the basis vectors as columns.
  std::vector<RatVec> a(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j].at(i);
    a[i][k] = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) fail(ErrorKind::rank_defect, "basis vectors are linearly dependent");
    std::swap(a[r], a[p]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == Rational(0)) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != Rational(0)) return std::nullopt;
  RatVec out(k);
  for (std::size_t i = 0; i < k; ++i) out[pivot_col[i]] = a[i][k];
  return out;
}

IntVec coordinates_in_basis(const std::vector<IntVec>& basis, const IntVec& v) {
  const auto coords = rational_coordinates(basis, to_rational(v));
  if (!coords) fail(ErrorKind::not_in_lattice, "vector " + format_vector(v) + " is outside the span of the basis");
  for (const auto& c : *coords)
    if (!c.is_integer())
      fail(ErrorKind::not_in_lattice, "vector " + format_vector(v) + " is not an integer combination of the basis");
  return to_integral(*coords);
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t s = input.rows(), k = input.cols();
  BigRows a(s, BigRow(k));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = input(i, j);
  BigRows v(k, BigRow(k, 0)), vinv(k, BigRow(k, 0));
  for (std::size_t i = 0; i < k; ++i) v[i][i] = vinv[i][i] = 1;

  // Column operation col_j -= q col_t, mirrored on V and V^{-1}.
  auto col_axpy = [&](std::size_t j, std::size_t t, const Big& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < s; ++i) a[i][j] -= q * a[i][t];
    for (std::size_t i = 0; i < k; ++i) v[i][j] -= q * v[i][t];
    for (std::size_t i = 0; i < k; ++i) vinv[t][i] += q * vinv[j][i];
  };
  auto col_swap = [&](std::size_t j, std::size_t t) {
    if (j == t) return;
    for (std::size_t i = 0; i < s; ++i) std::swap(a[i][j], a[i][t]);
    for (std::size_t i = 0; i < k; ++i) std::swap(v[i][j], v[i][t]);
    std::swap(vinv[j], vinv[t]);
  };

  const std::size_t n = std::min(s, k);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = s, bj = k;
      for (std::size_t i = t; i < s; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 && (bi == s || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == s) break;
      std::swap(a[t], a[bi]);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < s; ++i) {
        if (a[i][t] == 0) continue;
        axpy(a[i], a[i][t] / a[t][t], a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < s && divides; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < k; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (auto& x : a[t]) x = -x;
  }

  SmithForm out;
  for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(to_small(a[t][t]));
  out.column_op = IntMatrix(k, k);
  out.column_op_inv = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out.column_op(i, j) = to_small(v[i][j]);
      out.column_op_inv(i, j) = to_small(vinv[i][j]);
    }
  return out;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<IntVec> ambient_basis,
                                       const std::vector<IntVec>& sublattice_generators)
    : basis_(std::move(ambient_basis)) {
  const std::size_t k = basis_.size();
  std::vector<IntVec> rows;
  for (const auto& g : sublattice_generators) rows.push_back(coordinates_in_basis(basis_, g));
  hnf_ = hermite_normal_form(rows, k);
  if (hnf_.size() < k)
    fail(ErrorKind::rank_defect, "sublattice has rank " + std::to_string(hnf_.size()) + " < " + std::to_string(k) +
                                     "; the quotient is infinite");
  for (std::size_t j = 0; j < k; ++j) {
    const auto h = static_cast<std::uint64_t>(hnf_[j][j]);
    if (cardinality_ > std::numeric_limits<std::uint64_t>::max() / h)
      fail(ErrorKind::too_large, "quotient cardinality exceeds 64 bits");
    cardinality_ *= h;
  }

  const SmithForm snf = smith_normal_form(IntMatrix::from_rows(hnf_));
  v_ = snf.column_op;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] == 1) continue;
    kept_.push_back(i);
    factors_.push_back(snf.diagonal[i]);
    const IntVec coords = snf.column_op_inv.row(i);
    IntVec lift(basis_.empty() ? 0 : basis_.front().size(), 0);
    for (std::size_t j = 0; j < k; ++j) lift = add(lift, scale(basis_[j], coords[j]));
    lifts_.push_back(std::move(lift));
  }
}

IntVec FiniteAbelianGroup::reduce(IntVec x) const {
  if (x.size() != hnf_.size()) throw std::invalid_argument("coordinate dimension mismatch");
  for (std::size_t j = 0; j < hnf_.size(); ++j) {
    const std::int64_t h = hnf_[j][j];
    const std::int64_t q = (x[j] - mod_floor(x[j], h)) / h;
    if (q != 0) x = sub(x, scale(hnf_[j], q));
  }
  return x;
}

QuotientElement FiniteAbelianGroup::element_from_coordinates(const IntVec& basis_coords) const {
  QuotientElement e;
  e.representative = reduce(basis_coords);
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const IntVec col = v_.column(kept_[t]);
    e.coordinates.push_back(mod_floor(dot(e.representative, col), factors_[t]));
  }
  e.ambient.assign(basis_.empty() ? 0 : basis_.front().size(), 0);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    e.ambient = add(e.ambient, scale(basis_[j], e.representative[j]));
  return e;
}

QuotientElement FiniteAbelianGroup::element(const IntVec& ambient_vector) const {
  return element_from_coordinates(coordinates_in_basis(basis_, ambient_vector));
}

std::uint64_t FiniteAbelianGroup::index_of(const IntVec& reduced) const {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < hnf_.size(); ++j)
    idx = idx * static_cast<std::uint64_t>(hnf_[j][j]) + static_cast<std::uint64_t>(reduced[j]);
  return idx;
}

IntVec FiniteAbelianGroup::representative_at(std::uint64_t index) const {
  IntVec x(hnf_.size(), 0);
  for (std::size_t j = hnf_.size(); j-- > 0;) {
    const auto h = static_cast<std::uint64_t>(hnf_[j][j]);
    x[j] = static_cast<std::int64_t>(index % h);
    index /= h;
  }
  return x;
}

std::vector<QuotientElement> FiniteAbelianGroup::enumerate(std::optional<std::uint64_t> cap) const {
  const std::uint64_t limit = cap.value_or(enumeration_cap());
  if (cardinality_ > limit)
    fail(ErrorKind::too_large, "group of order " + std::to_string(cardinality_) + " exceeds the enumeration cap " +
                                   std::to_string(limit));
  std::vector<QuotientElement> out;
  out.reserve(cardinality_);
  for (std::uint64_t i = 0; i < cardinality_; ++i) out.push_back(element_from_coordinates(representative_at(i)));
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(factors_[i]);
  return s;
}

}  // namespace twisted_h1
