#include "twisted_h1/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "twisted_h1/error.hpp"

namespace twisted_h1 {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], checked_mul(b[i], -1));
  return out;
}

IntVec scale(const IntVec& a, std::int64_t c) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(a[i], c);
  return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rational& c) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntVec to_integral(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer())
      fail(ErrorKind::not_in_lattice, "vector " + format_vector(v) + " is not integral");
    out[i] = v[i].num();
  }
  return out;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

template <class Vec>
static std::string format_any(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vector(const IntVec& v) { return format_any(v); }
std::string format_vector(const RatVec& v) { return format_any(v); }

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r].at(c);
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  return from_rows(cols).transpose();
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  IntVec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = dot(std::span(data_).subspan(r * cols_, cols_), v);
  return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = dot(std::span<const Rational>(v), std::span(data_).subspan(r * cols_, cols_));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(x, b(k, j)));
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    out.data_[i] = checked_add(a.data_[i], checked_mul(b.data_[i], -1));
  return out;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss elimination; every intermediate is a minor, so exact division holds.
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  const __int128 d = a[n - 1][n - 1] * sign;
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant overflow");
  return static_cast<std::int64_t>(d);
}

std::vector<RatVec> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<RatVec> a(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) fail(ErrorKind::rank_defect, "matrix is singular");
    std::swap(a[c], a[p]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Rational(0)) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<RatVec> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = RatVec(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
  return inv;
}

LatticeMap::LatticeMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("lattice map must be square");
}

LatticeMap LatticeMap::compose(const LatticeMap& other) const { return LatticeMap(matrix_ * other.matrix_); }

LatticeMap LatticeMap::power(unsigned k) const {
  LatticeMap out = identity(dimension());
  for (unsigned i = 0; i < k; ++i) out = compose(out);
  return out;
}

bool LatticeMap::is_unimodular() const {
  const auto d = determinant(matrix_);
  return d == 1 || d == -1;
}

LatticeMap LatticeMap::inverse() const {
  if (!is_unimodular()) fail(ErrorKind::not_in_lattice, "lattice map is not unimodular");
  const auto rows = rational_inverse(matrix_);
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(to_integral(r));
  return LatticeMap(IntMatrix::from_rows(out));
}

RatVec ScaledLatticeMap::apply(const RatVec& v) const {
  return scale(numerator.apply(v), Rational(1, denominator));
}

RatVec ScaledLatticeMap::apply(const IntVec& v) const { return apply(to_rational(v)); }

}  // namespace twisted_h1
