#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twisted_h1/rational.hpp"

namespace twisted_h1 {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, std::int64_t c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& c);
RatVec to_rational(const IntVec& v);
/// Throws NotInLattice if some entry is not integral.
IntVec to_integral(const RatVec& v);
bool is_zero(const IntVec& v);

std::string format_vector(const IntVec& v);
std::string format_vector(const RatVec& v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntMatrix transpose() const;

  IntVec apply(const IntVec& v) const;
  RatVec apply(const RatVec& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<IntVec> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);
/// Exact inverse over the rationals, returned row by row. Throws if singular.
std::vector<RatVec> rational_inverse(const IntMatrix& m);

/// Integer linear map on a lattice, in the coordinates of a fixed basis.
/// Vectors are columns: `apply(v) = matrix * v`.
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(IntMatrix matrix);
  static LatticeMap identity(std::size_t n) { return LatticeMap(IntMatrix::identity(n)); }

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return matrix_.rows(); }

  IntVec apply(const IntVec& v) const { return matrix_.apply(v); }
  RatVec apply(const RatVec& v) const { return matrix_.apply(v); }

  /// (this ∘ other)(v) = this(other(v)).
  LatticeMap compose(const LatticeMap& other) const;
  LatticeMap power(unsigned k) const;
  bool is_unimodular() const;
  /// Throws NotInLattice when the map is not unimodular.
  LatticeMap inverse() const;

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  IntMatrix matrix_;
};

/// A rational lattice map stored as integer numerator over a positive
/// common denominator.
struct ScaledLatticeMap {
  IntMatrix numerator;
  std::int64_t denominator = 1;

  RatVec apply(const RatVec& v) const;
  RatVec apply(const IntVec& v) const;
};

}  // namespace twisted_h1
