#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lch/rational.hpp"
#include "lch/sign.hpp"

namespace lch {

/// Dense matrix over the exact rationals. Only the handful of operations the
/// oracles need; all arithmetic is exact.
class MatQ {
 public:
  MatQ() = default;
  MatQ(int rows, int cols);
  MatQ(int rows, int cols, std::initializer_list<Rational> entries);

  static MatQ identity(int n);
  static MatQ zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;

  MatQ operator*(const MatQ& other) const;
  bool operator==(const MatQ& other) const = default;

  bool isZero() const;

  /// Columns [first, first+count) as a new matrix.
  MatQ columnRange(int first, int count) const;

  /// Horizontal concatenation [*this | other].
  MatQ augmentedWith(const MatQ& other) const;

  /// Exact determinant (square only).
  Rational det() const;

  /// Sign of the determinant; nullopt when singular.
  std::optional<Sign> detSign() const;

  int rank() const;

  /// One particular solution of (*this) x = rhs per rhs column, or nullopt
  /// if any column is inconsistent.
  std::optional<MatQ> solve(const MatQ& rhs) const;

  /// Extends the columns of `partial` (assumed independent) to a basis of
  /// the ambient space by greedily appending standard basis vectors.
  static MatQ extendToBasis(const MatQ& partial);

  std::string toString() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace lch
