#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "czc/polyring.hpp"

namespace czc {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// All rows must have equal length. `cols` is used when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& other) const = default;

  /// JSON-style nested array, e.g. [[1,0],[0,1]].
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteResult {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular, H = U * A
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form by integer elimination with transform tracking.
/// Nonzero rows come first; each has a positive pivot strictly right of the
/// previous row's pivot, and entries above a pivot lie in [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& A);

/// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& A);

struct DiophantineResult {
  bool feasible = false;
  std::optional<IntVector> solution;
  std::vector<IntVector> kernel_basis;
};

/// Integer solutions of A x = b. The kernel basis (a Z-basis of {x : A x = 0})
/// is returned whether or not the system is feasible.
DiophantineResult solve_diophantine(const IntMatrix& A, const IntVector& b);

struct LatticeMembership {
  bool member = false;
  std::optional<IntVector> coeffs;  ///< target = sum coeffs[i] * generators[i]
};

LatticeMembership lattice_membership(const std::vector<IntVector>& generators,
                                     const IntVector& target);

}  // namespace czc
