#include "czc/intlin.hpp"

#include <utility>

#include "czc/errors.hpp"

namespace czc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionMismatch("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " given " + std::to_string(data_.size()) + " entries");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("rows of unequal length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).get_str();
    }
    out += ']';
  }
  return out + "]";
}

namespace {

// rows (r, s) <- [[p, q], [u, v]] * rows (r, s)
void combine_rows(IntMatrix& M, std::size_t r, std::size_t s, const Integer& p,
                  const Integer& q, const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < M.cols(); ++c) {
    const Integer a = M(r, c);
    const Integer b = M(s, c);
    M(r, c) = p * a + q * b;
    M(s, c) = u * a + v * b;
  }
}

void swap_rows(IntMatrix& M, std::size_t r, std::size_t s) {
  for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(r, c), M(s, c));
}

void negate_row(IntMatrix& M, std::size_t r) {
  for (std::size_t c = 0; c < M.cols(); ++c) M(r, c) = -M(r, c);
}

// row r -= q * row s
void subtract_row(IntMatrix& M, std::size_t r, std::size_t s, const Integer& q) {
  for (std::size_t c = 0; c < M.cols(); ++c) M(r, c) -= q * M(s, c);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& A) {
  HermiteResult out{A, IntMatrix::identity(A.rows()), 0, {}};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (std::size_t i = r + 1; i < H.rows(); ++i) {
      if (H(i, c) == 0) continue;
      if (H(r, c) == 0) {
        swap_rows(H, r, i);
        swap_rows(U, r, i);
        continue;
      }
      const Integer a = H(r, c);
      const Integer b = H(i, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      // [[s, t], [-b/g, a/g]] has determinant (s*a + t*b)/g = 1.
      const Integer u = -b / g;
      const Integer v = a / g;
      combine_rows(H, r, i, s, t, u, v);
      combine_rows(U, r, i, s, t, u, v);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      if (q != 0) {
        subtract_row(H, i, r, q);
        subtract_row(U, i, r, q);
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(M, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
      M(i, k) = 0;
    }
    previous = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

DiophantineResult solve_diophantine(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows())
    throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) +
                            " entries, matrix has " + std::to_string(A.rows()) + " rows");
  // U * A^T = H, so the rows of H generate the column lattice of A and
  // the rows of U past the rank span the integer kernel of A.
  const HermiteResult hnf = hermite_normal_form(A.transpose());
  DiophantineResult out;
  for (std::size_t i = hnf.rank; i < hnf.U.rows(); ++i) out.kernel_basis.push_back(hnf.U.row(i));

  IntVector residual = b;
  IntVector y(hnf.rank);
  for (std::size_t i = 0; i < hnf.rank; ++i) {
    const std::size_t p = hnf.pivot_columns[i];
    for (std::size_t c = 0; c < p; ++c)
      if (residual[c] != 0) return out;
    const Integer& pivot = hnf.H(i, p);
    if (!mpz_divisible_p(residual[p].get_mpz_t(), pivot.get_mpz_t())) return out;
    mpz_divexact(y[i].get_mpz_t(), residual[p].get_mpz_t(), pivot.get_mpz_t());
    for (std::size_t c = p; c < residual.size(); ++c) residual[c] -= y[i] * hnf.H(i, c);
  }
  for (const auto& v : residual)
    if (v != 0) return out;

  IntVector x(A.cols());
  for (std::size_t i = 0; i < hnf.rank; ++i)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[i] * hnf.U(i, c);
  if (A * x != b) throw InvariantError("diophantine witness does not replay");
  out.feasible = true;
  out.solution = std::move(x);
  return out;
}

LatticeMembership lattice_membership(const std::vector<IntVector>& generators,
                                     const IntVector& target) {
  for (const auto& g : generators)
    if (g.size() != target.size())
      throw DimensionMismatch("generator of length " + std::to_string(g.size()) +
                              " vs target of length " + std::to_string(target.size()));
  const IntMatrix A = IntMatrix::from_rows(generators, target.size()).transpose();
  DiophantineResult solved = solve_diophantine(A, target);
  LatticeMembership out;
  out.member = solved.feasible;
  if (solved.feasible) out.coeffs = std::move(solved.solution);
  return out;
}

}  // namespace czc
