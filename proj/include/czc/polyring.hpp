#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace czc {

using Integer = mpz_class;
using EdgeId = int;

/// Product of edge variables x_e with positive exponents. The empty monomial is 1.
///
/// Ordering (used for display and as the map key order of IntPolynomial):
/// higher total degree first; within a degree, lexicographic on the
/// sorted (edge-id, exponent) list with smaller edge ids first and, for
/// equal ids, larger exponents first.
class Monomial {
 public:
  using Power = std::pair<EdgeId, unsigned>;

  Monomial() = default;
  /// Normalizes: sorts by edge id, merges repeats, drops zero exponents.
  explicit Monomial(std::vector<Power> powers);

  static Monomial variable(EdgeId e, unsigned exponent = 1);

  const std::vector<Power>& powers() const noexcept { return powers_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(EdgeId e) const noexcept;
  bool is_unit() const noexcept { return powers_.empty(); }

  /// Removes x_e entirely; returns the quotient and the exponent removed.
  std::pair<Monomial, unsigned> split(EdgeId e) const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string to_string() const;

 private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
/// Canonical: zero coefficients are never stored.
class IntPolynomial {
 public:
  using TermMap = std::map<Monomial, Integer>;

  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  IntPolynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)
  IntPolynomial(const Monomial& m, const Integer& coefficient);

  static IntPolynomial variable(EdgeId e);
  /// Sum of x_e over the given edges, each with coefficient 1.
  static IntPolynomial linear_sum(const std::vector<EdgeId>& edges);
  /// Inverse of to_string(); throws ParseError.
  static IntPolynomial parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial{}); }

  /// Total degree; the zero polynomial has degree 0.
  unsigned degree() const noexcept;
  /// True for zero and for polynomials whose terms all have degree d.
  bool is_homogeneous(unsigned d) const noexcept;
  std::set<EdgeId> variables() const;

  /// Component of total degree d.
  IntPolynomial homogeneous_part(unsigned d) const;

  void add_term(const Monomial& m, const Integer& coefficient);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial& other) const { return terms_ == other.terms_; }

  /// Renders e.g. "x1*x2 + 2*x5*x6 - x3"; zero renders as "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

using Assignment = std::map<EdgeId, Integer>;

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/// Ring homomorphism x_e -> assignment[e]. Throws MissingVariable when a
/// variable of p has no value.
Integer poly_eval(const IntPolynomial& p, const Assignment& assignment);

/// Ring homomorphism fixing every variable except x_var, which is sent to
/// `replacement`.
IntPolynomial poly_substitute(const IntPolynomial& p, EdgeId var,
                              const IntPolynomial& replacement);

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

}  // namespace czc
