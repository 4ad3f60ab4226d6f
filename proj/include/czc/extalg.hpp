#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "czc/cycles.hpp"
#include "czc/polyring.hpp"

namespace czc {

/// alpha_i or beta_i, 1-based. Total order: every alpha before every beta,
/// then by index.
struct SymplecticLabel {
  enum class Kind { Alpha, Beta };
  Kind kind;
  int index;

  static SymplecticLabel alpha(int i) { return {Kind::Alpha, i}; }
  static SymplecticLabel beta(int i) { return {Kind::Beta, i}; }
  bool is_beta() const noexcept { return kind == Kind::Beta; }

  auto operator<=>(const SymplecticLabel&) const = default;
  /// "a3" or "b3".
  std::string to_string() const;
};

/// <alpha_i, beta_i> = 1, <beta_i, alpha_i> = -1, all else 0.
int pairing(const SymplecticLabel& a, const SymplecticLabel& b);

/// Element of H over the edge polynomial ring: 2g coefficients, alpha block
/// then beta block.
class HElement {
 public:
  explicit HElement(int genus = 0);
  static HElement basis(int genus, const SymplecticLabel& label);

  int genus() const noexcept { return genus_; }
  IntPolynomial& operator[](const SymplecticLabel& label);
  const IntPolynomial& operator[](const SymplecticLabel& label) const;
  bool is_zero() const;
  /// The alpha block vanishes.
  bool in_Y() const;

  HElement& operator+=(const HElement& other);
  HElement& operator-=(const HElement& other);
  HElement& operator*=(const IntPolynomial& p);
  friend HElement operator+(HElement a, const HElement& b) { return a += b; }
  friend HElement operator-(HElement a, const HElement& b) { return a -= b; }
  friend HElement operator*(HElement a, const IntPolynomial& p) { return a *= p; }
  bool operator==(const HElement&) const = default;

  /// Nonzero terms as (label, coefficient), alpha block first.
  std::vector<std::pair<SymplecticLabel, const IntPolynomial*>> terms() const;
  std::string to_string() const;

 private:
  std::size_t slot(const SymplecticLabel& label) const;
  int genus_;
  std::vector<IntPolynomial> coeffs_;
};

/// <h, k> extended bilinearly over the polynomial ring.
IntPolynomial pairing(const HElement& h, const HElement& k);

/// Strictly increasing triple of labels: a basis element of the third
/// exterior power.
class WedgeTriple {
 public:
  /// Sorted form of a ^ b ^ c with the permutation sign; nullopt when two
  /// labels coincide.
  static std::optional<std::pair<WedgeTriple, int>> normalize(SymplecticLabel a, SymplecticLabel b,
                                                              SymplecticLabel c);
  /// Requires a < b < c.
  static WedgeTriple sorted(SymplecticLabel a, SymplecticLabel b, SymplecticLabel c);
  static WedgeTriple betas(int r, int s, int t) {
    return sorted(SymplecticLabel::beta(r), SymplecticLabel::beta(s), SymplecticLabel::beta(t));
  }

  const std::array<SymplecticLabel, 3>& labels() const noexcept { return labels_; }
  /// Number of beta factors: x lies in F_q exactly when every term has level >= q.
  int level() const noexcept;
  auto operator<=>(const WedgeTriple&) const = default;
  /// "a1^b2^b3".
  std::string to_string() const;

 private:
  std::array<SymplecticLabel, 3> labels_;
};

/// Element of L = third exterior power of H, over the polynomial ring.
class LElement {
 public:
  using TermMap = std::map<WedgeTriple, IntPolynomial>;

  LElement() = default;
  /// Inverse of to_string(); throws ParseError.
  static LElement parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  IntPolynomial coefficient(const WedgeTriple& t) const;

  void add(const WedgeTriple& t, const IntPolynomial& p);
  /// Adds p * (a ^ b ^ c), normalizing order and sign.
  void add(const SymplecticLabel& a, const SymplecticLabel& b, const SymplecticLabel& c,
           const IntPolynomial& p);

  /// Minimum beta count over the terms; 3 for zero.
  int level() const noexcept;
  bool in_filtration(int q) const noexcept { return level() >= q; }
  /// Terms with exactly `betas` beta factors.
  LElement graded_part(int betas) const;
  /// Degree-d component of every coefficient.
  LElement homogeneous_part(unsigned d) const;

  LElement& operator+=(const LElement& other);
  LElement& operator-=(const LElement& other);
  LElement& operator*=(const IntPolynomial& p);
  friend LElement operator+(LElement a, const LElement& b) { return a += b; }
  friend LElement operator-(LElement a, const LElement& b) { return a -= b; }
  friend LElement operator*(LElement a, const IntPolynomial& p) { return a *= p; }
  bool operator==(const LElement&) const = default;

  /// Sum of "coefficient*triple" terms in triple order, e.g.
  /// "(x1 + x5)*a1^b2^b3 - 2*x2*x5*b1^b2^b3"; zero renders as "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

LElement wedge(const HElement& a, const HElement& b, const HElement& c);

/// h ^ (sum_i alpha_i ^ beta_i).
LElement wedge_with_omega(const HElement& h);

/// The dual-curve class of edge e in the beta block.
HElement edge_class(const CycleBasisContext& ctx, EdgeId e);

/// h + <h, [e]> [e] x_e.
HElement delta_ell_H(const CycleBasisContext& ctx, EdgeId e, const HElement& h);
/// h - <h, [e]> [e] x_e.
HElement delta_ell_inv_H(const CycleBasisContext& ctx, EdgeId e, const HElement& h);
/// alpha_j -> alpha_j + sum_i q_ij beta_i, beta_j fixed.
HElement delta_G_H(const CycleBasisContext& ctx, const HElement& h);

/// (prod_e delta_e^{a_e} - I)(h) - sum_e a_e (delta_e - I)(h). The product is
/// taken in ascending edge id; the result is identically zero.
HElement delta_minus_I_sum_check(const CycleBasisContext& ctx,
                                 const std::map<EdgeId, long>& exponents, const HElement& h);

/// Induced actions on L: each factor of a wedge is mapped separately.
LElement delta_G_L(const CycleBasisContext& ctx, const LElement& x);
LElement delta_ell_L(const CycleBasisContext& ctx, EdgeId e, const LElement& x);

/// (delta_G - I) applied after sum_e (delta_e - I), on L.
LElement psi_G(const CycleBasisContext& ctx, const LElement& x);

/// Coefficients indexed by 1-based triples. Meaning depends on the caller:
/// (i, j, k) with j < k for alpha_i^beta_j^beta_k, (i, j, k) with i < j for
/// alpha_i^alpha_j^beta_k, and (r, s, t) with r < s < t for beta_r^beta_s^beta_t.
using IndexTriple = std::array<int, 3>;
using CoefficientMap = std::map<IndexTriple, IntPolynomial>;

/// Triples (r, s, t), 1 <= r < s < t <= g, in lexicographic order.
std::vector<IndexTriple> beta_triples(int genus);

/// Coefficients of (delta_G - I)(sum b_ijk alpha_i^beta_j^beta_k) on the
/// beta^beta^beta basis, from the closed form in q and b.
CoefficientMap image1_coeffs(const CycleBasisContext& ctx, const CoefficientMap& b);

/// Coefficients of (delta_G - I)^2(sum a_ijk alpha_i^alpha_j^beta_k) on the
/// beta^beta^beta basis, via 3x3 determinants in q and a.
CoefficientMap image2_coeffs(const CycleBasisContext& ctx, const CoefficientMap& a);

LElement alpha_beta_beta_element(const CoefficientMap& b);
LElement alpha_alpha_beta_element(const CoefficientMap& a);
/// Beta^beta^beta coefficients of x (zero entries dropped).
CoefficientMap beta_coefficients(const LElement& x);

}  // namespace czc
