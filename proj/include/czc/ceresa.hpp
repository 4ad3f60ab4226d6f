#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "czc/cycles.hpp"
#include "czc/extalg.hpp"
#include "czc/graph.hpp"
#include "czc/intlin.hpp"
#include "czc/minors.hpp"

namespace czc {

/// Cocycle representative by its alpha_i^beta_j^beta_k coefficients (j < k),
/// each a homogeneous linear form in the edge variables.
class CeresaCocycle {
 public:
  /// Throws PreconditionError on indices outside 1..g or not in normal order,
  /// coefficients that are not linear forms, or variables that are not edges.
  CeresaCocycle(CycleBasisContext context, CoefficientMap b);

  const CycleBasisContext& context() const noexcept { return context_; }
  const CoefficientMap& b() const noexcept { return b_; }
  bool is_zero() const noexcept { return b_.empty(); }

 private:
  CycleBasisContext context_;
  CoefficientMap b_;
};

/// Class by its beta_r^beta_s^beta_t coefficients (r < s < t), each
/// homogeneous of degree 2.
struct CZClass {
  CycleBasisContext context;
  CoefficientMap c;
};

enum class VerdictMethod { GraphDiophantine, GraphPsi, CurveLattice, MinorTheorem, GenusBound };
std::string to_string(VerdictMethod m);

/// Integer unknowns keyed like CoefficientMap.
using IntegerCertificate = std::map<IndexTriple, Integer>;

struct TrivialityVerdict {
  bool trivial = false;
  VerdictMethod method = VerdictMethod::GenusBound;
  /// alpha_i^alpha_j^beta_k coefficients (i < j) of a preimage, when trivial
  /// by an algebraic method.
  IntegerCertificate certificate;
  /// alpha_i^alpha_j^alpha_k coefficients (i < j < k); psi mode only.
  IntegerCertificate cube_certificate;
  /// Forbidden minor of the input graph, when not trivial by the minor test.
  std::optional<MinorWitness> minor;
  std::string detail;
  /// FNV-1a digest of method, verdict, certificate and tested class.
  std::uint64_t replay_hash = 0;
};

/// Class of (delta_G - I) applied to the cocycle, via the closed form.
CZClass compute_w(const CeresaCocycle& v);

/// The unknowns (i, j, k), i < j, in the order used for image generators.
std::vector<IndexTriple> alpha_alpha_beta_unknowns(int genus);
std::vector<IndexTriple> alpha_cube_unknowns(int genus);

enum class GraphTestMode {
  Image2,  ///< w in (delta_G - I)^2 of the alpha^alpha^beta span
  Psi,     ///< w equals the degree-2 part of psi_G of an integer element
};

/// Integer-linear feasibility over the coefficients of every degree-2
/// monomial. Genus < 3 is trivial by dimension.
TrivialityVerdict is_cz_trivial_graph(const MultiGraph& G, const CeresaCocycle& v,
                                      GraphTestMode mode = GraphTestMode::Image2);

/// Coefficients evaluated at the edge lengths, indexed by beta_triples(g).
IntVector specialize(const CZClass& w, const TropicalCurve& curve);

/// One generator per alpha_alpha_beta_unknowns entry: the image of that unit
/// element under (delta - I)^2 at the curve's lengths.
std::vector<IntVector> image_generators(const CycleBasisContext& ctx, const TropicalCurve& curve);
/// Nonzero rows of the Hermite normal form of the generators.
std::vector<IntVector> image_lattice(const CycleBasisContext& ctx, const TropicalCurve& curve);
std::vector<IntVector> image_lattice(const TropicalCurve& curve);

TrivialityVerdict is_cz_trivial_curve(const TropicalCurve& curve, const CeresaCocycle& v);

/// Sets x_f = 0 and moves to G/f with the induced tree. f must be a
/// non-loop tree edge of the cocycle's context.
CeresaCocycle pushforward_contract(const CeresaCocycle& v, EdgeId f);

/// Sets x_f = x_f + x_f' where f' is the second half of the subdivided edge;
/// f' joins the spanning tree.
CeresaCocycle pushforward_subdivide(const CeresaCocycle& v, EdgeId f);

/// Trivial iff no K4 and no L3 minor, decided after stabilization, bridge
/// contraction and block decomposition. A non-trivial verdict carries a
/// minor witness on G itself. Throws PreconditionError when genus < 2.
TrivialityVerdict classify(const MultiGraph& G);

/// Re-derives the tested class from the certificate; false on mismatch.
bool replay_graph_certificate(const CycleBasisContext& ctx, const CZClass& w,
                              const TrivialityVerdict& verdict);

}  // namespace czc
