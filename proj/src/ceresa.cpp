#include "czc/ceresa.hpp"

#include <algorithm>

#include "czc/errors.hpp"

namespace czc {

std::string to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::GraphDiophantine: return "graph-diophantine";
    case VerdictMethod::GraphPsi: return "graph-psi";
    case VerdictMethod::CurveLattice: return "curve-lattice";
    case VerdictMethod::MinorTheorem: return "minor-theorem";
    case VerdictMethod::GenusBound: return "genus-bound";
  }
  return "unknown";
}

// ----------------------------------------------------------------- cocycle

CeresaCocycle::CeresaCocycle(CycleBasisContext context, CoefficientMap b)
    : context_(std::move(context)) {
  const int g = context_.genus();
  for (auto& [idx, p] : b) {
    const auto [i, j, k] = idx;
    if (i < 1 || i > g || j < 1 || k > g || j >= k)
      throw PreconditionError("cocycle index (" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ") invalid for genus " +
                              std::to_string(g));
    if (!p.is_homogeneous(1))
      throw PreconditionError("cocycle coefficient " + p.to_string() + " is not a linear form");
    for (EdgeId e : p.variables())
      if (!context_.graph().has_edge(e))
        throw PreconditionError("cocycle uses x" + std::to_string(e) + " but the graph has no edge " +
                                std::to_string(e));
    if (!p.is_zero()) b_.emplace(idx, std::move(p));
  }
}

CZClass compute_w(const CeresaCocycle& v) {
  return {v.context(), image1_coeffs(v.context(), v.b())};
}

std::vector<IndexTriple> alpha_alpha_beta_unknowns(int genus) {
  std::vector<IndexTriple> out;
  for (int i = 1; i <= genus; ++i)
    for (int j = i + 1; j <= genus; ++j)
      for (int k = 1; k <= genus; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<IndexTriple> alpha_cube_unknowns(int genus) { return beta_triples(genus); }

// ----------------------------------------------------------- verdict plumbing

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string render(const IntegerCertificate& cert) {
  std::string out;
  for (const auto& [idx, v] : cert)
    out += std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
           "=" + v.get_str() + ";";
  return out;
}

std::string render(const CoefficientMap& m) {
  std::string out;
  for (const auto& [idx, p] : m)
    out += std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
           "=" + p.to_string() + ";";
  return out;
}

void seal(TrivialityVerdict& v, const std::string& subject) {
  std::string s = to_string(v.method) + "|" + (v.trivial ? "1" : "0") + "|" + render(v.certificate) +
                  "|" + render(v.cube_certificate) + "|" + subject;
  if (v.minor) {
    s += "|" + to_string(v.minor->pattern);
    for (EdgeId e : v.minor->contracted) s += "c" + std::to_string(e);
    for (EdgeId e : v.minor->deleted) s += "d" + std::to_string(e);
  }
  v.replay_hash = fnv1a(s);
}

using Coordinate = std::pair<WedgeTriple, Monomial>;
using Flat = std::map<Coordinate, Integer>;

Flat flatten(const LElement& x) {
  Flat out;
  for (const auto& [t, p] : x.terms())
    for (const auto& [m, c] : p.terms()) out.emplace(Coordinate{t, m}, c);
  return out;
}

LElement beta_element(const CoefficientMap& c) {
  LElement out;
  for (const auto& [idx, p] : c) out.add(WedgeTriple::betas(idx[0], idx[1], idx[2]), p);
  return out;
}

// Columns and right-hand side share one coordinate system.
DiophantineResult solve_flat(const std::vector<Flat>& columns, const Flat& rhs) {
  std::map<Coordinate, std::size_t> row_of;
  for (const auto& col : columns)
    for (const auto& [k, v] : col) row_of.emplace(k, 0);
  for (const auto& [k, v] : rhs) row_of.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;
  IntMatrix A(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [k, v] : columns[c]) A(row_of.at(k), c) = v;
  IntVector b(row_of.size());
  for (const auto& [k, v] : rhs) b[row_of.at(k)] = v;
  return solve_diophantine(A, b);
}

CoefficientMap as_polynomials(const IntegerCertificate& cert) {
  CoefficientMap out;
  for (const auto& [idx, v] : cert)
    if (v != 0) out[idx] = IntPolynomial(v);
  return out;
}

LElement alpha_cube_element(const IntegerCertificate& cert) {
  LElement out;
  for (const auto& [idx, v] : cert)
    out.add(SymplecticLabel::alpha(idx[0]), SymplecticLabel::alpha(idx[1]),
            SymplecticLabel::alpha(idx[2]), IntPolynomial(v));
  return out;
}

}  // namespace

bool replay_graph_certificate(const CycleBasisContext& ctx, const CZClass& w,
                              const TrivialityVerdict& verdict) {
  if (!verdict.trivial) return true;
  switch (verdict.method) {
    case VerdictMethod::GenusBound:
      return ctx.genus() < 3;
    case VerdictMethod::GraphDiophantine:
      return image2_coeffs(ctx, as_polynomials(verdict.certificate)) == w.c;
    case VerdictMethod::GraphPsi: {
      LElement u = alpha_alpha_beta_element(as_polynomials(verdict.certificate));
      u += alpha_cube_element(verdict.cube_certificate);
      return psi_G(ctx, u).homogeneous_part(2) == beta_element(w.c);
    }
    default:
      return false;
  }
}

// -------------------------------------------------------- graph-level test

TrivialityVerdict is_cz_trivial_graph(const MultiGraph& G, const CeresaCocycle& v,
                                      GraphTestMode mode) {
  const CycleBasisContext& ctx = v.context();
  require_same_graph(ctx, G);
  const CZClass w = compute_w(v);
  TrivialityVerdict out;
  if (ctx.genus() < 3) {
    out.trivial = true;
    out.method = VerdictMethod::GenusBound;
    out.detail = "genus < 3: no beta^beta^beta classes";
    seal(out, render(w.c));
    return out;
  }

  const auto pairs = alpha_alpha_beta_unknowns(ctx.genus());
  const auto cubes = mode == GraphTestMode::Psi ? alpha_cube_unknowns(ctx.genus())
                                                : std::vector<IndexTriple>{};
  std::vector<Flat> columns;
  for (const auto& idx : pairs) {
    if (mode == GraphTestMode::Image2) {
      columns.push_back(flatten(beta_element(image2_coeffs(ctx, {{idx, IntPolynomial(1)}}))));
    } else {
      const LElement unit = alpha_alpha_beta_element({{idx, IntPolynomial(1)}});
      columns.push_back(flatten(psi_G(ctx, unit).homogeneous_part(2)));
    }
  }
  for (const auto& idx : cubes) {
    LElement unit;
    unit.add(SymplecticLabel::alpha(idx[0]), SymplecticLabel::alpha(idx[1]),
             SymplecticLabel::alpha(idx[2]), IntPolynomial(1));
    columns.push_back(flatten(psi_G(ctx, unit).homogeneous_part(2)));
  }

  const DiophantineResult solved = solve_flat(columns, flatten(beta_element(w.c)));
  out.method = mode == GraphTestMode::Image2 ? VerdictMethod::GraphDiophantine
                                             : VerdictMethod::GraphPsi;
  out.trivial = solved.feasible;
  if (solved.feasible) {
    const IntVector& x = *solved.solution;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (x[i] != 0) out.certificate[pairs[i]] = x[i];
    for (std::size_t i = 0; i < cubes.size(); ++i)
      if (x[pairs.size() + i] != 0) out.cube_certificate[cubes[i]] = x[pairs.size() + i];
    if (!replay_graph_certificate(ctx, w, out))
      throw InvariantError("graph-level certificate does not replay");
    out.detail = "class lies in the image; certificate replays";
  } else {
    out.detail = "integer system infeasible (" + std::to_string(columns.size()) + " unknowns)";
  }
  seal(out, render(w.c));
  return out;
}

// -------------------------------------------------------- curve-level test

IntVector specialize(const CZClass& w, const TropicalCurve& curve) {
  require_same_graph(w.context, curve.graph());
  IntVector out;
  for (const auto& idx : beta_triples(w.context.genus())) {
    auto it = w.c.find(idx);
    out.push_back(it == w.c.end() ? Integer(0) : poly_eval(it->second, curve.lengths()));
  }
  return out;
}

std::vector<IntVector> image_generators(const CycleBasisContext& ctx, const TropicalCurve& curve) {
  require_same_graph(ctx, curve.graph());
  std::vector<IntVector> out;
  if (ctx.genus() < 3) return out;
  for (const auto& idx : alpha_alpha_beta_unknowns(ctx.genus()))
    out.push_back(specialize(CZClass{ctx, image2_coeffs(ctx, {{idx, IntPolynomial(1)}})}, curve));
  return out;
}

std::vector<IntVector> image_lattice(const CycleBasisContext& ctx, const TropicalCurve& curve) {
  const auto gens = image_generators(ctx, curve);
  if (gens.empty()) return {};
  const HermiteResult hnf = hermite_normal_form(IntMatrix::from_rows(gens));
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < hnf.rank; ++r) out.push_back(hnf.H.row(r));
  return out;
}

std::vector<IntVector> image_lattice(const TropicalCurve& curve) {
  return image_lattice(CycleBasisContext::build(curve.graph()), curve);
}

TrivialityVerdict is_cz_trivial_curve(const TropicalCurve& curve, const CeresaCocycle& v) {
  const CycleBasisContext& ctx = v.context();
  require_same_graph(ctx, curve.graph());
  const CZClass w = compute_w(v);
  TrivialityVerdict out;
  out.method = VerdictMethod::CurveLattice;
  const IntVector target = specialize(w, curve);
  std::string subject;
  for (const auto& t : target) subject += t.get_str() + ",";
  if (ctx.genus() < 3) {
    out.trivial = true;
    out.method = VerdictMethod::GenusBound;
    out.detail = "genus < 3: no beta^beta^beta classes";
    seal(out, subject);
    return out;
  }
  const auto unknowns = alpha_alpha_beta_unknowns(ctx.genus());
  const auto gens = image_generators(ctx, curve);
  const LatticeMembership m = lattice_membership(gens, target);
  out.trivial = m.member;
  if (m.member) {
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      if ((*m.coeffs)[i] != 0) out.certificate[unknowns[i]] = (*m.coeffs)[i];
    const CZClass image{ctx, image2_coeffs(ctx, as_polynomials(out.certificate))};
    if (specialize(image, curve) != target)
      throw InvariantError("curve-level certificate does not replay");
    out.detail = "specialized class lies in the image lattice; certificate replays";
  } else {
    out.detail = "specialized class outside the image lattice";
  }
  seal(out, subject);
  return out;
}

// ------------------------------------------------------------ pushforwards

CeresaCocycle pushforward_contract(const CeresaCocycle& v, EdgeId f) {
  const CycleBasisContext& ctx = v.context();
  const Edge& e = ctx.graph().edge(f);
  if (e.is_loop()) throw PreconditionError("cannot contract loop " + std::to_string(f));
  if (!ctx.is_tree_edge(f))
    throw PreconditionError("edge " + std::to_string(f) + " is not in the spanning tree");
  std::set<EdgeId> tree = ctx.tree_edges();
  tree.erase(f);
  CycleBasisContext contracted = CycleBasisContext::build(contract_edge(ctx.graph(), f), tree);
  CoefficientMap b;
  for (const auto& [idx, p] : v.b()) b[idx] = poly_substitute(p, f, IntPolynomial());
  return CeresaCocycle(std::move(contracted), std::move(b));
}

CeresaCocycle pushforward_subdivide(const CeresaCocycle& v, EdgeId f) {
  const CycleBasisContext& ctx = v.context();
  const Subdivision sub = subdivide_edge(ctx.graph(), f);
  std::set<EdgeId> tree = ctx.tree_edges();
  tree.insert(sub.second);
  CycleBasisContext refined = CycleBasisContext::build(sub.graph, tree);
  const IntPolynomial halves = IntPolynomial::variable(sub.first) + IntPolynomial::variable(sub.second);
  CoefficientMap b;
  for (const auto& [idx, p] : v.b()) b[idx] = poly_substitute(p, f, halves);
  return CeresaCocycle(std::move(refined), std::move(b));
}

// -------------------------------------------------------------- classifier

TrivialityVerdict classify(const MultiGraph& G) {
  if (genus(G) < 2)
    throw PreconditionError("classification needs genus >= 2, got " + std::to_string(genus(G)));
  TrivialityVerdict out;
  out.method = VerdictMethod::MinorTheorem;
  out.trivial = true;
  const MultiGraph core = two_edge_connectivization(stabilize(G));
  const auto parts = blocks(core);
  std::optional<MinorPattern> found;
  for (std::size_t i = 0; i < parts.size() && !found; ++i) {
    const MultiGraph& B = parts[i];
    if (genus(B) >= 3 && has_k4_minor_series_parallel(B)) {
      found = MinorPattern::K4;
    } else if (has_minor(B, MinorPattern::L3).found) {
      found = MinorPattern::L3;
    }
    if (found)
      out.detail = "block " + std::to_string(i + 1) + " of " + std::to_string(parts.size()) +
                   " has a " + to_string(*found) + " minor";
  }
  if (found) {
    MinorSearch search = has_minor(G, *found);
    if (!search.found || !verify_minor_witness(G, *search.witness))
      throw InvariantError("reduced graph has a " + to_string(*found) +
                           " minor but the input graph yields no valid witness");
    out.trivial = false;
    out.minor = std::move(search.witness);
  } else {
    out.detail = "no K4 or L3 minor in any of " + std::to_string(parts.size()) + " blocks";
  }
  std::string subject;
  for (const auto& [a, b] : canonical_form(G)) subject += std::to_string(a) + "-" + std::to_string(b) + ",";
  seal(out, subject);
  return out;
}

}  // namespace czc
