#include "czc/extalg.hpp"

#include <algorithm>
#include <cctype>

#include "czc/errors.hpp"

namespace czc {

// ------------------------------------------------------------------ labels

std::string SymplecticLabel::to_string() const {
  return (kind == Kind::Alpha ? "a" : "b") + std::to_string(index);
}

int pairing(const SymplecticLabel& a, const SymplecticLabel& b) {
  if (a.index != b.index || a.kind == b.kind) return 0;
  return a.kind == SymplecticLabel::Kind::Alpha ? 1 : -1;
}

// ---------------------------------------------------------------- HElement

HElement::HElement(int genus) : genus_(genus), coeffs_(static_cast<std::size_t>(2 * genus)) {}

HElement HElement::basis(int genus, const SymplecticLabel& label) {
  HElement out(genus);
  out[label] = 1;
  return out;
}

std::size_t HElement::slot(const SymplecticLabel& label) const {
  if (label.index < 1 || label.index > genus_)
    throw PreconditionError("label " + label.to_string() + " outside genus " +
                            std::to_string(genus_));
  return static_cast<std::size_t>(label.index - 1 + (label.is_beta() ? genus_ : 0));
}

IntPolynomial& HElement::operator[](const SymplecticLabel& label) { return coeffs_[slot(label)]; }
const IntPolynomial& HElement::operator[](const SymplecticLabel& label) const {
  return coeffs_[slot(label)];
}

bool HElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& p) { return p.is_zero(); });
}

bool HElement::in_Y() const {
  for (int i = 1; i <= genus_; ++i)
    if (!(*this)[SymplecticLabel::alpha(i)].is_zero()) return false;
  return true;
}

HElement& HElement::operator+=(const HElement& other) {
  if (other.genus_ != genus_) throw DimensionMismatch("adding H elements of different genus");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HElement& HElement::operator-=(const HElement& other) {
  if (other.genus_ != genus_) throw DimensionMismatch("subtracting H elements of different genus");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HElement& HElement::operator*=(const IntPolynomial& p) {
  for (auto& c : coeffs_) c *= p;
  return *this;
}

std::vector<std::pair<SymplecticLabel, const IntPolynomial*>> HElement::terms() const {
  std::vector<std::pair<SymplecticLabel, const IntPolynomial*>> out;
  for (int b = 0; b < 2; ++b)
    for (int i = 1; i <= genus_; ++i) {
      const SymplecticLabel label = b ? SymplecticLabel::beta(i) : SymplecticLabel::alpha(i);
      const IntPolynomial& c = (*this)[label];
      if (!c.is_zero()) out.emplace_back(label, &c);
    }
  return out;
}

std::string HElement::to_string() const {
  std::string out;
  for (const auto& [label, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c->to_string() + ")*" + label.to_string();
  }
  return out.empty() ? "0" : out;
}

IntPolynomial pairing(const HElement& h, const HElement& k) {
  if (h.genus() != k.genus()) throw DimensionMismatch("pairing H elements of different genus");
  IntPolynomial out;
  for (int i = 1; i <= h.genus(); ++i) {
    out += h[SymplecticLabel::alpha(i)] * k[SymplecticLabel::beta(i)];
    out -= h[SymplecticLabel::beta(i)] * k[SymplecticLabel::alpha(i)];
  }
  return out;
}

// ------------------------------------------------------------- WedgeTriple

std::optional<std::pair<WedgeTriple, int>> WedgeTriple::normalize(SymplecticLabel a,
                                                                  SymplecticLabel b,
                                                                  SymplecticLabel c) {
  int sign = 1;
  auto order = [&sign](SymplecticLabel& x, SymplecticLabel& y) {
    if (y < x) {
      std::swap(x, y);
      sign = -sign;
    }
  };
  order(a, b);
  order(b, c);
  order(a, b);
  if (a == b || b == c) return std::nullopt;
  return std::make_pair(sorted(a, b, c), sign);
}

WedgeTriple WedgeTriple::sorted(SymplecticLabel a, SymplecticLabel b, SymplecticLabel c) {
  if (!(a < b && b < c)) throw PreconditionError("wedge labels not strictly increasing");
  WedgeTriple out;
  out.labels_ = {a, b, c};
  return out;
}

int WedgeTriple::level() const noexcept {
  return static_cast<int>(std::count_if(labels_.begin(), labels_.end(),
                                        [](const auto& l) { return l.is_beta(); }));
}

std::string WedgeTriple::to_string() const {
  return labels_[0].to_string() + '^' + labels_[1].to_string() + '^' + labels_[2].to_string();
}

// ---------------------------------------------------------------- LElement

IntPolynomial LElement::coefficient(const WedgeTriple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? IntPolynomial() : it->second;
}

void LElement::add(const WedgeTriple& t, const IntPolynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LElement::add(const SymplecticLabel& a, const SymplecticLabel& b, const SymplecticLabel& c,
                   const IntPolynomial& p) {
  if (auto n = WedgeTriple::normalize(a, b, c)) add(n->first, n->second < 0 ? -p : p);
}

int LElement::level() const noexcept {
  int out = 3;
  for (const auto& [t, p] : terms_) out = std::min(out, t.level());
  return out;
}

LElement LElement::graded_part(int betas) const {
  LElement out;
  for (const auto& [t, p] : terms_)
    if (t.level() == betas) out.terms_.emplace(t, p);
  return out;
}

LElement LElement::homogeneous_part(unsigned d) const {
  LElement out;
  for (const auto& [t, p] : terms_) out.add(t, p.homogeneous_part(d));
  return out;
}

LElement& LElement::operator+=(const LElement& other) {
  for (const auto& [t, p] : other.terms_) add(t, p);
  return *this;
}

LElement& LElement::operator-=(const LElement& other) {
  for (const auto& [t, p] : other.terms_) add(t, -p);
  return *this;
}

LElement& LElement::operator*=(const IntPolynomial& p) {
  TermMap scaled;
  for (const auto& [t, c] : terms_) {
    IntPolynomial product = c * p;
    if (!product.is_zero()) scaled.emplace(t, std::move(product));
  }
  terms_ = std::move(scaled);
  return *this;
}

std::string LElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, p] : terms_) {
    std::string term;
    if (p == IntPolynomial(1)) {
      term = t.to_string();
    } else if (p == IntPolynomial(-1)) {
      term = "-" + t.to_string();
    } else if (p.term_count() == 1) {
      term = p.to_string() + "*" + t.to_string();
    } else {
      term = "(" + p.to_string() + ")*" + t.to_string();
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

namespace {

class LParser {
 public:
  explicit LParser(std::string_view text) : text_(text) {}

  LElement parse() {
    LElement out;
    skip_ws();
    if (at_end()) fail("empty element");
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("trailing input after 0");
      return out;
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    while (true) {
      skip_ws();
      auto [triple, coefficient] = term();
      out.add(triple, negative ? -coefficient : coefficient);
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
    }
    return out;
  }

 private:
  std::pair<WedgeTriple, IntPolynomial> term() {
    IntPolynomial coefficient(1);
    if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      coefficient = IntPolynomial::parse(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      expect('*');
    }
    while (true) {
      skip_ws();
      if (peek() == 'a' || peek() == 'b') return {triple(), coefficient};
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= Integer(digits());
      } else if (peek() == 'x') {
        ++pos_;
        const EdgeId e = std::stoi(digits());
        unsigned k = 1;
        if (peek() == '^') {
          ++pos_;
          k = static_cast<unsigned>(std::stoul(digits()));
        }
        coefficient *= IntPolynomial(Monomial::variable(e, k), 1);
      } else {
        fail("expected coefficient factor or wedge");
      }
      expect('*');
    }
  }

  WedgeTriple triple() {
    std::array<SymplecticLabel, 3> labels{};
    for (int i = 0; i < 3; ++i) {
      if (i > 0) expect('^');
      skip_ws();
      const char kind = get();
      if (kind != 'a' && kind != 'b') fail("expected a<i> or b<i>");
      labels[static_cast<std::size_t>(i)] = {
          kind == 'a' ? SymplecticLabel::Kind::Alpha : SymplecticLabel::Kind::Beta,
          std::stoi(digits())};
    }
    if (!(labels[0] < labels[1] && labels[1] < labels[2])) fail("wedge not in sorted form");
    return WedgeTriple::sorted(labels[0], labels[1], labels[2]);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || get() != c) fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("element '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                     ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LElement LElement::parse(std::string_view text) { return LParser(text).parse(); }

// ------------------------------------------------------------------ wedges

LElement wedge(const HElement& a, const HElement& b, const HElement& c) {
  LElement out;
  const auto ta = a.terms();
  const auto tb = b.terms();
  const auto tc = c.terms();
  for (const auto& [la, pa] : ta)
    for (const auto& [lb, pb] : tb) {
      if (la == lb) continue;
      const IntPolynomial pab = *pa * *pb;
      for (const auto& [lc, pc] : tc) out.add(la, lb, lc, pab * *pc);
    }
  return out;
}

LElement wedge_with_omega(const HElement& h) {
  LElement out;
  for (const auto& [label, p] : h.terms())
    for (int i = 1; i <= h.genus(); ++i)
      out.add(label, SymplecticLabel::alpha(i), SymplecticLabel::beta(i), *p);
  return out;
}

// ------------------------------------------------------------ twist actions

HElement edge_class(const CycleBasisContext& ctx, EdgeId e) {
  HElement out(ctx.genus());
  for (const auto& [j, s] : ctx.beta_class(e)) out[SymplecticLabel::beta(j)] = s;
  return out;
}

namespace {

HElement twist(const CycleBasisContext& ctx, EdgeId e, const HElement& h, int direction) {
  const HElement cls = edge_class(ctx, e);
  IntPolynomial factor = pairing(h, cls) * IntPolynomial::variable(e);
  if (direction < 0) factor = -factor;
  return h + cls * factor;
}

// Image of every basis label under an H-endomorphism, for reuse on L.
using LabelImages = std::map<SymplecticLabel, HElement>;

template <typename Map>
LabelImages images(int genus, Map&& map) {
  LabelImages out;
  for (int i = 1; i <= genus; ++i) {
    for (const auto& label : {SymplecticLabel::alpha(i), SymplecticLabel::beta(i)})
      out.emplace(label, map(HElement::basis(genus, label)));
  }
  return out;
}

LElement apply_on_L(const LabelImages& image, const LElement& x) {
  LElement out;
  for (const auto& [t, p] : x.terms()) {
    const auto& l = t.labels();
    LElement w = wedge(image.at(l[0]), image.at(l[1]), image.at(l[2]));
    out += w * p;
  }
  return out;
}

}  // namespace

HElement delta_ell_H(const CycleBasisContext& ctx, EdgeId e, const HElement& h) {
  return twist(ctx, e, h, +1);
}

HElement delta_ell_inv_H(const CycleBasisContext& ctx, EdgeId e, const HElement& h) {
  return twist(ctx, e, h, -1);
}

HElement delta_G_H(const CycleBasisContext& ctx, const HElement& h) {
  HElement out = h;
  for (int j = 1; j <= ctx.genus(); ++j) {
    const IntPolynomial& a = h[SymplecticLabel::alpha(j)];
    if (a.is_zero()) continue;
    for (int i = 1; i <= ctx.genus(); ++i) out[SymplecticLabel::beta(i)] += ctx.q(i, j) * a;
  }
  return out;
}

HElement delta_minus_I_sum_check(const CycleBasisContext& ctx,
                                 const std::map<EdgeId, long>& exponents, const HElement& h) {
  HElement product = h;
  HElement sum(ctx.genus());
  for (const auto& [e, a] : exponents) {
    for (long k = 0; k < std::labs(a); ++k) product = twist(ctx, e, product, a > 0 ? +1 : -1);
    sum += (delta_ell_H(ctx, e, h) - h) * IntPolynomial(Integer(a));
  }
  return product - h - sum;
}

LElement delta_G_L(const CycleBasisContext& ctx, const LElement& x) {
  return apply_on_L(images(ctx.genus(), [&](const HElement& h) { return delta_G_H(ctx, h); }), x);
}

LElement delta_ell_L(const CycleBasisContext& ctx, EdgeId e, const LElement& x) {
  return apply_on_L(images(ctx.genus(), [&](const HElement& h) { return delta_ell_H(ctx, e, h); }),
                    x);
}

LElement psi_G(const CycleBasisContext& ctx, const LElement& x) {
  LElement inner;
  for (const auto& edge : ctx.graph().edges()) inner += delta_ell_L(ctx, edge.id, x) - x;
  return delta_G_L(ctx, inner) - inner;
}

// ------------------------------------------------------ closed-form images

std::vector<IndexTriple> beta_triples(int genus) {
  std::vector<IndexTriple> out;
  for (int r = 1; r <= genus; ++r)
    for (int s = r + 1; s <= genus; ++s)
      for (int t = s + 1; t <= genus; ++t) out.push_back({r, s, t});
  return out;
}

namespace {

void check_indices(const CycleBasisContext& ctx, const CoefficientMap& m, bool first_pair_sorted) {
  for (const auto& [idx, p] : m) {
    for (int v : idx)
      if (v < 1 || v > ctx.genus())
        throw PreconditionError("coefficient index " + std::to_string(v) + " outside 1.." +
                                std::to_string(ctx.genus()));
    const bool ok = first_pair_sorted ? idx[0] < idx[1] : idx[1] < idx[2];
    if (!ok)
      throw PreconditionError("coefficient index (" + std::to_string(idx[0]) + "," +
                              std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
                              ") not in normal order");
  }
}

const IntPolynomial& lookup(const CoefficientMap& m, int i, int j, int k) {
  static const IntPolynomial zero;
  auto it = m.find({i, j, k});
  return it == m.end() ? zero : it->second;
}

}  // namespace

CoefficientMap image1_coeffs(const CycleBasisContext& ctx, const CoefficientMap& b) {
  check_indices(ctx, b, false);
  const int g = ctx.genus();
  CoefficientMap out;
  for (const auto& [r, s, t] : beta_triples(g)) {
    IntPolynomial c;
    for (int i = 1; i <= g; ++i) {
      c += lookup(b, i, r, s) * ctx.q(t, i);
      c -= lookup(b, i, r, t) * ctx.q(s, i);
      c += lookup(b, i, s, t) * ctx.q(r, i);
    }
    if (!c.is_zero()) out[{r, s, t}] = std::move(c);
  }
  return out;
}

CoefficientMap image2_coeffs(const CycleBasisContext& ctx, const CoefficientMap& a) {
  check_indices(ctx, a, true);
  const int g = ctx.genus();
  CoefficientMap out;
  for (const auto& [r, s, t] : beta_triples(g)) {
    IntPolynomial c;
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) {
        const IntPolynomial& ar = lookup(a, i, j, r);
        const IntPolynomial& as = lookup(a, i, j, s);
        const IntPolynomial& at = lookup(a, i, j, t);
        if (ar.is_zero() && as.is_zero() && at.is_zero()) continue;
        // Third-column expansion of |q_ri q_rj a_r; q_si q_sj a_s; q_ti q_tj a_t|.
        c += ar * (ctx.q(s, i) * ctx.q(t, j) - ctx.q(s, j) * ctx.q(t, i));
        c -= as * (ctx.q(r, i) * ctx.q(t, j) - ctx.q(r, j) * ctx.q(t, i));
        c += at * (ctx.q(r, i) * ctx.q(s, j) - ctx.q(r, j) * ctx.q(s, i));
      }
    c *= Integer(2);
    if (!c.is_zero()) out[{r, s, t}] = std::move(c);
  }
  return out;
}

LElement alpha_beta_beta_element(const CoefficientMap& b) {
  LElement out;
  for (const auto& [idx, p] : b)
    out.add(SymplecticLabel::alpha(idx[0]), SymplecticLabel::beta(idx[1]),
            SymplecticLabel::beta(idx[2]), p);
  return out;
}

LElement alpha_alpha_beta_element(const CoefficientMap& a) {
  LElement out;
  for (const auto& [idx, p] : a)
    out.add(SymplecticLabel::alpha(idx[0]), SymplecticLabel::alpha(idx[1]),
            SymplecticLabel::beta(idx[2]), p);
  return out;
}

CoefficientMap beta_coefficients(const LElement& x) {
  CoefficientMap out;
  for (const auto& [t, p] : x.terms())
    if (t.level() == 3) out[{t.labels()[0].index, t.labels()[1].index, t.labels()[2].index}] = p;
  return out;
}

}  // namespace czc
