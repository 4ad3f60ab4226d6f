#include "czc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "czc/errors.hpp"

namespace czc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [e, k] : powers) {
    if (k == 0) continue;
    if (!powers_.empty() && powers_.back().first == e) {
      powers_.back().second += k;
    } else {
      powers_.emplace_back(e, k);
    }
    degree_ += k;
  }
}

Monomial Monomial::variable(EdgeId e, unsigned exponent) {
  return Monomial({{e, exponent}});
}

unsigned Monomial::exponent(EdgeId e) const noexcept {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), Power{e, 0});
  return it != powers_.end() && it->first == e ? it->second : 0;
}

std::pair<Monomial, unsigned> Monomial::split(EdgeId e) const {
  Monomial rest;
  unsigned k = 0;
  for (const auto& p : powers_) {
    if (p.first == e) {
      k = p.second;
    } else {
      rest.powers_.push_back(p);
      rest.degree_ += p.second;
    }
  }
  return {rest, k};
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return other.degree_ <=> degree_;
  const std::size_t n = std::min(powers_.size(), other.powers_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [ea, ka] = powers_[i];
    const auto& [eb, kb] = other.powers_[i];
    if (ea != eb) return ea <=> eb;
    if (ka != kb) return kb <=> ka;
  }
  return powers_.size() <=> other.powers_.size();
}

std::string Monomial::to_string() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& [e, k] : powers_) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(e);
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

// ----------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(long constant) : IntPolynomial(Integer(constant)) {}

IntPolynomial::IntPolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

IntPolynomial::IntPolynomial(const Monomial& m, const Integer& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

IntPolynomial IntPolynomial::variable(EdgeId e) {
  return IntPolynomial(Monomial::variable(e), 1);
}

IntPolynomial IntPolynomial::linear_sum(const std::vector<EdgeId>& edges) {
  IntPolynomial out;
  for (EdgeId e : edges) out.add_term(Monomial::variable(e), 1);
  return out;
}

Integer IntPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned IntPolynomial::degree() const noexcept {
  // Highest degree sorts first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool IntPolynomial::is_homogeneous(unsigned d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::set<EdgeId> IntPolynomial::variables() const {
  std::set<EdgeId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [e, k] : m.powers()) out.insert(e);
  return out;
}

IntPolynomial IntPolynomial::homogeneous_part(unsigned d) const {
  IntPolynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

void IntPolynomial::add_term(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    IntPolynomial out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    while (true) {
      auto [m, c] = term();
      out.add_term(m, negative ? Integer(-c) : c);
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Integer> term() {
    Integer coefficient = 1;
    std::vector<Monomial::Power> powers;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(digits());
      skip_ws();
      if (at_end() || peek() != '*') return {Monomial{}, coefficient};
      get();
      skip_ws();
    }
    while (true) {
      if (peek() != 'x') fail("expected variable x<id>");
      get();
      const std::string id = digits();
      if (id.size() > 9) fail("edge id out of range");
      const EdgeId e = std::stoi(id);
      unsigned k = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        const std::string exponent = digits();
        if (exponent.size() > 9) fail("exponent out of range");
        k = static_cast<unsigned>(std::stoul(exponent));
      }
      powers.emplace_back(e, k);
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      skip_ws();
    }
    return {Monomial(std::move(powers)), coefficient};
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at column " +
                     std::to_string(pos_ + 1) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) {
  return PolyParser(text).parse();
}

// --------------------------------------------------------- free operations

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

Integer poly_eval(const IntPolynomial& p, const Assignment& assignment) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer value = c;
    for (const auto& [e, k] : m.powers()) {
      auto it = assignment.find(e);
      if (it == assignment.end())
        throw MissingVariable("no value assigned to x" + std::to_string(e));
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), k);
      value *= power;
    }
    total += value;
  }
  return total;
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result(1);
  IntPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial poly_substitute(const IntPolynomial& p, EdgeId var,
                              const IntPolynomial& replacement) {
  std::map<unsigned, IntPolynomial> powers;
  IntPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    auto [rest, k] = m.split(var);
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, pow(replacement, k)).first;
    out += IntPolynomial(rest, c) * it->second;
  }
  return out;
}

}  // namespace czc
