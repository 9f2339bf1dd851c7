#include "nilmod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilmod {

template <typename F>
PolyRing<F>::PolyRing(F field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables)
    throw InvalidInput("at most " + std::to_string(kMaxVariables) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw InvalidInput("empty variable name");
    if (!seen.insert(v).second) throw InvalidInput("duplicate variable name: " + v);
  }
}

template <typename F>
std::optional<std::size_t> PolyRing<F>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

template <typename F>
std::size_t PolyRing<F>::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InvalidInput("unknown variable: " + std::string(name));
  return *i;
}

template <typename F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("polynomial ring mismatch");
}

template <typename F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
  return p;
}

template <typename F>
Polynomial<F> Polynomial<F>::from_int(RingPtr<F> ring, long long c) {
  auto e = ring->field().from_int(c);
  return constant(std::move(ring), e);
}

template <typename F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(p.ring_->nvars(), index), p.field().one()});
  return p;
}

template <typename F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::string_view name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

template <typename F>
Polynomial<F> Polynomial<F>::monomial(RingPtr<F> ring, const Monomial& m, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <typename F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order();
  const auto& k = p.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <typename F>
Polynomial<F> Polynomial<F>::from_sorted_terms(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <typename F>
bool Polynomial<F>::equals(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == g.terms_[i].monomial) || !(terms_[i].coeff == g.terms_[i].coeff))
      return false;
  }
  return true;
}

template <typename F>
std::uint32_t Polynomial<F>::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <typename F>
bool Polynomial<F>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

template <typename F>
bool Polynomial<F>::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.monomial[var] != 0) return true;
  return false;
}

template <typename F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().neg(t.coeff)});
  return r;
}

namespace {

template <typename F, typename Term>
std::vector<Term> merge_terms(const F& k, const MonomialOrder& order, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      auto s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (!k.is_zero(s)) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, subtract ? k.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

template <typename F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  terms_ = merge_terms(field(), ring_->order(), terms_, g.terms_, false);
  return *this;
}

template <typename F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  terms_ = merge_terms(field(), ring_->order(), terms_, g.terms_, true);
  return *this;
}

template <typename F>
Polynomial<F> Polynomial<F>::times(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  std::vector<Term> all;
  all.reserve(terms_.size() * g.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : g.terms_)
      all.push_back({s.monomial * t.monomial, field().mul(s.coeff, t.coeff)});
  return from_terms(ring_, std::move(all));
}

template <typename F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
  return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::mul_term(const Monomial& m, const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::pow(unsigned e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

template <typename F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || field().is_one(leading_coefficient())) return *this;
  return scaled(field().inv(leading_coefficient()));
}

template <typename F>
Polynomial<F> Polynomial<F>::embed(RingPtr<F> target,
                                   const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != ring_->nvars())
    throw std::invalid_argument("embed: index map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  const std::size_t n = target->nvars();
  for (const auto& t : terms_) {
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) e[index_map[i]] += t.monomial[i];
    out.push_back({Monomial(std::span<const int>(e)), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

template <typename F>
Polynomial<F> Polynomial<F>::reorder(RingPtr<F> target) const {
  if (target->variables() != ring_->variables() || !(target->field() == field()))
    throw std::invalid_argument("reorder: rings differ in more than the order");
  return from_terms(std::move(target), terms_);
}

namespace {

template <typename F>
std::string monomial_text(const PolyRing<F>& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

// Coefficient strings with an optional leading '-' already split off.
std::string join_terms(const std::vector<std::pair<std::string, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    bool negative = !coeff.empty() && coeff[0] == '-';
    std::string mag = negative ? coeff.substr(1) : coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

}  // namespace

template <typename F>
std::string Polynomial<F>::to_string() const {
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& t : terms_)
    parts.emplace_back(field().to_string(t.coeff), monomial_text(*ring_, t.monomial));
  return join_terms(parts);
}

template <typename F>
Polynomial<F> poly_arith(const Polynomial<F>& f, const Polynomial<F>& g, ArithOp op) {
  require_same_ring(f.ring(), g.ring());
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
  }
  throw std::invalid_argument("unknown op");
}

template <typename F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw std::domain_error("exact_divide by zero");
  const auto& k = f.field();
  Polynomial<F> rest = f;
  std::vector<typename Polynomial<F>::Term> quotient;
  const auto inv_lc = k.inv(g.leading_coefficient());
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / g.leading_monomial();
    auto c = k.mul(lt.coeff, inv_lc);
    quotient.push_back({m, c});
    rest -= g.mul_term(m, c);
  }
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(quotient));
}

std::string to_integer_text(const Polynomial<RationalField>& f) {
  if (f.is_zero()) return "0";
  mpz_class den = 1, content = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den());
    content = gcd(content, v);
    ints.push_back(v);
  }
  if (sgn(ints.front()) < 0) content = -content;
  std::vector<std::pair<std::string, std::string>> parts;
  for (std::size_t i = 0; i < ints.size(); ++i)
    parts.emplace_back(mpz_class(ints[i] / content).get_str(),
                       monomial_text(*f.ring(), f.terms()[i].monomial));
  return join_terms(parts);
}

std::string to_integer_text(const Polynomial<PrimeField>& f) {
  return f.monic().to_string();
}

namespace {

template <typename F>
class Parser {
 public:
  Parser(const RingPtr<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<F> parse() {
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                       what + " in '" + std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<F> expression() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  Polynomial<F> factor() {
    Polynomial<F> base = primary();
    if (accept('^')) {
      mpz_class e = integer();
      if (!e.fits_uint_p() || e > 0xFFFF) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }
  Polynomial<F> primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const auto& k = ring_->field();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = k.from_mpz(integer());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        auto den = integer();
        if (den == 0) fail("zero denominator");
        auto d = k.from_mpz(den);
        if (k.is_zero(d)) fail("denominator vanishes in this characteristic");
        num = k.div(num, d);
      }
      return Polynomial<F>::constant(ring_, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <typename F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text) {
  return Parser<F>(ring, text).parse();
}

#define NILMOD_INSTANTIATE(F)                                                              \
  template class PolyRing<F>;                                                              \
  template class Polynomial<F>;                                                            \
  template void require_same_ring(const RingPtr<F>&, const RingPtr<F>&);                   \
  template Polynomial<F> poly_arith(const Polynomial<F>&, const Polynomial<F>&, ArithOp);  \
  template std::optional<Polynomial<F>> exact_divide(const Polynomial<F>&,                 \
                                                     const Polynomial<F>&);                \
  template Polynomial<F> parse_polynomial(const RingPtr<F>&, std::string_view);

NILMOD_INSTANTIATE(RationalField)
NILMOD_INSTANTIATE(PrimeField)

}  // namespace nilmod
