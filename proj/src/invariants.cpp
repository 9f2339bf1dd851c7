#include "nilmod/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nilmod {

namespace {

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool grevlex_desc(const Monomial& a, const Monomial& b) {
  return MonomialOrder::grevlex().greater(a, b);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TPoly numerator_of(const std::vector<Monomial>& gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    if (seen & g.support()) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    TPoly out{1};
    for (const auto& g : gens) {
      TPoly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      out = tpoly_mul(out, factor);
    }
    return out;
  }

  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] != 0) ++count[v];
  std::size_t pivot = 0;
  for (std::size_t v = 1; v < nvars; ++v)
    if (count[v] > count[pivot]) pivot = v;

  // M + (x)
  std::vector<Monomial> with_pivot;
  with_pivot.push_back(Monomial::variable(nvars, pivot));
  for (const auto& g : gens)
    if (g[pivot] == 0) with_pivot.push_back(g);
  auto sum_part = minimal_monomial_ideal(nvars, std::move(with_pivot));

  // M : x
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (auto g : gens) {
    if (g[pivot] != 0) g.set(pivot, g[pivot] - 1);
    colon.push_back(g);
  }
  auto colon_part = minimal_monomial_ideal(nvars, std::move(colon));

  TPoly shifted = numerator_of(colon_part.generators(), nvars);
  if (!shifted.empty()) shifted.insert(shifted.begin(), 0);
  return tpoly_add(numerator_of(sum_part.generators(), nvars), shifted);
}

void min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen,
                     std::size_t count, std::size_t& best) {
  if (count >= best) return;
  const std::uint32_t* open = nullptr;
  for (const auto& s : supports) {
    if ((s & chosen) != 0) continue;
    if (open == nullptr || std::popcount(s) < std::popcount(*open)) open = &s;
  }
  if (open == nullptr) {
    best = count;
    return;
  }
  if (count + 1 >= best) return;
  for (std::uint32_t rest = *open; rest != 0; rest &= rest - 1) {
    std::uint32_t bit = rest & (~rest + 1);
    min_hitting_set(supports, chosen | bit, count + 1, best);
  }
}

void enumerate(const MonomialIdeal& m, Monomial& cur, std::size_t var, std::uint32_t left,
               std::vector<Monomial>& out) {
  const std::size_t n = m.nvars();
  if (var + 1 == n) {
    cur.set(var, static_cast<int>(left));
    if (!m.contains(cur)) out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = static_cast<int>(left); e >= 0; --e) {
    cur.set(var, e);
    // divisibility is inherited by multiples, so prune early
    if (e > 0 && m.contains(cur)) continue;
    enumerate(m, cur, var + 1, left - static_cast<std::uint32_t>(e), out);
  }
  cur.set(var, 0);
}

}  // namespace

template <typename F>
Ideal<F> in_grevlex(const Ideal<F>& ideal) {
  if (ideal.ring()->order() == MonomialOrder::grevlex()) return ideal;
  auto ring = ideal.ring()->with_order(MonomialOrder::grevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.reorder(ring));
  return Ideal<F>(ring, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw std::invalid_argument("monomial of the wrong length");
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_desc(a, b);
  });
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators_)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : generators_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal minimal_monomial_ideal(std::size_t nvars, std::vector<Monomial> generators) {
  return MonomialIdeal(nvars, std::move(generators));
}

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

TPoly tpoly_sub(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

TPoly tpoly_times_one_minus_t(const TPoly& a, std::size_t k) {
  TPoly out = a;
  for (std::size_t s = 0; s < k; ++s) out = tpoly_mul(out, TPoly{1, -1});
  return out;
}

long long tpoly_eval_one(const TPoly& a) {
  long long s = 0;
  for (auto c : a) s += c;
  return s;
}

long long HilbertSeries::coefficient(std::size_t j) const {
  if (!dimension) return 0;
  const auto k = static_cast<long long>(*dimension);
  long long total = 0;
  for (std::size_t i = 0; i < simplified_numerator.size() && i <= j; ++i) {
    const long long d = static_cast<long long>(j - i);
    total += simplified_numerator[i] * (k == 0 ? (d == 0 ? 1 : 0) : binomial(d + k - 1, k - 1));
  }
  return total;
}

HilbertSeries hilbert_series(const MonomialIdeal& m) {
  HilbertSeries hs;
  hs.numerator = numerator_of(m.generators(), m.nvars());
  hs.denominator_exponent = m.nvars();
  if (hs.numerator.empty()) return hs;
  TPoly num = hs.numerator;
  std::size_t k = m.nvars();
  while (k > 0 && tpoly_eval_one(num) == 0) {
    TPoly q(num.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    trim(q);
    num = std::move(q);
    --k;
  }
  hs.simplified_numerator = std::move(num);
  hs.dimension = k;
  return hs;
}

template <typename F>
MonomialIdeal leading_term_ideal(const Ideal<F>& ideal) {
  if (!ideal.ring()->order().is_degree_compatible())
    throw std::invalid_argument("leading_term_ideal needs a degree-compatible order, got " +
                                ideal.ring()->order().name());
  std::vector<Monomial> lts;
  for (const auto& g : ideal.basis()) lts.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.ring()->nvars(), std::move(lts));
}

template <typename F>
HilbertSeries hilbert_series(const Ideal<F>& ideal) {
  if (!ideal.is_homogeneous()) throw InvalidInput("Hilbert series needs a homogeneous ideal");
  return hilbert_series(leading_term_ideal(in_grevlex(ideal)));
}

std::optional<std::size_t> krull_dimension(const MonomialIdeal& m) {
  if (m.is_unit()) return std::nullopt;
  std::vector<std::uint32_t> supports;
  for (const auto& g : m.generators()) supports.push_back(g.support());
  std::size_t best = m.nvars() + 1;
  min_hitting_set(supports, 0, 0, best);
  return m.nvars() - best;
}

template <typename F>
std::optional<std::size_t> krull_dimension(const Ideal<F>& ideal) {
  return krull_dimension(leading_term_ideal(in_grevlex(ideal)));
}

template <typename F>
std::optional<long long> multiplicity(const Ideal<F>& ideal) {
  auto hs = hilbert_series(ideal);
  if (!hs.dimension) return std::nullopt;
  return tpoly_eval_one(hs.simplified_numerator);
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& m, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (m.nvars() == 0) {
    if (degree == 0 && !m.is_unit()) out.emplace_back(0);
    return out;
  }
  Monomial cur(m.nvars());
  enumerate(m, cur, 0, degree, out);
  std::sort(out.begin(), out.end(), grevlex_desc);
  return out;
}

std::size_t count_standard_monomials(const MonomialIdeal& m, std::uint32_t degree) {
  return standard_monomials(m, degree).size();
}

#define NILMOD_INSTANTIATE(F)                                            \
  template MonomialIdeal leading_term_ideal(const Ideal<F>&);            \
  template HilbertSeries hilbert_series(const Ideal<F>&);                \
  template std::optional<std::size_t> krull_dimension(const Ideal<F>&);  \
  template std::optional<long long> multiplicity(const Ideal<F>&);      \
  template Ideal<F> in_grevlex(const Ideal<F>&);

NILMOD_INSTANTIATE(RationalField)
NILMOD_INSTANTIATE(PrimeField)

}  // namespace nilmod
