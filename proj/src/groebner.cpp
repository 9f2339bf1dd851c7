#include "nilmod/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace nilmod {

namespace {

template <typename F>
using PolyPtrs = std::vector<const Polynomial<F>*>;

template <typename F>
Polynomial<F> reduce_by(const Polynomial<F>& f, const PolyPtrs<F>& divisors) {
  using Term = typename Polynomial<F>::Term;
  const auto& k = f.field();
  const auto& order = f.ring()->order();

  std::vector<Term> rem;
  std::vector<Term> work(f.terms());
  std::vector<Term> next;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& t = work[pos];
    const Polynomial<F>* div = nullptr;
    for (const auto* g : divisors) {
      if (g->leading_monomial().divides(t.monomial)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(std::move(work[pos]));
      ++pos;
      continue;
    }
    const Monomial m = t.monomial / div->leading_monomial();
    const auto c = k.neg(k.div(t.coeff, div->leading_coefficient()));
    const auto& gt = div->terms();

    next.clear();
    next.reserve(work.size() - pos + gt.size());
    std::size_t i = pos + 1, j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial gm = gt[j].monomial * m;
      auto cmp = order.compare(work[i].monomial, gm);
      if (cmp > 0) {
        next.push_back(std::move(work[i++]));
      } else if (cmp < 0) {
        next.push_back({gm, k.mul(gt[j].coeff, c)});
        ++j;
      } else {
        auto s = k.add(work[i].coeff, k.mul(gt[j].coeff, c));
        if (!k.is_zero(s)) next.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) next.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j) next.push_back({gt[j].monomial * m, k.mul(gt[j].coeff, c)});
    std::swap(work, next);
    pos = 0;
  }
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(rem));
}

template <typename F>
PolyPtrs<F> pointers(const std::vector<Polynomial<F>>& polys) {
  PolyPtrs<F> out;
  out.reserve(polys.size());
  for (const auto& p : polys)
    if (!p.is_zero()) out.push_back(&p);
  return out;
}

// Minimal + inter-reduced + monic, ascending by leading monomial.
template <typename F>
std::vector<Polynomial<F>> reduce_basis(const RingPtr<F>& ring, std::vector<Polynomial<F>> g) {
  const auto& order = ring->order();
  std::sort(g.begin(), g.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.leading_monomial().divides(p.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    PolyPtrs<F> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    auto r = reduce_by(minimal[i], others).monic();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

template <typename F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors) {
  for (const auto& g : divisors) require_same_ring(f.ring(), g.ring());
  return reduce_by(f, pointers(divisors));
}

template <typename F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  const auto& k = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coefficient()));
  auto b = g.mul_term(l / g.leading_monomial(), k.inv(g.leading_coefficient()));
  return a - b;
}

template <typename F>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>& basis) {
  auto ptrs = pointers(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!reduce_by(s_polynomial(basis[i], basis[j]), ptrs).is_zero()) return false;
    }
  return true;
}

template <typename F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring,
                                      const std::vector<Polynomial<F>>& generators,
                                      GroebnerStats* stats) {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  const auto& order = ring->order();
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<Polynomial<F>> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  PolyPtrs<F> active_ptrs;

  auto refresh = [&] {
    active_ptrs.clear();
    for (auto idx : active) active_ptrs.push_back(&polys[idx]);
  };

  auto unit_basis = [&] {
    std::vector<Polynomial<F>> one{Polynomial<F>::from_int(ring, 1)};
    st.basis_size = 1;
    return one;
  };

  // Gebauer–Möller update with new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].leading_monomial();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (auto g : active) {
      const Monomial& lg = polys[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + d.size());
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(polys[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& x : d) {
      if (x.coprime) continue;
      kept.push_back({x.g, h, x.lcm});
    }
    pairs = std::move(kept);
    std::vector<std::size_t> next_active;
    for (auto g : active)
      if (!lh.divides(polys[g].leading_monomial())) next_active.push_back(g);
    next_active.push_back(h);
    active = std::move(next_active);
    refresh();
  };

  for (const auto& f : generators) {
    require_same_ring(ring, f.ring());
    auto h = reduce_by(f, active_ptrs).monic();
    if (h.is_zero()) continue;
    if (h.is_constant()) return unit_basis();
    polys.push_back(std::move(h));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const auto& a = pairs[p];
      const auto& b = pairs[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = p;
        continue;
      }
      auto c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = p;
    }
    Pair pr = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();

    ++st.pairs_reduced;
    auto h = reduce_by(s_polynomial(polys[pr.i], polys[pr.j]), active_ptrs).monic();
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.is_constant()) return unit_basis();
    polys.push_back(std::move(h));
    update(polys.size() - 1);
    ++st.pairs_considered;
  }

  std::vector<Polynomial<F>> g;
  for (auto idx : active) g.push_back(polys[idx]);
  auto out = reduce_basis(ring, std::move(g));
  st.basis_size = out.size();
  return out;
}

template <typename F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

template <typename F>
const std::vector<Polynomial<F>>& Ideal<F>::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(ring_, generators_, &cache_->stats);
    cache_->ready = true;
  });
  return cache_->basis;
}

template <typename F>
const GroebnerStats& Ideal<F>::stats() const {
  basis();
  return cache_->stats;
}

template <typename F>
bool Ideal<F>::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

template <typename F>
bool Ideal<F>::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial<F>& g) { return g.is_zero(); });
}

template <typename F>
bool Ideal<F>::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial<F>& g) { return g.is_homogeneous(); });
}

template <typename F>
Polynomial<F> normal_form(const Polynomial<F>& f, const Ideal<F>& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  return reduce_by(f, pointers(ideal.basis()));
}

template <typename F>
bool contains(const Ideal<F>& i, const Ideal<F>& j) {
  require_same_ring(i.ring(), j.ring());
  auto ptrs = pointers(i.basis());
  for (const auto& g : j.generators())
    if (!reduce_by(g, ptrs).is_zero()) return false;
  return true;
}

template <typename F>
bool equal_ideals(const Ideal<F>& i, const Ideal<F>& j) {
  require_same_ring(i.ring(), j.ring());
  return i.basis() == j.basis();
}

template <typename F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (k > n) throw std::invalid_argument("eliminate: more variables than the ring has");
  if (k == 0) return ideal;
  auto block_ring = ring->with_order(MonomialOrder::block(k));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.reorder(block_ring));
  auto basis = buchberger(block_ring, gens);

  std::vector<std::string> rest(ring->variables().begin() + static_cast<std::ptrdiff_t>(k),
                                ring->variables().end());
  auto small = PolyRing<F>::make(ring->field(), rest);
  std::vector<std::size_t> index_map(n, 0);
  for (std::size_t i = k; i < n; ++i) index_map[i] = i - k;

  std::vector<Polynomial<F>> out;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v)
      if (g.involves(v)) free = false;
    if (free) out.push_back(g.embed(small, index_map));
  }
  return Ideal<F>(small, std::move(out));
}

std::string fresh_variable_name(const std::vector<std::string>& taken, std::string stem) {
  while (std::find(taken.begin(), taken.end(), stem) != taken.end()) stem += "_";
  return stem;
}

template <typename F>
Ideal<F> intersect(const Ideal<F>& i, const Ideal<F>& j) {
  require_same_ring(i.ring(), j.ring());
  const auto& ring = i.ring();
  if (i.is_zero() || j.is_zero()) return Ideal<F>::zero(ring);

  std::vector<std::string> vars{fresh_variable_name(ring->variables(), "t")};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  auto big = PolyRing<F>::make(ring->field(), vars, MonomialOrder::block(1));
  std::vector<std::size_t> up(ring->nvars());
  for (std::size_t v = 0; v < up.size(); ++v) up[v] = v + 1;

  auto t = Polynomial<F>::variable(big, 0);
  auto one_minus_t = Polynomial<F>::from_int(big, 1) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : i.generators())
    if (!f.is_zero()) gens.push_back(t * f.embed(big, up));
  for (const auto& g : j.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * g.embed(big, up));

  auto basis = buchberger(big, gens);
  std::vector<std::size_t> down(vars.size(), 0);
  for (std::size_t v = 1; v < vars.size(); ++v) down[v] = v - 1;
  std::vector<Polynomial<F>> out;
  for (const auto& g : basis)
    if (!g.involves(0)) out.push_back(g.embed(ring, down));
  return Ideal<F>(ring, std::move(out));
}

template <typename F>
Ideal<F> quotient_by_element(const Ideal<F>& ideal, const Polynomial<F>& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("quotient by the zero element");
  auto meet = intersect(ideal, Ideal<F>(ideal.ring(), {f}));
  std::vector<Polynomial<F>> out;
  for (const auto& g : meet.generators()) {
    auto q = exact_divide(g, f);
    if (!q) throw std::logic_error("quotient_by_element: intersection generator not divisible");
    out.push_back(std::move(*q));
  }
  return Ideal<F>(ideal.ring(), std::move(out));
}

template <typename F>
Ideal<F> ideal_sum(const Ideal<F>& i, const Ideal<F>& j) {
  require_same_ring(i.ring(), j.ring());
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal<F>(i.ring(), std::move(gens));
}

template <typename F>
Ideal<F> ideal_product(const Ideal<F>& i, const Ideal<F>& j) {
  require_same_ring(i.ring(), j.ring());
  std::vector<Polynomial<F>> gens;
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) {
      auto p = a * b;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal<F>(i.ring(), std::move(gens));
}

#define NILMOD_INSTANTIATE(F)                                                                   \
  template class Ideal<F>;                                                                      \
  template std::vector<Polynomial<F>> buchberger(const RingPtr<F>&,                             \
                                                 const std::vector<Polynomial<F>>&,             \
                                                 GroebnerStats*);                               \
  template Polynomial<F> reduce(const Polynomial<F>&, const std::vector<Polynomial<F>>&);       \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);              \
  template bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>&);              \
  template Polynomial<F> normal_form(const Polynomial<F>&, const Ideal<F>&);                    \
  template bool contains(const Ideal<F>&, const Ideal<F>&);                                     \
  template bool equal_ideals(const Ideal<F>&, const Ideal<F>&);                                 \
  template Ideal<F> eliminate(const Ideal<F>&, std::size_t);                                    \
  template Ideal<F> intersect(const Ideal<F>&, const Ideal<F>&);                                \
  template Ideal<F> quotient_by_element(const Ideal<F>&, const Polynomial<F>&);                 \
  template Ideal<F> ideal_sum(const Ideal<F>&, const Ideal<F>&);                                \
  template Ideal<F> ideal_product(const Ideal<F>&, const Ideal<F>&);

NILMOD_INSTANTIATE(RationalField)
NILMOD_INSTANTIATE(PrimeField)

}  // namespace nilmod
