#include "nilmod/syzygy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "nilmod/invariants.hpp"
#include "nilmod/linalg.hpp"

namespace nilmod {

namespace {

std::vector<std::size_t> validated(const std::vector<std::size_t>& w, std::size_t nvars) {
  std::vector<std::size_t> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("Koszul variables must be distinct");
  for (auto v : sorted)
    if (v >= nvars) throw InvalidInput("Koszul variable index out of range");
  return w;
}

// Subsets of {0..q-1} of each size, as bitmasks, with their positions.
struct SubsetIndex {
  std::vector<std::vector<std::uint32_t>> by_size;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> position;

  explicit SubsetIndex(std::size_t q) : by_size(q + 1), position(q + 1) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
      auto s = static_cast<std::uint32_t>(mask);
      auto n = static_cast<std::size_t>(std::popcount(s));
      position[n].emplace(s, static_cast<std::uint32_t>(by_size[n].size()));
      by_size[n].push_back(s);
    }
  }
};

template <typename F>
class KoszulComplex {
 public:
  KoszulComplex(const Ideal<F>& ideal, std::vector<std::size_t> w, int max_j)
      : ideal_(ideal), lt_(leading_term_ideal(ideal)), w_(std::move(w)), subsets_(w_.size()) {
    std::size_t top = static_cast<std::size_t>(std::max(max_j, 0)) + 1;
    std_.resize(top);
    index_.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
      std_[d] = standard_monomials(lt_, static_cast<std::uint32_t>(d));
      for (std::size_t i = 0; i < std_[d].size(); ++i)
        index_[d].emplace(std_[d][i], static_cast<std::uint32_t>(i));
    }
  }

  std::size_t q() const { return w_.size(); }

  std::size_t dim(int n, int j) const {
    if (n < 0 || static_cast<std::size_t>(n) > q() || j < n) return 0;
    return std_[j - n].size() * subsets_.by_size[n].size();
  }

  // Rank of d_n : K_{n,j} -> K_{n-1,j}.
  std::size_t differential_rank(int n, int j) {
    if (n < 1 || static_cast<std::size_t>(n) > q() || j < n) return 0;
    auto key = std::make_pair(n, j);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;

    const auto& k = ideal_.ring()->field();
    const auto& sources = std_[j - n];
    const auto& subsets = subsets_.by_size[n];
    const auto target_subsets = static_cast<std::uint32_t>(subsets_.by_size[n - 1].size());
    std::vector<SparseRow<F>> rows;
    rows.reserve(sources.size() * subsets.size());
    for (const auto& m : sources) {
      for (auto mask : subsets) {
        SparseRow<F> row;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
          const std::uint32_t bit = rest & (~rest + 1);
          const auto s = static_cast<std::size_t>(std::countr_zero(bit));
          const bool negative = std::popcount(mask & (bit - 1)) % 2 == 1;
          const auto face = subsets_.position[n - 1].at(mask & ~bit);
          const Monomial u = m * Monomial::variable(m.size(), w_[s]);
          for (const auto& [col, c] : normal_form_of(u))
            row.emplace_back(col * target_subsets + face, negative ? k.neg(c) : c);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    auto r = matrix_rank(k, std::move(rows));
    ranks_.emplace(key, r);
    return r;
  }

 private:
  // Normal form of u as a row over the standard monomials of its degree.
  const SparseRow<F>& normal_form_of(const Monomial& u) {
    if (auto it = nf_cache_.find(u); it != nf_cache_.end()) return it->second;
    const auto& k = ideal_.ring()->field();
    const auto& idx = index_[u.degree()];
    SparseRow<F> row;
    if (auto hit = idx.find(u); hit != idx.end()) {
      row.emplace_back(hit->second, k.one());
    } else {
      auto f = reduce(Polynomial<F>::monomial(ideal_.ring(), u, k.one()), ideal_.basis());
      for (const auto& t : f.terms()) row.emplace_back(idx.at(t.monomial), t.coeff);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return nf_cache_.emplace(u, std::move(row)).first->second;
  }

  const Ideal<F>& ideal_;
  MonomialIdeal lt_;
  std::vector<std::size_t> w_;
  SubsetIndex subsets_;
  std::vector<std::vector<Monomial>> std_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
  std::unordered_map<Monomial, SparseRow<F>, MonomialHash> nf_cache_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

}  // namespace

template <typename F>
std::vector<int> module_generator_degrees(const Ideal<F>& ideal,
                                          const std::vector<std::size_t>& w) {
  const auto& ring = ideal.ring();
  validated(w, ring->nvars());
  auto gens = ideal.generators();
  for (auto v : w) gens.push_back(Polynomial<F>::variable(ring, v));
  auto fiber = in_grevlex(Ideal<F>(ring, std::move(gens)));
  auto lt = leading_term_ideal(fiber);
  if (lt.is_unit()) return {};

  std::vector<bool> in_w(ring->nvars(), false);
  for (auto v : w) in_w[v] = true;
  std::uint32_t bound = 0;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (in_w[v]) continue;
    std::uint32_t pure = 0;
    for (const auto& g : lt.generators())
      if (g.support() == (std::uint32_t{1} << v)) pure = g[v];
    if (pure == 0)
      throw InvalidInput("quotient is not finite over k[W]: no pure power of " +
                         ring->variables()[v] + " among the leading terms");
    bound += pure - 1;
  }
  std::vector<int> degrees;
  for (std::uint32_t d = 0; d <= bound; ++d) {
    auto count = count_standard_monomials(lt, d);
    degrees.insert(degrees.end(), count, static_cast<int>(d));
  }
  return degrees;
}

template <typename F>
TPoly k_polynomial(const Ideal<F>& ideal, std::size_t w_size) {
  auto hs = hilbert_series(ideal);
  if (!hs.dimension) return {};
  if (*hs.dimension > w_size)
    throw InvalidInput("Hilbert series has a pole of order larger than |W|");
  return tpoly_times_one_minus_t(hs.simplified_numerator, w_size - *hs.dimension);
}

template <typename F>
BettiTable koszul_betti(const Ideal<F>& input, const std::vector<std::size_t>& w,
                        KoszulWindow window) {
  if (!input.is_homogeneous()) throw InvalidInput("Koszul homology needs a homogeneous ideal");
  if (window.max_n < 0 || window.max_j < 0) throw InvalidInput("negative Betti window");
  auto ideal = in_grevlex(input);
  auto ws = validated(w, ideal.ring()->nvars());
  module_generator_degrees(ideal, ws);

  BettiTable table;
  for (auto v : ws) table.koszul_variables.push_back(ideal.ring()->variables()[v]);
  table.max_n = window.max_n;
  table.max_j = window.max_j;
  if (ideal.is_unit()) {
    table.certified = window.max_n >= 0;
    return table;
  }

  KoszulComplex<F> complex(ideal, ws, window.max_j);
  const int top_n = std::min(window.max_n, static_cast<int>(ws.size()));
  for (int n = 0; n <= top_n; ++n) {
    for (int j = n; j <= window.max_j; ++j) {
      const auto dim = complex.dim(n, j);
      if (dim == 0) continue;
      const auto out = complex.differential_rank(n, j);
      const auto in = complex.differential_rank(n + 1, j);
      table.add(n, j, static_cast<long long>(dim - out - in));
    }
  }

  auto kp = k_polynomial(ideal, ws.size());
  table.certified = window.max_n >= static_cast<int>(ws.size()) &&
                    static_cast<int>(kp.size()) <= window.max_j + 1 &&
                    table.euler_polynomial() == kp;
  return table;
}

template <typename F>
BettiTable koszul_betti(const Ideal<F>& ideal, const std::vector<std::string>& w,
                        KoszulWindow window) {
  std::vector<std::size_t> idx;
  for (const auto& name : w) {
    auto i = ideal.ring()->index_of(name);
    if (!i) throw InvalidInput("unknown Koszul variable '" + name + "'");
    idx.push_back(*i);
  }
  return koszul_betti(ideal, idx, window);
}

HomologicalVerdicts homological_verdicts(const BettiTable& table, std::size_t dim,
                                         std::size_t n_vars) {
  HomologicalVerdicts v;
  if (!table.certified) return v;
  v.conclusive = true;
  v.proj_dim = std::max(table.projective_dimension(), 0);
  v.depth = static_cast<int>(n_vars) - v.proj_dim;
  v.cohen_macaulay = v.depth == static_cast<int>(dim);
  v.type = table.row_total(v.proj_dim);
  v.gorenstein = v.cohen_macaulay && v.type == 1;
  return v;
}

#define NILMOD_INSTANTIATE(F)                                                                  \
  template BettiTable koszul_betti(const Ideal<F>&, const std::vector<std::size_t>&,          \
                                   KoszulWindow);                                             \
  template BettiTable koszul_betti(const Ideal<F>&, const std::vector<std::string>&,          \
                                   KoszulWindow);                                             \
  template TPoly k_polynomial(const Ideal<F>&, std::size_t);                                  \
  template std::vector<int> module_generator_degrees(const Ideal<F>&,                         \
                                                     const std::vector<std::size_t>&);

NILMOD_INSTANTIATE(RationalField)
NILMOD_INSTANTIATE(PrimeField)

}  // namespace nilmod
