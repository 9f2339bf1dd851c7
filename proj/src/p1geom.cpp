#include "nilmod/p1geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nilmod/field.hpp"

namespace nilmod {

namespace {

void sums_of_subsets(const std::vector<int>& t, std::size_t start, std::size_t left, int acc,
                     std::vector<int>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + left <= t.size(); ++i)
    sums_of_subsets(t, i + 1, left - 1, acc + t[i], out);
}

void sums_of_multisets(const std::vector<int>& t, std::size_t start, std::size_t left, int acc,
                       std::vector<int>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < t.size(); ++i) sums_of_multisets(t, i, left - 1, acc + t[i], out);
}

}  // namespace

SplitBundle::SplitBundle(std::vector<int> twists) : twists_(std::move(twists)) {
  std::sort(twists_.begin(), twists_.end());
}

SplitBundle SplitBundle::repeated(int n, std::size_t count) {
  return SplitBundle(std::vector<int>(count, n));
}

long long SplitBundle::degree() const {
  return std::accumulate(twists_.begin(), twists_.end(), 0LL);
}

SplitBundle SplitBundle::operator+(const SplitBundle& other) const {
  auto t = twists_;
  t.insert(t.end(), other.twists_.begin(), other.twists_.end());
  return SplitBundle(std::move(t));
}

std::string SplitBundle::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? "," : "") << twists_[i];
  os << ']';
  return os.str();
}

Cohomology cohomology(int twist) {
  return {std::max(twist + 1, 0), std::max(-twist - 1, 0)};
}

Cohomology cohomology(const SplitBundle& bundle) {
  Cohomology total;
  for (int n : bundle.twists()) {
    auto c = cohomology(n);
    total.h0 += c.h0;
    total.h1 += c.h1;
  }
  return total;
}

SplitBundle sym(const SplitBundle& bundle, std::size_t k) {
  std::vector<int> out;
  sums_of_multisets(bundle.twists(), 0, k, 0, out);
  return SplitBundle(std::move(out));
}

SplitBundle wedge(const SplitBundle& bundle, std::size_t i) {
  std::vector<int> out;
  if (i <= bundle.rank()) sums_of_subsets(bundle.twists(), 0, i, 0, out);
  return SplitBundle(std::move(out));
}

SplitBundle det(const SplitBundle& bundle) {
  return SplitBundle({static_cast<int>(bundle.degree())});
}

SplitBundle tensor(const SplitBundle& a, const SplitBundle& b) {
  std::vector<int> out;
  for (int x : a.twists())
    for (int y : b.twists()) out.push_back(x + y);
  return SplitBundle(std::move(out));
}

SplitBundle twist(const SplitBundle& bundle, int m) {
  return tensor(bundle, SplitBundle({m}));
}

SplitBundle dual(const SplitBundle& bundle) {
  std::vector<int> out;
  for (int x : bundle.twists()) out.push_back(-x);
  return SplitBundle(std::move(out));
}

Geo1Check check_geo1(const SplitBundle& eta) {
  const auto& t = eta.twists();
  if (!t.empty() && t.front() < 0)
    throw InvalidInput("check_geo1 supports only bundles with nonnegative twists, got " +
                       eta.to_string());
  const int lowest = t.empty() ? 0 : t.front();
  const long long deg = eta.degree();
  constexpr int omega = -2;

  Geo1Check c;
  c.ample = lowest >= 1;
  c.globally_generated = lowest >= 0;
  // H^1 of every summand O(k * lowest + ...) of Sym^k vanishes iff its twist is >= -1
  c.sym_vanishing = lowest >= -1;
  c.sym_det_omega_vanishing = deg + omega >= -1;
  c.cm_predicted =
      c.ample && c.globally_generated && c.sym_vanishing && c.sym_det_omega_vanishing;
  const auto canonical_sections = cohomology(static_cast<int>(deg) + omega).h0;
  c.gorenstein_at_origin_predicted = canonical_sections <= 1;
  return c;
}

BettiTable predict_betti(const SplitBundle& xi,
                         const std::optional<std::vector<int>>& module_generator_degrees) {
  if (!xi.twists().empty() && xi.twists().back() >= 0)
    throw InvalidInput("predict_betti needs a bundle with negative twists, got " + xi.to_string());
  const auto r = static_cast<int>(xi.rank());
  BettiTable table;
  table.max_n = r;
  table.max_j = r + 1;
  table.certified = true;
  for (int n = 0; n <= r; ++n) {
    table.add(n, n, cohomology(wedge(xi, n)).h0);
    if (n + 1 <= r) table.add(n, n + 1, cohomology(wedge(xi, n + 1)).h1);
  }
  if (module_generator_degrees) {
    std::map<int, long long> given;
    for (int d : *module_generator_degrees) ++given[d];
    std::map<int, long long> predicted;
    for (const auto& [key, value] : table.entries)
      if (key.first == 0) predicted[key.second] = value;
    if (given != predicted)
      throw InvalidInput("module generator degrees do not match the predicted row 0");
  }
  return table;
}

SplitBundle xi_for_A(int r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  return SplitBundle::repeated(-1, 2 * static_cast<std::size_t>(r));
}

SplitBundle xi_for_B0(int r) {
  return SplitBundle({-2}) + xi_for_A(r);
}

}  // namespace nilmod
