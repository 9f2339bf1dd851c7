#include "nilmod/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilmod {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::CitedInference: return "cited-inference";
  }
  return "?";
}

const std::vector<Anchor>& anchor_table() {
  static const std::vector<Anchor> table = {
      {"engine.groebner", "reduced basis satisfies Buchberger's criterion"},
      {"engine.hilbert", "Hilbert series agrees with standard monomial counts"},
      {"engine.euler", "Betti window certified by the K-polynomial"},
      {"A.presentation", "A_r: quadrics from m_i m_j = 0 and det m_i = 0"},
      {"A.dimension", "A_r has dimension r+1"},
      {"A.integral", "A_r is geometrically integral"},
      {"A.degree", "A_r is the Segre-Veronese cone of P1 x P(r-1) under O(2,1)"},
      {"A.first-syzygies", "A_r: the presentation is a minimal set of C(2r,2) quadrics"},
      {"A.predictor", "A_r: Betti table equals the cohomology of wedge powers of xi"},
      {"A.cohen-macaulay", "A_r is Cohen-Macaulay"},
      {"A.gorenstein", "A_r is Gorenstein at the origin exactly when r = 1"},
      {"A.normal", "A_r is normal"},
      {"geo1.prediction", "vector bundle criterion predicts the Gorenstein verdict"},
      {"B0.presentation", "B0_r: A-relations, m_i phi = alpha m_i, char. polynomial"},
      {"B0.dimension", "B0_r is the cone over B_r, of dimension r+4"},
      {"B0.generators", "B0_r is generated over k[a,b,c,phi] by 1 and alpha"},
      {"B0.first-syzygies", "B0_r: 4r + C(2r,2) quadratic relations over k[a,b,c,phi]"},
      {"B0.predictor", "B0_r: Betti table equals the cohomology of wedge powers of xi"},
      {"B0.cohen-macaulay", "B0_r is Cohen-Macaulay"},
      {"B0.gorenstein", "B0_r is not Gorenstein along the scalar locus"},
      {"B.presentation", "B_r: B0_r plus det(phi) = 1"},
      {"B.dimension", "B_r has dimension r+3"},
      {"B.nonzerodivisor", "det(phi) - 1 is a nonzerodivisor on B0_r"},
      {"B.integral", "B_r is geometrically integral"},
      {"B.cohen-macaulay", "B_r is Cohen-Macaulay (quotient of B0_r by a nonzerodivisor)"},
      {"B.gorenstein", "B_r is not Gorenstein at b (quotient of B0_r by a nonzerodivisor)"},
      {"B.normal", "B_r is normal"},
      {"C.presentation", "C_r: r+1 matrices, m_(r+1) commuting with phi"},
      {"C.dimension", "C_r is equidimensional of dimension r+3"},
      {"C.component-contains", "each candidate component contains C_r"},
      {"C.component-dimension", "each component has dimension r+3"},
      {"C.component-prime", "components alpha = 1, alpha = -1 and m_(r+1) = 0 are prime"},
      {"C.non-containment", "no containment between the three primes"},
      {"C.intersection", "C_r is the intersection of the three primes"},
      {"C.product", "the product of the three primes vanishes on C_r"},
      {"C.components", "C_r has three irreducible components"},
      {"C.reduced", "C_r is reduced"},
      {"C.deformation", "complete local ring of C_r at c is the special fiber"},
      {"flat.master-generators", "both fibers use the same integer generators"},
      {"flat.fiber-dimension", "generic and special fibers have the same dimension"},
      {"flat.fiber-components", "generic and special fibers have the same number of minimal primes"},
      {"flat.equidimensional", "both fibers are equidimensional"},
      {"flat.special-reduced", "special fiber is reduced"},
      {"flat.p-regular", "p is not a zero-divisor"},
      {"flat.reduced", "the ring over Z_p is reduced, given p-adic separatedness"},
  };
  return table;
}

const Anchor& find_anchor(std::string_view id) {
  for (const auto& a : anchor_table())
    if (a.id == id) return a;
  throw std::invalid_argument("unknown report anchor '" + std::string(id) + "'");
}

void VerificationReport::add(std::string claim, std::string_view anchor, std::string computed,
                             Verdict verdict) {
  lines.push_back({std::move(claim), std::string(find_anchor(anchor).id), std::move(computed),
                   verdict});
}

void VerificationReport::check(std::string claim, std::string_view anchor, std::string computed,
                               bool ok) {
  add(std::move(claim), anchor, std::move(computed), ok ? Verdict::Pass : Verdict::Fail);
}

Verdict VerificationReport::overall() const {
  bool all_pass = true;
  for (const auto& l : lines) {
    if (l.verdict == Verdict::Fail) return Verdict::Fail;
    if (l.verdict == Verdict::Inconclusive) all_pass = false;
  }
  return all_pass ? Verdict::Pass : Verdict::Inconclusive;
}

std::string VerificationReport::to_text() const {
  std::size_t wc = 5, wa = 6, wv = 7;
  for (const auto& l : lines) {
    wc = std::max(wc, l.claim.size());
    wa = std::max(wa, l.anchor.size());
    wv = std::max(wv, to_string(l.verdict).size());
  }
  std::ostringstream os;
  os << "space " << space << ", r = " << r << ", characteristic " << characteristic << "\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  os << pad("verdict", wv) << "  " << pad("anchor", wa) << "  " << pad("claim", wc)
     << "  computed\n";
  for (const auto& l : lines)
    os << pad(to_string(l.verdict), wv) << "  " << pad(l.anchor, wa) << "  " << pad(l.claim, wc)
       << "  " << l.computed << "\n";
  os << "overall: " << to_string(overall()) << "\n";
  return os.str();
}

std::string tpoly_to_string(const TPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    long long c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace nilmod
