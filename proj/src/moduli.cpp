#include "nilmod/moduli.hpp"

#include <stdexcept>

namespace nilmod {

std::string to_string(Space space) {
  switch (space) {
    case Space::A: return "A";
    case Space::B0: return "B0";
    case Space::B: return "B";
    case Space::C: return "C";
  }
  return "?";
}

Space parse_space(std::string_view text) {
  if (text == "A") return Space::A;
  if (text == "B0") return Space::B0;
  if (text == "B") return Space::B;
  if (text == "C") return Space::C;
  throw InvalidInput("unknown space '" + std::string(text) + "' (expected A, B0, B or C)");
}

ModuliSpec::ModuliSpec(Space space_, int r_, CoefficientField field_)
    : space(space_), r(r_), field(field_) {
  if (r < 1) throw InvalidInput("r must be at least 1");
}

int matrix_count(Space space, int r) { return space == Space::C ? r + 1 : r; }
bool has_phi(Space space) { return space != Space::A; }

std::vector<std::string> moduli_variables(int matrices, bool with_phi) {
  std::vector<std::string> vars;
  for (int i = 1; i <= matrices; ++i) {
    vars.push_back("a" + std::to_string(i));
    vars.push_back("b" + std::to_string(i));
    vars.push_back("c" + std::to_string(i));
  }
  if (with_phi) {
    for (int j = 1; j <= 4; ++j) vars.push_back("phi" + std::to_string(j));
    vars.push_back("alpha");
  }
  return vars;
}

template <typename F>
RingPtr<F> moduli_ring(const F& field, Space space, int r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  return PolyRing<F>::make(field, moduli_variables(matrix_count(space, r), has_phi(space)));
}

namespace {

template <typename F>
struct Matrix2 {
  Polynomial<F> e11, e12, e21, e22;

  Matrix2 operator*(const Matrix2& o) const {
    return {e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
            e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
  }
  Matrix2 operator-(const Matrix2& o) const {
    return {e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22};
  }
  Matrix2 scaled(const Polynomial<F>& s) const { return {s * e11, s * e12, s * e21, s * e22}; }
  std::vector<Polynomial<F>> entries() const { return {e11, e12, e21, e22}; }
};

// The traceless matrix [[a, b], [c, -a]].
template <typename F>
struct Traceless {
  Polynomial<F> a, b, c;
  Matrix2<F> matrix() const { return {a, b, c, -a}; }
};

template <typename F>
class Builder {
 public:
  Builder(RingPtr<F> ring) : ring_(std::move(ring)) {}

  const RingPtr<F>& ring() const { return ring_; }
  Polynomial<F> var(const std::string& name) const { return Polynomial<F>::variable(ring_, name); }
  Polynomial<F> num(long long v) const { return Polynomial<F>::from_int(ring_, v); }
  Traceless<F> m(int i) const {
    auto s = std::to_string(i);
    return {var("a" + s), var("b" + s), var("c" + s)};
  }
  Polynomial<F> phi(int j) const { return var("phi" + std::to_string(j)); }
  Polynomial<F> alpha() const { return var("alpha"); }
  Matrix2<F> phi_matrix() const { return {phi(1), phi(2), phi(3), phi(4)}; }

 private:
  RingPtr<F> ring_;
};

template <typename T>
void append(std::vector<T>& out, const std::vector<T>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// m_i m_j = 0 for all ordered pairs (its (1,1) entry covers the (2,2) entry
// of the transposed pair), and the off-diagonal entries for i < j.
template <typename F>
std::vector<Polynomial<F>> nilpotent_relations(const std::vector<Traceless<F>>& ms) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      out.push_back(ms[i].a * ms[j].a + ms[i].b * ms[j].c);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      out.push_back(ms[i].a * ms[j].b - ms[j].a * ms[i].b);
      out.push_back(ms[i].a * ms[j].c - ms[j].a * ms[i].c);
    }
  return out;
}

// m phi = alpha m, entrywise.
template <typename F>
std::vector<Polynomial<F>> eigen_relations(const Builder<F>& bld, const Traceless<F>& m) {
  auto lhs = m.matrix() * bld.phi_matrix();
  auto rhs = m.matrix().scaled(bld.alpha());
  return (lhs - rhs).entries();
}

template <typename F>
Polynomial<F> det_phi(const Builder<F>& bld) {
  return bld.phi(1) * bld.phi(4) - bld.phi(2) * bld.phi(3);
}

template <typename F>
Polynomial<F> char_poly_relation(const Builder<F>& bld) {
  auto a = bld.alpha();
  return a * a - (bld.phi(1) + bld.phi(4)) * a + det_phi(bld);
}

template <typename F>
std::vector<Traceless<F>> matrices(const Builder<F>& bld, int from, int to) {
  std::vector<Traceless<F>> ms;
  for (int i = from; i <= to; ++i) ms.push_back(bld.m(i));
  return ms;
}

template <typename F>
std::vector<Polynomial<F>> b0_generators(const Builder<F>& bld, int r) {
  auto gens = nilpotent_relations(matrices(bld, 1, r));
  for (int i = 1; i <= r; ++i) append(gens, eigen_relations(bld, bld.m(i)));
  gens.push_back(char_poly_relation(bld));
  return gens;
}

template <typename F>
std::vector<Polynomial<F>> b_generators(const Builder<F>& bld, int r) {
  auto gens = b0_generators(bld, r);
  gens.push_back(det_phi(bld) - bld.num(1));
  return gens;
}

void require_r(int r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
}

template <typename F>
Polynomial<F> tv(const RingPtr<F>& ring, const std::string& name) {
  return Polynomial<F>::variable(ring, name);
}

// Images of a_i, b_i, c_i under m_i = l_i v w^T with v = (y, -x), w = (x, y).
template <typename F>
void rank_one_images(const RingPtr<F>& target, const Polynomial<F>& lambda,
                     std::vector<Polynomial<F>>& images) {
  auto x = tv(target, "x"), y = tv(target, "y");
  images.push_back(lambda * x * y);
  images.push_back(lambda * y * y);
  images.push_back(-(lambda * x * x));
}

std::vector<std::string> lambda_names(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back("l" + std::to_string(i));
  return out;
}

// phi = c I + v z^T, alpha = c, det phi = 1 imposed on the target.
template <typename F>
RingMap<F> borel_parametrization(const RingPtr<F>& source, int r, int zero_matrices) {
  const auto& k = source->field();
  std::vector<std::string> vars{"x", "y", "z1", "z2", "c"};
  for (const auto& l : lambda_names(1, r)) vars.push_back(l);
  auto target = PolyRing<F>::make(k, vars);
  auto x = tv(target, "x"), y = tv(target, "y"), z1 = tv(target, "z1"), z2 = tv(target, "z2"),
       c = tv(target, "c");
  std::vector<Polynomial<F>> images;
  for (int i = 1; i <= r; ++i) rank_one_images(target, tv(target, "l" + std::to_string(i)), images);
  for (int i = 0; i < 3 * zero_matrices; ++i) images.push_back(Polynomial<F>(target));
  images.push_back(c + y * z1);
  images.push_back(y * z2);
  images.push_back(-(x * z1));
  images.push_back(c - x * z2);
  images.push_back(c);
  auto relation = c * c + c * (z1 * y - z2 * x) - Polynomial<F>::from_int(target, 1);
  return RingMap<F>(source, target, std::move(images), {relation});
}

// phi = sign I + l0 v w^T, alpha = sign: the alpha = +-1 components of C_r.
template <typename F>
RingMap<F> unipotent_parametrization(const RingPtr<F>& source, int matrices, int sign) {
  const auto& k = source->field();
  std::vector<std::string> vars{"x", "y"};
  for (const auto& l : lambda_names(0, matrices)) vars.push_back(l);
  auto target = PolyRing<F>::make(k, vars);
  auto x = tv(target, "x"), y = tv(target, "y"), l0 = tv(target, "l0");
  auto s = Polynomial<F>::from_int(target, sign);
  std::vector<Polynomial<F>> images;
  for (int i = 1; i <= matrices; ++i)
    rank_one_images(target, tv(target, "l" + std::to_string(i)), images);
  images.push_back(s + l0 * x * y);
  images.push_back(l0 * y * y);
  images.push_back(-(l0 * x * x));
  images.push_back(s - l0 * x * y);
  images.push_back(s);
  return RingMap<F>(source, target, std::move(images));
}

}  // namespace

template <typename F>
Ideal<F> construct_A(int r, const F& field) {
  require_r(r);
  Builder<F> bld(moduli_ring(field, Space::A, r));
  return Ideal<F>(bld.ring(), nilpotent_relations(matrices(bld, 1, r)));
}

template <typename F>
Ideal<F> construct_B0(int r, const F& field) {
  require_r(r);
  Builder<F> bld(moduli_ring(field, Space::B0, r));
  return Ideal<F>(bld.ring(), b0_generators(bld, r));
}

template <typename F>
Ideal<F> construct_B(int r, const F& field) {
  require_r(r);
  Builder<F> bld(moduli_ring(field, Space::B, r));
  return Ideal<F>(bld.ring(), b_generators(bld, r));
}

template <typename F>
Ideal<F> construct_C(int r, const F& field) {
  require_r(r);
  Builder<F> bld(moduli_ring(field, Space::C, r));
  auto gens = nilpotent_relations(matrices(bld, 1, r + 1));
  for (int i = 1; i <= r + 1; ++i) append(gens, eigen_relations(bld, bld.m(i)));
  auto last = bld.m(r + 1).matrix();
  auto phi = bld.phi_matrix();
  append(gens, (last * phi - phi * last).entries());
  gens.push_back(char_poly_relation(bld));
  gens.push_back(det_phi(bld) - bld.num(1));
  return Ideal<F>(bld.ring(), std::move(gens));
}

template <typename F>
Ideal<F> construct(Space space, int r, const F& field) {
  switch (space) {
    case Space::A: return construct_A(r, field);
    case Space::B0: return construct_B0(r, field);
    case Space::B: return construct_B(r, field);
    case Space::C: return construct_C(r, field);
  }
  throw InvalidInput("unknown space");
}

std::vector<std::string> master_generators(Space space, int r) {
  auto ideal = construct(space, r, RationalField{});
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(to_integer_text(g));
  return out;
}

template <typename F>
ComponentCertificate<F> certificate_A(int r, const F& field) {
  auto ideal = construct_A(r, field);
  std::vector<std::string> vars{"x", "y"};
  for (const auto& l : lambda_names(1, r)) vars.push_back(l);
  auto target = PolyRing<F>::make(field, vars);
  std::vector<Polynomial<F>> images;
  for (int i = 1; i <= r; ++i) rank_one_images(target, tv(target, "l" + std::to_string(i)), images);
  RingMap<F> map(ideal.ring(), target, std::move(images));
  return {"A" + std::to_string(r), ideal, map};
}

template <typename F>
ComponentCertificate<F> certificate_B(int r, const F& field) {
  auto ideal = construct_B(r, field);
  auto map = borel_parametrization(ideal.ring(), r, 0);
  return {"B" + std::to_string(r), ideal, map};
}

template <typename F>
std::vector<ComponentCertificate<F>> component_ideals_C(int r, const F& field) {
  require_r(r);
  Builder<F> bld(moduli_ring(field, Space::C, r));
  std::vector<ComponentCertificate<F>> out;

  for (int sign : {1, -1}) {
    // m0 = phi - sign, traceless because tr(phi) = 2 sign on this component
    Traceless<F> m0{bld.phi(1) - bld.num(sign), bld.phi(2), bld.phi(3)};
    std::vector<Traceless<F>> ms{m0};
    append(ms, matrices(bld, 1, r + 1));
    std::vector<Polynomial<F>> gens{bld.alpha() - bld.num(sign),
                                    bld.phi(1) + bld.phi(4) - bld.num(2 * sign)};
    append(gens, nilpotent_relations(ms));
    out.push_back({sign > 0 ? "p1" : "p2", Ideal<F>(bld.ring(), std::move(gens)),
                   unipotent_parametrization(bld.ring(), r + 1, sign)});
  }

  auto gens = b_generators(bld, r);
  auto last = bld.m(r + 1);
  gens.push_back(last.a);
  gens.push_back(last.b);
  gens.push_back(last.c);
  out.push_back({"p3", Ideal<F>(bld.ring(), std::move(gens)),
                 borel_parametrization(bld.ring(), r, 1)});
  return out;
}

template <typename F>
bool target_is_domain(const RingMap<F>& map) {
  const auto& rels = map.relations().generators();
  std::vector<Polynomial<F>> nonzero;
  for (const auto& g : rels)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return true;
  if (nonzero.size() != 1) return false;
  const auto& rel = nonzero.front();
  const auto& k = rel.field();
  const std::size_t n = map.target()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool ok = true;
    int squares = 0;
    bool linear_nonconstant = false;
    bool tail_constant_nonzero = false;
    for (const auto& t : rel.terms()) {
      const auto e = t.monomial[v];
      if (e == 2) {
        if (t.monomial.degree() != 2 || !k.is_one(t.coeff)) ok = false;
        ++squares;
      } else if (e == 1) {
        if (t.monomial.degree() > 1) linear_nonconstant = true;
      } else if (e == 0) {
        if (t.monomial.is_one()) tail_constant_nonzero = true;
        else ok = false;
      } else {
        ok = false;
      }
    }
    if (ok && squares == 1 && linear_nonconstant && tail_constant_nonzero) return true;
  }
  return false;
}

template <typename F>
PrimeCheck certify_prime(ComponentCertificate<F>& cert) {
  PrimeCheck check;
  auto kernel = kernel_of_map(cert.parametrization);
  check.component_in_kernel = contains(kernel, cert.component_ideal);
  check.kernel_in_component = contains(cert.component_ideal, kernel);
  check.domain_target = target_is_domain(cert.parametrization);
  cert.verified_prime = check.certified();
  return check;
}

#define NILMOD_INSTANTIATE(F)                                                          \
  template RingPtr<F> moduli_ring(const F&, Space, int);                               \
  template Ideal<F> construct_A(int, const F&);                                        \
  template Ideal<F> construct_B0(int, const F&);                                       \
  template Ideal<F> construct_B(int, const F&);                                        \
  template Ideal<F> construct_C(int, const F&);                                        \
  template Ideal<F> construct(Space, int, const F&);                                   \
  template ComponentCertificate<F> certificate_A(int, const F&);                       \
  template ComponentCertificate<F> certificate_B(int, const F&);                       \
  template std::vector<ComponentCertificate<F>> component_ideals_C(int, const F&);     \
  template bool target_is_domain(const RingMap<F>&);                                   \
  template PrimeCheck certify_prime(ComponentCertificate<F>&);

NILMOD_INSTANTIATE(RationalField)
NILMOD_INSTANTIATE(PrimeField)

}  // namespace nilmod
