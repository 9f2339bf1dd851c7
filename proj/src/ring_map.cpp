#include "nilmod/ring_map.hpp"

#include <stdexcept>

namespace nilmod {

template <typename F>
RingMap<F>::RingMap(RingPtr<F> source, RingPtr<F> target, std::vector<Polynomial<F>> images,
                    std::vector<Polynomial<F>> target_relations)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      relations_(target_, std::move(target_relations)) {
  if (images_.size() != source_->nvars())
    throw std::invalid_argument("ring map needs one image per source variable");
  if (!(source_->field() == target_->field()))
    throw std::invalid_argument("ring map between different coefficient fields");
  for (const auto& img : images_) require_same_ring(target_, img.ring());
}

template <typename F>
Polynomial<F> apply_map(const RingMap<F>& map, const Polynomial<F>& f) {
  require_same_ring(map.source(), f.ring());
  const auto& target = map.target();
  const std::size_t n = map.source()->nvars();
  // powers[v][e] = image_v^e, grown on demand
  std::vector<std::vector<Polynomial<F>>> powers(n);
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<F>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial<F>::from_int(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * map.images()[v]);
    return pw[e];
  };
  Polynomial<F> acc(target);
  for (const auto& t : f.terms()) {
    auto term = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t v = 0; v < n; ++v)
      if (t.monomial[v] != 0) term = term * power(v, t.monomial[v]);
    acc += term;
  }
  if (map.relations().is_zero()) return acc;
  return normal_form(acc, map.relations());
}

template <typename F>
Ideal<F> kernel_of_map(const RingMap<F>& map) {
  const auto& src = map.source();
  const auto& tgt = map.target();
  const std::size_t nt = tgt->nvars();
  const std::size_t ns = src->nvars();

  std::vector<std::string> vars;
  for (const auto& v : tgt->variables()) vars.push_back(v);
  for (const auto& v : src->variables()) vars.push_back(fresh_variable_name(vars, v));
  auto graph_ring = PolyRing<F>::make(src->field(), vars, MonomialOrder::block(nt));

  std::vector<std::size_t> from_target(nt), from_source(ns);
  for (std::size_t i = 0; i < nt; ++i) from_target[i] = i;
  for (std::size_t i = 0; i < ns; ++i) from_source[i] = nt + i;

  std::vector<Polynomial<F>> gens;
  for (const auto& rel : map.relations().generators())
    gens.push_back(rel.embed(graph_ring, from_target));
  for (std::size_t i = 0; i < ns; ++i) {
    gens.push_back(Polynomial<F>::variable(graph_ring, nt + i) -
                   map.images()[i].embed(graph_ring, from_target));
  }
  auto basis = buchberger(graph_ring, gens);

  std::vector<std::size_t> back(nt + ns, 0);
  for (std::size_t i = 0; i < ns; ++i) back[nt + i] = i;
  std::vector<Polynomial<F>> kernel;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v = 0; v < nt && free; ++v)
      if (g.involves(v)) free = false;
    if (free) kernel.push_back(g.embed(src, back));
  }
  for (const auto& g : kernel)
    if (!apply_map(map, g).is_zero())
      throw std::logic_error("kernel_of_map: generator does not map to zero");
  return Ideal<F>(src, std::move(kernel));
}

template class RingMap<RationalField>;
template class RingMap<PrimeField>;
template Polynomial<RationalField> apply_map(const RingMap<RationalField>&,
                                             const Polynomial<RationalField>&);
template Polynomial<PrimeField> apply_map(const RingMap<PrimeField>&,
                                          const Polynomial<PrimeField>&);
template Ideal<RationalField> kernel_of_map(const RingMap<RationalField>&);
template Ideal<PrimeField> kernel_of_map(const RingMap<PrimeField>&);

}  // namespace nilmod
