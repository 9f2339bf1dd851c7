#pragma once

#include <vector>

#include "nilmod/groebner.hpp"

namespace nilmod {

/// Homomorphism source -> target / (target_relations), given by the image
/// of each source variable.
template <typename F>
class RingMap {
 public:
  RingMap(RingPtr<F> source, RingPtr<F> target, std::vector<Polynomial<F>> images,
          std::vector<Polynomial<F>> target_relations = {});

  const RingPtr<F>& source() const { return source_; }
  const RingPtr<F>& target() const { return target_; }
  const std::vector<Polynomial<F>>& images() const { return images_; }
  const Ideal<F>& relations() const { return relations_; }

 private:
  RingPtr<F> source_;
  RingPtr<F> target_;
  std::vector<Polynomial<F>> images_;
  Ideal<F> relations_;
};

/// Substitutes the images into f and reduces modulo the target relations.
template <typename F>
Polynomial<F> apply_map(const RingMap<F>& map, const Polynomial<F>& f);

/// Kernel of the induced map, by eliminating the target variables from the
/// graph ideal. Every returned generator is checked to map to zero.
template <typename F>
Ideal<F> kernel_of_map(const RingMap<F>& map);

extern template class RingMap<RationalField>;
extern template class RingMap<PrimeField>;

}  // namespace nilmod
