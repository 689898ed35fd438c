#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grodiag/grocat.hpp"

namespace grodiag {

// Finite abelian group in primary decomposition: a sorted multiset of
// prime-power factors (p, k), one per cyclic summand Z/p^k. Empty list is
// the trivial group.
struct FinAbObject {
  std::vector<std::pair<std::int64_t, int>> factors;

  static FinAbObject trivial() { return {}; }
  // validates primality, k >= 1, p^k < 2^31; sorts canonically
  static FinAbObject from_factors(std::vector<std::pair<std::int64_t, int>> factors);

  std::size_t generator_count() const { return factors.size(); }
  std::int64_t factor_order(std::size_t i) const; // p_i^{k_i}

  friend bool operator==(const FinAbObject&, const FinAbObject&) = default;
};

// Homomorphism between finite abelian groups in the chosen generators.
// entries[i][j] is the coefficient of target generator i in the image of
// source generator j, reduced mod the order of target generator i. A
// column is well defined iff order(source_j) * column_j vanishes in the
// target; this is checked at construction.
struct FinAbMorphism {
  FinAbObject source, target;
  std::vector<std::vector<std::int64_t>> entries; // target.generator_count() rows

  static FinAbMorphism make(FinAbObject source, FinAbObject target,
                            std::vector<std::vector<std::int64_t>> entries);
  static FinAbMorphism identity(const FinAbObject& obj);
  static FinAbMorphism zero(const FinAbObject& source, const FinAbObject& target);

  friend bool operator==(const FinAbMorphism&, const FinAbMorphism&) = default;
};

FinAbMorphism compose(const FinAbMorphism& g, const FinAbMorphism& f);

// Class of the whole object in the value group: sum over factors p^k of
// k * e_p.
GroupElement classify(const FinAbObject& obj);

// Class of the image subgroup, computed through Smith normal form of the
// image lattice together with the target relations.
GroupElement image_class(const FinAbMorphism& f);

} // namespace grodiag
