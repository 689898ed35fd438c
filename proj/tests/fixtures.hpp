#pragma once

#include "grodiag/gen.hpp"

namespace grodiag::test {

inline GroupElement dim_el(std::int64_t n) {
  return GroupElement::single(GeneratorKey::dim(), n);
}

inline GroupElement prime_el(std::int64_t p, std::int64_t c) {
  return GroupElement::single(GeneratorKey::prime(p), c);
}

inline GroupElement zero_vect() { return GroupElement::zero(Backend::vect); }
inline GroupElement zero_finab() { return GroupElement::zero(Backend::finab); }

// GF(2) module on {1,2,3} with dims (1,2,1), maps [1;0] and [0 1]
inline ConstructibleModule three_step_module() { return gen::demo_field_module(); }

// Z/4 -> Z/2 quotient on {1,2}
inline ConstructibleModule quotient_module() { return gen::demo_finab_module(); }

} // namespace grodiag::test
