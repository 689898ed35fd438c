#pragma once

#include <variant>

#include "grodiag/finab.hpp"
#include "grodiag/fp.hpp"
#include "grodiag/grocat.hpp"

namespace grodiag {

// A concrete object/morphism in one of the two implemented categories. A
// field morphism is just its matrix (source dim = cols, target dim = rows).
using Object = std::variant<FieldObject, FinAbObject>;
using Morphism = std::variant<FpMat, FinAbMorphism>;

Backend backend_of(const Object& obj);
Backend backend_of(const Morphism& f);

Object morphism_source(const Morphism& f);
Object morphism_target(const Morphism& f);

bool same_object(const Object& a, const Object& b);

Morphism identity_morphism(const Object& obj);
Morphism zero_morphism(const Object& source, const Object& target);

// g after f; endpoints must match exactly.
Morphism compose(const Morphism& g, const Morphism& f);

// Class of the image in the value group: rank for field maps, the Smith
// classification of the image subgroup for finite abelian maps.
GroupElement image_class(const Morphism& f);

// Class of the full object (image of its identity).
GroupElement object_class(const Object& obj);

// Limit of the square diagram A -> C0 <- B, A -> C1 <- B: the subspace of
// A (+) B where both pairs of maps agree, with its two projections.
// Field backend only.
struct LimitPair {
  FieldObject object;
  FpMat proj_a, proj_b;
};

LimitPair limit_pair(const Morphism& f0, const Morphism& g0, const Morphism& f1,
                     const Morphism& g1);

} // namespace grodiag
