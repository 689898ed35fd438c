#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grodiag/complex.hpp"
#include "grodiag/diagram.hpp"
#include "grodiag/pmodule.hpp"

namespace grodiag::gen {

// Deterministic generator for the randomized suites. All parameter values
// it produces are small dyadic rationals so that every comparison and
// every candidate-threshold computation downstream is exact.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi); // inclusive
  bool chance(double prob);
  double dyadic(double lo, double hi); // multiple of 0.25 in [lo, hi]
  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

GroupElement random_element(Rng& rng, Backend backend, int max_support, std::int64_t lo,
                            std::int64_t hi);

ConstructibleModule random_field_module(Rng& rng, std::uint32_t p, std::size_t max_criticals,
                                        std::uint32_t max_dim);
ConstructibleModule random_finab_module(Rng& rng, std::size_t max_criticals,
                                        std::size_t max_generators, int max_exponent);
ConstructibleModule random_module(Rng& rng, Backend backend);

// positive diagram with per-generator mass at most `max_component_mass`
PersistenceDiagram random_positive_diagram(Rng& rng, Backend backend, int max_points,
                                           std::int64_t max_component_mass);

// random complex closed under faces, at most `max_simplices` simplices of
// dimension <= max_dim, filtration values from a dyadic grid of at most
// `max_values` distinct values
FilteredComplex random_complex(Rng& rng, int max_vertices, int max_dim, int max_values,
                               std::size_t max_simplices);

// a fresh monotone filtration column for an existing complex
std::vector<double> random_monotone_values(Rng& rng, const FilteredComplex& complex,
                                           int max_values);
// monotone column with |result - base| <= max_delta (dyadic)
std::vector<double> perturbed_values(Rng& rng, const FilteredComplex& complex,
                                     const std::vector<double>& base, double max_delta);

// worked examples used by the golden tests: a three-step GF(2) module and
// a two-step finite-abelian module (Z/4 -> Z/2 quotient)
ConstructibleModule demo_field_module();
ConstructibleModule demo_finab_module();

} // namespace grodiag::gen
