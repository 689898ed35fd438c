#pragma once

#include <string>
#include <vector>

#include "grodiag/complex.hpp"
#include "grodiag/homology.hpp"
#include "grodiag/pmodule.hpp"

namespace grodiag {

// One direction-pair of comparison maps between two modules: phi[i] maps
// F(grid[i]) into G(grid[i] + epsilon), psi[i] the other way around. The
// grid is the merge of both critical sets with their left shifts by
// epsilon, so every component of the underlying natural transformations
// is one of the stored maps.
struct InterleavingData {
  double epsilon = 0;
  std::vector<double> grid;
  std::vector<Morphism> phi;
  std::vector<Morphism> psi;
};

// merged comparison grid: S_F, S_G, S_F - eps, S_G - eps, sorted unique
std::vector<double> merged_grid(const ConstructibleModule& f, const ConstructibleModule& g,
                                double eps);

// All naturality squares on consecutive grid values plus both triangle
// families at every grid value. Empty result means the data is a valid
// eps-interleaving; shape problems are reported, not thrown.
std::vector<std::string> verify_interleaving(const ConstructibleModule& f,
                                             const ConstructibleModule& g,
                                             const InterleavingData& data);

struct FunctionInterleaving {
  ConstructibleModule f;
  ConstructibleModule g;
  InterleavingData data;
};

// Two filtrations of one complex induce homology modules interleaved at
// eps = max |f - g|, with comparison maps induced by the identity on
// chains. The returned data always verifies.
FunctionInterleaving interleaving_from_functions(const FilteredComplex& complex,
                                                 const std::vector<double>& f_values,
                                                 const std::vector<double>& g_values, int degree,
                                                 std::uint32_t p);

// The limit construction between F and G at time t in [0, 1]: each value
// is the limit over the up-set of (p, t), computed from the two minimal
// elements and their two minimal common upper bounds. K_0 is isomorphic
// to F and K_1 to G. Field backend only; the data must verify.
ConstructibleModule interpolate(const ConstructibleModule& f, const ConstructibleModule& g,
                                const InterleavingData& data, double t);

} // namespace grodiag
