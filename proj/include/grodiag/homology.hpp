#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grodiag/complex.hpp"
#include "grodiag/diagram.hpp"
#include "grodiag/pmodule.hpp"

namespace grodiag {

// Degree-k homology of the sublevel filtration over GF(p), with enough
// bookkeeping to express arbitrary cycles in the per-level bases (used to
// build induced maps between two filtrations of one complex).
//
// Bases are deterministic: columns are processed in (level, id) order and
// representatives are fully reduced against the boundary pivots and the
// earlier representatives of their level.
class HomologyData {
public:
  HomologyData(const FilteredComplex& complex, const std::vector<double>& values, int degree,
               std::uint32_t p);

  const ConstructibleModule& module() const { return *module_; }
  std::uint32_t p() const { return p_; }
  std::size_t levels() const { return criticals_.size(); }
  const std::vector<double>& criticals() const { return criticals_; }
  std::uint32_t dim_at(std::size_t level) const; // level 0 = 0

  // chain coordinates: one slot per degree-k simplex, in id order
  std::size_t chain_len() const { return chain_len_; }
  // the representative cycles chosen as the basis at a level
  std::vector<std::vector<std::uint32_t>> basis_at(std::size_t level) const;
  // coordinates of a cycle's class in the level basis; the cycle must be
  // supported on the sublevel complex of that level
  std::vector<std::uint32_t> express(std::size_t level, std::vector<std::uint32_t> cycle) const;
  // induced map between two levels of this filtration, computed directly
  // from the bases (independent of the stored composite maps)
  FpMat induced_map(std::size_t from, std::size_t to) const;

private:
  struct PivotColumn {
    std::size_t low;
    std::vector<std::uint32_t> column;
  };

  std::uint32_t p_;
  std::size_t chain_len_ = 0;
  std::vector<double> criticals_;
  std::vector<PivotColumn> boundary_cols_;                    // distinct lows, level-ordered
  std::unordered_map<std::size_t, std::size_t> boundary_low_; // low -> index in boundary_cols_
  std::vector<std::size_t> boundary_count_;                   // per level, prefix length
  std::vector<std::vector<PivotColumn>> reps_;                // per level, chosen basis cycles
  std::optional<ConstructibleModule> module_;
};

ConstructibleModule homology_module(const FilteredComplex& complex,
                                    const std::vector<double>& values, int degree,
                                    std::uint32_t p);
ConstructibleModule homology_module(const FilteredComplex& complex, int degree, std::uint32_t p);

// Classical persistence by boundary-matrix reduction over GF(p); the
// independent reference for the inversion pipeline.
PersistenceDiagram classical_diagram(const FilteredComplex& complex,
                                     const std::vector<double>& values, int degree,
                                     std::uint32_t p);
PersistenceDiagram classical_diagram(const FilteredComplex& complex, int degree, std::uint32_t p);

} // namespace grodiag
