#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grodiag/error.hpp"

namespace grodiag {

struct Simplex {
  std::int64_t id = 0;
  std::vector<int> vertices; // sorted, distinct
  double value = 0;
  std::optional<double> value2; // second filtration column, when present

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Filtered simplicial complex: faces are present, ids unique, and the
// default filtration column is monotone (face value <= coface value).
class FilteredComplex {
public:
  static FilteredComplex make(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int max_dim() const;

  // positional index of a simplex by its vertex set; -1 if absent
  std::ptrdiff_t find(const std::vector<int>& vertices) const;

  // filtration column by name ("value" or "value2")
  std::vector<double> column(const std::string& name) const;
  // face value <= coface value for an arbitrary assignment
  void check_monotone(const std::vector<double>& values) const;

private:
  std::vector<Simplex> simplices_;
  std::vector<std::vector<std::size_t>> facet_indices_; // per simplex, its codim-1 faces
  friend std::vector<std::vector<std::size_t>> facets_of(const FilteredComplex&);
};

// indices of the codimension-1 faces of every simplex
std::vector<std::vector<std::size_t>> facets_of(const FilteredComplex& k);

} // namespace grodiag
