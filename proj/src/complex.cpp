#include "grodiag/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace grodiag {

FilteredComplex FilteredComplex::make(std::vector<Simplex> simplices) {
  FilteredComplex k;
  k.simplices_ = std::move(simplices);

  std::set<std::int64_t> ids;
  std::map<std::vector<int>, std::size_t> by_vertices;
  for (std::size_t idx = 0; idx < k.simplices_.size(); ++idx) {
    const Simplex& s = k.simplices_[idx];
    if (!ids.insert(s.id).second)
      fail(Errc::input, "duplicate simplex id " + std::to_string(s.id));
    if (s.vertices.empty())
      fail(Errc::input, "simplex " + std::to_string(s.id) + " has no vertices");
    if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
        std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
      fail(Errc::input,
           "simplex " + std::to_string(s.id) + " vertices must be sorted and distinct");
    if (std::isnan(s.value) || !std::isfinite(s.value))
      fail(Errc::input, "simplex " + std::to_string(s.id) + " has a non-finite value");
    if (!by_vertices.emplace(s.vertices, idx).second)
      fail(Errc::input, "simplex " + std::to_string(s.id) + " repeats an existing vertex set");
  }

  k.facet_indices_.resize(k.simplices_.size());
  for (std::size_t idx = 0; idx < k.simplices_.size(); ++idx) {
    const Simplex& s = k.simplices_[idx];
    if (s.dim() == 0) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<int> face = s.vertices;
      face.erase(face.begin() + drop);
      auto it = by_vertices.find(face);
      if (it == by_vertices.end())
        fail(Errc::input,
             "simplex " + std::to_string(s.id) + " is missing a face (drop vertex " +
                 std::to_string(s.vertices[drop]) + ")");
      if (k.simplices_[it->second].value > s.value)
        fail(Errc::input, "simplex " + std::to_string(s.id) + " enters before its face " +
                              std::to_string(k.simplices_[it->second].id));
      k.facet_indices_[idx].push_back(it->second);
    }
  }
  return k;
}

int FilteredComplex::max_dim() const {
  int d = -1;
  for (const Simplex& s : simplices_) d = std::max(d, s.dim());
  return d;
}

std::ptrdiff_t FilteredComplex::find(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < simplices_.size(); ++i)
    if (simplices_[i].vertices == vertices) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::vector<double> FilteredComplex::column(const std::string& name) const {
  std::vector<double> out;
  out.reserve(simplices_.size());
  for (const Simplex& s : simplices_) {
    if (name == "value") {
      out.push_back(s.value);
    } else if (name == "value2") {
      if (!s.value2)
        fail(Errc::input,
             "simplex " + std::to_string(s.id) + " has no \"value2\" filtration entry");
      out.push_back(*s.value2);
    } else {
      fail(Errc::input, "unknown filtration column \"" + name + "\"");
    }
  }
  return out;
}

void FilteredComplex::check_monotone(const std::vector<double>& values) const {
  if (values.size() != simplices_.size())
    fail(Errc::input, "filtration column length does not match the complex");
  for (double v : values)
    if (!std::isfinite(v)) fail(Errc::input, "filtration values must be finite");
  for (std::size_t idx = 0; idx < simplices_.size(); ++idx)
    for (std::size_t f : facet_indices_[idx])
      if (values[f] > values[idx])
        fail(Errc::input, "filtration not monotone at simplex " +
                              std::to_string(simplices_[idx].id));
}

std::vector<std::vector<std::size_t>> facets_of(const FilteredComplex& k) {
  return k.facet_indices_;
}

} // namespace grodiag
