#pragma once

#include <cstddef>
#include <vector>

#include "grodiag/backends.hpp"
#include "grodiag/interval.hpp"

namespace grodiag {

// Strictly increasing finite list of critical parameter values.
class CriticalSet {
public:
  explicit CriticalSet(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  // number of critical values <= t, in [0, size()]; 0 is the zero region
  std::size_t level_at_or_below(double t) const;
  // number of critical values strictly < t
  std::size_t level_strictly_below(double t) const;

  friend bool operator==(const CriticalSet&, const CriticalSet&) = default;

private:
  std::vector<double> values_;
};

// Piecewise-constant persistence module: object O_i on each cell
// [s_i, s_{i+1}) plus connecting maps m_i : O_i -> O_{i+1}. The value is
// the zero object below s_1 and stays O_k from s_k on (including at inf).
class ConstructibleModule {
public:
  static ConstructibleModule make(Backend backend, CriticalSet criticals,
                                  std::vector<Object> objects, std::vector<Morphism> maps);

  Backend backend() const { return backend_; }
  const CriticalSet& criticals() const { return criticals_; }
  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<Morphism>& maps() const { return maps_; }

  Object zero_object() const;
  // level 0 = zero object, level i in [1, k] = objects()[i-1]
  Object object_at_level(std::size_t level) const;
  Morphism map_between_levels(std::size_t from, std::size_t to) const;

  Object evaluate(double t) const;
  Morphism evaluate_map(double from, double to) const;

private:
  ConstructibleModule(Backend backend, CriticalSet criticals, std::vector<Object> objects,
                      std::vector<Morphism> maps);

  Backend backend_;
  CriticalSet criticals_;
  std::vector<Object> objects_;
  std::vector<Morphism> maps_;
};

// Value of the rank function on [p, q): the class of the image of the map
// from the last critical level at or below p into the level just before q.
// The interval must be off-diagonal.
GroupElement rank_function(const ConstructibleModule& f, const Interval& i);

// Same, addressed by grid levels: image class of the composite from level
// `from` to level `to` (1-based, 0 = zero region).
GroupElement rank_between_levels(const ConstructibleModule& f, std::size_t from, std::size_t to);

} // namespace grodiag
