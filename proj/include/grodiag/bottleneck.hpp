#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grodiag/diagram.hpp"

namespace grodiag {

// Group-valued transport plan between two diagrams. Entries are stored
// sparsely; zero values are dropped. Rows/columns at diagonal intervals
// are unconstrained by validation.
class Matching {
public:
  explicit Matching(Backend backend) : backend_(backend) {}

  Backend backend() const { return backend_; }
  const std::map<std::pair<Interval, Interval>, GroupElement>& entries() const { return entries_; }

  GroupElement value(const Interval& left, const Interval& right) const;
  void add(const Interval& left, const Interval& right, const GroupElement& v);

  friend bool operator==(const Matching&, const Matching&) = default;

private:
  Backend backend_;
  std::map<std::pair<Interval, Interval>, GroupElement> entries_;
};

// Max over stored pairs of the larger coordinate deviation. Two infinite
// deaths count as deviation 0; exactly one infinite death is infinite.
// Empty matching has norm 0.
double matching_norm(const Matching& gamma);

// Marginal violations: every off-diagonal row must sum to y1, every
// off-diagonal column to y2. Empty result means the matching is valid.
std::vector<std::string> validate_matching(const PersistenceDiagram& y1,
                                           const PersistenceDiagram& y2, const Matching& gamma);

struct BottleneckResult {
  double distance = 0;
  Matching witness;
};

// Least-norm nonnegative matching between positive diagrams. Decomposes
// per generator, threshold-searches the candidate deviations, and checks
// feasibility with a max-flow; the witness is assembled from the flows
// with diagonal partners at interval midpoints.
BottleneckResult bottleneck_distance(const PersistenceDiagram& y1, const PersistenceDiagram& y2);

// Exhaustive enumeration over unit transport plans; per-component mass
// must be <= 6. Independent of the flow solver.
double bottleneck_oracle(const PersistenceDiagram& y1, const PersistenceDiagram& y2);

} // namespace grodiag
