#pragma once

#include <map>

#include "grodiag/interval.hpp"
#include "grodiag/pmodule.hpp"

namespace grodiag {

// Finitely supported map from off-diagonal intervals to the value group.
// Diagonal intervals and zero values are never stored.
class PersistenceDiagram {
public:
  explicit PersistenceDiagram(Backend backend) : backend_(backend) {}

  Backend backend() const { return backend_; }
  const std::map<Interval, GroupElement>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  GroupElement value(const Interval& i) const;
  // accumulates; drops the entry when the sum cancels
  void add(const Interval& i, const GroupElement& v);

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
  Backend backend_;
  std::map<Interval, GroupElement> points_;
};

// The diagram of a constructible module: the unique finitely supported
// Y with rank(F, I) = sum of Y over intervals containing I. Computed by
// the four-corner alternating sum on the critical grid.
PersistenceDiagram mobius_inversion(const ConstructibleModule& f);

// Sum of Y over stored intervals containing I (I off-diagonal).
GroupElement rank_from_diagram(const PersistenceDiagram& y, const Interval& i);

// Membership in the eps-box around I: birth in (p-eps, p+eps], death in
// [q-eps, q+eps) for finite q, death infinite with the same birth window
// for q = inf. The box is empty when q - eps <= p + eps.
bool box_is_empty(const Interval& i, double eps);
bool box_contains(const Interval& i, double eps, const Interval& candidate);

// Sum of Y over the eps-box; zero when the box is empty.
GroupElement box_sum(const PersistenceDiagram& y, const Interval& i, double eps);

// The same box total computed from the rank function's four corners
// (two for infinite death). The box must be nonempty.
GroupElement corner_sum(const ConstructibleModule& f, const Interval& i, double eps);

// Half the minimum gap between consecutive critical values; +inf for a
// single critical value.
double injectivity_radius(const CriticalSet& s);

// Every stored value is >= 0 in the componentwise order.
bool is_positive(const PersistenceDiagram& y);

} // namespace grodiag
