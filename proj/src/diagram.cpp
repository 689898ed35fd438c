#include "grodiag/diagram.hpp"

#include <sstream>

namespace grodiag {

std::string to_string(const Interval& i) {
  std::ostringstream os;
  os << '[' << i.birth << ", ";
  if (i.death_finite())
    os << i.death;
  else
    os << "inf";
  os << ')';
  return os.str();
}

GroupElement PersistenceDiagram::value(const Interval& i) const {
  auto it = points_.find(i);
  if (it == points_.end()) return GroupElement::zero(backend_);
  return it->second;
}

void PersistenceDiagram::add(const Interval& i, const GroupElement& v) {
  if (v.backend() != backend_) fail(Errc::backend_mismatch, "diagram value from another backend");
  if (i.is_diagonal()) fail(Errc::domain, "diagonal intervals carry no diagram value");
  if (v.is_zero()) return;
  auto it = points_.find(i);
  if (it == points_.end()) {
    points_.emplace(i, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) points_.erase(it);
}

PersistenceDiagram mobius_inversion(const ConstructibleModule& f) {
  const std::size_t k = f.criticals().size();
  const auto& s = f.criticals().values();

  // rank table r[i][m] = image class of the composite from level i to
  // level m (1-based); the composite is built incrementally per i.
  std::vector<std::vector<GroupElement>> r(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    r[i].reserve(k - i + 1);
    if (f.backend() == Backend::vect) {
      // chain through a column-space basis so ranks of long composites
      // stay cheap once the image collapses
      FpMat image = std::get<FpMat>(identity_morphism(f.object_at_level(i)));
      r[i].push_back(object_class(f.object_at_level(i)));
      for (std::size_t m = i + 1; m <= k; ++m) {
        image = column_space_basis(matmul(std::get<FpMat>(f.maps()[m - 2]), image));
        r[i].push_back(GroupElement::single(GeneratorKey::dim(),
                                            static_cast<std::int64_t>(image.cols())));
      }
    } else {
      Morphism acc = identity_morphism(f.object_at_level(i));
      r[i].push_back(image_class(acc));
      for (std::size_t m = i + 1; m <= k; ++m) {
        acc = compose(f.maps()[m - 2], acc);
        r[i].push_back(image_class(acc));
      }
    }
  }
  auto rank_at = [&](std::size_t i, std::size_t m) -> GroupElement {
    if (i == 0) return GroupElement::zero(f.backend());
    return r[i][m - i];
  };

  PersistenceDiagram diag(f.backend());
  // finite intervals [s_i, s_j): the four-corner alternating sum; the
  // value just past the grid (s_{k+1}) is taken at infinity, which is
  // level k again, and the row below the grid (i = 1) contributes zero
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      GroupElement v = rank_at(i, j - 1) - rank_at(i, j) + rank_at(i - 1, j) - rank_at(i - 1, j - 1);
      diag.add(Interval(s[i - 1], s[j - 1]), v);
    }
    GroupElement essential = rank_at(i, k) - rank_at(i - 1, k);
    diag.add(Interval(s[i - 1], kInf), essential);
  }
  return diag;
}

GroupElement rank_from_diagram(const PersistenceDiagram& y, const Interval& i) {
  if (i.is_diagonal()) fail(Errc::domain, "rank is undefined on the diagonal");
  GroupElement total = GroupElement::zero(y.backend());
  for (const auto& [j, v] : y.points())
    if (j.contains(i)) total = total + v;
  return total;
}

bool box_is_empty(const Interval& i, double eps) {
  if (eps < 0) fail(Errc::domain, "box radius must be nonnegative");
  if (!i.death_finite()) return false;
  return i.death - eps <= i.birth + eps;
}

bool box_contains(const Interval& i, double eps, const Interval& candidate) {
  if (box_is_empty(i, eps)) return false;
  if (!(i.birth - eps < candidate.birth && candidate.birth <= i.birth + eps)) return false;
  if (!i.death_finite()) return !candidate.death_finite();
  if (!candidate.death_finite()) return false;
  return i.death - eps <= candidate.death && candidate.death < i.death + eps;
}

GroupElement box_sum(const PersistenceDiagram& y, const Interval& i, double eps) {
  GroupElement total = GroupElement::zero(y.backend());
  if (box_is_empty(i, eps)) return total;
  for (const auto& [j, v] : y.points())
    if (box_contains(i, eps, j)) total = total + v;
  return total;
}

GroupElement corner_sum(const ConstructibleModule& f, const Interval& i, double eps) {
  if (box_is_empty(i, eps)) fail(Errc::domain, "corner sum over an empty box");
  const double p = i.birth;
  if (!i.death_finite())
    return rank_function(f, Interval(p + eps, kInf)) - rank_function(f, Interval(p - eps, kInf));
  const double q = i.death;
  return rank_function(f, Interval(p + eps, q - eps)) -
         rank_function(f, Interval(p + eps, q + eps)) +
         rank_function(f, Interval(p - eps, q + eps)) -
         rank_function(f, Interval(p - eps, q - eps));
}

double injectivity_radius(const CriticalSet& s) {
  if (s.size() < 2) return kInf;
  double min_gap = kInf;
  for (std::size_t i = 1; i < s.size(); ++i) min_gap = std::min(min_gap, s[i] - s[i - 1]);
  return min_gap / 2;
}

bool is_positive(const PersistenceDiagram& y) {
  const GroupElement zero = GroupElement::zero(y.backend());
  for (const auto& [i, v] : y.points())
    if (!partial_leq(zero, v)) return false;
  return true;
}

} // namespace grodiag
