#include "grodiag/pmodule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grodiag {

CriticalSet::CriticalSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) fail(Errc::input, "critical set must be nonempty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      fail(Errc::input, "critical value at index " + std::to_string(i) + " is not finite");
    if (i > 0 && !(values_[i - 1] < values_[i]))
      fail(Errc::input, "critical values not strictly increasing at index " + std::to_string(i));
  }
}

std::size_t CriticalSet::level_at_or_below(double t) const {
  return std::upper_bound(values_.begin(), values_.end(), t) - values_.begin();
}

std::size_t CriticalSet::level_strictly_below(double t) const {
  return std::lower_bound(values_.begin(), values_.end(), t) - values_.begin();
}

ConstructibleModule::ConstructibleModule(Backend backend, CriticalSet criticals,
                                         std::vector<Object> objects, std::vector<Morphism> maps)
    : backend_(backend), criticals_(std::move(criticals)), objects_(std::move(objects)),
      maps_(std::move(maps)) {}

ConstructibleModule ConstructibleModule::make(Backend backend, CriticalSet criticals,
                                              std::vector<Object> objects,
                                              std::vector<Morphism> maps) {
  const std::size_t k = criticals.size();
  if (objects.size() != k)
    fail(Errc::input, "module has " + std::to_string(objects.size()) + " objects for " +
                          std::to_string(k) + " critical values");
  if (maps.size() + 1 != k)
    fail(Errc::input, "module has " + std::to_string(maps.size()) + " maps, expected " +
                          std::to_string(k - 1));
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (backend_of(objects[i]) != backend)
      fail(Errc::input, "objects[" + std::to_string(i) + "] does not match the module backend");
  if (backend == Backend::vect) {
    const std::uint32_t p = std::get<FieldObject>(objects[0]).p;
    check_field_char(p);
    for (std::size_t i = 1; i < objects.size(); ++i)
      if (std::get<FieldObject>(objects[i]).p != p)
        fail(Errc::input, "objects[" + std::to_string(i) + "] has a different characteristic");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (backend_of(maps[i]) != backend)
      fail(Errc::input, "maps[" + std::to_string(i) + "] does not match the module backend");
    if (!same_object(morphism_source(maps[i]), objects[i]))
      fail(Errc::input, "maps[" + std::to_string(i) + "] source does not match objects[" +
                            std::to_string(i) + "]");
    if (!same_object(morphism_target(maps[i]), objects[i + 1]))
      fail(Errc::input, "maps[" + std::to_string(i) + "] target does not match objects[" +
                            std::to_string(i + 1) + "]");
  }
  return ConstructibleModule(backend, std::move(criticals), std::move(objects), std::move(maps));
}

Object ConstructibleModule::zero_object() const {
  if (backend_ == Backend::vect)
    return FieldObject{std::get<FieldObject>(objects_[0]).p, 0};
  return FinAbObject::trivial();
}

Object ConstructibleModule::object_at_level(std::size_t level) const {
  if (level == 0) return zero_object();
  return objects_[level - 1];
}

Morphism ConstructibleModule::map_between_levels(std::size_t from, std::size_t to) const {
  if (from > to) fail(Errc::order, "map requested against the parameter order");
  if (from == 0) return zero_morphism(zero_object(), object_at_level(to));
  Morphism acc = identity_morphism(objects_[from - 1]);
  for (std::size_t l = from; l < to; ++l) acc = compose(maps_[l - 1], acc);
  return acc;
}

Object ConstructibleModule::evaluate(double t) const {
  if (std::isnan(t)) fail(Errc::domain, "evaluate at NaN");
  return object_at_level(criticals_.level_at_or_below(t));
}

Morphism ConstructibleModule::evaluate_map(double from, double to) const {
  if (std::isnan(from) || std::isnan(to)) fail(Errc::domain, "evaluate_map at NaN");
  if (from > to) fail(Errc::order, "evaluate_map requires from <= to");
  return map_between_levels(criticals_.level_at_or_below(from), criticals_.level_at_or_below(to));
}

GroupElement rank_between_levels(const ConstructibleModule& f, std::size_t from, std::size_t to) {
  if (from == 0) return GroupElement::zero(f.backend());
  return image_class(f.map_between_levels(from, to));
}

GroupElement rank_function(const ConstructibleModule& f, const Interval& i) {
  if (i.is_diagonal()) fail(Errc::domain, "rank function is undefined on the diagonal");
  // snap to the grid: source = last critical value <= birth, target = the
  // level just before death (constant cells make this exact)
  const std::size_t from = f.criticals().level_at_or_below(i.birth);
  const std::size_t to = f.criticals().level_strictly_below(i.death);
  return rank_between_levels(f, from, to);
}

} // namespace grodiag
