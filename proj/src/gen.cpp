#include "grodiag/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace grodiag::gen {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
}

bool Rng::chance(double prob) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < prob;
}

double Rng::dyadic(double lo, double hi) {
  const std::int64_t steps = static_cast<std::int64_t>((hi - lo) / 0.25);
  return lo + 0.25 * static_cast<double>(uniform(0, std::max<std::int64_t>(steps, 0)));
}

namespace {

const std::int64_t kSmallPrimes[] = {2, 3, 5};

std::vector<double> random_grid(Rng& rng, int max_values) {
  const int n = static_cast<int>(rng.uniform(1, std::max(1, max_values)));
  std::set<double> grid;
  while (static_cast<int>(grid.size()) < n) grid.insert(rng.dyadic(0, 16));
  return {grid.begin(), grid.end()};
}

double grid_value_at_least(Rng& rng, const std::vector<double>& grid, double bound) {
  const std::size_t lo =
      std::lower_bound(grid.begin(), grid.end(), bound) - grid.begin();
  return grid[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo),
                                                   static_cast<std::int64_t>(grid.size()) - 1))];
}

} // namespace

GroupElement random_element(Rng& rng, Backend backend, int max_support, std::int64_t lo,
                            std::int64_t hi) {
  std::vector<GroupElement::Term> terms;
  if (backend == Backend::vect) {
    terms.emplace_back(GeneratorKey::dim(), rng.uniform(lo, hi));
  } else {
    const int n = static_cast<int>(rng.uniform(0, max_support));
    for (int i = 0; i < n; ++i) {
      std::int64_t p = kSmallPrimes[rng.uniform(0, 2)];
      terms.emplace_back(GeneratorKey::prime(p), rng.uniform(lo, hi));
    }
  }
  return GroupElement::from_terms(backend, std::move(terms));
}

ConstructibleModule random_field_module(Rng& rng, std::uint32_t p, std::size_t max_criticals,
                                        std::uint32_t max_dim) {
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_criticals)));
  std::set<double> crit;
  while (crit.size() < k) crit.insert(rng.dyadic(0, 16));

  std::vector<Object> objects;
  std::vector<std::uint32_t> dims;
  for (std::size_t i = 0; i < k; ++i) {
    dims.push_back(static_cast<std::uint32_t>(rng.uniform(0, max_dim)));
    objects.emplace_back(FieldObject{p, dims.back()});
  }
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    FpMat m(p, dims[i + 1], dims[i]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(r, c) = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
    maps.emplace_back(std::move(m));
  }
  return ConstructibleModule::make(Backend::vect, CriticalSet({crit.begin(), crit.end()}),
                                   std::move(objects), std::move(maps));
}

ConstructibleModule random_finab_module(Rng& rng, std::size_t max_criticals,
                                        std::size_t max_generators, int max_exponent) {
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_criticals)));
  std::set<double> crit;
  while (crit.size() < k) crit.insert(rng.dyadic(0, 16));

  std::vector<FinAbObject> objs;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::pair<std::int64_t, int>> factors;
    const std::size_t gens = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_generators)));
    for (std::size_t g = 0; g < gens; ++g)
      factors.emplace_back(kSmallPrimes[rng.uniform(0, 2)],
                           static_cast<int>(rng.uniform(1, max_exponent)));
    objs.push_back(FinAbObject::from_factors(std::move(factors)));
  }

  std::vector<Object> objects(objs.begin(), objs.end());
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const FinAbObject& src = objs[i];
    const FinAbObject& tgt = objs[i + 1];
    std::vector<std::vector<std::int64_t>> entries(
        tgt.generator_count(), std::vector<std::int64_t>(src.generator_count(), 0));
    for (std::size_t r = 0; r < tgt.generator_count(); ++r)
      for (std::size_t c = 0; c < src.generator_count(); ++c) {
        // entries divisible by order(target)/gcd(orders) are exactly the
        // well-defined choices
        const std::int64_t mt = tgt.factor_order(r);
        const std::int64_t ms = src.factor_order(c);
        const std::int64_t g = std::gcd(mt, ms);
        entries[r][c] = (mt / g) * rng.uniform(0, g - 1);
      }
    maps.emplace_back(FinAbMorphism::make(src, tgt, std::move(entries)));
  }
  return ConstructibleModule::make(Backend::finab, CriticalSet({crit.begin(), crit.end()}),
                                   std::move(objects), std::move(maps));
}

ConstructibleModule random_module(Rng& rng, Backend backend) {
  if (backend == Backend::vect) {
    const std::uint32_t p = static_cast<std::uint32_t>(kSmallPrimes[rng.uniform(0, 2)]);
    return random_field_module(rng, p, 6, 4);
  }
  return random_finab_module(rng, 5, 3, 3);
}

PersistenceDiagram random_positive_diagram(Rng& rng, Backend backend, int max_points,
                                           std::int64_t max_component_mass) {
  PersistenceDiagram d(backend);
  std::vector<GeneratorKey> keys;
  if (backend == Backend::vect) {
    keys.push_back(GeneratorKey::dim());
  } else {
    keys.push_back(GeneratorKey::prime(2));
    if (rng.chance(0.5)) keys.push_back(GeneratorKey::prime(3));
  }
  const int n_points = static_cast<int>(rng.uniform(0, max_points));
  std::vector<Interval> intervals;
  for (int i = 0; i < n_points; ++i) {
    double birth = rng.dyadic(0, 8);
    double death = rng.chance(0.2) ? kInf : birth + rng.dyadic(0.25, 4);
    intervals.emplace_back(birth, death);
  }
  for (const GeneratorKey& key : keys) {
    std::int64_t budget = rng.uniform(0, max_component_mass);
    for (const Interval& i : intervals) {
      if (budget == 0) break;
      std::int64_t c = rng.uniform(0, budget);
      budget -= c;
      if (c > 0) d.add(i, GroupElement::single(key, c));
    }
  }
  return d;
}

FilteredComplex random_complex(Rng& rng, int max_vertices, int max_dim, int max_values,
                               std::size_t max_simplices) {
  const std::vector<double> grid = random_grid(rng, max_values);
  const int nv = static_cast<int>(rng.uniform(1, std::max(1, max_vertices)));

  std::vector<Simplex> simplices;
  std::map<std::vector<int>, double> present;
  std::int64_t next_id = 0;
  auto push = [&](std::vector<int> vertices, double value) {
    present[vertices] = value;
    simplices.push_back(Simplex{next_id++, std::move(vertices), value, std::nullopt});
  };

  for (int v = 0; v < nv; ++v)
    push({v}, grid[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(grid.size()) - 1))]);

  const double edge_prob = 0.15 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng.engine());
  for (int a = 0; a < nv && simplices.size() < max_simplices; ++a)
    for (int b = a + 1; b < nv && simplices.size() < max_simplices; ++b) {
      if (!rng.chance(edge_prob)) continue;
      double bound = std::max(present[{a}], present[{b}]);
      push({a, b}, grid_value_at_least(rng, grid, bound));
    }

  if (max_dim >= 2) {
    for (int a = 0; a < nv && simplices.size() < max_simplices; ++a)
      for (int b = a + 1; b < nv && simplices.size() < max_simplices; ++b)
        for (int c = b + 1; c < nv && simplices.size() < max_simplices; ++c) {
          auto ab = present.find({a, b}), ac = present.find({a, c}), bc = present.find({b, c});
          if (ab == present.end() || ac == present.end() || bc == present.end()) continue;
          if (!rng.chance(0.5)) continue;
          double bound = std::max({ab->second, ac->second, bc->second});
          push({a, b, c}, grid_value_at_least(rng, grid, bound));
        }
  }

  if (max_dim >= 3) {
    for (int a = 0; a < nv && simplices.size() < max_simplices; ++a)
      for (int b = a + 1; b < nv && simplices.size() < max_simplices; ++b)
        for (int c = b + 1; c < nv && simplices.size() < max_simplices; ++c)
          for (int d = c + 1; d < nv && simplices.size() < max_simplices; ++d) {
            auto t0 = present.find({a, b, c}), t1 = present.find({a, b, d});
            auto t2 = present.find({a, c, d}), t3 = present.find({b, c, d});
            if (t0 == present.end() || t1 == present.end() || t2 == present.end() ||
                t3 == present.end())
              continue;
            if (!rng.chance(0.4)) continue;
            double bound = std::max({t0->second, t1->second, t2->second, t3->second});
            push({a, b, c, d}, grid_value_at_least(rng, grid, bound));
          }
  }

  return FilteredComplex::make(std::move(simplices));
}

std::vector<double> random_monotone_values(Rng& rng, const FilteredComplex& complex,
                                           int max_values) {
  const std::vector<double> grid = random_grid(rng, max_values);
  const auto facets = facets_of(complex);
  std::vector<double> values(complex.size(), 0);
  // simplices are stored faces-first by the generators, but walk by
  // dimension to stay safe for arbitrary orderings
  std::vector<std::size_t> order(complex.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return complex.simplices()[a].dim() < complex.simplices()[b].dim();
  });
  for (std::size_t idx : order) {
    double bound = grid.front();
    for (std::size_t f : facets[idx]) bound = std::max(bound, values[f]);
    values[idx] = grid_value_at_least(rng, grid, bound);
  }
  return values;
}

std::vector<double> perturbed_values(Rng& rng, const FilteredComplex& complex,
                                     const std::vector<double>& base, double max_delta) {
  const auto facets = facets_of(complex);
  std::vector<double> values(complex.size(), 0);
  std::vector<std::size_t> order(complex.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return complex.simplices()[a].dim() < complex.simplices()[b].dim();
  });
  for (std::size_t idx : order) {
    double v = base[idx] + rng.dyadic(-max_delta, max_delta);
    for (std::size_t f : facets[idx]) v = std::max(v, values[f]);
    values[idx] = v;
  }
  return values;
}

ConstructibleModule demo_field_module() {
  std::vector<Object> objects{FieldObject{2, 1}, FieldObject{2, 2}, FieldObject{2, 1}};
  std::vector<Morphism> maps{FpMat::from_rows(2, {{1}, {0}}), FpMat::from_rows(2, {{0, 1}})};
  return ConstructibleModule::make(Backend::vect, CriticalSet({1, 2, 3}), std::move(objects),
                                   std::move(maps));
}

ConstructibleModule demo_finab_module() {
  FinAbObject z4 = FinAbObject::from_factors({{2, 2}});
  FinAbObject z2 = FinAbObject::from_factors({{2, 1}});
  std::vector<Object> objects{z4, z2};
  std::vector<Morphism> maps{FinAbMorphism::make(z4, z2, {{1}})};
  return ConstructibleModule::make(Backend::finab, CriticalSet({1, 2}), std::move(objects),
                                   std::move(maps));
}

} // namespace grodiag::gen
