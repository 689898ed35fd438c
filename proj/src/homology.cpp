#include "grodiag/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "grodiag/kernels.hpp"

namespace grodiag {

namespace {

// last nonzero coordinate, or npos
std::size_t top_index(const std::vector<std::uint32_t>& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] != 0) return i;
  return static_cast<std::size_t>(-1);
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void axpy(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src, std::uint32_t c,
          std::uint32_t p) {
  kern::axpy_modp(dst.data(), src.data(), c, dst.size(), p);
}

} // namespace

HomologyData::HomologyData(const FilteredComplex& complex, const std::vector<double>& values,
                           int degree, std::uint32_t p)
    : p_(p) {
  check_field_char(p);
  if (degree < 0) fail(Errc::input, "homology degree must be nonnegative");
  if (complex.empty()) fail(Errc::input, "cannot build a module from an empty complex");
  complex.check_monotone(values);

  criticals_ = values;
  std::sort(criticals_.begin(), criticals_.end());
  criticals_.erase(std::unique(criticals_.begin(), criticals_.end()), criticals_.end());
  const std::size_t n_levels = criticals_.size();

  auto level_of = [&](double v) {
    return static_cast<std::size_t>(
        std::lower_bound(criticals_.begin(), criticals_.end(), v) - criticals_.begin() + 1);
  };

  const auto& simplices = complex.simplices();
  const auto facets = facets_of(complex);

  // positions of each degree's simplices, in id order
  auto positions_of_dim = [&](int d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < simplices.size(); ++i)
      if (simplices[i].dim() == d) out.push_back(i);
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return simplices[a].id < simplices[b].id; });
    return out;
  };
  const std::vector<std::size_t> rows = positions_of_dim(degree - 1);
  const std::vector<std::size_t> chain = positions_of_dim(degree);
  const std::vector<std::size_t> above = positions_of_dim(degree + 1);
  chain_len_ = chain.size();

  std::unordered_map<std::size_t, std::size_t> row_pos, chain_pos;
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
  for (std::size_t i = 0; i < chain.size(); ++i) chain_pos[chain[i]] = i;

  auto boundary_column = [&](std::size_t simplex_idx,
                             const std::unordered_map<std::size_t, std::size_t>& pos,
                             std::size_t len) {
    std::vector<std::uint32_t> col(len, 0);
    const auto& f = facets[simplex_idx];
    for (std::size_t drop = 0; drop < f.size(); ++drop)
      col[pos.at(f[drop])] = (drop % 2 == 0) ? 1 : p_ - 1;
    return col;
  };

  auto by_level_then_id = [&](std::size_t a, std::size_t b) {
    double va = values[a], vb = values[b];
    if (va != vb) return va < vb;
    return simplices[a].id < simplices[b].id;
  };

  // cycle basis of the degree-k boundary map, with appearance levels;
  // combination vectors are tracked so zero columns yield explicit cycles
  struct Cycle {
    std::size_t level;
    std::vector<std::uint32_t> comb;
  };
  std::vector<Cycle> cycles;
  {
    std::vector<std::size_t> order = chain;
    std::sort(order.begin(), order.end(), by_level_then_id);
    struct Pivot {
      std::vector<std::uint32_t> col, comb;
    };
    std::unordered_map<std::size_t, Pivot> pivots;
    for (std::size_t idx : order) {
      std::vector<std::uint32_t> col =
          degree == 0 ? std::vector<std::uint32_t>() : boundary_column(idx, row_pos, rows.size());
      std::vector<std::uint32_t> comb(chain_len_, 0);
      comb[chain_pos[idx]] = 1;
      while (true) {
        std::size_t low = top_index(col);
        if (low == kNone) {
          cycles.push_back({level_of(values[idx]), std::move(comb)});
          break;
        }
        auto it = pivots.find(low);
        if (it == pivots.end()) {
          pivots.emplace(low, Pivot{std::move(col), std::move(comb)});
          break;
        }
        std::uint32_t coef =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(col[low]) *
                                       fp_inverse(it->second.col[low], p_) % p_);
        axpy(col, it->second.col, p_ - coef, p_);
        axpy(comb, it->second.comb, p_ - coef, p_);
      }
    }
  }

  // boundary space of the degree-(k+1) map: reduced columns with distinct
  // lows, appearing in level order
  boundary_count_.assign(n_levels + 1, 0);
  {
    std::vector<std::size_t> order = above;
    std::sort(order.begin(), order.end(), by_level_then_id);
    for (std::size_t idx : order) {
      std::vector<std::uint32_t> col = boundary_column(idx, chain_pos, chain_len_);
      while (true) {
        std::size_t low = top_index(col);
        if (low == kNone) break;
        auto it = boundary_low_.find(low);
        if (it == boundary_low_.end()) {
          boundary_low_[low] = boundary_cols_.size();
          boundary_cols_.push_back({low, std::move(col)});
          for (std::size_t l = level_of(values[idx]); l <= n_levels; ++l) ++boundary_count_[l];
          break;
        }
        const auto& piv = boundary_cols_[it->second];
        std::uint32_t coef = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(col[low]) * fp_inverse(piv.column[low], p_) % p_);
        axpy(col, piv.column, p_ - coef, p_);
      }
    }
  }

  // per-level representatives: cycles reduced against the level's
  // boundaries and the representatives already chosen
  reps_.assign(n_levels + 1, {});
  for (std::size_t level = 1; level <= n_levels; ++level) {
    std::unordered_map<std::size_t, std::size_t> hlow;
    for (const Cycle& cyc : cycles) {
      if (cyc.level > level) continue;
      std::vector<std::uint32_t> v = cyc.comb;
      while (true) {
        std::size_t low = top_index(v);
        if (low == kNone) break;
        auto bit = boundary_low_.find(low);
        if (bit != boundary_low_.end() && bit->second < boundary_count_[level]) {
          const auto& piv = boundary_cols_[bit->second];
          std::uint32_t coef = static_cast<std::uint32_t>(
              static_cast<std::uint64_t>(v[low]) * fp_inverse(piv.column[low], p_) % p_);
          axpy(v, piv.column, p_ - coef, p_);
          continue;
        }
        auto hit = hlow.find(low);
        if (hit != hlow.end()) {
          const auto& rep = reps_[level][hit->second];
          std::uint32_t coef = static_cast<std::uint32_t>(
              static_cast<std::uint64_t>(v[low]) * fp_inverse(rep.column[low], p_) % p_);
          axpy(v, rep.column, p_ - coef, p_);
          continue;
        }
        hlow[low] = reps_[level].size();
        reps_[level].push_back({low, std::move(v)});
        break;
      }
    }
  }

  // assemble the module
  std::vector<Object> objects;
  std::vector<Morphism> maps;
  for (std::size_t level = 1; level <= n_levels; ++level)
    objects.push_back(FieldObject{p_, dim_at(level)});
  for (std::size_t level = 1; level < n_levels; ++level) maps.push_back(induced_map(level, level + 1));
  module_ = ConstructibleModule::make(Backend::vect, CriticalSet(criticals_), std::move(objects),
                                      std::move(maps));
}

std::uint32_t HomologyData::dim_at(std::size_t level) const {
  if (level == 0) return 0;
  return static_cast<std::uint32_t>(reps_[level].size());
}

std::vector<std::vector<std::uint32_t>> HomologyData::basis_at(std::size_t level) const {
  std::vector<std::vector<std::uint32_t>> out;
  if (level == 0) return out;
  for (const PivotColumn& rep : reps_[level]) out.push_back(rep.column);
  return out;
}

std::vector<std::uint32_t> HomologyData::express(std::size_t level,
                                                 std::vector<std::uint32_t> cycle) const {
  if (level == 0 || level >= reps_.size())
    fail(Errc::domain, "level " + std::to_string(level) + " out of range");
  if (cycle.size() != chain_len_) fail(Errc::domain, "cycle has the wrong chain length");
  std::vector<std::uint32_t> coords(reps_[level].size(), 0);
  std::vector<std::uint32_t>& v = cycle;
  while (true) {
    std::size_t low = top_index(v);
    if (low == kNone) break;
    auto bit = boundary_low_.find(low);
    if (bit != boundary_low_.end() && bit->second < boundary_count_[level]) {
      const PivotColumn& piv = boundary_cols_[bit->second];
      std::uint32_t coef = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(v[low]) * fp_inverse(piv.column[low], p_) % p_);
      axpy(v, piv.column, p_ - coef, p_);
      continue;
    }
    bool hit = false;
    for (std::size_t r = 0; r < reps_[level].size(); ++r)
      if (reps_[level][r].low == low) {
        std::uint32_t coef = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(v[low]) * fp_inverse(reps_[level][r].column[low], p_) % p_);
        coords[r] = coef;
        axpy(v, reps_[level][r].column, p_ - coef, p_);
        hit = true;
        break;
      }
    if (!hit) fail(Errc::domain, "vector is not a cycle class of this level");
  }
  return coords;
}

FpMat HomologyData::induced_map(std::size_t from, std::size_t to) const {
  if (from > to) fail(Errc::order, "induced map against the parameter order");
  FpMat m(p_, dim_at(to), dim_at(from));
  if (from == 0) return m;
  for (std::size_t j = 0; j < reps_[from].size(); ++j) {
    std::vector<std::uint32_t> coords = express(to, reps_[from][j].column);
    for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
  }
  return m;
}

ConstructibleModule homology_module(const FilteredComplex& complex,
                                    const std::vector<double>& values, int degree,
                                    std::uint32_t p) {
  return HomologyData(complex, values, degree, p).module();
}

ConstructibleModule homology_module(const FilteredComplex& complex, int degree, std::uint32_t p) {
  return homology_module(complex, complex.column("value"), degree, p);
}

PersistenceDiagram classical_diagram(const FilteredComplex& complex,
                                     const std::vector<double>& values, int degree,
                                     std::uint32_t p) {
  check_field_char(p);
  if (degree < 0) fail(Errc::input, "homology degree must be nonnegative");
  complex.check_monotone(values);
  PersistenceDiagram diag(Backend::vect);
  if (complex.empty()) return diag;

  const auto& simplices = complex.simplices();
  const auto facets = facets_of(complex);
  const std::size_t n = simplices.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] < values[b];
    if (simplices[a].dim() != simplices[b].dim()) return simplices[a].dim() < simplices[b].dim();
    return simplices[a].id < simplices[b].id;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<std::vector<std::uint32_t>> reduced(n);
  std::vector<std::size_t> pivot_owner(n, kNone); // low position -> column position
  std::vector<bool> paired(n, false);

  for (std::size_t j = 0; j < n; ++j) {
    std::size_t idx = order[j];
    std::vector<std::uint32_t> col(n, 0);
    const auto& f = facets[idx];
    for (std::size_t drop = 0; drop < f.size(); ++drop)
      col[pos[f[drop]]] = (drop % 2 == 0) ? 1 : p - 1;
    while (true) {
      std::size_t low = top_index(col);
      if (low == kNone) break;
      std::size_t owner = pivot_owner[low];
      if (owner == kNone) {
        pivot_owner[low] = j;
        // pair: the simplex at `low` is killed by this one
        paired[low] = true;
        paired[j] = true;
        std::size_t birth_idx = order[low];
        if (simplices[birth_idx].dim() == degree && values[birth_idx] < values[idx])
          diag.add(Interval(values[birth_idx], values[idx]),
                   GroupElement::single(GeneratorKey::dim(), 1));
        break;
      }
      std::uint32_t coef = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(col[low]) * fp_inverse(reduced[owner][low], p) % p);
      kern::axpy_modp(col.data(), reduced[owner].data(), p - coef, n, p);
    }
    reduced[j] = std::move(col);
  }

  for (std::size_t j = 0; j < n; ++j) {
    std::size_t idx = order[j];
    // essential classes: unpaired simplices whose own column vanished
    if (!paired[j] && top_index(reduced[j]) == kNone && simplices[idx].dim() == degree)
      diag.add(Interval(values[idx], kInf), GroupElement::single(GeneratorKey::dim(), 1));
  }
  return diag;
}

PersistenceDiagram classical_diagram(const FilteredComplex& complex, int degree, std::uint32_t p) {
  return classical_diagram(complex, complex.column("value"), degree, p);
}

} // namespace grodiag
