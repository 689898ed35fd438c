#include "grodiag/interleave.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace grodiag {

namespace {

// Sorted array of critical values shifted left by delta. Level lookups of
// x + delta are done as rank queries of x against the shifted array, so a
// shifted parameter is never recomputed by addition.
struct ShiftedLevels {
  std::vector<double> arr;

  ShiftedLevels() = default;
  ShiftedLevels(const std::vector<double>& values, double delta) {
    arr.reserve(values.size());
    for (double v : values) arr.push_back(v - delta);
  }

  // #{a in arr : a <= x}
  std::size_t level(double x) const {
    return std::upper_bound(arr.begin(), arr.end(), x) - arr.begin();
  }
};

Morphism stored_or_zero(const std::vector<Morphism>& maps, std::ptrdiff_t idx,
                        const ConstructibleModule& from, std::size_t from_level,
                        const ConstructibleModule& to, std::size_t to_level) {
  if (idx >= 0) return maps[static_cast<std::size_t>(idx)];
  // below the merged grid both modules vanish
  return zero_morphism(from.object_at_level(from_level), to.object_at_level(to_level));
}

} // namespace

std::vector<double> merged_grid(const ConstructibleModule& f, const ConstructibleModule& g,
                                double eps) {
  std::set<double> grid;
  for (double s : f.criticals().values()) {
    grid.insert(s);
    grid.insert(s - eps);
  }
  for (double s : g.criticals().values()) {
    grid.insert(s);
    grid.insert(s - eps);
  }
  return {grid.begin(), grid.end()};
}

std::vector<std::string> verify_interleaving(const ConstructibleModule& f,
                                             const ConstructibleModule& g,
                                             const InterleavingData& data) {
  if (f.backend() != g.backend())
    fail(Errc::backend_mismatch, "interleaving across backends");
  if (std::isnan(data.epsilon) || data.epsilon < 0)
    fail(Errc::domain, "interleaving shift must be nonnegative");

  std::vector<std::string> violations;
  const std::vector<double> grid = merged_grid(f, g, data.epsilon);
  if (data.grid != grid) {
    violations.push_back("comparison grid does not match the merged critical grid");
    return violations;
  }
  if (data.phi.size() != grid.size() || data.psi.size() != grid.size()) {
    violations.push_back("one comparison map required per grid value in each direction");
    return violations;
  }

  const double eps = data.epsilon;
  const ShiftedLevels f1(f.criticals().values(), eps);
  const ShiftedLevels g1(g.criticals().values(), eps);
  // iterated shift, matching two applications of the single shift
  const ShiftedLevels f2(f1.arr, eps);
  const ShiftedLevels g2(g1.arr, eps);
  const ShiftedLevels grid1(grid, eps);

  auto level_f0 = [&](double t) { return f.criticals().level_at_or_below(t); };
  auto level_g0 = [&](double t) { return g.criticals().level_at_or_below(t); };

  auto object_dims_ok = [&](const Morphism& m, const Object& src, const Object& tgt,
                            const std::string& what) {
    bool ok = same_object(morphism_source(m), src) && same_object(morphism_target(m), tgt);
    if (!ok) violations.push_back(what + ": endpoints do not match the modules");
    return ok;
  };

  std::vector<bool> phi_ok(grid.size()), psi_ok(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    std::ostringstream at;
    at << "at grid value " << t;
    phi_ok[i] = object_dims_ok(data.phi[i], f.object_at_level(level_f0(t)),
                               g.object_at_level(g1.level(t)), "phi " + at.str());
    psi_ok[i] = object_dims_ok(data.psi[i], g.object_at_level(level_g0(t)),
                               f.object_at_level(f1.level(t)), "psi " + at.str());
  }

  // naturality squares on consecutive grid values
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double t = grid[i], u = grid[i + 1];
    if (phi_ok[i] && phi_ok[i + 1]) {
      Morphism lhs = compose(data.phi[i + 1], f.map_between_levels(level_f0(t), level_f0(u)));
      Morphism rhs = compose(g.map_between_levels(g1.level(t), g1.level(u)), data.phi[i]);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "phi naturality square fails between " << t << " and " << u;
        violations.push_back(os.str());
      }
    }
    if (psi_ok[i] && psi_ok[i + 1]) {
      Morphism lhs = compose(data.psi[i + 1], g.map_between_levels(level_g0(t), level_g0(u)));
      Morphism rhs = compose(f.map_between_levels(f1.level(t), f1.level(u)), data.psi[i]);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "psi naturality square fails between " << t << " and " << u;
        violations.push_back(os.str());
      }
    }
  }

  // triangles: the component at t + eps is the stored map at the last grid
  // value reaching t + eps (cell-constant by construction)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const std::size_t j = grid1.level(t); // pred index + 1
    if (j == 0) {
      violations.push_back("internal: no grid value below a shifted grid point");
      continue;
    }
    if (phi_ok[i] && psi_ok[j - 1]) {
      const Morphism& up = data.psi[j - 1];
      bool shapes = same_object(morphism_source(up), morphism_target(data.phi[i])) &&
                    same_object(morphism_target(up), f.object_at_level(f2.level(t)));
      if (!shapes) {
        std::ostringstream os;
        os << "triangle at " << t << ": psi component has inconsistent endpoints";
        violations.push_back(os.str());
      } else {
        Morphism lhs = compose(up, data.phi[i]);
        Morphism rhs = f.map_between_levels(level_f0(t), f2.level(t));
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "triangle psi(phi) at " << t << " does not equal the module map";
          violations.push_back(os.str());
        }
      }
    }
    if (psi_ok[i] && phi_ok[j - 1]) {
      const Morphism& up = data.phi[j - 1];
      bool shapes = same_object(morphism_source(up), morphism_target(data.psi[i])) &&
                    same_object(morphism_target(up), g.object_at_level(g2.level(t)));
      if (!shapes) {
        std::ostringstream os;
        os << "triangle at " << t << ": phi component has inconsistent endpoints";
        violations.push_back(os.str());
      } else {
        Morphism lhs = compose(up, data.psi[i]);
        Morphism rhs = g.map_between_levels(level_g0(t), g2.level(t));
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "triangle phi(psi) at " << t << " does not equal the module map";
          violations.push_back(os.str());
        }
      }
    }
  }
  return violations;
}

FunctionInterleaving interleaving_from_functions(const FilteredComplex& complex,
                                                 const std::vector<double>& f_values,
                                                 const std::vector<double>& g_values, int degree,
                                                 std::uint32_t p) {
  if (f_values.size() != complex.size() || g_values.size() != complex.size())
    fail(Errc::input, "filtration columns do not match the complex");

  double eps = 0;
  for (std::size_t i = 0; i < complex.size(); ++i)
    eps = std::max(eps, std::abs(f_values[i] - g_values[i]));

  // widen by ulps until the shifted-array comparisons see every simplex
  // inside the opposite sublevel (guards rounding of v - eps)
  for (int guard = 0; guard < 4; ++guard) {
    bool ok = true;
    for (std::size_t i = 0; i < complex.size(); ++i)
      if (g_values[i] - eps > f_values[i] || f_values[i] - eps > g_values[i]) ok = false;
    if (ok) break;
    eps = std::nextafter(eps, kInf);
  }

  HomologyData fd(complex, f_values, degree, p);
  HomologyData gd(complex, g_values, degree, p);

  InterleavingData data;
  data.epsilon = eps;
  data.grid = merged_grid(fd.module(), gd.module(), eps);

  const ShiftedLevels f1(fd.criticals(), eps);
  const ShiftedLevels g1(gd.criticals(), eps);

  // identity-on-chains comparison maps: express every basis cycle of the
  // source level in the target level of the other filtration
  auto chain_maps = [&](const HomologyData& from, const HomologyData& to,
                        const CriticalSet& from_crit, const ShiftedLevels& to_shift) {
    std::vector<Morphism> maps;
    maps.reserve(data.grid.size());
    for (double t : data.grid) {
      const std::size_t lf = from_crit.level_at_or_below(t);
      const std::size_t lt = to_shift.level(t);
      FpMat m(p, to.dim_at(lt), from.dim_at(lf));
      if (lf > 0 && to.dim_at(lt) > 0) {
        auto basis = from.basis_at(lf);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          std::vector<std::uint32_t> coords = to.express(lt, basis[j]);
          for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
        }
      } else if (lf > 0) {
        // target is zero; still confirm the cycle lands there
        for (auto& cyc : from.basis_at(lf)) (void)to.express(lt, cyc);
      }
      maps.push_back(std::move(m));
    }
    return maps;
  };

  data.phi = chain_maps(fd, gd, fd.module().criticals(), g1);
  data.psi = chain_maps(gd, fd, gd.module().criticals(), f1);

  return FunctionInterleaving{fd.module(), gd.module(), std::move(data)};
}

ConstructibleModule interpolate(const ConstructibleModule& f, const ConstructibleModule& g,
                                const InterleavingData& data, double t) {
  if (f.backend() != Backend::vect || g.backend() != Backend::vect)
    fail(Errc::unsupported_backend, "interpolation is implemented for the field backend only");
  if (std::isnan(t) || t < 0 || t > 1) fail(Errc::domain, "interpolation time must be in [0, 1]");
  {
    std::vector<std::string> violations = verify_interleaving(f, g, data);
    if (!violations.empty())
      fail(Errc::input, "interleaving data does not verify: " + violations.front());
  }

  const double eps = data.epsilon;
  const double d0 = eps * t;       // shift of the F row
  const double d1 = eps * (1 - t); // shift of the G row
  const std::uint32_t p = std::get<FieldObject>(f.objects()[0]).p;
  if (std::get<FieldObject>(g.objects()[0]).p != p)
    fail(Errc::input, "interpolation across different characteristics");

  const ShiftedLevels fa(f.criticals().values(), d0);  // F at p + eps*t
  const ShiftedLevels gb(g.criticals().values(), d1);  // G at p + eps*(1-t)
  const ShiftedLevels f_eps(f.criticals().values(), eps);
  const ShiftedLevels g_eps(g.criticals().values(), eps);
  const ShiftedLevels gc0(g_eps.arr, d0);              // G at p + eps*t + eps
  const ShiftedLevels fc1(f_eps.arr, d1);              // F at p + eps*(1-t) + eps
  const ShiftedLevels grid_d0(data.grid, d0);
  const ShiftedLevels grid_d1(data.grid, d1);

  // critical candidates: wherever a minimal element or a map into one of
  // the two minimal common upper bounds changes level
  std::set<double> crit_set;
  for (double s : fa.arr) crit_set.insert(s);
  for (double s : gb.arr) crit_set.insert(s);
  for (double s : gc0.arr) crit_set.insert(s);
  for (double s : fc1.arr) crit_set.insert(s);
  const std::vector<double> criticals(crit_set.begin(), crit_set.end());

  struct Cell {
    FpMat basis; // columns: limit basis inside A (+) B
    std::size_t la, lb;
  };
  std::vector<Cell> cells;
  std::vector<Object> objects;

  for (double c : criticals) {
    const std::size_t la = fa.level(c);
    const std::size_t lb = gb.level(c);
    const std::size_t lc0 = gc0.level(c);
    const std::size_t lc1 = fc1.level(c);

    const std::ptrdiff_t j0 = static_cast<std::ptrdiff_t>(grid_d0.level(c)) - 1;
    const std::ptrdiff_t j1 = static_cast<std::ptrdiff_t>(grid_d1.level(c)) - 1;
    Morphism phi = stored_or_zero(data.phi, j0, f, la, g, lc0);
    Morphism psi = stored_or_zero(data.psi, j1, g, lb, f, lc1);

    const FpMat& phi_m = std::get<FpMat>(phi);
    const FpMat& psi_m = std::get<FpMat>(psi);
    const FpMat g0 = std::get<FpMat>(g.map_between_levels(lb, lc0));
    const FpMat f1 = std::get<FpMat>(f.map_between_levels(la, lc1));
    if (phi_m.cols() != std::get<FieldObject>(f.object_at_level(la)).dim ||
        phi_m.rows() != g0.rows() || psi_m.cols() != g0.cols() || psi_m.rows() != f1.rows() ||
        f1.cols() != phi_m.cols())
      fail(Errc::domain, "interpolation grid lookup produced inconsistent shapes");

    LimitPair lim = limit_pair(phi_m, g0, f1, psi_m);
    cells.push_back(Cell{vstack(lim.proj_a, lim.proj_b), la, lb});
    objects.push_back(FieldObject{p, lim.object.dim});
  }

  std::vector<Morphism> maps;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const Cell& cur = cells[i];
    const Cell& nxt = cells[i + 1];
    // push the basis forward along both rows, then express in the next basis
    FpMat fwd_a = std::get<FpMat>(f.map_between_levels(cur.la, nxt.la));
    FpMat fwd_b = std::get<FpMat>(g.map_between_levels(cur.lb, nxt.lb));
    const std::size_t dim_a_cur = fwd_a.cols();
    FpMat cur_a(p, dim_a_cur, cur.basis.cols());
    FpMat cur_b(p, cur.basis.rows() - dim_a_cur, cur.basis.cols());
    for (std::size_t r = 0; r < cur.basis.rows(); ++r)
      for (std::size_t cc = 0; cc < cur.basis.cols(); ++cc) {
        if (r < dim_a_cur)
          cur_a.at(r, cc) = cur.basis.at(r, cc);
        else
          cur_b.at(r - dim_a_cur, cc) = cur.basis.at(r, cc);
      }
    std::optional<FpMat> x = solve(nxt.basis, vstack(matmul(fwd_a, cur_a), matmul(fwd_b, cur_b)));
    if (!x) fail(Errc::domain, "interpolation image escapes the next limit");
    maps.push_back(std::move(*x));
  }

  return ConstructibleModule::make(Backend::vect, CriticalSet(criticals), std::move(objects),
                                   std::move(maps));
}

} // namespace grodiag
