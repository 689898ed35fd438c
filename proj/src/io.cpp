#include "grodiag/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace grodiag::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::input, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number_or_inf(const json& j, const char* what) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    bad(std::string(what) + ": only \"inf\" is accepted as a string value");
  }
  if (!j.is_number()) bad(std::string(what) + ": expected a number");
  return j.get<double>();
}

json death_to_json(double death) {
  if (std::isfinite(death)) return death;
  return "inf";
}

void check_format(const json& j) {
  if (j.is_object() && j.contains("format") && j.at("format") != kFormatVersion)
    bad("unsupported format version");
}

std::vector<std::vector<std::int64_t>> matrix_from_json(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const json& row : j) {
    if (!row.is_array()) bad(std::string(what) + ": expected an array of rows");
    std::vector<std::int64_t> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) bad(std::string(what) + ": matrix entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

json matrix_to_json(const FpMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const FinAbMorphism& m) {
  json rows = json::array();
  for (const auto& r : m.entries) {
    json row = json::array();
    for (std::int64_t v : r) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

json object_to_json(const Object& obj) {
  if (const auto* o = std::get_if<FieldObject>(&obj))
    return json{{"type", "field"}, {"p", o->p}, {"dim", o->dim}};
  const auto& o = std::get<FinAbObject>(obj);
  json factors = json::array();
  for (const auto& [p, k] : o.factors) factors.push_back(json::array({p, k}));
  return json{{"type", "finab"}, {"factors", factors}};
}

Object object_from_json(const json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "field") {
    std::int64_t p = field(j, "p").get<std::int64_t>();
    std::int64_t dim = field(j, "dim").get<std::int64_t>();
    if (p < 2 || dim < 0) bad("field object needs a prime p and dim >= 0");
    check_field_char(static_cast<std::uint32_t>(p));
    return FieldObject{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(dim)};
  }
  if (type == "finab") {
    std::vector<std::pair<std::int64_t, int>> factors;
    for (const json& f : field(j, "factors")) {
      if (!f.is_array() || f.size() != 2) bad("finab factors must be [p, k] pairs");
      factors.emplace_back(f.at(0).get<std::int64_t>(), f.at(1).get<int>());
    }
    return FinAbObject::from_factors(std::move(factors));
  }
  bad("unknown object type \"" + type + "\"");
}

} // namespace

json group_element_to_json(const GroupElement& e) {
  json coeffs = json::array();
  for (const auto& [k, c] : e.terms()) {
    json key = k.is_dim() ? json("dim") : json(k.prime_value());
    coeffs.push_back(json::array({key, c}));
  }
  return json{{"backend", backend_name(e.backend())}, {"coeffs", coeffs}};
}

GroupElement group_element_from_json(const json& j) {
  Backend b = backend_from_name(field(j, "backend").get<std::string>());
  std::vector<GroupElement::Term> terms;
  for (const json& t : field(j, "coeffs")) {
    if (!t.is_array() || t.size() != 2) bad("coeffs entries must be [key, int] pairs");
    GeneratorKey key = GeneratorKey::dim();
    if (t.at(0).is_string()) {
      if (t.at(0).get<std::string>() != "dim") bad("unknown generator key");
    } else if (t.at(0).is_number_integer()) {
      key = GeneratorKey::prime(t.at(0).get<std::int64_t>());
    } else {
      bad("generator key must be \"dim\" or a prime integer");
    }
    terms.emplace_back(key, t.at(1).get<std::int64_t>());
  }
  return GroupElement::from_terms(b, std::move(terms));
}

json module_to_json(const ConstructibleModule& m) {
  json objects = json::array();
  for (const Object& o : m.objects()) objects.push_back(object_to_json(o));
  json maps = json::array();
  for (const Morphism& f : m.maps()) {
    if (const auto* fm = std::get_if<FpMat>(&f))
      maps.push_back(matrix_to_json(*fm));
    else
      maps.push_back(matrix_to_json(std::get<FinAbMorphism>(f)));
  }
  return json{{"format", kFormatVersion},
              {"backend", backend_name(m.backend())},
              {"criticals", m.criticals().values()},
              {"objects", objects},
              {"maps", maps}};
}

ConstructibleModule module_from_json(const json& j) {
  check_format(j);
  Backend b = backend_from_name(field(j, "backend").get<std::string>());
  std::vector<double> criticals;
  for (const json& v : field(j, "criticals")) {
    if (!v.is_number()) bad("criticals must be numbers");
    criticals.push_back(v.get<double>());
  }
  std::vector<Object> objects;
  for (const json& o : field(j, "objects")) objects.push_back(object_from_json(o));
  if (objects.empty()) bad("module needs at least one object");

  std::vector<Morphism> maps;
  const json& jmaps = field(j, "maps");
  for (std::size_t i = 0; i < jmaps.size(); ++i) {
    auto rows = matrix_from_json(jmaps.at(i), "maps");
    if (i + 1 >= objects.size()) bad("more maps than adjacent object pairs");
    if (b == Backend::vect) {
      const auto& src = std::get<FieldObject>(objects[i]);
      const auto& tgt = std::get<FieldObject>(objects[i + 1]);
      if (rows.size() != tgt.dim)
        bad("maps[" + std::to_string(i) + "] must have " + std::to_string(tgt.dim) + " rows");
      for (auto& r : rows)
        if (r.size() != src.dim)
          bad("maps[" + std::to_string(i) + "] must have " + std::to_string(src.dim) + " columns");
      FpMat m = FpMat::from_rows(src.p, rows);
      if (m.rows() == 0 || m.cols() == 0) m = FpMat(src.p, tgt.dim, src.dim);
      maps.emplace_back(std::move(m));
    } else {
      maps.emplace_back(FinAbMorphism::make(std::get<FinAbObject>(objects[i]),
                                            std::get<FinAbObject>(objects[i + 1]),
                                            std::move(rows)));
    }
  }
  return ConstructibleModule::make(b, CriticalSet(std::move(criticals)), std::move(objects),
                                   std::move(maps));
}

json diagram_to_json(const PersistenceDiagram& d) {
  json points = json::array();
  for (const auto& [i, v] : d.points())
    points.push_back(json{{"birth", i.birth}, {"death", death_to_json(i.death)},
                          {"value", group_element_to_json(v)}});
  return json{{"format", kFormatVersion}, {"backend", backend_name(d.backend())},
              {"points", points}};
}

PersistenceDiagram diagram_from_json(const json& j) {
  check_format(j);
  PersistenceDiagram d(backend_from_name(field(j, "backend").get<std::string>()));
  for (const json& pt : field(j, "points")) {
    Interval i(field(pt, "birth").get<double>(), number_or_inf(field(pt, "death"), "death"));
    GroupElement v = group_element_from_json(field(pt, "value"));
    d.add(i, v);
  }
  return d;
}

json matching_to_json(const Matching& m) {
  json entries = json::array();
  for (const auto& [pair, v] : m.entries()) {
    entries.push_back(json{
        {"left", {{"birth", pair.first.birth}, {"death", death_to_json(pair.first.death)}}},
        {"right", {{"birth", pair.second.birth}, {"death", death_to_json(pair.second.death)}}},
        {"value", group_element_to_json(v)}});
  }
  return json{{"format", kFormatVersion}, {"backend", backend_name(m.backend())},
              {"entries", entries}};
}

Matching matching_from_json(const json& j) {
  check_format(j);
  Matching m(backend_from_name(field(j, "backend").get<std::string>()));
  for (const json& e : field(j, "entries")) {
    const json& l = field(e, "left");
    const json& r = field(e, "right");
    Interval left(field(l, "birth").get<double>(), number_or_inf(field(l, "death"), "death"));
    Interval right(field(r, "birth").get<double>(), number_or_inf(field(r, "death"), "death"));
    m.add(left, right, group_element_from_json(field(e, "value")));
  }
  return m;
}

json complex_to_json(const FilteredComplex& k) {
  json simplices = json::array();
  for (const Simplex& s : k.simplices()) {
    json e{{"id", s.id}, {"vertices", s.vertices}, {"value", s.value}};
    if (s.value2) e["value2"] = *s.value2;
    simplices.push_back(std::move(e));
  }
  return json{{"format", kFormatVersion}, {"simplices", simplices}};
}

FilteredComplex complex_from_json(const json& j) {
  check_format(j);
  std::vector<Simplex> simplices;
  for (const json& e : field(j, "simplices")) {
    Simplex s;
    s.id = field(e, "id").get<std::int64_t>();
    for (const json& v : field(e, "vertices")) s.vertices.push_back(v.get<int>());
    s.value = field(e, "value").get<double>();
    if (e.contains("value2")) s.value2 = e.at("value2").get<double>();
    simplices.push_back(std::move(s));
  }
  return FilteredComplex::make(std::move(simplices));
}

json interleaving_to_json(const InterleavingData& d) {
  auto maps_json = [](const std::vector<Morphism>& maps, const std::vector<double>& grid) {
    json out = json::array();
    for (std::size_t i = 0; i < maps.size(); ++i) {
      json m;
      if (const auto* fm = std::get_if<FpMat>(&maps[i]))
        m = matrix_to_json(*fm);
      else
        m = matrix_to_json(std::get<FinAbMorphism>(maps[i]));
      out.push_back(json{{"at", grid[i]}, {"matrix", std::move(m)}});
    }
    return out;
  };
  return json{{"format", kFormatVersion},
              {"epsilon", d.epsilon},
              {"phi", maps_json(d.phi, d.grid)},
              {"psi", maps_json(d.psi, d.grid)}};
}

InterleavingData interleaving_from_json(const json& j, const ConstructibleModule& f,
                                        const ConstructibleModule& g) {
  check_format(j);
  InterleavingData d;
  d.epsilon = field(j, "epsilon").get<double>();
  if (!(d.epsilon >= 0)) bad("epsilon must be nonnegative");
  d.grid = merged_grid(f, g, d.epsilon);

  auto parse_maps = [&](const json& arr, const ConstructibleModule& from,
                        const ConstructibleModule& to, const char* what) {
    if (!arr.is_array() || arr.size() != d.grid.size())
      bad(std::string(what) + ": expected one map per merged grid value (" +
          std::to_string(d.grid.size()) + ")");
    std::vector<std::pair<double, std::vector<std::vector<std::int64_t>>>> raw;
    for (const json& e : arr)
      raw.emplace_back(field(e, "at").get<double>(), matrix_from_json(field(e, "matrix"), what));
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Morphism> maps;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].first != d.grid[i])
        bad(std::string(what) + ": map locations must match the merged grid exactly");
      const double t = d.grid[i];
      Object src = from.evaluate(t);
      // target level via the shifted-array rank, never t + epsilon
      std::size_t shifted = 0;
      for (double s : to.criticals().values())
        if (s - d.epsilon <= t) ++shifted;
      Object tgt = to.object_at_level(shifted);
      if (backend_of(src) == Backend::vect) {
        const auto& so = std::get<FieldObject>(src);
        const auto& to_ = std::get<FieldObject>(tgt);
        if (raw[i].second.size() != to_.dim)
          bad(std::string(what) + " at " + std::to_string(t) + ": wrong row count");
        for (auto& r : raw[i].second)
          if (r.size() != so.dim)
            bad(std::string(what) + " at " + std::to_string(t) + ": wrong column count");
        FpMat m = FpMat::from_rows(so.p, raw[i].second);
        if (m.rows() == 0 || m.cols() == 0) m = FpMat(so.p, to_.dim, so.dim);
        maps.emplace_back(std::move(m));
      } else {
        maps.emplace_back(FinAbMorphism::make(std::get<FinAbObject>(src),
                                              std::get<FinAbObject>(tgt),
                                              std::move(raw[i].second)));
      }
    }
    return maps;
  };
  d.phi = parse_maps(field(j, "phi"), f, g, "phi");
  d.psi = parse_maps(field(j, "psi"), g, f, "psi");
  return d;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(Errc::input, path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(Errc::input, "cannot write " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fail(Errc::input, "cannot move temporary file onto " + path);
}

} // namespace grodiag::io
