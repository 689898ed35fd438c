#include "grodiag/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grodiag/bottleneck.hpp"
#include "grodiag/homology.hpp"
#include "grodiag/interleave.hpp"
#include "grodiag/io.hpp"
#include "grodiag/selftest.hpp"

namespace grodiag {

namespace {

std::string format_extended(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void emit(const io::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    io::write_json_file(out_path, j);
}

struct DiagramCmd {
  std::string input, out;
  int degree = 0;
  std::int64_t field_char = 2;

  int run() const {
    io::json j = io::load_json_file(input);
    PersistenceDiagram d(Backend::vect);
    if (j.is_object() && j.contains("simplices")) {
      FilteredComplex k = io::complex_from_json(j);
      check_field_char(static_cast<std::uint32_t>(field_char));
      d = mobius_inversion(homology_module(k, degree, static_cast<std::uint32_t>(field_char)));
    } else {
      d = mobius_inversion(io::module_from_json(j));
    }
    emit(io::diagram_to_json(d), out);
    return 0;
  }
};

struct BottleneckCmd {
  std::string a, b, witness_out;

  int run() const {
    PersistenceDiagram y1 = io::diagram_from_json(io::load_json_file(a));
    PersistenceDiagram y2 = io::diagram_from_json(io::load_json_file(b));
    BottleneckResult r = bottleneck_distance(y1, y2);
    if (!witness_out.empty()) io::write_json_file(witness_out, io::matching_to_json(r.witness));
    std::cout << format_extended(r.distance) << '\n';
    return 0;
  }
};

struct VerifyCmd {
  std::string f_path, g_path, data_path;

  int run() const {
    ConstructibleModule f = io::module_from_json(io::load_json_file(f_path));
    ConstructibleModule g = io::module_from_json(io::load_json_file(g_path));
    InterleavingData data = io::interleaving_from_json(io::load_json_file(data_path), f, g);
    std::vector<std::string> violations = verify_interleaving(f, g, data);
    if (violations.empty()) {
      std::cout << "valid " << format_extended(data.epsilon) << "-interleaving\n";
      return 0;
    }
    for (const std::string& v : violations) std::cout << v << '\n';
    return 1;
  }
};

struct InterpolateCmd {
  std::string f_path, g_path, data_path, out;
  double t = 0.5;

  int run() const {
    ConstructibleModule f = io::module_from_json(io::load_json_file(f_path));
    ConstructibleModule g = io::module_from_json(io::load_json_file(g_path));
    InterleavingData data = io::interleaving_from_json(io::load_json_file(data_path), f, g);
    ConstructibleModule k = interpolate(f, g, data, t);
    emit(io::module_to_json(k), out);
    return 0;
  }
};

struct StabilityCmd {
  std::string input;
  std::string f_col = "value", g_col = "value2";
  int degree = 0;
  std::int64_t field_char = 2;

  int run() const {
    FilteredComplex k = io::complex_from_json(io::load_json_file(input));
    std::vector<double> f = k.column(f_col);
    std::vector<double> g = k.column(g_col);
    k.check_monotone(f);
    k.check_monotone(g);
    const std::uint32_t p = static_cast<std::uint32_t>(field_char);
    check_field_char(p);

    double eps = 0;
    for (std::size_t i = 0; i < k.size(); ++i) eps = std::max(eps, std::abs(f[i] - g[i]));
    PersistenceDiagram df = mobius_inversion(homology_module(k, f, degree, p));
    PersistenceDiagram dg = mobius_inversion(homology_module(k, g, degree, p));
    BottleneckResult r = bottleneck_distance(df, dg);

    std::cout << "perturbation bound: " << format_extended(eps) << '\n';
    std::cout << "bottleneck distance: " << format_extended(r.distance) << '\n';
    if (r.distance <= eps) {
      std::cout << "PASS: distance within the perturbation bound\n";
      return 0;
    }
    std::cout << "FAIL: distance exceeds the perturbation bound\n";
    return 1;
  }
};

int run_selftest(std::uint64_t seed) {
  std::vector<selftest::Outcome> outcomes = selftest::run_all(seed);
  for (const selftest::Outcome& o : outcomes) {
    std::cout << (o.pass ? "PASS" : "FAIL") << ": " << o.name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  return selftest::all_passed(outcomes) ? 0 : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"generalized persistence diagrams via rank-function inversion"};
  app.require_subcommand(1);

  DiagramCmd diagram_cmd;
  CLI::App* diagram = app.add_subcommand("diagram", "compute the diagram of a module or complex");
  diagram->add_option("input", diagram_cmd.input, "module or complex JSON file")->required();
  diagram->add_option("--out", diagram_cmd.out, "output diagram file (stdout when omitted)");
  diagram->add_option("--degree", diagram_cmd.degree, "homology degree for complex input");
  diagram->add_option("--field-char", diagram_cmd.field_char, "field characteristic");

  BottleneckCmd bottleneck_cmd;
  CLI::App* bn = app.add_subcommand("bottleneck", "bottleneck distance between two diagrams");
  bn->add_option("diagramA", bottleneck_cmd.a, "first diagram file")->required();
  bn->add_option("diagramB", bottleneck_cmd.b, "second diagram file")->required();
  bn->add_option("--witness", bottleneck_cmd.witness_out, "write the optimal matching here");

  VerifyCmd verify_cmd;
  CLI::App* verify = app.add_subcommand("verify-interleave", "check interleaving data");
  verify->add_option("F", verify_cmd.f_path, "first module file")->required();
  verify->add_option("G", verify_cmd.g_path, "second module file")->required();
  verify->add_option("data", verify_cmd.data_path, "interleaving data file")->required();

  InterpolateCmd interp_cmd;
  CLI::App* interp = app.add_subcommand("interpolate", "module family between two modules");
  interp->add_option("F", interp_cmd.f_path, "first module file")->required();
  interp->add_option("G", interp_cmd.g_path, "second module file")->required();
  interp->add_option("data", interp_cmd.data_path, "interleaving data file")->required();
  interp->add_option("--t", interp_cmd.t, "time in [0, 1]")->required();
  interp->add_option("--out", interp_cmd.out, "output module file (stdout when omitted)");

  StabilityCmd stability_cmd;
  CLI::App* stab = app.add_subcommand("stability-check",
                                      "compare the diagram distance against a perturbation");
  stab->add_option("input", stability_cmd.input, "complex file with two filtration columns")
      ->required();
  stab->add_option("--f", stability_cmd.f_col, "first filtration column (default: value)");
  stab->add_option("--g", stability_cmd.g_col, "second filtration column (default: value2)");
  stab->add_option("--degree", stability_cmd.degree, "homology degree");
  stab->add_option("--field-char", stability_cmd.field_char, "field characteristic");

  std::uint64_t seed = 20240901;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the randomized property suites");
  selftest_cmd->add_option("--seed", seed, "seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*diagram) return diagram_cmd.run();
    if (*bn) return bottleneck_cmd.run();
    if (*verify) return verify_cmd.run();
    if (*interp) return interp_cmd.run();
    if (*stab) return stability_cmd.run();
    if (*selftest_cmd) return run_selftest(seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace grodiag
