// metricgeo: property checks, transforms and estimators on finite metric spaces.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metricgeo/detectors.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/io.hpp"
#include "metricgeo/moebius.hpp"
#include "metricgeo/suites.hpp"
#include "metricgeo/transforms.hpp"

using namespace metricgeo;
using nlohmann::json;

namespace {

struct Globals {
  double tolerance = kDefaultTolerance;
  std::uint64_t max_quadruples = kDefaultQuadrupleCap;
  std::string output = "json";
  std::uint64_t seed = kDefaultSeed;
};

struct Run {
  std::vector<json> reports;
  bool pass = true;
  std::optional<json> product;  // a transformed space written to stdout
};

void add(Run& run, const PropertyReport& r) {
  run.pass = run.pass && r.holds;
  run.reports.push_back(r);
}

Index resolve(const FiniteMetricSpace& space, const std::string& label) {
  return space.index_of(label);
}

/// Quasi-distance tables (inverted, sphericalized, visual) may break the
/// triangle inequality on purpose and skip the metric check.
bool is_quasi(const FiniteMetricSpace& space) {
  const auto& meta = space.metadata();
  if (!meta.contains("history") || meta["history"].empty()) return false;
  const auto last = meta["history"].back().value("transform", "");
  return last == "invert" || last == "sphericalize" || last == "bourdon_visual";
}

FiniteMetricSpace load_metric(const std::string& path, double tolerance) {
  auto space = io::load_space(path);
  if (!is_quasi(space)) {
    const auto r = validate_metric(space, tolerance);
    if (!r.holds) {
      std::ostringstream msg;
      msg << path << ": triangle inequality fails at";
      for (auto i : r.witness) msg << " " << space.label(i);
      msg << " (ratio " << r.constant << ")";
      throw InputError(msg.str());
    }
  }
  return space;
}

std::string csv(const std::vector<json>& reports) {
  std::ostringstream out;
  out << "property,holds,constant\n";
  for (const auto& r : reports) {
    const auto& c = r.at("constant");
    out << r.value("property", "") << "," << (r.value("holds", false) ? "true" : "false") << ","
        << (c.is_null() ? std::string("inf") : c.dump()) << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  if (const char* env = std::getenv("METRICGEO_TOLERANCE")) {
    try {
      g.tolerance = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: METRICGEO_TOLERANCE is not a number: " << env << "\n";
      return 2;
    }
  }

  CLI::App app{"Metric-geometry property checks, transforms and estimators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", g.tolerance, "Numeric tolerance (env METRICGEO_TOLERANCE)")
      ->check(CLI::NonNegativeNumber);
  auto* quad_opt = app.add_option("--max-quadruples", g.max_quadruples,
                                  "Quadruples enumerated before switching to seeded sampling");
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for every sampled quantity");

  // check
  auto* check = app.add_subcommand("check", "Run a property detector on a space file");
  std::string check_prop, check_file;
  double threshold = kDefaultDisconnectednessThreshold;
  check->add_option("property", check_prop)
      ->required()
      ->check(CLI::IsMember({"metric", "ptolemy", "ultrametric", "perfect", "disconnected"}));
  check->add_option("space", check_file)->required();
  check->add_option("--threshold", threshold, "Uniform disconnectedness threshold on alpha");

  // transform
  auto* transform = app.add_subcommand("transform", "Invert, sphericalize, flatten or snowflake");
  std::string op, t_file, at, out_file, flatten_from = "invert";
  double alpha = 0.5;
  transform->add_option("op", op)
      ->required()
      ->check(CLI::IsMember({"invert", "sphericalize", "flatten", "snowflake"}));
  transform->add_option("space", t_file)->required();
  transform->add_option("--at", at, "Base point label");
  transform->add_option("--alpha", alpha, "Snowflake exponent in (0,1]");
  transform->add_option("--from", flatten_from, "Quasi-distance flattened by 'flatten'")
      ->check(CLI::IsMember({"invert", "sphericalize"}));
  transform->add_option("-o,--out", out_file, "Write the space file here instead of stdout");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Cross-ratios, distortion and circle checks");
  std::string est, e_file;
  std::vector<std::string> e_labels;
  double bound = INFINITY;
  bool use_inverse = false;
  estimate->add_option("what", est)
      ->required()
      ->check(CLI::IsMember({"crossratio", "distortion", "circle"}));
  estimate->add_option("input", e_file, "Space file, or correspondence file for distortion")
      ->required();
  estimate->add_option("labels", e_labels, "crossratio: a b c d; circle: cyclic order");
  estimate->add_option("--bound", bound, "distortion: fail when sqm_constant exceeds this");
  estimate->add_flag("--inverse", use_inverse, "distortion: profile the inverse correspondence");

  // verify-heisenberg
  auto* vh = app.add_subcommand("verify-heisenberg", "Run the Heisenberg invariant suite");
  HeisenbergSuite hs;
  std::string field = "C";
  vh->add_option("--field", field)->check(CLI::IsMember({"R", "C", "H", "O"}));
  vh->add_option("--n", hs.n);
  vh->add_option("--count", hs.count);
  vh->add_option("--box", hs.box);

  // verify-cantor
  auto* vc = app.add_subcommand("verify-cantor", "Run the symbolic Cantor-space suite");
  CantorSuite cs;
  std::optional<int> cm;
  vc->add_option("--N", cs.N);
  vc->add_option("--M", cm);
  vc->add_option("--s", cs.s);
  vc->add_option("--depth", cs.depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Run run;
  try {
    const QuadrupleOptions quads{g.max_quadruples, g.seed};
    if (*check) {
      const auto space = io::load_space(check_file);
      if (check_prop == "metric") add(run, validate_metric(space, g.tolerance));
      else if (check_prop == "ptolemy") add(run, ptolemy_constant(space, quads, g.tolerance));
      else if (check_prop == "ultrametric") add(run, ultrametric_check(space, g.tolerance));
      else if (check_prop == "perfect") add(run, uniform_perfectness_constant(space, g.tolerance));
      else add(run, uniform_disconnectedness(space, threshold, g.tolerance));
    } else if (*transform) {
      const auto space = load_metric(t_file, g.tolerance);
      std::optional<FiniteMetricSpace> result;
      auto base = [&] {
        if (at.empty()) throw InputError("transform " + op + " needs --at <label>");
        return resolve(space, at);
      };
      if (op == "invert") result = invert_quasi(space, base()).space;
      else if (op == "sphericalize") result = sphericalize_quasi(space, base()).space;
      else if (op == "flatten")
        result = chain_metrize(flatten_from == "invert" ? invert_quasi(space, base())
                                                        : sphericalize_quasi(space, base()));
      else result = snowflake(space, alpha);
      auto doc = io::space_to_json(*result);
      if (out_file.empty()) {
        run.product = std::move(doc);
      } else {
        io::write_text(out_file, doc.dump(2) + "\n");
        PropertyReport r;
        r.property = "transform." + op;
        r.holds = true;
        r.details = {{"output", out_file}, {"points", result->size()}};
        add(run, r);
      }
    } else if (*estimate) {
      if (est == "crossratio") {
        const auto space = load_metric(e_file, g.tolerance);
        if (e_labels.size() != 4) throw InputError("crossratio needs four labels a b c d");
        std::vector<Index> idx;
        for (const auto& l : e_labels) idx.push_back(resolve(space, l));
        PropertyReport r;
        r.property = "crossratio";
        r.holds = true;
        r.constant = cross_ratio(space, idx[0], idx[1], idx[2], idx[3]);
        r.witness = idx;
        add(run, r);
      } else if (est == "distortion") {
        auto map = io::load_correspondence(e_file);
        if (use_inverse) map = map.inverse();
        const auto d = distortion_profile(map, quads);
        json j = d;
        j["property"] = "distortion";
        j["constant"] = d.sqm_constant;
        j["holds"] = d.sqm_constant <= bound * (1 + g.tolerance);
        run.pass = j["holds"].get<bool>();
        run.reports.push_back(std::move(j));
      } else {
        const auto space = load_metric(e_file, g.tolerance);
        std::vector<Index> cycle;
        if (e_labels.empty())
          for (Index i = 0; i < space.size(); ++i) cycle.push_back(i);
        for (const auto& l : e_labels) cycle.push_back(resolve(space, l));
        add(run, ptolemy_circle_check(space, cycle, g.tolerance));
      }
    } else if (*vh) {
      hs.field = heisenberg::parse_field(field);
      hs.seed = g.seed;
      hs.tolerance = g.tolerance;
      if (quad_opt->count() > 0) hs.max_quadruples = g.max_quadruples;
      for (const auto& r : verify_heisenberg(hs)) add(run, r);
    } else if (*vc) {
      cs.M = cm.value_or(cs.N);
      cs.seed = g.seed;
      if (quad_opt->count() > 0) cs.max_quadruples = g.max_quadruples;
      for (const auto& r : verify_cantor(cs)) add(run, r);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (run.product) {
    std::cout << run.product->dump(2) << "\n";
    return 0;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g.output == "csv") {
    std::cout << csv(run.reports);
  } else {
    json cmd = json::array();
    for (int i = 1; i < argc; ++i) cmd.push_back(argv[i]);
    json doc{{"command", cmd}, {"reports", run.reports}, {"pass", run.pass}, {"wall_time_ms", ms}};
    std::cout << doc.dump(2) << "\n";
  }
  return run.pass ? 0 : 1;
}
