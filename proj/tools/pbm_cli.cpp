// pbm: command-line front end for pomset block metric analyses.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pbm/io.hpp"
#include "pbm/pbm.hpp"

#ifndef PBM_DATA_DIR
#define PBM_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kCap = 4, kInvariant = 5 };

struct Options {
  std::string config;
  std::string code;
  std::string ideal;
  std::string center;
  std::optional<int> radius;
  std::uint64_t seed = pbm::sweep::default_seed;
  int jobs = 1;
  std::uint64_t max_space = 1'000'000;
  bool pretty = false;

  // analyze
  bool mds = false;
  bool ball_cardinality = false;
  bool distance = false;
  bool histogram = false;
  bool linear = false;
  bool poset_mds = false;

  // ideals
  std::optional<int> cardinality;
  std::optional<int> roots;
  bool full_count = false;

  // ball / dual
  bool list = false;

  // verify
  bool all = false;
  int sweep = 0;
  std::string data_dir = PBM_DATA_DIR;
};

struct Loaded {
  std::optional<pbm::SpaceConfig> config;
  std::optional<pbm::BlockCode> code;
};

pbm::EnumerationLimits limits(const Options& o) { return pbm::EnumerationLimits{o.max_space}; }

Loaded load(const Options& o, bool need_code) {
  Loaded out;
  if (!o.config.empty()) out.config = pbm::io::config_from_json(pbm::io::load_document(o.config));
  if (!o.code.empty()) {
    out.code = pbm::io::code_from_json(pbm::io::load_document(o.code), out.config, limits(o));
    if (!out.config) out.config = out.code->config();
  }
  if (!out.config) throw pbm::ParseError("--config or --code is required");
  if (need_code && !out.code) throw pbm::ParseError("--code is required");
  return out;
}

pbm::Ideal load_ideal(const Options& o, const pbm::SpaceConfig& cfg) {
  if (o.ideal.empty()) throw pbm::ParseError("--ideal is required");
  return pbm::io::ideal_from_json(pbm::io::load_document(o.ideal), cfg.pomset());
}

json singleton_json(const pbm::SingletonReport& s) {
  return json{{"mds", s.attained()}, {"r", s.r}, {"bound", s.bound}, {"max_sum", s.max_sum}};
}

json analyze(const Options& o) {
  const auto in = load(o, o.mds || o.distance || o.histogram || o.linear || o.poset_mds);
  const auto& cfg = *in.config;
  json out = json::object();
  if (o.mds) out.update(singleton_json(pbm::mds_report(*in.code)));
  if (o.poset_mds) {
    const auto s = pbm::poset_mds_report(*in.code);
    out["poset_mds"] = s.attained();
    out["poset_minimum_distance"] = s.minimum_distance;
  }
  if (o.distance) out["minimum_distance"] = pbm::minimum_distance(*in.code);
  if (o.histogram) out["weight_histogram"] = pbm::weight_histogram(*in.code);
  if (o.linear) out["linear"] = in.code->is_linear();
  if (o.ball_cardinality) {
    if (o.radius) {
      out["ball_cardinality"] = pbm::r_ball(cfg, pbm::zero_vector(cfg), *o.radius, limits(o)).size();
    } else {
      out["ball_cardinality"] = pbm::ball_cardinality(cfg, load_ideal(o, cfg));
    }
  }
  if (out.empty()) throw pbm::ParseError("analyze: no analysis requested");
  return out;
}

json ideals(const Options& o) {
  const auto cfg = load(o, false).config;
  pbm::IdealFilter filter{.cardinality = o.cardinality, .root_size = o.roots};
  json list = json::array();
  for (const auto& i : pbm::enumerate_ideals(cfg->pomset(), filter)) {
    if (o.full_count && !i.is_full_count()) continue;
    list.push_back(pbm::io::to_json(i));
  }
  return json{{"count", list.size()}, {"ideals", list}};
}

json ball(const Options& o) {
  const auto cfg = *load(o, false).config;
  const auto center = o.center.empty() ? pbm::zero_vector(cfg)
                                       : pbm::io::vector_from_json(pbm::io::load_document(o.center), cfg);
  std::vector<pbm::BlockVector> vectors;
  json out;
  if (o.radius) {
    vectors = pbm::r_ball(cfg, center, *o.radius, limits(o));
    out["radius"] = *o.radius;
    out["cardinality"] = vectors.size();
  } else {
    const auto ideal = load_ideal(o, cfg);
    out["ideal"] = pbm::io::to_json(ideal);
    out["cardinality"] = pbm::ball_cardinality(cfg, ideal);
    if (o.list) vectors = pbm::enumerate_ball(cfg, center, ideal, limits(o));
  }
  if (o.list) {
    json arr = json::array();
    for (const auto& v : vectors) arr.push_back(pbm::io::to_json(v));
    out["vectors"] = arr;
  }
  return out;
}

json mds(const Options& o) {
  const auto in = load(o, true);
  const auto s = pbm::mds_report(*in.code);
  json out = singleton_json(s);
  out["minimum_distance"] = s.minimum_distance;
  out["t"] = s.t;
  const auto ps = pbm::poset_mds_report(*in.code);
  out["poset"] = json{{"mds", ps.attained()}, {"minimum_distance", ps.minimum_distance}, {"max_sum", ps.max_sum},
                      {"bound", ps.bound}};
  if (in.config->pomset().is_chain()) {
    out["chain_singleton_holds"] = pbm::chain_singleton_check(pbm::ChainContext(*in.config), *in.code);
  }
  return out;
}

json perfect(const Options& o) {
  const auto in = load(o, true);
  const auto& code = *in.code;
  json out;
  if (!o.ideal.empty()) {
    const auto ideal = load_ideal(o, *in.config);
    const bool ip = pbm::is_I_perfect(code, ideal, limits(o));
    out["ideal"] = pbm::io::to_json(ideal);
    out["I_perfect"] = ip;
    if (ip) {
      const auto sys = pbm::systematic_function(code, ideal, limits(o));
      if (sys.conflict) {
        out["systematic"] = json{{"exists", false},
                                 {"information", pbm::io::to_json(sys.conflict->information)},
                                 {"images", {pbm::io::to_json(sys.conflict->first_image),
                                             pbm::io::to_json(sys.conflict->second_image)}}};
      } else {
        out["systematic"] = json{{"exists", true}, {"total", sys.map->total}, {"linear", sys.map->linear}};
      }
    }
    if (in.config->pomset().is_chain()) {
      out["r_perfect"] = pbm::chain_perfect_equivalence(pbm::ChainContext(*in.config), code, ideal, limits(o));
    }
  }
  if (o.radius) {
    const bool direct = pbm::is_r_error_correcting_direct(code, *o.radius, limits(o));
    const bool criterion = pbm::is_r_error_correcting_criterion(code, *o.radius);
    if (direct != criterion) throw pbm::InvariantViolation("error-correction tests disagree");
    out["radius"] = *o.radius;
    out["r_perfect"] = pbm::is_r_perfect(code, *o.radius, limits(o));
    out["r_error_correcting"] = direct;
  }
  if (out.empty()) throw pbm::ParseError("perfect: give --ideal or --radius");
  return out;
}

json dual(const Options& o) {
  const auto in = load(o, true);
  const auto d = pbm::dual_code(*in.code, limits(o));
  json out{{"size", d.size()}};
  if (o.list) {
    json arr = json::array();
    for (const auto& v : d.codewords()) arr.push_back(pbm::io::to_json(v));
    out["codewords"] = arr;
  }
  if (in.config->pomset().is_chain()) {
    const auto rep = pbm::duality_report(pbm::ChainContext(*in.config), *in.code, limits(o));
    out["code_mds"] = rep.code_mds;
    out["dual_mds"] = rep.dual_mds;
    if (!rep.agrees()) throw pbm::InvariantViolation("MDS status of the code and its dual differ");
  }
  return out;
}

json mismatches_json(const std::vector<pbm::WeightDistributionMismatch>& ms) {
  json arr = json::array();
  for (const auto& m : ms) {
    arr.push_back(json{{"i", m.weight},
                       {"closed_form", m.closed_form ? json(*m.closed_form) : json(nullptr)},
                       {"observed", m.observed}});
  }
  return arr;
}

json weight_distribution(const Options& o, bool& violated) {
  const auto in = load(o, true);
  const auto rep = pbm::weight_distribution_report(pbm::ChainContext(*in.config), *in.code);
  json a = json::object();
  for (std::size_t i = 0; i < rep.observed.size(); ++i) a[std::to_string(i)] = rep.observed[i];
  violated = !rep.closed_form_match();
  return json{{"A", a},
              {"closed_form_match", rep.closed_form_match()},
              {"mismatches", mismatches_json(rep.mismatches)},
              {"as_printed_match", rep.as_printed_match()},
              {"as_printed_mismatches", mismatches_json(rep.as_printed_mismatches)}};
}

std::vector<std::pair<std::string, pbm::BlockCode>> bundled_codes(const Options& o) {
  std::vector<std::pair<std::string, pbm::BlockCode>> out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.data_dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto doc = pbm::io::load_document(f.string());
    if (doc.contains("generators") || doc.contains("codewords")) {
      out.emplace_back(f.filename().string(), pbm::io::code_from_json(doc, std::nullopt, limits(o)));
    }
  }
  return out;
}

json verify(const Options& o, bool& violated) {
  std::vector<std::pair<std::string, pbm::BlockCode>> codes;
  if (o.all) {
    codes = bundled_codes(o);
  } else if (!o.code.empty()) {
    codes.emplace_back(o.code, *load(o, true).code);
  }
  if (o.sweep > 0) {
    int idx = 0;
    for (auto& inst : pbm::sweep::general_sweep(o.seed, o.sweep, {.max_space = std::min<std::uint64_t>(o.max_space, 100'000)},
                                                limits(o))) {
      codes.emplace_back("sweep-" + std::to_string(idx++) + "-" + inst.kind, std::move(inst.code));
    }
  }
  if (codes.empty()) throw pbm::ParseError("verify: give --all, --code or --sweep");
  pbm::verify::SuiteOptions opt{.max_space = o.max_space, .jobs = o.jobs};
  json instances = json::array();
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (const auto& [name, code] : codes) {
    const auto reports = pbm::verify::instance_suite(code, opt);
    json failed = json::array();
    for (const auto& r : reports) {
      if (!r.pass()) failed.push_back(json{{"claim", r.claim}, {"expected", r.expected}, {"computed", r.computed}});
    }
    checks += reports.size();
    failures += failed.size();
    instances.push_back(json{{"name", name}, {"checks", reports.size()}, {"failed", failed}});
    if (o.pretty) {
      std::cerr << (failed.empty() ? "pass " : "FAIL ") << name << " (" << reports.size() << " checks)\n";
    }
  }
  violated = failures > 0;
  return json{{"all_pass", failures == 0}, {"checks", checks}, {"failures", failures}, {"instances", instances}};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "config JSON file or inline document");
  sub->add_option("--code", o.code, "code JSON file or inline document");
  sub->add_option("--ideal", o.ideal, "ideal JSON file or inline document");
  sub->add_option("--radius", o.radius, "metric ball radius");
  sub->add_option("--seed", o.seed, "seed for randomized sweeps");
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--max-space", o.max_space, "largest vector set that may be enumerated");
  sub->add_flag("--pretty", o.pretty, "human-readable summary on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pomset block metric codes over Z_m"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "run selected analyses");
  add_common(analyze_cmd, o);
  analyze_cmd->add_flag("--mds", o.mds, "Singleton bound and MDS status");
  analyze_cmd->add_flag("--ball-cardinality", o.ball_cardinality, "size of the ball for --ideal or --radius");
  analyze_cmd->add_flag("--distance", o.distance, "minimum distance");
  analyze_cmd->add_flag("--histogram", o.histogram, "codeword weight histogram");
  analyze_cmd->add_flag("--linear", o.linear, "linearity of the code");
  analyze_cmd->add_flag("--poset-mds", o.poset_mds, "MDS status under the poset block metric");

  auto* ideals_cmd = app.add_subcommand("ideals", "enumerate ideals of the pomset");
  add_common(ideals_cmd, o);
  ideals_cmd->add_option("--cardinality", o.cardinality, "keep ideals of this cardinality");
  ideals_cmd->add_option("--roots", o.roots, "keep ideals with this many root elements");
  ideals_cmd->add_flag("--full-count", o.full_count, "keep full-count ideals only");

  auto* ball_cmd = app.add_subcommand("ball", "ideal ball or metric ball");
  add_common(ball_cmd, o);
  ball_cmd->add_option("--center", o.center, "center vector (default zero)");
  ball_cmd->add_flag("--list", o.list, "list the vectors");

  auto* mds_cmd = app.add_subcommand("mds", "Singleton bound report");
  add_common(mds_cmd, o);

  auto* perfect_cmd = app.add_subcommand("perfect", "I-perfect / r-perfect tests");
  add_common(perfect_cmd, o);

  auto* dual_cmd = app.add_subcommand("dual", "dual code");
  add_common(dual_cmd, o);
  dual_cmd->add_flag("--list", o.list, "list the codewords");

  auto* wd_cmd = app.add_subcommand("weight-distribution", "chain MDS weight distribution");
  add_common(wd_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "cross-check the library against the oracle");
  add_common(verify_cmd, o);
  verify_cmd->add_flag("--all", o.all, "every bundled instance");
  verify_cmd->add_option("--sweep", o.sweep, "number of random instances");
  verify_cmd->add_option("--data", o.data_dir, "directory of bundled instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    bool violated = false;
    json out;
    if (*analyze_cmd) out = analyze(o);
    else if (*ideals_cmd) out = ideals(o);
    else if (*ball_cmd) out = ball(o);
    else if (*mds_cmd) out = mds(o);
    else if (*perfect_cmd) out = perfect(o);
    else if (*dual_cmd) out = dual(o);
    else if (*wd_cmd) out = weight_distribution(o, violated);
    else if (*verify_cmd) out = verify(o, violated);
    std::cout << out.dump() << '\n';
    if (o.pretty) std::cerr << out.dump(2) << '\n';
    return violated ? kInvariant : kOk;
  } catch (const pbm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const pbm::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const pbm::CapExceeded& e) {
    std::cerr << "enumeration cap: " << e.what() << '\n';
    return kCap;
  } catch (const pbm::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  }
}
