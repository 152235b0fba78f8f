#pragma once

// Library-versus-oracle cross checks on a single (config, code) instance.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "pbm/block_space.hpp"
#include "pbm/codes.hpp"
#include "pbm/oracle.hpp"
#include "pbm/pomset.hpp"

namespace pbm::verify {

using oracle::OracleReport;

struct SuiteOptions {
  /// Skip checks whose oracle scan exceeds this many vectors of Z_m^N.
  std::uint64_t max_space = 1'000'000;
  /// Skip checks whose oracle work (space size times code size) exceeds this.
  std::uint64_t max_work = 50'000'000;
  int jobs = 1;
};

namespace detail {

template <typename T>
std::string join(const T& values) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ']';
  return out.str();
}

inline std::string words(std::vector<BlockVector> v) {
  std::sort(v.begin(), v.end());
  std::ostringstream out;
  out << v.size() << ':';
  for (const auto& w : v) out << join(w.entries()) << ';';
  return out.str();
}

inline std::string mset_text(std::span<const int> counts) { return join(counts); }

inline std::string instance_name(const BlockCode& code) {
  const auto& cfg = code.config();
  std::ostringstream out;
  out << "m=" << cfg.modulus() << " pi=" << join(cfg.block_lengths()) << " |C|=" << code.size();
  return out.str();
}

}  // namespace detail

/// All checks for one instance. Each report pairs the oracle value (expected)
/// with the library value (computed).
inline std::vector<OracleReport> instance_suite(const BlockCode& code, const SuiteOptions& opt = {}) {
  const auto& cfg = code.config();
  const auto& p = cfg.pomset();
  const std::string name = detail::instance_name(code);
  const auto words = code.codewords();
  const std::uint64_t size = code.size();
  const auto space = cfg.space_size();
  const bool scannable = space && *space <= opt.max_space;
  const bool coverable = scannable && *space * size <= opt.max_work;
  const bool pairwise = size * size <= opt.max_work;
  const EnumerationLimits limits{opt.max_space};
  const auto zero = zero_vector(cfg);

  using Task = std::function<OracleReport()>;
  std::vector<Task> tasks;
  auto add = [&](std::string claim, auto expected, auto computed) {
    tasks.emplace_back([claim = std::move(claim), name, expected, computed] {
      try {
        return OracleReport{claim, name, expected(), computed()};
      } catch (const Error& e) {
        return OracleReport{claim, name, "no error", e.what()};
      }
    });
  };

  add("ideals", [&] {
        std::vector<std::string> out;
        for (const auto& s : oracle::exhaustive_ideals(p)) out.push_back(detail::mset_text(s.counts()));
        std::sort(out.begin(), out.end());
        return detail::join(out);
      },
      [&] {
        std::vector<std::string> out;
        for (const auto& i : enumerate_ideals(p)) out.push_back(detail::mset_text(i.mset().counts()));
        std::sort(out.begin(), out.end());
        return detail::join(out);
      });

  add("weight-histogram", [&] { return detail::join(oracle::exhaustive_weight_histogram(cfg, words)); },
      [&] { return detail::join(weight_histogram(code)); });

  if (pairwise) {
    add("linearity", [&] { return std::to_string(oracle::exhaustive_is_linear(cfg, words)); },
        [&] { return std::to_string(code.is_linear()); });
    add("singleton", [&] {
          const auto s = oracle::exhaustive_singleton(cfg, words);
          return detail::join(std::vector<int>{s.d, s.r, s.max_sum, s.bound});
        },
        [&] {
          const auto s = mds_report(code);
          return detail::join(std::vector<int>{s.minimum_distance, s.r, s.max_sum, s.bound});
        });
    add("poset-singleton", [&] {
          const auto s = oracle::exhaustive_poset_singleton(cfg, words);
          return detail::join(std::vector<int>{s.d, s.max_sum, s.bound});
        },
        [&] {
          const auto s = poset_mds_report(code);
          return detail::join(std::vector<int>{s.minimum_distance, s.max_sum, s.bound});
        });
  }

  if (scannable) {
    for (const auto& ideal : enumerate_ideals(p)) {
      const std::string tag = detail::mset_text(ideal.mset().counts());
      add("ball-cardinality " + tag,
          [&cfg, &zero, ideal, &opt] { return std::to_string(oracle::exhaustive_ball(cfg, zero, ideal.mset(), opt.max_space).size()); },
          [&cfg, ideal] { return std::to_string(ball_cardinality(cfg, ideal)); });
      if (coverable) {
        add("I-perfect " + tag,
            [&cfg, &words, ideal, &opt] {
              return std::to_string(oracle::exhaustive_is_I_perfect(cfg, words, ideal.mset(), opt.max_space));
            },
            [&code, ideal, limits] { return std::to_string(is_I_perfect(code, ideal, limits)); });
      }
    }
    for (int r = 0; r <= cfg.block_count() * cfg.height(); ++r) {
      const std::string tag = std::to_string(r);
      add("metric-ball " + tag,
          [&cfg, &zero, r, &opt] { return detail::words(oracle::exhaustive_metric_ball(cfg, zero, r, opt.max_space)); },
          [&cfg, &zero, r, limits] { return detail::words(r_ball(cfg, zero, r, limits)); });
      if (!coverable) continue;
      add("r-perfect " + tag,
          [&cfg, &words, r, &opt] { return std::to_string(oracle::exhaustive_is_r_perfect(cfg, words, r, opt.max_space)); },
          [&code, r, limits] { return std::to_string(is_r_perfect(code, r, limits)); });
      add("r-error-correcting " + tag,
          [&cfg, &words, r, &opt] {
            return std::to_string(oracle::exhaustive_is_r_error_correcting(cfg, words, r, opt.max_space));
          },
          [&code, r, limits] {
            const bool direct = is_r_error_correcting_direct(code, r, limits);
            const bool criterion = is_r_error_correcting_criterion(code, r);
            return direct == criterion ? std::to_string(direct) : "direct/criterion disagree";
          });
    }
    if (code.is_linear() && coverable) {
      add("dual", [&] { return detail::words(oracle::exhaustive_dual(cfg, words, opt.max_space)); },
          [&] {
            const auto dual = dual_code(code, limits);
            return detail::words(std::vector<BlockVector>(dual.codewords().begin(), dual.codewords().end()));
          });
    }
  }

  std::vector<OracleReport> out(tasks.size());
  auto run_range = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < tasks.size(); i += step) out[i] = tasks[i]();
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
  std::vector<std::future<void>> workers;
  for (std::size_t w = 1; w < jobs; ++w) workers.push_back(std::async(std::launch::async, run_range, w, jobs));
  run_range(0, jobs);
  for (auto& f : workers) f.get();
  return out;
}

}  // namespace pbm::verify
