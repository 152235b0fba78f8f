#pragma once

// JSON encodings. Labels are 1-based in every document.
//
//   mset    {"n": int, "h": int, "counts": {"<label>": int, ...}}   zero counts omitted
//   pomset  {"n": int, "m": int, "relations": [[a, b], ...]}         a below b
//   config  {"m": int, "pi": [k_1, ..., k_n], "pomset": <pomset>}
//   vector  [x_1, ..., x_N]
//   code    {"config": <config>, "generators": [<vector>, ...]}
//        or {"config": <config>, "codewords": [<vector>, ...]}
//   ideal   {"counts": {...}} with optional "n"/"h" (checked against the pomset)

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbm/block_space.hpp"
#include "pbm/codes.hpp"
#include "pbm/error.hpp"
#include "pbm/mset.hpp"
#include "pbm/pomset.hpp"

namespace pbm::io {

using nlohmann::json;

namespace detail {

// Runs a decoder, turning library and JSON errors into ParseError.
template <typename F>
auto decoding(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

inline int label_from_key(const std::string& key, int n) {
  std::size_t used = 0;
  int label = 0;
  try {
    label = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw ParseError("label key '" + key + "' is not an integer");
  }
  if (used != key.size() || label < 1 || label > n) {
    throw ParseError("label key '" + key + "' outside 1.." + std::to_string(n));
  }
  return label - 1;
}

inline json counts_to_json(std::span<const int> counts) {
  json out = json::object();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) out[std::to_string(i + 1)] = counts[i];
  }
  return out;
}

inline std::vector<int> counts_from_json(const json& j, int n) {
  if (!j.is_object()) throw ParseError("counts must be an object keyed by label");
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (const auto& [key, value] : j.items()) {
    counts[static_cast<std::size_t>(label_from_key(key, n))] = value.get<int>();
  }
  return counts;
}

}  // namespace detail

inline json to_json(const Mset& s) {
  return json{{"n", s.ground_size()}, {"h", s.height()}, {"counts", detail::counts_to_json(s.counts())}};
}

inline Mset mset_from_json(const json& j) {
  return detail::decoding("mset", [&] {
    const int n = j.at("n").get<int>();
    const int h = j.at("h").get<int>();
    return Mset(n, h, detail::counts_from_json(j.at("counts"), n));
  });
}

/// Pomset document; only cover relations are written (the order is their
/// transitive closure).
inline json to_json(const Pomset& p, int modulus) {
  json rel = json::array();
  for (auto [a, b] : p.relations()) {
    bool cover = true;
    for (int c = 0; c < p.size() && cover; ++c) cover = !(p.less(a, c) && p.less(c, b));
    if (cover) rel.push_back(json::array({a + 1, b + 1}));
  }
  return json{{"n", p.size()}, {"m", modulus}, {"relations", rel}};
}

/// Reads a pomset; `modulus` supplies m when the document omits it.
inline std::pair<Pomset, int> pomset_from_json(const json& j, std::optional<int> modulus = std::nullopt) {
  return detail::decoding("pomset", [&] {
    const int n = j.at("n").get<int>();
    int m = 0;
    if (j.contains("m")) {
      m = j.at("m").get<int>();
      if (modulus && *modulus != m) throw ParseError("pomset modulus differs from the config modulus");
    } else if (modulus) {
      m = *modulus;
    } else {
      throw ParseError("pomset needs a modulus \"m\"");
    }
    if (m < 2) throw ParseError("modulus must be at least 2");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : j.value("relations", json::array())) {
      if (!r.is_array() || r.size() != 2) throw ParseError("each relation must be a pair [a, b]");
      pairs.emplace_back(r[0].get<int>() - 1, r[1].get<int>() - 1);
    }
    return std::pair{Pomset::from_relations(n, m / 2, pairs), m};
  });
}

inline json to_json(const SpaceConfig& cfg) {
  return json{{"m", cfg.modulus()},
              {"pi", std::vector<int>(cfg.block_lengths().begin(), cfg.block_lengths().end())},
              {"pomset", to_json(cfg.pomset(), cfg.modulus())}};
}

inline SpaceConfig config_from_json(const json& j) {
  return detail::decoding("config", [&] {
    const int m = j.at("m").get<int>();
    auto pi = j.at("pi").get<std::vector<int>>();
    Pomset p = j.contains("pomset") ? pomset_from_json(j.at("pomset"), m).first
                                    : Pomset::antichain(static_cast<int>(pi.size()), m / 2);
    return SpaceConfig(m, std::move(pi), std::move(p));
  });
}

inline json to_json(const BlockVector& v) { return json(std::vector<int>(v.entries().begin(), v.entries().end())); }

inline BlockVector vector_from_json(const json& j, const SpaceConfig& cfg) {
  return detail::decoding("vector", [&] {
    BlockVector v(j.get<std::vector<int>>());
    validate_vector(cfg, v);
    return v;
  });
}

inline json to_json(const BlockCode& code) {
  json words = json::array();
  for (const auto& c : code.codewords()) words.push_back(to_json(c));
  json out{{"config", to_json(code.config())}, {"codewords", words}};
  if (code.generators()) {
    json gens = json::array();
    for (const auto& g : *code.generators()) gens.push_back(to_json(g));
    out["generators"] = gens;
  }
  return out;
}

/// Reads a code. When `config` is given the document may omit its own config;
/// if both are present they must agree.
inline BlockCode code_from_json(const json& j, const std::optional<SpaceConfig>& config = std::nullopt,
                                const EnumerationLimits& limits = {}) {
  SpaceConfig cfg;
  if (j.contains("config")) {
    cfg = config_from_json(j.at("config"));
    if (config && !(*config == cfg)) throw ParseError("code config differs from the supplied config");
  } else if (config) {
    cfg = *config;
  } else {
    throw ParseError("code document has no config and none was supplied");
  }
  return detail::decoding("code", [&] {
    auto read_rows = [&](const json& rows) {
      std::vector<BlockVector> out;
      for (const auto& r : rows) out.push_back(vector_from_json(r, cfg));
      return out;
    };
    if (j.contains("generators")) return BlockCode::from_generators(cfg, read_rows(j.at("generators")), limits);
    if (j.contains("codewords")) return BlockCode::from_codewords(cfg, read_rows(j.at("codewords")));
    throw ParseError("code document needs \"generators\" or \"codewords\"");
  });
}

inline json to_json(const Ideal& ideal) { return to_json(ideal.mset()); }

inline Ideal ideal_from_json(const json& j, const Pomset& p) {
  return detail::decoding("ideal", [&] {
    if (j.contains("n") && j.at("n").get<int>() != p.size()) throw ParseError("ideal ground size differs from pomset");
    if (j.contains("h") && j.at("h").get<int>() != p.height()) throw ParseError("ideal height differs from pomset");
    return Ideal::make(p, Mset(p.size(), p.height(), detail::counts_from_json(j.at("counts"), p.size())));
  });
}

/// Parses inline JSON text, or reads the named file when the text does not
/// start with '{' or '['.
inline json load_document(const std::string& text_or_path) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(text_or_path);
    if (!in) throw ParseError("cannot open '" + text_or_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in '" + text_or_path + "': " + e.what());
  }
}

}  // namespace pbm::io
