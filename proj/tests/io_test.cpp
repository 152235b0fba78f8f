#include <gtest/gtest.h>

#include "pbm/io.hpp"

using namespace pbm;
using nlohmann::json;

TEST(Io, MsetRoundTripOmitsZeros) {
  const Mset m(3, 5, {0, 2, 5});
  const json j = io::to_json(m);
  EXPECT_EQ(j, json::parse(R"({"n":3,"h":5,"counts":{"2":2,"3":5}})"));
  EXPECT_EQ(io::mset_from_json(j), m);
}

TEST(Io, PomsetOneBasedCoverRelations) {
  const auto [p, m] = io::pomset_from_json(json::parse(R"({"n":3,"m":5,"relations":[[1,2],[2,3]]})"));
  EXPECT_EQ(m, 5);
  EXPECT_EQ(p.height(), 2);
  EXPECT_TRUE(p.less(0, 2));
  // Only covers are written back.
  EXPECT_EQ(io::to_json(p, m)["relations"], json::parse("[[1,2],[2,3]]"));
}

TEST(Io, ConfigRoundTrip) {
  const auto cfg = io::config_from_json(json::parse(R"({"m":5,"pi":[2,4,1],"pomset":{"n":3,"m":5,"relations":[[1,2],[1,3]]}})"));
  EXPECT_EQ(cfg.length(), 7);
  EXPECT_EQ(io::config_from_json(io::to_json(cfg)), cfg);
}

TEST(Io, CodeFromGeneratorsAndCodewords) {
  const auto a = io::code_from_json(io::load_document(std::string(PBM_DATA_DIR) + "/z5_code.json"));
  EXPECT_EQ(a.size(), 5U);
  const auto b = io::code_from_json(io::to_json(a));
  EXPECT_EQ(std::vector<BlockVector>(a.codewords().begin(), a.codewords().end()),
            std::vector<BlockVector>(b.codewords().begin(), b.codewords().end()));
}

TEST(Io, CodeUsesSuppliedConfig) {
  const auto cfg = io::config_from_json(json::parse(R"({"m":3,"pi":[1,1]})"));
  const auto code = io::code_from_json(json::parse(R"({"codewords":[[0,0],[1,2]]})"), cfg);
  EXPECT_EQ(code.size(), 2U);
  EXPECT_FALSE(code.is_linear());
  const auto other = io::config_from_json(json::parse(R"({"m":5,"pi":[1,1]})"));
  EXPECT_THROW(io::code_from_json(json::parse(R"({"config":{"m":3,"pi":[1,1]},"codewords":[[0,0]]})"), other),
               ParseError);
  EXPECT_THROW(io::code_from_json(json::parse(R"({"codewords":[[0,0]]})")), ParseError);
}

TEST(Io, IdealAgainstPomset) {
  const auto [p, m] = io::pomset_from_json(json::parse(R"({"n":3,"m":5,"relations":[[1,2],[1,3]]})"));
  EXPECT_EQ(io::ideal_from_json(json::parse(R"({"counts":{"1":2,"2":1}})"), p).cardinality(), 3);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"counts":{"2":1}})"), p), ParseError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"counts":{"4":1}})"), p), ParseError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"counts":{"x":1}})"), p), ParseError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":2,"counts":{}})"), p), ParseError);
}

TEST(Io, MalformedDocuments) {
  EXPECT_THROW(io::load_document("{\"m\":"), ParseError);
  EXPECT_THROW(io::load_document("/nonexistent/file.json"), ParseError);
  EXPECT_THROW(io::config_from_json(json::parse(R"({"m":5})")), ParseError);
  EXPECT_THROW(io::config_from_json(json::parse(R"({"m":5,"pi":[1,0]})")), ParseError);
  EXPECT_THROW(io::pomset_from_json(json::parse(R"({"n":2,"m":5,"relations":[[1,2],[2,1]]})")), ParseError);
  EXPECT_THROW(io::pomset_from_json(json::parse(R"({"n":2,"relations":[]})")), ParseError);
  const auto cfg = io::config_from_json(json::parse(R"({"m":3,"pi":[1,1]})"));
  EXPECT_THROW(io::vector_from_json(json::parse("[0,3]"), cfg), ParseError);
  EXPECT_THROW(io::vector_from_json(json::parse("[0]"), cfg), ParseError);
}

TEST(Io, VectorRoundTrip) {
  const auto cfg = io::config_from_json(json::parse(R"({"m":3,"pi":[2]})"));
  const auto v = io::vector_from_json(json::parse("[2,1]"), cfg);
  EXPECT_EQ(io::to_json(v), json::parse("[2,1]"));
}
