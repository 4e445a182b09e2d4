#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cache.hpp"
#include "family_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixture;
using namespace powerclose::io;

namespace {

ErrorCode codeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::filesystem::path scratchDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("powerclose-test-" + name + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(ParseFamily, Examples) {
  const auto doc = parseFamily("d=2; I1: x, y^2; I2: x^2, y");
  EXPECT_EQ(doc.family, exampleFamily());
  EXPECT_EQ(doc.names, (std::vector<std::string>{"I1", "I2"}));
  EXPECT_TRUE(doc.warnings.empty());

  const auto redundant = parseFamily("d=2; I1: x, y, x*y");
  EXPECT_EQ(redundant.family.ideals.at(0), maximal(2));
  ASSERT_EQ(redundant.warnings.size(), 1u);
  EXPECT_NE(redundant.warnings[0].find("redundant"), std::string::npos);

  EXPECT_EQ(codeOf([] { parseFamily("d=2; I1: x"); }), ErrorCode::kValidationError);
  EXPECT_NO_THROW(parseFamily("d=2; I1: x", false));
}

TEST(ParseFamily, SyntaxVariants) {
  const auto tuples = parseFamily("# comment\nd = 2\nfiltration: adic\nA: (1,0), (0,2)\nB: (2,0), (0,1)\n");
  EXPECT_EQ(tuples.family, exampleFamily(FiltrationKind::kAdic));
  EXPECT_EQ(tuples.names, (std::vector<std::string>{"A", "B"}));

  const auto named = parseFamily("vars: u, v\nI: u, v^2\n");
  EXPECT_EQ(named.family.ideals.at(0), idealI());
  EXPECT_TRUE(named.explicitVariables);

  // default names X1..Xd and the upper-case aliases
  EXPECT_EQ(parseFamily("d=2; I: X1, X2^2").family.ideals.at(0), idealI());
  EXPECT_EQ(parseFamily("d=2; I: X, Y^2").family.ideals.at(0), idealI());
  EXPECT_EQ(parseFamily("d=4; I: X1, X2, X3, X4^3").family.dim(), 4u);
}

TEST(ParseFamily, DiagnosticsCarryLocation) {
  try {
    parseFamily("d=2\nI1: x, y^2\nI2: x^2, q\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 10u);
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  EXPECT_EQ(codeOf([] { parseFamily("I1: x"); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([] { parseFamily("d=2; I1: x, y; I1: x, y"); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([] { parseFamily("d=2; I1: 1"); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([] { parseFamily("d=2; I1: (1,0,0), y"); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([] { parseFamily("d=2; I1: x^-1, y"); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([] { parseFamily("d=2; vars: a, b, c; I1: a, b"); }), ErrorCode::kParseError);
}

TEST(ParseFamily, RoundTrip) {
  oracle::Random rnd(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rnd.between(1, 5));
    FamilyDocument doc = documentFor(IdealFamily{{rnd.ideal(d, 5), rnd.ideal(d, 5)}, trial % 2 ? FiltrationKind::kAdic : FiltrationKind::kClosure});
    const auto text = serializeFamily(doc);
    const auto back = parseFamily(text);
    EXPECT_EQ(back.family, doc.family) << text;
    EXPECT_EQ(serializeFamily(back), text);
  }
  auto named = parseFamily("vars: a, b\nP: a^2, a*b, b^3\n");
  EXPECT_EQ(parseFamily(serializeFamily(named)).family, named.family);
}

TEST(Candidate, InlineAndFileForms) {
  const auto doc = parseFamily("d=2; I1: x, y^2; I2: x^2, y");
  const auto inlineForm = parseCandidate("{X; Y}", doc);
  EXPECT_EQ(inlineForm.type, MultiIndex({1, 1}));
  EXPECT_EQ(inlineForm.elements[0][0], mono({1, 0}));
  EXPECT_EQ(inlineForm.elements[1][0], mono({0, 1}));

  const auto fileForm = parseCandidate("I1: x + 2*y^2\nI2: y - 1/2*x^2\n", doc);
  EXPECT_EQ(parseCandidate(serializeCandidate(fileForm, doc), doc).elements, fileForm.elements);

  const auto twoInFirst = parseCandidate("{x, y^2;}", doc);
  EXPECT_EQ(twoInFirst.type, MultiIndex({2, 0}));

  EXPECT_EQ(codeOf([&] { parseCandidate("{y; y}", doc); }), ErrorCode::kNotContained);
  EXPECT_EQ(codeOf([&] { parseCandidate("{x; y; x}", doc); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([&] { parseCandidate("K: x", doc); }), ErrorCode::kParseError);
  EXPECT_EQ(codeOf([&] { parseCandidate("{x}", doc); }), ErrorCode::kInvalidArgument);
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto a = parseFamily("d=2; I1: x, y^2; I2: x^2, y");
  const auto b = parseFamily("d = 2\nI1: y^2, x\nI2: (0,1), (2,0)\n");
  EXPECT_EQ(inputDigest(a), inputDigest(b));
  EXPECT_NE(inputDigest(a), inputDigest(a, "bound=4"));
  EXPECT_NE(inputDigest(a), inputDigest(parseFamily("d=2; I1: x, y^3; I2: x^2, y")));
}

TEST(Cache, StoreLoadAndKeyCheck) {
  const auto dir = scratchDir("cache");
  ResultCache cache(dir);
  EXPECT_FALSE(cache.load("k1").has_value());
  cache.store("k1", "value one\nsecond line");
  EXPECT_EQ(cache.load("k1"), std::optional<std::string>("value one\nsecond line"));
  cache.store("k1", "replaced");
  EXPECT_EQ(cache.load("k1"), std::optional<std::string>("replaced"));
  EXPECT_FALSE(cache.load("k2").has_value());
  EXPECT_EQ(codeOf([&] { cache.store("bad\nkey", "v"); }), ErrorCode::kInternal);
  std::filesystem::remove_all(dir);
}

TEST(Cache, UnusableDirectory) {
  const auto dir = scratchDir("file");
  { std::ofstream(dir) << "x"; }
  EXPECT_EQ(codeOf([&] { ResultCache cache(dir); }), ErrorCode::kIoError);
  std::filesystem::remove(dir);
}
