#include <gtest/gtest.h>

#include <sstream>

#include "coxa_tools/cli.hpp"

namespace coxa::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CanonExample) {
  const auto r = call({"canon", "-n", "3", "s3 a s3 s1 a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "h(4,0) a h(3,1) a | [1,1]\nl=5 L=2\n");
}

TEST(Cli, CanonIdentity) {
  const auto r = call({"canon", "-n", "2", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\nl=0 L=0\n");
}

TEST(Cli, AcceptsCanonicalFormAndJson) {
  EXPECT_EQ(call({"len", "-n", "3", "h(4,0) a h(3,1) a | [1,1]"}).out, "l=5 L=2\n");
  EXPECT_EQ(call({"len", "-n", "3", R"({"pairs":[[4,0],[3,1]],"bricks":[[1,1]]})"}).out, "l=5 L=2\n");
}

TEST(Cli, JsonRoundTrip) {
  const Rank rank(3);
  for (const auto& e : bfs_enumerate(rank, 5)) {
    const Element c = canonicalize(e.word);
    EXPECT_EQ(element_from_json(nlohmann::json::parse(element_to_json(c).dump()), rank), c);
    const auto r = call({"canon", "-n", "3", "--json", format_word(e.word)});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(element_from_json(j, rank), c);
    EXPECT_EQ(j.at("length").get<std::size_t>(), c.length());
  }
}

TEST(Cli, Descents) {
  const auto r = call({"descents", "-n", "2", "s1 a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "left: {s1}\nright: {a}\n");
}

TEST(Cli, MulAndInv) {
  EXPECT_EQ(call({"mul", "-n", "2", "s1 a", "a s1"}).out, "1\n");
  EXPECT_EQ(call({"inv", "-n", "2", "s1 s2"}).out, "| [2,2] [1,1]\n");
}

TEST(Cli, Blocks) {
  EXPECT_EQ(call({"blocks", "-n", "2", "-m", "1", "--count-only"}).out,
            std::to_string(count_blocks(Rank(2), 1)) + "\n");
  const auto listing = call({"blocks", "-n", "2", "-m", "1"});
  EXPECT_NE(listing.out.find("h(3,0) a"), std::string::npos);
}

TEST(Cli, TowerCommands) {
  EXPECT_EQ(call({"embed", "--from", "2", "a"}).out, "h(3,0) a | [3,3]\n");
  EXPECT_EQ(call({"member", "-n", "3", "s3 a s3"}).out, "yes\n");
  EXPECT_EQ(call({"member", "-n", "3", "a"}).out, "no\n");
  EXPECT_EQ(call({"preimage", "-n", "3", "s3 a s3"}).out, "h(3,0) a |\n");
  EXPECT_EQ(call({"preimage", "-n", "3", "a"}).code, 1);
}

TEST(Cli, HeckeMul) {
  const auto r = call({"hecke-mul", "-n", "2", "s1", "s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q * [1]\n(-1 + q) * [| [1,1]]\n");
}

TEST(Cli, AppendixChecksAgainstEnumeration) {
  const auto r = call({"appendix", "-n", "2", "--max-core", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("right factors: all 6 elements"), std::string::npos);
  EXPECT_NE(r.out.find("[ok]"), std::string::npos);
  EXPECT_EQ(call({"appendix", "-n", "3", "--max-core", "1", "--json"}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"canon", "-n", "1", "a"}).code, 2);
  EXPECT_EQ(call({"canon", "a"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"appendix", "-n", "4"}).code, 2);
  const auto bad = call({"canon", "-n", "2", "s7"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("s7"), std::string::npos);
  EXPECT_EQ(call({"canon", "-n", "2", "{\"pairs\": 3}"}).code, 1);
}

TEST(Cli, SelfCheckPasses) { EXPECT_EQ(call({"selfcheck"}).code, 0); }

}  // namespace
}  // namespace coxa::cli
