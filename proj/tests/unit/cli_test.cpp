#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordercert/serialize.hpp"
#include "ordercert_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace ordercert;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ordercert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("ordercert_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const char* name) const { return (dir / name).string(); }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, VerifyAllTrue) {
  const auto r = run({"verify", "--out", path("rel.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all relations hold"), std::string::npos);
  const Certificate c = parse_certificate(slurp(path("rel.json")));
  EXPECT_EQ(c.kind, CertificateKind::RelationReport);
  EXPECT_TRUE(c.timestamp.has_value());
  EXPECT_EQ(run({"check-cert", path("rel.json")}).code, 0);
}

TEST_F(Cli, PerturbedVerifyFailsF5) {
  const auto r = run({"verify", "--perturb", "d:=d b", "--out", path("rel.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FALSE F5 "), std::string::npos);
  EXPECT_EQ(r.out.find("FALSE F1 "), std::string::npos);
}

TEST_F(Cli, JsonOutputIsReproducible) {
  const auto a = run({"verify", "--format", "json", "--no-timestamp", "--out", path("a.json")});
  const auto b = run({"verify", "--format", "json", "--no-timestamp", "--out", path("b.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.json")).find("timestamp"), std::string::npos);
  EXPECT_TRUE(Json::parse(a.out).contains("entries"));
}

TEST_F(Cli, EpsilonReport) {
  const auto r = run({"epsilon"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("offsets at x = 0: (3, -1, -2, -3, -2, -1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("offset sum: -6"), std::string::npos);
  EXPECT_NE(r.out.find("breakpoints of gamma^delta: {0, 1/6, 1/2, 5/6}"), std::string::npos);
  EXPECT_EQ(run({"epsilon", "--perturb", "b:=b b"}).code, 1);
}

TEST_F(Cli, ProveThenCheck) {
  const auto p = run({"prove", "--no-timestamp", "--out", path("thm.json")});
  EXPECT_EQ(p.code, 0) << p.out << p.err;
  const auto c = run({"check-cert", path("thm.json")});
  EXPECT_EQ(c.code, 0) << c.out << c.err;
  EXPECT_NE(c.out.find("valid"), std::string::npos);
  EXPECT_EQ(run({"prove", "--script", "lemma", "--out", path("lem.json")}).code, 0);
  EXPECT_EQ(run({"check-cert", path("lem.json")}).code, 0);
}

TEST_F(Cli, MutatedCertificateNamesTheStep) {
  ASSERT_EQ(run({"prove", "--out", path("thm.json")}).code, 0);
  Json doc = Json::parse(slurp(path("thm.json")));
  Json& step = doc["payload"]["root"]["split"]["branches"][1]["steps"][0];
  const std::string id = step["id"];
  std::swap(step["conclusion"]["lhs"], step["conclusion"]["rhs"]);
  std::ofstream(path("bad.json")) << doc.dump();
  const auto r = run({"check-cert", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(id), std::string::npos) << r.out;
}

TEST_F(Cli, UnreadableOrTruncatedCertificate) {
  ASSERT_EQ(run({"prove", "--out", path("thm.json")}).code, 0);
  const std::string bytes = slurp(path("thm.json"));
  std::ofstream(path("trunc.json")) << bytes.substr(0, bytes.size() / 3);
  EXPECT_EQ(run({"check-cert", path("trunc.json")}).code, 3);
  EXPECT_EQ(run({"check-cert", path("missing.json")}).code, 3);
}

TEST_F(Cli, Eval) {
  auto r = run({"eval", "c^d", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,3\n");
  EXPECT_EQ(run({"eval", "", "1/2,1/2"}).out, "1/2,1/2\n");
  EXPECT_EQ(run({"eval", "γ^δ", "0,0"}).out, "0,3\n");
  EXPECT_EQ(run({"eval", "ch dh^-1", "1/3,1/3"}).out, run({"eval", "gamma_eta delta_eta^-1", "1/3,1/3"}).out);
  EXPECT_EQ(run({"eval", "q", "0,0"}).code, 3);
  EXPECT_EQ(run({"eval", "a^", "0,0"}).code, 3);
  EXPECT_EQ(run({"eval", "a", "1/0,0"}).code, 3);
  EXPECT_EQ(run({"eval", "a", "0"}).code, 3);
}

TEST_F(Cli, SearchToyOracle) {
  const auto r = run({"search", "--oracle", "test-z2", "--depth", "2", "--out", path("w.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(+) g g = 1\n(-) g^-1 g^-1 = 1\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"check-cert", path("w.json")}).code, 0);
  EXPECT_EQ(run({"search", "--oracle", "lattice", "--depth", "6", "--out", path("x.json")}).code, 2);
  EXPECT_FALSE(fs::exists(path("x.json")));
  EXPECT_EQ(run({"search", "--oracle", "nope"}).code, 3);
}

TEST_F(Cli, BadArgumentsAndSeed) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"verify", "--perturb", "q:=a", "--out", path("r.json")}).code, 3);
  ::setenv("ORDERCERT_SEED", "not-a-number", 1);
  EXPECT_EQ(run({"verify", "--out", path("r.json")}).code, 3);
  ::setenv("ORDERCERT_SEED", "0x1234", 1);
  EXPECT_EQ(run({"verify", "--out", path("r.json")}).code, 0);
  ::unsetenv("ORDERCERT_SEED");
}

TEST(CliHelpers, Perturbation) {
  const GeneratorSet g = cli::apply_perturbation("d:=d b", GeneratorSet::standard());
  const GeneratorSet s = GeneratorSet::standard();
  EXPECT_EQ(g.delta, compose(s.delta, s.beta));
  EXPECT_EQ(g.alpha, s.alpha);
  EXPECT_THROW(cli::apply_perturbation("d=d b", s), cli::UsageError);
  EXPECT_THROW(cli::apply_perturbation("d:=ch", s), cli::UsageError);
}

TEST(CliHelpers, PointsAndWords) {
  EXPECT_EQ(cli::parse_point("-1/2,3"), (Point{Rational(-1, 2), Rational(3)}));
  EXPECT_THROW(cli::parse_point("1,2,3"), cli::UsageError);
  EXPECT_EQ(cli::parse_h_word("a^6 a^-6"), PlaneWord());
}
