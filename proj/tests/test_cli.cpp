#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sandgraph/digraph.hpp"
#include "sandgraph/generators.hpp"
#include "sandgraph/treecount.hpp"

using namespace sandgraph;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GenPipedIntoKappaTotal) {
  const Invocation gen = run({"gen", "debruijn", "2"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const Invocation kappa = run({"kappa", "--total"}, gen.out);
  EXPECT_EQ(kappa.code, 0) << kappa.err;
  EXPECT_EQ(kappa.out, "8\n");
}

TEST(Cli, KautzSandpileJson) {
  const Invocation r = run({"sandpile", "--json"}, run({"gen", "kautz", "2"}).out);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["group"]["invariant_factors"], nlohmann::json::array({"2", "6"}));
  EXPECT_EQ(j["order"], "12");
}

TEST(Cli, VerifyEnumeratorSeed7) {
  const Invocation r = run({"verify", "thm1", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, SerializationRoundTripIsLossless) {
  for (const auto& format : {"edges", "json"}) {
    for (const std::vector<std::string>& family :
         {std::vector<std::string>{"debruijn", "3"}, {"kautz", "2"}, {"fibonacci"}, {"bipartite", "2", "3"},
          {"multigraph", "2", "1"}, {"random", "--seed", "3", "--vertices", "5", "--edges", "9"}}) {
      std::vector<std::string> args{"gen", "--format", format};
      args.insert(args.end(), family.begin(), family.end());
      const Invocation gen = run(args);
      ASSERT_EQ(gen.code, 0) << gen.err;
      const Digraph g = parse_graph(gen.out);
      const Invocation kappa = run({"kappa"}, gen.out);
      std::ostringstream expected;
      Integer total = 0;
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        expected << g.vertex_id(v) << " " << to_decimal(kappa_rooted(g, v)) << "\n";
        total += kappa_rooted(g, v);
      }
      expected << "total " << to_decimal(total) << "\n";
      EXPECT_EQ(kappa.out, expected.str());
      const Invocation poly = run({"kappa", "--poly", "vertex"}, gen.out);
      EXPECT_EQ(poly.out, kappa_poly(g, Weighting::Vertex).to_string() + "\n");
    }
  }
  Rng rng(3);
  const Digraph direct = random_source_free(rng, 5, 9);
  EXPECT_EQ(parse_graph(run({"gen", "random", "--seed", "3", "--vertices", "5", "--edges", "9"}).out), direct);
}

TEST(Cli, LinegraphAndFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "sandgraph_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "db1.txt").string();
  ASSERT_EQ(run({"gen", "debruijn", "1", "--out", path}).code, 0);
  const Invocation line = run({"linegraph", path, "--iterate", "2"});
  ASSERT_EQ(line.code, 0) << line.err;
  EXPECT_EQ(parse_graph(line.out).vertex_count(), 8u);
  EXPECT_EQ(run({"kappa", "--root", "0", path}).out, "1\n");
  const Invocation base_edge = run({"sandpile", path, "--base-edge", "01"});
  EXPECT_EQ(base_edge.code, 0) << base_edge.err;
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  const Invocation flag = run({"kappa", "--nope"}, "");
  EXPECT_EQ(flag.code, 2);
  EXPECT_FALSE(flag.err.empty());
  EXPECT_EQ(run({"kappa", "/nonexistent/graph.txt"}).code, 2);
  EXPECT_EQ(run({"kappa", "--root", "zz"}, run({"gen", "debruijn", "1"}).out).code, 2);
  EXPECT_EQ(run({"kappa"}, "broken line with too many fields here\n").code, 2);

  const std::string with_source = "st s t\ntt t t\n";
  const Invocation hyp = run({"verify", "thm1"}, with_source);
  EXPECT_EQ(hyp.code, 1);
  EXPECT_NE(hyp.err.find("no sources"), std::string::npos);
  const Invocation rooted = run({"verify", "rooted", "--edge", "c0"}, run({"gen", "cycle", "3"}).out);
  EXPECT_EQ(rooted.code, 1);
  EXPECT_EQ(run({"verify", "thm2"}, run({"gen", "multigraph", "2", "1"}).out).code, 1);
  EXPECT_EQ(run({"sandpile"}, with_source).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifySubcommandsPass) {
  const std::string db1 = run({"gen", "debruijn", "1"}).out;
  const std::string k1 = run({"gen", "kautz", "1"}).out;
  for (const auto& sub : {"thm1", "rooted", "knuth", "unicycle", "delcon", "indeg-prop"}) {
    for (const std::string& g : {db1, k1}) {
      const Invocation r = run({"verify", sub, "--oracle"}, g);
      EXPECT_EQ(r.code, 0) << sub << "\n" << r.out << r.err;
    }
  }
  EXPECT_EQ(run({"verify", "rooted", "--all-edges"}, k1).code, 0);
  EXPECT_EQ(run({"verify", "thm2", "--all-edges"}, run({"gen", "debruijn", "2"}).out).code, 0);
  EXPECT_EQ(run({"verify", "thm2", "--seed", "4", "--k", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "thm5", "--family", "fibonacci", "--n", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "thm5", "--family", "ternary", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "thm5", "--seed", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "closed-forms", "--family", "all", "--max-n", "4"}).code, 0);
  const Invocation indeg = run({"verify", "indeg-prop", "--ell", "0", "--json"}, db1);
  ASSERT_EQ(indeg.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(indeg.out)["pass"].get<bool>());
}

TEST(Cli, ReportsAreDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "thm1", "--seed", "11", "--json"},
        {"verify", "thm2", "--seed", "5", "--json"},
        {"gen", "regular", "--seed", "9", "--vertices", "6", "--k", "2"},
        {"verify", "closed-forms", "--family", "kautz", "--max-n", "3", "--json"}}) {
    const Invocation a = run(args);
    const Invocation b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
