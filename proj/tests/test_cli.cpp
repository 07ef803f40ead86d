#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "treeminor/cli.hpp"
#include "treeminor/constructions.hpp"
#include "treeminor/model.hpp"
#include "treeminor/text_format.hpp"

using namespace treeminor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "treeminor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {status, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("treeminor_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("check") {
  Scratch s;
  auto p3 = s.write("p3.tree", format_tree(path_tree(3)));
  auto p5 = s.write("p5.tree", format_tree(path_tree(5)));
  auto k13 = s.write("k13.tree", format_tree(star_tree(3)));
  auto p9 = s.write("p9.tree", format_tree(path_tree(9)));

  Run yes = cli({"check", "--rel", "minor", p3, p5});
  CHECK(yes.status == kExitYes);
  CHECK(yes.out == "yes\n");

  Run no = cli({"check", "--rel", "minor", k13, p9});
  CHECK(no.status == kExitNo);
  CHECK(no.out == "no\n");

  CHECK(cli({"check", "--rel", "embed", p3, k13}).status == kExitYes);
  CHECK(cli({"check", "--rel", "topo", k13, p5}).status == kExitNo);
}

TEST_CASE("check reads standard input") {
  Scratch s;
  auto p5 = s.write("p5.tree", format_tree(path_tree(5)));
  CHECK(cli({"check", "--rel", "minor", "-", p5}, "tree 2\n0 1\n").status == kExitYes);
}

TEST_CASE("rooted check") {
  Scratch s;
  auto end = s.write("end.rtree", format_tree(RootedTree(path_tree(3), 0)));
  auto mid = s.write("mid.rtree", format_tree(RootedTree(path_tree(3), 1)));
  auto plain = s.write("p3.tree", format_tree(path_tree(3)));
  CHECK(cli({"check", "--rel", "minor", "--rooted", end, end}).status == kExitYes);
  CHECK(cli({"check", "--rel", "minor", "--rooted", end, mid}).status == kExitNo);
  Run mixed = cli({"check", "--rel", "minor", "--rooted", end, plain});
  CHECK(mixed.status == kExitUsage);
  CHECK(mixed.err.find("mix") != std::string::npos);
  CHECK(cli({"check", "--rel", "minor", plain, end}).status == kExitUsage);
  CHECK(cli({"check", "--rel", "minor", "--rooted", plain, plain}).status == kExitUsage);
}

TEST_CASE("witness output parses back and checks") {
  Scratch s;
  std::vector<int> ones{1, 1, 1}, twos{2, 2, 2};
  Tree p = spider_tree(ones), h = spider_tree(twos);
  auto pf = s.write("p.tree", format_tree(p));
  auto hf = s.write("h.tree", format_tree(h));
  for (const char* rel : {"embed", "topo", "minor"}) {
    Run w = cli({"witness", "--rel", rel, pf, hf});
    REQUIRE(w.status == kExitYes);
    REQUIRE(w.out.rfind("yes\n", 0) == 0);
    Witness parsed = parse_witness_json(w.out.substr(4), p, h);
    CHECK(relation_name(parsed.relation) == rel);
    CHECK(check_witness(parsed.model, parsed.relation).ok());
  }
  Run no = cli({"witness", "--rel", "embed", hf, pf});
  CHECK(no.status == kExitNo);
  CHECK(no.out == "no\n");
}

TEST_CASE("canon, center, closure") {
  Scratch s;
  auto p4 = s.write("p4.tree", format_tree(path_tree(4)));
  auto p5 = s.write("p5.tree", format_tree(path_tree(5)));
  Run center = cli({"center", p4});
  CHECK(center.status == kExitYes);
  CHECK(center.out == "edge 1 2\n");
  CHECK(cli({"center", p5}).out == "vertex 2\n");
  CHECK(cli({"canon", p4}).out == "((())())\n");
  CHECK(cli({"canon", "-"}, "rtree 2 1\n0 1\n").out == "(())\n");
  CHECK(cli({"closure", p5, "0", "3"}).out == "0 1 2 3\n");
  CHECK(cli({"closure", p5, "9"}).status == kExitUsage);
}

TEST_CASE("selfmodels") {
  Scratch s;
  auto k13 = s.write("k13.tree", format_tree(star_tree(3)));
  Run r = cli({"selfmodels", k13});
  CHECK(r.status == kExitYes);
  CHECK(r.out.rfind("6\n", 0) == 0);
  auto p9 = s.write("p9.tree", format_tree(path_tree(9)));
  CHECK(cli({"selfmodels", p9}).status == kExitSizeGuard);
}

TEST_CASE("oracle") {
  Scratch s;
  auto p2 = s.write("p2.tree", format_tree(path_tree(2)));
  auto p4 = s.write("p4.tree", format_tree(path_tree(4)));
  auto k13 = s.write("k13.tree", format_tree(star_tree(3)));
  auto p9 = s.write("p9.tree", format_tree(path_tree(9)));
  CHECK(cli({"oracle", "--rel", "minor", p2, p4}).out == "yes\n");
  CHECK(cli({"oracle", "--rel", "minor", k13, p4}).status == kExitNo);
  CHECK(cli({"oracle", "--rel", "minor", p2, p9}).status == kExitSizeGuard);
}

TEST_CASE("gen") {
  CHECK(cli({"gen", "--family", "path", "--params", "3"}).out == "tree 3\n0 1\n1 2\n");
  CHECK(cli({"gen", "--family", "spider", "--params", "1,1,1"}).out ==
        format_tree(star_tree(3)));
  Run a = cli({"gen", "--family", "random-prufer", "--params", "8,42"});
  Run b = cli({"gen", "--family", "random-prufer", "--params", "8,42"});
  CHECK(a.status == kExitYes);
  CHECK(a.out == b.out);
  Run all = cli({"gen", "--family", "free", "--params", "6"});
  CHECK(parse_records(all.out).size() == 6);
  Run rooted = cli({"gen", "--family", "rooted", "--params", "4"});
  CHECK(parse_records(rooted.out).size() == 4);
  CHECK(cli({"gen", "--family", "spider", "--params", "0"}).status == kExitUsage);
  CHECK(cli({"gen", "--family", "blob", "--params", "3"}).status == kExitUsage);
  CHECK(cli({"gen", "--family", "free", "--params", "12"}).status == kExitSizeGuard);
}

TEST_CASE("compose") {
  Scratch s;
  auto p2 = s.write("p2.tree", format_tree(path_tree(2)));
  auto p3 = s.write("p3.tree", format_tree(path_tree(3)));
  auto p5 = s.write("p5.tree", format_tree(path_tree(5)));
  auto w1 = s.write("w1.json", cli({"witness", "--rel", "minor", p2, p3}).out.substr(4));
  auto w2 = s.write("w2.json", cli({"witness", "--rel", "minor", p3, p5}).out.substr(4));
  Run c = cli({"compose", p2, p3, p5, w1, w2});
  REQUIRE(c.status == kExitYes);
  Witness w = parse_witness_json(c.out, path_tree(2), path_tree(5));
  CHECK(check_model(w.model).ok());
  CHECK(cli({"compose", p2, p3, p5, w2, w1}).status == kExitUsage);
}

TEST_CASE("atlas") {
  Run ok = cli({"atlas", "--n-max", "5", "--oracle-n-max", "4", "--json", "--no-timings"});
  CHECK(ok.status == kExitYes);
  CHECK(nlohmann::json::parse(ok.out)["ok"] == true);
  CHECK(cli({"atlas", "--n-max", "4", "--rel", "minor,topo"}).status == kExitYes);
  CHECK(cli({"atlas", "--n-max", "4", "--rel", "subgraph"}).status == kExitUsage);
  CHECK(cli({"atlas", "--n-max", "11"}).status == kExitSizeGuard);
  CHECK(cli({"atlas", "--n-max", "4", "--oracle-n-max", "8"}).status == kExitSizeGuard);
}

TEST_CASE("size guard environment") {
  ::setenv(kAtlasCapEnv, "3", 1);
  CHECK(cli({"atlas", "--n-max", "4"}).status == kExitSizeGuard);
  ::setenv(kAtlasCapEnv, "zero", 1);
  CHECK(cli({"atlas", "--n-max", "2"}).status == kExitUsage);
  ::unsetenv(kAtlasCapEnv);
  CHECK(cli({"atlas", "--n-max", "2"}).status == kExitYes);
}

TEST_CASE("usage errors") {
  Run none = cli({});
  CHECK(none.status == kExitUsage);
  CHECK(none.err.rfind("treeminor: ", 0) == 0);
  CHECK(cli({"frobnicate"}).status == kExitUsage);
  CHECK(cli({"check", "--rel", "minor"}).status == kExitUsage);
  CHECK(cli({"check", "--rel", "near", "a", "b"}).status == kExitUsage);
  CHECK(cli({"check", "--rel", "minor", "/nonexistent/a", "/nonexistent/b"}).status ==
        kExitUsage);
  Run bad = cli({"canon", "-"}, "tree 3\n0 1\n");
  CHECK(bad.status == kExitUsage);
  CHECK(bad.err.find('\n') == bad.err.size() - 1);
  Run help = cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("check") != std::string::npos);
}
