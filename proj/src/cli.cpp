#include "treeminor/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "treeminor/atlas.hpp"
#include "treeminor/canonical.hpp"
#include "treeminor/constructions.hpp"
#include "treeminor/decide.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/model.hpp"
#include "treeminor/operations.hpp"
#include "treeminor/structure.hpp"
#include "treeminor/text_format.hpp"

namespace treeminor {
namespace {

// Flag-level problems detected after CLI11 accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int env_cap(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    int value = std::stoi(raw, &used);
    if (used == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(name) + " must be a positive integer");
}

TreeRecord load(const std::string& path, std::istream& in) {
  if (path == "-") return parse_record(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return parse_record(file);
}

std::string slurp(const std::string& path, std::istream& in) {
  std::istream* src = &in;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw ParseError("cannot open " + path);
    src = &file;
  }
  return {std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>()};
}

Relation relation_flag(const std::string& name) {
  auto r = parse_relation(name);
  if (!r) throw UsageError("unknown relation '" + name + "' (expected embed, topo or minor)");
  return *r;
}

struct PairArgs {
  std::string rel;
  bool rooted = false;
  std::string pattern;
  std::string host;
};

void add_pair_options(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("--rel", args.rel, "embed, topo or minor")->required();
  cmd->add_flag("--rooted", args.rooted, "decide the rooted relation (both inputs rtree)");
  cmd->add_option("pattern", args.pattern, "pattern tree file")->required();
  cmd->add_option("host", args.host, "host tree file")->required();
}

std::optional<MinorModel> decide_pair(const PairArgs& args, std::istream& in, Relation r) {
  TreeRecord pattern = load(args.pattern, in);
  TreeRecord host = load(args.host, in);
  if (pattern.rooted() != host.rooted()) {
    throw UsageError("cannot mix rooted and unrooted trees");
  }
  if (args.rooted) {
    if (!pattern.rooted()) throw UsageError("--rooted needs rtree inputs");
    return decide(pattern.as_rooted(), host.as_rooted(), r);
  }
  return decide(pattern.tree, host.tree, r);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Decide and witness embeddings, topological minors and minors of finite trees"};
  app.require_subcommand(1, 1);

  PairArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "print yes/no for PATTERN <= HOST");
  add_pair_options(check_cmd, check_args);

  PairArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "like check, plus the witness JSON on yes");
  add_pair_options(witness_cmd, witness_args);

  PairArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "decide by breadth-first search over edit sequences");
  oracle_cmd->add_option("--rel", oracle_args.rel, "embed, topo or minor")->required();
  oracle_cmd->add_option("pattern", oracle_args.pattern)->required();
  oracle_cmd->add_option("host", oracle_args.host)->required();

  std::string single;
  auto* canon_cmd = app.add_subcommand("canon", "print the canonical code");
  canon_cmd->add_option("tree", single)->required();
  auto* center_cmd = app.add_subcommand("center", "print the center vertex or edge");
  center_cmd->add_option("tree", single)->required();
  auto* self_cmd = app.add_subcommand("selfmodels", "enumerate all models of a tree in itself");
  self_cmd->add_option("tree", single)->required();

  std::vector<Vertex> closure_set;
  auto* closure_cmd = app.add_subcommand("closure", "print the closure of a vertex set");
  closure_cmd->add_option("tree", single)->required();
  closure_cmd->add_option("vertices", closure_set, "vertex ids");

  std::string family;
  std::vector<int> params;
  auto* gen_cmd = app.add_subcommand("gen", "generate a tree, or enumerate with free/rooted");
  gen_cmd
      ->add_option("--family", family,
                   "path, star, spider, caterpillar, prufer; free or rooted enumerate all "
                   "trees of size n")
      ->required();
  gen_cmd->add_option("--params", params, "comma-separated integers")->delimiter(',');

  std::vector<std::string> compose_files;
  bool compose_rooted = false;
  auto* compose_cmd =
      app.add_subcommand("compose", "compose witnesses: T S1 S2 W(T in S1) W(S1 in S2)");
  compose_cmd->add_flag("--rooted", compose_rooted);
  compose_cmd->add_option("files", compose_files)->required()->expected(5);

  AtlasConfig atlas_config;
  std::vector<std::string> atlas_rels;
  bool atlas_json = false;
  bool atlas_no_timings = false;
  auto* atlas_cmd = app.add_subcommand("atlas", "exhaustive certification sweep");
  atlas_cmd->add_option("--n-max", atlas_config.n_max)->required();
  atlas_cmd->add_option("--oracle-n-max", atlas_config.oracle_n_max);
  atlas_cmd->add_option("--rooted-n-max", atlas_config.rooted_n_max);
  atlas_cmd->add_option("--rel", atlas_rels, "relations (default: all)")->delimiter(',');
  atlas_cmd->add_option("--workers", atlas_config.workers, "0 = hardware concurrency");
  atlas_cmd->add_flag("--json", atlas_json, "emit JSON instead of the table");
  atlas_cmd->add_flag("--no-timings", atlas_no_timings, "omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "treeminor: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check_cmd || *witness_cmd) {
      const PairArgs& args = *check_cmd ? check_args : witness_args;
      const Relation r = relation_flag(args.rel);
      auto m = decide_pair(args, in, r);
      if (!m) {
        out << "no\n";
        return kExitNo;
      }
      out << "yes\n";
      if (*witness_cmd) out << witness_json(*m, r) << "\n";
      return kExitYes;
    }
    if (*oracle_cmd) {
      const Relation r = relation_flag(oracle_args.rel);
      const int cap = env_cap(kOracleCapEnv, 8);
      TreeRecord pattern = load(oracle_args.pattern, in);
      TreeRecord host = load(oracle_args.host, in);
      bool yes = oracle_reachable(pattern.tree, host.tree, r, cap);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? kExitYes : kExitNo;
    }
    if (*canon_cmd) {
      TreeRecord t = load(single, in);
      out << (t.rooted() ? canonical_code(t.as_rooted()) : canonical_code(t.tree)) << "\n";
      return kExitYes;
    }
    if (*center_cmd) {
      out << center(load(single, in).tree).to_string() << "\n";
      return kExitYes;
    }
    if (*closure_cmd) {
      auto set = closure(load(single, in).tree, closure_set);
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
      out << "\n";
      return kExitYes;
    }
    if (*self_cmd) {
      const int cap = env_cap(kOracleCapEnv, 8);
      auto models = enumerate_self_models(load(single, in).tree, cap);
      out << models.size() << "\n";
      for (const auto& m : models) out << witness_json(m, Relation::Minor) << "\n";
      return kExitYes;
    }
    if (*gen_cmd) {
      if (family == "free" || family == "rooted") {
        if (params.size() != 1) throw BadParams(family + " takes one parameter: n");
        const int cap = env_cap(kAtlasCapEnv, 10);
        bool first = true;
        auto emit = [&](const std::string& text) {
          out << (first ? "" : "\n") << text;
          first = false;
        };
        if (family == "free") {
          for (const auto& t : enumerate_free_trees(params[0], cap)) emit(format_tree(t));
        } else {
          for (const auto& t : enumerate_rooted_trees(params[0], cap)) emit(format_tree(t));
        }
        return kExitYes;
      }
      auto f = parse_family(family);
      if (!f) throw UsageError("unknown family '" + family + "'");
      out << format_tree(gen(*f, params));
      return kExitYes;
    }
    if (*compose_cmd) {
      const auto& f = compose_files;
      TreeRecord t = load(f[0], in), s1 = load(f[1], in), s2 = load(f[2], in);
      std::string w1 = slurp(f[3], in), w2 = slurp(f[4], in);
      Witness first, second;
      if (compose_rooted) {
        if (!t.rooted() || !s1.rooted() || !s2.rooted()) {
          throw UsageError("--rooted needs rtree inputs");
        }
        first = parse_witness_json(w1, t.as_rooted(), s1.as_rooted());
        second = parse_witness_json(w2, s1.as_rooted(), s2.as_rooted());
      } else {
        first = parse_witness_json(w1, t.tree, s1.tree);
        second = parse_witness_json(w2, s1.tree, s2.tree);
      }
      for (const Witness* w : {&first, &second}) {
        if (auto c = check_model(w->model); !c) {
          throw UsageError("input witness invalid: " + std::string(clause_name(c.clause)) +
                           ": " + c.detail);
        }
      }
      out << witness_json(compose_models(first.model, second.model), Relation::Minor) << "\n";
      return kExitYes;
    }
    if (*atlas_cmd) {
      atlas_config.cap = env_cap(kAtlasCapEnv, 10);
      if (!atlas_rels.empty()) {
        atlas_config.relations.clear();
        for (const auto& name : atlas_rels) atlas_config.relations.push_back(relation_flag(name));
      }
      AtlasReport report = run_atlas(atlas_config);
      out << (atlas_json ? report.to_json(!atlas_no_timings)
                         : report.to_text(!atlas_no_timings));
      return report.ok() ? kExitYes : kExitNo;
    }
  } catch (const SizeLimitExceeded& e) {
    err << "treeminor: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    err << "treeminor: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace treeminor
