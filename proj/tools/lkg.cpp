// lkg: command-line front end.
//
//   lkg prove  [--engine full|pv|par] [--proof none|text|json] [--out PATH]
//              [--countermodel] [--stats] [--compat-top] (EXPR | --file PATH)
//   lkg check  PROOF.json
//   lkg oracle (EXPR | --file PATH)
//   lkg diff   [--seed N] [--count N] [--max-connectives N] [--atoms LIST]
//
// Exit status: 0 provable/valid/agreement, 1 unprovable/invalid/disagreement,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lkg/lkg.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedSequent {
  std::string origin;  // empty for inline input
  lkg::Sequent sequent;
};

std::vector<NamedSequent> load_sequents(const std::string& inline_text, const std::string& path) {
  std::vector<NamedSequent> out;
  if (path.empty()) {
    try {
      out.push_back({"", lkg::parse_sequent(inline_text)});
    } catch (const lkg::ParseError& e) {
      throw InputError(std::string("input:1:") + std::to_string(e.column()) + ": " + e.what());
    }
    return out;
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back({path + ":" + std::to_string(number), lkg::parse_sequent(line)});
    } catch (const lkg::ParseError& e) {
      throw InputError(path + ":" + std::to_string(number) + ":" + std::to_string(e.column()) + ": " + e.what());
    }
  }
  return out;
}

std::size_t atom_limit_from_env() {
  const char* raw = std::getenv("LKG_ATOM_LIMIT");
  if (!raw || !*raw) return lkg::kDefaultAtomLimit;
  try {
    std::size_t used = 0;
    unsigned long value = std::stoul(raw, &used);
    if (used != std::string(raw).size() || value > 62) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw InputError(std::string("LKG_ATOM_LIMIT must be an integer in [0, 62], got ") + raw);
  }
}

// Countermodel over every atom of the sequent; atoms the engine left out are false.
std::string full_countermodel(const lkg::Sequent& s, const lkg::Assignment& a) {
  lkg::Assignment shown;
  for (const auto& name : lkg::atoms_of(s)) shown[name] = false;
  for (const auto& [name, value] : a) shown[name] = value;
  return lkg::render(shown);
}

std::string render_stats(const lkg::BranchStats& st) {
  std::ostringstream out;
  out << "nodes_visited=" << st.nodes_visited << " max_batch_width=" << st.max_batch_width
      << " top_level_branches=" << st.top_level_branches;
  return out.str();
}

struct ProveConfig {
  std::string engine = "pv";
  std::string proof = "text";
  std::string out;
  bool countermodel = false;
  bool stats = false;
  bool compat_top = false;
  unsigned threads = 1;
  std::string expr;
  std::string file;
};

int cmd_prove(const ProveConfig& cfg) {
  auto sequents = load_sequents(cfg.expr, cfg.file);
  if (cfg.proof == "json" && !cfg.out.empty() && sequents.size() != 1)
    throw InputError("--proof json --out needs exactly one sequent");

  int status = kYes;
  for (const auto& [origin, s] : sequents) {
    if (!origin.empty()) std::cout << "# " << origin << ": " << lkg::render(s) << '\n';
    lkg::BranchStats stats;
    std::optional<lkg::Verdict> verdict;
    if (cfg.engine == "full") {
      verdict = lkg::prove_full(s, &stats);
    } else if (cfg.engine == "par") {
      try {
        auto r = lkg::pv_parallel(s, lkg::ParallelOptions{cfg.threads});
        verdict = std::move(r.verdict);
        stats = r.stats;
      } catch (const std::length_error& e) {
        throw InputError(e.what());
      }
    } else if (cfg.proof == "none") {
      auto d = lkg::pv_decide(s, &stats);
      if (d.valid) verdict = lkg::Verdict(lkg::Provable{});
      else verdict = lkg::Verdict(std::move(*d.failure));
    } else {
      verdict = lkg::pv(s, &stats);
    }

    if (verdict->provable()) {
      std::cout << "PROVABLE\n";
      if (cfg.proof != "none") {
        lkg::Proof proof = cfg.compat_top ? lkg::with_top_line(verdict->proof()) : verdict->proof();
        if (cfg.proof == "text") {
          std::cout << lkg::render_proof_text(proof);
        } else if (cfg.out.empty()) {
          std::cout << lkg::proof_to_json(proof).dump(2) << '\n';
        } else {
          std::ofstream out(cfg.out);
          if (!out) throw InputError("cannot write " + cfg.out);
          out << lkg::proof_to_json(proof).dump(2) << '\n';
        }
      }
    } else {
      status = kNo;
      std::cout << "UNPROVABLE\n";
      if (cfg.countermodel) std::cout << full_countermodel(s, verdict->countermodel()) << '\n';
    }
    if (cfg.stats) std::cout << render_stats(stats) << '\n';
  }
  return status;
}

int cmd_check(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  lkg::LoadedProof loaded;
  try {
    loaded = lkg::proof_from_json_text(buffer.str());
  } catch (const lkg::ProofFormatError& e) {
    throw InputError(path + ": " + e.what());
  }
  auto result = lkg::check_proof(loaded.proof, strict ? lkg::CheckMode::Strict : loaded.mode);
  if (result) {
    std::cout << "VALID PROOF (" << loaded.proof.lines.size() << " lines)\n";
    return kYes;
  }
  std::cout << "INVALID PROOF\n";
  for (const auto& d : result.diagnostics) std::cout << "line " << d.index << ": " << d.reason << '\n';
  return kNo;
}

int cmd_oracle(const std::string& expr, const std::string& file) {
  const std::size_t limit = atom_limit_from_env();
  auto sequents = load_sequents(expr, file);
  int status = kYes;
  for (const auto& [origin, s] : sequents) {
    if (!origin.empty()) std::cout << "# " << origin << ": " << lkg::render(s) << '\n';
    std::optional<lkg::Assignment> cm;
    try {
      cm = lkg::tt_countermodel(s, limit);
    } catch (const lkg::AtomLimitExceeded& e) {
      throw InputError(e.what());
    }
    if (!cm) {
      std::cout << "VALID\n";
    } else {
      status = kNo;
      std::cout << "INVALID";
      if (!cm->empty()) std::cout << ' ' << lkg::render(*cm);
      std::cout << '\n';
    }
  }
  return status;
}

std::vector<std::string> split_atoms(const std::string& list) {
  std::vector<std::string> atoms;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    std::string name = item.substr(b, e - b + 1);
    try {
      auto f = lkg::parse_formula(name);
      if (f.kind() != lkg::SurfaceFormula::Kind::Atom) throw InputError("not an atom: " + name);
    } catch (const lkg::ParseError&) {
      throw InputError("not an atom: " + name);
    }
    atoms.push_back(name);
  }
  return atoms;
}

int cmd_diff(std::uint64_t seed, std::size_t count, std::size_t max_connectives, const std::string& atom_list) {
  lkg::GenParams params;
  params.seed = seed;
  params.max_connectives = max_connectives;
  params.atom_pool = split_atoms(atom_list);
  auto report = lkg::run_diff(params, count, lkg::DiffEngines::standard(atom_limit_from_env()));
  for (const auto& d : report.disagreements) std::cout << "DISAGREE " << d.line() << '\n';
  std::cout << "checked " << report.checked << " sequents, " << report.disagreements.size() << " disagreements\n";
  return report.ok() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Propositional validity prover with proof objects, countermodels and a truth-table oracle"};
  app.require_subcommand(1);

  ProveConfig prove;
  auto* prove_cmd = app.add_subcommand("prove", "Decide a sequent and print a proof or countermodel");
  prove_cmd->add_option("--engine", prove.engine, "Search engine")->check(CLI::IsMember({"full", "pv", "par"}));
  prove_cmd->add_option("--proof", prove.proof, "Proof output")->check(CLI::IsMember({"none", "text", "json"}));
  prove_cmd->add_option("--out", prove.out, "Write the JSON proof to this file");
  prove_cmd->add_flag("--countermodel", prove.countermodel, "Print a falsifying assignment when unprovable");
  prove_cmd->add_flag("--stats", prove.stats, "Print search statistics");
  prove_cmd->add_flag("--compat-top", prove.compat_top, "Prepend a T line numbered 0 to proofs");
  prove_cmd->add_option("--threads", prove.threads, "Worker threads for --engine par")->check(CLI::Range(1U, 256U));
  auto* prove_expr = prove_cmd->add_option("sequent", prove.expr, "Comma-separated formulas");
  auto* prove_file = prove_cmd->add_option("--file", prove.file, "File with one sequent per line");
  prove_expr->excludes(prove_file);

  std::string check_path;
  bool check_strict = false;
  auto* check_cmd = app.add_subcommand("check", "Check a JSON proof");
  check_cmd->add_option("proof", check_path, "Proof file")->required();
  check_cmd->add_flag("--strict", check_strict, "Reject Succ+ lines even if the file declares extended mode");

  std::string oracle_expr, oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide validity by truth table");
  auto* oracle_e = oracle_cmd->add_option("sequent", oracle_expr, "Comma-separated formulas");
  auto* oracle_f = oracle_cmd->add_option("--file", oracle_file, "File with one sequent per line");
  oracle_e->excludes(oracle_f);

  std::uint64_t seed = 42;
  std::size_t count = 10000, max_connectives = 40;
  std::string atoms = "p,q,r,s,t,u";
  auto* diff_cmd = app.add_subcommand("diff", "Compare all engines against the oracle on random formulas");
  diff_cmd->add_option("--seed", seed, "Generator seed");
  diff_cmd->add_option("--count", count, "Number of formulas");
  diff_cmd->add_option("--max-connectives", max_connectives, "Connective bound per formula");
  diff_cmd->add_option("--atoms", atoms, "Comma-separated atom pool");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*prove_cmd) {
      if (prove_expr->count() + prove_file->count() != 1) throw InputError("give a sequent or --file");
      return cmd_prove(prove);
    }
    if (*check_cmd) return cmd_check(check_path, check_strict);
    if (*oracle_cmd) {
      if (oracle_e->count() + oracle_f->count() != 1) throw InputError("give a sequent or --file");
      return cmd_oracle(oracle_expr, oracle_file);
    }
    if (*diff_cmd) return cmd_diff(seed, count, max_connectives, atoms);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
