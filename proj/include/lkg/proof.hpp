// Proof objects, verdicts and derivation trees shared by the search engines.

#ifndef LKG_PROOF_HPP
#define LKG_PROOF_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lkg/formula.hpp"
#include "lkg/literalization.hpp"

namespace lkg {

// SuccExtended is the axiom used by pv-reconstructed proofs: a stable sequent
// that may still hold surface conjunctions. Strict checking rejects it.
enum class Rule : std::uint8_t { Succ, SuccExtended, And, Or };

inline std::string_view rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Succ: return "Succ";
    case Rule::SuccExtended: return "Succ+";
    case Rule::And: return "And";
    case Rule::Or: return "Or";
  }
  return "?";
}

inline std::optional<Rule> rule_from_name(std::string_view name) noexcept {
  if (name == "Succ") return Rule::Succ;
  if (name == "Succ+") return Rule::SuccExtended;
  if (name == "And") return Rule::And;
  if (name == "Or") return Rule::Or;
  return std::nullopt;
}

inline std::size_t rule_arity(Rule r) noexcept {
  switch (r) {
    case Rule::And: return 2;
    case Rule::Or: return 1;
    default: return 0;
  }
}

struct ProofLine {
  std::size_t index = 0;  // 1-based label; 0 is reserved for the optional leading T line
  Sequent sequent;
  Rule rule = Rule::Succ;
  std::vector<std::size_t> premises;  // labels of earlier lines
  std::optional<std::size_t> principal;  // position of the decomposed member, for And/Or
};

struct Proof {
  std::vector<ProofLine> lines;
  Sequent target;

  const ProofLine* find(std::size_t index) const noexcept {
    for (const auto& line : lines)
      if (line.index == index) return &line;
    return nullptr;
  }
};

// Returns a copy of the proof with a leading "T" line labelled 0.
inline Proof with_top_line(Proof proof) {
  if (!proof.lines.empty() && proof.lines.front().index == 0) return proof;
  ProofLine top;
  top.index = 0;
  top.sequent = Sequent{Formula::top()};
  proof.lines.insert(proof.lines.begin(), std::move(top));
  return proof;
}

struct Provable {
  Proof proof;
};

struct Unprovable {
  Assignment countermodel;
  Sequent failing;  // the literal sequent at which search failed
};

class Verdict {
 public:
  Verdict(Provable p) : result_(std::move(p)) {}
  Verdict(Unprovable u) : result_(std::move(u)) {}

  bool provable() const noexcept { return std::holds_alternative<Provable>(result_); }
  explicit operator bool() const noexcept { return provable(); }

  const Proof& proof() const { return std::get<Provable>(result_).proof; }
  const Unprovable& failure() const { return std::get<Unprovable>(result_); }
  const Assignment& countermodel() const { return failure().countermodel; }

 private:
  std::variant<Provable, Unprovable> result_;
};

// Counters reported by the search engines.
//   nodes_visited       sequents examined
//   max_batch_width     largest number of children produced by one step
//   top_level_branches  children produced by the step at the root
struct BranchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t max_batch_width = 0;
  std::uint64_t top_level_branches = 0;
};

// Derivation tree produced during search, before linearization.
struct Derivation {
  Sequent sequent;
  Rule rule = Rule::Succ;
  std::optional<std::size_t> principal;
  std::vector<std::unique_ptr<Derivation>> children;

  static std::unique_ptr<Derivation> axiom(Sequent s, Rule r) {
    auto d = std::make_unique<Derivation>();
    d->sequent = std::move(s);
    d->rule = r;
    return d;
  }

  static std::unique_ptr<Derivation> step(Sequent s, Rule r, std::size_t principal,
                                          std::vector<std::unique_ptr<Derivation>> children) {
    auto d = std::make_unique<Derivation>();
    d->sequent = std::move(s);
    d->rule = r;
    d->principal = principal;
    d->children = std::move(children);
    return d;
  }
};

namespace detail {

inline std::size_t emit_lines(const Derivation& d, std::vector<ProofLine>& out) {
  ProofLine line;
  for (const auto& child : d.children) line.premises.push_back(emit_lines(*child, out));
  line.index = out.size() + 1;
  line.sequent = d.sequent;
  line.rule = d.rule;
  line.principal = d.principal;
  out.push_back(std::move(line));
  return out.back().index;
}

}  // namespace detail

// Post-order: premises before conclusions, left branch before right.
inline Proof linearize(const Derivation& root, const Sequent& target) {
  Proof proof;
  proof.target = target;
  detail::emit_lines(root, proof.lines);
  return proof;
}

// Falsifying assignment of a failed literal sequent: each positive atom false,
// each negated atom true. Throws std::invalid_argument if the sequent has a
// compound member, a T member, or a complementary pair.
inline Assignment extract_countermodel(const Sequent& failing) {
  auto view = LiteralSequentView::of(failing);
  if (view.has_top) throw std::invalid_argument("extract_countermodel: sequent contains T");
  Assignment a;
  for (const auto& [name, positive] : view.literals) {
    auto [it, inserted] = a.emplace(name, !positive);
    if (!inserted && it->second != !positive)
      throw std::invalid_argument("extract_countermodel: complementary pair on " + name);
  }
  return a;
}

}  // namespace lkg

#endif  // LKG_PROOF_HPP
