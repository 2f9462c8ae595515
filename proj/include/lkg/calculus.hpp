// One-sided invertible sequent calculus: rule application, stability-driven
// proof search and an independent proof checker.
//
// Search strategy at a sequent X:
//   X has a surface conjunction      -> split the leftmost one (And)
//   X is stable, no conjunction      -> axiom (Succ)
//   X unstable, has a disjunction    -> expand the leftmost one (Or)
//   otherwise                        -> fail; X is a falsifiable literal sequent

#ifndef LKG_CALCULUS_HPP
#define LKG_CALCULUS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lkg/formula.hpp"
#include "lkg/literalization.hpp"
#include "lkg/proof.hpp"
#include "lkg/render.hpp"

namespace lkg {

namespace detail {

inline const Formula& member_of_kind(const Sequent& s, std::size_t position, Formula::Kind kind, const char* op) {
  if (position >= s.size()) throw std::out_of_range(std::string(op) + ": position out of range");
  if (s[position].kind() != kind)
    throw std::invalid_argument(std::string(op) + ": member " + std::to_string(position) + " has the wrong connective");
  return s[position];
}

}  // namespace detail

// Gamma, F | G  =>  Gamma, F, G  (children take the member's place)
inline Sequent apply_or(const Sequent& s, std::size_t position) {
  const Formula& principal = detail::member_of_kind(s, position, Formula::Kind::Or, "apply_or");
  std::vector<Formula> items;
  items.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == position) {
      items.push_back(principal.left());
      items.push_back(principal.right());
    } else {
      items.push_back(s[i]);
    }
  }
  return Sequent(std::move(items));
}

// Gamma, F & G  =>  (Gamma, F) and (Gamma, G)
inline std::pair<Sequent, Sequent> apply_and(const Sequent& s, std::size_t position) {
  const Formula& principal = detail::member_of_kind(s, position, Formula::Kind::And, "apply_and");
  std::vector<Formula> left = s.items(), right = s.items();
  left[position] = principal.left();
  right[position] = principal.right();
  return {Sequent(std::move(left)), Sequent(std::move(right))};
}

inline std::optional<std::size_t> leftmost(const Sequent& s, Formula::Kind kind) noexcept {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].kind() == kind) return i;
  return std::nullopt;
}

inline bool succ_applicable(const Sequent& s) {
  return !leftmost(s, Formula::Kind::And) && is_stable(s);
}

namespace detail {

using SearchResult = std::variant<std::unique_ptr<Derivation>, Unprovable>;

inline SearchResult prove_full_node(const Sequent& s, BranchStats& stats, bool root) {
  ++stats.nodes_visited;
  auto note_branches = [&](std::uint64_t n) {
    if (n > stats.max_batch_width) stats.max_batch_width = n;
    if (root) stats.top_level_branches = n;
  };

  if (auto pos = leftmost(s, Formula::Kind::And)) {
    note_branches(2);
    auto [left, right] = apply_and(s, *pos);
    auto l = prove_full_node(left, stats, false);
    if (auto* u = std::get_if<Unprovable>(&l)) return std::move(*u);
    auto r = prove_full_node(right, stats, false);
    if (auto* u = std::get_if<Unprovable>(&r)) return std::move(*u);
    std::vector<std::unique_ptr<Derivation>> children;
    children.push_back(std::move(std::get<0>(l)));
    children.push_back(std::move(std::get<0>(r)));
    return Derivation::step(s, Rule::And, *pos, std::move(children));
  }
  if (is_stable_fast(s)) return Derivation::axiom(s, Rule::Succ);
  if (auto pos = leftmost(s, Formula::Kind::Or)) {
    note_branches(1);
    auto sub = prove_full_node(apply_or(s, *pos), stats, false);
    if (auto* u = std::get_if<Unprovable>(&sub)) return std::move(*u);
    std::vector<std::unique_ptr<Derivation>> children;
    children.push_back(std::move(std::get<0>(sub)));
    return Derivation::step(s, Rule::Or, *pos, std::move(children));
  }
  return Unprovable{extract_countermodel(s), s};
}

}  // namespace detail

// Full calculus search. Total: every step removes one connective.
inline Verdict prove_full(const Sequent& s, BranchStats* stats = nullptr) {
  BranchStats local;
  auto result = detail::prove_full_node(s, stats ? *stats : local, true);
  if (auto* u = std::get_if<Unprovable>(&result)) return std::move(*u);
  return Provable{linearize(*std::get<0>(result), s)};
}

// Strict accepts only Succ axioms; Extended also accepts Succ+ lines.
enum class CheckMode { Strict, Extended };

struct LineCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline LineCheck fail(std::string reason) { return LineCheck{false, std::move(reason)}; }

}  // namespace detail

// Checks the line at `position` (0-based position in proof.lines) against its
// premises. Premises must carry labels of lines appearing earlier in the proof.
inline LineCheck check_line(const Proof& proof, std::size_t position, CheckMode mode = CheckMode::Strict) {
  if (position >= proof.lines.size()) return detail::fail("no such line");
  const ProofLine& line = proof.lines[position];
  if (line.premises.size() != rule_arity(line.rule))
    return detail::fail(std::string(rule_name(line.rule)) + " needs " + std::to_string(rule_arity(line.rule)) +
                        " premise(s), found " + std::to_string(line.premises.size()));

  std::vector<const Sequent*> premises;
  for (std::size_t label : line.premises) {
    const ProofLine* found = nullptr;
    for (std::size_t j = 0; j < position; ++j)
      if (proof.lines[j].index == label) found = &proof.lines[j];
    if (!found || label >= line.index)
      return detail::fail("premise " + std::to_string(label) + " does not name an earlier line");
    premises.push_back(&found->sequent);
  }

  const Sequent& s = line.sequent;
  switch (line.rule) {
    case Rule::Succ:
      if (!succ_applicable(s)) return detail::fail("Succ needs a stable sequent without surface conjunctions");
      return {};
    case Rule::SuccExtended:
      if (mode != CheckMode::Extended) return detail::fail("Succ+ is not accepted in strict mode");
      if (!is_stable(s)) return detail::fail("Succ+ needs a stable sequent");
      return {};
    case Rule::Or:
      for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p].kind() == Formula::Kind::Or && apply_or(s, p) == *premises[0]) return {};
      return detail::fail("no disjunction in the sequent expands to premise " + std::to_string(line.premises[0]));
    case Rule::And:
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p].kind() != Formula::Kind::And) continue;
        auto [l, r] = apply_and(s, p);
        if ((l == *premises[0] && r == *premises[1]) || (l == *premises[1] && r == *premises[0])) return {};
      }
      return detail::fail("no conjunction in the sequent splits into premises " + std::to_string(line.premises[0]) +
                          "," + std::to_string(line.premises[1]));
  }
  return detail::fail("unknown rule");
}

struct LineDiagnostic {
  std::size_t index;  // line label
  std::string reason;
};

struct ProofCheck {
  bool ok = true;
  std::vector<LineDiagnostic> diagnostics;
  explicit operator bool() const noexcept { return ok; }
};

inline ProofCheck check_proof(const Proof& proof, CheckMode mode = CheckMode::Strict) {
  ProofCheck result;
  auto report = [&result](std::size_t index, std::string reason) {
    result.ok = false;
    result.diagnostics.push_back({index, std::move(reason)});
  };
  if (proof.lines.empty()) {
    report(0, "proof has no lines");
    return result;
  }
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    if (i > 0 && proof.lines[i].index <= proof.lines[i - 1].index)
      report(proof.lines[i].index, "line labels must increase");
    if (auto c = check_line(proof, i, mode); !c) report(proof.lines[i].index, c.reason);
  }
  if (!(proof.lines.back().sequent == proof.target))
    report(proof.lines.back().index, "last line is not the target sequent " + render(proof.target));
  return result;
}

}  // namespace lkg

#endif  // LKG_CALCULUS_HPP
