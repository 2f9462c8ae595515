// Text and JSON forms of proofs.
//
// JSON layout:
//   {"target": ["p(a) & p(b)", ...],
//    "mode": "strict" | "extended",            (optional, default strict)
//    "lines": [{"i": 1, "sequent": [...], "rule": "Succ" | "Succ+" | "And" | "Or",
//               "premises": [..]}, ...]}
// Formula strings use the parser's syntax and are re-parsed on load.

#ifndef LKG_PROOF_IO_HPP
#define LKG_PROOF_IO_HPP

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lkg/calculus.hpp"
#include "lkg/parser.hpp"
#include "lkg/proof.hpp"
#include "lkg/render.hpp"

namespace lkg {

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numbered lines with rule annotations, e.g. "5. p(a) & p(b), ~p(a) | ~p(b)    And from 3,4".
inline std::string render_proof_text(const Proof& proof) {
  std::ostringstream out;
  for (const auto& line : proof.lines) {
    out << line.index << ". " << render(line.sequent) << "    " << rule_name(line.rule);
    for (std::size_t k = 0; k < line.premises.size(); ++k) out << (k ? "," : " from ") << line.premises[k];
    out << '\n';
  }
  return out.str();
}

inline bool uses_extended_axioms(const Proof& proof) {
  for (const auto& line : proof.lines)
    if (line.rule == Rule::SuccExtended) return true;
  return false;
}

inline nlohmann::ordered_json sequent_to_json(const Sequent& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : s) arr.push_back(render(f));
  return arr;
}

inline nlohmann::ordered_json proof_to_json(const Proof& proof) {
  nlohmann::ordered_json j;
  j["target"] = sequent_to_json(proof.target);
  if (uses_extended_axioms(proof)) j["mode"] = "extended";
  auto lines = nlohmann::ordered_json::array();
  for (const auto& line : proof.lines) {
    nlohmann::ordered_json l;
    l["i"] = line.index;
    l["sequent"] = sequent_to_json(line.sequent);
    l["rule"] = std::string(rule_name(line.rule));
    l["premises"] = line.premises;
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  return j;
}

struct LoadedProof {
  Proof proof;
  CheckMode mode = CheckMode::Strict;
};

namespace detail {

inline Sequent sequent_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ProofFormatError(where + ": expected an array of formula strings");
  Sequent s;
  for (const auto& item : j) {
    if (!item.is_string()) throw ProofFormatError(where + ": formula must be a string");
    try {
      s.push_back(to_nnf(parse_formula(item.get<std::string>())));
    } catch (const ParseError& e) {
      throw ProofFormatError(where + ": " + item.get<std::string>() + ": " + e.what());
    }
  }
  return s;
}

}  // namespace detail

// Throws ProofFormatError on malformed JSON, missing fields or unparsable formulas.
inline LoadedProof proof_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ProofFormatError("proof must be a JSON object");
  if (!j.contains("target") || !j.contains("lines")) throw ProofFormatError("proof needs \"target\" and \"lines\"");
  LoadedProof loaded;
  if (j.contains("mode")) {
    const auto& mode = j["mode"];
    if (mode == "extended") loaded.mode = CheckMode::Extended;
    else if (mode != "strict") throw ProofFormatError("mode must be \"strict\" or \"extended\"");
  }
  loaded.proof.target = detail::sequent_from_json(j["target"], "target");
  if (!j["lines"].is_array()) throw ProofFormatError("\"lines\" must be an array");
  for (const auto& l : j["lines"]) {
    if (!l.is_object() || !l.contains("i") || !l.contains("sequent") || !l.contains("rule") || !l.contains("premises"))
      throw ProofFormatError("each line needs \"i\", \"sequent\", \"rule\" and \"premises\"");
    if (!l["i"].is_number_unsigned()) throw ProofFormatError("line label must be a nonnegative integer");
    ProofLine line;
    line.index = l["i"].get<std::size_t>();
    const std::string where = "line " + std::to_string(line.index);
    line.sequent = detail::sequent_from_json(l["sequent"], where);
    if (!l["rule"].is_string()) throw ProofFormatError(where + ": rule must be a string");
    auto rule = rule_from_name(l["rule"].get<std::string>());
    if (!rule) throw ProofFormatError(where + ": unknown rule " + l["rule"].dump());
    line.rule = *rule;
    if (!l["premises"].is_array()) throw ProofFormatError(where + ": premises must be an array");
    for (const auto& p : l["premises"]) {
      if (!p.is_number_unsigned()) throw ProofFormatError(where + ": premise must be a nonnegative integer");
      line.premises.push_back(p.get<std::size_t>());
    }
    loaded.proof.lines.push_back(std::move(line));
  }
  return loaded;
}

inline LoadedProof proof_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProofFormatError(std::string("malformed JSON: ") + e.what());
  }
  return proof_from_json(j);
}

}  // namespace lkg

#endif  // LKG_PROOF_IO_HPP
