// Differential harness: runs the three engines and the truth-table oracle on
// the same sequents and collects every disagreement.

#ifndef LKG_DIFF_HPP
#define LKG_DIFF_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lkg/calculus.hpp"
#include "lkg/formula.hpp"
#include "lkg/oracle.hpp"
#include "lkg/pv.hpp"
#include "lkg/render.hpp"

namespace lkg {

struct EngineAnswer {
  bool valid = false;
  Assignment countermodel;  // meaningful when !valid
};

using Engine = std::function<EngineAnswer(const Sequent&)>;

inline EngineAnswer answer_of(const Verdict& v) {
  if (v.provable()) return {true, {}};
  return {false, v.countermodel()};
}

struct DiffEngines {
  Engine pv;
  Engine parallel;
  Engine full;
  std::function<bool(const Sequent&)> oracle;

  static DiffEngines standard(std::size_t atom_limit = kDefaultAtomLimit) {
    return DiffEngines{
        [](const Sequent& s) { return answer_of(lkg::pv(s)); },
        [](const Sequent& s) { return answer_of(pv_parallel(s).verdict); },
        [](const Sequent& s) { return answer_of(prove_full(s)); },
        [atom_limit](const Sequent& s) { return tt_valid(s, atom_limit); },
    };
  }
};

struct Disagreement {
  Sequent sequent;
  std::string detail;

  // "<detail> :: <sequent>"; the part after "::" re-parses to the sequent.
  std::string line() const { return detail + " :: " + render(sequent); }
};

inline std::optional<Disagreement> compare_engines(const Sequent& s, const DiffEngines& engines) {
  const bool truth = engines.oracle(s);
  std::ostringstream detail;
  bool bad = false;
  auto judge = [&](const char* name, const Engine& engine) {
    EngineAnswer a = engine(s);
    if (a.valid != truth) {
      detail << (bad ? " " : "") << name << '=' << (a.valid ? "valid" : "invalid");
      bad = true;
    } else if (!a.valid && eval(s, a.countermodel)) {
      detail << (bad ? " " : "") << name << "-countermodel-satisfies";
      bad = true;
    }
  };
  judge("pv", engines.pv);
  judge("par", engines.parallel);
  judge("full", engines.full);
  if (!bad) return std::nullopt;
  detail << " oracle=" << (truth ? "valid" : "invalid");
  return Disagreement{s, detail.str()};
}

struct DiffReport {
  std::size_t checked = 0;
  std::vector<Disagreement> disagreements;
  bool ok() const noexcept { return disagreements.empty(); }
};

// Generates `count` formulas from `params` and compares engines on each
// singleton sequent.
inline DiffReport run_diff(const GenParams& params, std::size_t count, const DiffEngines& engines) {
  DiffReport report;
  FormulaGenerator gen(params);
  for (std::size_t i = 0; i < count; ++i) {
    Sequent s{to_nnf(gen.next())};
    ++report.checked;
    if (auto d = compare_engines(s, engines)) report.disagreements.push_back(std::move(*d));
  }
  return report;
}

}  // namespace lkg

#endif  // LKG_DIFF_HPP
