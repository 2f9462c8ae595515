// Surface classification, literalization and stability of sequents.
//
// Only the root of a sequent member is a surface occurrence: everything below
// it lies in the scope of a connective. Literalization replaces a surface
// conjunction by T and a surface disjunction by F; a sequent is stable when
// the disjunction of its literalized members is classically valid.

#ifndef LKG_LITERALIZATION_HPP
#define LKG_LITERALIZATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lkg/formula.hpp"

namespace lkg {

enum class SurfaceKind : std::uint8_t { AndForm, OrForm, LiteralAtom, LiteralNegAtom, TopConst, BottomConst };

inline SurfaceKind surface_kind(const Formula& f) noexcept {
  switch (f.kind()) {
    case Formula::Kind::And: return SurfaceKind::AndForm;
    case Formula::Kind::Or: return SurfaceKind::OrForm;
    case Formula::Kind::Atom: return SurfaceKind::LiteralAtom;
    case Formula::Kind::NegAtom: return SurfaceKind::LiteralNegAtom;
    case Formula::Kind::Top: return SurfaceKind::TopConst;
    case Formula::Kind::Bottom: break;
  }
  return SurfaceKind::BottomConst;
}

inline Formula literalize_formula(const Formula& f) {
  switch (surface_kind(f)) {
    case SurfaceKind::AndForm: return Formula::top();
    case SurfaceKind::OrForm: return Formula::bottom();
    default: return f;
  }
}

// Left-folded disjunction of the literalized members; F for the empty sequent.
inline Formula literalize_sequent(const Sequent& s) {
  if (s.empty()) return Formula::bottom();
  Formula acc = literalize_formula(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) acc = Formula::disj(std::move(acc), literalize_formula(s[i]));
  return acc;
}

// A sequent made only of literals and constants.
struct LiteralSequentView {
  bool has_top = false;
  bool has_bottom = false;
  // (atom name, positive?)
  std::vector<std::pair<std::string, bool>> literals;

  static LiteralSequentView of(const Sequent& s) {
    LiteralSequentView view;
    for (const auto& f : s) {
      switch (surface_kind(f)) {
        case SurfaceKind::TopConst: view.has_top = true; break;
        case SurfaceKind::BottomConst: view.has_bottom = true; break;
        case SurfaceKind::LiteralAtom: view.literals.emplace_back(f.name(), true); break;
        case SurfaceKind::LiteralNegAtom: view.literals.emplace_back(f.name(), false); break;
        default: throw std::invalid_argument("literal sequent expected, found a compound member");
      }
    }
    return view;
  }

  bool has_complementary_pair() const {
    std::unordered_set<std::string> positive, negative;
    for (const auto& [name, polarity] : literals) {
      if (polarity ? negative.count(name) : positive.count(name)) return true;
      (polarity ? positive : negative).insert(name);
    }
    return false;
  }

  bool valid() const { return has_top || has_complementary_pair(); }
};

// Validity of a disjunction of literals and constants.
// Throws std::invalid_argument if a compound member is present.
inline bool literal_valid(const Sequent& s) { return LiteralSequentView::of(s).valid(); }

// Definitional stability: validity of the literalization.
inline bool is_stable(const Sequent& s) {
  std::vector<Formula> literalized;
  literalized.reserve(s.size());
  for (const auto& f : s) literalized.push_back(literalize_formula(f));
  return literal_valid(Sequent(std::move(literalized)));
}

// T member or complementary literal pair, ignoring compound members.
inline bool has_axiom_shape(const Sequent& s) {
  std::unordered_set<std::string_view> positive, negative;
  for (const auto& f : s) {
    switch (f.kind()) {
      case Formula::Kind::Top: return true;
      case Formula::Kind::Atom:
        if (negative.count(f.name())) return true;
        positive.insert(f.name());
        break;
      case Formula::Kind::NegAtom:
        if (positive.count(f.name())) return true;
        negative.insert(f.name());
        break;
      default: break;
    }
  }
  return false;
}

// Stable iff some member is T or a conjunction, or two members form a
// complementary literal pair.
inline bool is_stable_fast(const Sequent& s) {
  for (const auto& f : s)
    if (f.kind() == Formula::Kind::And) return true;
  return has_axiom_shape(s);
}

}  // namespace lkg

#endif  // LKG_LITERALIZATION_HPP
