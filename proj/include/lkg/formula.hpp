// Formula data model: surface syntax, negation normal form, sequents.

#ifndef LKG_FORMULA_HPP
#define LKG_FORMULA_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lkg {

// Truth assignment over atom names. Atoms absent from the map read as false.
using Assignment = std::map<std::string, bool>;

// Parsed input before normalization: negation and implication may appear anywhere.
// Immutable; copies share structure.
class SurfaceFormula {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bottom, Not, And, Or, Implies };

  static SurfaceFormula atom(std::string name) { return SurfaceFormula(Kind::Atom, std::move(name), {}); }
  static SurfaceFormula top() { return SurfaceFormula(Kind::Top, {}, {}); }
  static SurfaceFormula bottom() { return SurfaceFormula(Kind::Bottom, {}, {}); }
  static SurfaceFormula negation(SurfaceFormula f) { return SurfaceFormula(Kind::Not, {}, {std::move(f)}); }
  static SurfaceFormula conj(SurfaceFormula l, SurfaceFormula r) {
    return SurfaceFormula(Kind::And, {}, {std::move(l), std::move(r)});
  }
  static SurfaceFormula disj(SurfaceFormula l, SurfaceFormula r) {
    return SurfaceFormula(Kind::Or, {}, {std::move(l), std::move(r)});
  }
  static SurfaceFormula implies(SurfaceFormula l, SurfaceFormula r) {
    return SurfaceFormula(Kind::Implies, {}, {std::move(l), std::move(r)});
  }

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }
  // Operand of Not, or left operand of a binary node.
  const SurfaceFormula& left() const noexcept { return node_->children[0]; }
  const SurfaceFormula& right() const noexcept { return node_->children[1]; }
  // Not/And/Or/Implies nodes.
  std::size_t connectives() const noexcept { return node_->connectives; }

  friend bool operator==(const SurfaceFormula& a, const SurfaceFormula& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.connectives() != b.connectives()) return false;
    switch (a.kind()) {
      case Kind::Atom: return a.name() == b.name();
      case Kind::Top:
      case Kind::Bottom: return true;
      case Kind::Not: return a.left() == b.left();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<SurfaceFormula> children;
    std::size_t connectives;
  };

  SurfaceFormula(Kind kind, std::string name, std::vector<SurfaceFormula> children);

  std::shared_ptr<const Node> node_;
};

// Formula in negation normal form: negation only on atoms, binary And/Or.
// Immutable; copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, NegAtom, Top, Bottom, And, Or };

  static Formula atom(std::string name) { return Formula(Kind::Atom, std::move(name)); }
  static Formula neg_atom(std::string name) { return Formula(Kind::NegAtom, std::move(name)); }
  static Formula top() { return Formula(Kind::Top, {}); }
  static Formula bottom() { return Formula(Kind::Bottom, {}); }
  static Formula conj(Formula l, Formula r) { return Formula(Kind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return Formula(Kind::Or, std::move(l), std::move(r)); }

  Kind kind() const noexcept { return node_->kind; }
  // Atom name for Atom and NegAtom; empty otherwise.
  const std::string& name() const noexcept { return node_->name; }
  const Formula& left() const noexcept { return node_->children->first; }
  const Formula& right() const noexcept { return node_->children->second; }
  // Number of And/Or nodes in the tree.
  std::size_t connectives() const noexcept { return node_->connectives; }

  bool is_literal() const noexcept { return kind() == Kind::Atom || kind() == Kind::NegAtom; }
  bool is_constant() const noexcept { return kind() == Kind::Top || kind() == Kind::Bottom; }
  bool is_compound() const noexcept { return kind() == Kind::And || kind() == Kind::Or; }

  // Structural total order; used for multiset comparison of sequents.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_compound()) {
      if (auto c = a.connectives() <=> b.connectives(); c != 0) return c;
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    }
    return a.name().compare(b.name()) <=> 0;
  }
  friend bool operator==(const Formula& a, const Formula& b) noexcept { return (a <=> b) == 0; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<const std::pair<Formula, Formula>> children;
    std::size_t connectives;
  };

  Formula(Kind kind, std::string name)
      : node_(std::make_shared<const Node>(Node{kind, std::move(name), nullptr, 0})) {}
  Formula(Kind kind, Formula l, Formula r) {
    std::size_t count = 1 + l.connectives() + r.connectives();
    node_ = std::make_shared<const Node>(
        Node{kind, {}, std::make_unique<const std::pair<Formula, Formula>>(std::move(l), std::move(r)), count});
  }

  std::shared_ptr<const Node> node_;
};

inline SurfaceFormula::SurfaceFormula(Kind kind, std::string name, std::vector<SurfaceFormula> children) {
  std::size_t count = children.empty() ? 0 : 1;
  for (const auto& c : children) count += c.connectives();
  node_ = std::make_shared<const Node>(Node{kind, std::move(name), std::move(children), count});
}

// A multiset of formulas, read disjunctively. Items keep insertion order for
// display; equality ignores order.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<Formula> items) : items_(items) {}
  explicit Sequent(std::vector<Formula> items) : items_(std::move(items)) {}

  const std::vector<Formula>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  void push_back(Formula f) { items_.push_back(std::move(f)); }

  // Same multiset of formulas.
  friend bool operator==(const Sequent& a, const Sequent& b) {
    if (a.size() != b.size()) return false;
    if (std::equal(a.begin(), a.end(), b.begin())) return true;
    return a.sorted_items() == b.sorted_items();
  }

  std::vector<Formula> sorted_items() const {
    std::vector<Formula> sorted = items_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }

 private:
  std::vector<Formula> items_;
};

// Classical negation normal form. Implication is rewritten as ~a | b and
// negations are pushed to the atoms.
inline Formula to_nnf(const SurfaceFormula& f, bool negated = false) {
  using K = SurfaceFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return negated ? Formula::neg_atom(f.name()) : Formula::atom(f.name());
    case K::Top: return negated ? Formula::bottom() : Formula::top();
    case K::Bottom: return negated ? Formula::top() : Formula::bottom();
    case K::Not: return to_nnf(f.left(), !negated);
    case K::And:
      return negated ? Formula::disj(to_nnf(f.left(), true), to_nnf(f.right(), true))
                     : Formula::conj(to_nnf(f.left(), false), to_nnf(f.right(), false));
    case K::Or:
      return negated ? Formula::conj(to_nnf(f.left(), true), to_nnf(f.right(), true))
                     : Formula::disj(to_nnf(f.left(), false), to_nnf(f.right(), false));
    case K::Implies:
      return negated ? Formula::conj(to_nnf(f.left(), false), to_nnf(f.right(), true))
                     : Formula::disj(to_nnf(f.left(), true), to_nnf(f.right(), false));
  }
  throw std::logic_error("to_nnf: unknown formula kind");
}

// Embeds an NNF formula back into surface syntax (NegAtom becomes Not(Atom)).
inline SurfaceFormula to_surface(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return SurfaceFormula::atom(f.name());
    case K::NegAtom: return SurfaceFormula::negation(SurfaceFormula::atom(f.name()));
    case K::Top: return SurfaceFormula::top();
    case K::Bottom: return SurfaceFormula::bottom();
    case K::And: return SurfaceFormula::conj(to_surface(f.left()), to_surface(f.right()));
    case K::Or: return SurfaceFormula::disj(to_surface(f.left()), to_surface(f.right()));
  }
  throw std::logic_error("to_surface: unknown formula kind");
}

inline bool eval(const Formula& f, const Assignment& a) {
  using K = Formula::Kind;
  auto lookup = [&a](const std::string& name) {
    auto it = a.find(name);
    return it != a.end() && it->second;
  };
  switch (f.kind()) {
    case K::Atom: return lookup(f.name());
    case K::NegAtom: return !lookup(f.name());
    case K::Top: return true;
    case K::Bottom: return false;
    case K::And: return eval(f.left(), a) && eval(f.right(), a);
    case K::Or: return eval(f.left(), a) || eval(f.right(), a);
  }
  throw std::logic_error("eval: unknown formula kind");
}

// Disjunctive reading; the empty sequent is false.
inline bool eval(const Sequent& s, const Assignment& a) {
  return std::any_of(s.begin(), s.end(), [&a](const Formula& f) { return eval(f, a); });
}

inline std::size_t connective_count(const Formula& f) noexcept { return f.connectives(); }

inline std::size_t connective_count(const Sequent& s) noexcept {
  std::size_t total = 0;
  for (const auto& f : s) total += f.connectives();
  return total;
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_literal()) {
    out.insert(f.name());
  } else if (f.is_compound()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

inline std::set<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s) collect_atoms(f, out);
  return out;
}

}  // namespace lkg

#endif  // LKG_FORMULA_HPP
