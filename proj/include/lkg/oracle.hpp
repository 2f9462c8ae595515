// Truth-table ground truth and formula corpora for differential testing.
//
// Nothing here calls into the search engines or lkg::eval; the evaluator is a
// separate bit-parallel path that checks 64 assignments per machine word.

#ifndef LKG_ORACLE_HPP
#define LKG_ORACLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lkg/formula.hpp"

namespace lkg {

inline constexpr std::size_t kDefaultAtomLimit = 24;

class AtomLimitExceeded : public std::runtime_error {
 public:
  AtomLimitExceeded(std::size_t atoms, std::size_t limit)
      : std::runtime_error("truth table over " + std::to_string(atoms) + " atoms exceeds the limit of " +
                           std::to_string(limit)),
        atoms_(atoms),
        limit_(limit) {}
  std::size_t atoms() const noexcept { return atoms_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t atoms_;
  std::size_t limit_;
};

namespace detail {

class TruthTable {
 public:
  TruthTable(const Sequent& s, std::size_t atom_limit) {
    for (const auto& f : s) gather(f);
    std::size_t i = 0;
    for (auto& [name, index] : index_) index = i++;
    if (index_.size() > atom_limit) throw AtomLimitExceeded(index_.size(), atom_limit);
    for (const auto& f : s) {
      compile(f);
      if (!first_) program_.push_back({Op::Or, 0});
      first_ = false;
    }
    if (first_) program_.push_back({Op::False, 0});
  }

  std::size_t atom_count() const noexcept { return index_.size(); }

  // Index of the first falsifying row, atoms ordered by name with the first
  // atom as the most significant bit (false before true).
  std::optional<std::uint64_t> first_falsifier() const {
    const std::size_t k = index_.size();
    const std::uint64_t rows = std::uint64_t{1} << k;
    const std::uint64_t valid_mask = rows >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t base = 0; base < rows; base += 64) {
      std::uint64_t word = run(base, stack);
      std::uint64_t falsified = ~word & valid_mask;
      if (falsified) return base + static_cast<std::uint64_t>(__builtin_ctzll(falsified));
    }
    return std::nullopt;
  }

  Assignment row(std::uint64_t m) const {
    Assignment a;
    const std::size_t k = index_.size();
    for (const auto& [name, i] : index_) a[name] = (m >> (k - 1 - i)) & 1U;
    return a;
  }

 private:
  enum class Op : std::uint8_t { Var, NotVar, True, False, And, Or };
  struct Instr {
    Op op;
    std::size_t var;
  };

  void gather(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::NegAtom: index_.emplace(f.name(), 0); break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        gather(f.left());
        gather(f.right());
        break;
      default: break;
    }
  }

  void compile(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: program_.push_back({Op::Var, index_.at(f.name())}); break;
      case Formula::Kind::NegAtom: program_.push_back({Op::NotVar, index_.at(f.name())}); break;
      case Formula::Kind::Top: program_.push_back({Op::True, 0}); break;
      case Formula::Kind::Bottom: program_.push_back({Op::False, 0}); break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        compile(f.left());
        compile(f.right());
        program_.push_back({f.kind() == Formula::Kind::And ? Op::And : Op::Or, 0});
        break;
    }
  }

  // Truth values of atom `var` for rows base..base+63.
  std::uint64_t column(std::size_t var, std::uint64_t base) const {
    static constexpr std::array<std::uint64_t, 6> patterns{
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    const std::size_t bit = index_.size() - 1 - var;
    if (bit < 6) return patterns[bit];
    return ((base >> bit) & 1U) ? ~std::uint64_t{0} : 0;
  }

  std::uint64_t run(std::uint64_t base, std::vector<std::uint64_t>& stack) const {
    stack.clear();
    for (const auto& in : program_) {
      switch (in.op) {
        case Op::Var: stack.push_back(column(in.var, base)); break;
        case Op::NotVar: stack.push_back(~column(in.var, base)); break;
        case Op::True: stack.push_back(~std::uint64_t{0}); break;
        case Op::False: stack.push_back(0); break;
        case Op::And:
        case Op::Or: {
          std::uint64_t r = stack.back();
          stack.pop_back();
          stack.back() = in.op == Op::And ? (stack.back() & r) : (stack.back() | r);
          break;
        }
      }
    }
    return stack.back();
  }

  std::map<std::string, std::size_t> index_;
  std::vector<Instr> program_;
  bool first_ = true;
};

}  // namespace detail

// First falsifying assignment of the sequent's disjunction, enumerating rows in
// lexicographic order of atom names (false before true); nullopt if valid.
// Throws AtomLimitExceeded when the sequent mentions more than atom_limit atoms.
inline std::optional<Assignment> tt_countermodel(const Sequent& s, std::size_t atom_limit = kDefaultAtomLimit) {
  detail::TruthTable table(s, atom_limit);
  if (auto row = table.first_falsifier()) return table.row(*row);
  return std::nullopt;
}

inline bool tt_valid(const Sequent& s, std::size_t atom_limit = kDefaultAtomLimit) {
  return !tt_countermodel(s, atom_limit).has_value();
}

struct GenParams {
  std::vector<std::string> atom_pool{"p", "q", "r"};
  std::size_t max_connectives = 10;
  std::uint64_t seed = 42;
  // Relative frequencies of &, |, ~, ->.
  double weight_and = 1.0;
  double weight_or = 1.0;
  double weight_not = 1.0;
  double weight_implies = 1.0;
  // Chance that a leaf is T or F rather than an atom.
  double constant_probability = 0.1;
  // Use exactly max_connectives instead of a uniform size in [0, max_connectives].
  bool exact_size = false;

  void validate() const {
    for (double w : {weight_and, weight_or, weight_not, weight_implies})
      if (w < 0) throw std::invalid_argument("GenParams: negative connective weight");
    if (weight_and + weight_or + weight_not + weight_implies <= 0)
      throw std::invalid_argument("GenParams: all connective weights are zero");
    if (constant_probability < 0 || constant_probability > 1)
      throw std::invalid_argument("GenParams: constant_probability outside [0, 1]");
  }
};

// Deterministic stream of random surface formulas. The sequence depends only
// on the parameters, not on the platform's standard library distributions.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(GenParams params) : params_(std::move(params)), rng_(params_.seed) { params_.validate(); }

  SurfaceFormula next() {
    std::size_t size = params_.exact_size ? params_.max_connectives : below(params_.max_connectives + 1);
    return build(size);
  }

 private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  SurfaceFormula leaf() {
    if (params_.atom_pool.empty() || unit() < params_.constant_probability)
      return below(2) ? SurfaceFormula::top() : SurfaceFormula::bottom();
    return SurfaceFormula::atom(params_.atom_pool[below(params_.atom_pool.size())]);
  }

  // Exactly `budget` connectives.
  SurfaceFormula build(std::size_t budget) {
    if (budget == 0) return leaf();
    const double total = params_.weight_and + params_.weight_or + params_.weight_not + params_.weight_implies;
    double pick = unit() * total;
    if ((pick -= params_.weight_not) < 0) return SurfaceFormula::negation(build(budget - 1));
    std::size_t left = below(budget);
    SurfaceFormula l = build(left);
    SurfaceFormula r = build(budget - 1 - left);
    if ((pick -= params_.weight_and) < 0) return SurfaceFormula::conj(std::move(l), std::move(r));
    if ((pick -= params_.weight_or) < 0) return SurfaceFormula::disj(std::move(l), std::move(r));
    return SurfaceFormula::implies(std::move(l), std::move(r));
  }

  GenParams params_;
  std::mt19937_64 rng_;
};

inline SurfaceFormula gen_random_formula(const GenParams& params) { return FormulaGenerator(params).next(); }

// Every NNF formula over `atoms` with at most max_connectives And/Or nodes,
// each exactly once. Order: by connective count; And before Or; by left
// operand size, then left operand, then right operand. Leaves are
// a, ~a for each atom in order, then T, F.
inline std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms, std::size_t max_connectives) {
  std::vector<std::vector<Formula>> by_size(max_connectives + 1);
  for (const auto& a : atoms) {
    by_size[0].push_back(Formula::atom(a));
    by_size[0].push_back(Formula::neg_atom(a));
  }
  by_size[0].push_back(Formula::top());
  by_size[0].push_back(Formula::bottom());
  for (std::size_t c = 1; c <= max_connectives; ++c) {
    for (bool conj : {true, false}) {
      for (std::size_t lc = 0; lc < c; ++lc) {
        for (const auto& l : by_size[lc])
          for (const auto& r : by_size[c - 1 - lc])
            by_size[c].push_back(conj ? Formula::conj(l, r) : Formula::disj(l, r));
      }
    }
  }
  std::vector<Formula> out;
  for (auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

}  // namespace lkg

#endif  // LKG_ORACLE_HPP
