// Simplified decision procedure and its batched variant.
//
// pv(X):
//   X has T or a complementary pair  -> yes
//   X has a surface conjunction      -> pv of both branches of the leftmost one
//   X has a surface disjunction      -> pv of X with the leftmost one expanded
//   otherwise                        -> no
//
// The batched variant splits all n surface conjunctions at once (2^n child
// sequents, one conjunct chosen per member) and expands all surface
// disjunctions at once.

#ifndef LKG_PV_HPP
#define LKG_PV_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lkg/calculus.hpp"
#include "lkg/formula.hpp"
#include "lkg/literalization.hpp"
#include "lkg/proof.hpp"

namespace lkg {

namespace detail {

struct Cancelled {};

using PvResult = std::variant<std::unique_ptr<Derivation>, Unprovable, Cancelled>;

inline bool failed(const PvResult& r) noexcept { return !std::holds_alternative<std::unique_ptr<Derivation>>(r); }

inline void note_width(BranchStats& stats, std::uint64_t width, bool root) {
  stats.max_batch_width = std::max(stats.max_batch_width, width);
  if (root) stats.top_level_branches = width;
}

inline PvResult pv_node(const Sequent& s, BranchStats& stats, bool root) {
  ++stats.nodes_visited;
  auto and_pos = leftmost(s, Formula::Kind::And);
  if (has_axiom_shape(s)) return Derivation::axiom(s, and_pos ? Rule::SuccExtended : Rule::Succ);
  if (and_pos) {
    note_width(stats, 2, root);
    auto [left, right] = apply_and(s, *and_pos);
    auto l = pv_node(left, stats, false);
    if (failed(l)) return l;
    auto r = pv_node(right, stats, false);
    if (failed(r)) return r;
    std::vector<std::unique_ptr<Derivation>> children;
    children.push_back(std::move(std::get<0>(l)));
    children.push_back(std::move(std::get<0>(r)));
    return Derivation::step(s, Rule::And, *and_pos, std::move(children));
  }
  if (auto or_pos = leftmost(s, Formula::Kind::Or)) {
    note_width(stats, 1, root);
    auto sub = pv_node(apply_or(s, *or_pos), stats, false);
    if (failed(sub)) return sub;
    std::vector<std::unique_ptr<Derivation>> children;
    children.push_back(std::move(std::get<0>(sub)));
    return Derivation::step(s, Rule::Or, *or_pos, std::move(children));
  }
  return Unprovable{extract_countermodel(s), s};
}

}  // namespace detail

// Proofs carry Succ+ axioms wherever pv stops at a complementary pair while
// conjunctions remain; check them with CheckMode::Extended.
inline Verdict pv(const Sequent& s, BranchStats* stats = nullptr) {
  BranchStats local;
  auto result = detail::pv_node(s, stats ? *stats : local, true);
  if (auto* u = std::get_if<Unprovable>(&result)) return std::move(*u);
  return Provable{linearize(*std::get<0>(result), s)};
}

// Verdict without a proof object.
struct Decision {
  bool valid = false;
  std::optional<Unprovable> failure;  // set iff !valid
};

namespace detail {

// Same procedure and member order as pv_node, over an index-based copy of the
// sequent. The working sequent is edited in place and restored on backtrack;
// complementary pairs are tracked incrementally per atom.
class CompactPv {
 public:
  explicit CompactPv(const Sequent& s) {
    for (const auto& f : s) items_.push_back(compile(f));
    positive_.assign(atom_ids_.size(), 0);
    negative_.assign(atom_ids_.size(), 0);
    for (int id : items_) add(id);
  }

  Decision run(BranchStats& stats) {
    if (search(stats, true)) return Decision{true, std::nullopt};
    return Decision{false, std::move(failure_)};
  }

 private:
  struct Node {
    Formula::Kind kind;
    int atom;  // literals only
    int left;
    int right;
  };

  int compile(const Formula& f) {
    Node n{f.kind(), -1, -1, -1};
    if (f.is_literal()) {
      auto [it, inserted] = atom_ids_.try_emplace(f.name(), static_cast<int>(atom_ids_.size()));
      n.atom = it->second;
    } else if (f.is_compound()) {
      n.left = compile(f.left());
      n.right = compile(f.right());
    }
    nodes_.push_back(n);
    originals_.push_back(f);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void add(int id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Formula::Kind::Top: ++tops_; break;
      case Formula::Kind::Atom:
        if (positive_[n.atom]++ == 0 && negative_[n.atom] > 0) ++pairs_;
        break;
      case Formula::Kind::NegAtom:
        if (negative_[n.atom]++ == 0 && positive_[n.atom] > 0) ++pairs_;
        break;
      default: break;
    }
  }

  void remove(int id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Formula::Kind::Top: --tops_; break;
      case Formula::Kind::Atom:
        if (--positive_[n.atom] == 0 && negative_[n.atom] > 0) --pairs_;
        break;
      case Formula::Kind::NegAtom:
        if (--negative_[n.atom] == 0 && positive_[n.atom] > 0) --pairs_;
        break;
      default: break;
    }
  }

  std::optional<std::size_t> leftmost_of(Formula::Kind kind) const {
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (nodes_[items_[i]].kind == kind) return i;
    return std::nullopt;
  }

  // Replaces the member at `pos` by `replacement`, searches, then restores it.
  bool search_with(std::size_t pos, int replacement, BranchStats& stats) {
    const int old = items_[pos];
    items_[pos] = replacement;
    add(replacement);
    bool ok = search(stats, false);
    remove(replacement);
    items_[pos] = old;
    return ok;
  }

  bool search(BranchStats& stats, bool root) {
    ++stats.nodes_visited;
    if (tops_ > 0 || pairs_ > 0) return true;
    if (auto pos = leftmost_of(Formula::Kind::And)) {
      note_width(stats, 2, root);
      const Node n = nodes_[items_[*pos]];
      return search_with(*pos, n.left, stats) && search_with(*pos, n.right, stats);
    }
    if (auto pos = leftmost_of(Formula::Kind::Or)) {
      note_width(stats, 1, root);
      const Node n = nodes_[items_[*pos]];
      items_.insert(items_.begin() + static_cast<std::ptrdiff_t>(*pos) + 1, n.right);
      add(n.right);
      bool ok = search_with(*pos, n.left, stats);
      remove(n.right);
      items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(*pos) + 1);
      return ok;
    }
    Sequent failing;
    for (int id : items_) failing.push_back(originals_[id]);
    failure_ = Unprovable{extract_countermodel(failing), failing};
    return false;
  }

  std::vector<Node> nodes_;
  std::vector<Formula> originals_;
  std::unordered_map<std::string, int> atom_ids_;
  std::vector<int> items_;
  std::vector<std::uint32_t> positive_, negative_;
  std::size_t tops_ = 0;
  std::size_t pairs_ = 0;
  std::optional<Unprovable> failure_;
};

}  // namespace detail

inline Decision pv_decide(const Sequent& s, BranchStats* stats = nullptr) {
  BranchStats local;
  return detail::CompactPv(s).run(stats ? *stats : local);
}

struct ParallelOptions {
  // Worker threads for the outermost conjunction batch; 1 evaluates sequentially.
  unsigned threads = 1;
  // Batches over more surface conjunctions than this throw std::length_error.
  std::size_t max_batch_members = 24;
};

struct ParallelResult {
  Verdict verdict;
  BranchStats stats;
};

namespace detail {

struct ParallelContext {
  const ParallelOptions& options;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> max_width{0};
  std::atomic<std::uint64_t> top_level{0};

  void note_width(std::uint64_t width, bool root) {
    std::uint64_t seen = max_width.load();
    while (seen < width && !max_width.compare_exchange_weak(seen, width)) {
    }
    if (root) top_level = width;
  }
};

inline std::vector<std::size_t> positions_of(const Sequent& s, Formula::Kind kind) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].kind() == kind) out.push_back(i);
  return out;
}

// Child `mask` takes the right conjunct of member positions[k] when bit
// (n-1-k) of mask is set, the left conjunct otherwise.
inline Sequent and_batch_child(const Sequent& s, const std::vector<std::size_t>& positions, std::uint64_t mask) {
  std::vector<Formula> items = s.items();
  const std::size_t n = positions.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Formula& member = s[positions[k]];
    items[positions[k]] = ((mask >> (n - 1 - k)) & 1U) ? member.right() : member.left();
  }
  return Sequent(std::move(items));
}

// Rebuilds the batch as nested binary And steps whose leaves are the batch children.
inline std::unique_ptr<Derivation> nest_and_batch(const Sequent& s, const std::vector<std::size_t>& positions,
                                                  std::size_t level, std::uint64_t mask,
                                                  std::vector<PvResult>& leaves) {
  if (level == positions.size()) return std::move(std::get<0>(leaves[mask]));
  auto [l, r] = apply_and(s, positions[level]);
  std::vector<std::unique_ptr<Derivation>> children;
  children.push_back(nest_and_batch(l, positions, level + 1, mask << 1, leaves));
  children.push_back(nest_and_batch(r, positions, level + 1, (mask << 1) | 1U, leaves));
  return Derivation::step(s, Rule::And, positions[level], std::move(children));
}

inline PvResult par_node(const Sequent& s, ParallelContext& ctx, bool root, bool may_spawn,
                         const std::atomic<bool>* cancel);

inline PvResult evaluate_batch(const std::vector<Sequent>& children, ParallelContext& ctx, bool may_spawn,
                               const std::atomic<bool>* cancel, std::vector<PvResult>& results) {
  const std::size_t width = children.size();
  results.clear();
  results.reserve(width);
  for (std::size_t i = 0; i < width; ++i) results.emplace_back(Cancelled{});

  unsigned threads = std::min<std::size_t>(ctx.options.threads, width);
  if (!may_spawn || threads <= 1) {
    for (std::size_t i = 0; i < width; ++i) {
      results[i] = par_node(children[i], ctx, false, may_spawn, cancel);
      if (failed(results[i])) return std::move(results[i]);
    }
    return std::unique_ptr<Derivation>{};
  }

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < width; i = next++) {
          if (stop || (cancel && *cancel)) return;
          try {
            results[i] = par_node(children[i], ctx, false, false, &stop);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            stop = true;
            return;
          }
          if (std::holds_alternative<Unprovable>(results[i])) stop = true;
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  // Report the lowest-index failure that was reached.
  for (auto& r : results)
    if (std::holds_alternative<Unprovable>(r)) return std::move(r);
  if (cancel && *cancel) return Cancelled{};
  return std::unique_ptr<Derivation>{};
}

inline PvResult par_node(const Sequent& s, ParallelContext& ctx, bool root, bool may_spawn,
                         const std::atomic<bool>* cancel) {
  if (cancel && *cancel) return Cancelled{};
  ++ctx.nodes;
  if (has_axiom_shape(s)) return Derivation::axiom(s, leftmost(s, Formula::Kind::And) ? Rule::SuccExtended : Rule::Succ);

  auto and_positions = positions_of(s, Formula::Kind::And);
  if (!and_positions.empty()) {
    const std::size_t n = and_positions.size();
    if (n > ctx.options.max_batch_members)
      throw std::length_error("conjunction batch over " + std::to_string(n) + " members exceeds the limit of " +
                              std::to_string(ctx.options.max_batch_members));
    const std::uint64_t width = std::uint64_t{1} << n;
    ctx.note_width(width, root);
    std::vector<Sequent> children;
    children.reserve(width);
    for (std::uint64_t mask = 0; mask < width; ++mask) children.push_back(and_batch_child(s, and_positions, mask));
    std::vector<PvResult> results;
    auto outcome = evaluate_batch(children, ctx, may_spawn, cancel, results);
    if (failed(outcome)) return outcome;
    return nest_and_batch(s, and_positions, 0, 0, results);
  }

  auto or_positions = positions_of(s, Formula::Kind::Or);
  if (!or_positions.empty()) {
    ctx.note_width(1, root);
    std::vector<Formula> items;
    items.reserve(s.size() + or_positions.size());
    for (const auto& f : s) {
      if (f.kind() == Formula::Kind::Or) {
        items.push_back(f.left());
        items.push_back(f.right());
      } else {
        items.push_back(f);
      }
    }
    auto sub = par_node(Sequent(std::move(items)), ctx, false, may_spawn, cancel);
    if (failed(sub)) return sub;
    // Equivalent chain of single expansions, rightmost first so earlier positions stay put.
    const std::size_t n = or_positions.size();
    std::vector<Sequent> chain{s};
    for (std::size_t k = 1; k < n; ++k) chain.push_back(apply_or(chain.back(), or_positions[n - k]));
    auto d = std::move(std::get<0>(sub));
    for (std::size_t k = n; k >= 1; --k) {
      std::vector<std::unique_ptr<Derivation>> children;
      children.push_back(std::move(d));
      d = Derivation::step(chain[k - 1], Rule::Or, or_positions[n - k], std::move(children));
    }
    return d;
  }
  return Unprovable{extract_countermodel(s), s};
}

}  // namespace detail

inline ParallelResult pv_parallel(const Sequent& s, const ParallelOptions& options = {}) {
  detail::ParallelContext ctx{options};
  auto result = detail::par_node(s, ctx, true, true, nullptr);
  BranchStats stats{ctx.nodes.load(), ctx.max_width.load(), ctx.top_level.load()};
  if (auto* u = std::get_if<Unprovable>(&result)) return {std::move(*u), stats};
  return {Provable{linearize(*std::get<0>(result), s)}, stats};
}

}  // namespace lkg

#endif  // LKG_PV_HPP
