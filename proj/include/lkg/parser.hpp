// Recursive-descent parser for the ASCII formula syntax.
//
//   formula := imp
//   imp     := disj ("->" imp)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "(" formula ")" | "T" | "F" | atom
//   atom    := ident ( "(" ident ("," ident)* ")" )?
//   ident   := [a-zA-Z_][a-zA-Z0-9_]*
//
// A sequent is a comma-separated list of formulas; the empty string is the
// empty sequent. Atoms with argument lists are opaque names: `p(a, b)` is the
// atom named "p(a,b)".

#ifndef LKG_PARSER_HPP
#define LKG_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lkg/formula.hpp"

namespace lkg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::string expected, std::string found, std::optional<std::size_t> item = {})
      : std::runtime_error(describe(column, expected, found, item)),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)),
        item_(item) {}

  // 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }
  // 1-based sequent member the error occurred in, when parsing a sequent.
  std::optional<std::size_t> item() const noexcept { return item_; }

 private:
  static std::string describe(std::size_t column, const std::string& expected, const std::string& found,
                              std::optional<std::size_t> item) {
    std::string msg = "column " + std::to_string(column);
    if (item) msg += " (formula " + std::to_string(*item) + ")";
    return msg + ": expected " + expected + ", found " + found;
  }

  std::size_t column_;
  std::string expected_;
  std::string found_;
  std::optional<std::size_t> item_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SurfaceFormula formula() { return implication(); }

  std::vector<SurfaceFormula> sequent() {
    std::vector<SurfaceFormula> items;
    if (at_end()) return items;
    for (;;) {
      std::size_t item = items.size() + 1;
      try {
        items.push_back(formula());
      } catch (const ParseError& e) {
        throw ParseError(e.column(), e.expected(), e.found(), item);
      }
      if (accept(',')) continue;
      if (at_end()) return items;
      throw ParseError(column(), "',' or end of input", found(), items.size());
    }
  }

  void expect_end() {
    if (!at_end()) throw error("end of input");
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

 private:
  SurfaceFormula implication() {
    SurfaceFormula lhs = disjunction();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return SurfaceFormula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  SurfaceFormula disjunction() {
    SurfaceFormula acc = conjunction();
    while (accept('|')) acc = SurfaceFormula::disj(std::move(acc), conjunction());
    return acc;
  }

  SurfaceFormula conjunction() {
    SurfaceFormula acc = unary();
    while (accept('&')) acc = SurfaceFormula::conj(std::move(acc), unary());
    return acc;
  }

  SurfaceFormula unary() {
    if (accept('~')) return SurfaceFormula::negation(unary());
    if (accept('(')) {
      SurfaceFormula inner = formula();
      if (!accept(')')) throw error("')'");
      return inner;
    }
    if (!ident_start()) throw error("formula");
    std::string name = ident();
    skip_space();
    bool has_args = pos_ < text_.size() && text_[pos_] == '(';
    if (!has_args && name == "T") return SurfaceFormula::top();
    if (!has_args && name == "F") return SurfaceFormula::bottom();
    if (has_args) {
      ++pos_;
      name += '(';
      for (;;) {
        skip_space();
        if (!ident_start()) throw error("argument name");
        name += ident();
        if (accept(',')) {
          name += ',';
          continue;
        }
        if (accept(')')) break;
        throw error("',' or ')'");
      }
      name += ')';
    }
    return SurfaceFormula::atom(std::move(name));
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool ident_start() {
    skip_space();
    return pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t column() const { return pos_ + 1; }

  std::string found() {
    skip_space();
    if (pos_ == text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  ParseError error(std::string expected) {
    std::string what = found();
    return ParseError(column(), std::move(expected), std::move(what));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SurfaceFormula parse_formula(std::string_view text) {
  detail::Parser p(text);
  SurfaceFormula f = p.formula();
  p.expect_end();
  return f;
}

// Parses a comma-separated list of formulas and normalizes each to NNF.
inline Sequent parse_sequent(std::string_view text) {
  detail::Parser p(text);
  Sequent s;
  for (const auto& f : p.sequent()) s.push_back(to_nnf(f));
  return s;
}

}  // namespace lkg

#endif  // LKG_PARSER_HPP
