// Printing formulas and sequents in the parser's syntax with minimal parentheses.

#ifndef LKG_RENDER_HPP
#define LKG_RENDER_HPP

#include <string>

#include "lkg/formula.hpp"

namespace lkg {

namespace detail {

// Binding strength: larger binds tighter.
enum class Prec { Implies = 0, Or = 1, And = 2, Unary = 3 };

inline void render_into(const Formula& f, std::string& out);

inline void render_operand(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render_into(f, out);
  if (wrap) out += ')';
}

inline void render_into(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: out += f.name(); break;
    case K::NegAtom:
      out += '~';
      out += f.name();
      break;
    case K::Top: out += 'T'; break;
    case K::Bottom: out += 'F'; break;
    // Left-associative: only a right operand of the same connective needs parentheses.
    case K::And:
      render_operand(f.left(), f.left().kind() == K::Or, out);
      out += " & ";
      render_operand(f.right(), f.right().is_compound(), out);
      break;
    case K::Or:
      render_operand(f.left(), false, out);
      out += " | ";
      render_operand(f.right(), f.right().kind() == K::Or, out);
      break;
  }
}

inline Prec precedence(const SurfaceFormula& f) {
  using K = SurfaceFormula::Kind;
  switch (f.kind()) {
    case K::Implies: return Prec::Implies;
    case K::Or: return Prec::Or;
    case K::And: return Prec::And;
    default: return Prec::Unary;
  }
}

inline void render_into(const SurfaceFormula& f, std::string& out);

inline void render_operand(const SurfaceFormula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render_into(f, out);
  if (wrap) out += ')';
}

inline void render_into(const SurfaceFormula& f, std::string& out) {
  using K = SurfaceFormula::Kind;
  Prec p = precedence(f);
  switch (f.kind()) {
    case K::Atom: out += f.name(); break;
    case K::Top: out += 'T'; break;
    case K::Bottom: out += 'F'; break;
    case K::Not:
      out += '~';
      render_operand(f.left(), precedence(f.left()) < Prec::Unary, out);
      break;
    case K::And:
    case K::Or:
      render_operand(f.left(), precedence(f.left()) < p, out);
      out += f.kind() == K::And ? " & " : " | ";
      render_operand(f.right(), precedence(f.right()) <= p, out);
      break;
    case K::Implies:
      // Right-associative.
      render_operand(f.left(), precedence(f.left()) <= p, out);
      out += " -> ";
      render_operand(f.right(), precedence(f.right()) < p, out);
      break;
  }
}

}  // namespace detail

inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

inline std::string render(const SurfaceFormula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

inline std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    detail::render_into(s[i], out);
  }
  return out;
}

inline std::string render(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ' ';
    out += name + (value ? "=true" : "=false");
  }
  return out;
}

}  // namespace lkg

#endif  // LKG_RENDER_HPP
