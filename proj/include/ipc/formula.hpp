#ifndef IPC_FORMULA_HPP
#define IPC_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipc {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// A well-formed formula of the purely implicational calculus: either a
/// propositional variable or an implication between two subformulas.
/// Formulas are immutable values; subtrees are shared freely.
class Formula {
public:
  /// Makes a variable node. Names must match [a-z][a-zA-Z0-9_]*.
  static FormulaPtr var(const std::string& name);

  /// Makes an implication node antecedent -> consequent.
  static FormulaPtr implies(FormulaPtr antecedent, FormulaPtr consequent);

  bool is_var() const { return antecedent_ == nullptr; }
  bool is_implies() const { return antecedent_ != nullptr; }

  const std::string& name() const;        // variable nodes only
  const FormulaPtr& antecedent() const;   // implication nodes only
  const FormulaPtr& consequent() const;   // implication nodes only

private:
  Formula() = default;
  std::string name_;
  FormulaPtr antecedent_;
  FormulaPtr consequent_;
};

/// Structural equality. This is the identity used by the proof kernel; it is
/// deliberately finer than syntactic equivalence, which lives in semantics.
bool struct_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Node depth: variables have depth 0, implications 1 + max of children.
std::size_t depth(const FormulaPtr& f);

/// Variables occurring in f, sorted and deduplicated.
std::vector<std::string> variables(const FormulaPtr& f);

/// The q-negation of z: the formula z -> q.
FormulaPtr q_neg(const FormulaPtr& z, const FormulaPtr& q);

/// Derived disjunction: x | y abbreviates (x -> y) -> y.
FormulaPtr disj(const FormulaPtr& x, const FormulaPtr& y);

/// Raised on malformed input. `offset` is the 1-based character position of
/// the failure; end-of-input faults point one past the last character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Parses the concrete syntax:
///   formula := disj ("->" formula)?
///   disj    := atom ("|" atom)*
///   atom    := ident | "(" formula ")"
/// `->` is right-associative; `|` is left-associative, binds tighter than
/// `->`, and is expanded immediately (x | y becomes (x -> y) -> y; the tree
/// contains only variable and implication nodes). Whitespace is
/// insignificant; `#` starts a comment running to end of line.
FormulaPtr parse_formula(const std::string& text);

/// Emits the minimal-parenthesis form under the same grammar. Disjunctions
/// are never re-sugared. parse_formula(format_formula(f)) == f structurally.
std::string format_formula(const FormulaPtr& f);

} // namespace ipc

#endif
