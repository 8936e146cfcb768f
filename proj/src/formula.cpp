#include "ipc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ipc {

namespace {

bool valid_var_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

} // namespace

FormulaPtr Formula::var(const std::string& name) {
  if (!valid_var_name(name))
    throw std::invalid_argument("invalid variable name: '" + name + "'");
  auto f = std::shared_ptr<Formula>(new Formula());
  f->name_ = name;
  return f;
}

FormulaPtr Formula::implies(FormulaPtr antecedent, FormulaPtr consequent) {
  if (!antecedent || !consequent)
    throw std::invalid_argument("implies: null subformula");
  auto f = std::shared_ptr<Formula>(new Formula());
  f->antecedent_ = std::move(antecedent);
  f->consequent_ = std::move(consequent);
  return f;
}

const std::string& Formula::name() const {
  if (!is_var()) throw std::logic_error("name() on an implication node");
  return name_;
}

const FormulaPtr& Formula::antecedent() const {
  if (is_var()) throw std::logic_error("antecedent() on a variable node");
  return antecedent_;
}

const FormulaPtr& Formula::consequent() const {
  if (is_var()) throw std::logic_error("consequent() on a variable node");
  return consequent_;
}

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var() != b->is_var()) return false;
  if (a->is_var()) return a->name() == b->name();
  return struct_equal(a->antecedent(), b->antecedent()) &&
         struct_equal(a->consequent(), b->consequent());
}

std::size_t depth(const FormulaPtr& f) {
  if (f->is_var()) return 0;
  return 1 + std::max(depth(f->antecedent()), depth(f->consequent()));
}

namespace {
void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->is_var()) {
    out.insert(f->name());
  } else {
    collect_vars(f->antecedent(), out);
    collect_vars(f->consequent(), out);
  }
}
} // namespace

std::vector<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> names;
  collect_vars(f, names);
  return {names.begin(), names.end()};
}

FormulaPtr q_neg(const FormulaPtr& z, const FormulaPtr& q) {
  return Formula::implies(z, q);
}

FormulaPtr disj(const FormulaPtr& x, const FormulaPtr& y) {
  return Formula::implies(Formula::implies(x, y), y);
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

// Recursive-descent parser over the raw text. Positions are 1-based.
class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  FormulaPtr run() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_ + 1);
    FormulaPtr f = formula();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_ + 1);
    return f;
  }

private:
  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    skip_ws();
    if (try_arrow()) {
      FormulaPtr rhs = formula(); // right-associative
      return Formula::implies(lhs, rhs);
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = atom();
    skip_ws();
    while (!at_end() && text_[pos_] == '|') {
      ++pos_;
      FormulaPtr rhs = atom();
      lhs = disj(lhs, rhs); // expanded immediately, no dedicated node
      skip_ws();
    }
    return lhs;
  }

  FormulaPtr atom() {
    skip_ws();
    if (at_end()) throw ParseError("expected formula", pos_ + 1);
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_ + 1;
      ++pos_;
      FormulaPtr f = formula();
      skip_ws();
      if (at_end() || text_[pos_] != ')')
        throw ParseError("unbalanced '(' opened at offset " +
                             std::to_string(open),
                         pos_ + 1);
      ++pos_;
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_'))
        ++pos_;
      return Formula::var(text_.substr(start, pos_ - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_ + 1);
  }

  bool try_arrow() {
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    if (!at_end() && text_[pos_] == '-')
      throw ParseError("dangling '-'", pos_ + 1);
    return false;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '#') { // comment to end of line
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void format_into(const FormulaPtr& f, std::string& out) {
  if (f->is_var()) {
    out += f->name();
    return;
  }
  // Right-associative arrow: only the antecedent of an implication needs
  // parentheses, and only when it is itself an implication.
  const FormulaPtr& a = f->antecedent();
  if (a->is_implies()) {
    out += '(';
    format_into(a, out);
    out += ')';
  } else {
    format_into(a, out);
  }
  out += " -> ";
  format_into(f->consequent(), out);
}

} // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).run(); }

std::string format_formula(const FormulaPtr& f) {
  std::string out;
  format_into(f, out);
  return out;
}

} // namespace ipc
