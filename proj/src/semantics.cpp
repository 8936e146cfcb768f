#include "ipc/semantics.hpp"

#include <cstdint>
#include <set>
#include <unordered_map>

namespace ipc {

namespace {

// Truth tables over k named variables, packed 64 rows to a word. Row r
// assigns variable i (in index order) the value bit i of r. Evaluation
// memoizes on node identity, so heavily shared proof formulas cost their
// DAG size rather than their tree size.
class BatchEvaluator {
public:
  explicit BatchEvaluator(const std::vector<std::string>& vars) {
    if (vars.size() > 20)
      throw std::invalid_argument("too many variables for exhaustive evaluation");
    k_ = vars.size();
    rows_ = std::size_t{1} << k_;
    words_ = (rows_ + 63) / 64;
    for (std::size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = i;
  }

  using Table = std::vector<std::uint64_t>;

  const Table& table(const FormulaPtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    Table t;
    if (f->is_var()) {
      t = var_table(var_index_.at(f->name()));
    } else {
      const Table& a = table(f->antecedent());
      const Table& b = table(f->consequent());
      t.resize(words_);
      for (std::size_t w = 0; w < words_; ++w) t[w] = ~a[w] | b[w];
      mask_tail(t);
    }
    return memo_.emplace(f.get(), std::move(t)).first->second;
  }

  bool all_true(const Table& t) const {
    for (std::size_t w = 0; w + 1 < words_; ++w)
      if (t[w] != ~std::uint64_t{0}) return false;
    return t[words_ - 1] == tail_mask();
  }

  Table full() const {
    Table t(words_, ~std::uint64_t{0});
    mask_tail(t);
    return t;
  }

  static void and_into(Table& acc, const Table& t) {
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= t[w];
  }

  // acc -> t, i.e. rows where acc holds but t fails are cleared.
  bool covers(const Table& hyp, const Table& t) const {
    for (std::size_t w = 0; w < words_; ++w)
      if ((hyp[w] & ~t[w]) != 0) return false;
    return true;
  }

private:
  Table var_table(std::size_t i) const {
    Table t(words_, 0);
    if (i < 6) {
      // Pattern repeats within a word.
      std::uint64_t pattern = 0;
      for (std::size_t r = 0; r < 64; ++r)
        if ((r >> i) & 1) pattern |= std::uint64_t{1} << r;
      for (auto& w : t) w = pattern;
    } else {
      // Whole words are all-0 or all-1 depending on the row block.
      for (std::size_t w = 0; w < words_; ++w)
        if ((w >> (i - 6)) & 1) t[w] = ~std::uint64_t{0};
    }
    mask_tail(t);
    return t;
  }

  std::uint64_t tail_mask() const {
    std::size_t used = rows_ - (words_ - 1) * 64;
    return used == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << used) - 1);
  }

  void mask_tail(Table& t) const { t[words_ - 1] &= tail_mask(); }

  std::size_t k_, rows_, words_;
  std::unordered_map<std::string, std::size_t> var_index_;
  std::unordered_map<const Formula*, Table> memo_;
};

std::vector<std::string> union_vars(const std::vector<FormulaPtr>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs)
    for (const auto& v : variables(f)) names.insert(v);
  return {names.begin(), names.end()};
}

} // namespace

bool evaluate(const FormulaPtr& f, const Assignment& a) {
  // Per-call memo keyed on node identity keeps shared subtrees linear.
  std::unordered_map<const Formula*, bool> memo;
  auto eval = [&](auto&& self, const FormulaPtr& g) -> bool {
    auto it = memo.find(g.get());
    if (it != memo.end()) return it->second;
    bool v;
    if (g->is_var()) {
      auto found = a.find(g->name());
      if (found == a.end())
        throw std::invalid_argument("unbound variable: " + g->name());
      v = found->second;
    } else {
      v = !self(self, g->antecedent()) || self(self, g->consequent());
    }
    memo.emplace(g.get(), v);
    return v;
  };
  return eval(eval, f);
}

bool is_tautology(const FormulaPtr& f) {
  BatchEvaluator ev(variables(f));
  return ev.all_true(ev.table(f));
}

bool entails(const std::vector<FormulaPtr>& hyps, const FormulaPtr& concl) {
  std::vector<FormulaPtr> all = hyps;
  all.push_back(concl);
  BatchEvaluator ev(union_vars(all));
  auto acc = ev.full();
  for (const auto& h : hyps) BatchEvaluator::and_into(acc, ev.table(h));
  return ev.covers(acc, ev.table(concl));
}

bool equiv(const FormulaPtr& x, const FormulaPtr& y) {
  BatchEvaluator ev(union_vars({x, y}));
  const auto& tx = ev.table(x);
  const auto& ty = ev.table(y);
  return tx == ty;
}

Verdict audit_soundness(const Deduction& d) {
  std::vector<FormulaPtr> all = d.hypotheses;
  for (const auto& s : d.steps) all.push_back(s.formula);
  BatchEvaluator ev(union_vars(all));
  auto acc = ev.full();
  for (const auto& h : d.hypotheses) BatchEvaluator::and_into(acc, ev.table(h));
  for (std::size_t k = 1; k <= d.steps.size(); ++k)
    if (!ev.covers(acc, ev.table(d.steps[k - 1].formula)))
      return Verdict::fail(k, "step-not-entailed");
  return Verdict::ok();
}

} // namespace ipc
