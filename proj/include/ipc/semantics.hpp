#ifndef IPC_SEMANTICS_HPP
#define IPC_SEMANTICS_HPP

#include "ipc/formula.hpp"
#include "ipc/proof.hpp"

#include <map>
#include <string>
#include <vector>

namespace ipc {

/// Total assignment of truth values to variable names.
using Assignment = std::map<std::string, bool>;

/// Classical implication semantics: false only when the antecedent is true
/// and the consequent false. Throws std::invalid_argument on a variable not
/// bound by `a`.
bool evaluate(const FormulaPtr& f, const Assignment& a);

/// True iff f evaluates true under every assignment to its variables.
bool is_tautology(const FormulaPtr& f);

/// True iff every assignment over the combined variables that makes all
/// hypotheses true also makes the conclusion true. Completeness makes this
/// the decision procedure for deducibility.
bool entails(const std::vector<FormulaPtr>& hyps, const FormulaPtr& concl);

/// Mutual entailment; decides the syntactic-equivalence relation.
bool equiv(const FormulaPtr& x, const FormulaPtr& y);

/// Semantic cross-check of a kernel-accepted deduction: every step must be
/// entailed by the hypotheses. A rejection (reason step-not-entailed) on an
/// accepted proof indicates a kernel defect.
Verdict audit_soundness(const Deduction& d);

} // namespace ipc

#endif
