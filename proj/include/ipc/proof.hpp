#ifndef IPC_PROOF_HPP
#define IPC_PROOF_HPP

#include "ipc/formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipc {

enum class AxiomScheme { ax1, ax2, peirce };

/// How a proof step is licensed. Step and hypothesis indices are 1-based.
/// For modus ponens, `major` names the implication premise and `minor` its
/// antecedent; both must refer to strictly earlier steps.
struct Justification {
  enum class Kind { ax1, ax2, peirce, hypothesis, mp };
  Kind kind;
  std::size_t hyp = 0;   // hypothesis index, Kind::hypothesis only
  std::size_t major = 0; // implication step, Kind::mp only
  std::size_t minor = 0; // antecedent step, Kind::mp only

  static Justification axiom(AxiomScheme s);
  static Justification hypothesis(std::size_t k) { return {Kind::hypothesis, k, 0, 0}; }
  static Justification mp(std::size_t major, std::size_t minor) {
    return {Kind::mp, 0, major, minor};
  }
};

struct ProofStep {
  FormulaPtr formula;
  Justification just;
};

/// A Hilbert-style deduction: ordered hypotheses, then numbered steps each
/// carrying its justification. The conclusion is the final step's formula.
/// A deduction with no hypotheses is a proof of a theorem.
struct Deduction {
  std::vector<FormulaPtr> hypotheses;
  std::vector<ProofStep> steps;

  const FormulaPtr& conclusion() const { return steps.back().formula; }
};

/// Outcome of checking; when rejected, `step` is the first failing step and
/// `reason` is one of: not-an-instance, bad-hyp-index, mp-mismatch,
/// forward-reference, empty-proof.
struct Verdict {
  bool accepted = true;
  std::size_t step = 0;
  std::string reason;

  static Verdict ok() { return {}; }
  static Verdict fail(std::size_t step, std::string reason) {
    return {false, step, std::move(reason)};
  }
};

/// Instantiates an axiom scheme. Bindings must cover the scheme's
/// metavariables exactly (ax1: X,Y; ax2: X,Y,Z; peirce: X,Y); a missing or
/// extra binding throws std::invalid_argument.
FormulaPtr axiom_instance(AxiomScheme s,
                          const std::map<std::string, FormulaPtr>& bindings);

/// True iff f is a substitution instance of the scheme. The matcher
/// decomposes the formula structurally and verifies the inferred
/// metavariable assignments are internally consistent; axiom steps carry no
/// substitution annotations, so this is what the checker runs.
bool match_axiom(AxiomScheme s, const FormulaPtr& f);

/// Checks every step of d: an axiom step must match its claimed scheme, a
/// hypothesis step must cite an in-range hypothesis and equal it
/// structurally (violations of either report bad-hyp-index), and MP i j
/// requires step i to be exactly (step j -> this step). Deterministic, no
/// search; reports the first failure only.
Verdict check_proof(const Deduction& d);

/// The standard five-step hypothesis-free proof of z -> z.
Deduction prove_self_implication(const FormulaPtr& z);

/// Deduction Theorem as a proof transformation: removes hypothesis
/// `hyp_index` (1-based), producing a deduction of A -> conclusion from the
/// remaining hypotheses. Textbook three-case step rewrite: the A -> A
/// prologue is emitted once; axiom and other-hypothesis steps gain an
/// AX1+MP pair; MP steps become AX2+MP+MP. Output passes check_proof and
/// has at most 3n+5 steps for an n-step input.
Deduction dt_eliminate(const Deduction& d, std::size_t hyp_index);

/// Variant of dt_eliminate that copies steps not depending on the
/// eliminated hypothesis unchanged and only rewrites the dependent spine.
/// Produces much shorter output on deductions that inline large
/// hypothesis-free subproofs, at the cost of the 3n+5 bound (mixed MP steps
/// can take five new steps each).
Deduction dt_eliminate_sparing(const Deduction& d, std::size_t hyp_index);

/// Cut: given `premise` proving G |- A and `target` having A as hypothesis
/// `hyp_index`, inlines the premise and re-points every citation of that
/// hypothesis, yielding a deduction of target's conclusion from the union
/// of the remaining hypotheses (premise's list first, then target's
/// leftovers, structurally deduplicated against what is already present).
Deduction cut_compose(const Deduction& premise, const Deduction& target,
                      std::size_t hyp_index);

/// As above, locating the first hypothesis of `target` structurally equal
/// to premise's conclusion; throws std::invalid_argument if absent.
Deduction cut_compose(const Deduction& premise, const Deduction& target);

/// Hypothetical syllogism: builds {x->y, y->z} |- x->z via the MP chain on
/// hypothesis x followed by dt_eliminate.
Deduction hs_build(const FormulaPtr& x, const FormulaPtr& y, const FormulaPtr& z);

/// Incremental construction of deductions. Step indices returned are
/// 1-based. mp() derives the step formula from the cited steps and throws
/// std::logic_error if the shapes do not fit, so a finished build is
/// correct by construction (and still independently checkable).
class ProofBuilder {
public:
  explicit ProofBuilder(std::vector<FormulaPtr> hypotheses);

  std::size_t hyp(std::size_t k);
  std::size_t ax1(const FormulaPtr& x, const FormulaPtr& y);
  std::size_t ax2(const FormulaPtr& x, const FormulaPtr& y, const FormulaPtr& z);
  std::size_t peirce(const FormulaPtr& x, const FormulaPtr& y);
  std::size_t mp(std::size_t major, std::size_t minor);

  /// Inlines a hypothesis-free deduction, reindexing its MP citations;
  /// returns the index of its conclusion step.
  std::size_t include(const Deduction& theorem);

  const FormulaPtr& formula_at(std::size_t k) const;
  Deduction take();

private:
  std::size_t push(FormulaPtr f, Justification j);
  Deduction d_;
};

/// Renders the proof-file format:
///   hyp <formula>
///   <n>. <formula> ; <just>
/// with justifications AX1 | AX2 | PEIRCE | HYP <k> | MP <i> <j>.
std::string write_deduction(const Deduction& d);

/// Parses the proof-file format. Lines may carry `#` comments; blank lines
/// are skipped; step numbers must run 1..N consecutively. Throws ParseError
/// (with the line number in the message) on malformed input.
Deduction read_deduction(const std::string& text);

} // namespace ipc

#endif
