#include "ipc/proof.hpp"

#include <cctype>
#include <sstream>

namespace ipc {

namespace {

FormulaPtr imp(const FormulaPtr& a, const FormulaPtr& c) {
  return Formula::implies(a, c);
}

const char* scheme_name(AxiomScheme s) {
  switch (s) {
    case AxiomScheme::ax1: return "AX1";
    case AxiomScheme::ax2: return "AX2";
    case AxiomScheme::peirce: return "PEIRCE";
  }
  return "?";
}

} // namespace

Justification Justification::axiom(AxiomScheme s) {
  switch (s) {
    case AxiomScheme::ax1: return {Kind::ax1, 0, 0, 0};
    case AxiomScheme::ax2: return {Kind::ax2, 0, 0, 0};
    case AxiomScheme::peirce: return {Kind::peirce, 0, 0, 0};
  }
  throw std::logic_error("bad scheme");
}

FormulaPtr axiom_instance(AxiomScheme s,
                          const std::map<std::string, FormulaPtr>& bindings) {
  std::vector<std::string> wanted;
  switch (s) {
    case AxiomScheme::ax1:
    case AxiomScheme::peirce: wanted = {"X", "Y"}; break;
    case AxiomScheme::ax2: wanted = {"X", "Y", "Z"}; break;
  }
  for (const auto& name : wanted)
    if (!bindings.count(name))
      throw std::invalid_argument(std::string(scheme_name(s)) +
                                  ": missing binding for " + name);
  if (bindings.size() != wanted.size())
    for (const auto& [name, f] : bindings) {
      (void)f;
      if (std::find(wanted.begin(), wanted.end(), name) == wanted.end())
        throw std::invalid_argument(std::string(scheme_name(s)) +
                                    ": unexpected binding " + name);
    }
  switch (s) {
    case AxiomScheme::ax1: {
      const auto &x = bindings.at("X"), &y = bindings.at("Y");
      return imp(x, imp(y, x));
    }
    case AxiomScheme::ax2: {
      const auto &x = bindings.at("X"), &y = bindings.at("Y"), &z = bindings.at("Z");
      return imp(imp(x, imp(y, z)), imp(imp(x, y), imp(x, z)));
    }
    case AxiomScheme::peirce: {
      const auto &x = bindings.at("X"), &y = bindings.at("Y");
      return imp(imp(imp(x, y), x), x);
    }
  }
  throw std::logic_error("bad scheme");
}

bool match_axiom(AxiomScheme s, const FormulaPtr& f) {
  if (!f->is_implies()) return false;
  switch (s) {
    case AxiomScheme::ax1: {
      // X -> (Y -> X)
      const FormulaPtr& rhs = f->consequent();
      return rhs->is_implies() && struct_equal(f->antecedent(), rhs->consequent());
    }
    case AxiomScheme::ax2: {
      // [X -> (Y -> Z)] -> [(X -> Y) -> (X -> Z)]
      const FormulaPtr& l = f->antecedent();
      const FormulaPtr& r = f->consequent();
      if (!l->is_implies() || !l->consequent()->is_implies()) return false;
      if (!r->is_implies() || !r->antecedent()->is_implies() ||
          !r->consequent()->is_implies())
        return false;
      const FormulaPtr& x = l->antecedent();
      const FormulaPtr& y = l->consequent()->antecedent();
      const FormulaPtr& z = l->consequent()->consequent();
      return struct_equal(x, r->antecedent()->antecedent()) &&
             struct_equal(y, r->antecedent()->consequent()) &&
             struct_equal(x, r->consequent()->antecedent()) &&
             struct_equal(z, r->consequent()->consequent());
    }
    case AxiomScheme::peirce: {
      // [(X -> Y) -> X] -> X
      const FormulaPtr& l = f->antecedent();
      if (!l->is_implies() || !l->antecedent()->is_implies()) return false;
      const FormulaPtr& x = l->antecedent()->antecedent();
      return struct_equal(x, l->consequent()) &&
             struct_equal(x, f->consequent());
    }
  }
  return false;
}

Verdict check_proof(const Deduction& d) {
  if (d.steps.empty()) return Verdict::fail(0, "empty-proof");
  for (std::size_t k = 1; k <= d.steps.size(); ++k) {
    const ProofStep& s = d.steps[k - 1];
    switch (s.just.kind) {
      case Justification::Kind::ax1:
        if (!match_axiom(AxiomScheme::ax1, s.formula))
          return Verdict::fail(k, "not-an-instance");
        break;
      case Justification::Kind::ax2:
        if (!match_axiom(AxiomScheme::ax2, s.formula))
          return Verdict::fail(k, "not-an-instance");
        break;
      case Justification::Kind::peirce:
        if (!match_axiom(AxiomScheme::peirce, s.formula))
          return Verdict::fail(k, "not-an-instance");
        break;
      case Justification::Kind::hypothesis: {
        std::size_t h = s.just.hyp;
        if (h < 1 || h > d.hypotheses.size())
          return Verdict::fail(k, "bad-hyp-index");
        if (!struct_equal(s.formula, d.hypotheses[h - 1]))
          return Verdict::fail(k, "bad-hyp-index");
        break;
      }
      case Justification::Kind::mp: {
        std::size_t i = s.just.major, j = s.just.minor;
        if (i < 1 || i >= k || j < 1 || j >= k)
          return Verdict::fail(k, "forward-reference");
        const FormulaPtr& fi = d.steps[i - 1].formula;
        const FormulaPtr& fj = d.steps[j - 1].formula;
        if (!fi->is_implies() || !struct_equal(fi->antecedent(), fj) ||
            !struct_equal(fi->consequent(), s.formula))
          return Verdict::fail(k, "mp-mismatch");
        break;
      }
    }
  }
  return Verdict::ok();
}

namespace {

// Appends the five-step derivation of a -> a; returns the index of its
// conclusion within `steps` (1-based).
std::size_t emit_self_implication(std::vector<ProofStep>& steps,
                                  const FormulaPtr& a) {
  FormulaPtr aa = imp(a, a);
  std::size_t base = steps.size();
  steps.push_back({imp(imp(a, imp(aa, a)), imp(imp(a, aa), aa)),
                   Justification::axiom(AxiomScheme::ax2)});
  steps.push_back({imp(a, imp(aa, a)), Justification::axiom(AxiomScheme::ax1)});
  steps.push_back({imp(imp(a, aa), aa), Justification::mp(base + 1, base + 2)});
  steps.push_back({imp(a, aa), Justification::axiom(AxiomScheme::ax1)});
  steps.push_back({aa, Justification::mp(base + 3, base + 4)});
  return base + 5;
}

Deduction dt_transform(const Deduction& d, std::size_t hyp_index, bool sparing) {
  if (hyp_index < 1 || hyp_index > d.hypotheses.size())
    throw std::invalid_argument("dt_eliminate: invalid hypothesis index");
  Verdict v = check_proof(d);
  if (!v.accepted)
    throw std::invalid_argument("dt_eliminate: input rejected at step " +
                                std::to_string(v.step) + " (" + v.reason + ")");
  const FormulaPtr& a = d.hypotheses[hyp_index - 1];
  const std::size_t n = d.steps.size();

  Deduction out;
  out.hypotheses.reserve(d.hypotheses.size() - 1);
  for (std::size_t k = 0; k < d.hypotheses.size(); ++k)
    if (k + 1 != hyp_index) out.hypotheses.push_back(d.hypotheses[k]);
  auto remap_hyp = [hyp_index](std::size_t k) {
    return k < hyp_index ? k : k - 1;
  };

  // uses[k]: does step k's derivation reach the eliminated hypothesis?
  // In textbook mode every step is rewritten, so treat all as dependent.
  std::vector<bool> uses(n + 1, !sparing);
  if (sparing) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Justification& j = d.steps[k - 1].just;
      if (j.kind == Justification::Kind::hypothesis && j.hyp == hyp_index)
        uses[k] = true;
      else if (j.kind == Justification::Kind::mp)
        uses[k] = uses[j.major] || uses[j.minor];
    }
  }
  bool any_hyp_a = false;
  for (std::size_t k = 1; k <= n; ++k) {
    const Justification& j = d.steps[k - 1].just;
    if (j.kind == Justification::Kind::hypothesis && j.hyp == hyp_index)
      any_hyp_a = true;
  }

  // m[k]: output index (1-based) of the step standing for input step k.
  // For dependent steps it concludes a -> F_k, otherwise F_k itself.
  std::vector<std::size_t> m(n + 1, 0);
  std::size_t prologue = 0;
  if (!sparing || any_hyp_a) prologue = emit_self_implication(out.steps, a);

  auto wrap_independent = [&](std::size_t idx, const FormulaPtr& f) {
    // From F at idx derive a -> F.
    out.steps.push_back({imp(f, imp(a, f)), Justification::axiom(AxiomScheme::ax1)});
    out.steps.push_back({imp(a, f), Justification::mp(out.steps.size(), idx)});
    return out.steps.size();
  };
  auto distribute = [&](std::size_t maj, std::size_t min, const FormulaPtr& g,
                        const FormulaPtr& f) {
    // From a -> (g -> f) at maj and a -> g at min derive a -> f.
    out.steps.push_back({imp(imp(a, imp(g, f)), imp(imp(a, g), imp(a, f))),
                         Justification::axiom(AxiomScheme::ax2)});
    out.steps.push_back(
        {imp(imp(a, g), imp(a, f)), Justification::mp(out.steps.size(), maj)});
    out.steps.push_back({imp(a, f), Justification::mp(out.steps.size(), min)});
    return out.steps.size();
  };

  for (std::size_t k = 1; k <= n; ++k) {
    const ProofStep& s = d.steps[k - 1];
    const Justification& j = s.just;
    if (!uses[k]) {
      Justification nj = j;
      if (nj.kind == Justification::Kind::hypothesis) nj.hyp = remap_hyp(nj.hyp);
      if (nj.kind == Justification::Kind::mp) {
        nj.major = m[nj.major];
        nj.minor = m[nj.minor];
      }
      out.steps.push_back({s.formula, nj});
      m[k] = out.steps.size();
      continue;
    }
    switch (j.kind) {
      case Justification::Kind::hypothesis:
        if (j.hyp == hyp_index) {
          m[k] = prologue; // a -> a
          break;
        }
        [[fallthrough]];
      case Justification::Kind::ax1:
      case Justification::Kind::ax2:
      case Justification::Kind::peirce: {
        Justification nj = j;
        if (nj.kind == Justification::Kind::hypothesis)
          nj.hyp = remap_hyp(nj.hyp);
        out.steps.push_back({s.formula, nj});
        m[k] = wrap_independent(out.steps.size(), s.formula);
        break;
      }
      case Justification::Kind::mp: {
        const FormulaPtr& g = d.steps[j.minor - 1].formula;
        const FormulaPtr& f = s.formula;
        std::size_t maj = m[j.major], min = m[j.minor];
        if (!uses[j.major]) // premise g -> f is present unwrapped
          maj = wrap_independent(maj, d.steps[j.major - 1].formula);
        if (!uses[j.minor]) // premise g is present unwrapped
          min = wrap_independent(min, g);
        m[k] = distribute(maj, min, g, f);
        break;
      }
    }
  }

  if (!uses[n]) {
    // Conclusion never touched the hypothesis; wrap it explicitly.
    m[n] = wrap_independent(m[n], d.steps[n - 1].formula);
  } else if (m[n] != out.steps.size()) {
    // Last step mapped into the prologue; restate the conclusion.
    out.steps.push_back(out.steps[m[n] - 1]);
  }
  return out;
}

} // namespace

Deduction prove_self_implication(const FormulaPtr& z) {
  Deduction d;
  emit_self_implication(d.steps, z);
  return d;
}

Deduction dt_eliminate(const Deduction& d, std::size_t hyp_index) {
  return dt_transform(d, hyp_index, false);
}

Deduction dt_eliminate_sparing(const Deduction& d, std::size_t hyp_index) {
  return dt_transform(d, hyp_index, true);
}

Deduction cut_compose(const Deduction& premise, const Deduction& target,
                      std::size_t hyp_index) {
  if (hyp_index < 1 || hyp_index > target.hypotheses.size())
    throw std::invalid_argument("cut_compose: invalid hypothesis index");
  if (premise.steps.empty() || target.steps.empty())
    throw std::invalid_argument("cut_compose: empty deduction");
  const FormulaPtr& cut_formula = target.hypotheses[hyp_index - 1];
  if (!struct_equal(premise.conclusion(), cut_formula))
    throw std::invalid_argument(
        "cut_compose: premise conclusion does not match the named hypothesis");

  Deduction out;
  out.hypotheses = premise.hypotheses;
  // Union the remaining target hypotheses in, deduplicating structurally.
  std::vector<std::size_t> hyp_map(target.hypotheses.size() + 1, 0);
  for (std::size_t k = 1; k <= target.hypotheses.size(); ++k) {
    if (k == hyp_index) continue;
    const FormulaPtr& h = target.hypotheses[k - 1];
    std::size_t found = 0;
    for (std::size_t i = 0; i < out.hypotheses.size(); ++i)
      if (struct_equal(out.hypotheses[i], h)) {
        found = i + 1;
        break;
      }
    if (!found) {
      out.hypotheses.push_back(h);
      found = out.hypotheses.size();
    }
    hyp_map[k] = found;
  }

  out.steps = premise.steps; // premise hypotheses keep their positions
  const Justification concl_just = premise.steps.back().just;

  std::vector<std::size_t> m(target.steps.size() + 1, 0);
  for (std::size_t k = 1; k <= target.steps.size(); ++k) {
    const ProofStep& s = target.steps[k - 1];
    Justification nj = s.just;
    if (nj.kind == Justification::Kind::hypothesis) {
      if (nj.hyp == hyp_index) {
        // Restate the premise's conclusion; its justification cites steps
        // inside the already-emitted premise block, which stay valid.
        out.steps.push_back({s.formula, concl_just});
        m[k] = out.steps.size();
        continue;
      }
      nj.hyp = hyp_map[nj.hyp];
    } else if (nj.kind == Justification::Kind::mp) {
      nj.major = m[nj.major];
      nj.minor = m[nj.minor];
    }
    out.steps.push_back({s.formula, nj});
    m[k] = out.steps.size();
  }
  return out;
}

Deduction cut_compose(const Deduction& premise, const Deduction& target) {
  for (std::size_t k = 1; k <= target.hypotheses.size(); ++k)
    if (struct_equal(target.hypotheses[k - 1], premise.conclusion()))
      return cut_compose(premise, target, k);
  throw std::invalid_argument(
      "cut_compose: no hypothesis matches the premise's conclusion");
}

Deduction hs_build(const FormulaPtr& x, const FormulaPtr& y, const FormulaPtr& z) {
  ProofBuilder b({imp(x, y), imp(y, z), x});
  std::size_t s1 = b.hyp(1);
  std::size_t s2 = b.hyp(3);
  std::size_t s3 = b.mp(s1, s2);
  std::size_t s4 = b.hyp(2);
  b.mp(s4, s3);
  return dt_eliminate(b.take(), 3);
}

ProofBuilder::ProofBuilder(std::vector<FormulaPtr> hypotheses) {
  d_.hypotheses = std::move(hypotheses);
}

std::size_t ProofBuilder::push(FormulaPtr f, Justification j) {
  d_.steps.push_back({std::move(f), j});
  return d_.steps.size();
}

std::size_t ProofBuilder::hyp(std::size_t k) {
  if (k < 1 || k > d_.hypotheses.size())
    throw std::logic_error("ProofBuilder::hyp: index out of range");
  return push(d_.hypotheses[k - 1], Justification::hypothesis(k));
}

std::size_t ProofBuilder::ax1(const FormulaPtr& x, const FormulaPtr& y) {
  return push(imp(x, imp(y, x)), Justification::axiom(AxiomScheme::ax1));
}

std::size_t ProofBuilder::ax2(const FormulaPtr& x, const FormulaPtr& y,
                              const FormulaPtr& z) {
  return push(imp(imp(x, imp(y, z)), imp(imp(x, y), imp(x, z))),
              Justification::axiom(AxiomScheme::ax2));
}

std::size_t ProofBuilder::peirce(const FormulaPtr& x, const FormulaPtr& y) {
  return push(imp(imp(imp(x, y), x), x), Justification::axiom(AxiomScheme::peirce));
}

std::size_t ProofBuilder::mp(std::size_t major, std::size_t minor) {
  if (major < 1 || major > d_.steps.size() || minor < 1 || minor > d_.steps.size())
    throw std::logic_error("ProofBuilder::mp: step index out of range");
  const FormulaPtr& fi = d_.steps[major - 1].formula;
  const FormulaPtr& fj = d_.steps[minor - 1].formula;
  if (!fi->is_implies() || !struct_equal(fi->antecedent(), fj))
    throw std::logic_error("ProofBuilder::mp: premises do not fit: " +
                           format_formula(fi) + " vs " + format_formula(fj));
  return push(fi->consequent(), Justification::mp(major, minor));
}

std::size_t ProofBuilder::include(const Deduction& theorem) {
  if (!theorem.hypotheses.empty())
    throw std::logic_error("ProofBuilder::include: deduction has hypotheses");
  const std::size_t offset = d_.steps.size();
  for (const ProofStep& s : theorem.steps) {
    Justification nj = s.just;
    if (nj.kind == Justification::Kind::mp) {
      nj.major += offset;
      nj.minor += offset;
    }
    d_.steps.push_back({s.formula, nj});
  }
  return d_.steps.size();
}

const FormulaPtr& ProofBuilder::formula_at(std::size_t k) const {
  if (k < 1 || k > d_.steps.size())
    throw std::logic_error("ProofBuilder::formula_at: index out of range");
  return d_.steps[k - 1].formula;
}

Deduction ProofBuilder::take() { return std::move(d_); }

std::string write_deduction(const Deduction& d) {
  std::ostringstream out;
  for (const FormulaPtr& h : d.hypotheses)
    out << "hyp " << format_formula(h) << "\n";
  for (std::size_t k = 1; k <= d.steps.size(); ++k) {
    const ProofStep& s = d.steps[k - 1];
    out << k << ". " << format_formula(s.formula) << " ; ";
    switch (s.just.kind) {
      case Justification::Kind::ax1: out << "AX1"; break;
      case Justification::Kind::ax2: out << "AX2"; break;
      case Justification::Kind::peirce: out << "PEIRCE"; break;
      case Justification::Kind::hypothesis: out << "HYP " << s.just.hyp; break;
      case Justification::Kind::mp:
        out << "MP " << s.just.major << " " << s.just.minor;
        break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("proof line " + std::to_string(line_no) +
                         ": bad step index '" + tok + "'",
                     line_no);
  return std::stoull(tok);
}

FormulaPtr parse_line_formula(const std::string& text, std::size_t line_no) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw ParseError("proof line " + std::to_string(line_no) + ": " + e.what(),
                     line_no);
  }
}

} // namespace

Deduction read_deduction(const std::string& text) {
  Deduction d;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool seen_step = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("hyp ", 0) == 0 || line == "hyp") {
      if (seen_step)
        throw ParseError("proof line " + std::to_string(line_no) +
                             ": hypothesis after steps",
                         line_no);
      d.hypotheses.push_back(parse_line_formula(line.substr(3), line_no));
      continue;
    }
    std::size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw ParseError("proof line " + std::to_string(line_no) +
                           ": expected '<n>. <formula> ; <just>'",
                       line_no);
    std::size_t n = parse_index(trim(line.substr(0, dot)), line_no);
    if (n != d.steps.size() + 1)
      throw ParseError("proof line " + std::to_string(line_no) +
                           ": step numbers must run 1..N consecutively",
                       line_no);
    std::size_t semi = line.find(';', dot);
    if (semi == std::string::npos)
      throw ParseError("proof line " + std::to_string(line_no) +
                           ": missing ';' before justification",
                       line_no);
    FormulaPtr f =
        parse_line_formula(line.substr(dot + 1, semi - dot - 1), line_no);
    std::istringstream jin(line.substr(semi + 1));
    std::vector<std::string> toks;
    for (std::string t; jin >> t;) toks.push_back(t);
    Justification j{};
    if (toks.size() == 1 && toks[0] == "AX1")
      j = Justification::axiom(AxiomScheme::ax1);
    else if (toks.size() == 1 && toks[0] == "AX2")
      j = Justification::axiom(AxiomScheme::ax2);
    else if (toks.size() == 1 && toks[0] == "PEIRCE")
      j = Justification::axiom(AxiomScheme::peirce);
    else if (toks.size() == 2 && toks[0] == "HYP")
      j = Justification::hypothesis(parse_index(toks[1], line_no));
    else if (toks.size() == 3 && toks[0] == "MP")
      j = Justification::mp(parse_index(toks[1], line_no),
                            parse_index(toks[2], line_no));
    else
      throw ParseError("proof line " + std::to_string(line_no) +
                           ": bad justification",
                       line_no);
    d.steps.push_back({std::move(f), j});
    seen_step = true;
  }
  if (d.steps.empty()) throw ParseError("proof file has no steps", line_no);
  return d;
}

} // namespace ipc
