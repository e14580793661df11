// Finite presentation synthesis for W wr_X G from double-coset data, the
// truncated infinite relator schema, the finite-generation / finite-
// presentation criteria checkers, and relator soundness verification.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrp/cosets.hpp"
#include "wrp/enumgroup.hpp"
#include "wrp/word.hpp"
#include "wrp/wreath.hpp"

namespace wrp {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::string> provenance;  // one tag per relator

  void add(Word w, std::string tag) {
    relators.push_back(std::move(w));
    provenance.push_back(std::move(tag));
  }
  std::string str() const;  // ⟨gens | relators⟩
};

enum class Verdict { Yes, No, Unknown };

struct CriteriaFlags {
  Verdict w_fg = Verdict::Unknown, w_fp = Verdict::Unknown;
  Verdict g_fg = Verdict::Unknown, g_fp = Verdict::Unknown;
  Verdict orbits_finite = Verdict::Unknown;        // orbits on X
  Verdict stabilizers_fg = Verdict::Unknown;       // every H_i
  Verdict pair_orbits_finite = Verdict::Unknown;   // orbits on X^2
  bool w_trivial = false;
  bool simply_transitive = false;  // with X infinite this kills (iii)
  bool x_infinite = false;
};

struct CriteriaResult {
  Verdict verdict = Verdict::Unknown;
  std::string clause;  // names the failing / unknown clause
};

CriteriaResult check_fg_criteria(const CriteriaFlags& f);
CriteriaResult check_fp_criteria(const CriteriaFlags& f);

struct OrbitInput {
  std::vector<Word> stabilizer_gens;  // words over the generators of G
};

struct FpCriteriaInput {
  GroupPresentation g_pres;
  GroupPresentation w_pres;
  std::vector<OrbitInput> orbits;
  // (i, j) -> double-coset representative words, i <= j; for i == j the
  // identity class {H_i} must already be excluded
  std::map<std::pair<int, int>, std::vector<Word>> dcoset_reps;
  CriteriaFlags flags;
};

// Generators: gens(G) and per-orbit copies of gens(W) (suffixed _i when
// there are several orbits). Relator families: relators of G; relators of
// each W_i; [h, w] for stabilizer generators h; [w, g w' g^-1] for g over
// the double-coset representatives.
GroupPresentation synthesize_wreath_presentation(const FpCriteriaInput& input);

// The infinite schema of the one-orbit presentation, truncated: [H,W]
// commutators plus [w, g w' g^-1] for every g in the radius-n ball of G
// with g x0 != x0.
GroupPresentation truncated_pres1(const GroupAction& action,
                                  const GroupPresentation& w_pres,
                                  const std::vector<Word>& stabilizer_gens, int radius,
                                  const Window& window = {});

struct RelatorReport {
  std::vector<bool> passed;   // per relator
  std::vector<std::string> failures;  // relator text + provenance of each failure
  bool all_passed() const { return failures.empty(); }
};

template <class Ops>
RelatorReport verify_relators(const GroupPresentation& p, const Ops& ops,
                              const std::map<std::string, typename Ops::Elem>& asgn) {
  RelatorReport rep;
  for (size_t i = 0; i < p.relators.size(); ++i) {
    bool ok = evaluate_word(p.relators[i], ops, asgn) == ops.id();
    rep.passed.push_back(ok);
    if (!ok)
      rep.failures.push_back(p.relators[i].str() + " [" +
                             (i < p.provenance.size() ? p.provenance[i] : "?") + "]");
  }
  return rep;
}

RelatorReport verify_relators(const GroupPresentation& p, const GroupElement& identity,
                              const std::map<std::string, GroupElement>& asgn);

// ---- concrete pipeline for finite instances ----

struct ConcreteWreathInstance {
  FiniteGroup g;             // enumerated G with generator words
  FinitePointAction inst;    // natural action on X
  GroupSpec w;               // fiber group
  GroupPresentation g_pres;  // trusted relators of G (soundness is verified)
  GroupPresentation w_pres;
  int base_point = 0;        // which point's stabilizer plays H_0 (its orbit is listed first)
};

// stabilizer generator words and double-coset representative words computed
// from the enumerated group (identity class excluded for i == j)
FpCriteriaInput derive_fp_input(const ConcreteWreathInstance& ci);

struct WreathOps {
  const WreathProduct* ctx;
  using Elem = WreathElement;
  WreathElement id() const { return ctx->identity(); }
  WreathElement mul(const WreathElement& a, const WreathElement& b) const {
    return ctx->multiply(a, b);
  }
  WreathElement inv(const WreathElement& a) const { return ctx->inverse(a); }
};

struct SynthesisCheck {
  GroupPresentation presentation;
  RelatorReport relators;
  unsigned long long generated_order = 0;
  unsigned long long expected_order = 0;  // |W|^|X| * |G|
  bool full_wreath_generated() const { return generated_order == expected_order; }
};

// Synthesizes the presentation for the instance, evaluates every relator in
// the concrete wreath product, and checks that the assigned generator images
// generate the whole W wr_X G.
SynthesisCheck synthesize_and_verify(const ConcreteWreathInstance& ci);

// standard presentations used by the fixtures
GroupPresentation cyclic_presentation(long long m);
GroupPresentation sym_presentation(int n);
GroupPresentation d4_presentation();

}  // namespace wrp
