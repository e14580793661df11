#include "wrp/presentations.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wrp {

std::string GroupPresentation::str() const {
  std::string s = "⟨ ";
  for (size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
  s += " | ";
  for (size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + relators[i].str();
  return s + " ⟩";
}

namespace {

const char* verdict_str(Verdict v) {
  return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown";
}

CriteriaResult combine(std::vector<std::pair<Verdict, std::string>> clauses) {
  for (const auto& [v, name] : clauses)
    if (v == Verdict::No) return {Verdict::No, name};
  for (const auto& [v, name] : clauses)
    if (v == Verdict::Unknown) return {Verdict::Unknown, name + " (unknown)"};
  return {Verdict::Yes, ""};
}

}  // namespace

CriteriaResult check_fg_criteria(const CriteriaFlags& f) {
  if (f.w_trivial) {
    // W = 1 collapses the wreath product onto G
    if (f.g_fg == Verdict::Yes) return {Verdict::Yes, "W trivial, G finitely generated"};
    return {f.g_fg, "G finitely generated (W trivial)"};
  }
  return combine({{f.w_fg, "W finitely generated"},
                  {f.g_fg, "G finitely generated"},
                  {f.orbits_finite, "finitely many orbits on X"}});
}

CriteriaResult check_fp_criteria(const CriteriaFlags& f) {
  if (f.w_trivial) {
    if (f.g_fp == Verdict::Yes) return {Verdict::Yes, "W trivial, G finitely presented"};
    return {f.g_fp, "G finitely presented (W trivial)"};
  }
  Verdict pair = f.pair_orbits_finite;
  std::string pair_clause = "finitely many orbits on the cartesian square";
  if (f.simply_transitive && f.x_infinite) {
    // simply transitive with X infinite forces infinitely many pair orbits
    pair = Verdict::No;
    pair_clause += " (simply transitive action on infinite X: a standard wreath product)";
  }
  return combine({{f.w_fp, "W finitely presented"},
                  {f.g_fp, "G finitely presented"},
                  {f.stabilizers_fg, "stabilizers finitely generated"},
                  {pair, pair_clause}});
}

namespace {

// fiber generator symbol for an orbit copy of W; renamed when there are
// several orbits or the name clashes with a generator of G
std::string fiber_symbol(const std::vector<std::string>& g_gens, const std::string& base,
                         size_t orbit, size_t norb) {
  bool clash = std::find(g_gens.begin(), g_gens.end(), base) != g_gens.end();
  return (norb > 1 || clash) ? base + "_" + std::to_string(orbit) : base;
}

}  // namespace

GroupPresentation synthesize_wreath_presentation(const FpCriteriaInput& input) {
  CriteriaResult fp = check_fp_criteria(input.flags);
  if (fp.verdict != Verdict::Yes)
    fail(errk::PreconditionNotFP,
         "finite-presentation criteria not established: " + fp.clause +
             " = " + verdict_str(fp.verdict));
  size_t norb = input.orbits.size();
  for (size_t i = 0; i < norb; ++i)
    for (size_t j = i; j < norb; ++j)
      if (!input.dcoset_reps.count({static_cast<int>(i), static_cast<int>(j)}))
        fail(errk::MissingRepresentatives, "no double-coset representatives for orbit pair (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");

  GroupPresentation out;
  out.generators = input.g_pres.generators;
  for (size_t i = 0; i < norb; ++i)
    for (const auto& t : input.w_pres.generators)
      out.generators.push_back(fiber_symbol(input.g_pres.generators, t, i, norb));

  for (const auto& r : input.g_pres.relators) out.add(r, "G");

  auto rename = [&](const Word& w, size_t orbit) {
    Word r;
    for (const auto& s : w.syllables()) r.push({fiber_symbol(input.g_pres.generators, s.sym, orbit, norb), s.inv});
    return r;
  };
  for (size_t i = 0; i < norb; ++i)
    for (const auto& r : input.w_pres.relators)
      out.add(rename(r, i), "W[" + std::to_string(i) + "]");

  // [h, w]: stabilizer generators commute with the fiber at their base point
  for (size_t i = 0; i < norb; ++i)
    for (const auto& h : input.orbits[i].stabilizer_gens)
      for (const auto& t : input.w_pres.generators)
        out.add(commutator(h, Word::gen(fiber_symbol(input.g_pres.generators, t, i, norb))),
                "stab-commutation[" + std::to_string(i) + "]");

  // [w, g w' g^-1] over the double-coset representatives
  for (size_t i = 0; i < norb; ++i)
    for (size_t j = i; j < norb; ++j) {
      const auto& reps = input.dcoset_reps.at({static_cast<int>(i), static_cast<int>(j)});
      for (const auto& gw : reps) {
        if (i == j && gw.empty()) continue;  // the class {H} is excluded
        for (const auto& t : input.w_pres.generators)
          for (const auto& t2 : input.w_pres.generators)
            out.add(commutator(Word::gen(fiber_symbol(input.g_pres.generators, t, i, norb)),
                               gw * Word::gen(fiber_symbol(input.g_pres.generators, t2, j, norb)) * gw.inverse()),
                    "dcoset-commutation[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
    }
  return out;
}

GroupPresentation truncated_pres1(const GroupAction& action, const GroupPresentation& w_pres,
                                  const std::vector<Word>& stabilizer_gens, int radius,
                                  const Window& window) {
  GroupPresentation out;
  for (const auto& [name, g] : action.group().generators()) out.generators.push_back(name);
  for (const auto& t : w_pres.generators) out.generators.push_back(t);

  for (const auto& h : stabilizer_gens)
    for (const auto& t : w_pres.generators)
      out.add(commutator(h, Word::gen(t)), "pres1-HW");

  // ball of G with words, walks multiplying generators on the right
  Point x0 = action.base_point();
  std::map<GroupElement, Word> ball{{action.group().identity(), Word()}};
  std::deque<GroupElement> queue{action.group().identity()};
  std::map<GroupElement, int> depth{{action.group().identity(), 0}};
  auto gens = action.group().symmetric_generators();
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    int d = depth.at(g);
    if (d == radius) continue;
    for (const auto& [syl, s] : gens) {
      GroupElement h = compose(g, s);
      if (depth.emplace(h, d + 1).second) {
        Word w = ball.at(g);
        w.push(syl);
        ball.emplace(h, std::move(w));
        queue.push_back(std::move(h));
      }
    }
  }
  (void)window;
  for (const auto& [g, gw] : ball) {
    if (action.act(g, x0) == x0) continue;  // g in H
    for (const auto& t : w_pres.generators)
      for (const auto& t2 : w_pres.generators)
        out.add(commutator(Word::gen(t), gw * Word::gen(t2) * gw.inverse()),
                "pres1-conj[" + gw.str() + "]");
  }
  return out;
}

RelatorReport verify_relators(const GroupPresentation& p, const GroupElement& identity,
                              const std::map<std::string, GroupElement>& asgn) {
  return verify_relators(p, GroupOps{identity}, asgn);
}

// base points per orbit: the chosen one first, minimal representatives for
// the other orbits
std::vector<int> orbit_base_order(const ConcreteWreathInstance& ci) {
  auto orb0 = ci.inst.action.orbit_of(ci.base_point);
  std::vector<int> order{ci.base_point};
  for (int r : ci.inst.base_points)
    if (!std::binary_search(orb0.begin(), orb0.end(), r)) order.push_back(r);
  return order;
}

FpCriteriaInput derive_fp_input(const ConcreteWreathInstance& ci) {
  FpCriteriaInput in;
  in.g_pres = ci.g_pres;
  in.w_pres = ci.w_pres;
  in.flags = {Verdict::Yes, Verdict::Yes, Verdict::Yes, Verdict::Yes,
              Verdict::Yes, Verdict::Yes, Verdict::Yes, false, false, false};

  std::vector<int> order = orbit_base_order(ci);
  for (int x : order) in.orbits.push_back({ci.inst.action.stabilizer_words(x)});

  for (size_t i = 0; i < order.size(); ++i) {
    auto hi = ci.inst.action.stabilizer(order[i]);
    for (size_t j = i; j < order.size(); ++j) {
      auto hj = ci.inst.action.stabilizer(order[j]);
      DoubleCosetTable t = double_cosets(ci.g, hi, hj);
      std::vector<Word> words;
      for (int r : t.reps) {
        if (i == j && t.coset_of[ci.g.id()] == t.coset_of[r]) continue;  // class {H}
        words.push_back(ci.g.word(r));
      }
      in.dcoset_reps[{static_cast<int>(i), static_cast<int>(j)}] = std::move(words);
    }
  }
  return in;
}

SynthesisCheck synthesize_and_verify(const ConcreteWreathInstance& ci) {
  FpCriteriaInput in = derive_fp_input(ci);
  SynthesisCheck check;
  check.presentation = synthesize_wreath_presentation(in);

  // the ambient wreath product: cursors are elements of ci.g acting on the
  // same point set, so Sym(npts) as the action group covers them all
  WreathProduct wrg(ci.w, GroupAction(GroupSpec::sym(ci.inst.action.npts()),
                                      DomainKind::FiniteSet));

  size_t norb = in.orbits.size();
  std::map<std::string, WreathElement> asgn;
  for (const auto& [name, idx] : ci.g.generators())
    asgn[name] = wrg.from_base(ci.g.element(idx));
  // orbit i's fiber generators sit at that orbit's base point
  std::vector<int> order = orbit_base_order(ci);
  std::vector<NamedGen> w_gens = ci.w.generators();
  for (size_t i = 0; i < norb; ++i)
    for (const auto& t : ci.w_pres.generators) {
      std::string sym = fiber_symbol(in.g_pres.generators, t, i, norb);
      bool found = false;
      for (const auto& ng : w_gens)
        if (ng.name == t) {
          asgn[sym] = wrg.fiber_at(Point(static_cast<long long>(order[i])), ng.g);
          found = true;
        }
      if (!found) fail(errk::UnboundSymbol, "fiber generator '" + t + "' not in the fiber group");
    }

  WreathOps ops{&wrg};
  check.relators = verify_relators(check.presentation, ops, asgn);

  // the assigned generators must generate the whole wreath product
  std::vector<WreathElement> gens;
  for (const auto& [sym, e] : asgn) {
    gens.push_back(e);
    gens.push_back(wrg.inverse(e));
  }
  auto all = closure_set(gens, wrg.identity(),
                         [&](const WreathElement& a, const WreathElement& b) {
                           return wrg.multiply(a, b);
                         },
                         200000);
  check.generated_order = all.size();
  unsigned long long worder = *ci.w.order();
  check.expected_order = 1;
  for (int i = 0; i < ci.inst.action.npts(); ++i) check.expected_order *= worder;
  check.expected_order *= static_cast<unsigned long long>(ci.g.size());
  return check;
}

GroupPresentation cyclic_presentation(long long m) {
  GroupPresentation p;
  p.generators = {"t"};
  Word w;
  for (long long i = 0; i < m; ++i) w = w * Word::gen("t");
  p.add(w, "W");
  return p;
}

GroupPresentation sym_presentation(int n) {
  GroupPresentation p;
  p.generators = {"a", "b"};
  auto pow = [](const Word& w, int k) {
    Word r;
    for (int i = 0; i < k; ++i) r = r * w;
    return r;
  };
  p.add(pow(Word::gen("a"), 2), "G");
  p.add(pow(Word::gen("b"), n), "G");
  p.add(pow(Word::gen("a") * Word::gen("b"), n - 1), "G");
  return p;
}

GroupPresentation d4_presentation() {
  GroupPresentation p;
  p.generators = {"r", "s"};
  auto pow = [](const Word& w, int k) {
    Word r;
    for (int i = 0; i < k; ++i) r = r * w;
    return r;
  };
  p.add(pow(Word::gen("r"), 4), "G");
  p.add(pow(Word::gen("s"), 2), "G");
  p.add(pow(Word::gen("r") * Word::gen("s"), 2), "G");
  return p;
}

}  // namespace wrp
