#include "wrp/enumgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wrp {

FiniteGroup FiniteGroup::enumerate(const std::vector<NamedGen>& gens, const GroupElement& id,
                                   size_t budget) {
  FiniteGroup g;
  g.label_ = {id};
  g.word_ = {Word()};
  g.index_ = {{id, 0}};

  std::vector<std::pair<Syllable, GroupElement>> sym;
  for (const auto& ng : gens) sym.push_back({{ng.name, false}, ng.g});
  for (const auto& ng : gens) {
    GroupElement gi = inverse(ng.g);
    if (gi == ng.g) continue;
    sym.push_back({{ng.name, true}, gi});
  }

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto& [syl, s] : sym) {
      GroupElement h = compose(g.label_[i], s);
      auto [it, fresh] = g.index_.emplace(h, static_cast<int>(g.label_.size()));
      if (fresh) {
        if (g.label_.size() >= budget)
          fail(errk::NotFullyEnumerable, "group exceeds budget " + std::to_string(budget));
        g.label_.push_back(h);
        Word w = g.word_[i];
        w.push(syl);
        g.word_.push_back(std::move(w));
        queue.push_back(it->second);
      }
    }
  }
  for (const auto& ng : gens) g.gens_.push_back({ng.name, g.index_.at(ng.g)});
  g.finish_tables();
  return g;
}

FiniteGroup FiniteGroup::enumerate(const GroupSpec& spec, size_t budget) {
  return enumerate(spec.generators(), spec.identity(), budget);
}

void FiniteGroup::finish_tables() {
  n_ = static_cast<int>(label_.size());
  mul_.assign(n_, std::vector<int>(n_));
  inv_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      auto it = index_.find(compose(label_[a], label_[b]));
      if (it == index_.end()) fail(errk::NotFullyEnumerable, "generators do not close");
      mul_[a][b] = it->second;
      if (it->second == 0) inv_[a] = b;
    }
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<NamedGen> gens;
  for (const auto& [name, idx] : a.gens_)
    gens.push_back({"1." + name, GroupElement(DirectProductElem{{a.element(idx), b.element(0)}})});
  for (const auto& [name, idx] : b.gens_)
    gens.push_back({"2." + name, GroupElement(DirectProductElem{{a.element(0), b.element(idx)}})});
  GroupElement id(DirectProductElem{{a.element(0), b.element(0)}});
  return enumerate(gens, id, static_cast<size_t>(a.size()) * b.size() + 1);
}

int FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& seed) const {
  std::vector<int> gens;
  for (int s : seed) {
    gens.push_back(s);
    gens.push_back(inv_[s]);
  }
  std::set<int> have{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = mul_[x][s];
      if (have.insert(y).second) queue.push_back(y);
    }
  }
  return {have.begin(), have.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  std::set<int> s(h.begin(), h.end());
  if (!s.count(0)) return false;
  for (int a : h)
    for (int b : h)
      if (!s.count(mul_[a][b])) return false;
  return true;
}

bool FiniteGroup::contains(const std::vector<int>& h, int x) const {
  return std::binary_search(h.begin(), h.end(), x);
}

bool FiniteGroup::is_normal(const std::vector<int>& h) const {
  for (int g = 0; g < n_; ++g)
    for (int x : h)
      if (!contains(h, conj(g, x))) return false;
  return true;
}

std::vector<int> FiniteGroup::normal_closure(const std::vector<int>& seed) const {
  std::vector<int> conj_seed;
  for (int g = 0; g < n_; ++g)
    for (int x : seed) conj_seed.push_back(conj(g, x));
  return subgroup_closure(conj_seed);
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(n_, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n_; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> c;
    for (int g = 0; g < n_; ++g) {
      int y = conj(g, x);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::subgroups_containing(const std::vector<int>& h,
                                                                size_t budget) const {
  std::vector<int> base = subgroup_closure(h);
  std::set<std::vector<int>> seen{base};
  std::deque<std::vector<int>> queue{base};
  while (!queue.empty()) {
    std::vector<int> k = queue.front();
    queue.pop_front();
    for (int g = 0; g < n_; ++g) {
      if (contains(k, g)) continue;
      std::vector<int> seed = k;
      seed.push_back(g);
      std::vector<int> k2 = subgroup_closure(seed);
      if (seen.insert(k2).second) {
        if (seen.size() > budget) fail(errk::NotFullyEnumerable, "subgroup lattice too large");
        queue.push_back(std::move(k2));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups(size_t budget) const {
  return subgroups_containing(trivial(), budget);
}

std::vector<int> FiniteGroup::coset_map(const std::vector<int>& nsub) const {
  std::vector<int> cos(n_, -1);
  int next = 0;
  for (int g = 0; g < n_; ++g) {
    if (cos[g] >= 0) continue;
    for (int x : nsub) cos[mul_[g][x]] = next;
    ++next;
  }
  return cos;
}

FiniteGroup FiniteGroup::quotient(const std::vector<int>& nsub) const {
  if (!is_normal(nsub)) fail(errk::NotNormal, "quotient by a non-normal subgroup");
  std::vector<int> cos = coset_map(nsub);  // identity coset is 0 (ascending scan)
  int m = *std::max_element(cos.begin(), cos.end()) + 1;
  std::vector<int> rep(m, -1);
  for (int g = 0; g < n_; ++g)
    if (rep[cos[g]] < 0) rep[cos[g]] = g;  // minimal index rep

  FiniteGroup q;
  q.n_ = m;
  q.mul_.assign(m, std::vector<int>(m));
  q.inv_.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      q.mul_[i][j] = cos[mul_[rep[i]][rep[j]]];
      if (q.mul_[i][j] == 0) q.inv_[i] = j;
    }
  for (int i = 0; i < m; ++i) {
    q.label_.push_back(label_[rep[i]]);
    q.index_.emplace(label_[rep[i]], i);
    q.word_.push_back(word_[rep[i]]);
  }
  for (const auto& [name, idx] : gens_) q.gens_.push_back({name, cos[idx]});
  return q;
}

std::vector<int> FiniteGroup::whole() const {
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return all;
}

FiniteAction FiniteAction::natural(const FiniteGroup& g, int npts) {
  FiniteAction a;
  a.grp = std::make_shared<FiniteGroup>(g);
  a.img.assign(g.size(), std::vector<int>(npts));
  for (int i = 0; i < g.size(); ++i) {
    const auto& p = g.element(i).as<FinitePerm>();
    if (p.degree() != npts) fail(errk::SchemaError, "action degree mismatch");
    for (int x = 0; x < npts; ++x) a.img[i][x] = p.img[x];
  }
  return a;
}

std::vector<int> FiniteAction::orbit_of(int pt) const {
  std::set<int> orb;
  for (int e = 0; e < grp->size(); ++e) orb.insert(img[e][pt]);
  return {orb.begin(), orb.end()};
}

std::vector<int> FiniteAction::orbit_reps() const {
  std::vector<bool> seen(npts(), false);
  std::vector<int> reps;
  for (int x = 0; x < npts(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int y : orbit_of(x)) seen[y] = true;
  }
  return reps;
}

std::vector<int> FiniteAction::stabilizer(int pt) const {
  std::vector<int> st;
  for (int e = 0; e < grp->size(); ++e)
    if (img[e][pt] == pt) st.push_back(e);
  return st;
}

std::vector<Word> FiniteAction::stabilizer_words(int pt) const {
  const FiniteGroup& g = *grp;
  // transversal: BFS on the orbit of pt, rep[x] carries rep[x] . pt = x
  std::map<int, int> rep_elem{{pt, g.id()}};
  std::deque<int> queue{pt};
  std::vector<std::pair<Syllable, int>> sym;
  for (const auto& [name, idx] : g.generators()) sym.push_back({{name, false}, idx});
  for (const auto& [name, idx] : g.generators())
    if (g.inv(idx) != idx) sym.push_back({{name, true}, g.inv(idx)});
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& [syl, s] : sym) {
      int y = img[s][x];
      if (!rep_elem.count(y)) {
        rep_elem[y] = g.mul(s, rep_elem[x]);
        queue.push_back(y);
      }
    }
  }
  // Schreier generators rep[s.x]^-1 s rep[x], then greedy reduction
  std::set<int> have;
  std::vector<std::pair<Word, int>> cands;
  for (const auto& [x, rx] : rep_elem)
    for (const auto& [syl, s] : sym) {
      int y = img[s][x];
      int sg = g.mul(g.mul(g.inv(rep_elem[y]), s), rx);
      if (sg == g.id() || have.count(sg)) continue;
      have.insert(sg);
      Word w = g.word(rep_elem[y]).inverse() * Word({syl}) * g.word(rx);
      cands.push_back({std::move(w), sg});
    }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Word> words;
  std::vector<int> kept;
  std::vector<int> closed{g.id()};
  for (const auto& [w, e] : cands) {
    if (g.contains(closed, e)) continue;
    kept.push_back(e);
    words.push_back(w);
    closed = g.subgroup_closure(kept);
  }
  return words;
}

DoubleCosetTable double_cosets(const FiniteGroup& g, const std::vector<int>& h1,
                               const std::vector<int>& h2) {
  DoubleCosetTable t;
  t.coset_of.assign(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (t.coset_of[x] >= 0) continue;
    int c = static_cast<int>(t.reps.size());
    t.reps.push_back(x);
    for (int a : h1)
      for (int b : h2) t.coset_of[g.mul(g.mul(a, x), b)] = c;
  }
  return t;
}

AlmostMaximalReport almost_maximal_check(const FiniteGroup& g, const std::vector<int>& h) {
  AlmostMaximalReport r;
  std::vector<int> hc = g.subgroup_closure(h);
  r.biindex = double_cosets(g, hc, hc).count();
  r.intermediate_subgroups = static_cast<int>(g.subgroups_containing(hc).size());
  if (r.biindex < 63 && (1LL << r.biindex) < r.intermediate_subgroups)
    fail(errk::ConditionViolated, "2^biindex bound violated");
  return r;
}

}  // namespace wrp
