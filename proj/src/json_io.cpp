#include "wrp/json_io.hpp"

#include <fstream>

namespace wrp {

void schema_fail(const std::string& path, const std::string& reason) {
  fail(errk::SchemaError, "at " + path + ": " + reason);
}

namespace {

long long get_int(const Json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number_integer())
    schema_fail(path + "." + key, "integer required");
  return j[key].get<long long>();
}

GroupSpec builtin_group(const std::string& name) {
  if (name == "sym3") return GroupSpec::sym(3);
  if (name == "sym4") return GroupSpec::sym(4);
  if (name == "sym5") return GroupSpec::sym(5);
  if (name == "c2") return GroupSpec::cyclic(2);
  if (name == "c3") return GroupSpec::cyclic(3);
  if (name == "c4") return GroupSpec::cyclic(4);
  if (name == "c6") return GroupSpec::cyclic(6);
  if (name == "c2xc2")
    return GroupSpec::perm(4, {{"u", GroupElement(FinitePerm{{1, 0, 2, 3}})},
                               {"v", GroupElement(FinitePerm{{0, 1, 3, 2}})}});
  if (name == "d4")
    return GroupSpec::perm(4, {{"r", GroupElement(FinitePerm{{1, 2, 3, 0}})},
                               {"s", GroupElement(FinitePerm{{0, 3, 2, 1}})}});
  if (name == "d6")
    return GroupSpec::perm(6, {{"r", GroupElement(FinitePerm{{1, 2, 3, 4, 5, 0}})},
                               {"s", GroupElement(FinitePerm{{0, 5, 4, 3, 2, 1}})}});
  if (name == "sym3xc2")
    return GroupSpec::perm(5, {{"a", GroupElement(FinitePerm{{1, 0, 2, 3, 4}})},
                               {"b", GroupElement(FinitePerm{{1, 2, 0, 3, 4}})},
                               {"c", GroupElement(FinitePerm{{0, 1, 2, 4, 3}})}});
  if (name == "c2wrsym3")
    // imprimitive action on 3 blocks of size 2
    return GroupSpec::perm(6, {{"t", GroupElement(FinitePerm{{1, 0, 2, 3, 4, 5}})},
                               {"a", GroupElement(FinitePerm{{2, 3, 0, 1, 4, 5}})},
                               {"b", GroupElement(FinitePerm{{2, 3, 4, 5, 0, 1}})}});
  if (name == "z") return GroupSpec::integers();
  if (name == "dinf") return GroupSpec::dihedral_inf();
  if (name == "thompson_f" || name == "f") return GroupSpec::thompson_f();
  if (name == "houghton3" || name == "h3") return GroupSpec::houghton(3);
  if (name == "houghton2" || name == "h2") return GroupSpec::houghton(2);
  fail(errk::SchemaError, "unknown builtin group '" + name + "'");
}

}  // namespace

GroupSpec parse_group(const Json& j, const std::string& path) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) schema_fail(path, "object with \"kind\" required");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "sym") return GroupSpec::sym(static_cast<int>(get_int(j, "n", path)));
  if (kind == "cyclic") return GroupSpec::cyclic(get_int(j, "n", path));
  if (kind == "int") return GroupSpec::integers();
  if (kind == "dihedral_inf") return GroupSpec::dihedral_inf();
  if (kind == "thompson_f") return GroupSpec::thompson_f();
  if (kind == "houghton") return GroupSpec::houghton(static_cast<int>(get_int(j, "rays", path)));
  if (kind == "perm") {
    int degree = static_cast<int>(get_int(j, "degree", path));
    if (!j.contains("generators") || !j["generators"].is_object())
      schema_fail(path + ".generators", "object name -> image array required");
    std::vector<NamedGen> gens;
    for (const auto& [name, arr] : j["generators"].items()) {
      if (!arr.is_array() || static_cast<int>(arr.size()) != degree)
        schema_fail(path + ".generators." + name, "image array of length degree required");
      FinitePerm p;
      for (const auto& x : arr) p.img.push_back(x.get<int>());
      std::vector<bool> seen(degree, false);
      for (int x : p.img) {
        if (x < 0 || x >= degree || seen[x])
          schema_fail(path + ".generators." + name, "not a permutation");
        seen[x] = true;
      }
      gens.push_back({name, GroupElement(std::move(p))});
    }
    return GroupSpec::perm(degree, std::move(gens));
  }
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array())
      schema_fail(path + ".factors", "array required");
    GroupSpec s;
    s.kind = GroupKind::Product;
    int i = 0;
    for (const auto& f : j["factors"])
      s.factors.push_back(parse_group(f, path + ".factors[" + std::to_string(i++) + "]"));
    return s;
  }
  schema_fail(path + ".kind", "unknown kind '" + kind + "'");
}

GroupSpec group_from_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '"')) return parse_group(Json::parse(arg));
  if (arg.find(".json") != std::string::npos) return parse_group(load_json_file(arg));
  return builtin_group(arg);
}

namespace {

DomainKind default_domain(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Sym:
    case GroupKind::Perm:
    case GroupKind::Cyclic: return DomainKind::FiniteSet;
    case GroupKind::Int:
    case GroupKind::DihedralInf: return DomainKind::IntLine;
    case GroupKind::ThompsonF: return DomainKind::Dyadics;
    case GroupKind::Houghton: return DomainKind::Omega;
    case GroupKind::Product: return DomainKind::Regular;
  }
  return DomainKind::Regular;
}

DomainKind parse_domain(const std::string& s, const std::string& path) {
  if (s == "natural") return DomainKind::FiniteSet;
  if (s == "line") return DomainKind::IntLine;
  if (s == "dyadic") return DomainKind::Dyadics;
  if (s == "omega") return DomainKind::Omega;
  if (s == "regular") return DomainKind::Regular;
  schema_fail(path, "unknown domain '" + s + "'");
}

}  // namespace

GroupAction parse_action(const Json& j, const std::string& path) {
  if (j.is_string()) {
    GroupSpec g = builtin_group(j.get<std::string>());
    return GroupAction(g, default_domain(g));
  }
  if (!j.is_object() || !j.contains("group")) schema_fail(path, "object with \"group\" required");
  GroupSpec g = parse_group(j["group"], path + ".group");
  DomainKind d = j.contains("domain") ? parse_domain(j["domain"].get<std::string>(), path + ".domain")
                                      : default_domain(g);
  return GroupAction(g, d);
}

GroupAction action_from_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return parse_action(Json::parse(arg));
  if (arg.find(".json") != std::string::npos) return parse_action(load_json_file(arg));
  GroupSpec g = builtin_group(arg);
  return GroupAction(g, default_domain(g));
}

namespace {

Dyadic parse_dyadic(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema_fail(path, "dyadic [mantissa, exponent] required");
  return Dyadic(j[0].get<long long>(), j[1].get<int>());
}

Json dyadic_to_json(const Dyadic& d) { return Json::array({d.num, d.exp}); }

}  // namespace

GroupElement parse_element(const Json& j, const GroupSpec& g, const std::string& path) {
  switch (g.kind) {
    case GroupKind::Sym:
    case GroupKind::Perm: {
      if (!j.is_array()) schema_fail(path, "permutation image array required");
      FinitePerm p;
      for (const auto& x : j) p.img.push_back(x.get<int>());
      if (static_cast<int>(p.img.size()) != g.degree) schema_fail(path, "degree mismatch");
      return GroupElement(std::move(p));
    }
    case GroupKind::Cyclic:
      if (!j.is_number_integer()) schema_fail(path, "residue integer required");
      return GroupElement(CyclicElem{j.get<long long>(), g.modulus});
    case GroupKind::Int:
      if (!j.is_number_integer()) schema_fail(path, "integer required");
      return GroupElement(IntElem{j.get<long long>()});
    case GroupKind::DihedralInf: {
      if (!j.is_object()) schema_fail(path, "{\"refl\": bool, \"shift\": int} required");
      return GroupElement(DihedralElem{j.value("refl", false), get_int(j, "shift", path)});
    }
    case GroupKind::ThompsonF: {
      if (!j.is_object() || !j.contains("breakpoints"))
        schema_fail(path, "{\"breakpoints\": [[x, y], ...]} required");
      std::vector<PLMap::Breakpoint> bp;
      int i = 0;
      for (const auto& pair : j["breakpoints"]) {
        std::string p2 = path + ".breakpoints[" + std::to_string(i++) + "]";
        if (!pair.is_array() || pair.size() != 2) schema_fail(p2, "[x, y] required");
        bp.emplace_back(parse_dyadic(pair[0], p2), parse_dyadic(pair[1], p2));
      }
      return GroupElement(PLMap(std::move(bp)));
    }
    case GroupKind::Houghton: {
      if (!j.is_object()) schema_fail(path, "houghton element object required");
      std::vector<long long> off, thr;
      for (const auto& x : j["offsets"]) off.push_back(x.get<long long>());
      for (const auto& x : j["thresholds"]) thr.push_back(x.get<long long>());
      std::vector<std::pair<OmegaPoint, OmegaPoint>> exc;
      if (j.contains("exceptions"))
        for (const auto& pr : j["exceptions"])
          exc.push_back({OmegaPoint{pr[0][0].get<int>(), pr[0][1].get<long long>()},
                         OmegaPoint{pr[1][0].get<int>(), pr[1][1].get<long long>()}});
      return GroupElement(HoughtonElement(std::move(off), std::move(thr), std::move(exc)));
    }
    case GroupKind::Product: {
      if (!j.is_array() || j.size() != g.factors.size())
        schema_fail(path, "factor element array required");
      DirectProductElem e;
      for (size_t i = 0; i < g.factors.size(); ++i)
        e.factors.push_back(
            parse_element(j[i], g.factors[i], path + "[" + std::to_string(i) + "]"));
      return GroupElement(std::move(e));
    }
  }
  schema_fail(path, "unreachable");
}

Json element_to_json(const GroupElement& e) {
  switch (e.kind()) {
    case ElemKind::FinitePerm: {
      Json a = Json::array();
      for (int x : e.as<FinitePerm>().img) a.push_back(x);
      return a;
    }
    case ElemKind::Int: return e.as<IntElem>().v;
    case ElemKind::Cyclic: return e.as<CyclicElem>().r;
    case ElemKind::Dihedral: {
      const auto& d = e.as<DihedralElem>();
      return Json{{"refl", d.refl}, {"shift", d.shift}};
    }
    case ElemKind::Thompson: {
      Json bps = Json::array();
      for (const auto& [x, y] : e.as<PLMap>().breakpoints())
        bps.push_back(Json::array({dyadic_to_json(x), dyadic_to_json(y)}));
      return Json{{"breakpoints", bps}};
    }
    case ElemKind::Houghton: {
      const auto& h = e.as<HoughtonElement>();
      Json exc = Json::array();
      for (const auto& [s, t] : h.exceptions())
        exc.push_back(Json::array(
            {Json::array({s.ray, s.k}), Json::array({t.ray, t.k})}));
      return Json{{"offsets", h.offsets()}, {"thresholds", h.thresholds()}, {"exceptions", exc}};
    }
    case ElemKind::DirectProduct: {
      Json a = Json::array();
      for (const auto& f : e.as<DirectProductElem>().factors) a.push_back(element_to_json(f));
      return a;
    }
  }
  return {};
}

Point parse_point(const Json& j, const GroupAction& a, const std::string& path) {
  switch (a.domain()) {
    case DomainKind::FiniteSet:
    case DomainKind::IntLine:
      if (!j.is_number_integer()) schema_fail(path, "integer point required");
      return Point(j.get<long long>());
    case DomainKind::Dyadics: return Point(parse_dyadic(j, path));
    case DomainKind::Omega:
      if (!j.is_array() || j.size() != 2) schema_fail(path, "[ray, k] required");
      return Point(OmegaPoint{j[0].get<int>(), j[1].get<long long>()});
    case DomainKind::Regular: return Point(parse_element(j, a.group(), path));
  }
  schema_fail(path, "unreachable");
}

Json point_to_json(const Point& p) {
  if (p.is<long long>()) return p.as<long long>();
  if (p.is<Dyadic>()) return dyadic_to_json(p.as<Dyadic>());
  if (p.is<OmegaPoint>()) {
    const auto& o = p.as<OmegaPoint>();
    return Json::array({o.ray, o.k});
  }
  return element_to_json(p.as<GroupElement>());
}

WreathElement parse_wreath_element(const Json& j, const WreathProduct& wr,
                                   const std::string& path) {
  if (!j.is_object() || !j.contains("f") || !j.contains("c"))
    schema_fail(path, "{\"f\": [[point, w-element], ...], \"c\": ...} required");
  WreathElement e = wr.identity();
  e.c = parse_element(j["c"], wr.action().group(), path + ".c");
  int i = 0;
  for (const auto& entry : j["f"]) {
    std::string p2 = path + ".f[" + std::to_string(i++) + "]";
    if (!entry.is_array() || entry.size() != 2) schema_fail(p2, "[point, element] required");
    Point x = parse_point(entry[0], wr.action(), p2);
    GroupElement w = parse_element(entry[1], wr.fiber_group(), p2);
    if (!w.is_identity()) e.f.emplace(std::move(x), std::move(w));
  }
  return e;
}

Json wreath_element_to_json(const WreathElement& e) {
  Json f = Json::array();
  for (const auto& [x, w] : e.f) f.push_back(Json::array({point_to_json(x), element_to_json(w)}));
  return Json{{"f", f}, {"c", element_to_json(e.c)}};
}

Word parse_word(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "word = array of syllables required");
  Word w;
  int i = 0;
  for (const auto& s : j) {
    std::string p2 = path + "[" + std::to_string(i++) + "]";
    if (s.is_string())
      w.push({s.get<std::string>(), false});
    else if (s.is_object() && s.contains("sym"))
      w.push({s["sym"].get<std::string>(), s.value("inv", false)});
    else
      schema_fail(p2, "syllable is \"X\" or {\"sym\": \"X\", \"inv\": true}");
  }
  return w;
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (const auto& s : w.syllables()) {
    if (s.inv)
      a.push_back(Json{{"sym", s.sym}, {"inv", true}});
    else
      a.push_back(s.sym);
  }
  return a;
}

GroupPresentation parse_presentation(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    schema_fail(path, "{\"generators\": [...], \"relators\": [...]} required");
  GroupPresentation p;
  for (const auto& g : j["generators"]) p.generators.push_back(g.get<std::string>());
  int i = 0;
  for (const auto& r : j["relators"]) {
    Word w = parse_word(r, path + ".relators[" + std::to_string(i++) + "]");
    for (const auto& s : w.syllables())
      if (std::find(p.generators.begin(), p.generators.end(), s.sym) == p.generators.end())
        schema_fail(path + ".relators", "relator symbol '" + s.sym + "' not in the generators");
    p.add(std::move(w), "input");
  }
  return p;
}

Json presentation_to_json(const GroupPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(word_to_json(r));
  Json out{{"generators", p.generators}, {"relators", rels}};
  if (!p.provenance.empty()) out["provenance"] = p.provenance;
  return out;
}

VertexGraph parse_graph(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("vertices"))
    schema_fail(path, "{\"vertices\": n, \"edges\": [...], \"labels\": [...]} required");
  int n = static_cast<int>(get_int(j, "vertices", path));
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) edges.push_back({e[0].get<int>(), e[1].get<int>()});
  std::vector<VertexLabel> labels;
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) labels.push_back(VertexLabel::parse(l.get<std::string>()));
  else
    labels.assign(n, VertexLabel::parse("C2"));
  return VertexGraph::make(n, std::move(edges), std::move(labels));
}

Json graph_to_json(const VertexGraph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
  Json labels = Json::array();
  for (const auto& l : g.labels) labels.push_back(l.name);
  return Json{{"vertices", g.n}, {"edges", edges}, {"labels", labels}};
}

std::pair<std::vector<VertexGraph>, std::vector<std::vector<int>>> parse_graph_sequence(
    const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("graphs")) schema_fail(path, "{\"graphs\": [...]} required");
  std::vector<VertexLabel> labels;
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) labels.push_back(VertexLabel::parse(l.get<std::string>()));
  std::vector<VertexGraph> graphs;
  int i = 0;
  for (const auto& gj : j["graphs"]) {
    std::string p2 = path + ".graphs[" + std::to_string(i++) + "]";
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : gj["edges"]) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    int n = labels.empty() ? static_cast<int>(get_int(j, "vertices", path)) : (int)labels.size();
    auto ls = labels.empty() ? std::vector<VertexLabel>(n, VertexLabel::parse("C2")) : labels;
    graphs.push_back(VertexGraph::make(n, std::move(edges), std::move(ls)));
  }
  std::vector<std::vector<int>> classes;
  if (j.contains("classes"))
    for (const auto& c : j["classes"]) {
      std::vector<int> cls;
      for (const auto& v : c) cls.push_back(v.get<int>());
      classes.push_back(std::move(cls));
    }
  else if (!graphs.empty()) {
    std::vector<int> all(graphs[0].n);
    for (int v = 0; v < graphs[0].n; ++v) all[v] = v;
    classes.push_back(std::move(all));
  }
  return {std::move(graphs), std::move(classes)};
}

FibreProductSpec parse_fibre_spec(const Json& j, size_t budget, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "fibre spec object required");
  for (const char* key : {"g1", "g2", "q", "p1", "p2"})
    if (!j.contains(key)) schema_fail(path, std::string("missing \"") + key + "\"");
  GroupSpec q_spec = parse_group(j["q"], path + ".q");
  FiniteGroup g1 = FiniteGroup::enumerate(parse_group(j["g1"], path + ".g1"));
  FiniteGroup g2 = FiniteGroup::enumerate(parse_group(j["g2"], path + ".g2"));
  FiniteGroup q = FiniteGroup::enumerate(q_spec);
  auto images = [&](const Json& pj, const std::string& p2) {
    std::map<std::string, int> m;
    for (const auto& [name, ej] : pj.items()) {
      GroupElement e = parse_element(ej, q_spec, p2 + "." + name);
      int idx = q.index_of(e);
      if (idx < 0) schema_fail(p2 + "." + name, "image not an element of Q");
      m[name] = idx;
    }
    return m;
  };
  return FibreProductSpec::make(std::move(g1), std::move(g2), std::move(q),
                                images(j["p1"], path + ".p1"), images(j["p2"], path + ".p2"),
                                budget);
}

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(errk::SchemaError, "cannot open " + file);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errk::SchemaError, "cannot parse " + file + ": " + e.what());
  }
  return j;
}

}  // namespace wrp
