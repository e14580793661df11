// wrp: command-line front door for the wreath-product toolkit.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wrp/json_io.hpp"

using namespace wrp;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
  std::string out_path;
  std::string format = "json";

  void emit(const Json& report) const { write(report.dump(2) + "\n"); }
  void write(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path);
      if (!f) fail(errk::SchemaError, "cannot write " + out_path);
      f << text;
    }
  }
};

Json report_skeleton(const std::string& command, Json params) {
  return Json{{"tool", "wrp"}, {"version", kVersion}, {"command", command},
              {"params", std::move(params)}};
}

Json element_line(const WreathElement& e, long long len) {
  Json j = wreath_element_to_json(e);
  j["len"] = len;
  return j;
}

GroupElement parse_element_arg(const std::string& arg, const GroupSpec& g,
                               const std::string& what) {
  Json j = arg.find(".json") != std::string::npos ? load_json_file(arg) : Json::parse(arg);
  return parse_element(j, g, what);
}

std::vector<std::pair<Syllable, GroupElement>> action_generators(const GroupAction& a) {
  return a.group().symmetric_generators();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in permutational wreath products and double coset decompositions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  long long window_bound = 32;
  int maxexp = 6;
  unsigned long long seed = 0;
  app.add_option("--out", out.out_path, "output file (default: stdout)");
  app.add_option("--format", out.format, "json | csv | pretty")->default_val("json");
  app.add_option("--window", window_bound, "truncation bound for line / ray domains");
  app.add_option("--maxexp", maxexp, "max dyadic exponent for the Thompson window");
  app.add_option("--seed", seed, "seed echoed into the report (reproducibility bookkeeping)");

  auto* c_len = app.add_subcommand("wreath-len", "geodesic word length of a wreath element");
  std::string len_w = "c2", len_g = "z", len_elem;
  int len_budget = -1;
  c_len->add_option("--w", len_w, "fiber group W");
  c_len->add_option("--g", len_g, "base action of G on X");
  c_len->add_option("--elem", len_elem, "element JSON or file")->required();
  c_len->add_option("--budget", len_budget, "covering-walk certification budget");

  auto* c_ball = app.add_subcommand("ball", "enumerate a ball of W wr_X G");
  std::string ball_w = "c2", ball_g = "z";
  int ball_radius = 4;
  c_ball->add_option("--w", ball_w, "fiber group W");
  c_ball->add_option("--g", ball_g, "base action of G on X");
  c_ball->add_option("--radius", ball_radius, "ball radius")->check(CLI::NonNegativeNumber);

  auto* c_bilip = app.add_subcommand("bilip", "Z vs D_inf fiber distortion over the same base");
  std::string bilip_g = "z";
  int bilip_radius = 4;
  c_bilip->add_option("--g", bilip_g, "base action of G on X");
  c_bilip->add_option("--radius", bilip_radius, "ball radius on the Z-fiber side")->check(CLI::NonNegativeNumber);

  auto* c_kwalk = app.add_subcommand("kwalk", "covering-walk length K(F, c)");
  std::string kwalk_action = "z", kwalk_targets = "[]", kwalk_terminal;
  int kwalk_radius = 4, kwalk_budget = -1;
  c_kwalk->add_option("--action", kwalk_action, "action descriptor");
  c_kwalk->add_option("--targets", kwalk_targets, "JSON array of points F");
  c_kwalk->add_option("--terminal", kwalk_terminal, "terminal element c (JSON)")->required();
  c_kwalk->add_option("--radius", kwalk_radius, "fragment exploration radius")->check(CLI::NonNegativeNumber);
  c_kwalk->add_option("--budget", kwalk_budget, "walk budget (default: radius)");

  auto* c_orbits = app.add_subcommand("orbits", "orbits on the window, optionally on pairs");
  std::string orbits_action = "sym3", orbits_classifier;
  bool orbits_pairs = false;
  c_orbits->add_option("--action", orbits_action, "action descriptor");
  c_orbits->add_flag("--pairs", orbits_pairs, "partition window^2 instead of the window");
  c_orbits->add_option("--classifier", orbits_classifier, "sign | equality");

  auto* c_dc = app.add_subcommand("dcosets", "double cosets H\\G/H of a finite group");
  std::string dc_group = "sym3";
  int dc_stab = 0;
  bool dc_lattice = false;
  c_dc->add_option("--group", dc_group, "finite group descriptor");
  c_dc->add_option("--stab", dc_stab, "H = stabilizer of this point (natural action)");
  c_dc->add_flag("--lattice", dc_lattice, "also count subgroups containing H");

  auto* c_edges = app.add_subcommand("edges", "edge set from a double-coset family and back");
  std::string edges_group = "sym3", edges_v;
  c_edges->add_option("--group", edges_group, "finite group acting naturally");
  c_edges
      ->add_option("--v", edges_v,
                   "family file: {\"reps\":[{\"i\":..,\"j\":..,\"elements\":[...]}]}")
      ->required();

  auto* c_present = app.add_subcommand("present", "synthesize and verify a wreath presentation");
  std::string present_w = "c2", present_g = "sym3", present_file;
  int present_base = 0;
  c_present->add_option("--w", present_w, "fiber group W (cyclic)");
  c_present->add_option("--g", present_g, "finite base group, natural action");
  c_present->add_option("--base", present_base, "base point whose stabilizer is H");
  c_present->add_option("--pres-out", present_file, "write the presentation JSON here");

  auto* c_pres1 = app.add_subcommand("pres1", "truncated one-orbit relator schema");
  std::string pres1_w = "c2", pres1_action = "z", pres1_stab = "[]";
  int pres1_radius = 4;
  c_pres1->add_option("--w", pres1_w, "fiber group W");
  c_pres1->add_option("--action", pres1_action, "action descriptor");
  c_pres1->add_option("--stab-gens", pres1_stab, "JSON array of stabilizer generator words");
  c_pres1->add_option("--radius", pres1_radius, "truncation radius")->check(CLI::NonNegativeNumber);

  auto* c_graph = app.add_subcommand("graphprod", "free-subgroup-in-kernel criterion");
  std::string graph_file;
  c_graph->add_option("--graph", graph_file, "graph JSON file")->required();

  auto* c_stab = app.add_subcommand("stabilize", "graph sequence stabilization detector");
  std::string stab_file;
  c_stab->add_option("--seq", stab_file, "sequence JSON file")->required();

  auto* c_fibre = app.add_subcommand("fibre", "fibre product lattice and biindex reports");
  std::string fibre_file;
  long long fibre_budget = 2500;
  c_fibre->add_option("--spec", fibre_file, "fibre spec JSON file")->required();
  c_fibre->add_option("--budget", fibre_budget, "max |G1 x G2|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Window win{window_bound, maxexp};
  try {
    if (*c_len) {
      WreathProduct wr(group_from_arg(len_w), action_from_arg(len_g), win);
      Json ej = len_elem.find(".json") != std::string::npos ? load_json_file(len_elem)
                                                            : Json::parse(len_elem);
      WreathElement e = parse_wreath_element(ej, wr);
      long long len = wr.word_length(e, len_budget);
      Json rep = report_skeleton(
          "wreath-len", {{"w", len_w}, {"g", len_g}, {"elem", ej}, {"budget", len_budget},
                         {"window", window_bound}, {"maxexp", maxexp}, {"seed", seed}});
      rep["result"] = {{"len", len}};
      out.emit(rep);
    } else if (*c_ball) {
      WreathProduct wr(group_from_arg(ball_w), action_from_arg(ball_g), win);
      auto ball = wr.ball(ball_radius);
      Json rep = report_skeleton("ball", {{"w", ball_w}, {"g", ball_g},
                                          {"radius", ball_radius}, {"window", window_bound},
                                          {"maxexp", maxexp}, {"seed", seed}});
      std::vector<long long> sizes(ball_radius + 1, 0);
      for (const auto& [e, d] : ball) ++sizes[d];
      for (int r = 1; r <= ball_radius; ++r) sizes[r] += sizes[r - 1];
      rep["result"] = {{"size", ball.size()}, {"sizes_by_radius", sizes}};
      if (out.format == "csv") {
        std::string csv = "len,c,f\n";
        for (const auto& [e, d] : ball)
          csv += std::to_string(d) + "," + element_to_json(e.c).dump() + ",\"" +
                 Json(wreath_element_to_json(e)["f"]).dump() + "\"\n";
        out.write(csv);
      } else if (out.format == "pretty") {
        std::string txt = "|B(r)| = ";
        for (long long s : sizes) txt += std::to_string(s) + " ";
        txt += "\n";
        for (const auto& [e, d] : ball) txt += std::to_string(d) + "  " + e.str() + "\n";
        out.write(txt);
      } else {
        // JSON-lines dump: the report header, then one element per line
        std::string text = rep.dump() + "\n";
        for (const auto& [e, d] : ball) text += element_line(e, d).dump() + "\n";
        out.write(text);
      }
    } else if (*c_bilip) {
      WreathProduct src(GroupSpec::integers(), action_from_arg(bilip_g), win);
      WreathProduct dst(GroupSpec::dihedral_inf(), action_from_arg(bilip_g), win);
      auto rep0 = src.bilipschitz_compare(
          src.ball(bilip_radius),
          [](const GroupElement& n) {
            return GroupElement(DihedralElem{false, -n.as<IntElem>().v});
          },
          dst, 2);
      Json rep = report_skeleton("bilip", {{"g", bilip_g}, {"radius", bilip_radius},
                                           {"window", window_bound}, {"seed", seed}});
      rep["result"] = {{"compared", rep0.compared},
                       {"identity_pairs", rep0.identity_pairs},
                       {"max_ratio", {rep0.max_num, rep0.max_den}},
                       {"min_ratio", {rep0.min_num, rep0.min_den}},
                       {"declared_L", rep0.declared_l},
                       {"within_bounds", rep0.within_bounds()}};
      out.emit(rep);
    } else if (*c_kwalk) {
      GroupAction action = action_from_arg(kwalk_action);
      auto frag = explore(action, action_generators(action), kwalk_radius, win);
      CoverWalkProblem p;
      for (const auto& t : Json::parse(kwalk_targets))
        p.targets.push_back(parse_point(t, action, "targets"));
      p.terminal = parse_element_arg(kwalk_terminal, action.group(), "terminal");
      p.budget = kwalk_budget;
      int k = cover_walk_length(p, frag, action);
      Json rep = report_skeleton(
          "kwalk", {{"action", kwalk_action}, {"targets", Json::parse(kwalk_targets)},
                    {"radius", kwalk_radius}, {"budget", kwalk_budget}, {"seed", seed}});
      rep["result"] = {{"k", k}};
      out.emit(rep);
    } else if (*c_orbits) {
      GroupAction action = action_from_arg(orbits_action);
      Json rep = report_skeleton(
          "orbits", {{"action", orbits_action}, {"pairs", orbits_pairs},
                     {"classifier", orbits_classifier}, {"window", window_bound},
                     {"maxexp", maxexp}, {"seed", seed}});
      if (orbits_pairs) {
        std::optional<InvariantClassifier> cls;
        if (orbits_classifier == "sign")
          cls = sign_classifier();
        else if (orbits_classifier == "equality")
          cls = equality_classifier();
        else if (!orbits_classifier.empty())
          fail(errk::SchemaError, "unknown classifier '" + orbits_classifier + "'");
        auto r = orbits_on_pairs(action, action_generators(action), win, cls);
        rep["result"] = {{"pair_orbits", r.pair_orbit_classes},
                         {"bfs_classes", r.bfs_classes},
                         {"label_classes", r.label_classes},
                         {"labels", r.label_counts},
                         {"boundary_flagged", r.boundary_flagged}};
      } else {
        auto r = orbits_on_set(action, action_generators(action), win);
        Json flags = Json::array();
        for (size_t i = 0; i < r.components.size(); ++i)
          if (r.touches_boundary[i])
            flags.push_back("component " + std::to_string(i) + " touches the window boundary");
        Json sizes = Json::array();
        for (const auto& comp : r.components) sizes.push_back(comp.size());
        rep["result"] = {{"orbits", r.count()}, {"component_sizes", sizes}, {"flags", flags}};
      }
      out.emit(rep);
    } else if (*c_dc) {
      FiniteGroup g = FiniteGroup::enumerate(group_from_arg(dc_group));
      int npts = g.element(0).as<FinitePerm>().degree();
      FiniteAction nat = FiniteAction::natural(g, npts);
      auto h = nat.stabilizer(dc_stab);
      auto t = double_cosets(g, h, h);
      Json rep = report_skeleton("dcosets", {{"group", dc_group}, {"stab", dc_stab},
                                             {"lattice", dc_lattice}, {"seed", seed}});
      rep["result"] = {{"double_cosets", t.count()}, {"group_order", g.size()},
                       {"stabilizer_order", h.size()}};
      if (dc_lattice) {
        auto am = almost_maximal_check(g, h);
        rep["result"]["intermediate_subgroups"] = am.intermediate_subgroups;
        rep["result"]["biindex"] = am.biindex;
      }
      out.emit(rep);
    } else if (*c_edges) {
      GroupSpec gspec = group_from_arg(edges_group);
      FiniteGroup g = FiniteGroup::enumerate(gspec);
      int npts = g.element(0).as<FinitePerm>().degree();
      FinitePointAction inst = FinitePointAction::make(g, npts);
      Json vj = load_json_file(edges_v);
      CosetFamilyInput v;
      for (const auto& entry : vj["reps"]) {
        int i = entry["i"].get<int>(), jj = entry["j"].get<int>();
        for (const auto& ej : entry["elements"]) {
          GroupElement e = parse_element(ej, gspec, "v.elements");
          int idx = g.index_of(e);
          if (idx < 0) fail(errk::SchemaError, "element not in the group: " + e.str());
          v.reps[{i, jj}].push_back(idx);
        }
      }
      EdgeSet e = edges_from_cosets(inst, v);
      auto b = cosets_from_edges(inst, e);
      CosetFamilyInput v2;
      for (const auto& [ij, elems] : b) v2.reps[ij] = elems;
      bool roundtrip = edges_from_cosets(inst, v2) == e;
      Json edges_json = Json::array();
      for (const auto& [x, y] : e) edges_json.push_back(Json::array({x, y}));
      Json rep = report_skeleton("edges", {{"group", edges_group}, {"v", edges_v}, {"seed", seed}});
      rep["result"] = {{"edges", edges_json}, {"edge_count", e.size()}, {"roundtrip", roundtrip}};
      out.emit(rep);
    } else if (*c_present) {
      ConcreteWreathInstance ci;
      GroupSpec gspec = group_from_arg(present_g);
      GroupSpec wspec = group_from_arg(present_w);
      ci.g = FiniteGroup::enumerate(gspec);
      int npts = ci.g.element(0).as<FinitePerm>().degree();
      ci.inst = FinitePointAction::make(ci.g, npts);
      ci.w = wspec;
      if (present_g == "sym3")
        ci.g_pres = sym_presentation(3);
      else if (present_g == "sym4")
        ci.g_pres = sym_presentation(4);
      else if (present_g == "d4")
        ci.g_pres = d4_presentation();
      else
        fail(errk::Unsupported, "present needs a built-in presentation: sym3 | sym4 | d4");
      if (wspec.kind != GroupKind::Cyclic)
        fail(errk::Unsupported, "present currently takes a cyclic fiber (c2, c3, ...)");
      ci.w_pres = cyclic_presentation(wspec.modulus);
      ci.base_point = present_base;
      SynthesisCheck check = synthesize_and_verify(ci);
      Json rep = report_skeleton("present", {{"w", present_w}, {"g", present_g},
                                             {"base", present_base}, {"seed", seed}});
      rep["result"] = {{"relators", check.presentation.relators.size()},
                       {"relators_verified", check.relators.all_passed()},
                       {"generated_order", check.generated_order},
                       {"expected_order", check.expected_order},
                       {"full_wreath_generated", check.full_wreath_generated()}};
      if (!present_file.empty()) {
        std::ofstream f(present_file);
        f << presentation_to_json(check.presentation).dump(2) << "\n";
      }
      if (out.format == "pretty")
        out.write(check.presentation.str() + "\n");
      else
        out.emit(rep);
    } else if (*c_pres1) {
      GroupAction action = action_from_arg(pres1_action);
      std::vector<Word> stab;
      int i = 0;
      for (const auto& wj : Json::parse(pres1_stab))
        stab.push_back(parse_word(wj, "stab-gens[" + std::to_string(i++) + "]"));
      GroupSpec wspec = group_from_arg(pres1_w);
      if (wspec.kind != GroupKind::Cyclic)
        fail(errk::Unsupported, "pres1 currently takes a cyclic fiber");
      GroupPresentation p =
          truncated_pres1(action, cyclic_presentation(wspec.modulus), stab, pres1_radius, win);
      Json rep = report_skeleton("pres1", {{"w", pres1_w}, {"action", pres1_action},
                                           {"radius", pres1_radius}, {"seed", seed}});
      size_t conj = 0;
      for (const auto& tag : p.provenance)
        if (tag.rfind("pres1-conj", 0) == 0) ++conj;
      rep["result"] = {{"relators", p.relators.size()}, {"conjugation_relators", conj},
                       {"presentation", presentation_to_json(p)}};
      out.emit(rep);
    } else if (*c_graph) {
      VertexGraph g = parse_graph(load_json_file(graph_file));
      auto v = kernel_free_subgroup_criterion(g);
      Json rep = report_skeleton("graphprod", {{"graph", graph_file}, {"seed", seed}});
      if (!v.contains_f2) {
        rep["result"] = {{"verdict", "NoFreeSubgroup"}};
      } else {
        rep["result"] = {{"verdict", "ContainsF2"},
                         {"case", v.proof_case == KernelCase::CaseA ? "a" : "b"},
                         {"component", v.component},
                         {"witness", {v.witness.first.str(), v.witness.second.str()}},
                         {"witness_ball",
                          fp_ball_counts({v.witness.first, v.witness.second}, g.labels, 6)}};
      }
      out.emit(rep);
    } else if (*c_stab) {
      auto [graphs, classes] = parse_graph_sequence(load_json_file(stab_file));
      auto r = detect_stabilization(graphs, classes);
      Json rep = report_skeleton("stabilize", {{"seq", stab_file}, {"seed", seed}});
      rep["result"] = {{"stabilized", r.stabilized}, {"index", r.index},
                       {"class_degrees", r.class_degrees}};
      if (!r.stabilized) rep["result"]["status"] = "NotYet";
      out.emit(rep);
    } else if (*c_fibre) {
      FibreProductSpec spec =
          parse_fibre_spec(load_json_file(fibre_file), static_cast<size_t>(fibre_budget));
      auto h = fibre_product(spec);
      auto lat = verify_lattice_bijection(spec);
      auto bi = biindex_vs_conjclasses(spec);
      Json rep = report_skeleton("fibre", {{"spec", fibre_file}, {"budget", fibre_budget},
                                           {"seed", seed}});
      rep["result"] = {{"fibre_product_order", h.size()},
                       {"intermediate_subgroups", lat.intermediate_subgroups},
                       {"normal_subgroups_of_q", lat.normal_subgroups_of_q},
                       {"lattice_bijection", lat.ok()},
                       {"double_cosets", bi.double_cosets},
                       {"conjugacy_classes_of_q", bi.conjugacy_classes_of_q},
                       {"biindex_matches", bi.ok()}};
      out.emit(rep);
    }
  } catch (const Error& e) {
    Json err{{"tool", "wrp"}, {"version", kVersion},
             {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"tool", "wrp"}, {"version", kVersion},
             {"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
