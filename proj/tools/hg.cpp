// hg: command-line front end for the hurwitz_groups library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hg/characters.hpp"
#include "hg/disk.hpp"
#include "hg/io.hpp"
#include "hg/local_action.hpp"
#include "hg/obstruction.hpp"
#include "hg/quaternion.hpp"
#include "hg/subgroups.hpp"
#include "hg/tree.hpp"

namespace {

using hg::io::Json;

enum Exit { kOk = 0, kPrecision = 2, kObstruction = 3, kParse = 64, kDomain = 65 };

struct Config {
  std::string format = "text";
  int threads = 0;
  int precision = 0;
  int verbosity = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_json(const std::string &command, Json body) {
  Json out{{"schema", hg::io::kSchema}, {"command", command}};
  for (auto it = body.begin(); it != body.end(); ++it)
    out[it.key()] = it.value();
  std::cout << out.dump(2) << "\n";
}

std::string cf_text(const hg::ClassFunction &f) {
  const auto &g = f.group();
  std::ostringstream os;
  for (int c = 0; c < g.class_count(); ++c)
    os << (c ? ", " : "") << g.element_name(g.class_rep(c)) << ": " << f[c].str();
  return os.str();
}

std::string yes(bool b) { return b ? "pass" : "FAIL"; }

void require_format(const Config &cfg, std::initializer_list<const char *> allowed) {
  for (const char *a : allowed)
    if (cfg.format == a)
      return;
  throw UsageError("--format " + cfg.format + " is not available for this command");
}

Json group_file_ref(const std::string &path) {
  Json j = hg::io::read_json_file(path);
  return j.contains("group") ? j.at("group") : j;
}

// group

int cmd_group_info(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  auto base = std::filesystem::path(path).parent_path();
  hg::FiniteGroup g = hg::io::read_group(group_file_ref(path), base);
  auto subs = hg::subgroup_classes(g);
  if (cfg.format == "json") {
    Json classes = Json::array(), sj = Json::array();
    for (int c = 0; c < g.class_count(); ++c)
      classes.push_back(Json{{"rep", g.element_name(g.class_rep(c))},
                             {"size", g.class_size(c)},
                             {"order", g.element_order(g.class_rep(c))}});
    for (const auto &s : subs)
      sj.push_back(Json{{"id", s.id}, {"name", s.name}, {"order", s.order}, {"conjugates", s.conjugates},
                        {"cyclic", s.cyclic}, {"normal", s.normal}});
    emit_json("group info", Json{{"label", g.label()},
                                 {"order", g.order()},
                                 {"exponent", g.exponent()},
                                 {"abelian", g.is_abelian()},
                                 {"generators", g.generator_names()},
                                 {"classes", classes},
                                 {"subgroup_classes", sj}});
    return kOk;
  }
  std::cout << "group " << g.label() << ": order " << g.order() << ", exponent " << g.exponent()
            << (g.is_abelian() ? ", abelian" : "") << "\n";
  std::cout << "conjugacy classes (" << g.class_count() << "):\n";
  for (int c = 0; c < g.class_count(); ++c)
    std::cout << "  " << g.element_name(g.class_rep(c)) << "  size " << g.class_size(c) << "  order "
              << g.element_order(g.class_rep(c)) << "\n";
  std::cout << "subgroup classes (" << subs.size() << "):\n";
  for (const auto &s : subs)
    std::cout << "  [" << s.id << "] " << s.name << "  order " << s.order << "  conjugates " << s.conjugates
              << (s.cyclic ? "  cyclic" : "") << (s.normal ? "  normal" : "") << "\n";
  return kOk;
}

// char

int cmd_char_table(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  hg::FiniteGroup g = hg::io::read_group(group_file_ref(path), std::filesystem::path(path).parent_path());
  const auto &tab = hg::character_table(g);
  if (cfg.format == "json") {
    Json irr = Json::array();
    for (const auto &chi : tab.irreducibles)
      irr.push_back(hg::io::class_function_json(chi));
    emit_json("char table", Json{{"order", g.order()}, {"irreducibles", irr}});
    return kOk;
  }
  std::cout << "character table of " << g.label() << " (" << tab.irreducibles.size() << " irreducibles)\n";
  for (std::size_t i = 0; i < tab.irreducibles.size(); ++i)
    std::cout << "  chi_" << i << ": " << cf_text(tab.irreducibles[i]) << "\n";
  return kOk;
}

int cmd_char_pair(const Config &cfg, const std::string &a, const std::string &b) {
  require_format(cfg, {"text", "json"});
  auto fa = hg::io::read_character_file(a);
  Json jb = hg::io::read_json_file(b);
  hg::ClassFunction cb = hg::io::read_class_function(fa.group, jb);
  hg::Cyclotomic v = hg::inner_product(fa.character, cb);
  if (cfg.format == "json")
    emit_json("char pair", Json{{"value", hg::io::to_json(v)}});
  else
    std::cout << "<" << a << ", " << b << "> = " << v.str() << "\n";
  return kOk;
}

// tree

int cmd_tree_validate(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json", "dot"});
  auto tf = hg::io::read_tree_file(path);
  if (cfg.format == "dot") {
    std::cout << hg::tree_dot(tf.tree);
    return kOk;
  }
  auto rep = hg::validate(tf.tree);
  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto &c : rep.checks)
      checks.push_back(Json{{"axiom", c.name}, {"pass", c.pass}, {"failures", c.failures}});
    Json artin = Json::array();
    for (const auto &a : tf.tree.artin)
      artin.push_back(hg::io::class_function_json(a));
    Json depth = Json::array();
    for (const auto &d : tf.tree.depth)
      depth.push_back(hg::io::class_function_json(d));
    emit_json("tree validate", Json{{"ok", rep.ok()},
                                    {"checks", checks},
                                    {"h3_forms_agree", rep.h3_forms_agree},
                                    {"artin_character", hg::io::class_function_json(tf.tree.artin_character())},
                                    {"edge_artin", artin},
                                    {"vertex_depth", depth},
                                    {"canonical_code", hg::canonical_code(tf.tree)}});
  } else {
    for (const auto &c : rep.checks) {
      std::cout << c.name << ": " << yes(c.pass) << "\n";
      for (const auto &f : c.failures)
        std::cout << "  " << f << "\n";
    }
    std::cout << "a_T = " << cf_text(tf.tree.artin_character()) << "\n";
    std::cout << "delta_T = " << cf_text(tf.tree.depth_character()) << "\n";
  }
  if (!rep.ok()) {
    for (const auto &c : rep.checks)
      if (!c.pass)
        std::cerr << "hg tree validate: axiom " << c.name << " violated: " << c.failures.front() << "\n";
    return kDomain;
  }
  return kOk;
}

std::vector<int> leaf_indices(const hg::HurwitzTree &t, const std::vector<long> &ids) {
  std::vector<int> out;
  for (long id : ids) {
    int v = t.tree.index_of(id);
    if (!t.tree.is_leaf(v))
      throw hg::TreeError("vertex v" + std::to_string(id) + " is not a leaf");
    out.push_back(v);
  }
  return out;
}

int cmd_tree_density(const Config &cfg, const std::string &path, long at, std::vector<long> set) {
  require_format(cfg, {"text", "json"});
  auto tf = hg::io::read_tree_file(path);
  const auto &t = tf.tree;
  int b = leaf_indices(t, {at}).front();
  std::vector<int> a = set.empty() ? t.tree.leaves() : leaf_indices(t, set);
  hg::Rational d = hg::density(t, a, b);
  hg::Rational path_form = hg::density_path_formula(t, a, b);
  Json pairs = Json::array();
  for (int other : t.tree.leaves())
    if (other != b)
      pairs.push_back(Json{{"leaf", t.tree.ids[other]}, {"inverse_distance", hg::inverse_distance(t, b, other).str()}});
  if (cfg.format == "json") {
    emit_json("tree density", Json{{"at", at}, {"density", d.str()}, {"path_formula", path_form.str()},
                                   {"agree", d == path_form}, {"inverse_distances", pairs}});
  } else {
    std::cout << "d(A, v" << at << ") = " << d.str() << "  (path formula " << path_form.str() << ")\n";
    for (const auto &p : pairs)
      std::cout << "  d(v" << at << ", v" << p["leaf"].get<long>() << ") = " << p["inverse_distance"].get<std::string>()
                << "\n";
  }
  return kOk;
}

int cmd_tree_lift(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json", "dot"});
  auto tf = hg::io::read_tree_file(path);
  auto lift = hg::equivariant_lift(tf.tree);
  if (cfg.format == "json") {
    Json vs = Json::array(), es = Json::array();
    for (const auto &v : lift.vertices)
      vs.push_back(Json{{"base", tf.tree.tree.ids[v.base]},
                        {"coset", tf.tree.group.element_name(v.coset_rep)},
                        {"stabilizer", hg::subgroup_name(tf.tree.group, v.stabilizer)}});
    for (const auto &[a, b] : lift.edges)
      es.push_back(Json{a, b});
    emit_json("tree lift", Json{{"vertices", vs}, {"edges", es}, {"quotient_matches", lift.quotient_matches}});
  } else {
    std::cout << hg::lifted_dot(tf.tree, lift);
  }
  return lift.quotient_matches ? kOk : kDomain;
}

// disk

hg::DiskAction load_action(const Config &cfg, const std::string &path) {
  auto act = hg::io::read_action_file(path);
  if (cfg.precision > 0 && act.kind() == hg::DiskAction::Kind::Series)
    act = act.with_precision(cfg.precision);
  return act;
}

int cmd_disk_depth(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  auto act = load_action(cfg, path);
  auto d = hg::depth_character(act);
  bool positive = hg::is_positive_rational(d);
  if (cfg.format == "json")
    emit_json("disk depth", Json{{"depth", hg::io::class_function_json(d)}, {"positive_rational", positive}});
  else
    std::cout << "delta = " << cf_text(d) << "\nR+(G,Q) membership: " << yes(positive) << "\n";
  return kOk;
}

int cmd_disk_artin(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  auto act = load_action(cfg, path);
  auto r = hg::artin_character(act);
  const auto &g = act.group();
  Json orbits = Json::array();
  for (const auto &o : r.orbits) {
    Json pts = Json::array();
    for (const auto &fp : o)
      pts.push_back(Json{{"z", hg::io::to_json(fp.z)}, {"stabilizer", hg::subgroup_name(g, fp.stabilizer)}});
    orbits.push_back(pts);
  }
  if (cfg.format == "json") {
    Json body{{"artin", hg::io::class_function_json(r.artin)},
              {"fixed_points_computed", r.fixed_points_computed},
              {"orbits", orbits},
              {"notice", r.notice}};
    if (r.matches_orbit_sum)
      body["matches_orbit_sum"] = *r.matches_orbit_sum;
    emit_json("disk artin", body);
  } else {
    std::cout << "a = " << cf_text(r.artin) << "\n";
    if (r.fixed_points_computed) {
      std::cout << r.orbits.size() << " fixed-point orbit(s)\n";
      for (const auto &o : r.orbits)
        std::cout << "  " << o.size() << " point(s), stabilizer " << hg::subgroup_name(g, o.front().stabilizer) << "\n";
    }
    if (!r.notice.empty())
      std::cout << "notice: " << r.notice << "\n";
    if (r.matches_orbit_sum)
      std::cout << "a = sum of u*_{G_b} over orbits: " << yes(*r.matches_orbit_sum) << "\n";
  }
  return kOk;
}

int cmd_disk_breaks(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  auto act = load_action(cfg, path);
  auto b = hg::break_decomposition(act);
  const auto &g = act.group();
  if (cfg.format == "json") {
    Json br = Json::array();
    for (const auto &x : b.breaks)
      br.push_back(Json{{"h", x.h.str()}, {"subgroup", hg::subgroup_name(g, x.subgroup)}, {"lambda", x.lambda.str()}});
    emit_json("disk breaks", Json{{"breaks", br},
                                  {"reassembled", hg::io::class_function_json(b.reassembled)},
                                  {"matches_depth", b.matches_depth}});
  } else {
    for (const auto &x : b.breaks)
      std::cout << "h = " << x.h.str() << "  G_h = " << hg::subgroup_name(g, x.subgroup) << "  lambda = " << x.lambda.str()
                << "\n";
    if (b.breaks.empty())
      std::cout << "no breaks\n";
    std::cout << "reassembled = " << cf_text(b.reassembled) << "\nmatches depth character: " << yes(b.matches_depth)
              << "\n";
  }
  return kOk;
}

int cmd_disk_shift(const Config &cfg, const std::string &path, const std::string &eps, const std::string &center) {
  require_format(cfg, {"text", "json"});
  auto act = load_action(cfg, path);
  hg::Rational e;
  hg::Cyclotomic c;
  try {
    e = hg::Rational::parse(eps);
    c = hg::parse_cyclotomic(center);
  } catch (const std::exception &ex) {
    throw hg::io::ParseError(std::string("disk shift: ") + ex.what());
  }
  auto r = hg::boundary_shift_check(act, e, c);
  if (cfg.format == "json") {
    emit_json("disk shift", Json{{"eps", r.eps.str()},
                                 {"center", hg::io::to_json(r.center)},
                                 {"depth_before", hg::io::class_function_json(r.depth_before)},
                                 {"depth_after", hg::io::class_function_json(r.depth_after)},
                                 {"s", hg::io::class_function_json(r.s)},
                                 {"predicted", hg::io::class_function_json(r.predicted)},
                                 {"holds", r.holds}});
  } else {
    std::cout << "delta_Y      = " << cf_text(r.depth_before) << "\n";
    std::cout << "s_Y          = " << cf_text(r.s) << "\n";
    std::cout << "delta_D      = " << cf_text(r.depth_after) << "\n";
    std::cout << "delta_Y + |G| eps s_Y = " << cf_text(r.predicted) << "\n";
    std::cout << "identity: " << yes(r.holds) << "\n";
  }
  return r.holds ? kOk : kDomain;
}

// obstruct

std::string decomposition_text(const hg::FiniteGroup &g, const std::vector<int> &d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? ", " : "") + hg::subgroup_class(g, d[i]).name;
  return s + "}";
}

int cmd_obstruct_bertin(const Config &cfg, const std::string &path) {
  require_format(cfg, {"text", "json"});
  auto cf = hg::io::read_character_file(path);
  auto decs = hg::bertin_check(cf.character);
  if (cfg.format == "json") {
    Json dj = Json::array();
    for (const auto &d : decs) {
      Json names = Json::array();
      for (int c : d)
        names.push_back(hg::subgroup_class(cf.group, c).name);
      dj.push_back(names);
    }
    emit_json("obstruct bertin", Json{{"vanishes", !decs.empty()}, {"decompositions", dj}});
  } else {
    if (decs.empty())
      std::cout << "Bertin obstruction: nonvanishing (no decomposition into induced augmentation characters)\n";
    for (const auto &d : decs)
      std::cout << "a = sum of u* over " << decomposition_text(cf.group, d) << "\n";
  }
  return decs.empty() ? kObstruction : kOk;
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << content;
}

void print_report_text(const hg::FiniteGroup &g, const hg::ObstructionReport &r, int verbosity) {
  std::cout << "verdict: " << hg::to_string(r.verdict) << "\n";
  std::cout << "leaf decompositions: " << r.decompositions.size() << "\n";
  for (const auto &d : r.decompositions)
    std::cout << "  " << decomposition_text(g, d) << "\n";
  std::cout << "candidate trees: " << r.topology_count << ", LPs solved: " << r.lp_solved
            << ", pivots: " << r.lp_pivots << "\n";
  std::cout << "certificates verified: " << yes(r.all_certificates_verified) << "\n";
  if (verbosity > 0)
    for (const auto &c : r.candidates)
      std::cout << "  #" << c.index << " " << c.code << ": " << hg::to_string(c.status)
                << (c.status == hg::LpStatus::Optimal ? " t = " + c.slack.str() : "") << "\n";
  if (r.witness) {
    std::cout << "witness tree " << hg::canonical_code(*r.witness) << "\n";
    for (const auto &e : r.witness->tree.edges)
      std::cout << "  v" << r.witness->tree.ids[e.source] << " -> v" << r.witness->tree.ids[e.target]
                << "  eps = " << e.eps.str() << "\n";
    std::cout << "witness validates: " << yes(r.witness_validation && r.witness_validation->ok())
              << ", a_T = a and delta_T = 0: " << yes(r.witness_matches) << "\n";
  }
  if (!r.note.empty())
    std::cout << r.note << "\n";
  std::cout << "elapsed: " << r.elapsed_ms << " ms on " << r.threads << " thread(s)\n";
}

int report_exit(const hg::ObstructionReport &r) {
  switch (r.verdict) {
  case hg::Verdict::Witness:
    return kOk;
  case hg::Verdict::Infeasible:
    return kObstruction;
  case hg::Verdict::Inconclusive:
    return kPrecision;
  }
  return kDomain;
}

int cmd_obstruct_hurwitz(const Config &cfg, const std::string &path, const std::string &group_path, int p,
                         const std::string &emit_witness, const std::string &emit_dot, bool certificates) {
  require_format(cfg, {"text", "json", "dot"});
  Json cj = hg::io::read_json_file(path);
  auto base = std::filesystem::path(path).parent_path();
  Json gref = group_path.empty() ? cj.at("group") : group_file_ref(group_path);
  auto gbase = group_path.empty() ? base : std::filesystem::path(group_path).parent_path();
  hg::FiniteGroup g = hg::io::read_group(gref, gbase);
  hg::ClassFunction a = hg::io::read_class_function(g, cj);
  if (p == 0) {
    if (!cj.contains("p"))
      throw UsageError("obstruct hurwitz: pass --p or give \"p\" in the character file");
    p = cj.at("p").get<int>();
  }
  auto r = hg::hurwitz_feasibility(g, p, a, cfg.threads);
  if (r.witness) {
    if (!emit_witness.empty())
      write_file(emit_witness, hg::io::tree_json(*r.witness, gref).dump(2) + "\n");
    if (!emit_dot.empty())
      write_file(emit_dot, hg::tree_dot(*r.witness));
  }
  if (cfg.format == "json")
    emit_json("obstruct hurwitz", hg::io::report_json(r, gref, certificates));
  else if (cfg.format == "dot") {
    if (!r.witness)
      throw hg::TreeError("no witness tree to draw: verdict is " + hg::to_string(r.verdict));
    std::cout << hg::tree_dot(*r.witness);
  } else
    print_report_text(g, r, cfg.verbosity);
  return report_exit(r);
}

int cmd_obstruct_artin(const Config &cfg, const std::string &path, bool search) {
  require_format(cfg, {"text", "json"});
  Json j = hg::io::read_json_file(path);
  if (cfg.precision > 0)
    j["precision"] = cfg.precision;
  auto act = hg::io::read_local_action(j, std::filesystem::path(path).parent_path());
  hg::ClassFunction a = hg::local_artin_character(act);
  const auto &tab = hg::character_table(act.group());
  std::vector<hg::Rational> mult = hg::rational_multiplicities(a);
  std::optional<hg::ObstructionReport> r;
  if (search)
    r = hg::hurwitz_feasibility(act, cfg.threads);
  if (cfg.format == "json") {
    Json m = Json::array();
    for (const auto &x : mult)
      m.push_back(x.str());
    Json body{{"artin", hg::io::class_function_json(a)}, {"multiplicities", m}};
    if (r)
      body["hurwitz"] = hg::io::report_json(*r, j.at("group"), false);
    emit_json("obstruct artin", body);
  } else {
    std::cout << "a_phi = " << cf_text(a) << "\n";
    for (std::size_t i = 0; i < tab.irreducibles.size(); ++i)
      std::cout << "  <a_phi, chi_" << i << "> = " << mult[i].str() << "\n";
    if (r)
      print_report_text(act.group(), *r, cfg.verbosity);
  }
  return r ? report_exit(*r) : kOk;
}

// quaternion

int cmd_quaternion(const Config &cfg, int n, int extra) {
  require_format(cfg, {"text", "json"});
  auto r = hg::quaternion_report(n, extra, cfg.threads);
  const auto &g = r.group;
  auto name = [&](int c) { return hg::subgroup_class(g, c).name; };
  if (cfg.format == "json") {
    Json comps = Json::array();
    for (const auto &c : r.completions) {
      Json extra_names = Json::array();
      for (int e : c.extra)
        extra_names.push_back(name(e));
      comps.push_back(Json{{"extra_leaves", extra_names},
                           {"artin", hg::io::class_function_json(c.artin)},
                           {"bertin_vanishes", !c.bertin.empty()},
                           {"hurwitz", hg::io::report_json(c.report, Json{{"builder", "generalized_quaternion"}, {"n", n}}, false)}});
    }
    Json psi = Json::array();
    for (const auto &[c, v] : r.psi_pairings)
      psi.push_back(Json{{"subgroup", name(c)}, {"value", v.str()}});
    emit_json("quaternion",
              Json{{"n", n},
                   {"order", g.order()},
                   {"H", {name(r.h[0]), name(r.h[1]), name(r.h[2])}},
                   {"cyclic_subgroup_lemma", r.lemma_holds},
                   {"klein_artin", hg::io::class_function_json(r.klein_artin)},
                   {"klein_pairings", {r.klein_pairings[0].str(), r.klein_pairings[1].str(), r.klein_pairings[2].str()}},
                   {"simple", r.simple},
                   {"psi_pairings", psi},
                   {"delta_b0_psi", r.delta_b0_psi.str()},
                   {"d_B0_b0", r.d_bi_b0[0].str()},
                   {"d_B1_b0", r.d_bi_b0[1].str()},
                   {"d_Bprime_b0", r.d_bprime_b0.str()},
                   {"d_B_b0", r.d_b_b0.str()},
                   {"density_contradiction", r.density_contradiction},
                   {"minimal_artin", hg::io::class_function_json(r.minimal)},
                   {"completions", comps},
                   {"infeasible", r.all_infeasible}});
  } else {
    std::cout << "G = Q_" << g.order() << " (n = " << n << ")\n";
    std::cout << "H_0 = " << name(r.h[0]) << ", H_1 = " << name(r.h[1]) << ", H_2 = " << name(r.h[2]) << "\n";
    std::cout << "cyclic subgroups with nontrivial image in G/<tau^2> are conjugate to some H_i: " << yes(r.lemma_holds)
              << "\n";
    for (const auto &l : r.lemma_detail)
      std::cout << "  " << l << "\n";
    std::cout << "Klein-four action t -> t/(1+mu t) over F_4: a = " << cf_text(r.klein_artin) << "\n";
    std::cout << "  <a, chi_i> = " << r.klein_pairings[0].str() << ", " << r.klein_pairings[1].str() << ", "
              << r.klein_pairings[2].str() << "\n";
    std::cout << "minimal simple character a = u*_H0 + u*_H1 + u*_H2 = " << cf_text(r.minimal) << "\n";
    std::cout << "  <a, chi_i> = " << r.simple_pairings[0].str() << ", " << r.simple_pairings[1].str() << ", "
              << r.simple_pairings[2].str() << "  simple: " << yes(r.simple) << "\n";
    std::cout << "psi = induced faithful character of H_0: <psi, u*_C> = 2 for all nontrivial cyclic C: "
              << yes(r.psi_pairings_two) << "\n";
    std::cout << "delta_b0(psi) = " << r.delta_b0_psi.str() << "\n";
    std::cout << "d(B^0, b0) = " << r.d_bi_b0[0].str() << ", d(B^1, b0) = " << r.d_bi_b0[1].str() << "\n";
    std::cout << "d(B', b0) = " << r.d_bprime_b0.str() << " but d(B, b0) = delta_b0(psi)/2 = " << r.d_b_b0.str()
              << ": " << r.d_bprime_b0.str() << " <= " << r.d_b_b0.str() << " fails\n";
    for (const auto &c : r.completions) {
      std::string extra_names;
      for (int e : c.extra)
        extra_names += " + u*" + name(e);
      std::cout << "completion a" << extra_names << ": Bertin " << (c.bertin.empty() ? "obstructed" : "vanishes")
                << ", Hurwitz search " << hg::to_string(c.report.verdict) << " (" << c.report.topology_count
                << " candidate trees, certificates " << yes(c.report.all_certificates_verified) << ")\n";
    }
    std::cout << "verdict: " << (r.all_infeasible ? "infeasible" : "feasible completion found") << "\n";
  }
  return r.all_infeasible ? kObstruction : kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hurwitz trees, depth and Artin characters, and lifting obstructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (const char *t = std::getenv("HG_THREADS"))
    try {
      cfg.threads = std::stoi(t);
    } catch (const std::exception &) {
    }
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--threads", cfg.threads, "Worker threads (overrides HG_THREADS)")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", cfg.precision, "z-precision for series input (at least 4)")
      ->check(CLI::Range(4, 1000));
  app.add_flag("-v,--verbose", cfg.verbosity, "More detail");

  std::function<int()> run;
  std::string file, file2, group_file, eps, center, emit_witness, emit_dot;
  long at = 0;
  std::vector<long> set;
  int p = 0, n = 2, extra = 1;
  bool certificates = false, search = false;

  auto *group = app.add_subcommand("group", "Finite groups")->require_subcommand(1);
  group->add_subcommand("info", "Classes and subgroup classes")->callback([&] {
    run = [&] { return cmd_group_info(cfg, file); };
  })->add_option("file", file, "Group file")->required();

  auto *ch = app.add_subcommand("char", "Characters")->require_subcommand(1);
  ch->add_subcommand("table", "Character table")->callback([&] {
    run = [&] { return cmd_char_table(cfg, file); };
  })->add_option("file", file, "Group file")->required();
  auto *pair = ch->add_subcommand("pair", "Inner product of two characters")->callback([&] {
    run = [&] { return cmd_char_pair(cfg, file, file2); };
  });
  pair->add_option("f", file, "Character file")->required();
  pair->add_option("g", file2, "Character file")->required();

  auto *tree = app.add_subcommand("tree", "Hurwitz trees")->require_subcommand(1);
  tree->add_subcommand("validate", "Check the axioms")->callback([&] {
    run = [&] { return cmd_tree_validate(cfg, file); };
  })->add_option("file", file, "Tree file")->required();
  auto *dens = tree->add_subcommand("density", "Inverse distances and density at a leaf")->callback([&] {
    run = [&] { return cmd_tree_density(cfg, file, at, set); };
  });
  dens->add_option("file", file, "Tree file")->required();
  dens->add_option("--at", at, "Leaf id")->required();
  dens->add_option("--set", set, "Leaf ids of A (default: all leaves)");
  tree->add_subcommand("lift", "Equivariant lift as DOT")->callback([&] {
    run = [&] { return cmd_tree_lift(cfg, file); };
  })->add_option("file", file, "Tree file")->required();

  auto *disk = app.add_subcommand("disk", "Disk automorphisms")->require_subcommand(1);
  disk->add_subcommand("depth", "Depth character")->callback([&] {
    run = [&] { return cmd_disk_depth(cfg, file); };
  })->add_option("file", file, "Action file")->required();
  disk->add_subcommand("artin", "Artin character and fixed points")->callback([&] {
    run = [&] { return cmd_disk_artin(cfg, file); };
  })->add_option("file", file, "Action file")->required();
  disk->add_subcommand("breaks", "Ramification breaks")->callback([&] {
    run = [&] { return cmd_disk_breaks(cfg, file); };
  })->add_option("file", file, "Action file")->required();
  auto *shift = disk->add_subcommand("shift", "Boundary shift identity")->callback([&] {
    run = [&] { return cmd_disk_shift(cfg, file, eps, center); };
  });
  shift->add_option("file", file, "Action file")->required();
  shift->add_option("--eps", eps, "Thickness, e.g. 1/2")->required();
  shift->add_option("--center", center, "Center of the subdisk")->default_val("0");

  auto *ob = app.add_subcommand("obstruct", "Lifting obstructions")->require_subcommand(1);
  ob->add_subcommand("bertin", "Bertin obstruction")->callback([&] {
    run = [&] { return cmd_obstruct_bertin(cfg, file); };
  })->add_option("file", file, "Character file")->required();
  auto *hur = ob->add_subcommand("hurwitz", "Search for a Hurwitz tree with zero depth")->callback([&] {
    run = [&] { return cmd_obstruct_hurwitz(cfg, file, group_file, p, emit_witness, emit_dot, certificates); };
  });
  hur->add_option("file", file, "Character file")->required();
  hur->add_option("--group", group_file, "Group file (default: the character file's group)");
  hur->add_option("--p", p, "Residue characteristic")->check(CLI::PositiveNumber);
  hur->add_option("--emit-witness", emit_witness, "Write the witness tree as JSON");
  hur->add_option("--emit-dot", emit_dot, "Write the witness tree as DOT");
  hur->add_flag("--certificates", certificates, "Include per-candidate LP certificates in JSON");
  auto *art = ob->add_subcommand("artin", "Artin character of a local action in characteristic p")->callback([&] {
    run = [&] { return cmd_obstruct_artin(cfg, file, search); };
  });
  art->add_option("file", file, "Local action file")->required();
  art->add_flag("--hurwitz", search, "Also run the Hurwitz tree search");

  auto *quat = app.add_subcommand("quaternion", "Simple quaternion actions")->callback([&] {
    run = [&] { return cmd_quaternion(cfg, n, extra); };
  });
  quat->add_option("--n", n, "Q of order 2^(n+1)")->check(CLI::Range(2, 7));
  quat->add_option("--extra-leaves", extra, "Leaf budget for completions inside <tau^2>")->check(CLI::Range(0, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  std::string where = "hg";
  std::string top;
  for (auto *s = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); s;
       s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front()) {
    where += " " + s->get_name();
    if (top.empty())
      top = s->get_name();
  }
  static const std::map<std::string, std::string> modules{{"group", "group_core"},
                                                          {"char", "characters"},
                                                          {"tree", "hurwitz_tree"},
                                                          {"disk", "disk_analysis"},
                                                          {"obstruct", "obstruction_engine"},
                                                          {"quaternion", "obstruction_engine"}};
  const std::string module = modules.count(top) ? modules.at(top) : "hg";
  try {
    return run();
  } catch (const UsageError &e) {
    std::cerr << where << ": " << e.what() << "\n";
    return kParse;
  } catch (const hg::io::ParseError &e) {
    std::cerr << where << ": parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception &e) {
    std::cerr << where << ": parse error: " << e.what() << "\n";
    return kParse;
  } catch (const hg::PrecisionError &e) {
    std::cerr << where << ": precision: " << e.what() << "\n";
    return kPrecision;
  } catch (const std::exception &e) {
    std::cerr << where << ": " << module << ": " << e.what() << "\n";
    return kDomain;
  }
}
