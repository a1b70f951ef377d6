#include "hg/io.hpp"

#include <fstream>
#include <sstream>

#include "hg/subgroups.hpp"

namespace hg::io {

namespace fs = std::filesystem;

namespace {

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json &j, const char *key, const std::string &where) {
  const Json &v = field(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string text(const Json &j, const std::string &where) {
  if (!j.is_string())
    throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::vector<int>> int_matrix(const Json &j, const std::string &where) {
  if (!j.is_array())
    throw ParseError(where + ": expected a list of integer lists");
  std::vector<std::vector<int>> out;
  for (const auto &row : j) {
    if (!row.is_array())
      throw ParseError(where + ": expected a list of integer lists");
    std::vector<int> r;
    for (const auto &x : row) {
      if (!x.is_number_integer())
        throw ParseError(where + ": entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json read_json_file(const fs::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

FiniteGroup read_group(const Json &ref, const fs::path &base) {
  if (ref.is_string()) {
    fs::path p = base / ref.get<std::string>();
    return read_group(read_json_file(p), p.parent_path());
  }
  if (!ref.is_object())
    throw ParseError("group reference must be an object or a file name");
  if (ref.contains("path")) {
    fs::path p = base / text(ref.at("path"), "group path");
    Json j = read_json_file(p);
    return read_group(j.contains("group") ? j.at("group") : j, p.parent_path());
  }
  if (ref.contains("permutations"))
    return builders::from_permutations(int_matrix(ref.at("permutations"), "group permutations"));
  if (ref.contains("elements"))
    return builders::from_permutation_set(int_matrix(ref.at("elements"), "group elements"));
  std::string b = text(field(ref, "builder", "group"), "group builder");
  if (b == "cyclic")
    return builders::cyclic(int_field(ref, "n", "cyclic group"));
  if (b == "dihedral")
    return builders::dihedral(int_field(ref, "n", "dihedral group"));
  if (b == "generalized_quaternion")
    return builders::generalized_quaternion(int_field(ref, "n", "quaternion group"));
  if (b == "elementary_abelian")
    return builders::elementary_abelian(int_field(ref, "p", "elementary abelian group"),
                                        int_field(ref, "k", "elementary abelian group"));
  if (b == "direct_product") {
    const Json &f = field(ref, "factors", "direct product");
    if (!f.is_array() || f.empty())
      throw ParseError("direct product: \"factors\" must be a nonempty list");
    FiniteGroup g = read_group(f[0], base);
    for (std::size_t i = 1; i < f.size(); ++i)
      g = builders::direct_product(g, read_group(f[i], base));
    return g;
  }
  if (b == "semidirect_metacyclic" || b == "metacyclic")
    return builders::metacyclic(int_field(ref, "modulus", "metacyclic group"), int_field(ref, "k", "metacyclic group"),
                                int_field(ref, "r", "metacyclic group"));
  throw ParseError("unknown group builder \"" + b + "\"");
}

Json to_json(const Rational &r) { return r.str(); }

Json to_json(const Cyclotomic &c) {
  Json coeffs = Json::array();
  for (const auto &x : c.exponent_coeffs(c.conductor()))
    coeffs.push_back(x.str());
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Rational read_rational(const Json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw ParseError("rationals are written as strings \"a/b\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception &e) {
    throw ParseError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
  }
}

Cyclotomic read_cyclotomic(const Json &j) {
  if (j.is_number_integer())
    return Cyclotomic(Rational(j.get<long>()));
  if (j.is_string()) {
    try {
      return parse_cyclotomic(j.get<std::string>());
    } catch (const std::exception &e) {
      throw ParseError("bad cyclotomic \"" + j.get<std::string>() + "\": " + e.what());
    }
  }
  if (j.is_object()) {
    int n = int_field(j, "conductor", "cyclotomic");
    if (n < 1)
      throw ParseError("cyclotomic: conductor must be positive");
    const Json &c = field(j, "coeffs", "cyclotomic");
    if (!c.is_array())
      throw ParseError("cyclotomic: \"coeffs\" must be a list");
    std::vector<Rational> coeffs;
    for (const auto &x : c)
      coeffs.push_back(read_rational(x));
    return Cyclotomic::from_exponent_coeffs(n, coeffs);
  }
  throw ParseError("cyclotomic values are objects {conductor, coeffs}, strings or integers");
}

Json class_function_json(const ClassFunction &f) {
  const FiniteGroup &g = f.group();
  Json classes = Json::array(), values = Json::array();
  for (int c = 0; c < g.class_count(); ++c) {
    classes.push_back(g.element_name(g.class_rep(c)));
    values.push_back(to_json(f[c]));
  }
  return Json{{"classes", classes}, {"values", values}};
}

ClassFunction read_class_function(const FiniteGroup &g, const Json &j) {
  const Json &vals = field(j, "values", "character");
  if (!vals.is_array() || static_cast<int>(vals.size()) != g.class_count())
    throw ParseError("character: expected " + std::to_string(g.class_count()) + " values, one per conjugacy class");
  std::vector<Cyclotomic> v(g.class_count());
  if (j.contains("classes")) {
    const Json &cl = j.at("classes");
    if (!cl.is_array() || cl.size() != vals.size())
      throw ParseError("character: \"classes\" must list one element per value");
    std::vector<bool> seen(g.class_count(), false);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      int c = g.class_of(g.parse_element(text(cl[i], "character class")));
      if (seen[c])
        throw ParseError("character: class of " + cl[i].get<std::string>() + " listed twice");
      seen[c] = true;
      v[c] = read_cyclotomic(vals[i]);
    }
  } else {
    for (std::size_t i = 0; i < vals.size(); ++i)
      v[i] = read_cyclotomic(vals[i]);
  }
  return ClassFunction(g, v);
}

CharacterFile read_character_file(const fs::path &path) {
  Json j = read_json_file(path);
  CharacterFile f{read_group(field(j, "group", path.string()), path.parent_path()), j.at("group"), {}};
  f.character = read_class_function(f.group, j);
  return f;
}

TreeFile read_tree(const Json &j, const fs::path &base) {
  TreeFile f;
  f.group_ref = field(j, "group", "tree");
  FiniteGroup g = read_group(f.group_ref, base);
  int p = int_field(j, "p", "tree");
  const Json &vs = field(j, "vertices", "tree");
  const Json &es = field(j, "edges", "tree");
  if (!vs.is_array() || !es.is_array())
    throw ParseError("tree: \"vertices\" and \"edges\" must be lists");
  std::vector<long> ids;
  std::vector<std::string> mono_text;
  for (const auto &v : vs) {
    ids.push_back(int_field(v, "id", "tree vertex"));
    mono_text.push_back(v.contains("monodromy") ? text(v.at("monodromy"), "vertex monodromy") : "");
  }
  std::map<long, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!index.emplace(ids[i], static_cast<int>(i)).second)
      throw ParseError("tree: duplicate vertex id " + std::to_string(ids[i]));
  if (j.contains("leaf_monodromy")) {
    const Json &lm = j.at("leaf_monodromy");
    if (!lm.is_object())
      throw ParseError("tree: \"leaf_monodromy\" must map vertex ids to subgroups");
    for (auto it = lm.begin(); it != lm.end(); ++it) {
      long id = 0;
      try {
        id = std::stol(it.key());
      } catch (const std::exception &) {
        throw ParseError("tree: leaf_monodromy key \"" + it.key() + "\" is not a vertex id");
      }
      auto at = index.find(id);
      if (at == index.end())
        throw ParseError("tree: leaf_monodromy names unknown vertex " + it.key());
      mono_text[at->second] = text(it.value(), "leaf monodromy");
    }
  }
  std::vector<TreeEdge> edges;
  for (const auto &e : es) {
    long from = int_field(e, "from", "tree edge"), to = int_field(e, "to", "tree edge");
    auto a = index.find(from), b = index.find(to);
    if (a == index.end() || b == index.end())
      throw ParseError("tree: edge " + std::to_string(from) + "->" + std::to_string(to) + " uses an unknown vertex");
    edges.push_back({a->second, b->second, read_rational(field(e, "eps", "tree edge"))});
  }
  std::optional<long> root;
  if (j.contains("root"))
    root = int_field(j, "root", "tree");
  MetricTree t = MetricTree::make(ids, edges, root);
  std::vector<int> mono(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mono_text[i].empty())
      throw ParseError("tree: vertex " + std::to_string(ids[i]) + " has no monodromy");
    mono[i] = parse_subgroup(g, mono_text[i]);
  }
  std::optional<ClassFunction> depth_root;
  if (j.contains("depth_root"))
    depth_root = read_class_function(g, j.at("depth_root"));
  f.tree = make_hurwitz_tree(g, p, t, mono, depth_root);
  return f;
}

TreeFile read_tree_file(const fs::path &path) { return read_tree(read_json_file(path), path.parent_path()); }

Json tree_json(const HurwitzTree &h, const Json &group_ref) {
  const FiniteGroup &g = h.group;
  const MetricTree &t = h.tree;
  Json vs = Json::array(), es = Json::array(), leaves = Json::object();
  for (int v = 0; v < t.vertex_count(); ++v) {
    Json vj{{"id", t.ids[v]}};
    if (t.is_leaf(v))
      leaves[std::to_string(t.ids[v])] = subgroup_class(g, h.monodromy[v]).name;
    else
      vj["monodromy"] = subgroup_class(g, h.monodromy[v]).name;
    vs.push_back(vj);
  }
  for (const auto &e : t.edges)
    es.push_back(Json{{"from", t.ids[e.source]}, {"to", t.ids[e.target]}, {"eps", e.eps.str()}});
  Json out{{"group", group_ref}, {"p", h.p}, {"root", t.ids[t.root]}, {"vertices", vs}, {"edges", es},
           {"leaf_monodromy", leaves}};
  if (!h.depth_character().is_zero())
    out["depth_root"] = class_function_json(h.depth_character());
  return out;
}

namespace {

std::map<std::string, Json> generator_entries(const Json &j) {
  const Json &gens = field(j, "generators", "action");
  if (!gens.is_object())
    throw ParseError("action: \"generators\" must map generator names to maps");
  std::map<std::string, Json> out;
  for (auto it = gens.begin(); it != gens.end(); ++it)
    out[it.key()] = it.value();
  return out;
}

}  // namespace

DiskAction read_action(const Json &j, const fs::path &base) {
  const Json &fj = field(j, "field", "action");
  CycloLocalField k(int_field(fj, "p", "action field"), int_field(fj, "m", "action field"));
  FiniteGroup g = read_group(field(j, "group", "action"), base);
  std::map<std::string, Mobius> mob;
  std::map<std::string, Poly> ser;
  int precision = j.contains("precision") ? int_field(j, "precision", "action") : 0;
  for (const auto &[name, m] : generator_entries(j)) {
    if (m.contains("mobius")) {
      const Json &rows = m.at("mobius");
      if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || !rows[1].is_array() || rows[0].size() != 2 ||
          rows[1].size() != 2)
        throw ParseError("action generator " + name + ": \"mobius\" must be a 2x2 matrix");
      mob[name] = Mobius{read_cyclotomic(rows[0][0]), read_cyclotomic(rows[0][1]), read_cyclotomic(rows[1][0]),
                         read_cyclotomic(rows[1][1])};
    } else if (m.contains("series")) {
      Poly s;
      for (const auto &c : m.at("series"))
        s.push_back(read_cyclotomic(c));
      ser[name] = s;
      if (m.contains("precision"))
        precision = std::max(precision, int_field(m, "precision", "action generator " + name));
    } else {
      throw ParseError("action generator " + name + ": expected \"mobius\" or \"series\"");
    }
  }
  if (!mob.empty() && !ser.empty())
    throw ParseError("action: mixing Moebius and series generators is not supported");
  if (!ser.empty())
    return DiskAction::from_series(k, g, ser, precision ? precision : 8);
  return DiskAction::from_mobius(k, g, mob);
}

DiskAction read_action_file(const fs::path &path) { return read_action(read_json_file(path), path.parent_path()); }

LocalAction read_local_action(const Json &j, const fs::path &base) {
  const Json &fj = field(j, "field", "local action");
  int p = int_field(fj, "p", "local action field");
  int kdeg = fj.contains("k") ? int_field(fj, "k", "local action field") : 1;
  FiniteField k(p, kdeg);
  FiniteGroup g = read_group(field(j, "group", "local action"), base);
  int precision = j.contains("precision") ? int_field(j, "precision", "local action") : 8;
  std::map<std::string, FqSeries> gens;
  for (const auto &[name, m] : generator_entries(j)) {
    auto elem = [&](const Json &x) {
      if (x.is_number_integer())
        return k.parse(std::to_string(x.get<int>()));
      return k.parse(text(x, "local action coefficient"));
    };
    if (m.contains("translation")) {
      gens[name] = additive_translation_series(k, elem(m.at("translation")), precision);
    } else if (m.contains("series")) {
      FqSeries s;
      for (const auto &c : m.at("series"))
        s.push_back(elem(c));
      gens[name] = s;
    } else {
      throw ParseError("local action generator " + name + ": expected \"series\" or \"translation\"");
    }
  }
  return LocalAction::make(k, g, gens, precision);
}

LocalAction read_local_action_file(const fs::path &path) {
  return read_local_action(read_json_file(path), path.parent_path());
}

Json report_json(const ObstructionReport &r, const Json &group_ref, bool certificates) {
  Json decs = Json::array();
  for (const auto &d : r.decompositions)
    decs.push_back(d);
  Json out{{"verdict", to_string(r.verdict)},
           {"decompositions", decs},
           {"topologies", r.topology_count},
           {"lp_solved", r.lp_solved},
           {"lp_pivots", r.lp_pivots},
           {"certificates_verified", r.all_certificates_verified},
           {"note", r.note}};
  if (r.witness) {
    out["witness"] = tree_json(*r.witness, group_ref);
    out["witness_valid"] = r.witness_validation && r.witness_validation->ok();
    out["witness_matches"] = r.witness_matches;
  }
  Json cands = Json::array();
  std::map<std::string, long> statuses;
  for (const auto &c : r.candidates) {
    ++statuses[to_string(c.status)];
    if (!certificates)
      continue;
    Json cj{{"index", c.index},   {"decomposition", c.decomposition}, {"code", c.code},
            {"status", to_string(c.status)}, {"slack", c.slack.str()}, {"rows", c.rows},
            {"variables", c.variables}, {"certificate_verified", c.certificate_verified}};
    Json cert = Json::array();
    for (const auto &y : c.certificate)
      cert.push_back(y.str());
    cj["certificate"] = cert;
    cands.push_back(cj);
  }
  out["lp_statuses"] = statuses;
  if (certificates)
    out["candidates"] = cands;
  return out;
}

}  // namespace hg::io
