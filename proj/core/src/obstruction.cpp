#include "hg/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "hg/arith.hpp"
#include "hg/subgroups.hpp"

namespace hg {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Witness:
    return "witness";
  case Verdict::Infeasible:
    return "infeasible";
  case Verdict::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

std::vector<std::vector<int>> bertin_check(const ClassFunction &a) {
  const FiniteGroup &g = a.group();
  if (!is_true_character(a))
    throw CharacterError("bertin_check: " + a.str() + " is not a true character");
  if (!inner_product(a, trivial_character(g)).is_zero())
    throw CharacterError("bertin_check: <a, 1> is not 0");
  std::vector<int> classes;
  for (const auto &c : subgroup_classes(g, true))
    if (c.order > 1)
      classes.push_back(c.id);
  std::stable_sort(classes.begin(), classes.end(), [&](int x, int y) {
    return subgroup_class(g, x).order > subgroup_class(g, y).order;
  });
  std::vector<Rational> target = rational_multiplicities(a);
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::function<void(std::size_t, std::vector<Rational> &)> dfs = [&](std::size_t from, std::vector<Rational> &rem) {
    bool done = true;
    for (const auto &r : rem)
      done = done && r.is_zero();
    if (done) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < classes.size(); ++i) {
      const auto &m = induced_augmentation_mult(g, classes[i]);
      bool fits = true;
      for (std::size_t k = 0; k < rem.size() && fits; ++k)
        fits = m[k] <= rem[k];
      if (!fits)
        continue;
      for (std::size_t k = 0; k < rem.size(); ++k)
        rem[k] -= m[k];
      chosen.push_back(classes[i]);
      dfs(i, rem);
      chosen.pop_back();
      for (std::size_t k = 0; k < rem.size(); ++k)
        rem[k] += m[k];
    }
  };
  dfs(0, target);
  return out;
}

namespace {

struct Shape {
  int cls = 0;
  bool leaf = false;
  std::vector<Shape> kids;
  std::string code;
};

std::string make_code(const Shape &s) {
  if (s.leaf)
    return "[" + std::to_string(s.cls) + "]";
  std::string c = "(" + std::to_string(s.cls);
  for (const auto &k : s.kids)
    c += k.code;
  return c + ")";
}

Shape finish(int cls, std::vector<Shape> kids) {
  std::sort(kids.begin(), kids.end(), [](const Shape &a, const Shape &b) { return a.code < b.code; });
  Shape s;
  s.cls = cls;
  s.kids = std::move(kids);
  s.code = make_code(s);
  return s;
}

/// Partitions of a sorted multiset into blocks, without repeats.
std::vector<std::vector<std::vector<int>>> multiset_partitions(const std::vector<int> &m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::map<std::vector<std::vector<int>>, bool> seen;
  std::vector<int> label(m.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
    if (i == m.size()) {
      std::vector<std::vector<int>> p(blocks);
      for (std::size_t k = 0; k < m.size(); ++k)
        p[label[k]].push_back(m[k]);
      for (auto &b : p)
        std::sort(b.begin(), b.end());
      std::sort(p.begin(), p.end());
      if (!seen.count(p)) {
        seen[p] = true;
        out.push_back(p);
      }
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

class Enumerator {
public:
  explicit Enumerator(const FiniteGroup &g) : g_(g) {
    for (const auto &c : subgroup_classes(g, false))
      classes_.push_back(c.id);
  }

  /// Internal vertex of class k carrying the leaves m.
  const std::vector<Shape> &internal(int k, const std::vector<int> &m) {
    auto key = std::make_pair(k, m);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    std::vector<Shape> out;
    std::map<std::string, bool> seen;
    long korder = subgroup_class(g_, k).order;
    for (const auto &part : multiset_partitions(m)) {
      // options per block: (shape, index)
      std::vector<std::vector<std::pair<Shape, long>>> options;
      bool viable = true;
      for (const auto &block : part) {
        std::vector<std::pair<Shape, long>> opt;
        if (block.size() == 1 && class_contained(g_, block[0], k)) {
          Shape leaf;
          leaf.cls = block[0];
          leaf.leaf = true;
          leaf.code = make_code(leaf);
          opt.emplace_back(leaf, korder / subgroup_class(g_, block[0]).order);
        }
        for (int l : classes_) {
          if (!class_contained(g_, l, k))
            continue;
          long lorder = subgroup_class(g_, l).order;
          // a single child of the same class would leave the index sum at 1
          if (part.size() == 1 && lorder == korder)
            continue;
          bool holds = true;
          for (int b : block)
            holds = holds && class_contained(g_, b, l);
          if (!holds)
            continue;
          for (const auto &sub : internal(l, block))
            opt.emplace_back(sub, korder / lorder);
        }
        if (opt.empty()) {
          viable = false;
          break;
        }
        options.push_back(std::move(opt));
      }
      if (!viable)
        continue;
      std::vector<std::size_t> pick(options.size(), 0);
      for (;;) {
        long sum = 0;
        std::vector<Shape> kids;
        for (std::size_t i = 0; i < options.size(); ++i) {
          sum += options[i][pick[i]].second;
          kids.push_back(options[i][pick[i]].first);
        }
        if (sum > 1) {
          Shape s = finish(k, std::move(kids));
          if (!seen.count(s.code)) {
            seen[s.code] = true;
            out.push_back(std::move(s));
          }
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size())
          pick[i++] = 0;
        if (i == pick.size())
          break;
      }
    }
    std::sort(out.begin(), out.end(), [](const Shape &a, const Shape &b) { return a.code < b.code; });
    return memo_[key] = std::move(out);
  }

private:
  const FiniteGroup &g_;
  std::vector<int> classes_;
  std::map<std::pair<int, std::vector<int>>, std::vector<Shape>> memo_;
};

void flatten(const Shape &s, int parent, std::vector<long> &ids, std::vector<TreeEdge> &edges, std::vector<int> &mono) {
  int me = static_cast<int>(ids.size());
  ids.push_back(me);
  mono.push_back(s.cls);
  if (parent >= 0)
    edges.push_back({parent, me, s.leaf ? Rational(0) : Rational(1)});
  for (const auto &k : s.kids)
    flatten(k, me, ids, edges, mono);
}

TreeCandidate to_candidate(const FiniteGroup &g, const Shape &top, int decomposition) {
  std::vector<long> ids{0};
  std::vector<int> mono{whole_class(g)};
  std::vector<TreeEdge> edges;
  flatten(top, 0, ids, edges, mono);
  TreeCandidate c;
  c.decomposition = decomposition;
  c.code = top.code;
  std::vector<TreeEdge> e2;
  for (const auto &e : edges)
    e2.push_back({e.source, e.target, e.eps});
  c.tree = MetricTree::make(ids, e2, 0L);
  c.monodromy = mono;
  return c;
}

}  // namespace

std::vector<TreeCandidate> enumerate_candidates(const FiniteGroup &g, const std::vector<int> &leaves) {
  std::vector<TreeCandidate> out;
  if (leaves.empty())
    return out;
  std::vector<int> m = leaves;
  std::sort(m.begin(), m.end());
  const int whole = whole_class(g);
  std::vector<Shape> tops;
  if (m.size() == 1 && m[0] == whole) {
    Shape leaf;
    leaf.cls = whole;
    leaf.leaf = true;
    leaf.code = make_code(leaf);
    tops.push_back(leaf);
  }
  Enumerator en(g);
  for (const auto &s : en.internal(whole, m))
    tops.push_back(s);
  std::sort(tops.begin(), tops.end(), [](const Shape &a, const Shape &b) { return a.code < b.code; });
  for (const auto &s : tops)
    out.push_back(to_candidate(g, s, 0));
  return out;
}

CandidateLp candidate_lp(const FiniteGroup &g, int p, const TreeCandidate &c) {
  const MetricTree &t = c.tree;
  const int ne = static_cast<int>(t.edges.size());
  const int nchi = static_cast<int>(character_table(g).irreducibles.size());
  CandidateLp out;
  std::vector<int> var_of_edge(ne, -1);
  for (int e = 0; e < ne; ++e)
    if (!t.is_leaf(t.edges[e].target)) {
      var_of_edge[e] = static_cast<int>(out.edge_of_variable.size());
      out.edge_of_variable.push_back(e);
    }
  const int k = static_cast<int>(out.edge_of_variable.size());
  const int nv = k + 1;
  out.lp.variables = nv;
  out.lp.objective.assign(nv, Rational());
  out.lp.objective[k] = 1;

  // multiplicities of s_e = a_e - u*_{G_t(e)} for internal edges
  std::vector<std::vector<Rational>> s(ne);
  for (int e : out.edge_of_variable) {
    int w = t.edges[e].target;
    std::vector<Rational> ae(nchi);
    for (int b : t.leaves_below(w)) {
      const auto &u = induced_augmentation_mult(g, c.monodromy[b]);
      for (int x = 0; x < nchi; ++x)
        ae[x] += u[x];
    }
    const auto &uw = induced_augmentation_mult(g, c.monodromy[w]);
    for (int x = 0; x < nchi; ++x)
      ae[x] -= uw[x];
    s[e] = ae;
  }
  auto path_row = [&](int v, int chi) {
    std::vector<Rational> row(nv);
    for (int e : t.path_edges(v))
      if (var_of_edge[e] >= 0)
        row[var_of_edge[e]] = s[e][chi];
    return row;
  };
  for (int b : t.leaves()) {
    const auto &target = induced_delta_mult_mult(g, c.monodromy[b], p);
    for (int chi = 0; chi < nchi; ++chi)
      out.lp.add_row(path_row(b, chi), Sense::Eq, target[chi]);
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == t.root || t.is_leaf(v))
      continue;
    for (int chi = 0; chi < nchi; ++chi) {
      auto row = path_row(v, chi);
      bool zero = true;
      for (const auto &r : row)
        zero = zero && r.is_zero();
      if (!zero)
        out.lp.add_row(std::move(row), Sense::Ge, Rational());
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> row(nv);
    row[i] = 1;
    row[k] = -1;
    out.lp.add_row(std::move(row), Sense::Ge, Rational());
  }
  std::vector<Rational> cap(nv);
  cap[k] = 1;
  out.lp.add_row(std::move(cap), Sense::Le, Rational(1));
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0)
    return requested;
  if (const char *env = std::getenv("HG_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0)
        return v;
    } catch (const std::exception &) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

ObstructionReport hurwitz_feasibility(const FiniteGroup &g, int p, const ClassFunction &a, int threads) {
  auto start = std::chrono::steady_clock::now();
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (!a.group().same_as(g))
    throw CharacterError("hurwitz_feasibility: character lives on a different group");
  ObstructionReport rep;
  rep.threads = resolve_threads(threads);
  rep.decompositions = bertin_check(a);
  if (rep.decompositions.empty())
    rep.note = "Bertin obstruction: a is not a sum of induced augmentation characters of cyclic subgroups";

  std::vector<TreeCandidate> all;
  for (std::size_t d = 0; d < rep.decompositions.size(); ++d)
    for (auto &c : enumerate_candidates(g, rep.decompositions[d])) {
      c.decomposition = static_cast<int>(d);
      all.push_back(std::move(c));
    }
  rep.topology_count = static_cast<long>(all.size());
  // warm the shared caches before fanning out
  character_table(g);
  for (const auto &c : subgroup_classes(g, false)) {
    induced_augmentation_mult(g, c.id);
    if (c.cyclic)
      induced_delta_mult_mult(g, c.id, p);
  }

  std::vector<CandidateResult> results(all.size());
  std::vector<std::vector<Rational>> solutions(all.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{all.size()};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= all.size() || i > best.load())
        return;
      CandidateLp clp = candidate_lp(g, p, all[i]);
      LpResult r = solve_lp(clp.lp);
      CandidateResult &cr = results[i];
      cr.index = static_cast<int>(i);
      cr.decomposition = all[i].decomposition;
      cr.code = all[i].code;
      cr.status = r.status;
      cr.certificate_verified = r.certificate_verified;
      cr.certificate = r.certificate;
      cr.pivots = r.pivots;
      cr.rows = static_cast<int>(clp.lp.rows.size());
      cr.variables = clp.lp.variables;
      if (r.status == LpStatus::Optimal) {
        cr.slack = r.value;
        if (r.value.sign() > 0) {
          std::vector<Rational> eps(all[i].tree.edges.size());
          for (std::size_t v = 0; v < clp.edge_of_variable.size(); ++v)
            eps[clp.edge_of_variable[v]] = r.x[v];
          solutions[i] = eps;
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    }
  };
  int nthreads = std::max(1, std::min<int>(rep.threads, static_cast<int>(all.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i)
    pool.emplace_back(work);
  work();
  for (auto &th : pool)
    th.join();

  std::size_t stop = std::min(best.load() + 1, all.size());
  for (std::size_t i = 0; i < stop; ++i) {
    rep.candidates.push_back(results[i]);
    rep.lp_pivots += results[i].pivots;
    rep.all_certificates_verified = rep.all_certificates_verified && results[i].certificate_verified;
  }
  rep.lp_solved = static_cast<long>(stop);
  if (best.load() < all.size()) {
    std::size_t w = best.load();
    MetricTree t = all[w].tree;
    for (std::size_t e = 0; e < t.edges.size(); ++e)
      t.edges[e].eps = solutions[w][e];
    HurwitzTree h = make_hurwitz_tree(g, p, t, all[w].monodromy);
    rep.witness_validation = validate(h);
    rep.witness_matches = h.artin_character() == a && h.depth_character().is_zero();
    rep.witness = std::move(h);
    rep.verdict = Verdict::Witness;
  } else {
    rep.verdict = Verdict::Infeasible;
    if (rep.note.empty())
      rep.note = "no Hurwitz tree with this Artin character and zero depth: every candidate LP is infeasible";
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ObstructionReport hurwitz_feasibility(const LocalAction &act, int threads) {
  ClassFunction a = ClassFunction::zero(act.group());
  try {
    a = local_artin_character(act);
  } catch (const PrecisionError &e) {
    ObstructionReport rep;
    rep.verdict = Verdict::Inconclusive;
    rep.note = e.what();
    rep.threads = resolve_threads(threads);
    return rep;
  }
  return hurwitz_feasibility(act.group(), act.field().p(), a, threads);
}

}  // namespace hg
