#include "tropmat/comparability.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "tropmat/error.hpp"
#include "union_find.hpp"

namespace tropmat {

namespace {

std::pair<int, int> unordered_key(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

int MixedMultigraph::undirected_multiplicity(int a, int b) const {
  auto it = undirected.find(unordered_key(a, b));
  return it == undirected.end() ? 0 : it->second;
}

int MixedMultigraph::directed_multiplicity(int from, int to) const {
  auto it = directed.find({from, to});
  return it == directed.end() ? 0 : it->second;
}

bool MixedMultigraph::has_undirected(int a, int b) const {
  return undirected_multiplicity(a, b) > 0;
}

bool MixedMultigraph::has_directed(int from, int to) const {
  return directed_multiplicity(from, to) > 0;
}

std::string MixedMultigraph::to_dot() const {
  std::string out = "digraph CG {\n";
  for (const auto& [key, mult] : undirected) {
    for (int k = 0; k < mult; ++k) {
      out += "  " + std::to_string(key.first + 1) + " -- " +
             std::to_string(key.second + 1) + "\n";
    }
  }
  for (const auto& [key, mult] : directed) {
    for (int k = 0; k < mult; ++k) {
      out += "  " + std::to_string(key.first + 1) + " -> " +
             std::to_string(key.second + 1) + "\n";
    }
  }
  out += "}\n";
  return out;
}

std::string CycleWitness::to_string() const {
  if (steps.empty()) return "";
  std::string out = std::to_string(steps.front().from + 1);
  for (const CycleStep& s : steps) {
    out += s.directed ? " -> " : " -- ";
    out += std::to_string(s.to + 1);
  }
  return out;
}

bool witness_replays(const MixedMultigraph& g, const CycleWitness& w) {
  if (w.steps.empty()) return false;
  if (w.steps.front().from != w.steps.back().to) return false;
  bool any_directed = false;
  for (size_t k = 0; k < w.steps.size(); ++k) {
    const CycleStep& s = w.steps[k];
    if (k + 1 < w.steps.size() && s.to != w.steps[k + 1].from) return false;
    if (s.directed) {
      if (!g.has_directed(s.from, s.to)) return false;
      any_directed = true;
    } else if (!g.has_undirected(s.from, s.to)) {
      return false;
    }
  }
  return any_directed;
}

MixedMultigraph comparability_graph(const NdType& a, const NdType& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw TropmatError(Errc::parameter_mismatch,
                       "types have different (n,d)");
  }
  MixedMultigraph g;
  g.d = a.d();
  for (int i = 0; i < a.n(); ++i) {
    Mask both = a.entry(i) & b.entry(i);
    for (int j : mask_elements(a.entry(i))) {
      for (int k : mask_elements(b.entry(i))) {
        if (j == k) continue;
        if (mask_test(both, j) && mask_test(both, k)) {
          ++g.undirected[unordered_key(j, k)];
        } else {
          ++g.directed[{j, k}];
        }
      }
    }
  }
  return g;
}

namespace {

/// Undirected path a -> b through one union-find component, as witness
/// steps. BFS over the undirected adjacency.
std::vector<CycleStep> undirected_path(const MixedMultigraph& g, int a,
                                       int b) {
  if (a == b) return {};
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.d));
  for (const auto& [key, mult] : g.undirected) {
    adj[static_cast<size_t>(key.first)].push_back(key.second);
    adj[static_cast<size_t>(key.second)].push_back(key.first);
  }
  std::vector<int> prev(static_cast<size_t>(g.d), -1);
  std::queue<int> queue;
  queue.push(a);
  prev[static_cast<size_t>(a)] = a;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    if (v == b) break;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (prev[static_cast<size_t>(w)] == -1) {
        prev[static_cast<size_t>(w)] = v;
        queue.push(w);
      }
    }
  }
  std::vector<CycleStep> steps;
  for (int v = b; v != a; v = prev[static_cast<size_t>(v)]) {
    steps.push_back({prev[static_cast<size_t>(v)], v, false});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

AcyclicityResult is_acyclic(const MixedMultigraph& g) {
  detail::UnionFind uf(g.d);
  for (const auto& [key, mult] : g.undirected) {
    uf.unite(key.first, key.second);
  }

  // A directed edge inside one undirected component closes immediately.
  for (const auto& [key, mult] : g.directed) {
    if (uf.connected(key.first, key.second)) {
      CycleWitness w;
      w.steps.push_back({key.first, key.second, true});
      auto back = undirected_path(g, key.second, key.first);
      w.steps.insert(w.steps.end(), back.begin(), back.end());
      return {false, std::move(w)};
    }
  }

  // Contracted digraph on component roots; DFS for a directed cycle.
  // Edges keep one concrete (from,to) witness per root pair.
  std::map<std::pair<int, int>, std::pair<int, int>> contracted;
  std::vector<std::vector<int>> succ(static_cast<size_t>(g.d));
  for (const auto& [key, mult] : g.directed) {
    int ru = uf.find(key.first);
    int rv = uf.find(key.second);
    if (contracted.emplace(std::pair{ru, rv}, key).second) {
      succ[static_cast<size_t>(ru)].push_back(rv);
    }
  }

  std::vector<int> color(static_cast<size_t>(g.d), 0);  // 0 new 1 open 2 done
  std::vector<int> stack;
  std::vector<int> cycle_roots;

  auto dfs = [&](auto&& self, int u) -> bool {
    color[static_cast<size_t>(u)] = 1;
    stack.push_back(u);
    for (int v : succ[static_cast<size_t>(u)]) {
      if (color[static_cast<size_t>(v)] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle_roots.assign(it, stack.end());
        return true;
      }
      if (color[static_cast<size_t>(v)] == 0 && self(self, v)) return true;
    }
    stack.pop_back();
    color[static_cast<size_t>(u)] = 2;
    return false;
  };

  for (int v = 0; v < g.d; ++v) {
    if (uf.find(v) == v && color[static_cast<size_t>(v)] == 0 &&
        dfs(dfs, v)) {
      // Expand the root cycle into a concrete walk: directed edge
      // between consecutive components, undirected path inside each.
      CycleWitness w;
      size_t k = cycle_roots.size();
      std::vector<std::pair<int, int>> arcs;
      for (size_t t = 0; t < k; ++t) {
        arcs.push_back(contracted.at(
            {cycle_roots[t], cycle_roots[(t + 1) % k]}));
      }
      for (size_t t = 0; t < k; ++t) {
        w.steps.push_back({arcs[t].first, arcs[t].second, true});
        auto inside =
            undirected_path(g, arcs[t].second, arcs[(t + 1) % k].first);
        w.steps.insert(w.steps.end(), inside.begin(), inside.end());
      }
      return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

RefinementWitness refinement_witness(const NdType& a, const NdType& b) {
  if (!leq(a, b)) {
    throw TropmatError(Errc::not_subset, "A is not a componentwise subset of B");
  }
  MixedMultigraph g = comparability_graph(a, b);
  AcyclicityResult acyclic = is_acyclic(g);
  if (!acyclic.acyclic) {
    return {std::nullopt, std::move(acyclic.cycle)};
  }

  int d = a.d();
  detail::UnionFind uf(d);
  for (const auto& [key, mult] : g.undirected) {
    uf.unite(key.first, key.second);
  }

  Mask used = b.letters_used();
  std::vector<Mask> members(static_cast<size_t>(d), 0);
  for (int v = 0; v < d; ++v) {
    members[static_cast<size_t>(uf.find(v))] |= Mask{1} << v;
  }

  // Kahn's algorithm on the contracted DAG restricted to letters of B;
  // among ready components the one with the smallest minimum element
  // goes first, so witnesses are reproducible.
  std::vector<int> indegree(static_cast<size_t>(d), 0);
  std::set<std::pair<int, int>> arcs;
  for (const auto& [key, mult] : g.directed) {
    arcs.emplace(uf.find(key.first), uf.find(key.second));
  }
  for (const auto& [from, to] : arcs) {
    ++indegree[static_cast<size_t>(to)];
  }

  std::set<int> ready;  // roots keyed by their minimum element
  for (int v = 0; v < d; ++v) {
    if (uf.find(v) == v && mask_test(used, mask_min(members[(size_t)v])) &&
        indegree[static_cast<size_t>(v)] == 0) {
      ready.insert(mask_min(members[static_cast<size_t>(v)]));
    }
  }

  std::vector<Mask> parts;
  while (!ready.empty()) {
    int root = uf.find(*ready.begin());
    ready.erase(ready.begin());
    parts.push_back(members[static_cast<size_t>(root)]);
    for (const auto& [from, to] : arcs) {
      if (from == root && --indegree[static_cast<size_t>(to)] == 0) {
        ready.insert(mask_min(members[static_cast<size_t>(to)]));
      }
    }
  }
  if (used != full_mask(d)) {
    parts.push_back(full_mask(d) & ~used);
  }

  OrderedPartition p(d, std::move(parts));
  if (!(refine(b, p) == a)) {
    throw std::logic_error("refinement witness failed internal replay");
  }
  return {std::move(p), std::nullopt};
}

}  // namespace tropmat
