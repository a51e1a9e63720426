#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "graphtask/errors.hpp"
#include "graphtask/graph.hpp"

// Graph algorithms shared by the task solvers and the instance sampler.
// Everything here is a pure function over an immutable Graph; the exact
// solvers (Held-Karp, matching DP, vertex-cover branch and bound,
// Hamiltonian-path DP) assume the per-task size caps documented in the
// catalog.

namespace graphtask {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Traversal and connectivity

// BFS visitation order from `source`, expanding neighbors in ascending id.
inline std::vector<int> bfs_order(const Graph& g, int source) {
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  std::vector<int> order;
  std::queue<int> q;
  seen[static_cast<std::size_t>(source)] = true;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    order.push_back(u);
    for (int v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        q.push(v);
      }
    }
  }
  return order;
}

// DFS preorder from `source`, expanding neighbors in ascending id.
inline std::vector<int> dfs_order(const Graph& g, int source) {
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  std::vector<int> order;
  // Explicit stack of (node, next-neighbor-index) to keep ascending order.
  std::vector<std::pair<int, std::size_t>> stack;
  seen[static_cast<std::size_t>(source)] = true;
  order.push_back(source);
  stack.emplace_back(source, 0);
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    const auto& nbrs = g.neighbors(u);
    bool advanced = false;
    while (idx < nbrs.size()) {
      int v = nbrs[idx++];
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        stack.emplace_back(v, 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) stack.pop_back();
  }
  return order;
}

// Unweighted shortest-path distances from `source` (-1 = unreachable).
// Follows out-edges on directed graphs.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// Component label per node (labels are 0-based in discovery order over
// ascending start ids), ignoring edge direction.
inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = next;
          q.push(v);
        }
      }
      if (g.directed()) {
        for (int v : g.in_neighbors(u)) {
          if (label[static_cast<std::size_t>(v)] < 0) {
            label[static_cast<std::size_t>(v)] = next;
            q.push(v);
          }
        }
      }
    }
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

inline bool is_connected(const Graph& g) {
  return g.node_count() <= 1 || component_count(g) == 1;
}

// Undirected cycle check: some component has at least as many edges as nodes.
inline bool has_cycle_undirected(const Graph& g) {
  auto labels = component_labels(g);
  int k = g.node_count() == 0 ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
  std::vector<int> nodes(static_cast<std::size_t>(k), 0);
  std::vector<int> edges(static_cast<std::size_t>(k), 0);
  for (int v = 0; v < g.node_count(); ++v) nodes[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])]++;
  for (const Edge& e : g.edges()) edges[static_cast<std::size_t>(labels[static_cast<std::size_t>(e.u)])]++;
  for (int c = 0; c < k; ++c)
    if (edges[static_cast<std::size_t>(c)] >= nodes[static_cast<std::size_t>(c)]) return true;
  return false;
}

// Directed cycle check by iterative three-color DFS.
inline bool has_cycle_directed(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
  for (int s = 0; s < n; ++s) {
    if (state[static_cast<std::size_t>(s)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const auto& nbrs = g.neighbors(u);
      if (idx < nbrs.size()) {
        int v = nbrs[idx++];
        int sv = state[static_cast<std::size_t>(v)];
        if (sv == 1) return true;
        if (sv == 0) {
          state[static_cast<std::size_t>(v)] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        state[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

inline bool has_cycle(const Graph& g) {
  return g.directed() ? has_cycle_directed(g) : has_cycle_undirected(g);
}

// Number of strongly connected components (iterative Tarjan).
inline int strongly_connected_count(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> scc_stack;
  int next_index = 0, count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    scc_stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!call.empty()) {
      auto& [u, idx] = call.back();
      const auto& nbrs = g.neighbors(u);
      if (idx < nbrs.size()) {
        int v = nbrs[idx++];
        if (index[static_cast<std::size_t>(v)] < 0) {
          index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
          scc_stack.push_back(v);
          on_stack[static_cast<std::size_t>(v)] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[static_cast<std::size_t>(v)]) {
          low[static_cast<std::size_t>(u)] =
              std::min(low[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().first;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(u)]);
        }
        if (low[static_cast<std::size_t>(u)] == index[static_cast<std::size_t>(u)]) {
          ++count;
          while (true) {
            int w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            if (w == u) break;
          }
        }
      }
    }
  }
  return count;
}

// 2-coloring if the graph is bipartite (colors 0/1), nullopt otherwise.
inline std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// BFS-level parity labels, ignoring conflicts. Used to carve bipartite
// instances out of arbitrary samples.
inline std::vector<int> parity_coloring(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < n; ++v)
      if (dist[static_cast<std::size_t>(v)] >= 0 && color[static_cast<std::size_t>(v)] < 0)
        color[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(v)] % 2;
  }
  return color;
}

// Kahn topological order with ascending-id tie-break; nullopt on a cycle.
inline std::optional<std::vector<int>> topological_order(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) indeg[static_cast<std::size_t>(e.v)]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : g.neighbors(u))
      if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

// Bridges: edges whose removal disconnects their component (low-link DFS).
inline std::vector<std::pair<int, int>> bridges(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> out;
  int timer = 0;
  // (node, parent, neighbor index)
  std::vector<std::array<int, 3>> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      auto& frame = stack.back();
      int u = frame[0], parent = frame[1];
      const auto& nbrs = g.neighbors(u);
      if (frame[2] < static_cast<int>(nbrs.size())) {
        int v = nbrs[static_cast<std::size_t>(frame[2]++)];
        if (v == parent) {
          // Skip one copy of the tree edge; simple graphs have no parallels.
          frame[1] = -2;
          continue;
        }
        if (disc[static_cast<std::size_t>(v)] < 0) {
          disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
          stack.push_back({v, u, 0});
        } else {
          low[static_cast<std::size_t>(u)] =
              std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back()[0];
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
          if (low[static_cast<std::size_t>(u)] > disc[static_cast<std::size_t>(p)]) {
            out.emplace_back(std::min(p, u), std::max(p, u));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Weighted shortest paths

// Dijkstra distances from `source`; parents allow path reconstruction.
struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> parent;
};

inline ShortestPaths dijkstra(const Graph& g, int source) {
  const int n = g.node_count();
  ShortestPaths sp{std::vector<double>(static_cast<std::size_t>(n), kInf),
                   std::vector<int>(static_cast<std::size_t>(n), -1)};
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  sp.dist[static_cast<std::size_t>(source)] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > sp.dist[static_cast<std::size_t>(u)]) continue;
    for (int v : g.neighbors(u)) {
      double w = g.weighted() ? *g.edge_weight(u, v) : 1.0;
      double nd = d + w;
      if (nd < sp.dist[static_cast<std::size_t>(v)]) {
        sp.dist[static_cast<std::size_t>(v)] = nd;
        sp.parent[static_cast<std::size_t>(v)] = u;
        pq.push({nd, v});
      }
    }
  }
  return sp;
}

// Shortest s->t path as a node list (BFS parents when unweighted).
inline std::vector<int> shortest_path_nodes(const Graph& g, int s, int t) {
  auto sp = dijkstra(g, s);
  if (sp.dist[static_cast<std::size_t>(t)] == kInf)
    throw DomainError("no path between the requested endpoints");
  std::vector<int> path;
  for (int v = t; v != -1; v = sp.parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// All-pairs unweighted distance matrix via per-node BFS (-1 unreachable).
inline std::vector<std::vector<int>> all_pairs_bfs(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

// ---------------------------------------------------------------------------
// Spanning trees

// Kruskal minimum spanning tree; ties broken by (weight, u, v) so the gold
// edge set is deterministic. Requires a connected graph.
inline std::vector<Edge> minimum_spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw DomainError("spanning tree requires a connected graph");
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  std::vector<int> parent(static_cast<std::size_t>(g.node_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<Edge> tree;
  for (const Edge& e : sorted) {
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      tree.push_back(e);
    }
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Matchings

// Maximum-cardinality matching on a bipartite graph (Kuhn's augmenting
// paths). `color` is a valid 2-coloring.
inline std::vector<std::pair<int, int>> bipartite_matching(const Graph& g,
                                                           const std::vector<int>& color) {
  const int n = g.node_count();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<bool> used;
  std::function<bool(int)> try_augment = [&](int u) -> bool {
    for (int v : g.neighbors(u)) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      if (match[static_cast<std::size_t>(v)] < 0 || try_augment(match[static_cast<std::size_t>(v)])) {
        match[static_cast<std::size_t>(v)] = u;
        match[static_cast<std::size_t>(u)] = v;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    if (color[static_cast<std::size_t>(u)] != 0 || match[static_cast<std::size_t>(u)] >= 0) continue;
    used.assign(static_cast<std::size_t>(n), false);
    try_augment(u);
  }
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    int v = match[static_cast<std::size_t>(u)];
    if (v > u) out.emplace_back(u, v);
  }
  return out;
}

// Maximum-cardinality matching on a general graph (Edmonds' blossom
// algorithm, O(V^3)). Returns the mate array (-1 = unmatched).
inline std::vector<int> max_matching_general(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> p(static_cast<std::size_t>(n)), base(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));

  auto lca = [&](int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (;;) {
      a = base[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = true;
      if (match[static_cast<std::size_t>(a)] < 0) break;
      a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[static_cast<std::size_t>(v)] != b) {
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = true;
      p[static_cast<std::size_t>(v)] = child;
      child = match[static_cast<std::size_t>(v)];
      v = p[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
    }
  };

  auto find_path = [&](int root) -> int {
    used.assign(static_cast<std::size_t>(n), false);
    p.assign(static_cast<std::size_t>(n), -1);
    std::iota(base.begin(), base.end(), 0);
    used[static_cast<std::size_t>(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g.neighbors(v)) {
        if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
            match[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match[static_cast<std::size_t>(to)] >= 0 && p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] >= 0)) {
          // Odd cycle: contract the blossom.
          int cur_base = lca(v, to);
          blossom.assign(static_cast<std::size_t>(n), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
              base[static_cast<std::size_t>(i)] = cur_base;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = true;
                q.push(i);
              }
            }
          }
        } else if (p[static_cast<std::size_t>(to)] < 0) {
          p[static_cast<std::size_t>(to)] = v;
          if (match[static_cast<std::size_t>(to)] < 0) return to;
          used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
          q.push(match[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[static_cast<std::size_t>(v)] >= 0) continue;
    int u = find_path(v);
    while (u >= 0) {
      int pv = p[static_cast<std::size_t>(u)];
      int ppv = match[static_cast<std::size_t>(pv)];
      match[static_cast<std::size_t>(u)] = pv;
      match[static_cast<std::size_t>(pv)] = u;
      u = ppv;
    }
  }
  return match;
}

// Exact maximum-weight matching by subset DP (n <= ~20; the catalog caps
// this task at 18 nodes). Returns the chosen edges.
inline std::vector<Edge> max_weight_matching_exact(const Graph& g) {
  const int n = g.node_count();
  if (n > 20) throw DomainError("max_weight_matching_exact is capped at 20 nodes");
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<double> best(static_cast<std::size_t>(full) + 1, 0.0);
  // choice[mask]: -1 = leave lowest node unmatched, else index of the edge
  // matching it.
  std::vector<int> choice(static_cast<std::size_t>(full) + 1, -1);
  const auto& edges = g.edges();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    best[mask] = best[rest];
    choice[mask] = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      int other;
      if (e.u == low) other = e.v;
      else if (e.v == low) other = e.u;
      else continue;
      if (!(mask >> other & 1u)) continue;
      double cand = e.weight + best[mask & ~(1u << e.u) & ~(1u << e.v)];
      if (cand > best[mask]) {
        best[mask] = cand;
        choice[mask] = static_cast<int>(i);
      }
    }
  }
  std::vector<Edge> out;
  std::uint32_t mask = full;
  while (mask != 0) {
    int c = choice[mask];
    if (c < 0) {
      mask &= mask - 1;
    } else {
      out.push_back(edges[static_cast<std::size_t>(c)]);
      mask &= ~(1u << edges[static_cast<std::size_t>(c)].u);
      mask &= ~(1u << edges[static_cast<std::size_t>(c)].v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact solvers for the NP-hard tasks

// Held-Karp optimal travelling-salesman tour over a complete weighted graph
// (catalog cap: 13 nodes). Returns the tour starting and ending at node 0.
struct TspResult {
  std::vector<int> tour;  // n + 1 entries, tour.front() == tour.back() == 0
  double cost = 0.0;
};

inline TspResult held_karp_tsp(const Graph& g) {
  const int n = g.node_count();
  if (n > 16) throw DomainError("held_karp_tsp is capped at 16 nodes");
  std::vector<std::vector<double>> w(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.weight;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.weight;
  }
  const std::uint32_t full = (1u << n) - 1u;
  // dp[mask][last]: cheapest path from 0 through `mask` ending at `last`.
  std::vector<std::vector<double>> dp(full + 1,
                                      std::vector<double>(static_cast<std::size_t>(n), kInf));
  std::vector<std::vector<int>> prev(full + 1, std::vector<int>(static_cast<std::size_t>(n), -1));
  dp[1][0] = 0.0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1u)) continue;
    for (int last = 0; last < n; ++last) {
      double d = dp[mask][static_cast<std::size_t>(last)];
      if (d == kInf || !(mask >> last & 1u)) continue;
      for (int nxt = 1; nxt < n; ++nxt) {
        if (mask >> nxt & 1u) continue;
        double nd = d + w[static_cast<std::size_t>(last)][static_cast<std::size_t>(nxt)];
        std::uint32_t nmask = mask | (1u << nxt);
        if (nd < dp[nmask][static_cast<std::size_t>(nxt)]) {
          dp[nmask][static_cast<std::size_t>(nxt)] = nd;
          prev[nmask][static_cast<std::size_t>(nxt)] = last;
        }
      }
    }
  }
  TspResult res;
  if (n == 1) {
    res.tour = {0, 0};
    return res;
  }
  double best = kInf;
  int best_last = -1;
  for (int last = 1; last < n; ++last) {
    double c = dp[full][static_cast<std::size_t>(last)] + w[static_cast<std::size_t>(last)][0];
    if (c < best) {
      best = c;
      best_last = last;
    }
  }
  if (best_last < 0) throw DomainError("TSP requires a complete graph");
  res.cost = best;
  std::vector<int> rev{0};
  std::uint32_t mask = full;
  int cur = best_last;
  while (cur != -1) {
    rev.push_back(cur);
    int pr = prev[mask][static_cast<std::size_t>(cur)];
    mask &= ~(1u << cur);
    cur = pr;
  }
  std::reverse(rev.begin(), rev.end());
  res.tour = std::move(rev);
  return res;
}

// Hamiltonian path by subset DP over (visited set, last node); the catalog
// caps this task at 20 nodes. Returns a path or nullopt.
inline std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  const int n = g.node_count();
  if (n > 22) throw DomainError("hamiltonian_path DP is capped at 22 nodes");
  if (n == 0) return std::vector<int>{};
  if (n == 1) return std::vector<int>{0};
  auto adj = adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1u;
  // ends[mask] = bitset of nodes that can terminate a path covering `mask`.
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e != 0) {
      int last = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = static_cast<std::uint32_t>(adj[static_cast<std::size_t>(last)]) & ~mask & full;
      while (ext != 0) {
        int nxt = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << nxt)] |= 1u << nxt;
      }
    }
  }
  if (ends[full] == 0) return std::nullopt;
  // Walk backwards from any feasible endpoint.
  std::vector<int> path;
  std::uint32_t mask = full;
  int cur = std::countr_zero(ends[full]);
  path.push_back(cur);
  while (mask != (1u << cur)) {
    std::uint32_t pmask = mask & ~(1u << cur);
    std::uint32_t cands = ends[pmask] & static_cast<std::uint32_t>(adj[static_cast<std::size_t>(cur)]);
    int prev = std::countr_zero(cands);
    mask = pmask;
    cur = prev;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Exact minimum vertex cover by branch and bound with a greedy-matching
// lower bound. Tractable at the 35-node cap on the sparse instances the
// sampler emits.
inline std::vector<int> min_vertex_cover_exact(const Graph& g) {
  const int n = g.node_count();
  if (n > 64) throw DomainError("min_vertex_cover_exact requires n <= 64");
  auto adj = adjacency_masks(g);

  std::uint64_t best_cover = 0;
  int best_size = n + 1;
  // Seed the bound with the greedy 2-approximation.
  {
    std::uint64_t cover = 0;
    for (const Edge& e : g.edges()) {
      if ((cover >> e.u & 1ULL) || (cover >> e.v & 1ULL)) continue;
      cover |= (1ULL << e.u) | (1ULL << e.v);
    }
    best_cover = cover;
    best_size = std::popcount(cover);
  }

  auto matching_bound = [&](std::uint64_t active) {
    // Greedy maximal matching on the uncovered subgraph: each matched edge
    // forces at least one cover vertex.
    int bound = 0;
    std::uint64_t avail = active;
    while (avail != 0) {
      int u = std::countr_zero(avail);
      std::uint64_t nb = adj[static_cast<std::size_t>(u)] & avail;
      avail &= ~(1ULL << u);
      if (nb != 0) {
        int v = std::countr_zero(nb);
        avail &= ~(1ULL << v);
        ++bound;
      }
    }
    return bound;
  };

  // active: vertices not yet decided; chosen: current cover.
  std::function<void(std::uint64_t, std::uint64_t, int)> branch =
      [&](std::uint64_t active, std::uint64_t chosen, int size) {
        // Drop vertices with no uncovered incident edges.
        for (;;) {
          bool changed = false;
          std::uint64_t scan = active;
          while (scan != 0) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)] & active;
            if (nb == 0) {
              active &= ~(1ULL << v);
              changed = true;
            } else if (std::popcount(nb) == 1) {
              // Degree-1 rule: take the neighbor.
              int w = std::countr_zero(nb);
              chosen |= 1ULL << w;
              ++size;
              active &= ~(1ULL << w);
              active &= ~(1ULL << v);
              changed = true;
              if (size >= best_size) return;
            }
          }
          if (!changed) break;
        }
        if (active == 0) {
          if (size < best_size) {
            best_size = size;
            best_cover = chosen;
          }
          return;
        }
        if (size + matching_bound(active) >= best_size) return;
        // Branch on a maximum-degree vertex.
        int pick = -1, pick_deg = -1;
        std::uint64_t scan = active;
        while (scan != 0) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          int d = std::popcount(adj[static_cast<std::size_t>(v)] & active);
          if (d > pick_deg) {
            pick_deg = d;
            pick = v;
          }
        }
        // Either `pick` is in the cover...
        branch(active & ~(1ULL << pick), chosen | (1ULL << pick), size + 1);
        // ...or all of its live neighbors are.
        std::uint64_t nb = adj[static_cast<std::size_t>(pick)] & active;
        int k = std::popcount(nb);
        if (size + k < best_size)
          branch(active & ~nb & ~(1ULL << pick), chosen | nb, size + k);
      };

  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1ULL);
  branch(all, 0, 0);

  std::vector<int> cover;
  for (int v = 0; v < n; ++v)
    if (best_cover >> v & 1ULL) cover.push_back(v);
  return cover;
}

// Greedy dominating set: repeatedly take the node covering the most
// undominated nodes (smallest id on ties). Serves as the reference size for
// the dominating-set reward bound.
inline std::vector<int> greedy_dominating_set(const Graph& g) {
  const int n = g.node_count();
  if (n > 64) throw DomainError("greedy_dominating_set requires n <= 64");
  auto adj = adjacency_masks(g);
  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1ULL);
  std::uint64_t dominated = 0;
  std::vector<int> set;
  while (dominated != all) {
    int pick = -1, gain = -1;
    for (int v = 0; v < n; ++v) {
      std::uint64_t closed = adj[static_cast<std::size_t>(v)] | (1ULL << v);
      int got = std::popcount(closed & ~dominated);
      if (got > gain) {
        gain = got;
        pick = v;
      }
    }
    set.push_back(pick);
    dominated |= adj[static_cast<std::size_t>(pick)] | (1ULL << pick);
  }
  std::sort(set.begin(), set.end());
  return set;
}

// Greedy maximal independent set in ascending id order.
inline std::vector<int> greedy_maximal_independent_set(const Graph& g) {
  const int n = g.node_count();
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  std::vector<int> set;
  for (int v = 0; v < n; ++v) {
    if (blocked[static_cast<std::size_t>(v)]) continue;
    set.push_back(v);
    for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = true;
    if (g.directed())
      for (int w : g.in_neighbors(v)) blocked[static_cast<std::size_t>(w)] = true;
  }
  return set;
}

// Minimum edge cover: maximum matching plus one incident edge per exposed
// vertex (Gallai). Requires no isolated vertices.
inline std::vector<std::pair<int, int>> min_edge_cover(const Graph& g) {
  const int n = g.node_count();
  auto mate = max_matching_general(g);
  std::vector<std::pair<int, int>> cover;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw DomainError("edge cover requires no isolated vertices");
    if (mate[static_cast<std::size_t>(v)] > v) cover.emplace_back(v, mate[static_cast<std::size_t>(v)]);
  }
  for (int v = 0; v < n; ++v) {
    if (mate[static_cast<std::size_t>(v)] >= 0) continue;
    int w = g.neighbors(v).front();
    cover.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

// ---------------------------------------------------------------------------
// Maximum flow (Dinic). Capacities come from the weights of a directed graph.

inline double max_flow(const Graph& g, int source, int sink) {
  const int n = g.node_count();
  if (source == sink) throw DomainError("max flow needs distinct endpoints");
  struct Arc {
    int to;
    double cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(n));
  auto add_arc = [&](int u, int v, double c) {
    arcs[static_cast<std::size_t>(u)].push_back({v, c, static_cast<int>(arcs[static_cast<std::size_t>(v)].size())});
    arcs[static_cast<std::size_t>(v)].push_back({u, 0.0, static_cast<int>(arcs[static_cast<std::size_t>(u)].size()) - 1});
  };
  for (const Edge& e : g.edges()) {
    add_arc(e.u, e.v, e.weight);
    if (!g.directed()) add_arc(e.v, e.u, e.weight);
  }
  std::vector<int> level(static_cast<std::size_t>(n)), iter(static_cast<std::size_t>(n));
  auto bfs_levels = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : arcs[static_cast<std::size_t>(u)]) {
        if (a.cap > 1e-12 && level[static_cast<std::size_t>(a.to)] < 0) {
          level[static_cast<std::size_t>(a.to)] = level[static_cast<std::size_t>(u)] + 1;
          q.push(a.to);
        }
      }
    }
    return level[static_cast<std::size_t>(sink)] >= 0;
  };
  std::function<double(int, double)> push = [&](int u, double f) -> double {
    if (u == sink) return f;
    for (int& i = iter[static_cast<std::size_t>(u)];
         i < static_cast<int>(arcs[static_cast<std::size_t>(u)].size()); ++i) {
      Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      if (a.cap > 1e-12 && level[static_cast<std::size_t>(a.to)] == level[static_cast<std::size_t>(u)] + 1) {
        double got = push(a.to, std::min(f, a.cap));
        if (got > 0) {
          a.cap -= got;
          arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += got;
          return got;
        }
      }
    }
    return 0.0;
  };
  double flow = 0.0;
  while (bfs_levels()) {
    std::fill(iter.begin(), iter.end(), 0);
    for (;;) {
      double got = push(source, kInf);
      if (got <= 0) break;
      flow += got;
    }
  }
  return flow;
}

// ---------------------------------------------------------------------------
// Local structure

// Number of triangles containing node v.
inline int triangles_at(const Graph& g, int v) {
  auto adj = adjacency_masks(g);
  std::uint64_t nv = adj[static_cast<std::size_t>(v)];
  int count = 0;
  std::uint64_t scan = nv;
  while (scan != 0) {
    int u = std::countr_zero(scan);
    scan &= scan - 1;
    // Pair each neighbor u with higher-id common neighbors.
    count += std::popcount(adj[static_cast<std::size_t>(u)] & nv &
                           ~((2ULL << u) - 1ULL));
  }
  return count;
}

inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace graphtask
