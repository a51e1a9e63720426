#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphtask/errors.hpp"

namespace graphtask {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.weight < b.weight;
  }
};

// Finite simple graph with nodes 0..n-1, optionally directed and/or
// edge-weighted. Immutable after construction; all accessors are const, so
// instances can be shared freely across threads.
//
// Invariants enforced by the constructor:
//   - every endpoint in [0, node_count)
//   - no self-loops, no duplicate edges
//   - undirected edges stored canonically with u < v
//   - weights strictly positive and present iff `weighted`
class Graph {
 public:
  Graph() = default;

  Graph(int node_count, std::vector<Edge> edges, bool directed, bool weighted)
      : node_count_(node_count), directed_(directed), weighted_(weighted) {
    if (node_count < 0) throw DomainError("node_count must be non-negative");
    for (Edge& e : edges) {
      if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_)
        throw DomainError("edge endpoint out of range");
      if (e.u == e.v) throw DomainError("self-loops are not allowed");
      if (!weighted_) {
        e.weight = 1.0;
      } else if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
        throw SchemaError("edge weights must be positive finite numbers");
      }
      if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    // Duplicate arcs collapse to the first occurrence after canonicalization.
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) {
                              return a.u == b.u && a.v == b.v;
                            }),
                edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<std::size_t>(node_count_), {});
    if (directed_) in_adj_.assign(static_cast<std::size_t>(node_count_), {});
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      if (directed_) {
        in_adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
      } else {
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
      }
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : in_adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Out-neighbors for directed graphs, all neighbors otherwise. Sorted.
  const std::vector<int>& neighbors(int v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  const std::vector<int>& in_neighbors(int v) const {
    check_node(v);
    return directed_ ? in_adj_[static_cast<std::size_t>(v)]
                     : adj_[static_cast<std::size_t>(v)];
  }

  // Total degree: |N(v)| undirected, in-degree + out-degree directed.
  int degree(int v) const {
    check_node(v);
    int d = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    if (directed_) d += static_cast<int>(in_adj_[static_cast<std::size_t>(v)].size());
    return d;
  }

  int out_degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  bool has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  // Weight of arc u->v (or undirected edge {u,v}); nullopt if absent.
  std::optional<double> edge_weight(int u, int v) const {
    check_node(u);
    check_node(v);
    int a = u, b = v;
    if (!directed_ && a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b, 0.0},
                               [](const Edge& e, const Edge& k) {
                                 return e.u != k.u ? e.u < k.u : e.v < k.v;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
    return it->weight;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.directed_ == b.directed_ &&
           a.weighted_ == b.weighted_ && a.edges_ == b.edges_;
  }

 private:
  void check_node(int v) const {
    if (v < 0 || v >= node_count_) throw DomainError("node id out of range");
  }

  int node_count_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> in_adj_;  // directed only
};

// Adjacency bitmasks over the undirected view (row v has bit w set iff an
// edge touches v and w in either direction). Only valid for n <= 64; task
// graphs are capped at 35 nodes.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.node_count() > 64) throw DomainError("adjacency_masks requires n <= 64");
  std::vector<std::uint64_t> m(static_cast<std::size_t>(g.node_count()), 0);
  for (const Edge& e : g.edges()) {
    m[static_cast<std::size_t>(e.u)] |= 1ULL << e.v;
    m[static_cast<std::size_t>(e.v)] |= 1ULL << e.u;
  }
  return m;
}

}  // namespace graphtask
