#pragma once

#include <optional>
#include <string>
#include <vector>

namespace phd {

// Undirected edge, stored once with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  std::vector<int> feats;
};

// Attributed undirected graph with categorical node/edge features.
// Node ordering follows ingestion order and is semantically meaningful:
// decomposition splits the index range, nothing is canonicalized.
struct Graph {
  int num_nodes = 0;
  std::vector<std::vector<int>> node_feats;  // [num_nodes][node_width]
  std::vector<Edge> edges;
  std::optional<int> label;

  int node_width() const { return node_feats.empty() ? 0 : static_cast<int>(node_feats[0].size()); }
  int edge_width() const { return edges.empty() ? 0 : static_cast<int>(edges[0].feats.size()); }
};

// Returns std::nullopt when every invariant holds, otherwise a description
// of the first violated invariant.
std::optional<std::string> validate(const Graph& g);

// Induced subgraph on the contiguous node range [lo, hi), re-indexed from 0.
// Edges with an endpoint outside the range are dropped.
// Throws std::invalid_argument on an empty or out-of-range window.
Graph induced_subgraph(const Graph& g, int lo, int hi);

// Both directions of every undirected edge, sharing one feature row.
struct DirectedEdgeList {
  std::vector<int> sources;
  std::vector<int> targets;
  std::vector<int> edge_feature_rows;  // row index into the undirected edge list

  size_t size() const { return sources.size(); }
};

DirectedEdgeList to_directed(const Graph& g);

// Disjoint union of member graphs with node indices shifted by offsets.
struct BatchGraph {
  int num_nodes = 0;
  int num_members = 0;
  std::vector<std::vector<int>> node_feats;
  std::vector<Edge> edges;        // endpoints in batch-global indices
  std::vector<int> node_offsets;  // first node of each member
  std::vector<int> graph_id_per_node;
  std::vector<int> labels;  // per member, -1 when unlabeled
};

BatchGraph disjoint_union(const std::vector<Graph>& graphs);

// Inverse of disjoint_union; used to check the round-trip property.
std::vector<Graph> split_batch(const BatchGraph& batch);

}  // namespace phd
