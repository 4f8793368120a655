#include "phd/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace phd {

std::optional<std::string> validate(const Graph& g) {
  if (g.num_nodes < 0) return "negative node count";
  if (static_cast<int>(g.node_feats.size()) != g.num_nodes)
    return "node feature row count does not match num_nodes";
  for (int i = 1; i < g.num_nodes; ++i) {
    if (g.node_feats[i].size() != g.node_feats[0].size())
      return "inconsistent node feature width at node " + std::to_string(i);
  }
  std::set<std::pair<int, int>> seen;
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.u < 0 || e.u >= g.num_nodes || e.v < 0 || e.v >= g.num_nodes)
      return "edge " + std::to_string(k) + " (" + std::to_string(e.u) + "," +
             std::to_string(e.v) + "): endpoint out of range";
    if (e.u == e.v) return "edge " + std::to_string(k) + ": self-loop at node " + std::to_string(e.u);
    if (e.u > e.v) return "edge " + std::to_string(k) + ": endpoints not ordered u < v";
    if (!seen.insert({e.u, e.v}).second)
      return "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.feats.size() != g.edges[0].feats.size())
      return "inconsistent edge feature width at edge " + std::to_string(k);
  }
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, int lo, int hi) {
  if (lo < 0 || hi > g.num_nodes || lo >= hi)
    throw std::invalid_argument("induced_subgraph: window [" + std::to_string(lo) + "," +
                                std::to_string(hi) + ") invalid for " +
                                std::to_string(g.num_nodes) + " nodes");
  Graph out;
  out.num_nodes = hi - lo;
  out.node_feats.assign(g.node_feats.begin() + lo, g.node_feats.begin() + hi);
  for (const Edge& e : g.edges) {
    if (e.u >= lo && e.u < hi && e.v >= lo && e.v < hi)
      out.edges.push_back({e.u - lo, e.v - lo, e.feats});
  }
  out.label = g.label;
  return out;
}

DirectedEdgeList to_directed(const Graph& g) {
  DirectedEdgeList out;
  out.sources.reserve(2 * g.edges.size());
  out.targets.reserve(2 * g.edges.size());
  out.edge_feature_rows.reserve(2 * g.edges.size());
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    out.sources.push_back(e.u);
    out.targets.push_back(e.v);
    out.edge_feature_rows.push_back(static_cast<int>(k));
    out.sources.push_back(e.v);
    out.targets.push_back(e.u);
    out.edge_feature_rows.push_back(static_cast<int>(k));
  }
  return out;
}

BatchGraph disjoint_union(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw std::invalid_argument("disjoint_union: empty input");
  const int node_width = graphs[0].node_width();
  const int edge_width = graphs[0].edge_width();
  BatchGraph b;
  b.num_members = static_cast<int>(graphs.size());
  for (int m = 0; m < b.num_members; ++m) {
    const Graph& g = graphs[m];
    if (g.num_nodes > 0 && g.node_width() != node_width)
      throw std::invalid_argument("disjoint_union: heterogeneous node feature widths");
    if (!g.edges.empty() && g.edge_width() != edge_width)
      throw std::invalid_argument("disjoint_union: heterogeneous edge feature widths");
    const int offset = b.num_nodes;
    b.node_offsets.push_back(offset);
    for (int i = 0; i < g.num_nodes; ++i) {
      b.node_feats.push_back(g.node_feats[i]);
      b.graph_id_per_node.push_back(m);
    }
    for (const Edge& e : g.edges) b.edges.push_back({e.u + offset, e.v + offset, e.feats});
    b.labels.push_back(g.label.value_or(-1));
    b.num_nodes += g.num_nodes;
  }
  return b;
}

std::vector<Graph> split_batch(const BatchGraph& batch) {
  std::vector<Graph> out(batch.num_members);
  for (int m = 0; m < batch.num_members; ++m) {
    const int lo = batch.node_offsets[m];
    const int hi = (m + 1 < batch.num_members) ? batch.node_offsets[m + 1] : batch.num_nodes;
    out[m].num_nodes = hi - lo;
    out[m].node_feats.assign(batch.node_feats.begin() + lo, batch.node_feats.begin() + hi);
    if (batch.labels[m] >= 0) out[m].label = batch.labels[m];
  }
  for (const Edge& e : batch.edges) {
    const int m = batch.graph_id_per_node[e.u];
    const int lo = batch.node_offsets[m];
    out[m].edges.push_back({e.u - lo, e.v - lo, e.feats});
  }
  return out;
}

}  // namespace phd
