#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "collabdist/errors.hpp"

namespace collabdist {

using NodeId = std::uint32_t;

/// One input edge: an unordered author pair with a joint-publication count.
struct EdgeRecord {
  std::string author_a;
  std::string author_b;
  std::uint64_t count = 1;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct Neighbor {
  NodeId id;
  std::uint64_t count;  // joint publications on this edge, >= 1

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected collaboration graph.
///
/// Nodes are authors, edges carry the number of joint publications of the
/// two endpoints. Node ids are dense (0..N-1) and assigned in
/// first-appearance order of the build input, so builds are reproducible.
/// Once built the graph never changes; every read operation is safe for any
/// number of concurrent callers.
class CollaborationGraph {
 public:
  CollaborationGraph() : offsets_(1, 0) {}

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Looks a label up after trimming; nullopt when absent.
  std::optional<NodeId> find(std::string_view label) const;

  const std::string& label(NodeId id) const;

  /// Adjacency of one node, ascending by neighbor id.
  std::span<const Neighbor> neighbors(NodeId id) const;

  /// Number of joint publications of a and b; 0 when not adjacent (and
  /// always 0 for a node with itself).
  std::uint64_t collaboration_count(NodeId a, NodeId b) const;

  /// All nodes reachable from id, ascending, including id itself.
  std::vector<NodeId> connected_component(NodeId id) const;

  /// Disjoint cover of all nodes; each cell ascending, cells ordered by
  /// their smallest member.
  std::vector<std::vector<NodeId>> components() const;

  /// Canonical edge list: each pair ordered lexicographically by label,
  /// rows sorted the same way.
  std::vector<EdgeRecord> edge_list() const;

  friend bool operator==(const CollaborationGraph& a, const CollaborationGraph& b) {
    return a.labels_ == b.labels_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend CollaborationGraph build_graph(std::span<const EdgeRecord> edges,
                                        std::span<const std::string> isolated);

  void check(NodeId id) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size node_count()+1
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge list. Labels are trimmed and interned in
/// first-appearance order; duplicate unordered pairs are merged by summing
/// their counts. `isolated` appends labels that have no edges (they cannot
/// be expressed in the edge list itself).
///
/// Throws SelfEdgeError when a pair's endpoints coincide after trimming and
/// NonPositiveCountError when a count is zero.
CollaborationGraph build_graph(std::span<const EdgeRecord> edges,
                               std::span<const std::string> isolated = {});

CollaborationGraph build_graph(std::initializer_list<EdgeRecord> edges);

}  // namespace collabdist
