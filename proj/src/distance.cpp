#include "collabdist/distance.hpp"

#include <queue>
#include <string>

namespace collabdist {

namespace {

void ensure_node(const CollaborationGraph& g, NodeId id) {
  if (id >= g.node_count())
    throw UnknownNodeError("node id " + std::to_string(id) + " out of range (graph has " +
                           std::to_string(g.node_count()) + " nodes)");
}

Rational edge_weight(Metric metric, std::uint64_t count) {
  return metric == Metric::Unweighted ? Rational(1) : Rational(1, Int128(count));
}

struct QueueEntry {
  Rational distance;
  NodeId node;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.distance != b.distance) return b.distance < a.distance;  // min-heap
    return b.node < a.node;
  }
};

}  // namespace

std::vector<UnweightedDistance> unweighted_distances_from(const CollaborationGraph& g,
                                                          NodeId source) {
  ensure_node(g, source);
  std::vector<UnweightedDistance> dist(g.node_count());
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const HopCount next = *dist[u] + 1;
    for (const Neighbor& n : g.neighbors(u)) {
      if (!dist[n.id]) {
        dist[n.id] = next;
        queue.push_back(n.id);
      }
    }
  }
  return dist;
}

std::vector<WeightedDistance> weighted_distances_from(const CollaborationGraph& g, NodeId source) {
  ensure_node(g, source);
  std::vector<WeightedDistance> dist(g.node_count());
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> heap;
  dist[source] = Rational(0);
  heap.push({Rational(0), source});
  while (!heap.empty()) {
    const QueueEntry top = heap.top();
    heap.pop();
    if (*dist[top.node] < top.distance) continue;  // stale entry
    for (const Neighbor& n : g.neighbors(top.node)) {
      Rational candidate = top.distance + edge_weight(Metric::Weighted, n.count);
      if (!dist[n.id] || candidate < *dist[n.id]) {
        dist[n.id] = candidate;
        heap.push({std::move(candidate), n.id});
      }
    }
  }
  return dist;
}

UnweightedDistance unweighted_distance(const CollaborationGraph& g, NodeId source, NodeId target) {
  ensure_node(g, target);
  return unweighted_distances_from(g, source)[target];
}

WeightedDistance weighted_distance(const CollaborationGraph& g, NodeId source, NodeId target) {
  ensure_node(g, target);
  return weighted_distances_from(g, source)[target];
}

std::optional<GeodesicPath> geodesic(const CollaborationGraph& g, NodeId source, NodeId target,
                                     Metric metric) {
  ensure_node(g, source);
  ensure_node(g, target);
  if (source == target) return GeodesicPath{{source}, {}, Rational(0)};

  // Distances to the target; the graph is undirected so one sweep suffices.
  std::vector<WeightedDistance> to_target;
  if (metric == Metric::Weighted) {
    to_target = weighted_distances_from(g, target);
  } else {
    to_target.resize(g.node_count());
    const auto hops = unweighted_distances_from(g, target);
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (hops[v]) to_target[v] = Rational(static_cast<long long>(*hops[v]));
  }
  if (!to_target[source]) return std::nullopt;

  // Walk from the source, always taking the smallest neighbor id that still
  // lies on some geodesic; this realizes the lexicographic tie-break.
  GeodesicPath path{{source}, {}, *to_target[source]};
  NodeId u = source;
  while (u != target) {
    for (const Neighbor& n : g.neighbors(u)) {
      if (!to_target[n.id]) continue;
      const Rational w = edge_weight(metric, n.count);
      if (*to_target[n.id] + w == *to_target[u]) {
        path.vertices.push_back(n.id);
        path.edge_weights.push_back(w);
        u = n.id;
        break;
      }
    }
  }
  return path;
}

std::vector<PathListing> enumerate_path_lengths(const CollaborationGraph& g, NodeId source,
                                                NodeId target, Metric metric,
                                                EnumerationLimits limits) {
  ensure_node(g, source);
  ensure_node(g, target);
  std::vector<PathListing> out;
  if (limits.max_vertices == 0) return out;

  std::vector<char> on_path(g.node_count(), 0);
  std::vector<NodeId> path;
  const auto dfs = [&](auto&& self, NodeId u, const Rational& length) -> void {
    path.push_back(u);
    on_path[u] = 1;
    if (u == target) {
      // Simple paths cannot extend past the target and return to it.
      if (out.size() >= limits.max_paths)
        throw LimitExceededError("path enumeration exceeded the cap of " +
                                 std::to_string(limits.max_paths) + " paths");
      out.push_back({path, length});
    } else if (path.size() < limits.max_vertices) {
      for (const Neighbor& n : g.neighbors(u))
        if (!on_path[n.id]) self(self, n.id, length + edge_weight(metric, n.count));
    }
    on_path[u] = 0;
    path.pop_back();
  };
  dfs(dfs, source, Rational(0));
  return out;
}

std::map<Rational, std::size_t> distance_distribution(const CollaborationGraph& g, NodeId source,
                                                      Metric metric) {
  std::map<Rational, std::size_t> histogram;
  if (metric == Metric::Weighted) {
    for (const auto& d : weighted_distances_from(g, source))
      if (d) ++histogram[*d];
  } else {
    for (const auto& d : unweighted_distances_from(g, source))
      if (d) ++histogram[Rational(static_cast<long long>(*d))];
  }
  return histogram;
}

}  // namespace collabdist
