#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "collabdist/graph.hpp"
#include "collabdist/metric.hpp"
#include "collabdist/rational.hpp"

namespace collabdist {

using HopCount = std::uint32_t;

/// Geodesic distances; nullopt means the endpoints lie in different
/// components and no distance exists.
using UnweightedDistance = std::optional<HopCount>;
using WeightedDistance = std::optional<Rational>;

/// A shortest path, with one weight per edge (1 in unweighted mode,
/// 1/count in weighted mode). The vertex sequence has one entry and no
/// weights when source == target; total_length always equals the sum of
/// the edge weights and the corresponding distance.
struct GeodesicPath {
  std::vector<NodeId> vertices;
  std::vector<Rational> edge_weights;
  Rational total_length;
};

/// One enumerated simple path with its exact length.
struct PathListing {
  std::vector<NodeId> vertices;
  Rational length;
};

struct EnumerationLimits {
  std::size_t max_vertices;           // max vertices per path
  std::size_t max_paths = 1'000'000;  // LimitExceededError beyond this
};

/// Minimum number of edges on any path source -> target (the classical
/// collaboration number, e.g. the Erdős number when distances are taken
/// from Erdős).
UnweightedDistance unweighted_distance(const CollaborationGraph& g, NodeId source, NodeId target);

/// Minimum over all paths of the sum of reciprocal collaboration counts,
/// as an exact rational in lowest terms.
WeightedDistance weighted_distance(const CollaborationGraph& g, NodeId source, NodeId target);

/// Single-source variants; result indexed by NodeId, one entry per node.
std::vector<UnweightedDistance> unweighted_distances_from(const CollaborationGraph& g,
                                                          NodeId source);
std::vector<WeightedDistance> weighted_distances_from(const CollaborationGraph& g, NodeId source);

/// A shortest path source -> target, or nullopt when unreachable. Among all
/// geodesics the one with the lexicographically smallest vertex-id sequence
/// is returned, so results are deterministic.
std::optional<GeodesicPath> geodesic(const CollaborationGraph& g, NodeId source, NodeId target,
                                     Metric metric);

/// Exhaustively lists every simple path source -> target with at most
/// limits.max_vertices vertices, in lexicographic vertex order. Intended as
/// a brute-force oracle on small graphs: the minimum listed length equals
/// the distance whenever max_vertices >= node count. Throws
/// LimitExceededError once more than limits.max_paths paths are found.
std::vector<PathListing> enumerate_path_lengths(const CollaborationGraph& g, NodeId source,
                                                NodeId target, Metric metric,
                                                EnumerationLimits limits);

/// Histogram of distances from source over its component (the source
/// itself counts in bucket 0).
std::map<Rational, std::size_t> distance_distribution(const CollaborationGraph& g, NodeId source,
                                                      Metric metric);

}  // namespace collabdist
