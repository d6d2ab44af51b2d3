#include "collabdist/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "collabdist/util.hpp"

namespace collabdist {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::optional<NodeId> CollaborationGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(trim(label)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& CollaborationGraph::label(NodeId id) const {
  check(id);
  return labels_[id];
}

std::span<const Neighbor> CollaborationGraph::neighbors(NodeId id) const {
  check(id);
  return {adjacency_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
}

std::uint64_t CollaborationGraph::collaboration_count(NodeId a, NodeId b) const {
  check(a);
  check(b);
  if (a == b) return 0;
  const auto row = neighbors(a);
  const auto it = std::lower_bound(row.begin(), row.end(), b,
                                   [](const Neighbor& n, NodeId id) { return n.id < id; });
  return (it != row.end() && it->id == b) ? it->count : 0;
}

std::vector<NodeId> CollaborationGraph::connected_component(NodeId id) const {
  check(id);
  std::vector<char> seen(node_count(), 0);
  std::vector<NodeId> queue{id};
  seen[id] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Neighbor& n : neighbors(queue[head])) {
      if (!seen[n.id]) {
        seen[n.id] = 1;
        queue.push_back(n.id);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<NodeId>> CollaborationGraph::components() const {
  std::vector<std::vector<NodeId>> cells;
  std::vector<char> seen(node_count(), 0);
  for (NodeId start = 0; start < node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> cell{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < cell.size(); ++head) {
      for (const Neighbor& n : neighbors(cell[head])) {
        if (!seen[n.id]) {
          seen[n.id] = 1;
          cell.push_back(n.id);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<EdgeRecord> CollaborationGraph::edge_list() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (const Neighbor& n : neighbors(u)) {
      if (n.id <= u) continue;
      const std::string& la = labels_[u];
      const std::string& lb = labels_[n.id];
      if (la < lb)
        out.push_back({la, lb, n.count});
      else
        out.push_back({lb, la, n.count});
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgeRecord& x, const EdgeRecord& y) {
    return std::tie(x.author_a, x.author_b) < std::tie(y.author_a, y.author_b);
  });
  return out;
}

void CollaborationGraph::check(NodeId id) const {
  if (id >= node_count())
    throw UnknownNodeError("node id " + std::to_string(id) + " out of range (graph has " +
                           std::to_string(node_count()) + " nodes)");
}

CollaborationGraph build_graph(std::span<const EdgeRecord> edges,
                               std::span<const std::string> isolated) {
  CollaborationGraph g;

  const auto intern = [&g](std::string_view raw) -> NodeId {
    const auto label = trim(raw);
    if (label.empty()) throw std::invalid_argument("empty author label");
    const auto [it, inserted] =
        g.index_.try_emplace(std::string(label), static_cast<NodeId>(g.labels_.size()));
    if (inserted) g.labels_.emplace_back(label);
    return it->second;
  };

  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  counts.reserve(edges.size());
  for (const EdgeRecord& e : edges) {
    const NodeId a = intern(e.author_a);
    const NodeId b = intern(e.author_b);
    if (a == b) throw SelfEdgeError("author '" + g.labels_[a] + "' paired with itself");
    if (e.count == 0)
      throw NonPositiveCountError("collaboration count for ('" + g.labels_[a] + "', '" +
                                  g.labels_[b] + "') must be >= 1");
    auto& total = counts[pair_key(a, b)];
    if (__builtin_add_overflow(total, e.count, &total)) throw ArithmeticOverflowError();
  }
  for (const std::string& label : isolated) intern(label);

  const std::size_t n = g.labels_.size();
  g.edge_count_ = counts.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& [key, count] : counts) {
    ++g.offsets_[(key >> 32) + 1];
    ++g.offsets_[(key & 0xffffffffu) + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.adjacency_.resize(2 * counts.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [key, count] : counts) {
    const NodeId a = static_cast<NodeId>(key >> 32);
    const NodeId b = static_cast<NodeId>(key & 0xffffffffu);
    g.adjacency_[cursor[a]++] = {b, count};
    g.adjacency_[cursor[b]++] = {a, count};
  }
  for (NodeId u = 0; u < n; ++u) {
    std::sort(g.adjacency_.begin() + g.offsets_[u], g.adjacency_.begin() + g.offsets_[u + 1],
              [](const Neighbor& x, const Neighbor& y) { return x.id < y.id; });
  }
  return g;
}

CollaborationGraph build_graph(std::initializer_list<EdgeRecord> edges) {
  return build_graph(std::span<const EdgeRecord>(edges.begin(), edges.size()));
}

}  // namespace collabdist
