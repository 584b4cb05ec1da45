#include "groupscope/model.hpp"

#include <algorithm>
#include <cassert>

namespace groupscope {

const char* to_string(InteractionType kind) {
  switch (kind) {
    case InteractionType::comment: return "comment";
    case InteractionType::favorite: return "favorite";
    case InteractionType::contact: return "contact";
  }
  return "?";
}

const char* to_string(GroupOrigin origin) {
  return origin == GroupOrigin::declared ? "declared" : "detected";
}

const char* to_string(TermChannel channel) {
  switch (channel) {
    case TermChannel::pool: return "pool";
    case TermChannel::comment: return "comment";
    case TermChannel::favorite: return "favorite";
  }
  return "?";
}

const char* to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::none: return "none";
    case GroupLabel::social: return "social";
    case GroupLabel::topical: return "topical";
    case GroupLabel::unknown: return "unknown";
  }
  return "?";
}

std::optional<InteractionType> parse_interaction_type(std::string_view token) {
  if (token == "comment") return InteractionType::comment;
  if (token == "favorite") return InteractionType::favorite;
  if (token == "contact") return InteractionType::contact;
  return std::nullopt;
}

std::optional<GroupOrigin> parse_group_origin(std::string_view token) {
  if (token == "declared") return GroupOrigin::declared;
  if (token == "detected") return GroupOrigin::detected;
  return std::nullopt;
}

std::optional<TermChannel> parse_term_channel(std::string_view token) {
  if (token == "pool") return TermChannel::pool;
  if (token == "comment") return TermChannel::comment;
  if (token == "favorite") return TermChannel::favorite;
  return std::nullopt;
}

std::optional<GroupLabel> parse_group_label(std::string_view token) {
  if (token == "social") return GroupLabel::social;
  if (token == "topical") return GroupLabel::topical;
  if (token == "unknown") return GroupLabel::unknown;
  return std::nullopt;
}

NodeId UserInterner::intern(std::string_view token) {
  const auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(names_.size());
  names_.emplace_back(token);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<NodeId> UserInterner::find(std::string_view token) const {
  const auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Group::contains(NodeId u) const {
  return std::binary_search(members.begin(), members.end(), u);
}

std::uint64_t InteractionGraph::total_arc_count() const {
  std::uint64_t total = 0;
  for (const auto& k : kinds_) total += k.arcs;
  return total;
}

std::span<const NodeId> InteractionGraph::out_neighbors(InteractionType kind, NodeId u) const {
  const auto& k = at(kind);
  if (u >= node_count_) return {};
  return {k.out_nbr.data() + k.out_offsets[u], k.out_nbr.data() + k.out_offsets[u + 1]};
}

std::span<const std::uint32_t> InteractionGraph::out_multiplicities(InteractionType kind,
                                                                    NodeId u) const {
  const auto& k = at(kind);
  if (u >= node_count_) return {};
  return {k.out_mult.data() + k.out_offsets[u], k.out_mult.data() + k.out_offsets[u + 1]};
}

std::span<const NodeId> InteractionGraph::in_neighbors(InteractionType kind, NodeId u) const {
  const auto& k = at(kind);
  if (u >= node_count_) return {};
  return {k.in_nbr.data() + k.in_offsets[u], k.in_nbr.data() + k.in_offsets[u + 1]};
}

std::span<const std::uint32_t> InteractionGraph::in_multiplicities(InteractionType kind,
                                                                   NodeId u) const {
  const auto& k = at(kind);
  if (u >= node_count_) return {};
  return {k.in_mult.data() + k.in_offsets[u], k.in_mult.data() + k.in_offsets[u + 1]};
}

std::uint32_t InteractionGraph::dyad_multiplicity(InteractionType kind, NodeId src,
                                                  NodeId dst) const {
  const auto nbrs = out_neighbors(kind, src);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), dst);
  if (it == nbrs.end() || *it != dst) return 0;
  return out_multiplicities(kind, src)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::uint64_t InteractionGraph::out_volume(InteractionType kind, NodeId u) const {
  const auto& k = at(kind);
  return u < node_count_ ? k.out_volume[u] : 0;
}

std::uint64_t InteractionGraph::in_volume(InteractionType kind, NodeId u) const {
  const auto& k = at(kind);
  return u < node_count_ ? k.in_volume[u] : 0;
}

bool InteractionGraph::operator==(const InteractionGraph& other) const {
  return node_count_ == other.node_count_ && kinds_ == other.kinds_;
}

void GraphBuilder::add_arc(NodeId src, NodeId dst, InteractionType kind) {
  if (src == dst) {
    ++self_loops_;
    return;
  }
  arcs_[static_cast<std::size_t>(kind)].emplace_back(src, dst);
}

namespace {

struct DyadRun {
  NodeId src;
  NodeId dst;
  std::uint32_t multiplicity;
};

}  // namespace

InteractionGraph GraphBuilder::finalize(std::size_t node_count) {
  InteractionGraph graph;
  graph.node_count_ = node_count;
  for (const auto kind : kAllKinds) {
    auto& raw = arcs_[static_cast<std::size_t>(kind)];
    std::sort(raw.begin(), raw.end());
    std::vector<DyadRun> dyads;
    dyads.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
      std::size_t j = i;
      while (j < raw.size() && raw[j] == raw[i]) ++j;
      auto mult = static_cast<std::uint32_t>(j - i);
      if (kind == InteractionType::contact && mult > 1) {
        duplicate_contacts_ += mult - 1;
        mult = 1;
      }
      dyads.push_back({raw[i].first, raw[i].second, mult});
      i = j;
    }
    raw.clear();
    raw.shrink_to_fit();

    auto& idx = graph.kinds_[static_cast<std::size_t>(kind)];
    idx.out_offsets.assign(node_count + 1, 0);
    idx.in_offsets.assign(node_count + 1, 0);
    idx.out_volume.assign(node_count, 0);
    idx.in_volume.assign(node_count, 0);
    idx.out_nbr.resize(dyads.size());
    idx.out_mult.resize(dyads.size());
    idx.in_nbr.resize(dyads.size());
    idx.in_mult.resize(dyads.size());

    for (const auto& d : dyads) {
      assert(d.src < node_count && d.dst < node_count);
      ++idx.out_offsets[d.src + 1];
      ++idx.in_offsets[d.dst + 1];
      idx.out_volume[d.src] += d.multiplicity;
      idx.in_volume[d.dst] += d.multiplicity;
      idx.arcs += d.multiplicity;
    }
    for (std::size_t i = 1; i <= node_count; ++i) {
      idx.out_offsets[i] += idx.out_offsets[i - 1];
      idx.in_offsets[i] += idx.in_offsets[i - 1];
    }
    // dyads are sorted by (src, dst): filling forward keeps rows sorted by
    // neighbor on the out side
    {
      std::vector<std::uint64_t> cursor(idx.out_offsets.begin(), idx.out_offsets.end() - 1);
      for (const auto& d : dyads) {
        const auto at = cursor[d.src]++;
        idx.out_nbr[at] = d.dst;
        idx.out_mult[at] = d.multiplicity;
      }
    }
    {
      std::sort(dyads.begin(), dyads.end(), [](const DyadRun& a, const DyadRun& b) {
        return a.dst != b.dst ? a.dst < b.dst : a.src < b.src;
      });
      std::vector<std::uint64_t> cursor(idx.in_offsets.begin(), idx.in_offsets.end() - 1);
      for (const auto& d : dyads) {
        const auto at = cursor[d.dst]++;
        idx.in_nbr[at] = d.src;
        idx.in_mult[at] = d.multiplicity;
      }
    }
  }
  return graph;
}

EdgePartition partition_edges(const InteractionGraph& graph, const Group& group,
                              InteractionType kind) {
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t token = 0;

  const std::size_t n = graph.node_count();
  if (stamp.size() < n) stamp.resize(n, 0);
  if (++token == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    token = 1;
  }

  EdgePartition part;
  part.group_id = group.id;
  part.kind = kind;

  for (const NodeId u : group.members) {
    if (u >= n) {
      ++part.members_outside_graph;
      continue;
    }
    stamp[u] = token;
  }

  for (const NodeId u : group.members) {
    if (u >= n) continue;
    part.group_in_arcs += graph.in_volume(kind, u);
    part.group_out_arcs += graph.out_volume(kind, u);

    const auto out_nbrs = graph.out_neighbors(kind, u);
    const auto out_mults = graph.out_multiplicities(kind, u);
    for (std::size_t i = 0; i < out_nbrs.size(); ++i) {
      const NodeId v = out_nbrs[i];
      const bool internal = stamp[v] == token;
      const bool reciprocated = graph.has_dyad(kind, v, u);
      if (internal) {
        part.internal_arcs += out_mults[i];
        if (reciprocated) {
          ++part.internal_reciprocated_dyads;
        } else {
          ++part.internal_nonreciprocated_dyads;
        }
      } else {
        part.boundary_arcs += out_mults[i];
        if (reciprocated) {
          ++part.boundary_reciprocated_dyads;
        } else {
          ++part.boundary_nonreciprocated_dyads;
        }
      }
    }

    // arcs arriving from outside the group; internal in-arcs were already
    // counted from their source member
    const auto in_nbrs = graph.in_neighbors(kind, u);
    const auto in_mults = graph.in_multiplicities(kind, u);
    for (std::size_t i = 0; i < in_nbrs.size(); ++i) {
      const NodeId w = in_nbrs[i];
      if (stamp[w] == token) continue;
      part.boundary_arcs += in_mults[i];
      if (graph.has_dyad(kind, u, w)) {
        ++part.boundary_reciprocated_dyads;
      } else {
        ++part.boundary_nonreciprocated_dyads;
      }
    }
  }
  return part;
}

const Group* Corpus::find_group(std::string_view id) const {
  const auto it = std::lower_bound(groups.begin(), groups.end(), id,
                                   [](const Group& g, std::string_view v) { return g.id < v; });
  if (it == groups.end() || it->id != id) return nullptr;
  return &*it;
}

const TermBag* Corpus::find_bag(std::string_view group_id, TermChannel channel) const {
  const auto key = std::make_pair(group_id, channel);
  const auto it = std::lower_bound(
      bags.begin(), bags.end(), key, [](const TermBag& b, const auto& k) {
        if (b.group_id != k.first) return b.group_id < k.first;
        return b.channel < k.second;
      });
  if (it == bags.end() || it->group_id != group_id || it->channel != channel) return nullptr;
  return &*it;
}

Corpus assemble_corpus(UserInterner users, InteractionGraph graph, std::vector<Group> groups,
                       std::vector<TermBag> bags) {
  Corpus corpus;
  corpus.users = std::move(users);
  corpus.graph = std::move(graph);
  corpus.groups = std::move(groups);
  corpus.bags = std::move(bags);
  std::sort(corpus.groups.begin(), corpus.groups.end(),
            [](const Group& a, const Group& b) { return a.id < b.id; });
  std::sort(corpus.bags.begin(), corpus.bags.end(), [](const TermBag& a, const TermBag& b) {
    if (a.group_id != b.group_id) return a.group_id < b.group_id;
    return a.channel < b.channel;
  });
  return corpus;
}

}  // namespace groupscope
