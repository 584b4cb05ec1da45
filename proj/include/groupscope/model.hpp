#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groupscope/error.hpp"

namespace groupscope {

using NodeId = std::uint32_t;

enum class InteractionType : std::uint8_t { comment = 0, favorite = 1, contact = 2 };
inline constexpr std::array<InteractionType, 3> kAllKinds = {
    InteractionType::comment, InteractionType::favorite, InteractionType::contact};

enum class GroupOrigin : std::uint8_t { declared = 0, detected = 1 };

enum class TermChannel : std::uint8_t { pool = 0, comment = 1, favorite = 2 };
inline constexpr std::array<TermChannel, 3> kAllChannels = {
    TermChannel::pool, TermChannel::comment, TermChannel::favorite};

enum class GroupLabel : std::uint8_t { none = 0, social = 1, topical = 2, unknown = 3 };

const char* to_string(InteractionType kind);
const char* to_string(GroupOrigin origin);
const char* to_string(TermChannel channel);
const char* to_string(GroupLabel label);
std::optional<InteractionType> parse_interaction_type(std::string_view token);
std::optional<GroupOrigin> parse_group_origin(std::string_view token);
std::optional<TermChannel> parse_term_channel(std::string_view token);
std::optional<GroupLabel> parse_group_label(std::string_view token);

// A single directed interaction row, as ingested.
struct Interaction {
  std::string src;
  std::string dst;
  InteractionType kind = InteractionType::comment;
  std::optional<std::string> photo;
  std::optional<std::int64_t> timestamp;
};

// Maps opaque user tokens to dense node ids. Insertion order defines ids.
class UserInterner {
 public:
  NodeId intern(std::string_view token);
  std::optional<NodeId> find(std::string_view token) const;
  const std::string& name(NodeId id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  struct Eq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
  };
  std::unordered_map<std::string, NodeId, Hash, Eq> index_;
  std::vector<std::string> names_;
};

struct Group {
  std::string id;
  GroupOrigin origin = GroupOrigin::declared;
  std::vector<NodeId> members;  // sorted, unique, non-empty
  GroupLabel label = GroupLabel::none;

  std::uint64_t size() const { return members.size(); }
  bool contains(NodeId u) const;
};

struct TermBag {
  std::string group_id;
  TermChannel channel = TermChannel::pool;
  std::vector<std::pair<std::string, std::uint64_t>> counts;  // sorted by tag, counts >= 1
  std::uint64_t total = 0;  // |T(g)|, sum of counts

  std::uint64_t distinct() const { return counts.size(); }
};

// Directed multigraph of interactions. Reciprocity works on directed dyads
// (ordered pairs collapsed to existence); activity works on raw arc counts.
class InteractionGraph {
 public:
  std::size_t node_count() const { return node_count_; }
  std::uint64_t arc_count(InteractionType kind) const { return at(kind).arcs; }
  std::uint64_t dyad_count(InteractionType kind) const { return at(kind).out_nbr.size(); }
  std::uint64_t total_arc_count() const;

  std::span<const NodeId> out_neighbors(InteractionType kind, NodeId u) const;
  std::span<const std::uint32_t> out_multiplicities(InteractionType kind, NodeId u) const;
  std::span<const NodeId> in_neighbors(InteractionType kind, NodeId u) const;
  std::span<const std::uint32_t> in_multiplicities(InteractionType kind, NodeId u) const;

  std::uint32_t dyad_multiplicity(InteractionType kind, NodeId src, NodeId dst) const;
  bool has_dyad(InteractionType kind, NodeId src, NodeId dst) const {
    return dyad_multiplicity(kind, src, dst) != 0;
  }

  // Interaction volumes (arc counts, multiplicities included).
  std::uint64_t out_volume(InteractionType kind, NodeId u) const;
  std::uint64_t in_volume(InteractionType kind, NodeId u) const;

  bool operator==(const InteractionGraph& other) const;

 private:
  friend class GraphBuilder;

  struct KindIndex {
    std::vector<std::uint64_t> out_offsets;  // node_count + 1
    std::vector<NodeId> out_nbr;
    std::vector<std::uint32_t> out_mult;
    std::vector<std::uint64_t> in_offsets;
    std::vector<NodeId> in_nbr;
    std::vector<std::uint32_t> in_mult;
    std::vector<std::uint64_t> out_volume;
    std::vector<std::uint64_t> in_volume;
    std::uint64_t arcs = 0;

    bool operator==(const KindIndex&) const = default;
  };

  const KindIndex& at(InteractionType kind) const {
    return kinds_[static_cast<std::size_t>(kind)];
  }

  std::array<KindIndex, 3> kinds_;
  std::size_t node_count_ = 0;
};

// Accumulates arcs, then finalizes into an immutable InteractionGraph.
// Self-loops are dropped and tallied here; duplicate contact dyads are
// collapsed to multiplicity 1 at finalize time.
class GraphBuilder {
 public:
  void add_arc(NodeId src, NodeId dst, InteractionType kind);
  std::uint64_t self_loops_dropped() const { return self_loops_; }
  std::uint64_t duplicate_contacts() const { return duplicate_contacts_; }

  // node_count must cover every id referenced by an arc. Ids without arcs are
  // valid isolated nodes.
  InteractionGraph finalize(std::size_t node_count);

 private:
  std::array<std::vector<std::pair<NodeId, NodeId>>, 3> arcs_;
  std::uint64_t self_loops_ = 0;
  std::uint64_t duplicate_contacts_ = 0;
};

// Dyad- and arc-level census of one group for one interaction kind.
// Reciprocated dyad counts are over ordered pairs, so they come in twos.
struct EdgePartition {
  std::string group_id;
  InteractionType kind = InteractionType::comment;
  std::uint64_t internal_reciprocated_dyads = 0;
  std::uint64_t internal_nonreciprocated_dyads = 0;
  std::uint64_t internal_arcs = 0;  // E_int
  std::uint64_t boundary_reciprocated_dyads = 0;
  std::uint64_t boundary_nonreciprocated_dyads = 0;
  std::uint64_t boundary_arcs = 0;  // E_ext, exactly one endpoint in the group
  std::uint64_t group_in_arcs = 0;   // D_in, arcs targeting members
  std::uint64_t group_out_arcs = 0;  // D_out, arcs originated by members
  std::uint32_t members_outside_graph = 0;

  std::uint64_t internal_dyads() const {
    return internal_reciprocated_dyads + internal_nonreciprocated_dyads;
  }
  std::uint64_t boundary_dyads() const {
    return boundary_reciprocated_dyads + boundary_nonreciprocated_dyads;
  }
};

// Members not present in the graph are tolerated and treated as isolated;
// their count is reported in members_outside_graph.
EdgePartition partition_edges(const InteractionGraph& graph, const Group& group,
                              InteractionType kind);

// Immutable after assembly; safe to share across reader threads.
struct Corpus {
  UserInterner users;
  InteractionGraph graph;
  std::vector<Group> groups;    // sorted by id
  std::vector<TermBag> bags;    // sorted by (group_id, channel)

  const Group* find_group(std::string_view id) const;
  const TermBag* find_bag(std::string_view group_id, TermChannel channel) const;
};

// Sorts groups/bags and finalizes ordering invariants.
Corpus assemble_corpus(UserInterner users, InteractionGraph graph, std::vector<Group> groups,
                       std::vector<TermBag> bags);

}  // namespace groupscope
