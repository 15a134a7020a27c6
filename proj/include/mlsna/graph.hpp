#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlsna/error.hpp"

namespace mlsna {

struct EdgeRecord {
    std::string source;
    std::string target;
    std::string layer;
    double weight = 1.0;
};

struct EventRecord {
    std::string source;
    std::string target;
    std::string layer;
    double weight = 1.0;
    std::int64_t timestamp = 0;
};

/// Multi-layered social network: a node set, an ordered layer set and at
/// most one directed weighted edge per (source, target, layer) triple.
/// Node and layer ids are opaque strings; internally both are re-indexed
/// to dense integers, sorted lexicographically so that construction is
/// order-independent. Immutable after construction.
class Msn {
public:
    Msn() = default;

    /// Build from edge records. Nodes and layers are inferred.
    /// Throws SelfLoop, DuplicateEdge, WeightOutOfRange (negative/non-finite).
    static Msn from_records(const std::vector<EdgeRecord>& records);

    /// Same, but with node/layer universes fixed up front (extra ids allowed).
    static Msn from_records(const std::vector<EdgeRecord>& records,
                            std::vector<std::string> nodes,
                            std::vector<std::string> layers);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int layer_count() const { return static_cast<int>(layers_.size()); }
    std::size_t edge_count() const { return edge_total_; }

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<std::string>& layers() const { return layers_; }

    bool has_node(const std::string& id) const { return find_node(id).has_value(); }
    bool has_layer(const std::string& id) const { return find_layer(id).has_value(); }

    /// Dense index of a node/layer id; throws UnknownNode/UnknownLayer.
    int node_index(const std::string& id) const;
    int layer_index(const std::string& id) const;
    std::optional<int> find_node(const std::string& id) const;
    std::optional<int> find_layer(const std::string& id) const;
    const std::string& node_name(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::string& layer_name(int l) const { return layers_[static_cast<std::size_t>(l)]; }

    /// Weight of tuple <x,y,l>; 0 when the edge is absent.
    double weight(int x, int y, int l) const;
    bool has_edge(int x, int y, int l) const;

    /// Sorted (neighbour, weight) adjacency on one layer.
    const std::vector<std::pair<int, double>>& out_edges(int l, int x) const {
        return out_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
    }
    const std::vector<std::pair<int, double>>& in_edges(int l, int x) const {
        return in_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
    }

    /// All edges in deterministic (layer, source, target) order.
    std::vector<EdgeRecord> to_records() const;

    /// Single-layer view <V, E_l, {l}>; keeps the full node set.
    Msn layer_view(const std::string& layer) const;

    /// Subgraph on `members`, keeping exactly the edges with both endpoints inside.
    Msn induced_subgraph(const std::vector<std::string>& members) const;

    /// Collapse all layers into one ("all"), summing weights per (source, target).
    Msn aggregate_layers() const;

    bool operator==(const Msn& other) const;

private:
    std::vector<std::string> nodes_;  // sorted
    std::vector<std::string> layers_; // sorted
    // out_[l][x] / in_[l][x]: sorted by neighbour index
    std::vector<std::vector<std::vector<std::pair<int, double>>>> out_;
    std::vector<std::vector<std::vector<std::pair<int, double>>>> in_;
    std::size_t edge_total_ = 0;
};

/// Dynamic social network: ordered time frames over one shared layer set.
struct Dsn {
    std::vector<Msn> frames;
    std::vector<std::int64_t> frame_starts;
    std::int64_t window = 0;
    std::int64_t overlap = 0;
};

/// load_msn of the spec.
Msn load_msn(const std::vector<EdgeRecord>& records);

/// Slice an event log into overlapping windows. Frame k covers
/// [t0 + k*(window-overlap), t0 + k*(window-overlap) + window) where t0 is
/// the earliest timestamp; weights of repeated (source,target,layer)
/// within one frame are summed. Throws EmptyLog.
Dsn load_dsn(const std::vector<EventRecord>& events, std::int64_t window, std::int64_t overlap);

struct Group {
    std::string id;
    std::vector<std::string> members; // sorted unique
    int frame = -1;
};

struct Partition {
    std::vector<Group> groups;
    std::vector<std::string> unassigned; // sorted unique
};

/// Nodes covered by a partition (groups plus unassigned), sorted unique.
std::vector<std::string> partition_universe(const Partition& p);

} // namespace mlsna
