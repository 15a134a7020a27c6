#include "mlsna/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mlsna {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int index_of(const std::vector<std::string>& sorted, const std::string& id) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
    if (it == sorted.end() || *it != id) return -1;
    return static_cast<int>(it - sorted.begin());
}

} // namespace

Msn Msn::from_records(const std::vector<EdgeRecord>& records) {
    std::vector<std::string> nodes, layers;
    nodes.reserve(records.size() * 2);
    for (const auto& r : records) {
        nodes.push_back(r.source);
        nodes.push_back(r.target);
        layers.push_back(r.layer);
    }
    return from_records(records, std::move(nodes), std::move(layers));
}

Msn Msn::from_records(const std::vector<EdgeRecord>& records,
                      std::vector<std::string> nodes,
                      std::vector<std::string> layers) {
    Msn m;
    m.nodes_ = sorted_unique(std::move(nodes));
    m.layers_ = sorted_unique(std::move(layers));
    const auto n = m.nodes_.size();
    const auto nl = m.layers_.size();
    m.out_.assign(nl, std::vector<std::vector<std::pair<int, double>>>(n));
    m.in_.assign(nl, std::vector<std::vector<std::pair<int, double>>>(n));

    for (const auto& r : records) {
        if (r.source == r.target)
            raise(Errc::SelfLoop, "self-loop on node '" + r.source + "' (layer '" + r.layer + "')");
        if (!std::isfinite(r.weight) || r.weight < 0.0)
            raise(Errc::WeightOutOfRange,
                  "edge <" + r.source + "," + r.target + "," + r.layer + "> has invalid weight");
        int s = index_of(m.nodes_, r.source);
        int t = index_of(m.nodes_, r.target);
        int l = index_of(m.layers_, r.layer);
        if (s < 0 || t < 0) raise(Errc::UnknownNode, "edge endpoint outside the node universe");
        if (l < 0) raise(Errc::UnknownLayer, "edge layer outside the layer universe");
        m.out_[static_cast<std::size_t>(l)][static_cast<std::size_t>(s)].push_back({t, r.weight});
        m.in_[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)].push_back({s, r.weight});
        ++m.edge_total_;
    }

    for (auto& per_layer : m.out_)
        for (auto& adj : per_layer) {
            std::sort(adj.begin(), adj.end());
            for (std::size_t i = 1; i < adj.size(); ++i)
                if (adj[i].first == adj[i - 1].first)
                    raise(Errc::DuplicateEdge, "duplicate (source,target,layer) record");
        }
    for (auto& per_layer : m.in_)
        for (auto& adj : per_layer) std::sort(adj.begin(), adj.end());
    return m;
}

int Msn::node_index(const std::string& id) const {
    int i = index_of(nodes_, id);
    if (i < 0) raise(Errc::UnknownNode, "unknown node '" + id + "'");
    return i;
}

int Msn::layer_index(const std::string& id) const {
    int l = index_of(layers_, id);
    if (l < 0) raise(Errc::UnknownLayer, "unknown layer '" + id + "'");
    return l;
}

std::optional<int> Msn::find_node(const std::string& id) const {
    int i = index_of(nodes_, id);
    if (i < 0) return std::nullopt;
    return i;
}

std::optional<int> Msn::find_layer(const std::string& id) const {
    int l = index_of(layers_, id);
    if (l < 0) return std::nullopt;
    return l;
}

double Msn::weight(int x, int y, int l) const {
    const auto& adj = out_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<int, double>{y, -1.0});
    if (it != adj.end() && it->first == y) return it->second;
    return 0.0;
}

bool Msn::has_edge(int x, int y, int l) const {
    const auto& adj = out_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)];
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<int, double>{y, -1.0});
    return it != adj.end() && it->first == y;
}

std::vector<EdgeRecord> Msn::to_records() const {
    std::vector<EdgeRecord> out;
    out.reserve(edge_total_);
    for (std::size_t l = 0; l < out_.size(); ++l)
        for (std::size_t x = 0; x < out_[l].size(); ++x)
            for (const auto& [y, w] : out_[l][x])
                out.push_back({nodes_[x], nodes_[static_cast<std::size_t>(y)], layers_[l], w});
    return out;
}

Msn Msn::layer_view(const std::string& layer) const {
    int l = layer_index(layer);
    std::vector<EdgeRecord> recs;
    for (std::size_t x = 0; x < out_[static_cast<std::size_t>(l)].size(); ++x)
        for (const auto& [y, w] : out_[static_cast<std::size_t>(l)][x])
            recs.push_back({nodes_[x], nodes_[static_cast<std::size_t>(y)], layer, w});
    return from_records(recs, nodes_, {layer});
}

Msn Msn::induced_subgraph(const std::vector<std::string>& members) const {
    std::set<int> keep;
    for (const auto& id : members) keep.insert(node_index(id));
    std::vector<EdgeRecord> recs;
    for (std::size_t l = 0; l < out_.size(); ++l)
        for (int x : keep)
            for (const auto& [y, w] : out_[l][static_cast<std::size_t>(x)])
                if (keep.count(y))
                    recs.push_back({nodes_[static_cast<std::size_t>(x)],
                                    nodes_[static_cast<std::size_t>(y)], layers_[l], w});
    std::vector<std::string> nodes(members.begin(), members.end());
    return from_records(recs, std::move(nodes), layers_);
}

Msn Msn::aggregate_layers() const {
    std::map<std::pair<int, int>, double> sums;
    for (const auto& per_layer : out_)
        for (std::size_t x = 0; x < per_layer.size(); ++x)
            for (const auto& [y, w] : per_layer[x]) sums[{static_cast<int>(x), y}] += w;
    std::vector<EdgeRecord> recs;
    recs.reserve(sums.size());
    for (const auto& [key, w] : sums)
        recs.push_back({nodes_[static_cast<std::size_t>(key.first)],
                        nodes_[static_cast<std::size_t>(key.second)], "all", w});
    return from_records(recs, nodes_, {"all"});
}

bool Msn::operator==(const Msn& other) const {
    return nodes_ == other.nodes_ && layers_ == other.layers_ && out_ == other.out_;
}

Msn load_msn(const std::vector<EdgeRecord>& records) { return Msn::from_records(records); }

Dsn load_dsn(const std::vector<EventRecord>& events, std::int64_t window, std::int64_t overlap) {
    if (events.empty()) raise(Errc::EmptyLog, "event log is empty");
    if (window <= 0) raise(Errc::BadInput, "window must be positive");
    if (overlap < 0 || overlap >= window) raise(Errc::BadInput, "overlap must satisfy 0 <= overlap < window");

    std::int64_t t_min = events.front().timestamp, t_max = events.front().timestamp;
    for (const auto& e : events) {
        t_min = std::min(t_min, e.timestamp);
        t_max = std::max(t_max, e.timestamp);
    }
    // enough frames that the last one reaches the final event
    const std::int64_t step = window - overlap;
    const std::int64_t span = t_max - t_min + 1;
    std::int64_t frames = span <= window ? 1 : (span - window + step - 1) / step + 1;

    std::vector<std::string> layers;
    for (const auto& e : events) layers.push_back(e.layer);
    std::sort(layers.begin(), layers.end());
    layers.erase(std::unique(layers.begin(), layers.end()), layers.end());

    Dsn dsn;
    dsn.window = window;
    dsn.overlap = overlap;
    for (std::int64_t k = 0; k < frames; ++k) {
        const std::int64_t start = t_min + k * step;
        const std::int64_t end = start + window;
        std::map<std::tuple<std::string, std::string, std::string>, double> agg;
        std::vector<std::string> nodes;
        for (const auto& e : events)
            if (e.timestamp >= start && e.timestamp < end) {
                agg[{e.source, e.target, e.layer}] += e.weight;
                nodes.push_back(e.source);
                nodes.push_back(e.target);
            }
        std::vector<EdgeRecord> recs;
        recs.reserve(agg.size());
        for (const auto& [key, w] : agg)
            recs.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), w});
        dsn.frames.push_back(Msn::from_records(recs, std::move(nodes), layers));
        dsn.frame_starts.push_back(start);
    }
    return dsn;
}

std::vector<std::string> partition_universe(const Partition& p) {
    std::vector<std::string> all = p.unassigned;
    for (const auto& g : p.groups) all.insert(all.end(), g.members.begin(), g.members.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

} // namespace mlsna
