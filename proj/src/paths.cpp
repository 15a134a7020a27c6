#include "mlsna/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace mlsna {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_weights(const Msn& msn) {
    for (int l = 0; l < msn.layer_count(); ++l)
        for (int x = 0; x < msn.node_count(); ++x)
            for (const auto& [y, w] : msn.out_edges(l, x)) {
                (void)y;
                if (w < 0.0 || w > 1.0)
                    raise(Errc::WeightOutOfRange, "distances need weights in [0,1]; normalize first");
            }
}

double pair_distance(const Msn& msn, int x, int y, bool invert, int* layer_count = nullptr) {
    double sum = 0.0;
    int cnt = 0;
    for (int l = 0; l < msn.layer_count(); ++l) {
        double w = msn.weight(x, y, l);
        if (w > 0.0 || msn.has_edge(x, y, l)) ++cnt;
        sum += w;
    }
    if (layer_count) *layer_count = cnt;
    if (!invert) return sum / msn.layer_count();
    return 1.0 - sum / msn.layer_count();
}

PathResult run_dijkstra(const Msn& msn, int src,
                        const std::vector<std::vector<std::pair<int, double>>>& adj) {
    const int n = msn.node_count();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> pred(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    // (length, node); ties broken by node index for determinism
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(src)] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        for (const auto& [y, w] : adj[static_cast<std::size_t>(v)]) {
            auto yi = static_cast<std::size_t>(y);
            if (d + w < dist[yi]) {
                dist[yi] = d + w;
                pred[yi] = v;
                pq.push({d + w, y});
            }
        }
    }
    PathResult out;
    out.source = msn.node_name(src);
    for (int v = 0; v < n; ++v)
        if (dist[static_cast<std::size_t>(v)] < kInf) {
            out.lengths[msn.node_name(v)] = dist[static_cast<std::size_t>(v)];
            if (pred[static_cast<std::size_t>(v)] >= 0)
                out.predecessors[msn.node_name(v)] = msn.node_name(pred[static_cast<std::size_t>(v)]);
        }
    return out;
}

std::vector<std::vector<std::pair<int, double>>> me_adjacency(const Msn& msn, int alpha,
                                                              double beta, bool invert) {
    const int n = msn.node_count();
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::vector<int> targets;
        for (int l = 0; l < msn.layer_count(); ++l)
            for (const auto& [y, w] : msn.out_edges(l, x)) (void)w, targets.push_back(y);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int y : targets) {
            int cnt = 0;
            double d = pair_distance(msn, x, y, invert, &cnt);
            if (cnt >= alpha && d <= beta) adj[static_cast<std::size_t>(x)].push_back({y, d});
        }
    }
    return adj;
}

} // namespace

double strangeness(const Msn& msn, const std::string& x, const std::string& y, bool invert) {
    check_weights(msn);
    int xi = msn.node_index(x), yi = msn.node_index(y);
    if (msn.layer_count() == 0) raise(Errc::BadInput, "network has no layers");
    return pair_distance(msn, xi, yi, invert);
}

std::vector<MultiEdge> multi_edges(const Msn& msn, MultiEdgeMode mode, int alpha, double beta,
                                   bool invert) {
    check_weights(msn);
    if (mode != MultiEdgeMode::ByDistance && (alpha < 1 || alpha > msn.layer_count()))
        raise(Errc::AlphaOutOfRange, "alpha must lie in [1, |L|]");
    if (mode != MultiEdgeMode::ByLayers && (beta < 0.0 || beta > 1.0))
        raise(Errc::BetaOutOfRange, "beta must lie in [0,1]");
    const int eff_alpha = mode == MultiEdgeMode::ByDistance ? 1 : alpha;
    const double eff_beta = mode == MultiEdgeMode::ByLayers ? kInf : beta;

    std::vector<MultiEdge> out;
    for (int x = 0; x < msn.node_count(); ++x) {
        std::vector<int> targets;
        for (int l = 0; l < msn.layer_count(); ++l)
            for (const auto& [y, w] : msn.out_edges(l, x)) (void)w, targets.push_back(y);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int y : targets) {
            int cnt = 0;
            double d = pair_distance(msn, x, y, invert, &cnt);
            if (cnt >= eff_alpha && d <= eff_beta)
                out.push_back({msn.node_name(x), msn.node_name(y), d, cnt});
        }
    }
    return out;
}

PathResult shortest_paths_dap(const Msn& msn, const std::string& source, int alpha, double beta,
                              bool invert) {
    check_weights(msn);
    int src = msn.node_index(source);
    if (alpha < 1 || alpha > msn.layer_count()) raise(Errc::AlphaOutOfRange, "alpha out of range");
    if (beta < 0.0 || beta > 1.0) raise(Errc::BetaOutOfRange, "beta out of range");
    return run_dijkstra(msn, src, me_adjacency(msn, alpha, beta, invert));
}

PathResult shortest_paths_mda(const Msn& msn, const std::string& source, int alpha, bool invert) {
    check_weights(msn);
    int src = msn.node_index(source);
    if (alpha < 1 || alpha > msn.layer_count()) raise(Errc::AlphaOutOfRange, "alpha out of range");

    // Lazy expansion through MN^Out(v, alpha): a successor qualifies when
    // it is reached by outgoing edges on at least alpha layers.
    const int n = msn.node_count();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> pred(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(src)] = 0.0;
    pq.push({0.0, src});
    std::vector<int> out_count(static_cast<std::size_t>(n));
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        std::fill(out_count.begin(), out_count.end(), 0);
        for (int l = 0; l < msn.layer_count(); ++l)
            for (const auto& [y, w] : msn.out_edges(l, v)) (void)w, ++out_count[static_cast<std::size_t>(y)];
        for (int y = 0; y < n; ++y) {
            if (out_count[static_cast<std::size_t>(y)] < alpha) continue;
            double w = pair_distance(msn, v, y, invert);
            if (d + w < dist[static_cast<std::size_t>(y)]) {
                dist[static_cast<std::size_t>(y)] = d + w;
                pred[static_cast<std::size_t>(y)] = v;
                pq.push({d + w, y});
            }
        }
    }
    PathResult out;
    out.source = msn.node_name(src);
    for (int v = 0; v < n; ++v)
        if (dist[static_cast<std::size_t>(v)] < kInf) {
            out.lengths[msn.node_name(v)] = dist[static_cast<std::size_t>(v)];
            if (pred[static_cast<std::size_t>(v)] >= 0)
                out.predecessors[msn.node_name(v)] = msn.node_name(pred[static_cast<std::size_t>(v)]);
        }
    return out;
}

WeightedDigraph me_graph(const Msn& msn, int alpha, double beta, bool invert) {
    check_weights(msn);
    if (alpha < 1 || alpha > msn.layer_count()) raise(Errc::AlphaOutOfRange, "alpha out of range");
    WeightedDigraph g;
    g.names = msn.nodes();
    g.adj = me_adjacency(msn, alpha, beta, invert);
    return g;
}

} // namespace mlsna
