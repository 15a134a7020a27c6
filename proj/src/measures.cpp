#include "mlsna/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <set>

namespace mlsna {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_alpha(const Msn& msn, int alpha) {
    if (alpha < 1 || alpha > msn.layer_count())
        raise(Errc::AlphaOutOfRange, "alpha must lie in [1, |L|]");
}

void require_single_layer(const Msn& net) {
    if (net.layer_count() != 1)
        raise(Errc::BadInput, "operation defined on single-layer networks");
}

/// Distinct layer counts of x's neighbours under every mode at once.
struct ModeCounts {
    std::vector<int> in, out, both, any; // indexed by neighbour id; 0 = none
};

ModeCounts mode_counts(const Msn& msn, int x) {
    const int n = msn.node_count();
    ModeCounts c{std::vector<int>(static_cast<std::size_t>(n), 0),
                 std::vector<int>(static_cast<std::size_t>(n), 0),
                 std::vector<int>(static_cast<std::size_t>(n), 0),
                 std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int l = 0; l < msn.layer_count(); ++l) {
        for (const auto& [y, w] : msn.out_edges(l, x)) {
            (void)w;
            ++c.out[static_cast<std::size_t>(y)];
            ++c.any[static_cast<std::size_t>(y)];
            if (msn.has_edge(y, x, l)) ++c.both[static_cast<std::size_t>(y)];
        }
        for (const auto& [y, w] : msn.in_edges(l, x)) {
            (void)w;
            ++c.in[static_cast<std::size_t>(y)];
            if (!msn.has_edge(x, y, l)) ++c.any[static_cast<std::size_t>(y)];
        }
    }
    return c;
}

std::vector<int> any_mode_indices(const Msn& msn, int x, int alpha) {
    auto c = mode_counts(msn, x);
    std::vector<int> out;
    for (int y = 0; y < msn.node_count(); ++y)
        if (c.any[static_cast<std::size_t>(y)] >= alpha) out.push_back(y);
    return out;
}

std::vector<std::string> names_of(const Msn& msn, const std::vector<int>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(msn.node_name(i));
    return out;
}

/// Unit-cost BFS distances from s; -1 for unreachable.
std::vector<int> bfs_dist(const Msn& net, int s) {
    std::vector<int> dist(static_cast<std::size_t>(net.node_count()), -1);
    std::deque<int> q{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const auto& [y, w] : net.out_edges(0, v)) {
            (void)w;
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<double> brandes_unit(const Msn& net) {
    const int n = net.node_count();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n)), delta(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        std::vector<int> order;
        std::deque<int> q{s};
        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (const auto& [y, w] : net.out_edges(0, v)) {
                (void)w;
                auto yi = static_cast<std::size_t>(y);
                if (dist[yi] < 0) {
                    dist[yi] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push_back(y);
                }
                if (dist[yi] == dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[yi] += sigma[static_cast<std::size_t>(v)];
                    preds[yi].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[static_cast<std::size_t>(w)])
                delta[static_cast<std::size_t>(v)] +=
                    sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            if (w != s) bc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    return bc;
}

std::vector<double> brandes_weighted(const WeightedDigraph& g) {
    const int n = static_cast<int>(g.names.size());
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n)), delta(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    const double eps = 1e-12;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[static_cast<std::size_t>(s)] = 0.0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        pq.push({0.0, s});
        std::vector<int> order;
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[static_cast<std::size_t>(v)]) continue;
            done[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
            for (const auto& [y, w] : g.adj[static_cast<std::size_t>(v)]) {
                auto yi = static_cast<std::size_t>(y);
                double nd = d + w;
                if (nd < dist[yi] - eps) {
                    dist[yi] = nd;
                    sigma[yi] = sigma[static_cast<std::size_t>(v)];
                    preds[yi].assign(1, v);
                    pq.push({nd, y});
                } else if (std::abs(nd - dist[yi]) <= eps) {
                    sigma[yi] += sigma[static_cast<std::size_t>(v)];
                    preds[yi].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[static_cast<std::size_t>(w)])
                delta[static_cast<std::size_t>(v)] +=
                    sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            if (w != s) bc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    return bc;
}

} // namespace

std::vector<std::string> layer_neighbourhood(const Msn& msn, const std::string& x,
                                             const std::string& layer) {
    int xi = msn.node_index(x);
    int l = msn.layer_index(layer);
    std::set<int> nbrs;
    for (const auto& [y, w] : msn.out_edges(l, xi)) (void)w, nbrs.insert(y);
    for (const auto& [y, w] : msn.in_edges(l, xi)) (void)w, nbrs.insert(y);
    return names_of(msn, std::vector<int>(nbrs.begin(), nbrs.end()));
}

std::vector<std::string> multi_neighbourhood(const Msn& msn, const std::string& x, int alpha,
                                             NeighbourhoodMode mode) {
    int xi = msn.node_index(x);
    check_alpha(msn, alpha);
    auto c = mode_counts(msn, xi);
    std::vector<int> idx;
    for (int y = 0; y < msn.node_count(); ++y) {
        auto yi = static_cast<std::size_t>(y);
        bool member = false;
        switch (mode) {
        case NeighbourhoodMode::In: member = c.in[yi] >= alpha; break;
        case NeighbourhoodMode::Out: member = c.out[yi] >= alpha; break;
        case NeighbourhoodMode::InOutAny: member = c.in[yi] >= alpha && c.out[yi] >= alpha; break;
        case NeighbourhoodMode::InOut: member = c.both[yi] >= alpha; break;
        case NeighbourhoodMode::Any: member = c.any[yi] >= alpha; break;
        }
        if (member) idx.push_back(y);
    }
    return names_of(msn, idx);
}

double degree_centrality(const Msn& net, const std::string& x, Direction dir, bool normalized,
                         bool weighted) {
    require_single_layer(net);
    int xi = net.node_index(x);
    const int n = net.node_count();
    if (normalized && n < 2) raise(Errc::DegenerateNetwork, "normalization needs n >= 2");
    double value = 0.0;
    if (weighted) {
        if (dir != Direction::In)
            for (const auto& [y, w] : net.out_edges(0, xi)) (void)y, value += w;
        if (dir != Direction::Out)
            for (const auto& [y, w] : net.in_edges(0, xi)) (void)y, value += w;
    } else {
        std::set<int> nbrs;
        if (dir != Direction::In)
            for (const auto& [y, w] : net.out_edges(0, xi)) (void)w, nbrs.insert(y);
        if (dir != Direction::Out)
            for (const auto& [y, w] : net.in_edges(0, xi)) (void)w, nbrs.insert(y);
        value = static_cast<double>(nbrs.size());
    }
    return normalized ? value / (n - 1) : value;
}

double closeness(const Msn& net, const std::string& x, bool normalized) {
    require_single_layer(net);
    int xi = net.node_index(x);
    auto dist = bfs_dist(net, xi);
    long long sum = 0;
    int reachable = 0;
    for (int y = 0; y < net.node_count(); ++y)
        if (y != xi && dist[static_cast<std::size_t>(y)] >= 0) {
            sum += dist[static_cast<std::size_t>(y)];
            ++reachable;
        }
    if (reachable == 0 || sum == 0) return 0.0;
    return (normalized ? static_cast<double>(reachable) : 1.0) / static_cast<double>(sum);
}

std::map<std::string, double> closeness_all(const Msn& net, bool normalized) {
    std::map<std::string, double> out;
    for (const auto& v : net.nodes()) out[v] = closeness(net, v, normalized);
    return out;
}

double betweenness(const Msn& net, const std::string& x, bool conventional) {
    return betweenness_all(net, conventional).at(x);
}

std::map<std::string, double> betweenness_all(const Msn& net, bool conventional) {
    require_single_layer(net);
    const int n = net.node_count();
    if (n < 3) raise(Errc::DegenerateNetwork, "betweenness needs n >= 3");
    auto bc = brandes_unit(net);
    std::map<std::string, double> out;
    const double denom = conventional ? (static_cast<double>(n) - 1) * (n - 2) : (n - 1);
    // Brandes accumulates over ordered pairs; the conventional form counts
    // each unordered pair once, hence the extra factor of two above.
    for (int v = 0; v < n; ++v) out[net.node_name(v)] = bc[static_cast<std::size_t>(v)] / denom;
    return out;
}

std::vector<double> closeness_over(const WeightedDigraph& g, bool normalized) {
    const int n = static_cast<int>(g.names.size());
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s) {
        std::vector<double> dist(static_cast<std::size_t>(n), kInf);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[static_cast<std::size_t>(s)] = 0.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > dist[static_cast<std::size_t>(v)]) continue;
            for (const auto& [y, w] : g.adj[static_cast<std::size_t>(v)])
                if (d + w < dist[static_cast<std::size_t>(y)]) {
                    dist[static_cast<std::size_t>(y)] = d + w;
                    pq.push({d + w, y});
                }
        }
        double sum = 0.0;
        int reachable = 0;
        for (int y = 0; y < n; ++y)
            if (y != s && dist[static_cast<std::size_t>(y)] < kInf) {
                sum += dist[static_cast<std::size_t>(y)];
                ++reachable;
            }
        out[static_cast<std::size_t>(s)] =
            (reachable == 0 || sum == 0.0) ? 0.0
                                           : (normalized ? reachable : 1.0) / sum;
    }
    return out;
}

std::vector<double> betweenness_over(const WeightedDigraph& g, bool conventional) {
    const int n = static_cast<int>(g.names.size());
    if (n < 3) raise(Errc::DegenerateNetwork, "betweenness needs n >= 3");
    auto bc = brandes_weighted(g);
    const double denom = conventional ? (static_cast<double>(n) - 1) * (n - 2) : (n - 1);
    for (auto& v : bc) v /= denom;
    return bc;
}

std::map<std::string, double> social_position(const Msn& net, const SocialPositionOptions& opt) {
    if (opt.epsilon <= 0.0 || opt.epsilon >= 1.0)
        raise(Errc::BadInput, "epsilon must lie in (0,1)");
    Msn flat = net.layer_count() == 1 ? net : net.aggregate_layers();
    const int n = flat.node_count();
    std::vector<double> sp(static_cast<std::size_t>(n), 1.0), next(static_cast<std::size_t>(n));
    std::vector<double> out_sum(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v)
        for (const auto& [y, w] : flat.out_edges(0, v)) (void)y, out_sum[static_cast<std::size_t>(v)] += w;

    for (int it = 0; it < opt.max_iter; ++it) {
        std::fill(next.begin(), next.end(), 1.0 - opt.epsilon);
        for (int y = 0; y < n; ++y) {
            auto ys = static_cast<std::size_t>(y);
            if (out_sum[ys] <= 0.0) continue;
            const double mass = opt.epsilon * sp[ys] / out_sum[ys];
            for (const auto& [x, w] : flat.out_edges(0, y)) next[static_cast<std::size_t>(x)] += mass * w;
        }
        double diff = 0.0;
        for (int v = 0; v < n; ++v)
            diff = std::max(diff, std::abs(next[static_cast<std::size_t>(v)] - sp[static_cast<std::size_t>(v)]));
        sp.swap(next);
        if (diff <= opt.tol) {
            std::map<std::string, double> out;
            for (int v = 0; v < n; ++v) out[flat.node_name(v)] = sp[static_cast<std::size_t>(v)];
            return out;
        }
    }
    raise(Errc::NoConvergence, "social position did not converge");
}

double clcc(const Msn& msn, const std::string& x, int alpha) {
    int xi = msn.node_index(x);
    check_alpha(msn, alpha);
    auto mn = any_mode_indices(msn, xi, alpha);
    if (mn.size() <= 1) return 0.0;
    std::vector<char> in_mn(static_cast<std::size_t>(msn.node_count()), 0);
    for (int y : mn) in_mn[static_cast<std::size_t>(y)] = 1;
    double sum = 0.0;
    for (int l = 0; l < msn.layer_count(); ++l)
        for (int y : mn)
            for (const auto& [z, w] : msn.out_edges(l, y))
                if (in_mn[static_cast<std::size_t>(z)]) sum += 2.0 * w; // counted once as out of y, once as in of z
    return sum / (2.0 * static_cast<double>(mn.size()) * msn.layer_count());
}

double cdc(const Msn& msn, const std::string& x, int alpha, Direction dir) {
    int xi = msn.node_index(x);
    check_alpha(msn, alpha);
    const int n = msn.node_count();
    if (n < 2) raise(Errc::DegenerateNetwork, "degree centrality needs n >= 2");
    auto mn = any_mode_indices(msn, xi, alpha);
    std::vector<char> in_mn(static_cast<std::size_t>(n), 0);
    for (int y : mn) in_mn[static_cast<std::size_t>(y)] = 1;
    double sum = 0.0;
    for (int l = 0; l < msn.layer_count(); ++l) {
        if (dir != Direction::In)
            for (const auto& [y, w] : msn.out_edges(l, xi))
                if (in_mn[static_cast<std::size_t>(y)]) sum += w;
        if (dir != Direction::Out)
            for (const auto& [y, w] : msn.in_edges(l, xi))
                if (in_mn[static_cast<std::size_t>(y)]) sum += w;
    }
    return sum / ((n - 1.0) * msn.layer_count());
}

double mdc(const Msn& msn, const std::string& x, int version, Direction dir) {
    int xi = msn.node_index(x);
    if (version < 1 || version > 3) raise(Errc::BadInput, "mdc version must be 1, 2 or 3");
    const int n = msn.node_count();
    if (n < 2) raise(Errc::DegenerateNetwork, "degree centrality needs n >= 2");
    double sum = 0.0;
    std::size_t nbr_sum = 0;
    for (int l = 0; l < msn.layer_count(); ++l) {
        std::set<int> nbrs;
        for (const auto& [y, w] : msn.out_edges(l, xi)) {
            nbrs.insert(y);
            if (dir != Direction::In) sum += w;
        }
        for (const auto& [y, w] : msn.in_edges(l, xi)) {
            nbrs.insert(y);
            if (dir != Direction::Out) sum += w;
        }
        nbr_sum += nbrs.size();
    }
    double denom = 0.0;
    switch (version) {
    case 1: denom = (n - 1.0) * msn.layer_count(); break;
    case 2: denom = (n - 1.0) * static_cast<double>(any_mode_indices(msn, xi, 1).size()); break;
    case 3: denom = (n - 1.0) * static_cast<double>(nbr_sum); break;
    }
    if (denom == 0.0) return 0.0;
    return sum / denom;
}

double ecc(const Msn& net, const std::string& x, const std::string& y) {
    require_single_layer(net);
    int xi = net.node_index(x), yi = net.node_index(y);
    if (!net.has_edge(xi, yi, 0) && !net.has_edge(yi, xi, 0))
        raise(Errc::NoSuchEdge, "no edge between '" + x + "' and '" + y + "'");
    std::set<int> nx, ny;
    for (const auto& [z, w] : net.out_edges(0, xi)) (void)w, nx.insert(z);
    for (const auto& [z, w] : net.in_edges(0, xi)) (void)w, nx.insert(z);
    for (const auto& [z, w] : net.out_edges(0, yi)) (void)w, ny.insert(z);
    for (const auto& [z, w] : net.in_edges(0, yi)) (void)w, ny.insert(z);
    std::size_t z_count = 0;
    for (int z : nx)
        if (z != yi && ny.count(z)) ++z_count;
    const std::size_t s = std::min(nx.size(), ny.size()) - 1;
    if (s == 0) raise(Errc::DegenerateDenominator, "no triangle can be built on this edge");
    return (static_cast<double>(z_count) + 1.0) / static_cast<double>(s);
}

double clecc(const Msn& msn, const std::string& x, const std::string& y, int alpha) {
    int xi = msn.node_index(x), yi = msn.node_index(y);
    check_alpha(msn, alpha);
    auto mx = any_mode_indices(msn, xi, alpha);
    auto my = any_mode_indices(msn, yi, alpha);
    std::set<int> sx(mx.begin(), mx.end()), sy(my.begin(), my.end());
    std::size_t inter = 0;
    for (int v : sx) inter += sy.count(v);
    std::set<int> uni(sx);
    uni.insert(sy.begin(), sy.end());
    const bool adjacent = sx.count(yi) > 0;
    uni.erase(xi);
    uni.erase(yi);
    const std::size_t den = uni.size() + (adjacent ? 1 : 0);
    if (den == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(den);
}

Msn normalized_by_max(const Msn& msn) {
    double max_w = 0.0;
    auto recs = msn.to_records();
    for (const auto& r : recs) max_w = std::max(max_w, r.weight);
    if (max_w <= 0.0) return msn;
    for (auto& r : recs) r.weight /= max_w;
    return Msn::from_records(recs, msn.nodes(), msn.layers());
}

} // namespace mlsna
