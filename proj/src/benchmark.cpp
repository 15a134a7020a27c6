#include "mlsna/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace mlsna {

namespace {

std::string node_name(int v) { return std::to_string(v); }

// ---------------------------------------------------------------------
// Configuration-model wiring with repair.

// Pair up `stubs` (node indices, one entry per stub) so that no pair is a
// self-loop, a duplicate of `existing`, or rejected by `allowed`. Repairs
// by swapping with random later pairs; gives up on a stub pair after the
// budget and drops it.
std::size_t wire_stubs(std::vector<int> stubs, std::vector<std::set<int>>& adj,
                       const std::function<bool(int, int)>& allowed, Rng& rng,
                       std::vector<std::pair<int, int>>& out_edges) {
    if (stubs.size() % 2 == 1) stubs.pop_back(); // parity is the caller's job; stay safe
    rng.shuffle(stubs);
    std::size_t dropped = 0;
    auto ok = [&](int a, int b) {
        return a != b && !adj[static_cast<std::size_t>(a)].count(b) && allowed(a, b);
    };
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            if (ok(stubs[i], stubs[i + 1])) {
                placed = true;
                break;
            }
            // swap the second stub with a random stub further right
            if (i + 2 >= stubs.size()) break;
            std::size_t j = i + 2 + static_cast<std::size_t>(rng.below(stubs.size() - i - 2));
            std::swap(stubs[i + 1], stubs[j]);
        }
        if (!placed && !ok(stubs[i], stubs[i + 1])) {
            dropped += 2;
            continue;
        }
        int a = stubs[i], b = stubs[i + 1];
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
        out_edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return dropped;
}

std::vector<EdgeRecord> records_from_pairs(const std::vector<std::pair<int, int>>& pairs,
                                           const std::string& layer) {
    std::vector<EdgeRecord> recs;
    recs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) recs.push_back({node_name(a), node_name(b), layer, 1.0});
    return recs;
}

// ---------------------------------------------------------------------
// Power-law sampling on [a, b].

double power_law_sample(double a, double b, double tau, double u) {
    if (std::abs(tau - 1.0) < 1e-12) return a * std::pow(b / a, u);
    const double e = 1.0 - tau;
    return std::pow(std::pow(a, e) + u * (std::pow(b, e) - std::pow(a, e)), 1.0 / e);
}

double power_law_cdf(double a, double b, double tau, double x) {
    if (x <= a) return 0.0;
    if (x >= b) return 1.0;
    if (std::abs(tau - 1.0) < 1e-12) return std::log(x / a) / std::log(b / a);
    const double e = 1.0 - tau;
    return (std::pow(x, e) - std::pow(a, e)) / (std::pow(b, e) - std::pow(a, e));
}

// Expected value of floor(X) for X power-law on [a, b].
double expected_floor(double a, double b, double tau) {
    double e = 0.0;
    const int lo = static_cast<int>(std::floor(a));
    const int hi = static_cast<int>(std::floor(b));
    for (int k = lo; k <= hi; ++k) {
        const double p = power_law_cdf(a, b, tau, std::min<double>(k + 1, b)) -
                         power_law_cdf(a, b, tau, std::max<double>(k, a));
        e += k * p;
    }
    return e;
}

// Lower cutoff so that floored power-law draws average to `target`.
double solve_min_degree(double target, double kmax, double tau) {
    double lo = 1.0, hi = kmax;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (expected_floor(mid, kmax, tau) < target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<int> community_sizes(const BenchmarkSpec& spec, Rng& rng) {
    std::vector<int> sizes;
    long long total = 0;
    while (total < spec.n) {
        int s = static_cast<int>(std::floor(
            power_law_sample(spec.cmin, spec.cmax + 1 - 1e-9, spec.tau2, rng.uniform())));
        s = std::clamp(s, spec.cmin, spec.cmax);
        sizes.push_back(s);
        total += s;
    }
    int guard = 0;
    while (total > spec.n) {
        std::vector<std::size_t> shrinkable;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            if (sizes[i] > spec.cmin) shrinkable.push_back(i);
        if (shrinkable.empty()) {
            if (sizes.size() <= 1) raise(Errc::InfeasibleSpec, "cannot hit n with cmin..cmax sizes");
            total -= sizes.back();
            sizes.pop_back();
            while (total < spec.n) {
                std::vector<std::size_t> growable;
                for (std::size_t i = 0; i < sizes.size(); ++i)
                    if (sizes[i] < spec.cmax) growable.push_back(i);
                if (growable.empty()) raise(Errc::InfeasibleSpec, "cannot hit n with cmin..cmax sizes");
                ++sizes[growable[rng.below(growable.size())]];
                ++total;
            }
            break;
        }
        --sizes[shrinkable[rng.below(shrinkable.size())]];
        --total;
        if (++guard > spec.n * 100) raise(Errc::InfeasibleSpec, "community size adjustment stalled");
    }
    return sizes;
}

struct LfrState {
    std::vector<int> community; // per node
    std::vector<int> k_in;
    std::vector<int> k_out;
    std::vector<std::vector<int>> members; // per community
};

LfrState plan_lfr(const BenchmarkSpec& spec, Rng& rng) {
    auto sizes = community_sizes(spec, rng);
    const int ncomm = static_cast<int>(sizes.size());

    const double kmin = solve_min_degree(spec.avg_degree, spec.max_degree + 1 - 1e-9, spec.tau1);
    std::vector<int> degree(static_cast<std::size_t>(spec.n));
    for (auto& k : degree) {
        k = static_cast<int>(std::floor(
            power_law_sample(kmin, spec.max_degree + 1 - 1e-9, spec.tau1, rng.uniform())));
        k = std::clamp(k, 1, spec.max_degree);
    }

    LfrState st;
    st.community.assign(static_cast<std::size_t>(spec.n), -1);
    st.k_in.resize(static_cast<std::size_t>(spec.n));
    st.k_out.resize(static_cast<std::size_t>(spec.n));
    st.members.resize(static_cast<std::size_t>(ncomm));
    for (int v = 0; v < spec.n; ++v) {
        st.k_in[static_cast<std::size_t>(v)] =
            static_cast<int>(std::llround((1.0 - spec.mu) * degree[static_cast<std::size_t>(v)]));
        st.k_in[static_cast<std::size_t>(v)] =
            std::min(st.k_in[static_cast<std::size_t>(v)], degree[static_cast<std::size_t>(v)]);
        st.k_out[static_cast<std::size_t>(v)] =
            degree[static_cast<std::size_t>(v)] - st.k_in[static_cast<std::size_t>(v)];
    }

    // Hardest nodes first; when no fitting community has room, the
    // smallest resident of a fitting one makes way and queues again. A
    // node too big for every community is clamped to the largest feasible
    // internal degree (its total degree shrinks; external stubs are
    // untouched so zero mixing stays zero).
    std::priority_queue<std::pair<int, int>> pending; // (internal degree, node)
    for (int v = 0; v < spec.n; ++v) pending.push({st.k_in[static_cast<std::size_t>(v)], v});
    std::vector<int> capacity = sizes;
    const int largest = *std::max_element(sizes.begin(), sizes.end());
    long budget = static_cast<long>(spec.n) * 200;
    while (!pending.empty()) {
        if (--budget < 0) raise(Errc::InfeasibleSpec, "community assignment stalled");
        const int v = pending.top().second;
        pending.pop();
        int need = st.k_in[static_cast<std::size_t>(v)];
        if (need > largest - 1) {
            need = largest - 1;
            st.k_in[static_cast<std::size_t>(v)] = need;
            pending.push({need, v});
            continue;
        }
        std::vector<int> fits, with_room;
        for (int c = 0; c < ncomm; ++c)
            if (sizes[static_cast<std::size_t>(c)] - 1 >= need) {
                fits.push_back(c);
                if (capacity[static_cast<std::size_t>(c)] > 0) with_room.push_back(c);
            }
        int chosen;
        if (!with_room.empty()) {
            chosen = with_room[rng.below(with_room.size())];
        } else {
            chosen = fits[rng.below(fits.size())];
            auto& res = st.members[static_cast<std::size_t>(chosen)];
            std::size_t worst = 0;
            for (std::size_t i = 1; i < res.size(); ++i)
                if (st.k_in[static_cast<std::size_t>(res[i])] <
                    st.k_in[static_cast<std::size_t>(res[worst])])
                    worst = i;
            const int evicted = res[worst];
            if (st.k_in[static_cast<std::size_t>(evicted)] >= need) {
                // swapping equals would cycle forever; take any open slot
                // and truncate the internal degree to what it can hold
                std::vector<int> rooms;
                for (int c = 0; c < ncomm; ++c)
                    if (capacity[static_cast<std::size_t>(c)] > 0) rooms.push_back(c);
                chosen = rooms[rng.below(rooms.size())];
                st.k_in[static_cast<std::size_t>(v)] = sizes[static_cast<std::size_t>(chosen)] - 1;
            } else {
                res.erase(res.begin() + static_cast<long>(worst));
                st.community[static_cast<std::size_t>(evicted)] = -1;
                ++capacity[static_cast<std::size_t>(chosen)];
                pending.push({st.k_in[static_cast<std::size_t>(evicted)], evicted});
            }
        }
        st.community[static_cast<std::size_t>(v)] = chosen;
        st.members[static_cast<std::size_t>(chosen)].push_back(v);
        --capacity[static_cast<std::size_t>(chosen)];
    }

    // Internal stub parity per community.
    for (int c = 0; c < ncomm; ++c) {
        long sum = 0;
        for (int v : st.members[static_cast<std::size_t>(c)]) sum += st.k_in[static_cast<std::size_t>(v)];
        if (sum % 2 == 0) continue;
        // prefer raising a node that still has external stubs to trade
        int pick = -1;
        for (int v : st.members[static_cast<std::size_t>(c)])
            if (st.k_out[static_cast<std::size_t>(v)] > 0 &&
                st.k_in[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(c)] - 1) {
                pick = v;
                break;
            }
        if (pick >= 0) {
            ++st.k_in[static_cast<std::size_t>(pick)];
            --st.k_out[static_cast<std::size_t>(pick)];
        } else {
            // drop one internal stub; inventing an external one would
            // break zero-mixing separation
            for (int v : st.members[static_cast<std::size_t>(c)])
                if (st.k_in[static_cast<std::size_t>(v)] > 0) {
                    --st.k_in[static_cast<std::size_t>(v)];
                    break;
                }
        }
    }
    // External stub parity, global.
    long ext = 0;
    for (int v = 0; v < spec.n; ++v) ext += st.k_out[static_cast<std::size_t>(v)];
    if (ext % 2 == 1)
        for (int v = 0; v < spec.n; ++v)
            if (st.k_out[static_cast<std::size_t>(v)] > 0) {
                --st.k_out[static_cast<std::size_t>(v)];
                break;
            }
    return st;
}

} // namespace

void BenchmarkSpec::validate() const {
    if (n < 2) raise(Errc::InfeasibleSpec, "n must be at least 2");
    if (layers < 1) raise(Errc::InfeasibleSpec, "layers must be at least 1");
    if (mu < 0.0 || mu > 1.0) raise(Errc::InfeasibleSpec, "mu must lie in [0,1]");
    if (cmin > cmax || cmax > n) raise(Errc::InfeasibleSpec, "need cmin <= cmax <= n");
    if (avg_degree > max_degree) raise(Errc::InfeasibleSpec, "avg_degree must not exceed max_degree");
    if (avg_degree < 1.0) raise(Errc::InfeasibleSpec, "avg_degree must be at least 1");
    if (max_degree >= n) raise(Errc::InfeasibleSpec, "max_degree must be below n");
    if (cmin < 2) raise(Errc::InfeasibleSpec, "cmin must be at least 2");
    if (degree_swap_prob < 0.0 || degree_swap_prob > 1.0 || membership_swap_prob < 0.0 ||
        membership_swap_prob > 1.0)
        raise(Errc::InfeasibleSpec, "swap probabilities must lie in [0,1]");
}

GeneratedNetwork generate_gn(double out_ratio, std::uint64_t seed) {
    if (out_ratio < 0.0 || out_ratio > 1.0) raise(Errc::BadInput, "out_ratio must lie in [0,1]");
    constexpr int kNodes = 128, kComms = 4, kSize = 32, kDegree = 16;
    const int k_out = static_cast<int>(std::llround(out_ratio * kDegree));
    const int k_in = kDegree - k_out;
    Rng rng(seed);

    for (int restart = 0; restart < 100; ++restart) {
        std::vector<std::set<int>> adj(kNodes);
        std::vector<std::pair<int, int>> edges;
        std::size_t dropped = 0;
        auto comm = [&](int v) { return v / kSize; };

        for (int c = 0; c < kComms; ++c) {
            std::vector<int> stubs;
            for (int v = c * kSize; v < (c + 1) * kSize; ++v)
                for (int s = 0; s < k_in; ++s) stubs.push_back(v);
            dropped += wire_stubs(std::move(stubs), adj,
                                  [](int, int) { return true; }, rng, edges);
        }
        std::vector<int> ext;
        for (int v = 0; v < kNodes; ++v)
            for (int s = 0; s < k_out; ++s) ext.push_back(v);
        dropped += wire_stubs(std::move(ext), adj,
                              [&](int a, int b) { return comm(a) != comm(b); }, rng, edges);
        if (dropped != 0) continue; // exact 16-regularity required; try again

        GeneratedNetwork out;
        std::vector<std::string> names;
        for (int v = 0; v < kNodes; ++v) names.push_back(node_name(v));
        out.msn = Msn::from_records(records_from_pairs(edges, "l1"), names, {"l1"});
        out.truth.community.resize(kNodes);
        for (int v = 0; v < kNodes; ++v) out.truth.community[static_cast<std::size_t>(v)] = comm(v);
        out.truth.layer_community.push_back(out.truth.community);
        return out;
    }
    raise(Errc::WiringFailure, "could not realize the regular planted partition");
}

GeneratedNetwork generate_lfr_base(const BenchmarkSpec& spec, std::uint64_t seed) {
    spec.validate();
    Rng rng(seed);
    auto st = plan_lfr(spec, rng);

    std::vector<std::set<int>> adj(static_cast<std::size_t>(spec.n));
    std::vector<std::pair<int, int>> edges;
    std::size_t dropped = 0;
    for (const auto& members : st.members) {
        std::vector<int> stubs;
        for (int v : members)
            for (int s = 0; s < st.k_in[static_cast<std::size_t>(v)]; ++s) stubs.push_back(v);
        dropped += wire_stubs(std::move(stubs), adj, [](int, int) { return true; }, rng, edges);
    }
    std::vector<int> ext;
    for (int v = 0; v < spec.n; ++v)
        for (int s = 0; s < st.k_out[static_cast<std::size_t>(v)]; ++s) ext.push_back(v);
    dropped += wire_stubs(std::move(ext), adj,
                          [&](int a, int b) {
                              return st.community[static_cast<std::size_t>(a)] !=
                                     st.community[static_cast<std::size_t>(b)];
                          },
                          rng, edges);

    GeneratedNetwork out;
    std::vector<std::string> names;
    for (int v = 0; v < spec.n; ++v) names.push_back(node_name(v));
    out.msn = Msn::from_records(records_from_pairs(edges, "l1"), names, {"l1"});
    out.truth.community = st.community;
    out.truth.layer_community.push_back(st.community);
    out.dropped_stubs = dropped;
    return out;
}

int swap_degrees(LayerPlan& plan, double prob, Rng& rng) {
    const int n = static_cast<int>(plan.community.size());
    std::vector<std::vector<int>> members;
    for (int v = 0; v < n; ++v) {
        int c = plan.community[static_cast<std::size_t>(v)];
        if (c >= static_cast<int>(members.size())) members.resize(static_cast<std::size_t>(c) + 1);
        members[static_cast<std::size_t>(c)].push_back(v);
    }
    int swaps = 0;
    for (int x = 0; x < n; ++x) {
        if (!rng.chance(prob)) continue;
        const auto& comm = members[static_cast<std::size_t>(plan.community[static_cast<std::size_t>(x)])];
        if (comm.size() < 2) continue;
        int y = comm[rng.below(comm.size())];
        if (y == x) continue;
        const int xin = plan.internal_degree[static_cast<std::size_t>(x)];
        const int yin = plan.internal_degree[static_cast<std::size_t>(y)];
        // after the swap each vertex must keep at least as many internal
        // stubs as external ones
        if (plan.external_degree[static_cast<std::size_t>(x)] > yin) continue;
        if (plan.external_degree[static_cast<std::size_t>(y)] > xin) continue;
        plan.internal_degree[static_cast<std::size_t>(x)] = yin;
        plan.internal_degree[static_cast<std::size_t>(y)] = xin;
        ++swaps;
    }
    return swaps;
}

int swap_memberships(LayerPlan& plan, double prob, Rng& rng) {
    const int n = static_cast<int>(plan.community.size());
    int swaps = 0;
    for (int x = 0; x < n; ++x) {
        if (!rng.chance(prob)) continue;
        int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (y == x || plan.community[static_cast<std::size_t>(x)] ==
                          plan.community[static_cast<std::size_t>(y)])
            continue;
        std::swap(plan.community[static_cast<std::size_t>(x)],
                  plan.community[static_cast<std::size_t>(y)]);
        std::swap(plan.internal_degree[static_cast<std::size_t>(x)],
                  plan.internal_degree[static_cast<std::size_t>(y)]);
        std::swap(plan.external_degree[static_cast<std::size_t>(x)],
                  plan.external_degree[static_cast<std::size_t>(y)]);
        ++swaps;
    }
    return swaps;
}

namespace detail {

double layer_count_cdf(int count, int layers, double theta) {
    if (count <= 0) return 0.0;
    if (count >= layers) return 1.0;
    double num = 0.0, den = 0.0;
    for (int j = 1; j <= layers; ++j) {
        const double w = std::pow(static_cast<double>(j), -theta);
        den += w;
        if (j <= count) num += w;
    }
    return num / den;
}

double layer_count_growth_rejection(int count, int layers, double theta) {
    if (count <= 0) return 0.0;
    if (count >= layers) return 1.0;
    const double f_prev = layer_count_cdf(count - 1, layers, theta);
    const double f_cur = layer_count_cdf(count, layers, theta);
    return (f_cur - f_prev) / (1.0 - f_prev);
}

VertexDistributionResult distribute_vertex(PairList& list,
                                           const std::vector<int>& base_candidates,
                                           const std::function<bool(int)>& is_blocked,
                                           const std::function<bool(int)>& accepts) {
    VertexDistributionResult res;
    if (list.empty()) return res;
    auto last = std::prev(list.end());
    const int vertex = last->second;
    int remaining = last->first;

    // Counts still owed by each other vertex, frozen at entry; decrements
    // are applied in one batch at the end.
    for (int y : base_candidates) {
        if (remaining == 0) break;
        if (y == vertex || is_blocked(y)) continue;
        auto it = std::find_if(list.begin(), list.end(),
                               [&](const std::pair<int, int>& e) { return e.second == y; });
        if (it == list.end() || it->first <= 0) continue;
        bool already = false;
        for (int z : res.accepted)
            if (z == y) { already = true; break; }
        if (already) continue;
        if (!accepts(y)) continue;
        res.accepted.push_back(y);
        --remaining;
    }

    if (remaining > 0) {
        std::vector<std::pair<int, int>> snapshot(list.begin(), last); // everything below the vertex
        long jumper = static_cast<long>(snapshot.size()) - remaining;
        if (jumper < 0) jumper = 0;
        for (auto it = snapshot.rbegin(); it != snapshot.rend() && remaining > 0; ++it) {
            int y = it->second;
            bool taken = false;
            for (int z : res.accepted)
                if (z == y) { taken = true; break; }
            if (taken || is_blocked(y)) continue; // forced skip
            if (jumper > 0 && !accepts(y)) {
                --jumper;
                continue;
            }
            res.accepted.push_back(y);
            --remaining;
        }
    }
    res.dropped = remaining;

    list.erase(last);
    for (int y : res.accepted) {
        auto it = std::find_if(list.begin(), list.end(),
                               [&](const std::pair<int, int>& e) { return e.second == y; });
        if (it == list.end()) continue;
        auto entry = *it;
        list.erase(it);
        if (entry.first > 1) list.insert({entry.first - 1, y});
    }
    return res;
}

} // namespace detail

GeneratedNetwork generate_mlfr(const BenchmarkSpec& spec, std::uint64_t seed) {
    spec.validate();
    GeneratedNetwork base = generate_lfr_base(spec, seed);
    if (spec.layers == 1) return base;

    Rng rng(seed ^ 0x6d6c6672ULL); // separate stream for the layer stage
    const int n = spec.n;
    const int layers = spec.layers;

    // Realized per-node internal/external degrees on the base layer.
    std::vector<int> base_in(static_cast<std::size_t>(n), 0), base_ext(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> base_adj(static_cast<std::size_t>(n));
    // Node names are "0".."n-1"; map indices once.
    std::vector<int> name_to_dense(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) name_to_dense[static_cast<std::size_t>(v)] = base.msn.node_index(node_name(v));
    std::vector<int> dense_to_plain(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dense_to_plain[static_cast<std::size_t>(name_to_dense[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < n; ++v) {
        int dv = name_to_dense[static_cast<std::size_t>(v)];
        std::set<int> nbrs;
        for (const auto& [y, w] : base.msn.out_edges(0, dv)) (void)w, nbrs.insert(y);
        for (const auto& [y, w] : base.msn.in_edges(0, dv)) (void)w, nbrs.insert(y);
        for (int dy : nbrs) {
            int y = dense_to_plain[static_cast<std::size_t>(dy)];
            base_adj[static_cast<std::size_t>(v)].push_back(y);
            if (base.truth.community[static_cast<std::size_t>(v)] ==
                base.truth.community[static_cast<std::size_t>(y)])
                ++base_in[static_cast<std::size_t>(v)];
            else
                ++base_ext[static_cast<std::size_t>(v)];
        }
    }

    // Per-layer plans with swaps.
    std::vector<LayerPlan> plans(static_cast<std::size_t>(layers));
    plans[0] = {base.truth.community, base_in, base_ext};
    for (int l = 1; l < layers; ++l) {
        plans[static_cast<std::size_t>(l)] = plans[0];
        swap_degrees(plans[static_cast<std::size_t>(l)], spec.degree_swap_prob, rng);
        swap_memberships(plans[static_cast<std::size_t>(l)], spec.membership_swap_prob, rng);
    }

    const int ncomm = 1 + *std::max_element(base.truth.community.begin(), base.truth.community.end());
    // Working adjacency per layer (layer 0 = base, fixed).
    std::vector<std::vector<std::set<int>>> adj(static_cast<std::size_t>(layers),
                                                std::vector<std::set<int>>(static_cast<std::size_t>(n)));
    std::map<std::pair<int, int>, int> pair_layers;
    auto add_edge = [&](int l, int a, int b) {
        adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)].insert(a);
        ++pair_layers[std::minmax(a, b)];
    };
    for (int v = 0; v < n; ++v)
        for (int y : base_adj[static_cast<std::size_t>(v)])
            if (v < y) add_edge(0, v, y);

    // Pair lists: per layer, one per community plus one for the
    // cross-community subgraph (group id = ncomm).
    std::map<std::pair<int, int>, detail::PairList> lists;
    for (int l = 1; l < layers; ++l) {
        const auto& plan = plans[static_cast<std::size_t>(l)];
        for (int v = 0; v < n; ++v) {
            if (plan.internal_degree[static_cast<std::size_t>(v)] > 0)
                lists[{l, plan.community[static_cast<std::size_t>(v)]}].insert(
                    {plan.internal_degree[static_cast<std::size_t>(v)], v});
            if (plan.external_degree[static_cast<std::size_t>(v)] > 0)
                lists[{l, ncomm}].insert({plan.external_degree[static_cast<std::size_t>(v)], v});
        }
    }
    std::vector<std::pair<int, int>> active;
    for (const auto& [key, list] : lists)
        if (!list.empty()) active.push_back(key);

    std::size_t dropped = 0;
    while (!active.empty()) {
        const std::size_t pick = rng.below(active.size());
        auto key = active[pick];
        auto& list = lists[key];
        if (list.empty()) {
            active.erase(active.begin() + static_cast<long>(pick));
            continue;
        }
        const int l = key.first;
        const bool external = key.second == ncomm;
        const auto& plan = plans[static_cast<std::size_t>(l)];
        const int vertex = std::prev(list.end())->second;

        // Base-layer convergence candidates, shuffled.
        std::vector<int> candidates;
        const bool same_group =
            plan.community[static_cast<std::size_t>(vertex)] ==
            base.truth.community[static_cast<std::size_t>(vertex)];
        if (same_group || external) {
            for (int y : base_adj[static_cast<std::size_t>(vertex)]) {
                const bool cross = plan.community[static_cast<std::size_t>(vertex)] !=
                                   plan.community[static_cast<std::size_t>(y)];
                const bool base_cross = base.truth.community[static_cast<std::size_t>(vertex)] !=
                                        base.truth.community[static_cast<std::size_t>(y)];
                if (external ? (base_cross && cross) : (!base_cross && !cross))
                    candidates.push_back(y);
            }
            rng.shuffle(candidates);
        }

        auto is_blocked = [&](int y) {
            if (adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(vertex)].count(y)) return true;
            const bool cross = plan.community[static_cast<std::size_t>(vertex)] !=
                               plan.community[static_cast<std::size_t>(y)];
            return external ? !cross : cross;
        };
        auto accepts = [&](int y) {
            auto it = pair_layers.find(std::minmax(vertex, y));
            const int count = it == pair_layers.end() ? 0 : it->second;
            return rng.uniform() >=
                   detail::layer_count_growth_rejection(count, layers, spec.layer_exponent);
        };
        auto res = detail::distribute_vertex(list, candidates, is_blocked, accepts);
        for (int y : res.accepted) add_edge(l, vertex, y);
        dropped += static_cast<std::size_t>(res.dropped);
        if (list.empty()) active.erase(active.begin() + static_cast<long>(pick));
    }

    // Assemble the multi-layer network; layer 0 is the base, verbatim.
    std::vector<EdgeRecord> recs;
    std::vector<std::string> layer_names;
    for (int l = 0; l < layers; ++l) layer_names.push_back("l" + std::to_string(l + 1));
    for (int l = 0; l < layers; ++l)
        for (int v = 0; v < n; ++v)
            for (int y : adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)])
                if (v < y)
                    recs.push_back({node_name(v), node_name(y), layer_names[static_cast<std::size_t>(l)], 1.0});

    GeneratedNetwork out;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(node_name(v));
    out.msn = Msn::from_records(recs, names, layer_names);
    out.truth.community = base.truth.community;
    for (int l = 0; l < layers; ++l) out.truth.layer_community.push_back(plans[static_cast<std::size_t>(l)].community);
    out.dropped_stubs = base.dropped_stubs + dropped;
    return out;
}

} // namespace mlsna
