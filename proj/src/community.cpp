#include "mlsna/community.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

#include "mlsna/bits.hpp"

namespace mlsna {

namespace {

constexpr double kTieTol = 1e-9;

// Directed-tuple incidence per node over all layers: other endpoint with
// multiplicity. Used by the community-existence predicates.
std::vector<std::vector<int>> incidence(const Msn& msn) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(msn.node_count()));
    for (int l = 0; l < msn.layer_count(); ++l)
        for (int x = 0; x < msn.node_count(); ++x) {
            for (const auto& [y, w] : msn.out_edges(l, x)) (void)w, inc[static_cast<std::size_t>(x)].push_back(y);
            for (const auto& [y, w] : msn.in_edges(l, x)) (void)w, inc[static_cast<std::size_t>(x)].push_back(y);
        }
    return inc;
}

struct DegreeSplit {
    long in = 0;
    long out = 0;
};

DegreeSplit member_degrees(const std::vector<std::vector<int>>& inc, const std::vector<char>& in_group,
                           int i) {
    DegreeSplit d;
    for (int j : inc[static_cast<std::size_t>(i)])
        if (in_group[static_cast<std::size_t>(j)]) ++d.in;
        else ++d.out;
    return d;
}

std::vector<char> member_mask(const Msn& msn, const Group& g) {
    std::vector<char> mask(static_cast<std::size_t>(msn.node_count()), 0);
    if (g.members.empty()) raise(Errc::EmptyGroup, "group has no members");
    for (const auto& v : g.members) mask[static_cast<std::size_t>(msn.node_index(v))] = 1;
    return mask;
}

// ---------------------------------------------------------------------
// Working state of the divisive method.

struct Pair {
    int x, y;
    double val = 0.0;
    bool alive = true;
    std::uint32_t gen = 0;
};

struct Engine {
    const Msn& msn;
    int n;
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> pairs_of; // node -> pair indices (lazily pruned)
    std::vector<Bits> mn;                   // working alpha-neighbourhoods
    std::vector<char> active;               // node still being processed
    std::vector<int> comp_of;               // component id per active node
    std::vector<std::vector<int>> comp_nodes;
    std::vector<std::vector<int>> inc; // original-network incidence
    std::size_t alive_pairs = 0;

    struct Entry {
        double key;
        int pair;
        std::uint32_t gen;
    };
    struct EntryGreater {
        bool operator()(const Entry& a, const Entry& b) const {
            return a.key > b.key || (a.key == b.key && a.pair > b.pair);
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, EntryGreater> queue;

    explicit Engine(const Msn& m, int alpha) : msn(m), n(m.node_count()) {
        // Unordered pairs adjacent on >= alpha layers, any direction.
        std::map<std::pair<int, int>, int> layer_counts;
        for (int l = 0; l < msn.layer_count(); ++l)
            for (int x = 0; x < n; ++x)
                for (const auto& [y, w] : msn.out_edges(l, x)) {
                    (void)w;
                    auto key = std::minmax(x, y);
                    ++layer_counts[{key.first, key.second}];
                    if (msn.has_edge(y, x, l)) {
                        // counted once per layer per unordered pair
                        if (x < y) --layer_counts[{key.first, key.second}];
                    }
                }
        mn.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
        pairs_of.assign(static_cast<std::size_t>(n), {});
        for (const auto& [key, cnt] : layer_counts) {
            if (cnt < alpha) continue;
            int idx = static_cast<int>(pairs.size());
            pairs.push_back({key.first, key.second, 0.0, true, 0});
            pairs_of[static_cast<std::size_t>(key.first)].push_back(idx);
            pairs_of[static_cast<std::size_t>(key.second)].push_back(idx);
            mn[static_cast<std::size_t>(key.first)].set(static_cast<std::size_t>(key.second));
            mn[static_cast<std::size_t>(key.second)].set(static_cast<std::size_t>(key.first));
        }
        alive_pairs = pairs.size();
        active.assign(static_cast<std::size_t>(n), 1);
        inc = incidence(msn);
        for (auto& p : pairs) refresh(p);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            queue.push({pairs[i].val, static_cast<int>(i), pairs[i].gen});
    }

    void refresh(Pair& p) {
        const auto& mx = mn[static_cast<std::size_t>(p.x)];
        const auto& my = mn[static_cast<std::size_t>(p.y)];
        const std::size_t inter = Bits::intersection_count(mx, my);
        const std::size_t uni = Bits::union_count(mx, my);
        p.val = uni > 1 ? static_cast<double>(inter) / static_cast<double>(uni - 1) : 0.0;
    }

    void update_pair(int idx) {
        Pair& p = pairs[static_cast<std::size_t>(idx)];
        refresh(p);
        ++p.gen;
        queue.push({p.val, idx, p.gen});
    }

    void kill_pair(int idx) {
        Pair& p = pairs[static_cast<std::size_t>(idx)];
        if (!p.alive) return;
        p.alive = false;
        --alive_pairs;
        mn[static_cast<std::size_t>(p.x)].reset(static_cast<std::size_t>(p.y));
        mn[static_cast<std::size_t>(p.y)].reset(static_cast<std::size_t>(p.x));
    }

    bool weak(const std::vector<int>& comp) const {
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        for (int v : comp) mask[static_cast<std::size_t>(v)] = 1;
        long in = 0, out = 0;
        for (int v : comp) {
            auto d = member_degrees(inc, mask, v);
            in += d.in;
            out += d.out;
        }
        return in > out;
    }

    bool strong(const std::vector<int>& comp) const {
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        for (int v : comp) mask[static_cast<std::size_t>(v)] = 1;
        for (int v : comp) {
            auto d = member_degrees(inc, mask, v);
            if (d.in <= d.out) return false;
        }
        return true;
    }

    bool satisfies(const std::vector<int>& comp, CommunityCondition c) const {
        return c == CommunityCondition::Weak ? weak(comp) : strong(comp);
    }

    // Connected components of `nodes` over alive pairs.
    std::vector<std::vector<int>> split_components(const std::vector<int>& nodes) {
        std::vector<std::vector<int>> comps;
        std::set<int> pending(nodes.begin(), nodes.end());
        while (!pending.empty()) {
            int start = *pending.begin();
            std::vector<int> comp, stack{start};
            pending.erase(pending.begin());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                auto& pof = pairs_of[static_cast<std::size_t>(v)];
                pof.erase(std::remove_if(pof.begin(), pof.end(),
                                         [&](int pi) { return !pairs[static_cast<std::size_t>(pi)].alive; }),
                          pof.end());
                for (int pi : pof) {
                    const Pair& p = pairs[static_cast<std::size_t>(pi)];
                    int other = p.x == v ? p.y : p.x;
                    auto it = pending.find(other);
                    if (it != pending.end()) {
                        pending.erase(it);
                        stack.push_back(other);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    }
};

} // namespace

bool is_weak_community(const Msn& msn, const Group& g) {
    auto mask = member_mask(msn, g);
    auto inc = incidence(msn);
    long in = 0, out = 0;
    for (const auto& v : g.members) {
        auto d = member_degrees(inc, mask, msn.node_index(v));
        in += d.in;
        out += d.out;
    }
    return in > out;
}

bool is_strong_community(const Msn& msn, const Group& g) {
    auto mask = member_mask(msn, g);
    auto inc = incidence(msn);
    for (const auto& v : g.members) {
        auto d = member_degrees(inc, mask, msn.node_index(v));
        if (d.in <= d.out) return false;
    }
    return true;
}

// The divisive loop keeps removing minimum-valued pairs everywhere. A
// split of a piece becomes final ("commits") only when every part of
// size >= 2 satisfies the community condition; the parts then continue as
// candidate groups of their own. Splits with a failing part are treated
// as exploration: the pieces keep being divided under the same candidate,
// and when a candidate's whole subtree exhausts without a single commit,
// the candidate freezes as it was born (it is a group that cannot be
// divided into groups). Nodes isolated before their candidate's commit
// are left unassigned.
std::pair<Partition, ExtractionTrace> clecc_method(const Msn& msn, int alpha,
                                                   CommunityCondition condition,
                                                   const CleccMethodOptions& opt) {
    if (alpha < 1 || alpha > std::max(1, msn.layer_count()))
        raise(Errc::AlphaOutOfRange, "alpha must lie in [1, |L|]");

    ExtractionTrace trace;
    Partition result;
    if (msn.node_count() == 0) return {result, trace};

    Engine eng(msn, alpha);
    const int n = eng.n;

    struct Candidate {
        std::vector<int> born_members;
        int active_pieces = 0;
        bool any_commit = false;
        bool passes = false; // condition on the original network, at birth
    };
    std::vector<Candidate> candidates;
    std::vector<int> piece_candidate; // per piece id
    std::vector<std::vector<int>> frozen_comps;
    std::vector<int> frozen_at;
    std::vector<char> grouped(static_cast<std::size_t>(n), 0);

    auto freeze = [&](std::vector<int> comp, int iteration) {
        for (int v : comp) grouped[static_cast<std::size_t>(v)] = 1;
        frozen_comps.push_back(std::move(comp));
        frozen_at.push_back(iteration);
    };
    auto new_candidate = [&](std::vector<int> members) {
        Candidate c;
        c.passes = eng.satisfies(members, condition);
        c.born_members = std::move(members);
        candidates.push_back(std::move(c));
        return static_cast<int>(candidates.size() - 1);
    };
    auto new_piece = [&](std::vector<int> members, int candidate) {
        int id = static_cast<int>(eng.comp_nodes.size());
        for (int v : members) eng.comp_of[static_cast<std::size_t>(v)] = id;
        eng.comp_nodes.push_back(std::move(members));
        piece_candidate.push_back(candidate);
        ++candidates[static_cast<std::size_t>(candidate)].active_pieces;
        return id;
    };
    auto candidate_piece_done = [&](int candidate, int iteration) {
        auto& c = candidates[static_cast<std::size_t>(candidate)];
        if (--c.active_pieces > 0) return;
        if (!c.any_commit && c.passes) freeze(std::move(c.born_members), iteration);
        // with a commit inside, leftovers stay unassigned; without a
        // pass, the candidate dissolves entirely
    };

    // Initial components become the root candidates.
    eng.comp_of.assign(static_cast<std::size_t>(n), -1);
    {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        for (auto& comp : eng.split_components(all)) {
            if (comp.size() == 1) continue; // isolated from the start
            int candidate = new_candidate(comp);
            new_piece(std::move(comp), candidate);
        }
    }

    int iteration = 0;
    while (eng.alive_pairs > 0) {
        ++iteration;
        ExtractionTrace::Iteration it_rec;
        if (opt.record_pair_values) {
            for (const auto& p : eng.pairs)
                if (p.alive)
                    it_rec.values.push_back(
                        {{msn.node_name(std::min(p.x, p.y)), msn.node_name(std::max(p.x, p.y))}, p.val});
            std::sort(it_rec.values.begin(), it_rec.values.end());
        }

        // Pop stale queue entries until the current global minimum surfaces.
        double min_val = 0.0;
        bool found = false;
        std::vector<int> batch;
        while (!eng.queue.empty()) {
            auto top = eng.queue.top();
            const Pair& p = eng.pairs[static_cast<std::size_t>(top.pair)];
            if (!p.alive || p.gen != top.gen) {
                eng.queue.pop();
                continue;
            }
            if (!found) {
                min_val = top.key;
                found = true;
            }
            if (top.key <= min_val + kTieTol) {
                batch.push_back(top.pair);
                eng.queue.pop();
            } else {
                break;
            }
        }
        if (!found) break;

        std::set<int> touched_nodes;
        for (int pi : batch) {
            const Pair& p = eng.pairs[static_cast<std::size_t>(pi)];
            touched_nodes.insert(p.x);
            touched_nodes.insert(p.y);
            it_rec.removed.push_back({msn.node_name(std::min(p.x, p.y)), msn.node_name(std::max(p.x, p.y))});
            eng.kill_pair(pi);
        }
        std::sort(it_rec.removed.begin(), it_rec.removed.end());
        it_rec.value = min_val;
        trace.iterations.push_back(std::move(it_rec));

        // Recompute the measure for the surviving pairs at the touched
        // endpoints; only their neighbourhoods changed.
        for (int v : touched_nodes) {
            auto& pof = eng.pairs_of[static_cast<std::size_t>(v)];
            pof.erase(std::remove_if(pof.begin(), pof.end(),
                                     [&](int pi) { return !eng.pairs[static_cast<std::size_t>(pi)].alive; }),
                      pof.end());
            for (int pi : pof) eng.update_pair(pi);
        }

        // Re-examine the affected pieces for splits.
        std::set<int> affected_pieces;
        for (int v : touched_nodes)
            if (eng.comp_of[static_cast<std::size_t>(v)] >= 0)
                affected_pieces.insert(eng.comp_of[static_cast<std::size_t>(v)]);
        for (int pid : affected_pieces) {
            auto nodes = eng.comp_nodes[static_cast<std::size_t>(pid)];
            auto parts = eng.split_components(nodes);
            if (parts.size() <= 1 && !(parts.size() == 1 && parts[0].size() == 1)) continue;
            const int candidate = piece_candidate[static_cast<std::size_t>(pid)];

            std::vector<std::vector<int>> nonsingleton;
            for (auto& part : parts) {
                if (part.size() == 1) eng.comp_of[static_cast<std::size_t>(part[0])] = -1;
                else nonsingleton.push_back(std::move(part));
            }
            if (nonsingleton.empty()) {
                // the piece dissolved entirely
                candidate_piece_done(candidate, iteration);
                continue;
            }
            if (nonsingleton.size() == 1) {
                // a chip-off: the piece continues under the same candidate
                int id = static_cast<int>(eng.comp_nodes.size());
                for (int v : nonsingleton[0]) eng.comp_of[static_cast<std::size_t>(v)] = id;
                eng.comp_nodes.push_back(std::move(nonsingleton[0]));
                piece_candidate.push_back(candidate);
                continue;
            }
            bool all_pass = true;
            for (const auto& part : nonsingleton)
                if (!eng.satisfies(part, condition)) {
                    all_pass = false;
                    break;
                }
            if (all_pass) {
                // the split commits: each part starts a candidate of its own
                candidates[static_cast<std::size_t>(candidate)].any_commit = true;
                for (auto& part : nonsingleton) {
                    int child = new_candidate(part);
                    new_piece(std::move(part), child);
                }
                candidate_piece_done(candidate, iteration);
            } else {
                // exploration continues under the same candidate
                for (auto& part : nonsingleton) new_piece(std::move(part), candidate);
                --candidates[static_cast<std::size_t>(candidate)].active_pieces; // the split piece itself
            }
        }
    }
    // pieces that still hold pairs never existed at this point; resolve
    // candidates whose pieces all ended exactly at the last removal
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (candidates[c].active_pieces > 0 && !candidates[c].born_members.empty()) {
            // a piece can only survive the loop with zero pairs left, i.e.
            // as isolated nodes; treat it as dissolved
            candidates[c].active_pieces = 0;
            if (!candidates[c].any_commit && candidates[c].passes)
                freeze(std::move(candidates[c].born_members), iteration);
        }

    for (std::size_t gi = 0; gi < frozen_comps.size(); ++gi) {
        Group g;
        g.id = std::to_string(gi);
        for (int v : frozen_comps[gi]) g.members.push_back(msn.node_name(v));
        std::sort(g.members.begin(), g.members.end());
        trace.frozen.push_back({frozen_at[gi], g});
        result.groups.push_back(std::move(g));
    }
    for (int v = 0; v < n; ++v)
        if (!grouped[static_cast<std::size_t>(v)]) result.unassigned.push_back(msn.node_name(v));
    std::sort(result.unassigned.begin(), result.unassigned.end());
    trace.dropped_singletons = result.unassigned.size();
    return {result, trace};
}

Partition clecc_plus(const Msn& msn, const Partition& p) {
    Partition out = p;
    if (p.unassigned.empty()) return out;

    std::map<std::string, int> group_of;
    for (std::size_t gi = 0; gi < p.groups.size(); ++gi)
        for (const auto& v : p.groups[gi].members) group_of[v] = static_cast<int>(gi);

    std::vector<std::string> still_unassigned;
    for (const auto& v : p.unassigned) {
        std::set<int> nbrs;
        int vi = msn.node_index(v);
        for (int l = 0; l < msn.layer_count(); ++l) {
            for (const auto& [y, w] : msn.out_edges(l, vi)) (void)w, nbrs.insert(y);
            for (const auto& [y, w] : msn.in_edges(l, vi)) (void)w, nbrs.insert(y);
        }
        std::map<int, int> votes;
        for (int y : nbrs) {
            auto it = group_of.find(msn.node_name(y));
            if (it != group_of.end()) ++votes[it->second];
        }
        int best = -1, best_votes = 0;
        bool tie = false;
        for (const auto& [gi, cnt] : votes) {
            if (cnt > best_votes) {
                best = gi;
                best_votes = cnt;
                tie = false;
            } else if (cnt == best_votes) {
                tie = true;
            }
        }
        if (best >= 0 && !tie) {
            auto& members = out.groups[static_cast<std::size_t>(best)].members;
            members.insert(std::lower_bound(members.begin(), members.end(), v), v);
        } else {
            still_unassigned.push_back(v);
        }
    }
    out.unassigned = std::move(still_unassigned);
    return out;
}

} // namespace mlsna
