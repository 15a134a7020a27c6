#include "mlsna/evolution.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mlsna {

namespace {

std::vector<std::string> intersect_sorted(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::map<std::string, double> importance_values(const Group& g, const Msn& net,
                                                const ImportanceSource& imp) {
    std::map<std::string, double> out;
    if (imp.kind == ImportanceKind::None) return out; // empty: quality factor stays 1
    Msn sub = net.induced_subgraph(g.members);
    if (imp.kind == ImportanceKind::SocialPosition) return social_position(sub, imp.sp);
    // Degree: raw distinct-neighbour count within the group, all layers.
    for (const auto& v : g.members) {
        int vi = sub.node_index(v);
        std::set<int> nbrs;
        for (int l = 0; l < sub.layer_count(); ++l) {
            for (const auto& [y, w] : sub.out_edges(l, vi)) (void)w, nbrs.insert(y);
            for (const auto& [y, w] : sub.in_edges(l, vi)) (void)w, nbrs.insert(y);
        }
        out[v] = static_cast<double>(nbrs.size());
    }
    return out;
}

double inclusion_with(const Group& g1, const Group& g2,
                      const std::map<std::string, double>& ni) {
    if (g1.members.empty() || g2.members.empty()) raise(Errc::EmptyGroup, "inclusion of an empty group");
    auto common = intersect_sorted(g1.members, g2.members);
    const double quantity =
        static_cast<double>(common.size()) / static_cast<double>(g1.members.size());
    double total = 0.0, shared = 0.0;
    for (const auto& v : g1.members) {
        auto it = ni.find(v);
        if (it != ni.end()) total += it->second;
    }
    for (const auto& v : common) {
        auto it = ni.find(v);
        if (it != ni.end()) shared += it->second;
    }
    const double quality = total > 0.0 ? shared / total : 1.0; // zero mass degrades to quantity-only
    return quantity * quality;
}

} // namespace

double inclusion(const Group& g1, const Group& g2, const Msn& net_i,
                 const ImportanceSource& importance) {
    return inclusion_with(g1, g2, importance_values(g1, net_i, importance));
}

const char* to_string(EventKind k) {
    switch (k) {
    case EventKind::Continuing: return "continuing";
    case EventKind::Shrinking: return "shrinking";
    case EventKind::Growing: return "growing";
    case EventKind::Splitting: return "splitting";
    case EventKind::Merging: return "merging";
    case EventKind::Dissolving: return "dissolving";
    case EventKind::Forming: return "forming";
    }
    return "?";
}

std::optional<EventKind> event_from_string(const std::string& s) {
    for (EventKind k : {EventKind::Continuing, EventKind::Shrinking, EventKind::Growing,
                        EventKind::Splitting, EventKind::Merging, EventKind::Dissolving,
                        EventKind::Forming})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::optional<EventKind> classify_event(double i12, double i21, long size1, long size2,
                                        int source_next_matches, int target_prev_matches,
                                        double alpha, double beta) {
    const bool fwd = i12 >= alpha;
    const bool bwd = i21 >= beta;
    if (fwd && bwd && size1 == size2) return EventKind::Continuing;
    if ((fwd && bwd && size1 > size2) ||
        (!fwd && bwd && size1 >= size2 && source_next_matches == 1))
        return EventKind::Shrinking;
    if ((fwd && bwd && size1 < size2) ||
        (fwd && !bwd && size1 <= size2 && target_prev_matches == 1))
        return EventKind::Growing;
    if (!fwd && bwd && size1 >= size2 && source_next_matches > 1) return EventKind::Splitting;
    if (fwd && !bwd && size1 <= size2 && target_prev_matches > 1) return EventKind::Merging;
    return std::nullopt;
}

std::vector<EvolutionEvent> ged(const Dsn& dsn, const std::vector<Partition>& partitions,
                                const GedOptions& opt) {
    if (partitions.size() != dsn.frames.size())
        raise(Errc::FrameMismatch, "need exactly one partition per frame");
    std::vector<EvolutionEvent> events;

    for (std::size_t f = 0; f + 1 < dsn.frames.size(); ++f) {
        const auto& prev = partitions[f].groups;
        const auto& next = partitions[f + 1].groups;
        const auto np = prev.size(), nn = next.size();

        std::vector<std::map<std::string, double>> ni_prev(np), ni_next(nn);
        for (std::size_t a = 0; a < np; ++a)
            ni_prev[a] = importance_values(prev[a], dsn.frames[f], opt.importance);
        for (std::size_t b = 0; b < nn; ++b)
            ni_next[b] = importance_values(next[b], dsn.frames[f + 1], opt.importance);

        std::vector<std::vector<double>> fwd(np, std::vector<double>(nn, 0.0));
        std::vector<std::vector<double>> bwd(np, std::vector<double>(nn, 0.0));
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                fwd[a][b] = inclusion_with(prev[a], next[b], ni_prev[a]);
                bwd[a][b] = inclusion_with(next[b], prev[a], ni_next[b]);
            }

        std::vector<int> next_matches(np, 0), prev_matches(nn, 0);
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < nn; ++b)
                if (fwd[a][b] >= opt.alpha || bwd[a][b] >= opt.beta) {
                    ++next_matches[a];
                    ++prev_matches[b];
                }

        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                auto kind = classify_event(fwd[a][b], bwd[a][b],
                                           static_cast<long>(prev[a].members.size()),
                                           static_cast<long>(next[b].members.size()),
                                           next_matches[a], prev_matches[b], opt.alpha, opt.beta);
                if (kind)
                    events.push_back({static_cast<int>(f), prev[a].id, static_cast<int>(f + 1),
                                      next[b].id, *kind, fwd[a][b], bwd[a][b]});
            }

        for (std::size_t a = 0; a < np; ++a) {
            bool gone = true;
            for (std::size_t b = 0; b < nn && gone; ++b)
                if (fwd[a][b] >= opt.form_threshold || bwd[a][b] >= opt.form_threshold) gone = false;
            if (gone)
                events.push_back({static_cast<int>(f), prev[a].id, static_cast<int>(f + 1), "",
                                  EventKind::Dissolving, 0.0, 0.0});
        }
        for (std::size_t b = 0; b < nn; ++b) {
            bool fresh = true;
            for (std::size_t a = 0; a < np && fresh; ++a)
                if (fwd[a][b] >= opt.form_threshold || bwd[a][b] >= opt.form_threshold) fresh = false;
            if (fresh)
                events.push_back({static_cast<int>(f), "", static_cast<int>(f + 1), next[b].id,
                                  EventKind::Forming, 0.0, 0.0});
        }
    }
    return events;
}

namespace {

using GroupKey = std::pair<int, std::string>;

const Group* find_group(const std::vector<Partition>& partitions, const GroupKey& key) {
    if (key.first < 0 || static_cast<std::size_t>(key.first) >= partitions.size()) return nullptr;
    for (const auto& g : partitions[static_cast<std::size_t>(key.first)].groups)
        if (g.id == key.second) return &g;
    return nullptr;
}

} // namespace

std::vector<Chain> evolution_chains(const std::vector<EvolutionEvent>& events,
                                    const std::vector<Partition>& partitions) {
    std::map<GroupKey, std::vector<const EvolutionEvent*>> outgoing;
    std::map<GroupKey, std::vector<const EvolutionEvent*>> incoming;
    std::map<GroupKey, bool> dissolves;
    std::set<GroupKey> all_groups;
    for (std::size_t f = 0; f < partitions.size(); ++f)
        for (const auto& g : partitions[f].groups) all_groups.insert({static_cast<int>(f), g.id});

    for (const auto& e : events) {
        if (e.kind == EventKind::Forming) continue;
        if (e.kind == EventKind::Dissolving) {
            dissolves[{e.frame_i, e.group_i}] = true;
            continue;
        }
        outgoing[{e.frame_i, e.group_i}].push_back(&e);
        incoming[{e.frame_j, e.group_j}].push_back(&e);
    }

    // For every group with several incoming events, the chain continues
    // from the parent contributing the most members (ties: smaller id).
    std::map<GroupKey, GroupKey> continued_from;
    for (const auto& [key, ins] : incoming) {
        const Group* child = find_group(partitions, key);
        GroupKey best{-1, ""};
        std::size_t best_overlap = 0;
        for (const auto* e : ins) {
            GroupKey pk{e->frame_i, e->group_i};
            const Group* parent = find_group(partitions, pk);
            std::size_t overlap = 0;
            if (child && parent) overlap = intersect_sorted(child->members, parent->members).size();
            if (best.first < 0 || overlap > best_overlap ||
                (overlap == best_overlap && pk < best)) {
                best = pk;
                best_overlap = overlap;
            }
        }
        continued_from[key] = best;
    }

    std::vector<Chain> chains;
    // DFS from every chain root (groups without an incoming pair event).
    struct Walker {
        const std::map<GroupKey, std::vector<const EvolutionEvent*>>& outgoing;
        const std::map<GroupKey, GroupKey>& continued_from;
        const std::map<GroupKey, bool>& dissolves;
        std::vector<Chain>& chains;

        void walk(Chain prefix, const GroupKey& g) {
            prefix.groups.push_back(g);
            auto out_it = outgoing.find(g);
            bool continued = false;
            if (out_it != outgoing.end()) {
                std::vector<const EvolutionEvent*> outs = out_it->second;
                std::sort(outs.begin(), outs.end(), [](const EvolutionEvent* a, const EvolutionEvent* b) {
                    return a->group_j < b->group_j;
                });
                for (const auto* e : outs) {
                    GroupKey child{e->frame_j, e->group_j};
                    auto cf = continued_from.find(child);
                    if (cf != continued_from.end() && cf->second == g) {
                        Chain next = prefix;
                        next.events.push_back(e->kind);
                        walk(std::move(next), child);
                        continued = true;
                    } else {
                        Chain ended = prefix;
                        ended.terminal = e->kind;
                        chains.push_back(std::move(ended));
                    }
                }
            }
            if (!continued) {
                auto d = dissolves.find(g);
                if (d != dissolves.end() && d->second) {
                    prefix.terminal = EventKind::Dissolving;
                    chains.push_back(std::move(prefix));
                } else if (out_it == outgoing.end()) {
                    chains.push_back(std::move(prefix));
                }
            }
        }
    } walker{outgoing, continued_from, dissolves, chains};

    for (const auto& g : all_groups) {
        auto in_it = incoming.find(g);
        if (in_it == incoming.end() || in_it->second.empty()) walker.walk(Chain{}, g);
    }
    return chains;
}

} // namespace mlsna
