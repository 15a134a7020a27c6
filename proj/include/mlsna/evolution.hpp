#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlsna/graph.hpp"
#include "mlsna/measures.hpp"

namespace mlsna {

enum class ImportanceKind { SocialPosition, Degree, None };

struct ImportanceSource {
    ImportanceKind kind = ImportanceKind::None;
    SocialPositionOptions sp; // used when kind == SocialPosition
};

/// Inclusion I(G1,G2): quantity (|G1∩G2|/|G1|) times quality (importance
/// mass of the intersection within G1). Importance is evaluated on the
/// subgraph of `net_i` induced by G1. If every member's importance is 0
/// the quality factor degrades to 1.
double inclusion(const Group& g1, const Group& g2, const Msn& net_i,
                 const ImportanceSource& importance = {});

enum class EventKind { Continuing, Shrinking, Growing, Splitting, Merging, Dissolving, Forming };

const char* to_string(EventKind k);
std::optional<EventKind> event_from_string(const std::string& s);

/// One evolution step between consecutive frames. group_j is empty for
/// dissolving, group_i for forming.
struct EvolutionEvent {
    int frame_i = -1;
    std::string group_i;
    int frame_j = -1;
    std::string group_j;
    EventKind kind = EventKind::Continuing;
    double incl_fwd = 0.0;
    double incl_bwd = 0.0;
};

/// Decide the event for a pair of groups from the two inclusions, the two
/// sizes and the match counts. `source_next_matches` counts groups in the
/// next frame matching G1, `target_prev_matches` groups in the previous
/// frame matching G2, where a match means I(A,B) >= alpha or I(B,A) >= beta.
/// Conditions are evaluated in order: continuing, shrinking, growing,
/// splitting, merging; the first that holds wins. nullopt when none does.
std::optional<EventKind> classify_event(double i12, double i21, long size1, long size2,
                                        int source_next_matches, int target_prev_matches,
                                        double alpha, double beta);

struct GedOptions {
    double alpha = 0.5;
    double beta = 0.5;
    ImportanceSource importance;
    double form_threshold = 0.1; // forming/dissolving cutoff on both inclusions
};

/// Group Evolution Discovery over consecutive frames: every group pair is
/// scored with both inclusions and classified; a group whose inclusions
/// with every next-frame group stay below the forming threshold dissolves,
/// and symmetrically for forming. One partition per frame is required.
std::vector<EvolutionEvent> ged(const Dsn& dsn, const std::vector<Partition>& partitions,
                                const GedOptions& opt = {});

/// A group timeline: groups[i] is (frame, group id); events[i] joins
/// groups[i] to groups[i+1]. A terminal event (dissolving, or a merge the
/// chain does not continue through) has no following group.
struct Chain {
    std::vector<std::pair<int, std::string>> groups;
    std::vector<EventKind> events;
    std::optional<EventKind> terminal;
};

/// Timelines through the event list. Splitting forks the chain (children
/// share the parent prefix); a merge continues only from the parent
/// contributing the most members, and ends the other parents' chains.
std::vector<Chain> evolution_chains(const std::vector<EvolutionEvent>& events,
                                    const std::vector<Partition>& partitions);

} // namespace mlsna
