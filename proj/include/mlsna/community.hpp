#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mlsna/graph.hpp"

namespace mlsna {

enum class CommunityCondition { Weak, Strong };

/// Trace of a divisive extraction run: what was removed when, at which
/// measure value, and which components were frozen as groups.
struct ExtractionTrace {
    struct Iteration {
        std::vector<std::pair<std::string, std::string>> removed; // name-sorted pairs
        double value = 0.0;                                       // the minimum attained
        // (pair, value) for every candidate pair at the start of the
        // iteration; filled only when record_pair_values is set.
        std::vector<std::pair<std::pair<std::string, std::string>, double>> values;
    };
    struct Freeze {
        int after_iteration = 0; // 0 = before any removal
        Group group;
    };
    std::vector<Iteration> iterations;
    std::vector<Freeze> frozen;
    std::size_t dropped_singletons = 0;
};

struct CleccMethodOptions {
    bool record_pair_values = false;
};

/// Sum of within-group degrees exceeds the sum of outward degrees;
/// degrees are directed-tuple counts over all layers of the original
/// network.
bool is_weak_community(const Msn& msn, const Group& g);

/// Every member's within-group degree exceeds its outward degree.
bool is_strong_community(const Msn& msn, const Group& g);

/// Divisive extraction by repeated removal of the minimum-CLECC pairs.
/// Pairs adjacent on at least `alpha` layers are the working graph; each
/// iteration removes every pair tied (1e-9) at the global minimum, on all
/// layers at once. When a component splits into two or more parts of size
/// >= 2, each part is tested against `condition` on the original network;
/// passing parts freeze as groups, failing parts keep being processed.
/// Nodes that end up isolated are left unassigned.
std::pair<Partition, ExtractionTrace> clecc_method(const Msn& msn, int alpha,
                                                   CommunityCondition condition,
                                                   const CleccMethodOptions& opt = {});

/// Post-pass: every unassigned node joins the group holding strictly more
/// of its distinct neighbours (all layers, original network) than any
/// other; ties and neighbourless nodes stay unassigned. Single
/// simultaneous pass over the input partition.
Partition clecc_plus(const Msn& msn, const Partition& p);

} // namespace mlsna
