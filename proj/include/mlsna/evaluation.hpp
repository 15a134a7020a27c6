#pragma once

#include <string>
#include <vector>

#include "mlsna/graph.hpp"

namespace mlsna {

/// How unassigned nodes enter partition scoring.
enum class UnassignedPolicy {
    Singletons, // each unassigned node becomes its own cluster (default)
    Drop,       // nodes unassigned in either partition are excluded
};

struct ConfusionMatrix {
    std::vector<std::string> row_ids; // model groups (after expansion)
    std::vector<std::string> col_ids; // extracted groups
    std::vector<std::vector<long>> counts;
    std::vector<long> row_sums;
    std::vector<long> col_sums;
    long total = 0;
};

/// n_ij = |model group i ∩ extracted group j| after the unassigned policy
/// is applied. Both partitions must cover the same node universe.
ConfusionMatrix confusion_matrix(const Partition& model, const Partition& extracted,
                                 UnassignedPolicy policy = UnassignedPolicy::Singletons);

/// Normalized mutual information of two partitions (natural log). 1 for
/// identical partitions up to relabeling; the degenerate case of two
/// single all-covering groups also scores 1.
double nmi(const Partition& model, const Partition& extracted,
           UnassignedPolicy policy = UnassignedPolicy::Singletons);

double nmi(const ConfusionMatrix& cm);

} // namespace mlsna
