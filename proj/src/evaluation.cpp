#include "mlsna/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mlsna {

namespace {

// node -> cluster index after applying the unassigned policy; nodes to be
// dropped are simply omitted.
std::map<std::string, int> cluster_of(const Partition& p, UnassignedPolicy policy, int& next_id) {
    std::map<std::string, int> out;
    for (const auto& g : p.groups) {
        int id = next_id++;
        for (const auto& v : g.members) out[v] = id;
    }
    if (policy == UnassignedPolicy::Singletons)
        for (const auto& v : p.unassigned) out[v] = next_id++;
    return out;
}

} // namespace

ConfusionMatrix confusion_matrix(const Partition& model, const Partition& extracted,
                                 UnassignedPolicy policy) {
    auto ua = partition_universe(model);
    auto ub = partition_universe(extracted);
    if (ua != ub) raise(Errc::UniverseMismatch, "partitions cover different node sets");

    int next_row = 0, next_col = 0;
    auto rows = cluster_of(model, policy, next_row);
    auto cols = cluster_of(extracted, policy, next_col);

    ConfusionMatrix cm;
    cm.counts.assign(static_cast<std::size_t>(next_row), std::vector<long>(static_cast<std::size_t>(next_col), 0));
    for (const auto& v : ua) {
        auto ri = rows.find(v);
        auto ci = cols.find(v);
        if (ri == rows.end() || ci == cols.end()) continue; // dropped
        ++cm.counts[static_cast<std::size_t>(ri->second)][static_cast<std::size_t>(ci->second)];
        ++cm.total;
    }
    cm.row_sums.assign(static_cast<std::size_t>(next_row), 0);
    cm.col_sums.assign(static_cast<std::size_t>(next_col), 0);
    for (std::size_t i = 0; i < cm.counts.size(); ++i)
        for (std::size_t j = 0; j < cm.counts[i].size(); ++j) {
            cm.row_sums[i] += cm.counts[i][j];
            cm.col_sums[j] += cm.counts[i][j];
        }
    for (int i = 0; i < next_row; ++i) cm.row_ids.push_back("m" + std::to_string(i));
    for (int j = 0; j < next_col; ++j) cm.col_ids.push_back("e" + std::to_string(j));
    return cm;
}

double nmi(const ConfusionMatrix& cm) {
    const double n = static_cast<double>(cm.total);
    if (cm.total == 0) return 1.0;
    double num = 0.0;
    for (std::size_t i = 0; i < cm.counts.size(); ++i)
        for (std::size_t j = 0; j < cm.counts[i].size(); ++j) {
            const long c = cm.counts[i][j];
            if (c == 0) continue;
            num += static_cast<double>(c) *
                   std::log(static_cast<double>(c) * n /
                            (static_cast<double>(cm.row_sums[i]) * static_cast<double>(cm.col_sums[j])));
        }
    num *= -2.0;
    double den = 0.0;
    for (long r : cm.row_sums)
        if (r > 0) den += static_cast<double>(r) * std::log(static_cast<double>(r) / n);
    for (long c : cm.col_sums)
        if (c > 0) den += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
    if (den == 0.0) return 1.0; // both partitions are single all-covering groups
    return num / den;
}

double nmi(const Partition& model, const Partition& extracted, UnassignedPolicy policy) {
    return nmi(confusion_matrix(model, extracted, policy));
}

} // namespace mlsna
