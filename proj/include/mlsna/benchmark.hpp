#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mlsna/graph.hpp"
#include "mlsna/rng.hpp"

namespace mlsna {

struct BenchmarkSpec {
    int n = 1000;
    int layers = 1;
    double avg_degree = 20.0;
    int max_degree = 50;
    double tau1 = 2.0; // degree power-law exponent
    double tau2 = 1.0; // community-size power-law exponent
    double mu = 0.1;   // mixing parameter
    int cmin = 10;
    int cmax = 50;
    double layer_exponent = 2.0;
    double degree_swap_prob = 0.1;
    double membership_swap_prob = 0.1;

    void validate() const;
};

/// Planted communities; community[v] is the group of node v on the base
/// layer and layer_community[l][v] the (possibly swapped) group on layer l.
struct GroundTruth {
    std::vector<int> community;
    std::vector<std::vector<int>> layer_community;
};

struct GeneratedNetwork {
    Msn msn;
    GroundTruth truth;
    std::size_t dropped_stubs = 0;
};

/// Classic four-planted-groups recipe: 128 nodes, four communities of 32,
/// every node with degree exactly 16 of which round(out_ratio*16) leave
/// the community. Throws WiringFailure when the configuration model cannot
/// be realized after bounded retries.
GeneratedNetwork generate_gn(double out_ratio, std::uint64_t seed);

/// Planted-partition generator with power-law degrees and community sizes.
GeneratedNetwork generate_lfr_base(const BenchmarkSpec& spec, std::uint64_t seed);

/// Full multi-layer pipeline: base layer, per-layer degree/membership
/// swaps, then per-community edge distribution over the other layers.
GeneratedNetwork generate_mlfr(const BenchmarkSpec& spec, std::uint64_t seed);

/// Per-layer wiring targets for the non-base layers.
struct LayerPlan {
    std::vector<int> community;       // per node, on this layer
    std::vector<int> internal_degree; // within-community stubs
    std::vector<int> external_degree; // cross-community stubs
};

/// Swap internal degrees of same-community vertex pairs; each vertex
/// triggers with probability `prob`, the partner is uniform in its
/// community, and a swap leaving either vertex with more external than
/// internal stubs is rejected. Returns the number of swaps applied.
int swap_degrees(LayerPlan& plan, double prob, Rng& rng);

/// Swap whole slots (community plus both degree targets) across
/// communities; degree sequences per community are preserved. Returns the
/// number of swaps applied.
int swap_memberships(LayerPlan& plan, double prob, Rng& rng);

namespace detail {

/// Ascending (remaining internal degree, vertex) list for one community
/// on one layer.
using PairList = std::set<std::pair<int, int>>;

struct VertexDistributionResult {
    std::vector<int> accepted; // neighbours wired to the vertex
    int dropped = 0;           // stubs the vertex could not place
};

/// Assign all of one vertex's remaining stubs, vertex-at-a-time: the
/// vertex is the last (largest) list entry; candidates converge to the
/// base-layer neighbourhood first, then come from the list iterated
/// downwards from the next-to-last element. The jumper allowance bounds
/// how many list elements may be skipped on taste (the acceptance
/// callback) without risking an unfillable tail; blocked candidates
/// (already adjacent or structurally invalid) are always skipped. The
/// vertex entry is removed and the accepted neighbours' entries are
/// decremented.
VertexDistributionResult distribute_vertex(
    PairList& list, const std::vector<int>& base_candidates,
    const std::function<bool(int)>& is_blocked, const std::function<bool(int)>& accepts);

/// Cumulative layer-count distribution used for edge acceptance:
/// F(0) = 0 and F(c) sums j^-theta for j <= c, normalized over |L| layers.
double layer_count_cdf(int count, int layers, double theta);

/// Probability that a pair already present on `count` layers refuses to
/// grow: the hazard (F(c) - F(c-1)) / (1 - F(c-1)) of the distribution
/// above, which makes realized layer counts follow it. 0 at count 0,
/// 1 at count |L|.
double layer_count_growth_rejection(int count, int layers, double theta);

} // namespace detail

} // namespace mlsna
