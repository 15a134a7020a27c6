#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlsna/graph.hpp"

namespace mlsna {

/// Directionality of a multi-layered neighbourhood query.
enum class NeighbourhoodMode { In, Out, InOutAny, InOut, Any };

enum class Direction { Total, In, Out };

/// N(x,l): nodes adjacent to x on layer l in either direction.
std::vector<std::string> layer_neighbourhood(const Msn& msn, const std::string& x,
                                             const std::string& layer);

/// MN(x,alpha) under the chosen mode: nodes adjacent to x on at least
/// alpha layers, where "adjacent" is interpreted per mode. Throws
/// AlphaOutOfRange unless 1 <= alpha <= |L|.
std::vector<std::string> multi_neighbourhood(const Msn& msn, const std::string& x, int alpha,
                                             NeighbourhoodMode mode);

/// Degree centrality on a single-layer network. `weighted` sums edge
/// weights instead of counting distinct neighbours; `normalized` divides
/// by n-1 (DegenerateNetwork when n < 2).
double degree_centrality(const Msn& net, const std::string& x, Direction dir, bool normalized,
                         bool weighted = false);

/// Closeness centrality with unit edge costs. Unreachable nodes are
/// excluded from the sum and the numerator counts reachable nodes only;
/// an isolated node scores 0.
double closeness(const Msn& net, const std::string& x, bool normalized = true);
std::map<std::string, double> closeness_all(const Msn& net, bool normalized = true);

/// Betweenness centrality with unit edge costs. The default divides the
/// ordered-pair dependency sum by n-1; `conventional` switches to the
/// usual unordered-pair sum over (n-1)(n-2)/2. Throws DegenerateNetwork
/// when n < 3.
double betweenness(const Msn& net, const std::string& x, bool conventional = false);
std::map<std::string, double> betweenness_all(const Msn& net, bool conventional = false);

/// Weighted digraph in dense-index form, used to evaluate closeness and
/// betweenness over arbitrary distance graphs (e.g. multi-layered edges).
struct WeightedDigraph {
    std::vector<std::string> names;
    std::vector<std::vector<std::pair<int, double>>> adj; // sorted by target
};

std::vector<double> closeness_over(const WeightedDigraph& g, bool normalized = true);
std::vector<double> betweenness_over(const WeightedDigraph& g, bool conventional = false);

struct SocialPositionOptions {
    double epsilon = 0.85;
    double tol = 1e-6;
    int max_iter = 1000;
};

/// Fixed point of SP(x) = (1-eps) + eps * sum_y SP(y) C(y->x), starting
/// from SP = 1, with the commitment C(y->x) given by y's out-weights
/// normalized to sum to 1 (nodes without out-edges commit nothing).
/// Layers are aggregated first when the network has more than one.
/// Throws NoConvergence after max_iter.
std::map<std::string, double> social_position(const Msn& net, const SocialPositionOptions& opt = {});

/// Cross-layered clustering coefficient (ANY-mode neighbourhood).
double clcc(const Msn& msn, const std::string& x, int alpha);

/// Cross-layered degree centrality over MN(x,alpha); denominator (n-1)|L|.
double cdc(const Msn& msn, const std::string& x, int alpha, Direction dir = Direction::Total);

/// Multi-layered degree centrality, versions 1..3 (denominators (n-1)|L|,
/// (n-1)|MN(x,1)| and (n-1) sum_l |N(x,l)| respectively).
double mdc(const Msn& msn, const std::string& x, int version, Direction dir = Direction::Total);

/// Edge clustering coefficient (z+1)/s with s = min(deg x, deg y) - 1 on a
/// single-layer network. Throws NoSuchEdge / DegenerateDenominator.
double ecc(const Msn& net, const std::string& x, const std::string& y);

/// Cross-layered edge clustering coefficient:
///   |MN(x,a) ∩ MN(y,a)|  /  (|(MN(x,a) ∪ MN(y,a)) \ {x,y}| + [x,y adjacent])
/// 0 when both numerator and denominator vanish.
double clecc(const Msn& msn, const std::string& x, const std::string& y, int alpha);

/// Rescale all weights by the global maximum so they land in [0,1].
Msn normalized_by_max(const Msn& msn);

} // namespace mlsna
