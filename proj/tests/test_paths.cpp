#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "mlsna/paths.hpp"
#include "oracles.hpp"

using namespace mlsna;

TEST_CASE("strangeness arithmetic") {
    SUBCASE("full weight on all layers means zero distance") {
        Msn m = load_msn({{"a", "b", "l1", 1.0}, {"a", "b", "l2", 1.0}});
        CHECK(strangeness(m, "a", "b") == doctest::Approx(0.0));
    }
    SUBCASE("absent edges sit at distance one") {
        Msn m = load_msn({{"a", "b", "l1", 1.0}, {"c", "b", "l1", 0.25}});
        CHECK(strangeness(m, "b", "a") == doctest::Approx(1.0));
    }
    SUBCASE("partial weights") {
        Msn m = load_msn({{"a", "b", "l1", 0.5}, {"c", "b", "l2", 1.0}});
        CHECK(strangeness(m, "a", "b") == doctest::Approx(0.75));
    }
    SUBCASE("negative-relation networks skip the inversion") {
        Msn m = load_msn({{"a", "b", "l1", 0.5}, {"c", "b", "l2", 1.0}});
        CHECK(strangeness(m, "a", "b", false) == doctest::Approx(0.25));
    }
    SUBCASE("weights outside the unit interval are rejected") {
        Msn m = load_msn({{"a", "b", "l1", 3.0}});
        CHECK_THROWS_AS((void)strangeness(m, "a", "b"), Error);
    }
    SUBCASE("anti-monotone in total weight, always within [0,1]") {
        Rng rng(2);
        for (int t = 0; t < 200; ++t) {
            double w1 = rng.uniform(), w2 = rng.uniform();
            Msn lo = load_msn({{"a", "b", "l1", std::min(w1, w2)}, {"b", "c", "l2", 0.1}});
            Msn hi = load_msn({{"a", "b", "l1", std::max(w1, w2)}, {"b", "c", "l2", 0.1}});
            double dl = strangeness(lo, "a", "b"), dh = strangeness(hi, "a", "b");
            CHECK(dl >= dh - 1e-12);
            CHECK(dl >= 0.0);
            CHECK(dl <= 1.0);
        }
    }
}

TEST_CASE("multi-edge predicates") {
    Rng rng(9);
    Msn m = fixtures::random_msn(rng, 7, 3, 0.3);

    SUBCASE("vacuous thresholds admit every connected ordered pair") {
        auto edges = multi_edges(m, MultiEdgeMode::Both, 1, 1.0);
        std::size_t connected_pairs = 0;
        for (const auto& x : m.nodes())
            for (const auto& y : m.nodes()) {
                if (x == y) continue;
                int cnt = 0;
                for (int l = 0; l < m.layer_count(); ++l)
                    if (m.has_edge(m.node_index(x), m.node_index(y), l)) ++cnt;
                if (cnt >= 1) ++connected_pairs;
            }
        CHECK(edges.size() == connected_pairs);
    }
    SUBCASE("alpha = |L| keeps only pairs present everywhere") {
        auto edges = multi_edges(m, MultiEdgeMode::ByLayers, 3, 0.0);
        for (const auto& e : edges) CHECK(e.layer_count == 3);
    }
    SUBCASE("matches a predicate filter over all ordered pairs") {
        for (double beta : {0.3, 0.6, 0.9})
            for (int alpha : {1, 2, 3}) {
                auto edges = multi_edges(m, MultiEdgeMode::Both, alpha, beta);
                std::set<std::pair<std::string, std::string>> got;
                for (const auto& e : edges) {
                    got.insert({e.source, e.target});
                    CHECK(e.distance == doctest::Approx(strangeness(m, e.source, e.target)));
                }
                std::set<std::pair<std::string, std::string>> expect;
                for (const auto& x : m.nodes())
                    for (const auto& y : m.nodes()) {
                        if (x == y) continue;
                        int cnt = 0;
                        for (int l = 0; l < m.layer_count(); ++l)
                            if (m.has_edge(m.node_index(x), m.node_index(y), l)) ++cnt;
                        if (cnt >= alpha && strangeness(m, x, y) <= beta) expect.insert({x, y});
                    }
                CHECK(got == expect);
            }
    }
    SUBCASE("parameters are validated") {
        CHECK_THROWS_AS((void)multi_edges(m, MultiEdgeMode::ByLayers, 0, 0.5), Error);
        CHECK_THROWS_AS((void)multi_edges(m, MultiEdgeMode::ByDistance, 1, 1.5), Error);
    }
}

TEST_CASE("single-source shortest paths") {
    SUBCASE("no multi-edges leaves everything unreachable") {
        Msn m = Msn::from_records({{"a", "b", "l1", 0.5}}, {"a", "b", "c"}, {"l1", "l2"});
        auto res = shortest_paths_dap(m, "c", 1, 1.0);
        CHECK(res.lengths.size() == 1);
        CHECK(res.lengths.at("c") == doctest::Approx(0.0));
    }
    SUBCASE("a single edge carries its strangeness") {
        Msn m = load_msn({{"s", "t", "l1", 0.7}});
        auto res = shortest_paths_dap(m, "s", 1, 1.0);
        CHECK(res.lengths.at("t") == doctest::Approx(0.3));
        CHECK(res.predecessors.at("t") == "s");
    }
    SUBCASE("unknown source") {
        Msn m = load_msn({{"s", "t", "l1", 0.7}});
        CHECK_THROWS_AS((void)shortest_paths_dap(m, "zz", 1, 1.0), Error);
    }
}

TEST_CASE("DAP equals MDA and both match Floyd-Warshall") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const int nl = 1 + static_cast<int>(rng.below(3));
        Msn m = fixtures::random_msn(rng, n, nl, 0.35);
        for (int alpha = 1; alpha <= nl; ++alpha) {
            auto g = me_graph(m, alpha, 1.0);
            auto fw = oracles::floyd_warshall(g.adj);
            for (const auto& src : m.nodes()) {
                auto dap = shortest_paths_dap(m, src, alpha, 1.0);
                auto mda = shortest_paths_mda(m, src, alpha);
                CHECK(dap.lengths.size() == mda.lengths.size());
                for (const auto& [target, len] : dap.lengths) {
                    auto it = mda.lengths.find(target);
                    REQUIRE(it != mda.lengths.end());
                    CHECK(len == doctest::Approx(it->second).epsilon(1e-12));
                    CHECK(len == doctest::Approx(
                                     fw[static_cast<std::size_t>(m.node_index(src))]
                                       [static_cast<std::size_t>(m.node_index(target))])
                                     .epsilon(1e-12));
                }
                // unreachable targets are absent, matching infinite rows
                for (const auto& target : m.nodes())
                    if (!dap.lengths.count(target))
                        CHECK(std::isinf(fw[static_cast<std::size_t>(m.node_index(src))]
                                           [static_cast<std::size_t>(m.node_index(target))]));
            }
        }
    }
}

TEST_CASE("predecessor chains terminate at the source; lengths respect the triangle inequality") {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        Msn m = fixtures::random_msn(rng, 8, 2, 0.3);
        auto g = me_graph(m, 1, 1.0);
        for (const auto& src : m.nodes()) {
            auto res = shortest_paths_dap(m, src, 1, 1.0);
            for (const auto& [target, len] : res.lengths) {
                (void)len;
                std::string cur = target;
                int hops = 0;
                while (cur != src) {
                    REQUIRE(res.predecessors.count(cur));
                    cur = res.predecessors.at(cur);
                    REQUIRE(++hops <= m.node_count());
                }
            }
            for (std::size_t v = 0; v < g.names.size(); ++v)
                for (const auto& [y, w] : g.adj[v]) {
                    auto dv = res.lengths.find(g.names[v]);
                    auto dy = res.lengths.find(g.names[static_cast<std::size_t>(y)]);
                    if (dv != res.lengths.end()) {
                        REQUIRE(dy != res.lengths.end());
                        CHECK(dy->second <= dv->second + w + 1e-9);
                    }
                }
        }
    }
}

TEST_CASE("multi-layered closeness and betweenness collapse to the single-layer values") {
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Msn m = fixtures::random_msn(rng, 7, 1, 0.45, true, true);
        // replace unit weights by a uniform 0.5 so hop structure is preserved
        auto recs = m.to_records();
        for (auto& r : recs) r.weight = 0.5;
        Msn half = Msn::from_records(recs, m.nodes(), m.layers());

        auto g = me_graph(half, 1, 1.0);
        auto cc_multi = closeness_over(g, true);
        auto bc_multi = betweenness_over(g, false);
        for (std::size_t i = 0; i < g.names.size(); ++i) {
            const double unit_cc = closeness(m, g.names[i], true);
            // every hop costs 1 - 0.5, so closeness scales by its inverse
            CHECK(cc_multi[i] == doctest::Approx(unit_cc / 0.5).epsilon(1e-9));
            CHECK(bc_multi[i] == doctest::Approx(betweenness(m, g.names[i])).epsilon(1e-9));
        }
    }
}
