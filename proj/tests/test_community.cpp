#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "mlsna/community.hpp"
#include "mlsna/measures.hpp"
#include "oracles.hpp"

using namespace mlsna;
using fixtures::kn;

namespace {

Group group_of(std::vector<std::string> members) {
    std::sort(members.begin(), members.end());
    return {"g", members, -1};
}

// clique of `size` nodes named <prefix><i>, with undirected tuples
std::vector<EdgeRecord> clique_records(const std::string& prefix, int size,
                                       const std::string& layer = "l1") {
    std::vector<EdgeRecord> recs;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (i != j)
                recs.push_back({prefix + std::to_string(i), prefix + std::to_string(j), layer, 1.0});
    return recs;
}

} // namespace

TEST_CASE("community-existence predicates") {
    SUBCASE("an embedded clique with one external edge per member is strong and weak") {
        auto recs = clique_records("c", 4);
        for (int i = 0; i < 4; ++i) {
            recs.push_back({"c" + std::to_string(i), "out" + std::to_string(i), "l1", 1.0});
            recs.push_back({"out" + std::to_string(i), "c" + std::to_string(i), "l1", 1.0});
        }
        Msn m = load_msn(recs);
        Group g = group_of({"c0", "c1", "c2", "c3"});
        CHECK(is_weak_community(m, g));
        CHECK(is_strong_community(m, g));
    }
    SUBCASE("a lone edge with two external edges per endpoint is not weak") {
        std::vector<EdgeRecord> recs = {{"a", "b", "l1", 1.0}, {"b", "a", "l1", 1.0}};
        for (const auto& v : {"a", "b"})
            for (int i = 0; i < 2; ++i) {
                recs.push_back({v, v + std::string("x") + std::to_string(i), "l1", 1.0});
                recs.push_back({v + std::string("x") + std::to_string(i), v, "l1", 1.0});
            }
        Msn m = load_msn(recs);
        Group g = group_of({"a", "b"});
        CHECK_FALSE(is_weak_community(m, g));
        CHECK_FALSE(is_strong_community(m, g));
    }
    SUBCASE("matches a direct count on random graphs") {
        Rng rng(19);
        for (int trial = 0; trial < 50; ++trial) {
            Msn m = fixtures::random_msn(rng, 9, 2, 0.3);
            std::vector<std::string> members;
            for (const auto& v : m.nodes())
                if (rng.chance(0.5)) members.push_back(v);
            if (members.empty()) continue;
            Group g = group_of(members);
            std::set<std::string> inside(members.begin(), members.end());
            long in = 0, out = 0;
            bool strong = true;
            for (const auto& v : members) {
                long vin = 0, vout = 0;
                for (const auto& r : m.to_records()) {
                    if (r.source == v) (inside.count(r.target) ? vin : vout) += 1;
                    if (r.target == v) (inside.count(r.source) ? vin : vout) += 1;
                }
                in += vin;
                out += vout;
                if (vin <= vout) strong = false;
            }
            CHECK(is_weak_community(m, g) == (in > out));
            CHECK(is_strong_community(m, g) == strong);
        }
    }
    SUBCASE("unknown members are an error") {
        Msn m = load_msn({{"a", "b", "l1", 1.0}});
        CHECK_THROWS_AS((void)is_weak_community(m, group_of({"ghost"})), Error);
    }
}

TEST_CASE("divisive extraction walks the published path on the club network") {
    Msn karate = fixtures::karate();
    CleccMethodOptions opt;
    opt.record_pair_values = true;
    auto [partition, trace] = clecc_method(karate, 1, CommunityCondition::Weak, opt);

    SUBCASE("the documented removals open the run") {
        REQUIRE(trace.iterations.size() >= 3);
        std::vector<std::pair<std::string, std::string>> expected1;
        for (auto [a, b] : fixtures::karate_first_removals())
            expected1.push_back({kn(std::min(a, b)), kn(std::max(a, b))});
        std::sort(expected1.begin(), expected1.end());
        CHECK(trace.iterations[0].removed == expected1);
        CHECK(trace.iterations[0].value == doctest::Approx(0.0));

        CHECK(trace.iterations[1].removed ==
              std::vector<std::pair<std::string, std::string>>{{kn(1), kn(9)}, {kn(3), kn(33)}});
        CHECK(trace.iterations[1].value == doctest::Approx(0.0588).epsilon(1e-3));
        CHECK(trace.iterations[2].removed ==
              std::vector<std::pair<std::string, std::string>>{{kn(3), kn(9)}});
    }
    SUBCASE("recorded pair values match the published table per iteration") {
        for (const auto& row : fixtures::karate_iteration_values()) {
            const std::pair<std::string, std::string> key{kn(std::min(row.a, row.b)),
                                                          kn(std::max(row.a, row.b))};
            const double expected[3] = {row.it1, row.it2, row.it3};
            for (int it = 0; it < 3; ++it) {
                const auto& values = trace.iterations[static_cast<std::size_t>(it)].values;
                auto found = std::find_if(values.begin(), values.end(),
                                          [&](const auto& e) { return e.first == key; });
                if (expected[it] < 0) {
                    CHECK(found == values.end()); // already removed
                } else {
                    REQUIRE(found != values.end());
                    CHECK(found->second == doctest::Approx(expected[it]).epsilon(1.1e-3));
                }
            }
        }
    }
    SUBCASE("final partition: the two factions, two nodes left out") {
        REQUIRE(partition.groups.size() == 2);
        std::set<std::string> hi(partition.groups[0].members.begin(), partition.groups[0].members.end());
        std::set<std::string> john(partition.groups[1].members.begin(), partition.groups[1].members.end());
        if (hi.count(kn(34))) std::swap(hi, john);
        std::set<std::string> expect_hi, expect_john;
        for (int v : fixtures::karate_group_hi()) expect_hi.insert(kn(v));
        for (int v : fixtures::karate_group_john()) expect_john.insert(kn(v));
        CHECK(hi == expect_hi);
        CHECK(john == expect_john);
        CHECK(partition.unassigned == std::vector<std::string>{kn(10), kn(12)});
    }
    SUBCASE("every frozen group satisfies the condition on the original network") {
        for (const auto& f : trace.frozen) CHECK(is_weak_community(karate, f.group));
    }
    SUBCASE("the post-pass assigns node 12 and leaves node 10 out") {
        auto plus = clecc_plus(karate, partition);
        CHECK(plus.unassigned == std::vector<std::string>{kn(10)});
        bool found = false;
        for (const auto& g : plus.groups)
            if (std::count(g.members.begin(), g.members.end(), kn(12))) {
                found = true;
                CHECK(std::count(g.members.begin(), g.members.end(), kn(1)) == 1);
            }
        CHECK(found);
    }
}

TEST_CASE("extraction is deterministic") {
    Msn karate = fixtures::karate();
    auto [p1, t1] = clecc_method(karate, 1, CommunityCondition::Weak);
    auto [p2, t2] = clecc_method(karate, 1, CommunityCondition::Weak);
    REQUIRE(t1.iterations.size() == t2.iterations.size());
    for (std::size_t i = 0; i < t1.iterations.size(); ++i)
        CHECK(t1.iterations[i].removed == t2.iterations[i].removed);
    REQUIRE(p1.groups.size() == p2.groups.size());
    for (std::size_t i = 0; i < p1.groups.size(); ++i)
        CHECK(p1.groups[i].members == p2.groups[i].members);
}

TEST_CASE("separated communities that admit no further split freeze whole") {
    auto recs = clique_records("a", 4);
    auto more = clique_records("b", 4);
    recs.insert(recs.end(), more.begin(), more.end());
    Msn m = load_msn(recs);
    auto [partition, trace] = clecc_method(m, 1, CommunityCondition::Weak);
    (void)trace;
    REQUIRE(partition.groups.size() == 2);
    CHECK(partition.unassigned.empty());
    CHECK(partition.groups[0].members.size() == 4);
    CHECK(partition.groups[1].members.size() == 4);
}

TEST_CASE("a connected weak community with no divisible structure is one group") {
    Msn m = load_msn(clique_records("k", 5));
    auto [partition, trace] = clecc_method(m, 1, CommunityCondition::Weak);
    (void)trace;
    REQUIRE(partition.groups.size() == 1);
    CHECK(partition.groups[0].members.size() == 5);
    CHECK(partition.unassigned.empty());
}

TEST_CASE("the post-pass is the identity when everything is assigned") {
    auto recs = clique_records("a", 4);
    auto more = clique_records("b", 4);
    recs.insert(recs.end(), more.begin(), more.end());
    Msn m = load_msn(recs);
    auto [partition, trace] = clecc_method(m, 1, CommunityCondition::Weak);
    (void)trace;
    auto plus = clecc_plus(m, partition);
    REQUIRE(plus.groups.size() == partition.groups.size());
    for (std::size_t i = 0; i < plus.groups.size(); ++i)
        CHECK(plus.groups[i].members == partition.groups[i].members);
}

TEST_CASE("a leaf attached to a single group joins it in the post-pass") {
    // connected input: two cliques, a bridge, and a leaf; the zero-valued
    // bridge and leaf edges go first, then both cliques freeze
    auto recs = clique_records("a", 4);
    auto more = clique_records("b", 4);
    recs.insert(recs.end(), more.begin(), more.end());
    recs.push_back({"a0", "b0", "l1", 1.0});
    recs.push_back({"b0", "a0", "l1", 1.0});
    recs.push_back({"leaf", "a1", "l1", 1.0});
    recs.push_back({"a1", "leaf", "l1", 1.0});
    Msn m = load_msn(recs);
    auto [partition, trace] = clecc_method(m, 1, CommunityCondition::Weak);
    (void)trace;
    CHECK(partition.unassigned == std::vector<std::string>{"leaf"});
    auto plus = clecc_plus(m, partition);
    CHECK(plus.unassigned.empty());
    bool placed = false;
    for (const auto& g : plus.groups)
        if (std::count(g.members.begin(), g.members.end(), "leaf"))
            placed = std::count(g.members.begin(), g.members.end(), "a1") == 1;
    CHECK(placed);
}

TEST_CASE("the post-pass never moves assigned nodes or shrinks the assigned set") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Msn m = fixtures::random_msn(rng, 12, 2, 0.25, true);
        auto [partition, trace] = clecc_method(m, 1, CommunityCondition::Weak);
        (void)trace;
        auto plus = clecc_plus(m, partition);
        std::size_t before = 0, after = 0;
        for (const auto& g : partition.groups) before += g.members.size();
        for (std::size_t i = 0; i < partition.groups.size(); ++i) {
            after += plus.groups[i].members.size();
            for (const auto& v : partition.groups[i].members)
                CHECK(std::count(plus.groups[i].members.begin(), plus.groups[i].members.end(), v) == 1);
        }
        CHECK(after >= before);
        CHECK(plus.unassigned.size() <= partition.unassigned.size());
    }
}

TEST_CASE("alpha is validated and multi-layer extraction respects the threshold") {
    Msn m = fixtures::three_layer_example();
    CHECK_THROWS_AS((void)clecc_method(m, 0, CommunityCondition::Weak), Error);
    CHECK_THROWS_AS((void)clecc_method(m, 4, CommunityCondition::Weak), Error);
    auto [partition, trace] = clecc_method(m, 3, CommunityCondition::Weak);
    (void)trace;
    // only x-u, x-y, x-z are three-layer pairs; t and v can never join a group
    for (const auto& g : partition.groups) {
        CHECK(std::count(g.members.begin(), g.members.end(), "t") == 0);
        CHECK(std::count(g.members.begin(), g.members.end(), "v") == 0);
    }
}

TEST_CASE("re-evaluated pairs stay within the removed pairs' neighbourhoods") {
    // work-bound sanity: every pair whose value changes between
    // iterations is incident to a removed pair's endpoint
    Msn karate = fixtures::karate();
    CleccMethodOptions opt;
    opt.record_pair_values = true;
    auto [partition, trace] = clecc_method(karate, 1, CommunityCondition::Weak, opt);
    (void)partition;
    for (std::size_t it = 1; it < trace.iterations.size(); ++it) {
        std::set<std::string> touched;
        for (const auto& [a, b] : trace.iterations[it - 1].removed) {
            touched.insert(a);
            touched.insert(b);
        }
        std::map<std::pair<std::string, std::string>, double> prev;
        for (const auto& e : trace.iterations[it - 1].values) prev[e.first] = e.second;
        for (const auto& e : trace.iterations[it].values) {
            auto p = prev.find(e.first);
            if (p == prev.end()) continue;
            if (std::abs(p->second - e.second) > 1e-12)
                CHECK((touched.count(e.first.first) || touched.count(e.first.second)));
        }
    }
}
