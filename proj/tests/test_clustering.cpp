#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "citekit/clustering.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using Catch::Matchers::WithinAbs;
using Edges = std::vector<std::tuple<size_t, size_t, long>>;

namespace {

Edges join(Edges a, const Edges& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

citekit::ClusterResult manual_clusters(std::vector<std::vector<size_t>> groups) {
    citekit::ClusterResult r;
    for (auto& g : groups) {
        citekit::Cluster c;
        c.id = static_cast<int>(r.clusters.size());
        c.path = "#" + std::to_string(c.id);
        c.members = std::move(g);
        r.clusters.push_back(std::move(c));
    }
    return r;
}

}  // namespace

TEST_CASE("greedy modularity clustering") {
    SECTION("a clique is one cluster") {
        auto net = builders::make_network(5, builders::clique_edges(0, 4));
        auto result = citekit::cluster_network(net);
        REQUIRE(result.clusters.size() == 1);
        CHECK(result.clusters[0].members == std::vector<size_t>{0, 1, 2, 3, 4});
        CHECK(result.clusters[0].id == 0);
        CHECK(result.clusters[0].path == "#0");
        CHECK(result.noise.empty());
    }
    SECTION("a bridged pair of cliques splits at the bridge") {
        auto net = builders::make_network(
            8, join(join(builders::clique_edges(0, 3), builders::clique_edges(4, 7)),
                    {{3, 4, 1}}));
        auto result = citekit::cluster_network(net);
        REQUIRE(result.clusters.size() == 2);
        CHECK(result.clusters[0].members == std::vector<size_t>{0, 1, 2, 3});
        CHECK(result.clusters[1].members == std::vector<size_t>{4, 5, 6, 7});
    }
    SECTION("disconnected triangles stay separate") {
        auto net = builders::make_network(
            6, join(builders::clique_edges(0, 2), builders::clique_edges(3, 5)));
        auto result = citekit::cluster_network(net);
        REQUIRE(result.clusters.size() == 2);
        CHECK(result.clusters[0].members == std::vector<size_t>{0, 1, 2});
        CHECK(result.clusters[1].members == std::vector<size_t>{3, 4, 5});
    }
    SECTION("an empty network is rejected") {
        auto net = builders::make_network(0, {});
        CHECK_THROWS_AS(citekit::cluster_network(net), citekit::Error);
    }
    SECTION("small groups become noise") {
        auto net = builders::make_network(
            8, join(join(builders::clique_edges(0, 2), builders::clique_edges(3, 5)),
                    {{6, 7, 1}}));
        auto result = citekit::cluster_network(net);  // min_size defaults to 3
        REQUIRE(result.clusters.size() == 2);
        CHECK(result.noise == std::vector<size_t>{6, 7});

        citekit::ClusterOptions opts;
        opts.min_size = 1;
        auto keep_all = citekit::cluster_network(net, opts);
        CHECK(keep_all.clusters.size() == 3);
        CHECK(keep_all.noise.empty());
    }
    SECTION("isolated nodes are noise") {
        auto net = builders::make_network(4, builders::clique_edges(0, 2));
        auto result = citekit::cluster_network(net);
        REQUIRE(result.clusters.size() == 1);
        CHECK(result.noise == std::vector<size_t>{3});
    }
    SECTION("clustering is deterministic") {
        auto net = builders::make_network(
            8, join(join(builders::clique_edges(0, 3), builders::clique_edges(4, 7)),
                    {{3, 4, 1}, {0, 7, 1}}));
        auto a = citekit::cluster_network(net);
        auto b = citekit::cluster_network(net);
        REQUIRE(a.clusters.size() == b.clusters.size());
        for (size_t i = 0; i < a.clusters.size(); ++i)
            CHECK(a.clusters[i].members == b.clusters[i].members);
    }
}

TEST_CASE("partition vector") {
    auto net = builders::make_network(
        8, join(join(builders::clique_edges(0, 2), builders::clique_edges(3, 5)),
                {{6, 7, 1}}));
    auto result = citekit::cluster_network(net);
    auto partition = citekit::partition_of(result, 8);
    CHECK(partition == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 3});
}

TEST_CASE("greedy result is optimal on a small benchmark family") {
    struct Case {
        const char* name;
        size_t n;
        Edges edges;
    };
    std::vector<Case> family{
        {"two triangles", 6, join(builders::clique_edges(0, 2), builders::clique_edges(3, 5))},
        {"bridged triangles", 7,
         join(join(builders::clique_edges(0, 2), builders::clique_edges(4, 6)), {{2, 4, 1}})},
        {"barbell", 8,
         join(join(builders::clique_edges(0, 3), builders::clique_edges(4, 7)), {{3, 4, 1}})},
        {"two separate cliques", 8,
         join(builders::clique_edges(0, 3), builders::clique_edges(4, 7))},
        {"clique", 5, builders::clique_edges(0, 4)},
        {"star", 6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}}},
        {"path", 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}},
    };
    citekit::ClusterOptions opts;
    opts.min_size = 1;
    for (const auto& c : family) {
        INFO(c.name);
        auto net = builders::make_network(c.n, c.edges);
        auto result = citekit::cluster_network(net, opts);
        double greedy_q = citekit::modularity(net, citekit::partition_of(result, c.n));
        double best_q = oracles::optimal_modularity(net);
        REQUIRE_THAT(greedy_q, WithinAbs(best_q, 1e-12));
    }
}

TEST_CASE("profile distances") {
    // triangle plus a pendant: 0-1-2 closed, 3 hangs off 2
    auto net = builders::make_network(
        4, join(builders::clique_edges(0, 2), {{2, 3, 1}}));
    auto adj = net.adjacency();
    citekit::detail::ProfileDistance dist{adj};

    SECTION("shared neighborhoods mean distance zero") {
        // 0 and 1 both connect only to each other and 2
        CHECK(dist(0, 1) == 0.0);
        CHECK(dist(1, 0) == 0.0);
    }
    SECTION("distance matches the excluding-pair cosine") {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                if (i == j) continue;
                CHECK_THAT(dist(i, j),
                           WithinAbs(oracles::profile_distance_reference(net, i, j), 1e-12));
            }
    }
    SECTION("empty profiles are maximally distant") {
        auto sparse = builders::make_network(3, {{0, 1, 1}});
        auto sparse_adj = sparse.adjacency();
        citekit::detail::ProfileDistance d{sparse_adj};
        CHECK(d(0, 2) == 1.0);  // node 2 has no neighbors at all
        CHECK(d(0, 1) == 1.0);  // excluding the pair leaves nothing
    }
}

TEST_CASE("cluster silhouettes") {
    SECTION("perfectly separated clusters score one") {
        auto net = builders::make_network(
            6, join(builders::clique_edges(0, 2), builders::clique_edges(3, 5)));
        auto result = citekit::cluster_network(net);
        citekit::compute_silhouettes(net, result);
        REQUIRE(result.clusters.size() == 2);
        CHECK(result.clusters[0].silhouette == 1.0);
        CHECK(result.clusters[1].silhouette == 1.0);
    }
    SECTION("matches the direct formula on a weighted path") {
        auto net = builders::make_network(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}});
        auto result = manual_clusters({{0, 1}, {2, 3}});
        citekit::compute_silhouettes(net, result);
        for (size_t c = 0; c < 2; ++c) {
            REQUIRE(result.clusters[c].silhouette.has_value());
            CHECK_THAT(*result.clusters[c].silhouette,
                       WithinAbs(oracles::silhouette_reference(net, {{0, 1}, {2, 3}}, c),
                                 1e-12));
        }
    }
    SECTION("indistinguishable clusters score zero") {
        // no edges at all: every profile distance is 1, so b - a is 0
        auto net = builders::make_network(4, {});
        auto result = manual_clusters({{0, 1}, {2, 3}});
        citekit::compute_silhouettes(net, result);
        CHECK(result.clusters[0].silhouette == 0.0);
        CHECK(result.clusters[1].silhouette == 0.0);
    }
    SECTION("singleton clusters score zero") {
        auto net = builders::make_network(3, builders::clique_edges(0, 2));
        auto result = manual_clusters({{0}, {1, 2}});
        citekit::compute_silhouettes(net, result);
        CHECK(result.clusters[0].silhouette == 0.0);
    }
    SECTION("fewer than two clusters is an error") {
        auto net = builders::make_network(3, builders::clique_edges(0, 2));
        auto result = manual_clusters({{0, 1, 2}});
        CHECK_THROWS_AS(citekit::compute_silhouettes(net, result), citekit::Error);
    }
    SECTION("silhouettes stay within bounds on random networks") {
        std::mt19937 gen(20240031);
        citekit::ClusterOptions opts;
        opts.min_size = 1;
        for (int round = 0; round < 100; ++round) {
            size_t n = 4 + gen() % 7;
            Edges edges;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (gen() % 2) edges.push_back({i, j, 1 + (long)(gen() % 4)});
            auto net = builders::make_network(n, edges);
            auto result = citekit::cluster_network(net, opts);
            if (result.clusters.size() < 2) continue;
            citekit::compute_silhouettes(net, result);
            for (const auto& c : result.clusters) {
                REQUIRE(c.silhouette.has_value());
                CHECK(*c.silhouette >= -1.0);
                CHECK(*c.silhouette <= 1.0);
            }
            // full cross-check against the direct formula
            std::vector<std::vector<size_t>> groups;
            for (const auto& c : result.clusters) groups.push_back(c.members);
            for (size_t ci = 0; ci < groups.size(); ++ci)
                CHECK_THAT(*result.clusters[ci].silhouette,
                           WithinAbs(oracles::silhouette_reference(net, groups, ci), 1e-12));
        }
    }
}

TEST_CASE("cluster mean years") {
    auto net = builders::make_network(3, builders::clique_edges(0, 2));

    SECTION("plain average") {
        auto result = manual_clusters({{0, 1, 2}});
        citekit::compute_mean_years(net, result,
                                    {{"n000", 1953}, {"n001", 1955}, {"n002", 1957}});
        CHECK(result.clusters[0].mean_year == 1955.0);
    }
    SECTION("half years round up for display") {
        auto result = manual_clusters({{0, 1}});
        citekit::compute_mean_years(net, result, {{"n000", 1960}, {"n001", 1961}});
        REQUIRE(result.clusters[0].mean_year == 1960.5);
        CHECK(citekit::display_year(*result.clusters[0].mean_year) == 1961);
    }
    SECTION("single member") {
        auto result = manual_clusters({{0}});
        citekit::compute_mean_years(net, result, {{"n000", 2006}});
        CHECK(result.clusters[0].mean_year == 2006.0);
        CHECK(citekit::display_year(2006.0) == 2006);
    }
    SECTION("unknown years are skipped") {
        auto result = manual_clusters({{0, 1, 2}});
        citekit::compute_mean_years(net, result, {{"n000", 2000}, {"n002", 2002}});
        CHECK(result.clusters[0].mean_year == 2001.0);

        auto none = manual_clusters({{0, 1, 2}});
        citekit::compute_mean_years(net, none, {});
        CHECK_FALSE(none.clusters[0].mean_year.has_value());
    }
    SECTION("display rounding") {
        CHECK(citekit::display_year(1960.49) == 1960);
        CHECK(citekit::display_year(1960.5) == 1961);
        CHECK(citekit::display_year(1961.0) == 1961);
    }
}
