#pragma once

// Greedy modularity clustering of the co-citation network plus per-cluster
// silhouette and mean-year statistics. The agglomeration is deterministic:
// merge the pair with the largest modularity gain, ties broken by smallest
// cluster id pair, stop when no merge gains.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "citekit/network.hpp"
#include "citekit/parallel.hpp"

namespace citekit {

struct Cluster {
    int id = 0;
    std::string path;  // drill-down path, "#0" style
    std::vector<size_t> members;
    std::optional<double> silhouette;
    std::optional<double> mean_year;
    std::vector<std::pair<std::string, double>> llr_labels;
    std::vector<std::vector<std::pair<std::string, double>>> lsi_labels;  // per dimension
};

struct ClusterResult {
    std::vector<Cluster> clusters;  // descending size, id = position
    std::vector<size_t> noise;      // members of sub-minimum clusters
};

struct ClusterOptions {
    size_t min_size = 3;
    unsigned threads = 0;
};

// Agglomerative merging while the modularity gain
// dq = w_ab/W - (S_a * S_b)/(2 W^2) stays positive.
inline ClusterResult cluster_network(const CoCitationNetwork& net,
                                     const ClusterOptions& opts = {}) {
    size_t n = net.node_ids.size();
    if (n == 0) throw Error("cluster: network is empty");
    double W = net.total_weight();

    std::vector<std::map<size_t, double>> nbr(n);  // cluster -> neighbor -> weight
    std::vector<double> strength(n, 0.0);
    for (const auto& [key, e] : net.edges) {
        double w = static_cast<double>(e.weight);
        nbr[key.first][key.second] += w;
        nbr[key.second][key.first] += w;
        strength[key.first] += w;
        strength[key.second] += w;
    }
    std::vector<bool> alive(n, true);
    std::vector<std::vector<size_t>> members(n);
    for (size_t i = 0; i < n; ++i) members[i] = {i};

    auto gain = [&](size_t a, size_t b, double w_ab) {
        return w_ab / W - strength[a] * strength[b] / (2.0 * W * W);
    };
    // Ordered by (-dq, a, b): begin() is the best merge, ties on smallest ids.
    std::set<std::tuple<double, size_t, size_t>> queue;
    if (W > 0.0) {
        for (size_t a = 0; a < n; ++a)
            for (const auto& [b, w] : nbr[a])
                if (a < b) queue.insert({-gain(a, b, w), a, b});

        while (!queue.empty()) {
            auto [neg_dq, a, b] = *queue.begin();
            if (-neg_dq <= 0.0) break;
            // merge b into a (a < b)
            for (const auto& [c, w] : nbr[a])
                queue.erase({-gain(a, c, w), std::min(a, c), std::max(a, c)});
            for (const auto& [c, w] : nbr[b])
                queue.erase({-gain(b, c, w), std::min(b, c), std::max(b, c)});
            nbr[a].erase(b);
            nbr[b].erase(a);
            for (const auto& [c, w] : nbr[b]) {
                nbr[a][c] += w;
                nbr[c].erase(b);
                nbr[c][a] = nbr[a][c];
            }
            nbr[b].clear();
            strength[a] += strength[b];
            strength[b] = 0.0;
            alive[b] = false;
            members[a].insert(members[a].end(), members[b].begin(), members[b].end());
            members[b].clear();
            for (const auto& [c, w] : nbr[a])
                queue.insert({-gain(a, c, w), std::min(a, c), std::max(a, c)});
        }
    }

    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        std::sort(members[i].begin(), members[i].end());
        groups.push_back(std::move(members[i]));
    }
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });

    ClusterResult result;
    for (auto& g : groups) {
        if (g.size() < opts.min_size) {
            result.noise.insert(result.noise.end(), g.begin(), g.end());
            continue;
        }
        Cluster c;
        c.id = static_cast<int>(result.clusters.size());
        c.path = "#" + std::to_string(c.id);
        c.members = std::move(g);
        result.clusters.push_back(std::move(c));
    }
    std::sort(result.noise.begin(), result.noise.end());
    return result;
}

inline std::vector<int> partition_of(const ClusterResult& r, size_t n) {
    std::vector<int> partition(n, -1);
    for (const auto& c : r.clusters)
        for (size_t m : c.members) partition[m] = c.id;
    int next = static_cast<int>(r.clusters.size());
    for (size_t m : r.noise) partition[m] = next++;
    return partition;
}

namespace detail {

// Distance between nodes i and j: 1 - cosine over their co-citation weight
// profiles with the i/j coordinates themselves excluded, so that nodes whose
// shared neighborhoods coincide are at distance 0.
struct ProfileDistance {
    const std::vector<std::vector<std::pair<size_t, double>>>& adj;
    double operator()(size_t i, size_t j) const {
        double dot = 0.0, ni = 0.0, nj = 0.0;
        for (const auto& [k, w] : adj[i])
            if (k != i && k != j) ni += w * w;
        for (const auto& [k, w] : adj[j])
            if (k != i && k != j) nj += w * w;
        if (ni <= 0.0 || nj <= 0.0) return 1.0;
        auto a = adj[i].begin(), ae = adj[i].end();
        auto b = adj[j].begin(), be = adj[j].end();
        while (a != ae && b != be) {
            if (a->first < b->first) {
                ++a;
            } else if (b->first < a->first) {
                ++b;
            } else {
                if (a->first != i && a->first != j) dot += a->second * b->second;
                ++a;
                ++b;
            }
        }
        double cosine = dot / (std::sqrt(ni) * std::sqrt(nj));
        return 1.0 - std::min(1.0, std::max(0.0, cosine));
    }
};

}  // namespace detail

// Fills each cluster's silhouette: the mean over members of (b-a)/max(a,b)
// where a is the mean distance to the member's own cluster and b the smallest
// mean distance to another cluster. Needs at least two clusters.
inline void compute_silhouettes(const CoCitationNetwork& net, ClusterResult& result,
                                unsigned threads = 0) {
    if (result.clusters.size() < 2)
        throw Error("silhouette: undefined for fewer than two clusters");
    auto adj = net.adjacency();
    detail::ProfileDistance dist{adj};

    for (auto& cluster : result.clusters) {
        std::vector<double> scores(cluster.members.size(), 0.0);
        parallel_for(cluster.members.size(), threads, [&](size_t begin, size_t end) {
            for (size_t mi = begin; mi < end; ++mi) {
                size_t i = cluster.members[mi];
                if (cluster.members.size() < 2) {
                    scores[mi] = 0.0;
                    continue;
                }
                double a = 0.0;
                for (size_t j : cluster.members)
                    if (j != i) a += dist(i, j);
                a /= static_cast<double>(cluster.members.size() - 1);
                double b = std::numeric_limits<double>::infinity();
                for (const auto& other : result.clusters) {
                    if (other.id == cluster.id) continue;
                    double d = 0.0;
                    for (size_t j : other.members) d += dist(i, j);
                    b = std::min(b, d / static_cast<double>(other.members.size()));
                }
                double m = std::max(a, b);
                scores[mi] = m > 0.0 ? (b - a) / m : 0.0;
            }
        });
        double sum = 0.0;
        for (double s : scores) sum += s;
        cluster.silhouette = sum / static_cast<double>(cluster.members.size());
    }
}

// Mean publication year over members with known years; absent when none.
inline void compute_mean_years(const CoCitationNetwork& net, ClusterResult& result,
                               const std::map<std::string, int>& year_of) {
    for (auto& cluster : result.clusters) {
        double sum = 0.0;
        size_t n = 0;
        for (size_t m : cluster.members) {
            auto it = year_of.find(net.node_ids[m]);
            if (it == year_of.end()) continue;
            sum += it->second;
            ++n;
        }
        if (n > 0) cluster.mean_year = sum / static_cast<double>(n);
    }
}

inline int display_year(double mean_year) {
    return static_cast<int>(std::floor(mean_year + 0.5));  // round half up
}

}  // namespace citekit
