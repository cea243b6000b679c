#pragma once

// Independent reference implementations the tests compare the library
// against. Everything here is written from the definitions, favoring the
// most direct formulation over speed; nothing includes library headers
// except for the shared data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "citekit/burst.hpp"
#include "citekit/network.hpp"

namespace oracles {

// ---- Jaro / Jaro-Winkler ---------------------------------------------------

// Textbook two-phase evaluation: record the matched character sequences of
// both strings, then count order mismatches between them.
inline double jaro_reference(const std::string& s1, const std::string& s2) {
    if (s1.empty() && s2.empty()) return 1.0;
    if (s1.empty() || s2.empty()) return 0.0;
    long window = static_cast<long>(std::max(s1.size(), s2.size())) / 2 - 1;
    if (window < 0) window = 0;

    std::vector<char> used(s2.size(), 0);
    std::vector<char> matched1, matched2_slots(s2.size(), 0);
    for (size_t i = 0; i < s1.size(); ++i) {
        long lo = std::max<long>(0, static_cast<long>(i) - window);
        long hi = std::min<long>(static_cast<long>(s2.size()) - 1,
                                 static_cast<long>(i) + window);
        for (long j = lo; j <= hi; ++j) {
            if (!used[j] && s1[i] == s2[j]) {
                used[j] = 1;
                matched1.push_back(s1[i]);
                matched2_slots[j] = 1;
                break;
            }
        }
    }
    if (matched1.empty()) return 0.0;
    std::vector<char> matched2;
    for (size_t j = 0; j < s2.size(); ++j)
        if (matched2_slots[j]) matched2.push_back(s2[j]);

    size_t mismatched = 0;
    for (size_t k = 0; k < matched1.size(); ++k)
        if (matched1[k] != matched2[k]) ++mismatched;
    double m = static_cast<double>(matched1.size());
    double t = static_cast<double>(mismatched) / 2.0;
    double l1 = static_cast<double>(s1.size());
    double l2 = static_cast<double>(s2.size());
    return (m / l1 + m / l2 + (m - t) / m) / 3.0;
}

inline double jaro_winkler_reference(const std::string& s1, const std::string& s2) {
    double d = jaro_reference(s1, s2);
    size_t l = 0;
    while (l < 4 && l < s1.size() && l < s2.size() && s1[l] == s2[l]) ++l;
    return d + static_cast<double>(l) * 0.1 * (1.0 - d);
}

// ---- g-index ---------------------------------------------------------------

// Largest g with g^2 <= k * (sum of top-g counts), zero counts dropped,
// searched from the top down.
inline long g_index_reference(std::vector<long> counts, long k) {
    counts.erase(std::remove_if(counts.begin(), counts.end(),
                                [](long c) { return c <= 0; }),
                 counts.end());
    std::sort(counts.rbegin(), counts.rend());
    for (long g = static_cast<long>(counts.size()); g >= 1; --g) {
        long sum = 0;
        for (long i = 0; i < g; ++i) sum += counts[i];
        if (g * g <= k * sum) return g;
    }
    return 0;
}

// Selected ids under the same rule: everything whose count reaches the g-th
// largest count.
inline std::vector<std::string> g_index_select_reference(
    const std::vector<std::pair<std::string, long>>& items, long k) {
    std::vector<long> counts;
    for (const auto& [id, c] : items) counts.push_back(c);
    long g = g_index_reference(counts, k);
    if (g == 0) return {};
    std::vector<long> positive;
    for (long c : counts)
        if (c > 0) positive.push_back(c);
    std::sort(positive.rbegin(), positive.rend());
    long cutoff = positive[g - 1];
    std::vector<std::string> out;
    for (const auto& [id, c] : items)
        if (c >= cutoff) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- half-life -------------------------------------------------------------

// First year whose running citation total reaches half of the final total,
// using exact integer arithmetic.
inline int half_life_reference(int pub_year, const std::map<int, long>& yearly) {
    long total = 0;
    for (const auto& [y, c] : yearly) total += c;
    long cum = 0;
    int year = yearly.rbegin()->first;
    for (const auto& [y, c] : yearly) {
        cum += c;
        if (2 * cum >= total) {
            year = y;
            break;
        }
    }
    return std::max(0, year - pub_year);
}

// ---- bursts ----------------------------------------------------------------

// Exhaustive minimum over all 2^n state sequences, ties resolved toward the
// sequence with base states earliest. Cost terms and accumulation order are
// the same as the automaton's definition so exact comparison is meaningful.
inline std::vector<citekit::BurstInterval> bursts_exhaustive(
    const std::map<int, long>& series, const std::map<int, long>& baseline,
    const citekit::BurstOptions& opts = {}) {
    if (series.empty() || baseline.empty()) return {};
    int y0 = baseline.begin()->first;
    int y1 = baseline.rbegin()->first;
    size_t n = static_cast<size_t>(y1 - y0 + 1);
    std::vector<long> r(n, 0), d(n, 0);
    long r_total = 0, d_total = 0;
    for (const auto& [y, c] : baseline) {
        d[y - y0] = c;
        d_total += c;
    }
    for (const auto& [y, c] : series) {
        r[y - y0] = c;
        r_total += c;
    }
    if (r_total == 0 || d_total == 0) return {};
    double p0 = static_cast<double>(r_total) / static_cast<double>(d_total);
    double p1 = std::min(opts.s * p0, 1.0 - 1e-9);
    if (p1 <= p0 || p0 >= 1.0) return {};
    double up_cost = opts.gamma * std::log(static_cast<double>(n));

    auto emission = [](long rr, long dd, double p) {
        if (dd == 0) return 0.0;
        double rd = static_cast<double>(rr), ddd = static_cast<double>(dd);
        return -(rd * std::log(p) + (ddd - rd) * std::log(1.0 - p));
    };

    std::vector<int> best_states;
    double best_cost = 0.0;
    bool have_best = false;
    std::vector<int> states(n, 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        for (size_t t = 0; t < n; ++t)
            states[t] = (mask >> (n - 1 - t)) & 1;  // year 0 most significant
        double cost = 0.0;
        for (size_t t = n; t-- > 0;) {
            double trans = 0.0;
            if (t + 1 < n && states[t] == 0 && states[t + 1] == 1) trans = up_cost;
            cost = emission(r[t], d[t], states[t] == 0 ? p0 : p1) + (trans + cost);
        }
        if (states[0] == 1) cost = up_cost + cost;
        if (!have_best || cost < best_cost) {
            have_best = true;
            best_cost = cost;
            best_states = states;
        }
    }

    std::vector<citekit::BurstInterval> bursts;
    size_t t = 0;
    while (t < n) {
        if (best_states[t] == 0) {
            ++t;
            continue;
        }
        size_t begin = t;
        double strength = 0.0;
        while (t < n && best_states[t] == 1) {
            strength += emission(r[t], d[t], p0) - emission(r[t], d[t], p1);
            ++t;
        }
        citekit::BurstInterval b;
        b.strength = strength;
        b.begin = y0 + static_cast<int>(begin);
        b.end = y0 + static_cast<int>(t - 1);
        if (b.duration() >= opts.min_duration) bursts.push_back(std::move(b));
    }
    return bursts;
}

// ---- modularity ------------------------------------------------------------

// Dense same-cluster double sum: Q = (1/2m) sum_ij (A_ij - k_i k_j / 2m).
inline double modularity_reference(const citekit::CoCitationNetwork& net,
                                   const std::vector<int>& partition) {
    size_t n = net.node_ids.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& [key, e] : net.edges) {
        a[key.first][key.second] += static_cast<double>(e.weight);
        a[key.second][key.first] += static_cast<double>(e.weight);
    }
    std::vector<double> degree(n, 0.0);
    double two_m = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            degree[i] += a[i][j];
            two_m += a[i][j];
        }
    if (two_m <= 0.0) return 0.0;
    double q = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (partition[i] == partition[j])
                q += a[i][j] - degree[i] * degree[j] / two_m;
    return q / two_m;
}

// All set partitions of {0..n-1} as restricted-growth label vectors.
template <typename Fn>
inline void for_each_partition_rec(std::vector<int>& labels, size_t pos, int max_used,
                                   Fn& fn) {
    if (pos == labels.size()) {
        fn(labels);
        return;
    }
    for (int lab = 0; lab <= max_used + 1; ++lab) {
        labels[pos] = lab;
        for_each_partition_rec(labels, pos + 1, std::max(max_used, lab), fn);
    }
}

template <typename Fn>
inline void all_partitions(size_t n, Fn fn) {
    if (n == 0) return;
    std::vector<int> labels(n, 0);
    for_each_partition_rec(labels, 1, 0, fn);
}

inline double optimal_modularity(const citekit::CoCitationNetwork& net) {
    double best = -1.0;
    all_partitions(net.node_ids.size(), [&](const std::vector<int>& partition) {
        best = std::max(best, citekit::modularity(net, partition));
    });
    return best;
}

// ---- silhouette ------------------------------------------------------------

// Distance via explicit dense profile vectors with the pair's own
// coordinates dropped.
inline double profile_distance_reference(const citekit::CoCitationNetwork& net,
                                         size_t i, size_t j) {
    size_t n = net.node_ids.size();
    std::vector<double> vi(n, 0.0), vj(n, 0.0);
    for (const auto& [key, e] : net.edges) {
        double w = static_cast<double>(e.weight);
        if (key.first == i) vi[key.second] += w;
        if (key.second == i) vi[key.first] += w;
        if (key.first == j) vj[key.second] += w;
        if (key.second == j) vj[key.first] += w;
    }
    double dot = 0.0, ni = 0.0, nj = 0.0;
    for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        dot += vi[k] * vj[k];
        ni += vi[k] * vi[k];
        nj += vj[k] * vj[k];
    }
    if (ni <= 0.0 || nj <= 0.0) return 1.0;
    double cosine = dot / (std::sqrt(ni) * std::sqrt(nj));
    return 1.0 - std::min(1.0, std::max(0.0, cosine));
}

// Mean silhouette of one cluster given the full membership list.
inline double silhouette_reference(const citekit::CoCitationNetwork& net,
                                   const std::vector<std::vector<size_t>>& clusters,
                                   size_t which) {
    const auto& own = clusters[which];
    double total = 0.0;
    for (size_t i : own) {
        if (own.size() < 2) continue;  // contributes 0
        double a = 0.0;
        for (size_t j : own)
            if (j != i) a += profile_distance_reference(net, i, j);
        a /= static_cast<double>(own.size() - 1);
        double b = std::numeric_limits<double>::infinity();
        for (size_t c = 0; c < clusters.size(); ++c) {
            if (c == which) continue;
            double sum = 0.0;
            for (size_t j : clusters[c]) sum += profile_distance_reference(net, i, j);
            b = std::min(b, sum / static_cast<double>(clusters[c].size()));
        }
        double m = std::max(a, b);
        if (m > 0.0) total += (b - a) / m;
    }
    return total / static_cast<double>(own.size());
}

// ---- random input helpers --------------------------------------------------

inline std::mt19937& rng(uint32_t seed = 0) {
    static std::mt19937 gen(12345);
    if (seed != 0) gen.seed(seed);
    return gen;
}

inline std::string random_word(std::mt19937& gen, size_t min_len, size_t max_len,
                               int alphabet = 26) {
    std::uniform_int_distribution<size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> ch(0, alphabet - 1);
    std::string s(len(gen), 'a');
    for (auto& c : s) c = static_cast<char>('a' + ch(gen));
    return s;
}

inline std::vector<long> random_counts(std::mt19937& gen, size_t max_n, long max_c) {
    std::uniform_int_distribution<size_t> len(0, max_n);
    std::uniform_int_distribution<long> val(0, max_c);
    std::vector<long> out(len(gen));
    for (auto& c : out) c = val(gen);
    return out;
}

}  // namespace oracles
