#pragma once

// Co-citation network construction: per-slice node selection via the scaled
// g-index, pair counting over citing records, connected components, and
// weighted Newman modularity. Exports GraphML and an edge-list CSV.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "citekit/linkage.hpp"
#include "citekit/parallel.hpp"
#include "citekit/record.hpp"
#include "citekit/text.hpp"

namespace citekit {

// Largest g with g² ≤ k · (sum of the top-g counts); refs tied with the g-th
// count are included, zero-count refs are never candidates.
inline std::vector<std::string> g_index_select(
    std::vector<std::pair<std::string, long>> counts, long k) {
    if (k < 1) throw Error("g-index: scaling factor must be >= 1");
    counts.erase(std::remove_if(counts.begin(), counts.end(),
                                [](const auto& c) { return c.second <= 0; }),
                 counts.end());
    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    long sum = 0;
    size_t g = 0;
    for (size_t i = 0; i < counts.size(); ++i) {
        sum += counts[i].second;
        long gi = static_cast<long>(i) + 1;
        if (gi * gi <= k * sum) g = i + 1;
    }
    if (g == 0) return {};
    long cutoff = counts[g - 1].second;
    size_t end = g;
    while (end < counts.size() && counts[end].second == cutoff) ++end;
    std::vector<std::string> selected;
    selected.reserve(end);
    for (size_t i = 0; i < end; ++i) selected.push_back(counts[i].first);
    std::sort(selected.begin(), selected.end());
    return selected;
}

struct CoCitationNetwork {
    std::vector<std::string> node_ids;  // sorted canonical ids
    std::map<std::string, size_t> index_of;
    struct EdgeData {
        long weight = 0;
        std::optional<int> first_year;
    };
    std::map<std::pair<size_t, size_t>, EdgeData> edges;  // key a < b
    std::vector<std::pair<int, int>> slices;
    long selection_k = 0;

    double total_weight() const {
        double w = 0;
        for (const auto& [key, e] : edges) w += static_cast<double>(e.weight);
        return w;
    }
    std::vector<double> strengths() const {
        std::vector<double> s(node_ids.size(), 0.0);
        for (const auto& [key, e] : edges) {
            s[key.first] += static_cast<double>(e.weight);
            s[key.second] += static_cast<double>(e.weight);
        }
        return s;
    }
    std::vector<std::vector<std::pair<size_t, double>>> adjacency() const {
        std::vector<std::vector<std::pair<size_t, double>>> adj(node_ids.size());
        for (const auto& [key, e] : edges) {
            adj[key.first].emplace_back(key.second, static_cast<double>(e.weight));
            adj[key.second].emplace_back(key.first, static_cast<double>(e.weight));
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        return adj;
    }
};

struct NetworkOptions {
    long k = 30;           // g-index scaling factor
    int slice_length = 1;  // years per slice
    unsigned threads = 0;
};

inline std::vector<std::pair<int, int>> make_slices(int year_min, int year_max,
                                                    int slice_length) {
    if (slice_length < 1) throw Error("network: slice length must be >= 1");
    std::vector<std::pair<int, int>> slices;
    for (int y = year_min; y <= year_max; y += slice_length)
        slices.emplace_back(y, std::min(year_max, y + slice_length - 1));
    return slices;
}

// Counts every unordered pair of selected references cited together by one
// record; first_year is the earliest citing year that produced the pair.
inline CoCitationNetwork build_cocitation(const std::vector<Record>& records,
                                          const std::set<std::string>& selected,
                                          unsigned threads = 0) {
    CoCitationNetwork net;
    net.node_ids.assign(selected.begin(), selected.end());
    for (size_t i = 0; i < net.node_ids.size(); ++i) net.index_of[net.node_ids[i]] = i;

    using EdgeMap = std::map<std::pair<size_t, size_t>, CoCitationNetwork::EdgeData>;
    std::vector<EdgeMap> partials;
    std::mutex mu;
    parallel_for(records.size(), threads, [&](size_t begin, size_t end) {
        EdgeMap local;
        for (size_t ri = begin; ri < end; ++ri) {
            const Record& rec = records[ri];
            std::set<size_t> cited;
            for (const auto& cr : rec.cited_refs) {
                if (!cr.canon) continue;
                auto it = net.index_of.find(*cr.canon);
                if (it != net.index_of.end()) cited.insert(it->second);
            }
            if (cited.size() < 2) continue;
            std::vector<size_t> ids(cited.begin(), cited.end());
            for (size_t i = 0; i < ids.size(); ++i) {
                for (size_t j = i + 1; j < ids.size(); ++j) {
                    auto& e = local[{ids[i], ids[j]}];
                    ++e.weight;
                    if (rec.year && (!e.first_year || *rec.year < *e.first_year))
                        e.first_year = rec.year;
                }
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        partials.push_back(std::move(local));
    });
    for (const auto& partial : partials) {
        for (const auto& [key, e] : partial) {
            auto& dst = net.edges[key];
            dst.weight += e.weight;
            if (e.first_year && (!dst.first_year || *e.first_year < *dst.first_year))
                dst.first_year = e.first_year;
        }
    }
    return net;
}

// Selects nodes per time slice by the scaled g-index over per-slice citation
// counts and builds the union network over all slices.
inline CoCitationNetwork build_network(const std::vector<Record>& records,
                                       const std::vector<CanonicalRef>& canon,
                                       const NetworkOptions& opts = {}) {
    std::optional<int> ymin, ymax;
    for (const auto& c : canon) {
        if (c.yearly_citations.empty()) continue;
        int lo = c.yearly_citations.begin()->first;
        int hi = c.yearly_citations.rbegin()->first;
        if (!ymin || lo < *ymin) ymin = lo;
        if (!ymax || hi > *ymax) ymax = hi;
    }
    std::vector<std::pair<int, int>> slices;
    std::set<std::string> selected;
    if (ymin) {
        slices = make_slices(*ymin, *ymax, opts.slice_length);
        for (const auto& [lo, hi] : slices) {
            std::vector<std::pair<std::string, long>> counts;
            for (const auto& c : canon) {
                long n = 0;
                for (auto it = c.yearly_citations.lower_bound(lo);
                     it != c.yearly_citations.end() && it->first <= hi; ++it)
                    n += it->second;
                if (n > 0) counts.emplace_back(c.id, n);
            }
            for (auto& id : g_index_select(std::move(counts), opts.k)) selected.insert(id);
        }
    } else {
        // no citing years anywhere: select once over total citation counts
        std::vector<std::pair<std::string, long>> counts;
        for (const auto& c : canon)
            counts.emplace_back(c.id, static_cast<long>(c.citing_ids.size()));
        for (auto& id : g_index_select(std::move(counts), opts.k)) selected.insert(id);
    }
    CoCitationNetwork net = build_cocitation(records, selected, opts.threads);
    net.slices = std::move(slices);
    net.selection_k = opts.k;
    return net;
}

// Components sorted by size descending, then by smallest member index.
inline std::vector<std::vector<size_t>> connected_components(const CoCitationNetwork& net) {
    size_t n = net.node_ids.size();
    detail::UnionFind uf(n);
    for (const auto& [key, e] : net.edges) uf.unite(key.first, key.second);
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<size_t>> components;
    components.reserve(groups.size());
    for (auto& [root, members] : groups) components.push_back(std::move(members));
    std::sort(components.begin(), components.end(),
              [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return components;
}

inline double largest_component_share(const CoCitationNetwork& net) {
    if (net.node_ids.empty()) return 0.0;
    auto components = connected_components(net);
    return static_cast<double>(components.front().size()) /
           static_cast<double>(net.node_ids.size());
}

// Weighted Newman modularity. partition[i] is node i's cluster; every node
// must be assigned (value >= 0).
inline double modularity(const CoCitationNetwork& net, const std::vector<int>& partition) {
    if (partition.size() != net.node_ids.size())
        throw Error("modularity: partition size does not match node count");
    int max_cluster = -1;
    for (size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 0)
            throw Error("modularity: partition missing node " + net.node_ids[i]);
        max_cluster = std::max(max_cluster, partition[i]);
    }
    double W = net.total_weight();
    if (W <= 0.0) return 0.0;
    std::vector<double> intra(max_cluster + 1, 0.0), strength(max_cluster + 1, 0.0);
    for (const auto& [key, e] : net.edges) {
        double w = static_cast<double>(e.weight);
        if (partition[key.first] == partition[key.second]) intra[partition[key.first]] += w;
        strength[partition[key.first]] += w;
        strength[partition[key.second]] += w;
    }
    double q = 0.0;
    for (int c = 0; c <= max_cluster; ++c) {
        double s = strength[c] / (2.0 * W);
        q += intra[c] / W - s * s;
    }
    return q;
}

struct NodeAttrs {
    std::string label;
    long citations = 0;
    std::optional<int> first_year;
    bool burst = false;
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace detail

inline void write_graphml(std::ostream& os, const CoCitationNetwork& net,
                          const std::map<std::string, NodeAttrs>& attrs) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
       << "  <key id=\"citations\" for=\"node\" attr.name=\"citations\" attr.type=\"long\"/>\n"
       << "  <key id=\"first_year\" for=\"node\" attr.name=\"first_year\" attr.type=\"int\"/>\n"
       << "  <key id=\"burst\" for=\"node\" attr.name=\"burst\" attr.type=\"boolean\"/>\n"
       << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
       << "  <key id=\"edge_first_year\" for=\"edge\" attr.name=\"first_year\" attr.type=\"int\"/>\n"
       << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const auto& id : net.node_ids) {
        os << "    <node id=\"" << detail::xml_escape(id) << "\">";
        auto it = attrs.find(id);
        if (it != attrs.end()) {
            const NodeAttrs& a = it->second;
            if (!a.label.empty())
                os << "<data key=\"label\">" << detail::xml_escape(a.label) << "</data>";
            os << "<data key=\"citations\">" << a.citations << "</data>";
            if (a.first_year)
                os << "<data key=\"first_year\">" << *a.first_year << "</data>";
            os << "<data key=\"burst\">" << (a.burst ? "true" : "false") << "</data>";
        }
        os << "</node>\n";
    }
    for (const auto& [key, e] : net.edges) {
        os << "    <edge source=\"" << detail::xml_escape(net.node_ids[key.first])
           << "\" target=\"" << detail::xml_escape(net.node_ids[key.second]) << "\">"
           << "<data key=\"weight\">" << e.weight << "</data>";
        if (e.first_year)
            os << "<data key=\"edge_first_year\">" << *e.first_year << "</data>";
        os << "</edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
}

inline void write_edge_list(std::ostream& os, const CoCitationNetwork& net) {
    text::write_csv_row(os, {"source", "target", "weight", "first_year"});
    for (const auto& [key, e] : net.edges)
        text::write_csv_row(os, {net.node_ids[key.first], net.node_ids[key.second],
                                 std::to_string(e.weight),
                                 e.first_year ? std::to_string(*e.first_year) : ""});
}

}  // namespace citekit
