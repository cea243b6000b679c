#pragma once

// Corpus-level reports: citation rankings, document-type and category
// tallies, per-bin cross-source comparisons, and dual-map overlay arcs over
// an external journal base map.

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "citekit/linkage.hpp"
#include "citekit/record.hpp"
#include "citekit/similarity.hpp"
#include "citekit/text.hpp"

namespace citekit {

// Ranked by the larger of the per-source citation counts, descending; ties
// by year ascending, then title.
inline std::vector<const Record*> rank_most_cited(const std::vector<Record>& records,
                                                  size_t n) {
    std::vector<const Record*> ranked;
    ranked.reserve(records.size());
    for (const auto& r : records) ranked.push_back(&r);
    std::sort(ranked.begin(), ranked.end(), [](const Record* a, const Record* b) {
        long ca = a->max_times_cited(), cb = b->max_times_cited();
        if (ca != cb) return ca > cb;
        int ya = a->year.value_or(9999), yb = b->year.value_or(9999);
        if (ya != yb) return ya < yb;
        if (a->title != b->title) return a->title < b->title;
        return a->id < b->id;
    });
    if (ranked.size() > n) ranked.resize(n);
    return ranked;
}

inline std::vector<const CanonicalRef*> rank_cited_refs(
    const std::vector<CanonicalRef>& canon, size_t n) {
    std::vector<const CanonicalRef*> ranked;
    ranked.reserve(canon.size());
    for (const auto& c : canon) ranked.push_back(&c);
    std::sort(ranked.begin(), ranked.end(), [](const CanonicalRef* a, const CanonicalRef* b) {
        if (a->citing_ids.size() != b->citing_ids.size())
            return a->citing_ids.size() > b->citing_ids.size();
        return a->id < b->id;
    });
    if (ranked.size() > n) ranked.resize(n);
    return ranked;
}

enum class TallyDimension { DOC_TYPE, SUBJECT_CATEGORY };

inline std::vector<std::pair<std::string, long>> tally(const std::vector<Record>& records,
                                                       TallyDimension dim) {
    std::map<std::string, long> counts;
    for (const auto& r : records) {
        if (dim == TallyDimension::DOC_TYPE) {
            std::string v = text::trim(r.doc_type);
            ++counts[v.empty() ? "(unknown)" : v];
        } else {
            for (const auto& c : r.subject_categories) {
                std::string v = text::trim(c);
                if (!v.empty()) ++counts[v];
            }
        }
    }
    std::vector<std::pair<std::string, long>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

struct SourceBin {
    long lower = 0;                  // inclusive
    std::optional<long> upper;       // exclusive; absent for the last bin
    long count = 0;
    double mean_wos = 0.0;
    double mean_scopus = 0.0;
};

// Overlap records (both per-source counts known) are binned by their WoS
// count into [e_i, e_{i+1}) intervals, the last bin open-ended.
inline std::vector<SourceBin> bin_source_comparison(const std::vector<Record>& records,
                                                    std::vector<long> edges) {
    if (edges.empty()) throw Error("bins: at least one edge required");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<SourceBin> bins;
    for (size_t i = 0; i < edges.size(); ++i) {
        SourceBin b;
        b.lower = edges[i];
        if (i + 1 < edges.size()) b.upper = edges[i + 1];
        bins.push_back(b);
    }
    std::vector<std::pair<double, double>> sums(bins.size(), {0.0, 0.0});
    for (const auto& r : records) {
        if (!r.times_cited_wos || !r.times_cited_scopus) continue;
        long w = *r.times_cited_wos;
        for (size_t i = 0; i < bins.size(); ++i) {
            if (w < bins[i].lower) continue;
            if (bins[i].upper && w >= *bins[i].upper) continue;
            ++bins[i].count;
            sums[i].first += static_cast<double>(w);
            sums[i].second += static_cast<double>(*r.times_cited_scopus);
            break;
        }
    }
    for (size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].count == 0) continue;
        bins[i].mean_wos = sums[i].first / static_cast<double>(bins[i].count);
        bins[i].mean_scopus = sums[i].second / static_cast<double>(bins[i].count);
    }
    return bins;
}

struct BaseMap {
    struct Entry {
        std::string journal;
        std::string region;
        std::optional<double> x, y;
    };
    std::vector<Entry> entries;
    std::map<std::string, size_t> by_folded_name;
};

// CSV with header journal,region,x,y (coordinates optional).
inline BaseMap load_base_map(std::istream& is) {
    BaseMap map;
    auto rows = text::parse_csv(text::strip_bom(text::read_stream(is)));
    if (rows.empty()) throw Error("base map: empty file");
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() == 1 && text::trim_view(row[0]).empty()) continue;
        if (row.size() < 2)
            throw Error("base map row " + std::to_string(i + 1) +
                        ": expected journal,region[,x,y]");
        BaseMap::Entry e;
        e.journal = text::trim(row[0]);
        e.region = text::trim(row[1]);
        if (e.journal.empty() || e.region.empty())
            throw Error("base map row " + std::to_string(i + 1) +
                        ": journal and region must be non-empty");
        try {
            if (row.size() > 2 && !text::trim_view(row[2]).empty())
                e.x = std::stod(text::trim(row[2]));
            if (row.size() > 3 && !text::trim_view(row[3]).empty())
                e.y = std::stod(text::trim(row[3]));
        } catch (...) {
            throw Error("base map row " + std::to_string(i + 1) + ": bad coordinate");
        }
        map.by_folded_name.emplace(text::fold(e.journal), map.entries.size());
        map.entries.push_back(std::move(e));
    }
    return map;
}

struct DualMapArc {
    std::string source_region;
    std::string target_region;
    long count = 0;
    double z = 0.0;
};

struct DualMapResult {
    std::vector<DualMapArc> arcs;
    long resolved = 0;
    long unresolved = 0;
};

namespace detail {

struct VenueResolver {
    const BaseMap& map;
    double jw_threshold;
    std::map<std::string, std::optional<std::string>> cache;

    std::optional<std::string> region(const std::string& venue) {
        std::string folded = text::fold(text::trim(venue));
        if (folded.empty()) return std::nullopt;
        auto hit = cache.find(folded);
        if (hit != cache.end()) return hit->second;
        std::optional<std::string> result;
        auto exact = map.by_folded_name.find(folded);
        if (exact != map.by_folded_name.end()) {
            result = map.entries[exact->second].region;
        } else {
            double best_sim = 0.0;
            std::string best_journal;
            for (const auto& e : map.entries) {
                double sim = jaro_winkler(folded, text::fold(e.journal));
                if (sim < jw_threshold) continue;
                if (sim > best_sim || (sim == best_sim && e.journal < best_journal)) {
                    best_sim = sim;
                    best_journal = e.journal;
                    result = e.region;
                }
            }
        }
        cache[folded] = result;
        return result;
    }
};

}  // namespace detail

// Arcs from the citing record's venue region to each cited reference's
// source region. References whose endpoint does not resolve in the base map
// are tallied as unresolved. Records without a venue are skipped entirely.
inline DualMapResult dualmap_arcs(const std::vector<Record>& records, const BaseMap& map,
                                  double jw_threshold = 0.95, bool bundle = false,
                                  double bundle_threshold = 0.0) {
    detail::VenueResolver resolver{map, jw_threshold, {}};
    std::map<std::pair<std::string, std::string>, long> counts;
    DualMapResult result;
    for (const auto& r : records) {
        if (text::trim_view(r.venue).empty()) continue;
        auto src = resolver.region(r.venue);
        for (const auto& cr : r.cited_refs) {
            std::optional<std::string> dst;
            if (src && cr.source_name) dst = resolver.region(*cr.source_name);
            if (src && dst) {
                ++counts[{*src, *dst}];
                ++result.resolved;
            } else {
                ++result.unresolved;
            }
        }
    }
    if (counts.empty()) return result;
    double mean = 0.0;
    for (const auto& [key, c] : counts) mean += static_cast<double>(c);
    mean /= static_cast<double>(counts.size());
    double var = 0.0;
    for (const auto& [key, c] : counts) {
        double d = static_cast<double>(c) - mean;
        var += d * d;
    }
    var /= static_cast<double>(counts.size());
    double sd = std::sqrt(var);
    for (const auto& [key, c] : counts) {
        DualMapArc arc;
        arc.source_region = key.first;
        arc.target_region = key.second;
        arc.count = c;
        arc.z = sd > 0.0 ? (static_cast<double>(c) - mean) / sd : 0.0;
        if (bundle && arc.z < bundle_threshold) continue;
        result.arcs.push_back(std::move(arc));
    }
    return result;
}

inline void write_dualmap_csv(std::ostream& os, const DualMapResult& result) {
    text::write_csv_row(os, {"source_region", "target_region", "count", "z"});
    for (const auto& a : result.arcs)
        text::write_csv_row(os, {a.source_region, a.target_region, std::to_string(a.count),
                                 text::format_double(a.z, 4)});
}

}  // namespace citekit
