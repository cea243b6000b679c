#pragma once

// Temporal analyses over consolidated references and keywords: citation
// half-life, alluvial keyword threads, and the timeline dataset consumed by
// external renderers.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "citekit/burst.hpp"
#include "citekit/clustering.hpp"
#include "citekit/linkage.hpp"
#include "citekit/network.hpp"
#include "citekit/record.hpp"

namespace citekit {

// Smallest h with at least half of the observed citations falling in years
// up to publication year + h. Counts citations inside the loaded corpus only.
inline int half_life(const CanonicalRef& ref) {
    if (!ref.year) throw Error("half-life: publication year unknown for " + ref.id);
    if (ref.yearly_citations.empty())
        throw Error("half-life: no dated citations for " + ref.id);
    long total = 0;
    for (const auto& [y, c] : ref.yearly_citations) total += c;
    double half = static_cast<double>(total) / 2.0;
    long cum = 0;
    for (const auto& [y, c] : ref.yearly_citations) {
        cum += c;
        if (static_cast<double>(cum) >= half) return std::max(0, y - *ref.year);
    }
    return std::max(0, ref.yearly_citations.rbegin()->first - *ref.year);
}

struct KeywordThread {
    std::string keyword;
    int first_year = 0;
    int last_year = 0;
    std::set<int> selected_years;
    std::map<int, long> frequency;  // per year within [first_year, last_year]
};

// Per year, select that year's keywords by the scaled g-index over their
// frequencies; a keyword's thread spans its first to last selected year.
inline std::vector<KeywordThread> alluvial_threads(const std::vector<Record>& records,
                                                   long k) {
    std::map<int, std::map<std::string, long>> per_year;
    for (const auto& r : records) {
        if (!r.year) continue;
        for (const auto& kw : r.author_keywords) {
            std::string t = text::fold(text::trim(kw));
            if (!t.empty()) ++per_year[*r.year][t];
        }
    }
    std::map<std::string, KeywordThread> threads;
    for (const auto& [year, freqs] : per_year) {
        std::vector<std::pair<std::string, long>> counts(freqs.begin(), freqs.end());
        for (const auto& kw : g_index_select(std::move(counts), k)) {
            auto [it, inserted] = threads.emplace(kw, KeywordThread{});
            if (inserted) {
                it->second.keyword = kw;
                it->second.first_year = year;
            }
            it->second.last_year = year;
            it->second.selected_years.insert(year);
        }
    }
    std::vector<KeywordThread> out;
    out.reserve(threads.size());
    for (auto& [kw, thread] : threads) {
        for (int y = thread.first_year; y <= thread.last_year; ++y) {
            auto yit = per_year.find(y);
            if (yit == per_year.end()) continue;
            auto fit = yit->second.find(kw);
            if (fit != yit->second.end()) thread.frequency[y] = fit->second;
        }
        out.push_back(std::move(thread));
    }
    return out;
}

inline void write_alluvial_csv(std::ostream& os, const std::vector<KeywordThread>& threads) {
    text::write_csv_row(os, {"keyword", "year", "frequency", "selected"});
    for (const auto& t : threads) {
        for (int y = t.first_year; y <= t.last_year; ++y) {
            auto fit = t.frequency.find(y);
            long freq = fit != t.frequency.end() ? fit->second : 0;
            text::write_csv_row(os, {t.keyword, std::to_string(y), std::to_string(freq),
                                     t.selected_years.count(y) ? "1" : "0"});
        }
    }
}

inline std::string canonical_label(const CanonicalRef& c) {
    std::string label;
    auto add = [&label](const std::string& part) {
        if (part.empty()) return;
        if (!label.empty()) label += ", ";
        label += part;
    };
    std::string name = c.surname.value_or("");
    if (c.initials && !name.empty()) name += " " + *c.initials;
    add(name);
    if (c.year) add(std::to_string(*c.year));
    add(c.source_name.value_or(""));
    if (c.volume) add("V" + *c.volume);
    if (c.first_page) add("P" + *c.first_page);
    return label;
}

// Timeline dataset: one row per cluster in id order; member entries carry
// publication year, citations and burst intervals; edges carry first co-
// citation years for color-coding.
inline nlohmann::ordered_json timeline_json(
    const CoCitationNetwork& net, const ClusterResult& clusters,
    const std::map<std::string, const CanonicalRef*>& canon_of,
    const std::map<std::string, std::vector<BurstInterval>>& bursts_of) {
    nlohmann::ordered_json j;
    j["schema"] = "timeline/1";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& cluster : clusters.clusters) {
        nlohmann::ordered_json row;
        row["cluster"] = cluster.id;
        row["path"] = cluster.path;
        if (!cluster.llr_labels.empty()) row["label"] = cluster.llr_labels.front().first;
        if (cluster.silhouette) row["silhouette"] = *cluster.silhouette;
        if (cluster.mean_year) row["mean_year"] = display_year(*cluster.mean_year);
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (size_t m : cluster.members) {
            const std::string& id = net.node_ids[m];
            nlohmann::ordered_json entry;
            entry["id"] = id;
            auto cit = canon_of.find(id);
            if (cit != canon_of.end()) {
                const CanonicalRef& c = *cit->second;
                entry["label"] = canonical_label(c);
                if (c.year) entry["year"] = *c.year;
                entry["citations"] = c.total_citations();
            }
            auto bit = bursts_of.find(id);
            if (bit != bursts_of.end() && !bit->second.empty()) {
                nlohmann::ordered_json bursts = nlohmann::ordered_json::array();
                for (const auto& b : bit->second) {
                    nlohmann::ordered_json bj;
                    bj["begin"] = b.begin;
                    bj["end"] = b.end;
                    bj["strength"] = b.strength;
                    bursts.push_back(std::move(bj));
                }
                entry["bursts"] = bursts;
            }
            members.push_back(std::move(entry));
        }
        row["members"] = members;
        rows.push_back(std::move(row));
    }
    j["clusters"] = rows;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [key, e] : net.edges) {
        nlohmann::ordered_json ej;
        ej["source"] = net.node_ids[key.first];
        ej["target"] = net.node_ids[key.second];
        ej["weight"] = e.weight;
        if (e.first_year) ej["first_year"] = *e.first_year;
        edges.push_back(std::move(ej));
    }
    j["edges"] = edges;
    j["note"] = "citation counts reflect the loaded corpus only";
    return j;
}

}  // namespace citekit
