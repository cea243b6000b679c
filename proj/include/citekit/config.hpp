#pragma once

// Flat key=value configuration. Every analysis threshold is overridable;
// unknown keys are an error so typos do not silently fall back to defaults.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "citekit/text.hpp"

namespace citekit {

struct Config {
    // linkage
    double similarity_threshold = 0.80;
    // network
    long g_index_k = 30;
    int slice_length = 1;
    // clustering and labeling
    long min_cluster_size = 3;
    long llr_top_n = 10;
    long lsi_max_rank = 5;
    long lsi_terms_per_dim = 5;
    long lsi_vocab_cap = 300;
    // bursts
    double burst_s = 2.0;
    double burst_gamma = 1.0;
    long burst_min_duration = 1;
    // trees
    long wordtree_min_freq = 3;
    long category_min_freq = 3;
    long keyword_min_freq = 1;
    bool wordtree_zscore = true;
    // alluvial
    long alluvial_k = 30;
    // dual map
    double dualmap_match_threshold = 0.95;
    bool dualmap_bundle = false;
    double dualmap_bundle_threshold = 0.0;
    // reports
    std::string bin_edges = "5,10,20,30";
    long report_top_n = 10;
    // drill-down
    long drill_min_records = 10;
    long drill_max_depth = 3;
    // runtime
    long threads = 0;
    long seed = 0;

    std::vector<long> bin_edge_list() const {
        std::vector<long> edges;
        for (const auto& part : text::split(bin_edges, ",")) {
            std::string t = text::trim(part);
            if (t.empty()) continue;
            try {
                edges.push_back(std::stol(t));
            } catch (...) {
                throw Error("config: bad bin edge \"" + t + "\"");
            }
        }
        if (edges.empty()) throw Error("config: bin_edges is empty");
        return edges;
    }
};

namespace detail {

inline bool parse_bool(const std::string& v, const std::string& key) {
    std::string low = text::fold(v);
    if (low == "true" || low == "1" || low == "yes" || low == "on") return true;
    if (low == "false" || low == "0" || low == "no" || low == "off") return false;
    throw Error("config: key \"" + key + "\" expects a boolean, got \"" + v + "\"");
}

}  // namespace detail

inline void config_set(Config& cfg, const std::string& key, const std::string& value) {
    auto as_long = [&](long& dst) {
        try {
            dst = std::stol(value);
        } catch (...) {
            throw Error("config: key \"" + key + "\" expects an integer, got \"" + value + "\"");
        }
    };
    auto as_double = [&](double& dst) {
        try {
            dst = std::stod(value);
        } catch (...) {
            throw Error("config: key \"" + key + "\" expects a number, got \"" + value + "\"");
        }
    };
    if (key == "similarity_threshold") as_double(cfg.similarity_threshold);
    else if (key == "g_index_k") as_long(cfg.g_index_k);
    else if (key == "slice_length") { long v; as_long(v); cfg.slice_length = static_cast<int>(v); }
    else if (key == "min_cluster_size") as_long(cfg.min_cluster_size);
    else if (key == "llr_top_n") as_long(cfg.llr_top_n);
    else if (key == "lsi_max_rank") as_long(cfg.lsi_max_rank);
    else if (key == "lsi_terms_per_dim") as_long(cfg.lsi_terms_per_dim);
    else if (key == "lsi_vocab_cap") as_long(cfg.lsi_vocab_cap);
    else if (key == "burst_s") as_double(cfg.burst_s);
    else if (key == "burst_gamma") as_double(cfg.burst_gamma);
    else if (key == "burst_min_duration") as_long(cfg.burst_min_duration);
    else if (key == "wordtree_min_freq") as_long(cfg.wordtree_min_freq);
    else if (key == "category_min_freq") as_long(cfg.category_min_freq);
    else if (key == "keyword_min_freq") as_long(cfg.keyword_min_freq);
    else if (key == "wordtree_zscore") cfg.wordtree_zscore = detail::parse_bool(value, key);
    else if (key == "alluvial_k") as_long(cfg.alluvial_k);
    else if (key == "dualmap_match_threshold") as_double(cfg.dualmap_match_threshold);
    else if (key == "dualmap_bundle") cfg.dualmap_bundle = detail::parse_bool(value, key);
    else if (key == "dualmap_bundle_threshold") as_double(cfg.dualmap_bundle_threshold);
    else if (key == "bin_edges") cfg.bin_edges = value;
    else if (key == "report_top_n") as_long(cfg.report_top_n);
    else if (key == "drill_min_records") as_long(cfg.drill_min_records);
    else if (key == "drill_max_depth") as_long(cfg.drill_max_depth);
    else if (key == "threads") as_long(cfg.threads);
    else if (key == "seed") as_long(cfg.seed);
    else throw Error("config: unknown key \"" + key + "\"");
}

inline Config load_config(std::istream& is, Config cfg = {}) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = text::trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = text::trim(t.substr(0, eq));
        std::string value = text::trim(t.substr(eq + 1));
        config_set(cfg, key, value);
    }
    return cfg;
}

}  // namespace citekit
