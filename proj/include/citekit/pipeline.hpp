#pragma once

// Project-directory orchestration: each command reads the persisted stores,
// runs one analysis stage, and writes its outputs. All outputs are
// deterministic for a given project + config.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "citekit/burst.hpp"
#include "citekit/clustering.hpp"
#include "citekit/config.hpp"
#include "citekit/labeling.hpp"
#include "citekit/linkage.hpp"
#include "citekit/network.hpp"
#include "citekit/record.hpp"
#include "citekit/report.hpp"
#include "citekit/scopus.hpp"
#include "citekit/temporal.hpp"
#include "citekit/wordtree.hpp"
#include "citekit/wos.hpp"

namespace citekit {

struct Project {
    std::filesystem::path dir;
    Config config;

    std::filesystem::path records_path() const { return dir / "records.jsonl"; }
    std::filesystem::path canonrefs_path() const { return dir / "canonrefs.jsonl"; }
    std::filesystem::path variant_map_path() const { return dir / "variant_map.csv"; }
    std::filesystem::path graphml_path() const { return dir / "network.graphml"; }
    std::filesystem::path edges_path() const { return dir / "network_edges.csv"; }
    std::filesystem::path clusters_path() const { return dir / "clusters.csv"; }
    std::filesystem::path bursts_path() const { return dir / "bursts.csv"; }
    std::filesystem::path timeline_path() const { return dir / "timeline.json"; }
    std::filesystem::path wordtree_path() const { return dir / "wordtree.json"; }
    std::filesystem::path alluvial_path() const { return dir / "alluvial.csv"; }
    std::filesystem::path dualmap_path() const { return dir / "dualmap.csv"; }
    std::filesystem::path diagnostics_path() const { return dir / "diagnostics.log"; }
};

namespace detail {

inline std::ifstream open_in(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    if (!is) throw Error("cannot open " + p.string());
    return is;
}

inline std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw Error("cannot write " + p.string());
    return os;
}

inline void append_diagnostic(const Project& project, const std::string& line) {
    std::ofstream os(project.diagnostics_path(), std::ios::app | std::ios::binary);
    if (os) os << line << '\n';
}

inline std::vector<Record> load_records(const Project& project) {
    if (!std::filesystem::exists(project.records_path()))
        throw Error("no record store in " + project.dir.string() + "; run ingest first");
    auto is = open_in(project.records_path());
    return read_record_store(is);
}

inline std::vector<CanonicalRef> load_canon(const Project& project) {
    if (!std::filesystem::exists(project.canonrefs_path()))
        throw Error("no canonical reference store in " + project.dir.string() +
                    "; run link first");
    auto is = open_in(project.canonrefs_path());
    return read_canonref_store(is);
}

}  // namespace detail

// ---------------------------------------------------------------- ingest --

// Parses the given export files (.csv as Scopus, anything else as WoS) in
// lexicographic path order and writes the unified record store.
inline size_t cmd_ingest(const Project& project, std::vector<std::filesystem::path> inputs) {
    if (inputs.empty()) throw Error("ingest: no input files given");
    std::sort(inputs.begin(), inputs.end());
    std::filesystem::create_directories(project.dir);

    std::vector<Record> all;
    ParseStats stats;
    size_t wos_count = 0, scopus_count = 0;
    for (const auto& path : inputs) {
        auto is = detail::open_in(path);
        std::vector<Record> parsed;
        if (text::fold(path.extension().string()) == ".csv") {
            parsed = parse_scopus(is, &stats);
            scopus_count += parsed.size();
        } else {
            parsed = parse_wos(is, &stats);
            wos_count += parsed.size();
        }
        all.insert(all.end(), parsed.begin(), parsed.end());
    }
    std::map<std::string, int> seen;
    for (auto& r : all) {
        int n = ++seen[r.id];
        if (n > 1) r.id += "." + std::to_string(n);
    }
    auto os = detail::open_out(project.records_path());
    write_record_store(os, all);
    std::ostringstream diag;
    diag << "ingest: files=" << inputs.size() << " records=" << all.size()
         << " wos=" << wos_count << " scopus=" << scopus_count
         << " encoding_repairs=" << stats.encoding_repairs
         << " raw_only_refs=" << stats.unparsed_refs;
    detail::append_diagnostic(project, diag.str());
    return all.size();
}

// ------------------------------------------------------------------ link --

struct LinkSummary {
    MergeStats merge;
    size_t merged_records = 0;
    size_t canonical_refs = 0;
    long pairs_in = 0;
    long pairs_out = 0;
};

// Merges duplicate source records by composite key, consolidates cited
// references, and rewrites the stores with canonical ids filled in.
inline LinkSummary cmd_link(const Project& project) {
    auto records = detail::load_records(project);
    std::vector<Record> wos, scopus;
    for (auto& r : records) {
        if (r.source == Source::SCOPUS)
            scopus.push_back(std::move(r));
        else
            wos.push_back(std::move(r));
    }
    LinkSummary summary;
    auto merged = merge_source_records(wos, scopus, &summary.merge);
    LinkOptions opts;
    opts.threshold = project.config.similarity_threshold;
    opts.threads = static_cast<unsigned>(project.config.threads);
    auto consolidation = consolidate_refs(merged, opts);
    summary.merged_records = merged.size();
    summary.canonical_refs = consolidation.canon.size();
    summary.pairs_in = consolidation.input_pairs;
    summary.pairs_out = consolidation.output_pairs;

    auto ros = detail::open_out(project.records_path());
    write_record_store(ros, merged);
    auto cos = detail::open_out(project.canonrefs_path());
    write_canonref_store(cos, consolidation.canon);
    auto vos = detail::open_out(project.variant_map_path());
    write_variant_map(vos, consolidation.canon);

    std::ostringstream diag;
    diag << "link: wos=" << summary.merge.wos << " scopus=" << summary.merge.scopus
         << " overlap=" << summary.merge.overlap
         << " within_source=" << summary.merge.within_source
         << " merged_records=" << summary.merged_records
         << " canonical_refs=" << summary.canonical_refs << " pairs_in=" << summary.pairs_in
         << " pairs_out=" << summary.pairs_out << " conservation="
         << (summary.pairs_in == summary.pairs_out ? "ok" : "VIOLATED");
    detail::append_diagnostic(project, diag.str());
    return summary;
}

// --------------------------------------------------------------- analyze --

struct Analysis {
    CoCitationNetwork net;
    ClusterResult clusters;
    std::optional<double> q;
};

namespace detail {

inline std::map<std::string, std::vector<BurstInterval>> bursts_by_entity(
    const std::vector<CanonicalRef>& canon, const Config& cfg, int min_duration) {
    std::map<int, long> baseline;
    for (const auto& c : canon)
        for (const auto& [y, n] : c.yearly_citations) baseline[y] += n;
    BurstOptions opts;
    opts.s = cfg.burst_s;
    opts.gamma = cfg.burst_gamma;
    opts.min_duration = min_duration;
    std::vector<std::vector<BurstInterval>> results(canon.size());
    parallel_for(canon.size(), static_cast<unsigned>(cfg.threads),
                 [&](size_t begin, size_t end) {
                     for (size_t i = begin; i < end; ++i) {
                         if (canon[i].yearly_citations.empty()) continue;
                         auto bursts = detect_bursts(canon[i].yearly_citations, baseline, opts);
                         for (auto& b : bursts) {
                             b.entity = canon[i].id;
                             b.entity_year = canon[i].year;
                         }
                         results[i] = std::move(bursts);
                     }
                 });
    std::map<std::string, std::vector<BurstInterval>> by_entity;
    for (size_t i = 0; i < canon.size(); ++i)
        if (!results[i].empty()) by_entity[canon[i].id] = std::move(results[i]);
    return by_entity;
}

}  // namespace detail

// Network build, clustering, statistics and labels in one pass. path_prefix
// is prepended to cluster paths for drill-down levels.
inline Analysis analyze(const std::vector<Record>& records,
                        const std::vector<CanonicalRef>& canon, const Config& cfg,
                        const std::string& path_prefix = "") {
    NetworkOptions net_opts;
    net_opts.k = cfg.g_index_k;
    net_opts.slice_length = cfg.slice_length;
    net_opts.threads = static_cast<unsigned>(cfg.threads);
    Analysis a;
    a.net = build_network(records, canon, net_opts);
    if (a.net.node_ids.empty())
        throw Error("network: no references selected; corpus may lack citation years");

    ClusterOptions copts;
    copts.min_size = static_cast<size_t>(std::max(1L, cfg.min_cluster_size));
    copts.threads = static_cast<unsigned>(cfg.threads);
    a.clusters = cluster_network(a.net, copts);
    for (auto& c : a.clusters.clusters) c.path = path_prefix + "#" + std::to_string(c.id);
    if (a.clusters.clusters.size() >= 2)
        compute_silhouettes(a.net, a.clusters, copts.threads);

    std::map<std::string, int> year_of;
    for (const auto& c : canon)
        if (c.year) year_of[c.id] = *c.year;
    compute_mean_years(a.net, a.clusters, year_of);
    a.q = modularity(a.net, partition_of(a.clusters, a.net.node_ids.size()));

    // Labeling: universe = records citing at least one clustered node.
    std::vector<int> node_cluster(a.net.node_ids.size(), -1);
    for (const auto& c : a.clusters.clusters)
        for (size_t m : c.members) node_cluster[m] = c.id;
    std::vector<LabelDoc> universe;
    std::vector<std::set<std::string>> in_ids(a.clusters.clusters.size());
    for (const auto& r : records) {
        std::set<int> cited_clusters;
        for (const auto& cr : r.cited_refs) {
            if (!cr.canon) continue;
            auto it = a.net.index_of.find(*cr.canon);
            if (it == a.net.index_of.end()) continue;
            int cid = node_cluster[it->second];
            if (cid >= 0) cited_clusters.insert(cid);
        }
        if (cited_clusters.empty()) continue;
        universe.push_back(make_label_doc(r.id, r.title));
        for (int cid : cited_clusters) in_ids[cid].insert(r.id);
    }
    LsiOptions lsi_opts;
    lsi_opts.max_rank = static_cast<size_t>(std::max(1L, cfg.lsi_max_rank));
    lsi_opts.vocab_cap = static_cast<size_t>(std::max(1L, cfg.lsi_vocab_cap));
    lsi_opts.terms_per_dim = static_cast<size_t>(std::max(1L, cfg.lsi_terms_per_dim));
    parallel_for(a.clusters.clusters.size(), static_cast<unsigned>(cfg.threads),
                 [&](size_t begin, size_t end) {
                     for (size_t ci = begin; ci < end; ++ci) {
                         Cluster& cluster = a.clusters.clusters[ci];
                         cluster.llr_labels =
                             label_llr(universe, in_ids[ci],
                                       static_cast<size_t>(std::max(1L, cfg.llr_top_n)));
                         std::vector<LabelDoc> docs;
                         for (const auto& doc : universe)
                             if (in_ids[ci].count(doc.id)) docs.push_back(doc);
                         cluster.lsi_labels = label_lsi(docs, lsi_opts);
                     }
                 });
    return a;
}

inline void write_clusters_csv(std::ostream& os, const ClusterResult& clusters) {
    text::write_csv_row(
        os, {"cluster", "path", "size", "silhouette", "mean_year", "lsi_label", "llr_label"});
    for (const auto& c : clusters.clusters) {
        std::string lsi =
            !c.lsi_labels.empty() && !c.lsi_labels[0].empty() ? c.lsi_labels[0][0].first : "";
        std::string llr = !c.llr_labels.empty() ? c.llr_labels.front().first : "";
        text::write_csv_row(
            os, {std::to_string(c.id), c.path, std::to_string(c.members.size()),
                 c.silhouette ? text::format_double(*c.silhouette, 4) : "",
                 c.mean_year ? std::to_string(display_year(*c.mean_year)) : "", lsi, llr});
    }
}

// ---------------------------------------------------------------- network --

inline CoCitationNetwork cmd_network(const Project& project) {
    auto records = detail::load_records(project);
    auto canon = detail::load_canon(project);
    NetworkOptions opts;
    opts.k = project.config.g_index_k;
    opts.slice_length = project.config.slice_length;
    opts.threads = static_cast<unsigned>(project.config.threads);
    auto net = build_network(records, canon, opts);

    auto bursts = detail::bursts_by_entity(canon, project.config,
                                           static_cast<int>(project.config.burst_min_duration));
    std::map<std::string, const CanonicalRef*> canon_of;
    for (const auto& c : canon) canon_of[c.id] = &c;
    std::map<std::string, NodeAttrs> attrs;
    for (const auto& id : net.node_ids) {
        NodeAttrs a;
        auto it = canon_of.find(id);
        if (it != canon_of.end()) {
            a.label = canonical_label(*it->second);
            a.citations = it->second->total_citations();
            if (!it->second->yearly_citations.empty())
                a.first_year = it->second->yearly_citations.begin()->first;
        }
        a.burst = bursts.count(id) > 0;
        attrs[id] = a;
    }
    auto gos = detail::open_out(project.graphml_path());
    write_graphml(gos, net, attrs);
    auto eos = detail::open_out(project.edges_path());
    write_edge_list(eos, net);

    auto components = net.node_ids.empty() ? std::vector<std::vector<size_t>>{}
                                           : connected_components(net);
    std::ostringstream diag;
    diag << "network: nodes=" << net.node_ids.size() << " links=" << net.edges.size()
         << " slices=" << net.slices.size() << " components=" << components.size();
    if (!components.empty())
        diag << " largest=" << components.front().size()
             << " share=" << text::format_double(largest_component_share(net), 4);
    detail::append_diagnostic(project, diag.str());
    return net;
}

// ---------------------------------------------------------------- cluster --

inline Analysis cmd_cluster(const Project& project) {
    auto records = detail::load_records(project);
    auto canon = detail::load_canon(project);
    Analysis a = analyze(records, canon, project.config);

    auto csv = detail::open_out(project.clusters_path());
    write_clusters_csv(csv, a.clusters);

    auto bursts = detail::bursts_by_entity(canon, project.config,
                                           static_cast<int>(project.config.burst_min_duration));
    std::map<std::string, const CanonicalRef*> canon_of;
    for (const auto& c : canon) canon_of[c.id] = &c;
    auto tos = detail::open_out(project.timeline_path());
    tos << timeline_json(a.net, a.clusters, canon_of, bursts).dump(2) << '\n';

    std::ostringstream diag;
    diag << "cluster: clusters=" << a.clusters.clusters.size()
         << " noise=" << a.clusters.noise.size();
    if (a.q) diag << " modularity=" << text::format_double(*a.q, 4);
    detail::append_diagnostic(project, diag.str());
    return a;
}

// ------------------------------------------------------------------ drill --

namespace detail {

inline std::vector<int> parse_drill_path(const std::string& path) {
    if (path.empty() || path[0] != '#')
        throw Error("drill: path must look like \"#0\" or \"#0#1\"");
    std::vector<int> levels;
    for (const auto& part : text::split(path.substr(1), "#")) {
        std::string t = text::trim(part);
        if (t.empty() || !text::all_digits(t))
            throw Error("drill: bad path component \"" + t + "\" in \"" + path + "\"");
        levels.push_back(std::stoi(t));
    }
    return levels;
}

inline std::vector<Record> restrict_to_cluster(const std::vector<Record>& records,
                                               const CoCitationNetwork& net,
                                               const Cluster& cluster) {
    std::set<std::string> member_ids;
    for (size_t m : cluster.members) member_ids.insert(net.node_ids[m]);
    std::vector<Record> out;
    for (const auto& r : records)
        for (const auto& cr : r.cited_refs)
            if (cr.canon && member_ids.count(*cr.canon)) {
                out.push_back(r);
                break;
            }
    return out;
}

inline std::vector<CanonicalRef> restrict_canon(const std::vector<CanonicalRef>& canon,
                                                const std::vector<Record>& records) {
    struct Usage {
        std::set<std::string> citing;
        std::map<int, long> yearly;
    };
    std::map<std::string, Usage> usage;
    for (const auto& r : records)
        for (const auto& cr : r.cited_refs)
            if (cr.canon) {
                auto& u = usage[*cr.canon];
                u.citing.insert(r.id);
                if (r.year) ++u.yearly[*r.year];
            }
    std::vector<CanonicalRef> out;
    for (const auto& c : canon) {
        auto it = usage.find(c.id);
        if (it == usage.end()) continue;
        CanonicalRef copy = c;
        copy.citing_ids.assign(it->second.citing.begin(), it->second.citing.end());
        copy.yearly_citations = it->second.yearly;
        out.push_back(std::move(copy));
    }
    return out;
}

}  // namespace detail

// Re-runs the full analysis on the sub-corpus citing the target cluster at
// each path level. Returns the final level's analysis with prefixed paths.
inline Analysis cmd_drill(const Project& project, const std::string& path) {
    auto levels = detail::parse_drill_path(path);
    if (static_cast<long>(levels.size()) > project.config.drill_max_depth)
        throw Error("drill: path depth " + std::to_string(levels.size()) +
                    " exceeds configured maximum " +
                    std::to_string(project.config.drill_max_depth));
    auto records = detail::load_records(project);
    auto canon = detail::load_canon(project);

    std::string prefix;
    Analysis a = analyze(records, canon, project.config, prefix);
    for (size_t depth = 0; depth < levels.size(); ++depth) {
        int target = levels[depth];
        bool valid = target >= 0 &&
                     static_cast<size_t>(target) < a.clusters.clusters.size();
        if (!valid) {
            std::string valid_paths;
            for (const auto& c : a.clusters.clusters) {
                if (!valid_paths.empty()) valid_paths += ", ";
                valid_paths += prefix + "#" + std::to_string(c.id);
            }
            throw Error("drill: unknown cluster path \"" + path + "\"; valid paths: " +
                        (valid_paths.empty() ? "(none)" : valid_paths));
        }
        const Cluster& cluster = a.clusters.clusters[target];
        auto restricted = detail::restrict_to_cluster(records, a.net, cluster);
        if (static_cast<long>(restricted.size()) < project.config.drill_min_records)
            throw Error("drill: cluster " + prefix + "#" + std::to_string(target) +
                        " restricts the corpus to " + std::to_string(restricted.size()) +
                        " records, below the minimum of " +
                        std::to_string(project.config.drill_min_records));
        records = std::move(restricted);
        canon = detail::restrict_canon(canon, records);
        prefix += "#" + std::to_string(target);
        a = analyze(records, canon, project.config, prefix);
    }

    std::string stem = "drill";
    for (int idx : levels) stem += "-" + std::to_string(idx);
    auto csv = detail::open_out(project.dir / (stem + ".csv"));
    write_clusters_csv(csv, a.clusters);
    std::ostringstream diag;
    diag << "drill: path=" << path << " records=" << records.size()
         << " clusters=" << a.clusters.clusters.size();
    detail::append_diagnostic(project, diag.str());
    return a;
}

// ------------------------------------------------------------------ bursts --

inline std::vector<BurstInterval> cmd_bursts(const Project& project, int min_duration) {
    auto canon = detail::load_canon(project);
    auto by_entity = detail::bursts_by_entity(canon, project.config, min_duration);
    std::vector<BurstInterval> all;
    for (const auto& [id, bursts] : by_entity)
        all.insert(all.end(), bursts.begin(), bursts.end());
    auto os = detail::open_out(project.bursts_path());
    write_bursts_csv(os, all);
    std::ostringstream diag;
    diag << "bursts: entities=" << canon.size() << " bursts=" << all.size()
         << " min_duration=" << min_duration;
    detail::append_diagnostic(project, diag.str());
    return all;
}

// --------------------------------------------------------------- half-life --

inline void cmd_halflife(const Project& project, std::ostream& out) {
    auto canon = detail::load_canon(project);
    struct Row {
        const CanonicalRef* ref;
        int h;
    };
    std::vector<Row> rows;
    for (const auto& c : canon) {
        if (!c.year || c.yearly_citations.empty()) continue;
        rows.push_back({&c, half_life(c)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.h != b.h) return a.h > b.h;
        if (a.ref->citing_ids.size() != b.ref->citing_ids.size())
            return a.ref->citing_ids.size() > b.ref->citing_ids.size();
        return a.ref->id < b.ref->id;
    });
    if (rows.size() > static_cast<size_t>(project.config.report_top_n))
        rows.resize(static_cast<size_t>(project.config.report_top_n));
    text::write_csv_row(out, {"reference", "label", "year", "citations", "half_life"});
    for (const auto& row : rows)
        text::write_csv_row(out, {row.ref->id, canonical_label(*row.ref),
                                  std::to_string(*row.ref->year),
                                  std::to_string(row.ref->total_citations()),
                                  std::to_string(row.h)});
}

// ---------------------------------------------------------------- wordtree --

inline WordTreeNode cmd_wordtree(const Project& project, long min_freq, std::ostream& out) {
    auto records = detail::load_records(project);
    auto tree = build_word_tree(records, KeywordField::DE, min_freq,
                                project.config.wordtree_zscore);
    auto os = detail::open_out(project.wordtree_path());
    os << wordtree_json(tree).dump(2) << '\n';
    write_tree_outline(out, tree);
    std::ostringstream diag;
    diag << "wordtree: min_freq=" << min_freq << " terms=" << tree.node_count();
    detail::append_diagnostic(project, diag.str());
    return tree;
}

// ---------------------------------------------------------------- alluvial --

inline std::vector<KeywordThread> cmd_alluvial(const Project& project, long k) {
    auto records = detail::load_records(project);
    auto threads = alluvial_threads(records, k);
    auto os = detail::open_out(project.alluvial_path());
    write_alluvial_csv(os, threads);
    std::ostringstream diag;
    diag << "alluvial: k=" << k << " threads=" << threads.size();
    detail::append_diagnostic(project, diag.str());
    return threads;
}

// ----------------------------------------------------------------- dualmap --

inline DualMapResult cmd_dualmap(const Project& project,
                                 const std::filesystem::path& basemap_path) {
    auto records = detail::load_records(project);
    auto bis = detail::open_in(basemap_path);
    auto basemap = load_base_map(bis);
    auto result = dualmap_arcs(records, basemap, project.config.dualmap_match_threshold,
                               project.config.dualmap_bundle,
                               project.config.dualmap_bundle_threshold);
    auto os = detail::open_out(project.dualmap_path());
    write_dualmap_csv(os, result);
    std::ostringstream diag;
    diag << "dualmap: arcs=" << result.arcs.size() << " resolved=" << result.resolved
         << " unresolved=" << result.unresolved;
    detail::append_diagnostic(project, diag.str());
    return result;
}

// ----------------------------------------------------------------- reports --

inline void report_most_cited(const Project& project, std::ostream& out) {
    auto records = detail::load_records(project);
    auto ranked = rank_most_cited(records, static_cast<size_t>(project.config.report_top_n));
    text::write_csv_row(out, {"rank", "citations", "year", "title", "venue", "source"});
    size_t rank = 1;
    for (const Record* r : ranked)
        text::write_csv_row(out, {std::to_string(rank++), std::to_string(r->max_times_cited()),
                                  r->year ? std::to_string(*r->year) : "", r->title, r->venue,
                                  to_string(r->source)});
}

inline void report_refs(const Project& project, std::ostream& out) {
    auto canon = detail::load_canon(project);
    auto ranked = rank_cited_refs(canon, static_cast<size_t>(project.config.report_top_n));
    text::write_csv_row(out, {"rank", "citations", "reference", "label"});
    size_t rank = 1;
    for (const CanonicalRef* c : ranked)
        text::write_csv_row(out, {std::to_string(rank++), std::to_string(c->citing_ids.size()),
                                  c->id, canonical_label(*c)});
}

inline void report_types(const Project& project, std::ostream& out) {
    auto records = detail::load_records(project);
    text::write_csv_row(out, {"doc_type", "count"});
    for (const auto& [value, count] : tally(records, TallyDimension::DOC_TYPE))
        text::write_csv_row(out, {value, std::to_string(count)});
}

inline void report_bins(const Project& project, std::ostream& out) {
    auto records = detail::load_records(project);
    auto bins = bin_source_comparison(records, project.config.bin_edge_list());
    text::write_csv_row(out, {"bin", "count", "mean_wos", "mean_scopus"});
    for (const auto& b : bins) {
        std::string label = "[" + std::to_string(b.lower) + "," +
                            (b.upper ? std::to_string(*b.upper) : "inf") + ")";
        text::write_csv_row(out, {label, std::to_string(b.count),
                                  b.count ? text::format_double(b.mean_wos, 2) : "",
                                  b.count ? text::format_double(b.mean_scopus, 2) : ""});
    }
}

}  // namespace citekit
