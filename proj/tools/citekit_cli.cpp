// Command-line front end. Every subcommand operates on a project directory
// and appends a summary line to diagnostics.log.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "citekit/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"citekit: citation corpus linkage and analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string project_dir = ".";
    std::string config_file;
    long threads = -1;
    long seed = -1;
    app.add_option("--project", project_dir, "project directory")->capture_default_str();
    app.add_option("--config", config_file, "configuration file with key=value lines");
    app.add_option("--threads", threads, "worker threads, 0 for all cores");
    app.add_option("--seed", seed, "seed for randomized extensions");

    auto* ingest = app.add_subcommand("ingest", "parse export files into records.jsonl");
    std::vector<std::string> inputs;
    ingest->add_option("files", inputs, "WoS tagged/tab exports and Scopus CSV exports")
        ->required();

    app.add_subcommand("link", "merge duplicate records and consolidate cited references");
    app.add_subcommand("network", "build the co-citation network");
    app.add_subcommand("cluster", "cluster the network and label the clusters");

    auto* drill = app.add_subcommand("drill", "re-run the analysis inside one cluster");
    std::string drill_path;
    drill->add_option("--path", drill_path, "cluster path such as \"#0\" or \"#0#2\"")
        ->required();

    auto* bursts = app.add_subcommand("bursts", "detect citation bursts");
    long min_duration = -1;
    bursts->add_option("--min-duration", min_duration, "shortest burst to keep, in years");

    app.add_subcommand("halflife", "rank references by citation half-life");

    auto* wordtree = app.add_subcommand("wordtree", "build the keyword word tree");
    long min_freq = -1;
    wordtree->add_option("--min-freq", min_freq, "minimum keyword frequency");

    auto* alluvial = app.add_subcommand("alluvial", "trace keyword threads across years");
    long alluvial_k = -1;
    alluvial->add_option("--k", alluvial_k, "g-index scale for per-year keyword selection");

    auto* dualmap = app.add_subcommand("dualmap", "aggregate citation arcs over a base map");
    std::string basemap_file;
    dualmap->add_option("--basemap", basemap_file, "CSV of journal,region,x,y")->required();

    auto* report = app.add_subcommand("report", "print a ranking or tally");
    std::string report_kind;
    report->add_option("kind", report_kind, "one of most-cited, refs, types, bins")
        ->required()
        ->check(CLI::IsMember({"most-cited", "refs", "types", "bins"}));

    CLI11_PARSE(app, argc, argv);

    try {
        citekit::Project project;
        project.dir = project_dir;
        if (!config_file.empty()) {
            std::ifstream is(config_file, std::ios::binary);
            if (!is) throw citekit::Error("cannot open config file " + config_file);
            project.config = citekit::load_config(is);
        }
        if (threads >= 0) project.config.threads = threads;
        if (seed >= 0) project.config.seed = seed;

        if (*ingest) {
            std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
            size_t n = citekit::cmd_ingest(project, paths);
            std::cout << "ingested " << n << " records into "
                      << project.records_path().string() << "\n";
        } else if (app.got_subcommand("link")) {
            auto summary = citekit::cmd_link(project);
            std::cout << "merged " << summary.merged_records << " records (wos="
                      << summary.merge.wos << " scopus=" << summary.merge.scopus
                      << " overlap=" << summary.merge.overlap << "), "
                      << summary.canonical_refs << " canonical references\n";
            if (summary.pairs_in != summary.pairs_out) {
                std::cerr << "error: citing-pair conservation violated (" << summary.pairs_in
                          << " in, " << summary.pairs_out << " out)\n";
                return 1;
            }
        } else if (app.got_subcommand("network")) {
            auto net = citekit::cmd_network(project);
            std::cout << "network: " << net.node_ids.size() << " nodes, "
                      << net.edges.size() << " links, " << net.slices.size() << " slices\n";
        } else if (app.got_subcommand("cluster")) {
            auto a = citekit::cmd_cluster(project);
            std::cout << "clusters: " << a.clusters.clusters.size() << " (noise "
                      << a.clusters.noise.size() << ")";
            if (a.q) std::cout << ", modularity " << citekit::text::format_double(*a.q, 4);
            std::cout << "\n";
            citekit::write_clusters_csv(std::cout, a.clusters);
        } else if (*drill) {
            auto a = citekit::cmd_drill(project, drill_path);
            citekit::write_clusters_csv(std::cout, a.clusters);
        } else if (*bursts) {
            if (min_duration < 0) min_duration = project.config.burst_min_duration;
            auto found = citekit::cmd_bursts(project, static_cast<int>(min_duration));
            std::cout << found.size() << " bursts written to "
                      << project.bursts_path().string() << "\n";
        } else if (app.got_subcommand("halflife")) {
            citekit::cmd_halflife(project, std::cout);
        } else if (*wordtree) {
            if (min_freq < 0) min_freq = project.config.wordtree_min_freq;
            citekit::cmd_wordtree(project, min_freq, std::cout);
        } else if (*alluvial) {
            if (alluvial_k < 0) alluvial_k = project.config.alluvial_k;
            auto threads_out = citekit::cmd_alluvial(project, alluvial_k);
            std::cout << threads_out.size() << " keyword threads written to "
                      << project.alluvial_path().string() << "\n";
        } else if (*dualmap) {
            auto result = citekit::cmd_dualmap(project, basemap_file);
            std::cout << result.arcs.size() << " arcs (" << result.resolved << " resolved, "
                      << result.unresolved << " unresolved references)\n";
        } else if (*report) {
            if (report_kind == "most-cited")
                citekit::report_most_cited(project, std::cout);
            else if (report_kind == "refs")
                citekit::report_refs(project, std::cout);
            else if (report_kind == "types")
                citekit::report_types(project, std::cout);
            else
                citekit::report_bins(project, std::cout);
        }
    } catch (const citekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
