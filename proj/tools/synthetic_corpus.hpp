#pragma once

// Deterministic synthetic corpus generator. The bundled data set, the test
// suite and the performance benchmark all build corpora through this header,
// so planted structure (variant groups, cluster vocabulary, burst windows,
// keyword frequencies) is in one place.
//
// Planted reference groups are constructed so that variants of one group
// always chain above the similarity threshold while variants of different
// groups never do: groups never share a (surname, first initial) block, and
// entities that can collide on every other field are kept apart by unique
// page numbers. build_synthetic() re-checks the chaining property with the
// real parsers and similarity code and throws if a planted group would not
// consolidate.

#include <cassert>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "citekit/linkage.hpp"
#include "citekit/scopus.hpp"
#include "citekit/similarity.hpp"
#include "citekit/text.hpp"
#include "citekit/wos.hpp"

namespace citekit::synth {

struct SynthSpec {
    size_t records = 200;
    size_t singles_per_record = 1;   // one-off references, one group each
    size_t filler_groups = 0;        // widely co-cited pool for large runs
    size_t filler_per_record = 0;
    unsigned shuffle_seed = 0;       // 0 keeps natural record order
};

struct SynthCorpus {
    std::string wos_text;
    std::string scopus_text;
    std::string basemap_csv;
    std::map<std::string, size_t> group_of_raw;
    std::vector<std::string> hirsch_raws;
    std::vector<std::string> planted_terms;  // per-block title term
    std::vector<std::string> keywords_over_40;
    std::vector<std::string> keywords_30_to_40;
    size_t planted_groups = 40;
    size_t wos_file_records = 0;
    size_t scopus_file_records = 0;
    size_t overlap_records = 0;
    size_t total_occurrences = 0;
};

namespace detail {

inline const std::vector<std::string>& surname_pool() {
    static std::vector<std::string> pool = [] {
        const char* pre[] = {"Ander", "Berg",  "Carl", "Dahl", "Ek",    "Fors", "Gran",
                             "Holm",  "Iver",  "Jans", "Karl", "Lind",  "Moer", "Nord",
                             "Oest",  "Palm",  "Quist", "Rosen", "Sand", "Thorn", "Ulf",
                             "Vik",   "Wern",  "Yoder", "Zett"};
        const char* suf[] = {"sson", "berg", "strom", "qvist", "dahl", "man", "sen", "lund"};
        std::vector<std::string> v;
        for (const char* s : suf)
            for (const char* p : pre) v.push_back(std::string(p) + s);
        return v;  // 200 distinct surnames, none equal to "Hirsch"
    }();
    return pool;
}

struct CitedSource {
    std::string full, abbr, region;  // empty region = absent from the base map
};

inline const std::vector<CitedSource>& source_pool() {
    static std::vector<CitedSource> pool = {
        {"JOURNAL OF DOCUMENTATION", "J DOC", "INFORMATION SCIENCE"},
        {"JOURNAL OF INFORMETRICS", "J INFORMETR", "INFORMATION SCIENCE"},
        {"SCIENTOMETRICS", "SCIENTOMETRICS", "INFORMATION SCIENCE"},
        {"PHYSICAL REVIEW LETTERS", "PHYS REV LETT", "PHYSICS"},
        {"PROCEEDINGS OF THE NATIONAL ACADEMY OF SCIENCES", "P NATL ACAD SCI USA",
         "MULTIDISCIPLINARY"},
        {"NATURE", "NATURE", "MULTIDISCIPLINARY"},
        {"SCIENCE", "SCIENCE", "MULTIDISCIPLINARY"},
        {"JOURNAL OF FLUID MECHANICS", "J FLUID MECH", "ENGINEERING"},
        {"ANALYTICAL BIOCHEMISTRY", "ANAL BIOCHEM", "CHEMISTRY"},
        {"ANNALS OF STATISTICS", "ANN STAT", "MATHEMATICS"},
        {"RESEARCH EVALUATION", "RES EVAL", ""},
        {"COLLNET JOURNAL OF SCIENTOMETRICS", "COLLNET J SCI", ""},
    };
    return pool;
}

struct Venue {
    std::string name, region;  // empty region = absent from the base map
};

inline const std::vector<Venue>& venue_pool() {
    static std::vector<Venue> pool = {
        {"JOURNAL OF INFORMETRICS", "INFORMATION SCIENCE"},
        {"SCIENTOMETRICS", "INFORMATION SCIENCE"},
        {"JOURNAL OF DOCUMENTATION", "INFORMATION SCIENCE"},
        {"JOURNAL OF THE ASSOCIATION FOR INFORMATION SCIENCE AND TECHNOLOGY",
         "INFORMATION SCIENCE"},
        {"PHYSICAL REVIEW E", "PHYSICS"},
        {"NATURE PHYSICS", "PHYSICS"},
        {"ANALYTICAL CHEMISTRY", "CHEMISTRY"},
        {"JOURNAL OF FLUID MECHANICS", "ENGINEERING"},
        {"RESEARCH POLICY", ""},
        {"TECHNOLOGICAL FORECASTING AND SOCIAL CHANGE", ""},
    };
    return pool;
}

// One cited work. Perturbations of its rendering are the planted variants.
struct Entity {
    size_t id = 0;
    std::string surname;
    std::string initials;
    std::optional<int> year;
    size_t source_idx = 0;
    std::string volume;
    std::string page;
    std::string doi;
    int renderings = 2;  // perturbations 0..renderings-1
};

inline Entity make_entity(size_t e, const std::string& page) {
    const auto& pool = surname_pool();
    Entity ent;
    ent.id = e;
    size_t family = e % pool.size();
    ent.surname = pool[family];
    ent.initials = std::string(1, static_cast<char>('A' + (e * 3) % 26));
    if (e % 5 == 0) ent.initials += static_cast<char>('A' + (e * 7) % 26);
    ent.year = 1946 + static_cast<int>(((e / pool.size()) * 17 + family % 13) % 70);
    ent.source_idx = e % source_pool().size();
    ent.volume = std::to_string(1 + e % 150);
    ent.page = page;
    if (e % 3 == 0) ent.doi = "10.5555/synth." + std::to_string(e);
    return ent;
}

inline std::string ref_topic(size_t e) {
    static const char* topics[] = {"citation behavior", "research output", "journal impact",
                                   "index theory",      "network methods", "data quality"};
    return topics[e % 6];
}

inline std::string render_wos(const Entity& ent, int p) {
    const auto& src = source_pool()[ent.source_idx];
    std::string abbr = src.abbr;
    if (p == 1 && abbr.size() > 3) abbr.pop_back();  // truncated abbreviation
    std::string author = ent.surname + " " + ent.initials;
    if (p % 2 == 1) {  // dotted initials form
        author = ent.surname + " ";
        for (char c : ent.initials) {
            author += c;
            author += '.';
        }
    }
    std::string out = author + ", " + std::to_string(*ent.year) + ", " + abbr;
    if (p != 3) out += ", V" + ent.volume;
    if (p != 2) out += ", P" + ent.page;
    if (p == 0 && !ent.doi.empty()) out += ", DOI " + ent.doi;
    return out;
}

inline std::string render_scopus(const Entity& ent, int p) {
    const auto& src = source_pool()[ent.source_idx];
    std::string initials;
    for (char c : ent.initials) {
        initials += c;
        initials += '.';
    }
    std::string out = ent.surname + ", " + initials + ", ";
    if (p % 2 == 0) out += "Collected studies in " + ref_topic(ent.id) + " ";
    out += "(" + std::to_string(*ent.year) + ") " + src.full;
    long pageno = std::stol(ent.page);
    std::string pages = "pp. " + ent.page + "-" + std::to_string(pageno + 7);
    if (p == 0)
        out += ", " + ent.volume + " (" + std::to_string(1 + ent.id % 6) + "), " + pages;
    else if (p == 1)
        out += ", " + ent.volume + ", " + pages;
    else if (p == 2)
        out += ", " + ent.volume;
    else
        out += ", " + pages;
    return out;
}

// The twelve canonical-consolidation showcase variants: six field-tagged
// forms and six CSV-fragment forms of the same 2005 PNAS article.
inline const std::vector<std::string>& hirsch_wos() {
    static std::vector<std::string> v = {
        "Hirsch JE, 2005, P NATL ACAD SCI USA, V102, P16569, DOI 10.1073/pnas.0507655102",
        "Hirsch JE, 2005, P NATL ACAD SCI USA, V102, P16569, "
        "DOI [10.1073/pnas.0507655102, DOI 10.1073/PNAS.0507655102]",
        "Hirsch J., 2005, P NATL ACAD SCI USA, V102, P165",
        "Hirsch J. E., 2005, P NATL ACAD SCI USA, V102, P4",
        "Hirsch J. E., 2005, P NAT AC SCI US",
        "Hirsch J. E., 2005, P NATL ACAD SCI US",
    };
    return v;
}

inline const std::vector<std::string>& hirsch_scopus() {
    static std::vector<std::string> v = {
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) Proceedings of the National Academy of Sciences of the United States of "
        "America, 102 (46), pp. 16569-16572",
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) Proceedings of the National Academy of Sciences of the United States of "
        "America, 102, pp. 16569-16572",
        "Hirsch, J.E., An Index to Quantify an Individual's Scientific Research Output "
        "(2005) Proceedings of the National Academy of Sciences, 102 (46), pp. 16569-16572",
        "Hirsch, J.E., (2005) Proc. Natl. Acad. Sci. USA, 102, pp. 16569-16572",
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) Proc. Nation. Acad. Sci. USA, 102 (46), pp. 16569-16572",
        "Hirsch, J., An index to quantify an individual's scientific research output, "
        "Proceedings of the National Academy of Sciences USA, 102, pp. 16569-16572",
    };
    return v;
}

inline void verify_chains(const std::vector<CitedRef>& refs, double threshold,
                          const std::string& what) {
    if (refs.size() < 2) return;
    std::vector<size_t> root(refs.size());
    for (size_t i = 0; i < root.size(); ++i) root[i] = i;
    auto find = [&](size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (size_t i = 0; i < refs.size(); ++i)
        for (size_t j = i + 1; j < refs.size(); ++j) {
            auto s = try_overall_similarity(refs[i], refs[j]);
            if (s && *s > threshold) root[find(i)] = find(j);
        }
    for (size_t i = 1; i < refs.size(); ++i)
        if (find(i) != find(0))
            throw Error("synthetic corpus: planted group does not chain (" + what + ")");
}

enum class Side { WOS_ONLY, SCOPUS_ONLY, BOTH };

struct RecordPlan {
    size_t i = 0;
    int year = 0;
    int block = 0;
    Side side = Side::WOS_ONLY;
    std::vector<std::string> wos_refs, scopus_refs;
};

}  // namespace detail

inline SynthCorpus build_synthetic(const SynthSpec& spec) {
    using namespace detail;
    const double threshold = 0.80;
    const size_t n = spec.records;
    if (n < 60) throw Error("synthetic corpus: need at least 60 records");

    SynthCorpus corpus;
    corpus.planted_terms = {"photonics", "metabolomics", "turbulence"};
    corpus.keywords_over_40 = {"co-citation", "text mining", "network science",
                               "bibliometrics"};
    corpus.keywords_30_to_40 = {"h-index"};

    // Entities: 0 = the showcase group, 1..39 planted multi-variant groups,
    // then fillers, then one-off singles.
    const size_t first_filler = 40;
    const size_t first_single = first_filler + spec.filler_groups;
    std::map<size_t, Entity> entities;
    for (size_t g = 1; g < 40; ++g) {
        Entity ent = make_entity(g, std::to_string(1 + (g * 37) % 2000));
        ent.renderings = 2 + static_cast<int>(g % 3);
        entities[g] = ent;
    }
    for (size_t f = 0; f < spec.filler_groups; ++f) {
        Entity ent = make_entity(first_filler + f, std::to_string(30000 + f));
        ent.renderings = 2;
        entities[first_filler + f] = ent;
    }

    // Chaining self-check on every planted group and filler.
    for (const auto& [e, ent] : entities) {
        std::vector<CitedRef> refs;
        for (int p = 0; p < ent.renderings; ++p) {
            refs.push_back(parse_wos_ref(render_wos(ent, p)));
            refs.push_back(parse_scopus_ref(render_scopus(ent, p)));
        }
        verify_chains(refs, threshold, "entity " + std::to_string(e));
    }
    {
        std::vector<CitedRef> refs;
        for (const auto& raw : hirsch_wos()) refs.push_back(parse_wos_ref(raw));
        for (const auto& raw : hirsch_scopus()) refs.push_back(parse_scopus_ref(raw));
        verify_chains(refs, threshold, "showcase group");
    }

    const std::vector<size_t> hirsch_wos_citers = {12, 14, 16, 30, 32, 34};
    const std::vector<size_t> hirsch_scopus_citers = {9, 29, 11, 13, 33, 53};

    auto side_of = [&](size_t i) {
        if (i < 6) return Side::WOS_ONLY;
        if (i % 7 == 3) return Side::BOTH;
        return i % 2 == 0 ? Side::WOS_ONLY : Side::SCOPUS_ONLY;
    };

    size_t next_single = 0;
    std::vector<RecordPlan> plans;
    plans.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        RecordPlan plan;
        plan.i = i;
        plan.year = 1996 + static_cast<int>(i % 20);
        plan.block = static_cast<int>(i * 3 / n);
        plan.side = side_of(i);

        std::vector<std::pair<size_t, int>> occ;  // (entity, perturbation)
        auto cite = [&](size_t e) {
            occ.emplace_back(e, static_cast<int>((i + e) % entities[e].renderings));
        };
        if (plan.block == 0) {
            size_t sub = i % 2;
            size_t base = 1 + sub * 6;
            for (size_t t = 0; t < 3; ++t) cite(base + (i / 2 + t) % 6);
            if (i % 5 == 0) cite(1 + (1 - sub) * 6 + (i / 5) % 6);
            if (plan.year >= 2004 && plan.year <= 2008) cite(39);
        } else if (plan.block == 1) {
            for (size_t t = 0; t < 4; ++t) cite(13 + (i + t * 3) % 13);
        } else {
            for (size_t t = 0; t < 3; ++t) cite(26 + (i * 2 + t) % 13);
        }
        for (size_t t = 0; t < spec.filler_per_record && spec.filler_groups; ++t)
            cite(first_filler + (i * 31 + t * 7) % spec.filler_groups);
        for (size_t t = 0; t < spec.singles_per_record; ++t) {
            size_t s = next_single++;
            Entity ent = make_entity(first_single + s, std::to_string(2001 + s));
            ent.renderings = 1;
            entities[first_single + s] = ent;
            occ.emplace_back(first_single + s, 0);
        }

        auto note = [&](const std::string& raw, size_t e) {
            auto [it, inserted] = corpus.group_of_raw.emplace(raw, e);
            if (!inserted && it->second != e)
                throw Error("synthetic corpus: raw string collides across groups");
        };
        for (auto [e, p] : occ) {
            const Entity& ent = entities[e];
            if (plan.side != Side::SCOPUS_ONLY) {
                std::string raw = render_wos(ent, p);
                plan.wos_refs.push_back(raw);
                note(raw, e);
            }
            if (plan.side != Side::WOS_ONLY) {
                std::string raw = render_scopus(ent, p);
                plan.scopus_refs.push_back(raw);
                note(raw, e);
            }
        }
        corpus.total_occurrences += occ.size();

        plans.push_back(std::move(plan));
    }
    for (size_t k = 0; k < hirsch_wos_citers.size(); ++k) {
        RecordPlan& plan = plans.at(hirsch_wos_citers[k]);
        assert(plan.side == Side::WOS_ONLY);
        plan.wos_refs.push_back(hirsch_wos()[k]);
        corpus.group_of_raw.emplace(hirsch_wos()[k], 0);
        ++corpus.total_occurrences;
    }
    for (size_t k = 0; k < hirsch_scopus_citers.size(); ++k) {
        RecordPlan& plan = plans.at(hirsch_scopus_citers[k]);
        assert(plan.side == Side::SCOPUS_ONLY);
        plan.scopus_refs.push_back(hirsch_scopus()[k]);
        corpus.group_of_raw.emplace(hirsch_scopus()[k], 0);
        ++corpus.total_occurrences;
    }
    corpus.hirsch_raws = hirsch_wos();
    for (const auto& raw : hirsch_scopus()) corpus.hirsch_raws.push_back(raw);

    // Record-level fields.
    static const char* fillers[] = {"advances",  "methods",    "analysis",  "modeling",
                                    "framework", "evaluation", "survey",    "approach",
                                    "dynamics",  "simulation", "design",    "theory",
                                    "applications", "perspectives", "trends", "review"};
    static const char* minors[] = {"indicators",  "rankings",   "collaboration",
                                   "visualization", "mapping",  "impact factor",
                                   "open access", "patents",    "funding",
                                   "gender",      "preprints",  "databases"};
    static const char* cats[] = {"Information Science & Library Science",
                                 "Computer Science, Interdisciplinary Applications",
                                 "Physics, Applied",
                                 "Multidisciplinary Sciences",
                                 "Engineering, Electrical & Electronic",
                                 "Biochemistry & Molecular Biology"};
    const std::vector<std::string> block_kw = {"co-citation", "text mining",
                                               "network science"};

    auto title_of = [&](size_t i, int block) {
        std::string f1 = fillers[(i * 3) % 16];
        f1[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(f1[0])));
        return f1 + " of " + corpus.planted_terms[block] + " " + fillers[(i * 5 + 7) % 16] +
               " " + fillers[(i * 11 + 3) % 16];
    };
    auto keywords_of = [&](size_t i, int block) {
        std::vector<std::string> kws = {block_kw[block]};
        // A few extra occurrences keep the top keyword's frequency unique.
        if (block != 0 && i % 67 == 3) kws.push_back(block_kw[0]);
        if (i % 4 == 0) kws.push_back("bibliometrics");
        if (i % 6 == 0) kws.push_back("h-index");
        if (i % 9 == 0) kws.push_back("citation analysis");
        if (i % 29 == 0) kws.push_back("altmetrics");
        if (i % 41 == 0) kws.push_back("peer review");
        kws.push_back(minors[(i * 7) % 12]);
        return kws;
    };
    auto doc_type_of = [&](size_t i) -> std::string {
        if (i % 11 == 0) return "Review";
        if (i % 37 == 5) return "Proceedings Paper";
        return "Article";
    };
    const auto& apool = surname_pool();
    auto authors_of = [&](size_t i) {
        std::vector<std::pair<std::string, std::string>> out;
        size_t count = 1 + i % 3;
        for (size_t j = 0; j < count; ++j) {
            std::string initials(1, static_cast<char>('A' + (i + j * 5) % 26));
            if ((i + j) % 4 == 0) initials += static_cast<char>('A' + (i + j * 9) % 26);
            out.emplace_back(apool[(i * 11 + j * 31) % apool.size()], initials);
        }
        return out;
    };

    // Emission order, shuffled per export when requested.
    std::vector<size_t> wos_order, scopus_order;
    for (const auto& plan : plans) {
        if (plan.side != Side::SCOPUS_ONLY) wos_order.push_back(plan.i);
        if (plan.side != Side::WOS_ONLY) scopus_order.push_back(plan.i);
        if (plan.side == Side::BOTH) ++corpus.overlap_records;
    }
    if (spec.shuffle_seed != 0) {
        std::mt19937 rng(spec.shuffle_seed);
        std::shuffle(wos_order.begin(), wos_order.end(), rng);
        std::shuffle(scopus_order.begin(), scopus_order.end(), rng);
    }
    corpus.wos_file_records = wos_order.size();
    corpus.scopus_file_records = scopus_order.size();

    std::ostringstream wos;
    wos << "FN Clarivate Analytics Web of Science\nVR 1.0\n";
    for (size_t i : wos_order) {
        const RecordPlan& plan = plans[i];
        wos << "PT J\n";
        bool first = true;
        for (const auto& [surname, initials] : authors_of(i)) {
            wos << (first ? "AU " : "   ") << surname << ", " << initials << "\n";
            first = false;
        }
        wos << "TI " << title_of(i, plan.block) << "\n";
        wos << "SO " << venue_pool()[i % venue_pool().size()].name << "\n";
        std::string kws;
        for (const auto& k : keywords_of(i, plan.block)) kws += (kws.empty() ? "" : "; ") + k;
        wos << "DE " << kws << "\n";
        size_t cat = (plan.block * 2 + i % 2) % 6;
        std::string wc = cats[cat];
        if (i % 3 == 0) wc += std::string("; ") + cats[(cat + 1 + (i / 3) % 5) % 6];
        wos << "WC " << wc << "\n";
        wos << "DT " << doc_type_of(i) << "\n";
        first = true;
        for (const auto& raw : plan.wos_refs) {
            wos << (first ? "CR " : "   ") << raw << "\n";
            first = false;
        }
        wos << "PY " << plan.year << "\n";
        wos << "VL " << (1 + i % 40) << "\n";
        wos << "IS " << (1 + i % 4) << "\n";
        wos << "BP " << (100 + i * 3) << "\n";
        if (i % 4 != 1) wos << "DI 10.5555/rec." << i << "\n";
        wos << "TC " << (i * 13) % 160 << "\n";
        wos << "UT WOS:" << 100000000000 + i << "\n";
        wos << "ER\n\n";
    }
    wos << "EF\n";
    corpus.wos_text = wos.str();

    std::ostringstream sc;
    text::write_csv_row(sc, {"Authors", "Title", "Year", "Source title", "Volume", "Issue",
                             "Page start", "Cited by", "DOI", "Author Keywords",
                             "Document Type", "References", "EID"});
    for (size_t i : scopus_order) {
        const RecordPlan& plan = plans[i];
        std::string authors;
        for (const auto& [surname, initials] : authors_of(i)) {
            if (!authors.empty()) authors += ", ";
            authors += surname + " ";
            for (char c : initials) {
                authors += c;
                authors += '.';
            }
        }
        std::string kws;
        for (const auto& k : keywords_of(i, plan.block)) kws += (kws.empty() ? "" : "; ") + k;
        std::string refs;
        for (const auto& raw : plan.scopus_refs) refs += (refs.empty() ? "" : "; ") + raw;
        long scopus_tc = static_cast<long>((i * 13) % 160 + i % 11);
        text::write_csv_row(
            sc, {authors, title_of(i, plan.block), std::to_string(plan.year),
                 venue_pool()[i % venue_pool().size()].name, std::to_string(1 + i % 40),
                 std::to_string(1 + i % 4), std::to_string(100 + i * 3),
                 std::to_string(scopus_tc),
                 i % 4 != 1 ? "10.5555/rec." + std::to_string(i) : "", kws, doc_type_of(i),
                 refs, "2-s2.0-" + std::to_string(70000000 + i)});
    }
    corpus.scopus_text = sc.str();

    std::ostringstream bm;
    bm << "journal,region,x,y\n";
    std::map<std::string, std::pair<double, double>> region_xy = {
        {"INFORMATION SCIENCE", {1.0, 2.0}}, {"PHYSICS", {4.0, 1.0}},
        {"MULTIDISCIPLINARY", {3.0, 3.0}},   {"ENGINEERING", {5.0, 2.0}},
        {"CHEMISTRY", {2.0, 4.0}},           {"MATHEMATICS", {6.0, 1.0}},
    };
    size_t row = 0;
    auto bm_row = [&](const std::string& journal, const std::string& region) {
        if (region.empty()) return;
        auto [x, y] = region_xy.at(region);
        bm << text::csv_escape(journal) << "," << text::csv_escape(region) << ","
           << text::format_double(x + 0.01 * static_cast<double>(++row), 2) << ","
           << text::format_double(y, 2) << "\n";
    };
    for (const auto& v : venue_pool()) bm_row(v.name, v.region);
    for (const auto& s : source_pool()) {
        bm_row(s.full, s.region);
        if (s.abbr != s.full) bm_row(s.abbr, s.region);
    }
    corpus.basemap_csv = bm.str();

    return corpus;
}

inline void write_corpus_files(const SynthCorpus& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto dump = [&](const std::filesystem::path& p, const std::string& content) {
        std::ofstream os(p, std::ios::binary);
        if (!os) throw Error("cannot write " + p.string());
        os << content;
    };
    dump(dir / "wos_export.txt", corpus.wos_text);
    dump(dir / "scopus_export.csv", corpus.scopus_text);
    dump(dir / "basemap.csv", corpus.basemap_csv);
    std::ostringstream gt;
    gt << "raw,group\n";
    for (const auto& [raw, group] : corpus.group_of_raw)
        gt << text::csv_escape(raw) << "," << group << "\n";
    dump(dir / "ground_truth.csv", gt.str());
}

}  // namespace citekit::synth
