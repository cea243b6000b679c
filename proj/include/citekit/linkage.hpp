#pragma once

// Record linkage: merging duplicate source records across databases by
// composite key, and consolidating cited-reference variants into canonical
// references by blocked pairwise similarity with single-link closure.

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "citekit/normalize.hpp"
#include "citekit/parallel.hpp"
#include "citekit/record.hpp"
#include "citekit/similarity.hpp"
#include "citekit/text.hpp"

namespace citekit {

// surname | first initial | year | volume | first page, all normalized.
// Records without a first author have no key and never merge.
inline std::optional<std::string> composite_key(const Record& r) {
    if (r.authors.empty() || r.authors.front().surname.empty()) return std::nullopt;
    const Author& a = r.authors.front();
    std::string initials = normalize_initials(a.initials);
    std::string key = text::fold(a.surname);
    key.push_back('|');
    if (!initials.empty()) key.push_back(initials[0]);
    key.push_back('|');
    key += r.year ? std::to_string(*r.year) : "";
    key.push_back('|');
    key += r.volume ? normalize_volume(*r.volume) : "";
    key.push_back('|');
    key += r.first_page ? normalize_page(*r.first_page) : "";
    return key;
}

struct MergeStats {
    size_t wos = 0;
    size_t scopus = 0;
    size_t overlap = 0;  // cross-source key matches
    size_t within_source = 0;
};

namespace detail {

// Fills holes in base from other; base's present fields always win.
inline void merge_into(Record& base, const Record& other) {
    if (other.source == Source::SCOPUS || other.times_cited_scopus) {
        long tc = other.times_cited_scopus.value_or(0);
        base.times_cited_scopus = std::max(base.times_cited_scopus.value_or(0), tc);
    }
    if (other.times_cited_wos)
        base.times_cited_wos =
            std::max(base.times_cited_wos.value_or(0), *other.times_cited_wos);
    if (!base.year) base.year = other.year;
    if (base.title.empty()) base.title = other.title;
    if (base.venue.empty()) base.venue = other.venue;
    if (!base.volume) base.volume = other.volume;
    if (!base.issue) base.issue = other.issue;
    if (!base.first_page) base.first_page = other.first_page;
    if (!base.doi) base.doi = other.doi;
    if (base.doc_type.empty()) base.doc_type = other.doc_type;
    if (base.authors.size() < other.authors.size() && base.authors.empty())
        base.authors = other.authors;
    if (base.author_keywords.empty()) base.author_keywords = other.author_keywords;
    if (base.subject_categories.empty()) base.subject_categories = other.subject_categories;
    if (base.cited_refs.empty()) base.cited_refs = other.cited_refs;
    for (const auto& [tag, lines] : other.extras)
        if (!base.extras.count(tag)) base.extras[tag] = lines;
}

}  // namespace detail

// WoS records are kept as merge bases; a Scopus record whose composite key
// matches becomes part of the WoS record (source MERGED, both citation counts
// retained). Duplicate keys within one source collapse onto the first seen.
inline std::vector<Record> merge_source_records(const std::vector<Record>& wos,
                                                const std::vector<Record>& scopus,
                                                MergeStats* stats = nullptr) {
    MergeStats local;
    MergeStats& st = stats ? *stats : local;
    st = {};
    st.wos = wos.size();
    st.scopus = scopus.size();

    std::vector<Record> out;
    out.reserve(wos.size() + scopus.size());
    std::map<std::string, size_t> by_key;
    for (const auto& r : wos) {
        auto key = composite_key(r);
        if (key) {
            auto it = by_key.find(*key);
            if (it != by_key.end()) {
                detail::merge_into(out[it->second], r);
                ++st.within_source;
                continue;
            }
            by_key[*key] = out.size();
        }
        out.push_back(r);
    }
    for (const auto& r : scopus) {
        auto key = composite_key(r);
        if (key) {
            auto it = by_key.find(*key);
            if (it != by_key.end()) {
                Record& base = out[it->second];
                if (base.source == Source::WOS || base.source == Source::MERGED) {
                    if (base.source == Source::WOS) ++st.overlap;
                    base.source = Source::MERGED;
                } else {
                    ++st.within_source;
                }
                detail::merge_into(base, r);
                continue;
            }
            by_key[*key] = out.size();
        }
        out.push_back(r);
    }
    return out;
}

struct CanonicalRef {
    std::string id;
    std::optional<std::string> surname;
    std::optional<std::string> initials;
    std::optional<int> year;
    std::optional<std::string> source_name;
    std::optional<std::string> title;
    std::optional<std::string> volume;
    std::optional<std::string> first_page;
    std::optional<std::string> doi;
    // distinct variant forms with their occurrence counts, plus the medoid
    // similarity used in the variant map export
    struct Variant {
        CitedRef ref;
        long count = 0;
        double sim_to_medoid = 1.0;
    };
    std::vector<Variant> variants;
    std::vector<std::string> citing_ids;  // sorted, unique
    std::map<int, long> yearly_citations;

    long total_citations() const {
        long n = 0;
        for (const auto& [y, c] : yearly_citations) n += c;
        return n;
    }
    long citing_pair_count() const {
        long n = 0;
        for (const auto& v : variants) n += v.count;
        return n;
    }
};

struct ConsolidationResult {
    std::vector<CanonicalRef> canon;
    long input_pairs = 0;   // (record, reference) occurrences seen
    long output_pairs = 0;  // occurrences accounted for across CanonicalRefs
};

struct LinkOptions {
    double threshold = 0.80;  // strict >
    unsigned threads = 0;     // 0 = hardware default
};

namespace detail {

struct UnionFind {
    std::vector<size_t> parent, rank_;
    explicit UnionFind(size_t n) : parent(n), rank_(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

inline std::string variant_fingerprint(const CitedRef& r) {
    std::string f = r.raw;
    auto add = [&f](const std::optional<std::string>& v) {
        f.push_back('\x1f');
        if (v) f += *v;
    };
    f.push_back('\x1f');
    if (r.year) f += std::to_string(*r.year);
    add(r.surname);
    add(r.initials);
    add(r.source_name);
    add(r.title);
    add(r.volume);
    add(r.first_page);
    add(r.doi);
    return f;
}

template <typename T>
void vote_field(std::optional<T>& dst,
                const std::vector<std::pair<T, long>>& votes) {
    if (votes.empty()) return;
    std::map<T, long> tally;
    for (const auto& [v, c] : votes) tally[v] += c;
    T best{};
    long best_count = -1;
    for (const auto& [v, c] : tally) {
        bool better = c > best_count;
        if (!better && c == best_count) {
            if constexpr (std::is_same_v<T, std::string>) {
                better = v.size() > best.size() || (v.size() == best.size() && v < best);
            } else {
                better = v < best;
            }
        }
        if (better) {
            best = v;
            best_count = c;
        }
    }
    dst = best;
}

}  // namespace detail

// Consolidates every cited reference across the record set. Variants are the
// distinct (raw, parsed-fields) forms; blocks share (surname, first initial);
// within a block, pairs whose years are equal or missing on either side and
// whose overall similarity exceeds the threshold are linked, and canonical
// references are the single-link components. Fills each reference's canon id
// in place.
inline ConsolidationResult consolidate_refs(std::vector<Record>& records,
                                            const LinkOptions& opts = {}) {
    struct VariantAcc {
        CitedRef ref;
        long count = 0;
        std::set<std::string> citing;
        std::map<int, long> yearly;
    };
    std::map<std::string, size_t> variant_index;
    std::vector<VariantAcc> variants;
    ConsolidationResult result;

    struct Occurrence {
        size_t record;
        size_t ref;
        size_t variant;
    };
    std::vector<Occurrence> occurrences;
    for (size_t ri = 0; ri < records.size(); ++ri) {
        Record& rec = records[ri];
        for (size_t fi = 0; fi < rec.cited_refs.size(); ++fi) {
            const CitedRef& cr = rec.cited_refs[fi];
            std::string fp = detail::variant_fingerprint(cr);
            auto [it, inserted] = variant_index.emplace(fp, variants.size());
            if (inserted) {
                VariantAcc acc;
                acc.ref = cr;
                acc.ref.canon.reset();
                variants.push_back(std::move(acc));
            }
            VariantAcc& acc = variants[it->second];
            ++acc.count;
            acc.citing.insert(rec.id);
            if (rec.year) ++acc.yearly[*rec.year];
            occurrences.push_back({ri, fi, it->second});
            ++result.input_pairs;
        }
    }

    // Blocks keyed by (folded surname, first initial).
    std::map<std::string, std::vector<size_t>> blocks;
    for (size_t i = 0; i < variants.size(); ++i) {
        const CitedRef& r = variants[i].ref;
        if (!r.surname || r.surname->empty()) continue;
        std::string initials = normalize_initials(r.initials.value_or(""));
        std::string key = text::fold(*r.surname);
        key.push_back('|');
        if (!initials.empty()) key.push_back(initials[0]);
        blocks[key].push_back(i);
    }

    detail::UnionFind uf(variants.size());
    std::vector<const std::vector<size_t>*> block_list;
    block_list.reserve(blocks.size());
    for (const auto& [key, members] : blocks) block_list.push_back(&members);

    std::mutex uf_mu;
    parallel_for(block_list.size(), opts.threads, [&](size_t begin, size_t end) {
        std::vector<std::pair<size_t, size_t>> links;
        for (size_t bi = begin; bi < end; ++bi) {
            const auto& members = *block_list[bi];
            // Candidate pairs are year-compatible: same year, or year missing
            // on either side. Grouping by year keeps blocks subquadratic.
            std::map<int, std::vector<size_t>> by_year;
            std::vector<size_t> yearless;
            for (size_t idx : members) {
                if (variants[idx].ref.year)
                    by_year[*variants[idx].ref.year].push_back(idx);
                else
                    yearless.push_back(idx);
            }
            auto consider = [&](size_t a, size_t b) {
                auto sim = try_overall_similarity(variants[a].ref, variants[b].ref);
                if (sim && *sim > opts.threshold) links.emplace_back(a, b);
            };
            for (const auto& [year, group] : by_year)
                for (size_t i = 0; i < group.size(); ++i)
                    for (size_t j = i + 1; j < group.size(); ++j)
                        consider(group[i], group[j]);
            for (size_t yi = 0; yi < yearless.size(); ++yi) {
                for (size_t yj = yi + 1; yj < yearless.size(); ++yj)
                    consider(yearless[yi], yearless[yj]);
                for (const auto& [year, group] : by_year)
                    for (size_t idx : group) consider(yearless[yi], idx);
            }
        }
        std::lock_guard<std::mutex> lock(uf_mu);
        for (auto [a, b] : links) uf.unite(a, b);
    });

    std::map<size_t, std::vector<size_t>> components;
    for (size_t i = 0; i < variants.size(); ++i) components[uf.find(i)].push_back(i);

    std::vector<CanonicalRef> canon;
    canon.reserve(components.size());
    std::vector<size_t> variant_component(variants.size());
    for (const auto& [root, member_idx] : components) {
        CanonicalRef c;
        std::vector<std::pair<std::string, long>> surnames, initials, sources, titles, volumes,
            pages, dois;
        std::vector<std::pair<int, long>> years;
        std::set<std::string> citing;
        for (size_t idx : member_idx) {
            const VariantAcc& v = variants[idx];
            long n = v.count;
            if (v.ref.surname) surnames.emplace_back(*v.ref.surname, n);
            if (v.ref.initials) initials.emplace_back(*v.ref.initials, n);
            if (v.ref.year) years.emplace_back(*v.ref.year, n);
            if (v.ref.source_name) sources.emplace_back(*v.ref.source_name, n);
            if (v.ref.title) titles.emplace_back(*v.ref.title, n);
            if (v.ref.volume) volumes.emplace_back(*v.ref.volume, n);
            if (v.ref.first_page) pages.emplace_back(*v.ref.first_page, n);
            if (v.ref.doi) dois.emplace_back(*v.ref.doi, n);
            citing.insert(v.citing.begin(), v.citing.end());
            for (const auto& [y, cnt] : v.yearly) c.yearly_citations[y] += cnt;
        }
        detail::vote_field(c.surname, surnames);
        detail::vote_field(c.initials, initials);
        detail::vote_field(c.year, years);
        detail::vote_field(c.source_name, sources);
        detail::vote_field(c.title, titles);
        detail::vote_field(c.volume, volumes);
        detail::vote_field(c.first_page, pages);
        detail::vote_field(c.doi, dois);
        c.citing_ids.assign(citing.begin(), citing.end());

        for (size_t idx : member_idx) {
            CanonicalRef::Variant v;
            v.ref = variants[idx].ref;
            v.count = variants[idx].count;
            c.variants.push_back(std::move(v));
        }
        std::sort(c.variants.begin(), c.variants.end(),
                  [](const CanonicalRef::Variant& a, const CanonicalRef::Variant& b) {
                      if (a.count != b.count) return a.count > b.count;
                      return a.ref.raw < b.ref.raw;
                  });

        // Medoid: the variant with the highest occurrence-weighted similarity
        // to the rest of the component.
        size_t medoid = 0;
        if (c.variants.size() > 1) {
            double best = -1.0;
            for (size_t i = 0; i < c.variants.size(); ++i) {
                double score = 0.0;
                for (size_t j = 0; j < c.variants.size(); ++j) {
                    if (i == j) continue;
                    auto sim = try_overall_similarity(c.variants[i].ref, c.variants[j].ref);
                    score += static_cast<double>(c.variants[j].count) * sim.value_or(0.0);
                }
                if (score > best) {
                    best = score;
                    medoid = i;
                }
            }
            for (size_t i = 0; i < c.variants.size(); ++i) {
                if (i == medoid) {
                    c.variants[i].sim_to_medoid = 1.0;
                } else {
                    auto sim =
                        try_overall_similarity(c.variants[i].ref, c.variants[medoid].ref);
                    c.variants[i].sim_to_medoid = sim.value_or(0.0);
                }
            }
        }
        canon.push_back(std::move(c));
    }

    // Canonical ids follow the sorted canonical field order so the output is
    // independent of input order.
    std::sort(canon.begin(), canon.end(), [](const CanonicalRef& a, const CanonicalRef& b) {
        auto key = [](const CanonicalRef& c) {
            return std::make_tuple(
                text::fold(c.surname.value_or("")), text::fold(c.initials.value_or("")),
                c.year.value_or(9999), text::fold(c.source_name.value_or("")),
                c.volume.value_or(""), c.first_page.value_or(""),
                text::fold(c.title.value_or("")), c.doi.value_or(""),
                c.variants.empty() ? std::string() : c.variants.front().ref.raw);
        };
        return key(a) < key(b);
    });
    std::map<std::string, std::string> canon_of_fingerprint;
    for (size_t i = 0; i < canon.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "r%06zu", i);
        canon[i].id = buf;
        for (auto& v : canon[i].variants) {
            canon_of_fingerprint[detail::variant_fingerprint(v.ref)] = canon[i].id;
            v.ref.canon = canon[i].id;
        }
        result.output_pairs += canon[i].citing_pair_count();
    }
    for (const auto& occ : occurrences) {
        CitedRef& cr = records[occ.record].cited_refs[occ.ref];
        cr.canon = canon_of_fingerprint.at(detail::variant_fingerprint(cr));
    }
    result.canon = std::move(canon);
    return result;
}

inline nlohmann::ordered_json to_json(const CanonicalRef& c) {
    nlohmann::ordered_json j;
    j["schema"] = "canonref/1";
    j["id"] = c.id;
    if (c.surname) j["surname"] = *c.surname;
    if (c.initials) j["initials"] = *c.initials;
    if (c.year) j["year"] = *c.year;
    if (c.source_name) j["source"] = *c.source_name;
    if (c.title) j["title"] = *c.title;
    if (c.volume) j["volume"] = *c.volume;
    if (c.first_page) j["first_page"] = *c.first_page;
    if (c.doi) j["doi"] = *c.doi;
    j["citing_ids"] = c.citing_ids;
    nlohmann::ordered_json yearly = nlohmann::ordered_json::object();
    for (const auto& [y, n] : c.yearly_citations) yearly[std::to_string(y)] = n;
    j["yearly_citations"] = yearly;
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (const auto& v : c.variants) {
        nlohmann::ordered_json vj = to_json(v.ref);
        vj.erase("canon");
        vj["count"] = v.count;
        vars.push_back(std::move(vj));
    }
    j["variants"] = vars;
    return j;
}

inline CanonicalRef canonical_from_json(const nlohmann::json& j) {
    CanonicalRef c;
    if (j.value("schema", "") != "canonref/1")
        throw Error("canonref store: unsupported schema \"" + j.value("schema", "") + "\"");
    c.id = j.at("id").get<std::string>();
    if (j.contains("surname")) c.surname = j["surname"].get<std::string>();
    if (j.contains("initials")) c.initials = j["initials"].get<std::string>();
    if (j.contains("year")) c.year = j["year"].get<int>();
    if (j.contains("source")) c.source_name = j["source"].get<std::string>();
    if (j.contains("title")) c.title = j["title"].get<std::string>();
    if (j.contains("volume")) c.volume = j["volume"].get<std::string>();
    if (j.contains("first_page")) c.first_page = j["first_page"].get<std::string>();
    if (j.contains("doi")) c.doi = j["doi"].get<std::string>();
    for (const auto& id : j.at("citing_ids")) c.citing_ids.push_back(id.get<std::string>());
    for (const auto& [y, n] : j.at("yearly_citations").items())
        c.yearly_citations[std::stoi(y)] = n.get<long>();
    if (j.contains("variants")) {
        for (const auto& vj : j["variants"]) {
            CanonicalRef::Variant v;
            v.ref = cited_ref_from_json(vj);
            v.ref.canon = c.id;
            v.count = vj.value("count", 1L);
            c.variants.push_back(std::move(v));
        }
    }
    return c;
}

inline void write_canonref_store(std::ostream& os, const std::vector<CanonicalRef>& canon) {
    for (const auto& c : canon) os << to_json(c).dump() << '\n';
}

inline std::vector<CanonicalRef> read_canonref_store(std::istream& is) {
    std::vector<CanonicalRef> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (text::trim_view(line).empty()) continue;
        try {
            out.push_back(canonical_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw Error("canonref store line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline void write_variant_map(std::ostream& os, const std::vector<CanonicalRef>& canon) {
    text::write_csv_row(os, {"variant_raw", "canonical_id", "similarity_to_medoid"});
    for (const auto& c : canon)
        for (const auto& v : c.variants)
            text::write_csv_row(os, {v.ref.raw, c.id, text::format_double(v.sim_to_medoid, 6)});
}

}  // namespace citekit
