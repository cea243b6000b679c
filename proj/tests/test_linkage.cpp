#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "citekit/linkage.hpp"
#include "citekit/scopus.hpp"
#include "citekit/wos.hpp"

using Catch::Matchers::ContainsSubstring;
using citekit::CanonicalRef;
using citekit::CitedRef;
using citekit::Record;

namespace {

CitedRef ref(std::string raw, std::optional<std::string> surname,
             std::optional<std::string> initials, std::optional<int> year,
             std::optional<std::string> source, std::optional<std::string> volume = {},
             std::optional<std::string> page = {}) {
    CitedRef r;
    r.raw = std::move(raw);
    r.surname = std::move(surname);
    r.initials = std::move(initials);
    r.year = year;
    r.source_name = std::move(source);
    r.volume = std::move(volume);
    r.first_page = std::move(page);
    return r;
}

Record citing(std::string id, int year, std::vector<CitedRef> refs) {
    Record r;
    r.id = std::move(id);
    r.year = year;
    r.authors.push_back({"Someone", "A"});
    r.cited_refs = std::move(refs);
    return r;
}

Record source_record(citekit::Source source, std::string surname, std::string initials,
                     std::optional<int> year, std::optional<std::string> volume = {},
                     std::optional<std::string> page = {}) {
    Record r;
    r.source = source;
    r.id = source == citekit::Source::WOS ? "w-x" : "s-x";
    r.authors.push_back({std::move(surname), std::move(initials)});
    r.year = year;
    r.volume = std::move(volume);
    r.first_page = std::move(page);
    return r;
}

std::string canon_dump(const std::vector<CanonicalRef>& canon) {
    std::ostringstream os;
    citekit::write_canonref_store(os, canon);
    return os.str();
}

}  // namespace

TEST_CASE("composite keys") {
    auto rec = source_record(citekit::Source::WOS, "Hirsch", "J. E.", 2005, "V102",
                             "pp. 16569-16572");
    // parsers normalize volume and page before keys are built
    rec = citekit::normalize_record(std::move(rec));
    REQUIRE(citekit::composite_key(rec).has_value());
    CHECK(*citekit::composite_key(rec) == "hirsch|j|2005|102|16569");

    auto shouting = citekit::normalize_record(
        source_record(citekit::Source::SCOPUS, "HIRSCH", "JE", 2005, "102", "16569"));
    CHECK(citekit::composite_key(shouting) == citekit::composite_key(rec));

    SECTION("no first author means no key") {
        Record orphan;
        orphan.id = "o";
        orphan.year = 2005;
        CHECK_FALSE(citekit::composite_key(orphan).has_value());
    }
    SECTION("missing fields stay distinct") {
        auto no_volume = source_record(citekit::Source::WOS, "Hirsch", "JE", 2005, {}, "16569");
        CHECK(*citekit::composite_key(no_volume) == "hirsch|j|2005||16569");
        CHECK(citekit::composite_key(no_volume) != citekit::composite_key(rec));
    }
}

TEST_CASE("source record merging") {
    auto wos = source_record(citekit::Source::WOS, "Hirsch", "JE", 2005, "102", "16569");
    wos.title = "An index to quantify an individual's scientific research output";
    wos.times_cited_wos = 900;
    wos.cited_refs.push_back(ref("x, 1990, Y", "x", {}, 1990, "Y"));
    auto scopus = source_record(citekit::Source::SCOPUS, "Hirsch", "J.E.", 2005, "102", "16569");
    scopus.title = "An index to quantify an individuals scientific research output";
    scopus.times_cited_scopus = 1100;
    scopus.doi = "10.1073/pnas.0507655102";

    SECTION("matching keys collapse across sources") {
        citekit::MergeStats stats;
        auto merged = citekit::merge_source_records({wos}, {scopus}, &stats);
        REQUIRE(merged.size() == 1);
        const auto& m = merged[0];
        CHECK(m.source == citekit::Source::MERGED);
        CHECK(m.title == wos.title);  // the tagged-export title wins on conflict
        CHECK(m.times_cited_wos == 900);
        CHECK(m.times_cited_scopus == 1100);
        CHECK(m.doi == "10.1073/pnas.0507655102");  // hole filled from the other side
        CHECK(m.cited_refs.size() == 1);
        CHECK(stats.wos == 1);
        CHECK(stats.scopus == 1);
        CHECK(stats.overlap == 1);
        CHECK(stats.within_source == 0);
    }
    SECTION("disjoint keys concatenate") {
        auto w2 = source_record(citekit::Source::WOS, "Walker", "A", 2011, "3", "44");
        auto s2 = source_record(citekit::Source::SCOPUS, "Young", "B", 2012, "9", "1");
        auto s3 = source_record(citekit::Source::SCOPUS, "Zhou", "C", 2013, "2", "7");
        citekit::MergeStats stats;
        auto merged = citekit::merge_source_records({wos, w2}, {scopus, s2, s3}, &stats);
        CHECK(merged.size() == 4);  // 2 + 3 with one overlapping pair
        CHECK(stats.overlap == 1);

        auto none = citekit::merge_source_records({w2}, {s2, s3}, &stats);
        CHECK(none.size() == 3);
        CHECK(stats.overlap == 0);
    }
    SECTION("within-source duplicates collapse onto the first") {
        auto twin = wos;
        twin.times_cited_wos = 901;
        citekit::MergeStats stats;
        auto merged = citekit::merge_source_records({wos, twin}, {}, &stats);
        REQUIRE(merged.size() == 1);
        CHECK(merged[0].times_cited_wos == 901);  // max of the duplicates
        CHECK(stats.within_source == 1);
    }
    SECTION("keyless records never merge") {
        Record a, b;
        a.id = "a";
        b.id = "b";
        auto merged = citekit::merge_source_records({a, b}, {});
        CHECK(merged.size() == 2);
    }
}

TEST_CASE("reference consolidation worked examples") {
    auto full = [](std::string raw) {
        return ref(std::move(raw), "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569");
    };

    SECTION("near-identical variants collapse") {
        std::vector<Record> records{citing("c1", 2006, {full("form one")}),
                                    citing("c2", 2007, {full("form two")})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        const auto& c = result.canon[0];
        CHECK(c.id == "r000000");
        CHECK(c.surname == "Hirsch");
        CHECK(c.volume == "102");
        CHECK(c.variants.size() == 2);
        CHECK(c.citing_ids == std::vector<std::string>{"c1", "c2"});
        CHECK(c.yearly_citations == std::map<int, long>{{2006, 1}, {2007, 1}});
        CHECK(c.total_citations() == 2);
        CHECK(records[0].cited_refs[0].canon == "r000000");
        CHECK(records[1].cited_refs[0].canon == "r000000");
    }
    SECTION("a single mismatched field keeps variants apart") {
        // four of five fields agree: similarity is exactly 0.8, not above it
        auto other = ref("other", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "103", "16569");
        std::vector<Record> records{citing("c1", 2006, {full("one"), other})};
        auto result = citekit::consolidate_refs(records);
        CHECK(result.canon.size() == 2);
    }
    SECTION("single-link closure joins chains") {
        auto a = full("a");
        auto b = ref("b", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA");  // no volume or page
        auto c = ref("c", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "103", "16570");
        // a-c alone agree on only 3 of 5 fields, but both match b perfectly
        REQUIRE(citekit::overall_similarity(a, c) == 0.6);
        std::vector<Record> records{citing("c1", 2006, {a}), citing("c2", 2006, {a}),
                                    citing("c3", 2006, {b}), citing("c4", 2006, {c})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        CHECK(result.canon[0].volume == "102");  // two occurrences of "a" outvote "c"
    }
    SECTION("year-incompatible pairs are never linked") {
        auto early = full("early");
        auto late = ref("late", "Hirsch", "JE", 2006, "P NATL ACAD SCI USA", "102", "16569");
        std::vector<Record> records{citing("c1", 2007, {early}), citing("c2", 2007, {late})};
        CHECK(citekit::consolidate_refs(records).canon.size() == 2);
    }
    SECTION("a yearless variant bridges year groups") {
        auto early = full("early");
        auto late = ref("late", "Hirsch", "JE", 2006, "P NATL ACAD SCI USA", "102", "16569");
        auto undated = ref("undated", "Hirsch", "JE", std::nullopt, "P NATL ACAD SCI USA");
        std::vector<Record> records{citing("c1", 2007, {early}), citing("c2", 2007, {late}),
                                    citing("c3", 2007, {undated})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        CHECK(result.canon[0].year == 2005);  // tied vote, smaller year wins
    }
    SECTION("blocking keeps different surnames apart") {
        // without blocking these would score (0.63 + 4) / 5 > 0.8
        auto a = full("a");
        auto b = ref("b", "Walker", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569");
        REQUIRE(*citekit::try_overall_similarity(a, b) > 0.8);
        std::vector<Record> records{citing("c1", 2006, {a, b})};
        CHECK(citekit::consolidate_refs(records).canon.size() == 2);
    }
    SECTION("surname-less variants stay singletons") {
        auto a = full("a");
        auto b = ref("b", std::nullopt, {}, 2005, "P NATL ACAD SCI USA", "102", "16569");
        std::vector<Record> records{citing("c1", 2006, {a, b})};
        CHECK(citekit::consolidate_refs(records).canon.size() == 2);
    }
    SECTION("citing ids are the union over variants") {
        auto a = full("a");
        auto b = ref("b", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA");
        std::vector<Record> records{citing("r1", 2006, {a}), citing("r2", 2006, {a, b}),
                                    citing("r3", 2006, {b})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        CHECK(result.canon[0].citing_ids == std::vector<std::string>{"r1", "r2", "r3"});
        CHECK(result.canon[0].citing_pair_count() == 4);
    }
    SECTION("identical fragments share one variant") {
        auto a = full("the same raw");
        std::vector<Record> records{citing("r1", 2006, {a}), citing("r2", 2006, {a})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        REQUIRE(result.canon[0].variants.size() == 1);
        CHECK(result.canon[0].variants[0].count == 2);
    }
    SECTION("field votes prefer frequency, then length, then order") {
        auto a = full("a");
        auto b = ref("b", "Hirsch", "J. E.", 2005, "P NATL ACAD SCI USA", "102", "16569");
        std::vector<Record> records{citing("r1", 2006, {a}), citing("r2", 2006, {b})};
        auto result = citekit::consolidate_refs(records);
        REQUIRE(result.canon.size() == 1);
        CHECK(result.canon[0].initials == "J. E.");  // equal counts, longer form wins

        std::vector<Record> more{citing("r1", 2006, {a}), citing("r2", 2006, {a}),
                                 citing("r3", 2006, {b})};
        result = citekit::consolidate_refs(more);
        REQUIRE(result.canon.size() == 1);
        CHECK(result.canon[0].initials == "JE");  // majority wins
    }
}

TEST_CASE("twelve variants of one landmark reference consolidate") {
    std::vector<std::string> wos_lines{
        "Hirsch JE, 2005, P NATL ACAD SCI USA, V102, P16569, DOI 10.1073/pnas.0507655102",
        "Hirsch JE, 2005, P NATL ACAD SCI USA, V102, P16569",
        "Hirsch JE, 2005, P NATL ACAD SCI USA",
        "Hirsch J. E., 2005, P NAT AC SCI US",
        "HIRSCH JE, 2005, P NATL ACAD SCI USA, V102, P16569",
        "Hirsch J, 2005, P NATL ACAD SCI USA, V102, P16569",
        "Hirsch JE, 2005, PNAS, V102, P16569",
        "Hirsch J.E., 2005, P NATL ACAD SCI USA, V102, P16569",
    };
    std::vector<std::string> scopus_lines{
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) Proceedings of the National Academy of Sciences of the United States of "
        "America, 102 (46), pp. 16569-16572",
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) Proc Natl Acad Sci U S A, 102, pp. 16569-16572",
        "Hirsch, J.E., An index to quantify an individual's scientific research output "
        "(2005) PNAS, 102 (46), pp. 16569-16572",
        "Hirsch, J., An index to quantify an individual's scientific research output "
        "(2005) Proceedings of the National Academy of Sciences, 102, pp. 16569-16572",
    };
    std::vector<Record> records;
    int year = 2006;
    for (const auto& line : wos_lines)
        records.push_back(citing("w" + std::to_string(records.size()), year++,
                                 {citekit::parse_wos_ref(line)}));
    for (const auto& line : scopus_lines)
        records.push_back(citing("s" + std::to_string(records.size()), year++,
                                 {citekit::parse_scopus_ref(line)}));
    REQUIRE(records.size() == 12);

    auto result = citekit::consolidate_refs(records);
    REQUIRE(result.canon.size() == 1);
    const auto& c = result.canon[0];
    CHECK(c.surname == "Hirsch");
    CHECK(c.year == 2005);
    CHECK(c.volume == "102");
    CHECK(c.first_page == "16569");
    CHECK(c.variants.size() == 12);
    CHECK(c.total_citations() == 12);
}

TEST_CASE("consolidation bookkeeping") {
    SECTION("pair conservation and canon backfill") {
        std::mt19937 gen(20240011);
        for (int round = 0; round < 20; ++round) {
            std::vector<std::string> surnames{"Hirsch", "Walker", "Young"};
            std::vector<Record> records;
            long refs_total = 0;
            size_t n_records = 2 + gen() % 6;
            for (size_t i = 0; i < n_records; ++i) {
                std::vector<CitedRef> refs;
                size_t n_refs = gen() % 5;
                for (size_t j = 0; j < n_refs; ++j) {
                    refs.push_back(ref("frag " + std::to_string(round) + "-" +
                                           std::to_string(i) + "-" + std::to_string(j),
                                       surnames[gen() % 3], "J", 2000 + (int)(gen() % 3),
                                       "SOME JOURNAL", std::to_string(gen() % 4), "1"));
                    ++refs_total;
                }
                records.push_back(citing("r" + std::to_string(i), 2010, std::move(refs)));
            }
            auto result = citekit::consolidate_refs(records);
            CHECK(result.input_pairs == refs_total);
            CHECK(result.output_pairs == refs_total);
            long accounted = 0;
            for (const auto& c : result.canon) accounted += c.citing_pair_count();
            CHECK(accounted == refs_total);
            for (const auto& r : records)
                for (const auto& cr : r.cited_refs) CHECK(cr.canon.has_value());
            CHECK(result.canon.size() <= (size_t)refs_total);
        }
    }
    SECTION("all-distinct input preserves size") {
        std::vector<Record> records{citing(
            "r1", 2010,
            {ref("a", "Alpha", "A", 2001, "J ONE", "1", "1"),
             ref("b", "Beta", "B", 2002, "J TWO", "2", "2"),
             ref("c", "Gamma", "C", 2003, "J THREE", "3", "3")})};
        auto result = citekit::consolidate_refs(records);
        CHECK(result.canon.size() == 3);
    }
}

TEST_CASE("consolidation matches an all-pairs closure oracle") {
    std::mt19937 gen(20240012);
    std::vector<std::optional<int>> years{2005, 2006, std::nullopt};
    std::vector<std::optional<std::string>> sources{"P NATL ACAD SCI USA", "PNAS",
                                                    std::nullopt};
    std::vector<std::optional<std::string>> volumes{"102", "103", std::nullopt};
    std::vector<std::optional<std::string>> pages{"16569", "161", std::nullopt};
    std::vector<std::pair<std::string, std::string>> names{
        {"Hirsch", "JE"}, {"Hirsch", "J"}, {"Hirsch", "K"}, {"Walker", "JE"}};

    for (int round = 0; round < 60; ++round) {
        size_t n = 2 + gen() % 9;  // up to 10 variants
        std::vector<CitedRef> variants;
        std::vector<Record> records;
        for (size_t i = 0; i < n; ++i) {
            auto [surname, initials] = names[gen() % names.size()];
            auto v = ref("v" + std::to_string(round) + "-" + std::to_string(i), surname,
                         initials, years[gen() % years.size()],
                         sources[gen() % sources.size()], volumes[gen() % volumes.size()],
                         pages[gen() % pages.size()]);
            variants.push_back(v);
            records.push_back(citing("r" + std::to_string(i), 2010, {v}));
        }

        // closure over every year-compatible in-block pair above the threshold
        std::vector<size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto block_key = [](const CitedRef& r) {
            return citekit::text::fold(*r.surname) + "|" +
                   citekit::normalize_initials(*r.initials).substr(0, 1);
        };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                const auto &a = variants[i], &b = variants[j];
                if (block_key(a) != block_key(b)) continue;
                if (a.year && b.year && *a.year != *b.year) continue;
                auto sim = citekit::try_overall_similarity(a, b);
                if (sim && *sim > 0.80) parent[find(i)] = find(j);
            }
        std::map<size_t, std::set<std::string>> expected;
        for (size_t i = 0; i < n; ++i) expected[find(i)].insert(variants[i].raw);
        std::set<std::set<std::string>> expected_sets;
        for (auto& [root, members] : expected) expected_sets.insert(members);

        auto result = citekit::consolidate_refs(records);
        std::set<std::set<std::string>> actual_sets;
        for (const auto& c : result.canon) {
            std::set<std::string> members;
            for (const auto& v : c.variants) members.insert(v.ref.raw);
            actual_sets.insert(members);
        }
        REQUIRE(actual_sets == expected_sets);
    }
}

TEST_CASE("consolidation is order independent") {
    auto make_records = [](unsigned seed) {
        std::vector<Record> records;
        std::vector<CitedRef> pool{
            ref("a", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569"),
            ref("b", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA"),
            ref("c", "Hirsch", "JE", 2005, "PNAS", "102", "16569"),
            ref("d", "Walker", "A", 2010, "NATURE", "466", "761"),
            ref("e", "Walker", "A", 2010, "NATURE"),
            ref("f", "Young", "B", 1999, "SCIENCE", "5", "77"),
        };
        // each variant keeps a fixed citing record; only the order varies
        for (const auto& v : pool) records.push_back(citing("r-" + v.raw, 2011, {v}));
        std::mt19937 gen(seed);
        std::shuffle(records.begin(), records.end(), gen);
        return records;
    };
    auto first = make_records(1);
    auto second = make_records(99);
    auto third = make_records(1234);
    auto base = citekit::consolidate_refs(first);
    CHECK(canon_dump(citekit::consolidate_refs(second).canon) == canon_dump(base.canon));
    CHECK(canon_dump(citekit::consolidate_refs(third).canon) == canon_dump(base.canon));

    SECTION("and thread-count independent") {
        auto serial = make_records(7);
        auto parallel = make_records(7);
        citekit::LinkOptions one{0.80, 1}, four{0.80, 4};
        CHECK(canon_dump(citekit::consolidate_refs(serial, one).canon) ==
              canon_dump(citekit::consolidate_refs(parallel, four).canon));
    }
}

TEST_CASE("canonical reference store roundtrip") {
    std::vector<Record> records{
        citing("c1", 2006,
               {ref("a", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569")}),
        citing("c2", 2007, {ref("b", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA")})};
    auto result = citekit::consolidate_refs(records);
    std::string dump = canon_dump(result.canon);
    CHECK_THAT(dump, ContainsSubstring("\"schema\":\"canonref/1\""));

    std::istringstream is(dump);
    auto again = citekit::read_canonref_store(is);
    CHECK(canon_dump(again) == dump);

    std::istringstream bad("{\"schema\":\"canonref/9\",\"id\":\"x\"}\n");
    CHECK_THROWS_WITH(citekit::read_canonref_store(bad), ContainsSubstring("canonref/9"));
}

TEST_CASE("variant map export") {
    std::vector<Record> records{
        citing("c1", 2006,
               {ref("form one", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569")}),
        citing("c2", 2007,
               {ref("form one", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA", "102", "16569"),
                ref("form two", "Hirsch", "JE", 2005, "P NATL ACAD SCI USA")})};
    auto result = citekit::consolidate_refs(records);
    std::ostringstream os;
    citekit::write_variant_map(os, result.canon);
    auto text = os.str();
    CHECK_THAT(text, ContainsSubstring("variant_raw,canonical_id,similarity_to_medoid"));
    CHECK_THAT(text, ContainsSubstring("form one,r000000,1.000000"));
    CHECK_THAT(text, ContainsSubstring("form two,r000000,"));
}
