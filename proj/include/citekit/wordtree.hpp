#pragma once

// Word-tree extraction from keyword co-occurrence. Terms above a frequency
// threshold form the vertex set; each term attaches to the strictly more
// frequent co-occurring term with the highest z-scored co-occurrence weight,
// and terms with no eligible parent attach to the most frequent term, which
// roots the tree.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "citekit/record.hpp"
#include "citekit/text.hpp"

namespace citekit {

enum class KeywordField { DE, WC };
enum class TermKind { KEYWORD, CATEGORY };

inline const char* to_string(TermKind k) {
    return k == TermKind::KEYWORD ? "keyword" : "category";
}

struct WordTreeNode {
    std::string term;
    TermKind kind = TermKind::KEYWORD;
    long frequency = 0;
    long attachment_weight = 0;  // co-occurrence weight to the parent; 0 at the root
    std::vector<WordTreeNode> children;

    size_t node_count() const {
        size_t n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }
};

struct KeywordFrequencies {
    std::map<std::string, std::map<int, long>> per_year;
    std::map<std::string, long> totals;
};

inline KeywordFrequencies keyword_frequencies(const std::vector<Record>& records,
                                              KeywordField field) {
    KeywordFrequencies out;
    for (const auto& r : records) {
        const auto& values =
            field == KeywordField::DE ? r.author_keywords : r.subject_categories;
        for (const auto& raw : values) {
            std::string term = text::fold(text::trim(raw));
            if (term.empty()) continue;
            ++out.totals[term];
            if (r.year) ++out.per_year[term][*r.year];
        }
    }
    return out;
}

namespace detail {

using Term = std::pair<TermKind, std::string>;

struct TreeBuilder {
    std::map<Term, long> freq;
    std::map<std::pair<Term, Term>, long> cooc;  // key: lexicographically ordered pair
    long n_records = 0;
    bool use_zscore = true;

    void add_record(const std::set<Term>& terms) {
        if (terms.empty()) return;
        ++n_records;
        for (const auto& t : terms) ++freq[t];
        for (auto a = terms.begin(); a != terms.end(); ++a) {
            auto b = a;
            for (++b; b != terms.end(); ++b) ++cooc[{*a, *b}];
        }
    }

    long weight(const Term& a, const Term& b) const {
        auto it = cooc.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
        return it == cooc.end() ? 0 : it->second;
    }

    double score(const Term& child, const Term& parent) const {
        long w = weight(child, parent);
        if (!use_zscore) return static_cast<double>(w);
        double n = static_cast<double>(n_records);
        double fa = static_cast<double>(freq.at(child));
        double fb = static_cast<double>(freq.at(parent));
        double mu = fa * fb / n;
        double var = mu * (1.0 - fa / n) * (1.0 - fb / n);
        if (var <= 0.0) return 0.0;
        return (static_cast<double>(w) - mu) / std::sqrt(var);
    }

    // keep: per-kind admission predicate over total frequency
    template <typename Keep>
    WordTreeNode build(Keep keep) const {
        std::vector<Term> vocab;
        for (const auto& [t, f] : freq)
            if (keep(t.first, f)) vocab.push_back(t);
        if (vocab.empty()) throw Error("word tree: no terms meet the frequency threshold");

        Term root = vocab.front();
        for (const auto& t : vocab)
            if (freq.at(t) > freq.at(root)) root = t;

        std::map<Term, Term> parent_of;
        for (const auto& t : vocab) {
            if (t == root) continue;
            std::optional<Term> best;
            double best_score = 0.0;
            for (const auto& cand : vocab) {
                if (freq.at(cand) <= freq.at(t)) continue;
                if (weight(t, cand) < 1) continue;
                double s = score(t, cand);
                bool better = !best || s > best_score;
                if (!better && best && s == best_score) {
                    if (freq.at(cand) != freq.at(*best))
                        better = freq.at(cand) > freq.at(*best);
                    else
                        better = cand < *best;
                }
                if (better) {
                    best = cand;
                    best_score = s;
                }
            }
            parent_of[t] = best.value_or(root);
        }

        std::map<Term, std::vector<Term>> children_of;
        for (const auto& [child, parent] : parent_of) children_of[parent].push_back(child);
        for (auto& [parent, kids] : children_of) {
            std::sort(kids.begin(), kids.end(), [&](const Term& a, const Term& b) {
                long wa = weight(a, parent), wb = weight(b, parent);
                if (wa != wb) return wa > wb;
                return a < b;
            });
        }
        return assemble(root, children_of, 0);
    }

    WordTreeNode assemble(const Term& t, const std::map<Term, std::vector<Term>>& children_of,
                          long attach_weight) const {
        WordTreeNode node;
        node.kind = t.first;
        node.term = t.second;
        node.frequency = freq.at(t);
        node.attachment_weight = attach_weight;
        auto it = children_of.find(t);
        if (it != children_of.end())
            for (const auto& child : it->second)
                node.children.push_back(assemble(child, children_of, weight(child, t)));
        return node;
    }
};

inline std::set<Term> record_terms(const Record& r, bool keywords, bool categories) {
    std::set<Term> terms;
    if (keywords)
        for (const auto& raw : r.author_keywords) {
            std::string t = text::fold(text::trim(raw));
            if (!t.empty()) terms.insert({TermKind::KEYWORD, t});
        }
    if (categories)
        for (const auto& raw : r.subject_categories) {
            std::string t = text::fold(text::trim(raw));
            if (!t.empty()) terms.insert({TermKind::CATEGORY, t});
        }
    return terms;
}

}  // namespace detail

inline WordTreeNode build_word_tree(const std::vector<Record>& records, KeywordField field,
                                    long min_frequency, bool use_zscore = true) {
    if (min_frequency < 1) throw Error("word tree: minimum frequency must be >= 1");
    detail::TreeBuilder builder;
    builder.use_zscore = use_zscore;
    bool keywords = field == KeywordField::DE;
    for (const auto& r : records)
        builder.add_record(detail::record_terms(r, keywords, !keywords));
    return builder.build([&](TermKind, long f) { return f >= min_frequency; });
}

inline WordTreeNode hybrid_tree(const std::vector<Record>& records, long category_min,
                                long keyword_min, bool use_zscore = true) {
    if (category_min < 1 || keyword_min < 1)
        throw Error("word tree: minimum frequency must be >= 1");
    detail::TreeBuilder builder;
    builder.use_zscore = use_zscore;
    for (const auto& r : records) builder.add_record(detail::record_terms(r, true, true));
    return builder.build([&](TermKind kind, long f) {
        return f >= (kind == TermKind::CATEGORY ? category_min : keyword_min);
    });
}

inline nlohmann::ordered_json to_json(const WordTreeNode& node) {
    nlohmann::ordered_json j;
    j["term"] = node.term;
    j["kind"] = to_string(node.kind);
    j["frequency"] = node.frequency;
    if (node.attachment_weight > 0) j["weight"] = node.attachment_weight;
    nlohmann::ordered_json children = nlohmann::ordered_json::array();
    for (const auto& c : node.children) children.push_back(to_json(c));
    if (!children.empty()) j["children"] = children;
    return j;
}

inline nlohmann::ordered_json wordtree_json(const WordTreeNode& root) {
    nlohmann::ordered_json j;
    j["schema"] = "wordtree/1";
    j["root"] = to_json(root);
    return j;
}

inline void write_tree_outline(std::ostream& os, const WordTreeNode& node, int depth = 0) {
    for (int i = 0; i < depth; ++i) os << "  ";
    os << node.term << " (" << node.frequency << ")\n";
    for (const auto& c : node.children) write_tree_outline(os, c, depth + 1);
}

}  // namespace citekit
