#pragma once

// Cluster labeling over the titles of citing documents: term extraction
// (stop-worded unigrams and bigrams), log-likelihood ratio association, and
// latent semantic indexing over a TF-IDF term-document matrix.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "citekit/svd.hpp"
#include "citekit/text.hpp"

namespace citekit {

inline const std::set<std::string>& stopwords() {
    static const std::set<std::string> words = {
        "a",       "about",   "above",  "after",   "again",  "against", "all",    "am",
        "an",      "and",     "any",    "are",     "as",     "at",      "be",     "because",
        "been",    "before",  "being",  "below",   "between","both",    "but",    "by",
        "can",     "cannot",  "could",  "did",     "do",     "does",    "doing",  "down",
        "during",  "each",    "few",    "for",     "from",   "further", "had",    "has",
        "have",    "having",  "he",     "her",     "here",   "hers",    "him",    "his",
        "how",     "i",       "if",     "in",      "into",   "is",      "it",     "its",
        "itself",  "just",    "more",   "most",    "my",     "no",      "nor",    "not",
        "now",     "of",      "off",    "on",      "once",   "only",    "or",     "other",
        "our",     "ours",    "out",    "over",    "own",    "same",    "she",    "should",
        "so",      "some",    "such",   "than",    "that",   "the",     "their",  "theirs",
        "them",    "then",    "there",  "these",   "they",   "this",    "those",  "through",
        "to",      "too",     "under",  "until",   "up",     "very",    "was",    "we",
        "were",    "what",    "when",   "where",   "which",  "while",   "who",    "whom",
        "why",     "will",    "with",   "would",   "you",    "your",    "yours",  "using",
        "based",   "toward",  "towards","via",     "among",  "within",  "upon",   "also",
    };
    return words;
}

// Lowercased tokens; hyphens survive inside a token ("h-index").
inline std::vector<std::string> tokenize_title(std::string_view title) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&]() {
        while (!current.empty() && current.front() == '-') current.erase(current.begin());
        while (!current.empty() && current.back() == '-') current.pop_back();
        if (!current.empty()) tokens.push_back(current);
        current.clear();
    };
    for (char raw : title) {
        char c = text::ascii_lower(raw);
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')
            current.push_back(c);
        else
            flush();
    }
    flush();
    return tokens;
}

// Unigrams and bigrams from a title; stopwords are dropped and break bigram
// adjacency; pure numbers and single characters are dropped.
inline std::set<std::string> extract_terms(std::string_view title) {
    std::set<std::string> terms;
    auto tokens = tokenize_title(title);
    auto valid = [](const std::string& t) {
        return t.size() >= 2 && !text::all_digits(t) && !stopwords().count(t);
    };
    std::string prev;
    for (const auto& t : tokens) {
        if (!valid(t)) {
            prev.clear();
            continue;
        }
        terms.insert(t);
        if (!prev.empty()) terms.insert(prev + " " + t);
        prev = t;
    }
    return terms;
}

// Dunning's G^2 over a 2x2 contingency table; zero observations contribute 0.
inline double llr_score(long k11, long k12, long k21, long k22) {
    long n = k11 + k12 + k21 + k22;
    if (n == 0) return 0.0;
    double row1 = static_cast<double>(k11 + k12), row2 = static_cast<double>(k21 + k22);
    double col1 = static_cast<double>(k11 + k21), col2 = static_cast<double>(k12 + k22);
    double total = static_cast<double>(n);
    auto cell = [total](double o, double r, double c) {
        if (o <= 0.0) return 0.0;
        double e = r * c / total;
        return o * std::log(o / e);
    };
    double g = 2.0 * (cell(static_cast<double>(k11), row1, col1) +
                      cell(static_cast<double>(k12), row1, col2) +
                      cell(static_cast<double>(k21), row2, col1) +
                      cell(static_cast<double>(k22), row2, col2));
    return std::max(0.0, g);
}

struct LabelDoc {
    std::string id;
    std::set<std::string> terms;
    std::map<std::string, long> counts;  // term -> occurrences (bigrams included)
};

inline LabelDoc make_label_doc(const std::string& id, std::string_view title) {
    LabelDoc doc;
    doc.id = id;
    doc.terms = extract_terms(title);
    auto tokens = tokenize_title(title);
    auto valid = [](const std::string& t) {
        return t.size() >= 2 && !text::all_digits(t) && !stopwords().count(t);
    };
    std::string prev;
    for (const auto& t : tokens) {
        if (!valid(t)) {
            prev.clear();
            continue;
        }
        ++doc.counts[t];
        if (!prev.empty()) ++doc.counts[prev + " " + t];
        prev = t;
    }
    return doc;
}

// Ranks terms by G^2 association between term presence and membership of the
// citing document in the cluster. Only positively associated terms (observed
// in-cluster rate above the corpus rate) are returned.
inline std::vector<std::pair<std::string, double>> label_llr(
    const std::vector<LabelDoc>& universe, const std::set<std::string>& in_cluster_ids,
    size_t top_n = 10) {
    long n_in = 0;
    std::map<std::string, std::pair<long, long>> by_term;  // term -> (in_df, out_df)
    for (const auto& doc : universe) {
        bool inside = in_cluster_ids.count(doc.id) > 0;
        if (inside) ++n_in;
        for (const auto& t : doc.terms) {
            auto& e = by_term[t];
            if (inside)
                ++e.first;
            else
                ++e.second;
        }
    }
    long n_total = static_cast<long>(universe.size());
    long n_out = n_total - n_in;
    if (n_in == 0 || n_total == 0) return {};

    std::vector<std::pair<std::string, double>> scored;
    for (const auto& [term, df] : by_term) {
        long k11 = df.first, k21 = df.second;
        long k12 = n_in - k11, k22 = n_out - k21;
        double in_rate = static_cast<double>(k11) / static_cast<double>(n_in);
        double overall = static_cast<double>(k11 + k21) / static_cast<double>(n_total);
        if (in_rate <= overall) continue;
        scored.emplace_back(term, llr_score(k11, k12, k21, k22));
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (scored.size() > top_n) scored.resize(top_n);
    return scored;
}

struct LsiOptions {
    size_t max_rank = 5;
    size_t vocab_cap = 300;   // most document-frequent terms kept
    size_t terms_per_dim = 5;
};

// LSI labels from the cluster's citing documents: TF-IDF matrix (idf
// smoothed as 1 + ln(N/df)), truncated SVD, then per dimension the terms
// with the largest absolute loadings.
inline std::vector<std::vector<std::pair<std::string, double>>> label_lsi(
    const std::vector<LabelDoc>& docs, const LsiOptions& opts = {}) {
    if (docs.empty()) return {};
    std::map<std::string, long> df;
    for (const auto& doc : docs)
        for (const auto& t : doc.terms) ++df[t];
    std::vector<std::pair<std::string, long>> vocab_ranked(df.begin(), df.end());
    std::sort(vocab_ranked.begin(), vocab_ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (vocab_ranked.size() > opts.vocab_cap) vocab_ranked.resize(opts.vocab_cap);
    std::vector<std::string> vocab;
    vocab.reserve(vocab_ranked.size());
    for (const auto& [t, d] : vocab_ranked) vocab.push_back(t);
    std::sort(vocab.begin(), vocab.end());
    if (vocab.empty()) return {};
    std::map<std::string, size_t> term_index;
    for (size_t i = 0; i < vocab.size(); ++i) term_index[vocab[i]] = i;

    double n_docs = static_cast<double>(docs.size());
    Matrix a(vocab.size(), std::vector<double>(docs.size(), 0.0));
    for (size_t d = 0; d < docs.size(); ++d) {
        for (const auto& [term, count] : docs[d].counts) {
            auto it = term_index.find(term);
            if (it == term_index.end()) continue;
            double idf = 1.0 + std::log(n_docs / static_cast<double>(df[term]));
            a[it->second][d] = static_cast<double>(count) * idf;
        }
    }
    Svd svd = truncated_svd(a, opts.max_rank);

    std::vector<std::vector<std::pair<std::string, double>>> dims;
    for (size_t k = 0; k < svd.rank; ++k) {
        std::vector<std::pair<std::string, double>> loadings;
        for (size_t t = 0; t < vocab.size(); ++t)
            if (svd.left[k][t] != 0.0) loadings.emplace_back(vocab[t], svd.left[k][t]);
        std::sort(loadings.begin(), loadings.end(), [](const auto& x, const auto& y) {
            double ax = std::fabs(x.second), ay = std::fabs(y.second);
            if (ax != ay) return ax > ay;
            return x.first < y.first;
        });
        if (loadings.size() > opts.terms_per_dim) loadings.resize(opts.terms_per_dim);
        dims.push_back(std::move(loadings));
    }
    return dims;
}

}  // namespace citekit
