#pragma once

// Dense truncated SVD via cyclic Jacobi eigendecomposition of the smaller
// Gram matrix. Sized for labeling workloads (a few hundred terms by a few
// hundred documents), not for general numerics.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace citekit {

using Matrix = std::vector<std::vector<double>>;  // row-major

// Eigendecomposition of a symmetric matrix. On return s's diagonal holds the
// eigenvalues and evec's columns the corresponding eigenvectors.
inline void jacobi_eigen(Matrix& s, Matrix& evec) {
    size_t n = s.size();
    evec.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) evec[i][i] = 1.0;
    if (n < 2) return;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (size_t p = 0; p < n; ++p) {
            diag += s[p][p] * s[p][p];
            for (size_t q = p + 1; q < n; ++q) off += s[p][q] * s[p][q];
        }
        if (off <= 1e-24 * std::max(1.0, diag)) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(s[p][q]) < 1e-300) continue;
                double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    double ekp = evec[k][p], ekq = evec[k][q];
                    evec[k][p] = c * ekp - sn * ekq;
                    evec[k][q] = sn * ekp + c * ekq;
                }
            }
        }
    }
}

struct Svd {
    std::vector<double> singular_values;     // non-increasing
    std::vector<std::vector<double>> left;   // per value: length = row count
    std::vector<std::vector<double>> right;  // per value: length = column count
    size_t rank = 0;
};

// Rank-limited SVD of an m x n matrix. Eigendecomposes A^T A or A A^T,
// whichever is smaller, and recovers the other factor by projection. Each
// left vector's largest-magnitude entry is made positive so signs are stable.
inline Svd truncated_svd(const Matrix& a, size_t max_rank) {
    Svd out;
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (m == 0 || n == 0) return out;

    bool use_cols = n <= m;  // gram over the smaller side
    size_t g = use_cols ? n : m;
    Matrix gram(g, std::vector<double>(g, 0.0));
    if (use_cols) {
        for (size_t i = 0; i < g; ++i)
            for (size_t j = i; j < g; ++j) {
                double v = 0.0;
                for (size_t r = 0; r < m; ++r) v += a[r][i] * a[r][j];
                gram[i][j] = gram[j][i] = v;
            }
    } else {
        for (size_t i = 0; i < g; ++i)
            for (size_t j = i; j < g; ++j) {
                double v = std::inner_product(a[i].begin(), a[i].end(), a[j].begin(), 0.0);
                gram[i][j] = gram[j][i] = v;
            }
    }

    Matrix evec;
    jacobi_eigen(gram, evec);
    std::vector<std::pair<double, size_t>> eig(g);
    for (size_t i = 0; i < g; ++i) eig[i] = {gram[i][i], i};
    std::sort(eig.begin(), eig.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });

    double largest = eig.empty() ? 0.0 : std::max(0.0, eig[0].first);
    double tol = std::sqrt(largest) * static_cast<double>(std::max(m, n)) * 1e-12;
    for (size_t e = 0; e < g && out.singular_values.size() < max_rank; ++e) {
        double lambda = eig[e].first;
        if (lambda <= 0.0) break;
        double sigma = std::sqrt(lambda);
        if (sigma <= tol || sigma <= 1e-12) break;
        size_t col = eig[e].second;
        std::vector<double> small(g);
        for (size_t i = 0; i < g; ++i) small[i] = evec[i][col];
        std::vector<double> u(m, 0.0), v(n, 0.0);
        if (use_cols) {
            v = small;
            for (size_t r = 0; r < m; ++r) {
                double acc = 0.0;
                for (size_t c = 0; c < n; ++c) acc += a[r][c] * v[c];
                u[r] = acc / sigma;
            }
        } else {
            u = small;
            for (size_t c = 0; c < n; ++c) {
                double acc = 0.0;
                for (size_t r = 0; r < m; ++r) acc += a[r][c] * u[r];
                v[c] = acc / sigma;
            }
        }
        size_t peak = 0;
        for (size_t r = 1; r < m; ++r)
            if (std::fabs(u[r]) > std::fabs(u[peak])) peak = r;
        if (u[peak] < 0.0) {
            for (auto& x : u) x = -x;
            for (auto& x : v) x = -x;
        }
        out.singular_values.push_back(sigma);
        out.left.push_back(std::move(u));
        out.right.push_back(std::move(v));
    }
    out.rank = out.singular_values.size();
    return out;
}

}  // namespace citekit
