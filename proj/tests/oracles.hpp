// Test-only reference implementations, deliberately independent of the
// library's numerical paths: plain-loop linear algebra instead of Eigen
// decompositions, and a from-scratch recursion for the simulator.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Vector = std::vector<double>;

// Gauss-Jordan solve with partial pivoting.
inline Vector solve_dense(Matrix a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) throw std::runtime_error("oracle: singular system");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Brute-force normal equations: beta = (X'X)^-1 X'y.
inline Vector normal_equations(const Matrix& X, const Vector& y) {
    const std::size_t n = X.size();
    const std::size_t k = X[0].size();
    Matrix xtx(k, Vector(k, 0.0));
    Vector xty(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < n; ++t) xtx[i][j] += X[t][i] * X[t][j];
        for (std::size_t t = 0; t < n; ++t) xty[i] += X[t][i] * y[t];
    }
    return solve_dense(xtx, xty);
}

inline double ssr_of(const Matrix& X, const Vector& y, const Vector& beta) {
    double ssr = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        double fit = 0.0;
        for (std::size_t j = 0; j < beta.size(); ++j) fit += X[t][j] * beta[j];
        ssr += (y[t] - fit) * (y[t] - fit);
    }
    return ssr;
}

// Closed-form EC recursion with fixed coefficients: an independent rendering
// of  dy_t = c + sum_i a_i dy_{t-i} + sum_k sum_j g_kj dx_{k,t-j}
//          + l1 y_{t-1} + sum_k l_{k+1} x_{k,t-1}.
// x_paths[k][g] must cover g = 0..periods-1; pre-sample x values equal
// x_paths[k][0] and pre-sample dy values are zero; y starts at y0.
inline Vector ecm_recursion(double intercept, const Vector& dy_lag_coefs,
                            const std::vector<Vector>& dx_coefs, double lambda1,
                            const Vector& level_coefs, const std::vector<Vector>& x_paths,
                            double y0, int periods) {
    const std::size_t nreg = x_paths.size();
    auto x_at = [&](std::size_t k, int g) {
        if (g < 0) return x_paths[k][0];
        return x_paths[k][static_cast<std::size_t>(g)];
    };
    Vector dy_hist(dy_lag_coefs.size(), 0.0);
    Vector out;
    double y_prev = y0;
    for (int g = 0; g < periods; ++g) {
        double dy = intercept;
        for (std::size_t i = 0; i < dy_lag_coefs.size(); ++i) dy += dy_lag_coefs[i] * dy_hist[i];
        for (std::size_t k = 0; k < nreg; ++k)
            for (std::size_t j = 0; j < dx_coefs[k].size(); ++j)
                dy += dx_coefs[k][j] * (x_at(k, g - static_cast<int>(j)) -
                                        x_at(k, g - static_cast<int>(j) - 1));
        dy += lambda1 * y_prev;
        for (std::size_t k = 0; k < nreg; ++k) dy += level_coefs[k] * x_at(k, g - 1);
        const double y_new = y_prev + dy;
        for (std::size_t i = dy_hist.size(); i-- > 1;) dy_hist[i] = dy_hist[i - 1];
        if (!dy_hist.empty()) dy_hist[0] = y_new - y_prev;
        out.push_back(y_new);
        y_prev = y_new;
    }
    return out;
}

// Elementwise Gaussian kernel, double loop.
inline Matrix kernel_loop(const Matrix& X, double sigma2) {
    const std::size_t n = X.size();
    Matrix K(n, Vector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < X[i].size(); ++c)
                d2 += (X[i][c] - X[j][c]) * (X[i][c] - X[j][c]);
            K[i][j] = std::exp(-d2 / sigma2);
        }
    return K;
}

}  // namespace oracle
