#pragma once

// Brute-force reference implementations used only by tests. Each one follows the
// textbook definition directly and shares no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline std::vector<double> returns(const std::vector<double>& p) {
    std::vector<double> r;
    for (std::size_t d = 1; d < p.size(); ++d) r.push_back((p[d] - p[d - 1]) / p[d - 1]);
    return r;
}

inline std::optional<double> polarity(long long pos, long long neg) {
    if (pos + neg == 0) return std::nullopt;
    return double(pos - neg) / double(pos + neg);
}

// Median by full sort of an odd-sized window.
inline double median(std::vector<double> w) {
    std::sort(w.begin(), w.end());
    return w[w.size() / 2];
}

inline double outlier_fraction(const std::vector<double>& tw, std::size_t d0, std::size_t half,
                               double n_min) {
    std::vector<double> w(tw.begin() + long(d0 - half), tw.begin() + long(d0 + half + 1));
    const double base = median(w);
    return (tw[d0] - base) / std::max(base, n_min);
}

// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        if (a[piv][c] == 0.0) throw std::runtime_error("oracle: singular system");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

// OLS coefficients from the normal equations X'X b = X'y; `columns` excludes the intercept.
inline std::vector<double> ols_normal_equations(const std::vector<double>& y,
                                                const std::vector<std::vector<double>>& columns) {
    const std::size_t n = y.size();
    const std::size_t k = columns.size() + 1;
    auto col = [&](std::size_t j, std::size_t t) { return j == 0 ? 1.0 : columns[j - 1][t]; };
    std::vector<std::vector<double>> xtx(k, std::vector<double>(k, 0.0));
    std::vector<double> xty(k, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            xty[i] += col(i, t) * y[t];
            for (std::size_t j = 0; j < k; ++j) xtx[i][j] += col(i, t) * col(j, t);
        }
    }
    return gauss_solve(xtx, xty);
}

struct MarketModel {
    double alpha, beta, sigma2;
};

// Closed-form simple regression plus the 1/(L-2) variance.
inline MarketModel market_model(const std::vector<double>& stock, const std::vector<double>& mkt) {
    const double n = double(stock.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < stock.size(); ++i) {
        sx += mkt[i];
        sy += stock[i];
        sxx += mkt[i] * mkt[i];
        sxy += mkt[i] * stock[i];
    }
    const double beta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double alpha = (sy - beta * sx) / n;
    double ssr = 0;
    for (std::size_t i = 0; i < stock.size(); ++i) {
        const double e = stock[i] - alpha - beta * mkt[i];
        ssr += e * e;
    }
    return {alpha, beta, ssr / (n - 2)};
}

struct StudyRow {
    double abar, car, var_car, theta;
};

// Cross-event aggregation straight from the definitions. ar[i][tau] per event.
inline std::vector<StudyRow> aggregate(const std::vector<std::vector<double>>& ar,
                                       const std::vector<double>& sigma2) {
    const std::size_t n = ar.size();
    const std::size_t lags = ar.front().size();
    std::vector<StudyRow> rows;
    for (std::size_t tau = 0; tau < lags; ++tau) {
        StudyRow row{};
        for (std::size_t i = 0; i < n; ++i) row.abar += ar[i][tau];
        row.abar /= double(n);
        for (std::size_t s = 0; s <= tau; ++s) {
            double a = 0;
            for (std::size_t i = 0; i < n; ++i) a += ar[i][s];
            row.car += a / double(n);
        }
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += double(tau + 1) * sigma2[i];
        row.var_car = sum / double(n * n);
        row.theta = row.car / std::sqrt(row.var_car);
        rows.push_back(row);
    }
    return rows;
}

// Composite Simpson rule with `panels` (even) sub-intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels = 20000) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Adaptive Simpson with an absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 50) {
    const std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
            int d) -> double {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid);
        const double rm = 0.5 * (mid + hi);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (mid - lo) / 6.0 * (flo + 4 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4 * frm + fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15 * eps) {
            return left + right + (left + right - whole) / 15.0;
        }
        return rec(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) +
               rec(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
    };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4 * fm + fb), tol, depth);
}

inline double chi2_density(double x, double k) {
    if (x <= 0) return 0.0;
    return std::exp((k / 2 - 1) * std::log(x) - x / 2 - (k / 2) * std::log(2.0) - std::lgamma(k / 2));
}

// Type-7 (linear interpolation) quantile by full sort.
inline double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double h = (double(v.size()) - 1) * p;
    const auto lo = std::size_t(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - double(lo)) * (v[hi] - v[lo]);
}

inline bool close_rel(double a, double b, double rel) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= rel * scale || std::abs(a - b) <= 1e-300;
}

}  // namespace oracle
