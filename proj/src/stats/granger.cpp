#include "tweetmarket/stats/granger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/stats/distributions.hpp"
#include "tweetmarket/stats/ljung_box.hpp"
#include "tweetmarket/stats/ols.hpp"

namespace tweetmarket::stats {

namespace {

Eigen::MatrixXd lag_design(std::span<const double> effect, std::span<const double> cause,
                           std::size_t p, bool with_cause) {
    const std::size_t n = effect.size();
    const auto rows = static_cast<Eigen::Index>(n - p);
    const auto cols = static_cast<Eigen::Index>(1 + p * (with_cause ? 2 : 1));
    Eigen::MatrixXd design(rows, cols);
    for (std::size_t t = p; t < n; ++t) {
        const auto r = static_cast<Eigen::Index>(t - p);
        design(r, 0) = 1.0;
        for (std::size_t j = 1; j <= p; ++j) {
            design(r, static_cast<Eigen::Index>(j)) = effect[t - j];
            if (with_cause) design(r, static_cast<Eigen::Index>(p + j)) = cause[t - j];
        }
    }
    return design;
}

std::vector<double> difference(std::span<const double> x) {
    std::vector<double> d;
    d.reserve(x.size() - 1);
    for (std::size_t t = 1; t < x.size(); ++t) d.push_back(x[t] - x[t - 1]);
    return d;
}

template <typename F>
auto run_step(const char* step, F&& f) {
    try {
        return f();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(step, e.what());
    }
}

}  // namespace

GrangerResult granger_test(std::span<const double> cause, std::span<const double> effect,
                           std::size_t order, double level) {
    if (cause.size() != effect.size()) throw ValidationError("granger: series lengths differ");
    if (order < 1) throw ValidationError("granger: order must be >= 1");
    const std::size_t n = effect.size();
    if (n <= order || n - order < 2 * order + 2) {
        throw ValidationError("granger: " + std::to_string(n) +
                              " observations are too few for order " + std::to_string(order));
    }
    const std::vector<double> y(effect.begin() + static_cast<std::ptrdiff_t>(order), effect.end());
    const Projection restricted = project(y, lag_design(effect, cause, order, false));
    const Projection unrestricted = project(y, lag_design(effect, cause, order, true));

    GrangerResult out;
    out.order = order;
    out.observations = y.size();
    out.ssr_restricted = restricted.ssr;
    out.ssr_unrestricted = unrestricted.ssr;
    out.dof1 = static_cast<double>(unrestricted.rank - restricted.rank);
    out.dof2 = static_cast<double>(y.size() - unrestricted.rank);
    out.report.test = "granger_f";
    out.report.level = level;

    if (out.dof1 == 0.0) {
        out.report.statistic = 0.0;
        out.report.p_value = 1.0;
        out.report.reject = false;
        out.report.note = "cause lags are collinear with the restricted regressors";
        return out;
    }
    const double num = std::max(restricted.ssr - unrestricted.ssr, 0.0) / out.dof1;
    const double den = unrestricted.ssr / out.dof2;
    if (den == 0.0) {
        out.report.statistic = num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    } else {
        out.report.statistic = num / den;
    }
    out.report.p_value = f_sf(out.report.statistic, out.dof1, out.dof2);
    out.report.reject = *out.report.p_value < level;
    return out;
}

GrangerPipelineReport granger_pipeline(std::span<const double> x, std::span<const double> y,
                                       const PipelineOptions& options) {
    if (x.size() != y.size()) {
        throw PipelineError("input", "series lengths differ");
    }
    GrangerPipelineReport report;

    // Step 1: stationarity.
    auto check = [&](std::span<const double> s, const char* name) {
        StationarityCheck c;
        c.initial = adf_test_auto(s, options.level);
        if (!c.initial.report.reject) {
            const auto d = difference(s);
            c.after_difference = adf_test_auto(d, options.level);
            c.differenced = true;
            if (!c.after_difference->report.reject) {
                throw PipelineError("stationarity", std::string(name) +
                                                        " is non-stationary after first difference");
            }
        }
        return c;
    };
    report.x = run_step("stationarity", [&] { return check(x, "x"); });
    report.y = run_step("stationarity", [&] { return check(y, "y"); });

    // Differencing drops one observation; the other series drops its first value to stay aligned.
    const bool any_diff = report.x.differenced || report.y.differenced;
    auto prepare = [&](std::span<const double> s, bool diff) {
        if (diff) return difference(s);
        return std::vector<double>(s.begin() + (any_diff ? 1 : 0), s.end());
    };
    const std::vector<double> xs = prepare(x, report.x.differenced);
    const std::vector<double> ys = prepare(y, report.y.differenced);
    report.observations = xs.size();

    Eigen::MatrixXd data(static_cast<Eigen::Index>(xs.size()), 2);
    for (std::size_t t = 0; t < xs.size(); ++t) {
        data(static_cast<Eigen::Index>(t), 0) = xs[t];
        data(static_cast<Eigen::Index>(t), 1) = ys[t];
    }

    // Step 2: order selection.
    report.selection =
        run_step("order_selection", [&] { return var_select_order(data, options.max_order); });
    report.order = report.selection.chosen;

    // Step 3: fit.
    const VarModel model = run_step("var_fit", [&] { return fit_var(data, report.order); });

    // Step 4: residual autocorrelation, per equation.
    run_step("ljung_box", [&] {
        const std::size_t lags =
            std::min<std::size_t>(options.ljung_box_lags, model.observations / 5 > 0
                                                              ? model.observations / 5
                                                              : 1);
        for (Eigen::Index eq = 0; eq < 2; ++eq) {
            const Eigen::VectorXd r = model.residuals.col(eq);
            const std::span<const double> rs(r.data(), static_cast<std::size_t>(r.size()));
            try {
                report.ljung_box.push_back(ljung_box(rs, lags, options.level));
            } catch (const DegenerateInputError& e) {
                TestReport degenerate;
                degenerate.test = "ljung_box";
                degenerate.level = options.level;
                degenerate.note = e.what();
                report.ljung_box.push_back(degenerate);
            }
        }
        return 0;
    });

    // Step 5: Granger F-tests in both directions.
    report.x_causes_y =
        run_step("granger", [&] { return granger_test(xs, ys, report.order, options.level); });
    report.y_causes_x =
        run_step("granger", [&] { return granger_test(ys, xs, report.order, options.level); });
    return report;
}

}  // namespace tweetmarket::stats
