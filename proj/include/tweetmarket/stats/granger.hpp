#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweetmarket/stats/adf.hpp"
#include "tweetmarket/stats/test_report.hpp"
#include "tweetmarket/stats/var.hpp"

namespace tweetmarket::stats {

struct GrangerResult {
    TestReport report;
    std::size_t order = 0;
    std::size_t observations = 0;
    double dof1 = 0.0;
    double dof2 = 0.0;
    double ssr_restricted = 0.0;
    double ssr_unrestricted = 0.0;
};

/// F-test of whether `cause` Granger-causes `effect` at lag `order`:
///   restricted:   effect_t ~ 1 + effect_{t-1..t-p}
///   unrestricted: effect_t ~ 1 + effect_{t-1..t-p} + cause_{t-1..t-p}
///   F = ((SSR_r - SSR_u)/dof1) / (SSR_u/dof2), dof1 = p, dof2 = T - 2p - 1 (T = n - p).
/// Collinear regressors reduce dof1/dof2 to the rank difference; dof1 = 0 reports F = 0.
GrangerResult granger_test(std::span<const double> cause, std::span<const double> effect,
                           std::size_t order, double level = 0.05);

/// Raised when a step of the Granger pipeline fails; `step()` names the step.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string step, const std::string& what)
        : std::runtime_error("granger pipeline step '" + step + "': " + what),
          step_(std::move(step)) {}
    const std::string& step() const noexcept { return step_; }

private:
    std::string step_;
};

struct PipelineOptions {
    std::size_t max_order = 10;
    double level = 0.05;
    std::size_t ljung_box_lags = 10;
};

struct StationarityCheck {
    AdfResult initial;
    std::optional<AdfResult> after_difference;
    bool differenced = false;
};

struct GrangerPipelineReport {
    StationarityCheck x;
    StationarityCheck y;
    std::size_t observations = 0;  // length of the (possibly differenced) aligned series
    OrderSelection selection;
    std::size_t order = 0;
    std::vector<TestReport> ljung_box;  // one per VAR equation: [x, y]
    GrangerResult x_causes_y;
    GrangerResult y_causes_x;
};

/// Stationarity (ADF, difference once if needed) -> VAR order selection -> VAR fit ->
/// Ljung-Box on the VAR residuals -> Granger F-tests in both directions.
/// A series still non-stationary after one difference aborts with PipelineError("stationarity").
GrangerPipelineReport granger_pipeline(std::span<const double> x, std::span<const double> y,
                                       const PipelineOptions& options = {});

}  // namespace tweetmarket::stats
