#include "tweetmarket/study/aggregate.hpp"

#include <cmath>
#include <limits>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::study {

EventStudyResult aggregate(std::span<const EventAbnormalReturns> events, events::PolarityClass cls,
                           const StudyWindows& windows) {
    windows.validate();
    const std::size_t lags = windows.lag_count();
    EventStudyResult result;
    result.polarity_class = cls;
    std::vector<const EventAbnormalReturns*> members;
    for (const auto& e : events) {
        if (e.event.polarity_class != cls) continue;
        if (e.ar.size() != lags) throw ValidationError("abnormal return count does not match the event window");
        members.push_back(&e);
    }
    result.n_events = members.size();
    if (members.empty()) return result;

    const double n = double(members.size());
    double sigma_sum = 0;
    for (const auto* e : members) sigma_sum += e->model.residual_variance;
    double car = 0;
    for (std::size_t j = 0; j < lags; ++j) {
        StudyRow row;
        row.lag = windows.first_lag + int(j);
        double s = 0;
        for (const auto* e : members) s += e->ar[j];
        row.abar = s / n;
        car += row.abar;
        row.car = car;
        row.var_car = double(j + 1) * sigma_sum / (n * n);
        if (row.var_car > 0) {
            row.theta = row.car / std::sqrt(row.var_car);
        } else if (row.car == 0) {
            row.theta = 0;
        } else {
            row.theta = std::copysign(std::numeric_limits<double>::infinity(), row.car);
        }
        result.rows.push_back(row);
    }
    significance(result);
    return result;
}

void significance(EventStudyResult& result, const SignificanceLevels& levels) {
    for (auto& row : result.rows) {
        row.sig5 = std::abs(row.theta) > levels.five_percent;
        row.sig1 = std::abs(row.theta) > levels.one_percent;
    }
}

}  // namespace tweetmarket::study
