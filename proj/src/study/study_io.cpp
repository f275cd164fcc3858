#include "tweetmarket/study/study_io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>

#include "tweetmarket/core/csv.hpp"

namespace tweetmarket::study {

std::string_view to_string(StudyMode mode) { return mode == StudyMode::All ? "all" : "non_ea"; }

void write_study_table(std::ostream& out, const StudyReport& report) {
    out << "class,lag,abar,car,var_car,theta,sig5,sig1,n_events\n";
    for (const auto& r : report.results) {
        for (const auto& row : r.rows) {
            out << events::to_string(r.polarity_class) << ',' << row.lag << ',' << core::format_double(row.abar)
                << ',' << core::format_double(row.car) << ',' << core::format_double(row.var_car) << ','
                << core::format_double(row.theta) << ',' << (row.sig5 ? 1 : 0) << ',' << (row.sig1 ? 1 : 0)
                << ',' << r.n_events << '\n';
        }
    }
}

void write_car_curve(std::ostream& out, const StudyReport& report) {
    out << "class,lag,car,lower,upper\n";
    for (const auto& r : report.results) {
        for (const auto& row : r.rows) {
            const double half = 1.96 * std::sqrt(row.var_car);
            out << events::to_string(r.polarity_class) << ',' << row.lag << ',' << core::format_double(row.car)
                << ',' << core::format_double(row.car - half) << ',' << core::format_double(row.car + half) << '\n';
        }
    }
}

void write_study_log(std::ostream& out, const StudyReport& report) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(report.mode);
    j["windows"] = {{"estimation_length", report.windows.estimation_length},
                    {"first_lag", report.windows.first_lag},
                    {"last_lag", report.windows.last_lag}};
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& r : report.results) counts[std::string(events::to_string(r.polarity_class))] = r.n_events;
    j["events_per_class"] = counts;
    nlohmann::ordered_json used = nlohmann::ordered_json::array();
    for (const auto& u : report.used) {
        used.push_back({{"ticker", u.event.ticker},
                        {"date", u.event.date.to_string()},
                        {"event_day", u.event_day.to_string()},
                        {"class", events::to_string(u.event.polarity_class)},
                        {"alpha", u.model.alpha},
                        {"beta", u.model.beta},
                        {"residual_variance", u.model.residual_variance},
                        {"estimation_start", u.model.estimation_start.to_string()},
                        {"estimation_end", u.model.estimation_end.to_string()}});
    }
    j["used"] = used;
    nlohmann::ordered_json dropped = nlohmann::ordered_json::array();
    for (const auto& d : report.dropped) {
        dropped.push_back({{"ticker", d.ticker}, {"date", d.date.to_string()}, {"reason", d.reason}});
    }
    j["dropped"] = dropped;
    out << j.dump(2) << '\n';
}

}  // namespace tweetmarket::study
