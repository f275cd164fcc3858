#pragma once

#include <iosfwd>

#include "tweetmarket/study/run_study.hpp"

namespace tweetmarket::study {

std::string_view to_string(StudyMode mode);

/// `class,lag,abar,car,var_car,theta,sig5,sig1,n_events`, one row per class and lag.
void write_study_table(std::ostream& out, const StudyReport& report);

/// `class,lag,car,lower,upper`: the CAR curve with a +/-1.96 sqrt(var) band.
void write_car_curve(std::ostream& out, const StudyReport& report);

/// JSON summary: mode, windows, per-class event counts, used events and dropped events with reasons.
void write_study_log(std::ostream& out, const StudyReport& report);

}  // namespace tweetmarket::study
