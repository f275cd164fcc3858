#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "tweetmarket/core/error.hpp"
#include "tweetmarket/events/event_io.hpp"
#include "tweetmarket/events/peaks.hpp"
#include "tweetmarket/events/polarity.hpp"
#include "tweetmarket/stats/random.hpp"

using namespace tweetmarket;
using namespace tweetmarket::events;
using core::Date;
using core::TweetCounts;
using core::TweetDailySeries;
using Catch::Approx;

namespace {

const Date kStart(2014, 1, 1);

TweetDailySeries series_of(const std::vector<double>& volumes, const std::string& ticker = "NKE") {
    std::vector<Date> d;
    std::vector<TweetCounts> c;
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        d.push_back(kStart.plus_days(long(i)));
        c.push_back(TweetCounts::from_classes(0, std::int64_t(volumes[i]), 0));
    }
    return TweetDailySeries(ticker, std::move(d), std::move(c));
}

// Every day checked on its own, then the separation rule applied by priority rank.
std::vector<std::size_t> brute_force_peaks(const std::vector<double>& tw, const PeakParams& p) {
    const auto half = std::size_t(p.half_window);
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t d = 0; d < tw.size(); ++d) {
        if (d < half || d + half >= tw.size()) continue;
        const double phi = oracle::outlier_fraction(tw, d, half, p.min_activity);
        if (phi > p.threshold) cand.emplace_back(phi, d);
    }
    // Priority: larger phi first; equal phi, earlier day first.
    std::sort(cand.begin(), cand.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<bool> keep(cand.size(), false);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j) {
            const long gap = long(cand[i].second) - long(cand[j].second);
            if (keep[j] && std::abs(gap) < p.min_separation) ok = false;
        }
        keep[i] = ok;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (keep[i]) out.push_back(cand[i].second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> offsets(const std::vector<Event>& events) {
    std::vector<std::size_t> out;
    for (const auto& e : events) out.push_back(std::size_t(days_between(kStart, e.date)));
    return out;
}

}  // namespace

TEST_CASE("outlier fraction examples", "[events][phi]") {
    const PeakParams p;
    const std::vector<double> w{10, 10, 10, 10, 10, 40, 10, 10, 10, 10, 10};
    REQUIRE(outlier_fraction(w, 5, p) == 3.0);
    REQUIRE(outlier_fraction(std::vector<double>(11, 7.0), 5, p) == 0.0);
    const std::vector<double> small{2, 2, 2, 2, 2, 8, 2, 2, 2, 2, 2};
    REQUIRE(outlier_fraction(small, 5, p) == Approx(0.6));
    REQUIRE_THROWS_AS(outlier_fraction(w, 4, p), BoundaryError);
    REQUIRE_THROWS_AS(outlier_fraction(w, 6, p), BoundaryError);

    const auto s = series_of(w);
    REQUIRE(outlier_fraction(s, kStart.plus_days(5), p) == 3.0);
    REQUIRE_THROWS_AS(outlier_fraction(s, kStart, p), BoundaryError);
    REQUIRE_THROWS_AS(outlier_fraction(s, kStart.plus_days(40), p), BoundaryError);
}

TEST_CASE("peak parameters are validated", "[events][params]") {
    PeakParams p;
    p.half_window = 0;
    REQUIRE_THROWS_AS(p.validate(), ValidationError);
    p = {};
    p.min_activity = 0.5;
    REQUIRE_THROWS_AS(p.validate(), ValidationError);
    p = {};
    p.threshold = 0;
    REQUIRE_THROWS_AS(p.validate(), ValidationError);
    p = {};
    p.min_separation = 0;
    REQUIRE_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("detect_peaks examples", "[events][peaks]") {
    REQUIRE(detect_peaks(series_of(std::vector<double>(60, 20))).empty());

    std::vector<double> v(60, 20);
    v[30] = 80;
    const auto peaks = detect_peaks(series_of(v));
    REQUIRE(peaks.size() == 1);
    REQUIRE(peaks[0].date == kStart.plus_days(30));
    REQUIRE(peaks[0].phi == 3.0);

    REQUIRE_THROWS_AS(detect_peaks(series_of(std::vector<double>(10, 20))), ValidationError);

    SECTION("near-boundary spikes are undetectable") {
        std::vector<double> b(60, 20);
        b[2] = 500;
        b[57] = 500;
        REQUIRE(detect_peaks(series_of(b)).empty());
    }
    SECTION("gaps in the input count as zero-tweet days") {
        const TweetDailySeries gappy("KO", {kStart, kStart.plus_days(20)},
                                     {TweetCounts::from_classes(0, 1, 0), TweetCounts::from_classes(0, 1, 0)});
        REQUIRE(detect_peaks(gappy).empty());
    }
    SECTION("the stronger of two close peaks survives") {
        std::vector<double> two(80, 20);
        two[30] = 80;
        two[45] = 120;
        const auto r = detect_peaks(series_of(two));
        REQUIRE(r.size() == 1);
        REQUIRE(r[0].date == kStart.plus_days(45));
        two[45] = 80;  // tie: earlier date wins
        REQUIRE(detect_peaks(series_of(two))[0].date == kStart.plus_days(30));
        two[51] = 80;  // exactly 21 days after the first: both stay
        REQUIRE(offsets(detect_peaks(series_of(two))) == std::vector<std::size_t>{30, 51});
    }
}

TEST_CASE("detect_peaks matches the brute-force oracle", "[events][peaks][property]") {
    stats::Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        PeakParams p;
        p.half_window = 1 + int(rng.below(6));
        p.min_activity = double(1 + rng.below(15));
        p.threshold = rng.uniform(0.2, 3.0);
        p.min_separation = 1 + int(rng.below(30));
        const std::size_t n = std::size_t(2 * p.half_window + 1) + rng.below(150);
        std::vector<double> tw(n);
        for (auto& x : tw) x = double(rng.below(30));
        for (int k = 0; k < 5; ++k) tw[rng.below(n)] += double(rng.below(300));
        const auto got = detect_peaks(series_of(tw), p);
        REQUIRE(offsets(got) == brute_force_peaks(tw, p));
        for (std::size_t i = 1; i < got.size(); ++i) {
            REQUIRE(days_between(got[i - 1].date, got[i].date) >= p.min_separation);
        }
        for (const auto& e : got) REQUIRE(e.phi > p.threshold);
    }
}

TEST_CASE("peak detection is scale covariant above the floor", "[events][peaks][property]") {
    stats::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> tw(120);
        for (auto& x : tw) x = double(20 + rng.below(20));
        for (int k = 0; k < 4; ++k) tw[rng.below(120)] += double(rng.below(200));
        std::vector<double> scaled(tw);
        for (auto& x : scaled) x *= 3;
        REQUIRE(offsets(detect_peaks(series_of(tw))) == offsets(detect_peaks(series_of(scaled))));
    }
}

TEST_CASE("tag_ea uses a one-day window", "[events][ea]") {
    std::vector<Event> ev{{"NKE", Date(2014, 3, 10), 3.0, {}, {}, false}};
    const auto at = [&](Date d, const std::string& t = "NKE") {
        const std::vector<EaDate> ea{{t, d}};
        return tag_ea(ev, ea)[0].is_ea;
    };
    REQUIRE(at(Date(2014, 3, 10)));
    REQUIRE(at(Date(2014, 3, 11)));
    REQUIRE(at(Date(2014, 3, 9)));
    REQUIRE_FALSE(at(Date(2014, 3, 12)));
    REQUIRE_FALSE(at(Date(2014, 3, 10), "KO"));
    REQUIRE_FALSE(tag_ea(ev, {})[0].is_ea);
}

TEST_CASE("detect_non_ea", "[events][ea]") {
    std::vector<double> v(300, 20);
    const std::vector<std::size_t> ea_days{40, 120, 200};
    const std::vector<std::size_t> other{80, 250};
    for (auto d : ea_days) v[d] = 100;
    for (auto d : other) v[d] = 90;
    std::vector<EaDate> ea;
    for (auto d : ea_days) ea.push_back({"NKE", kStart.plus_days(long(d))});
    ea.push_back({"KO", kStart.plus_days(80)});  // other tickers are ignored

    const auto s = series_of(v);
    REQUIRE(offsets(detect_peaks(s)) == std::vector<std::size_t>{40, 80, 120, 200, 250});
    const auto non_ea = detect_non_ea(s, ea);
    REQUIRE(offsets(non_ea) == other);
    for (const auto& e : non_ea) {
        REQUIRE_FALSE(e.is_ea);
        for (const auto& a : ea) {
            if (a.ticker == "NKE") REQUIRE(std::llabs(days_between(a.date, e.date)) > 1);
        }
    }

    SECTION("only spike at an EA date") {
        std::vector<double> w(100, 20);
        w[50] = 100;
        const std::vector<EaDate> one{{"NKE", kStart.plus_days(51)}};
        REQUIRE(detect_non_ea(series_of(w), one).empty());
    }
    SECTION("far from EA dates nothing changes") {
        std::vector<double> w(200, 20);
        w[50] = 100;
        w[150] = 70;
        const std::vector<EaDate> one{{"NKE", kStart.plus_days(100)}};
        REQUIRE(offsets(detect_non_ea(series_of(w), one)) == offsets(detect_peaks(series_of(w))));
    }
}

TEST_CASE("polarity classes follow the interval closures", "[events][polarity]") {
    REQUIRE(classify(0.8) == PolarityClass::Positive);
    REQUIRE(classify(0.15) == PolarityClass::Neutral);
    REQUIRE(classify(0.7) == PolarityClass::Neutral);
    REQUIRE(classify(0.70000001) == PolarityClass::Positive);
    REQUIRE(classify(0.1499999) == PolarityClass::Negative);
    REQUIRE(classify(-0.2) == PolarityClass::Negative);
    REQUIRE(classify(-1.0) == PolarityClass::Negative);
    REQUIRE(classify(1.0) == PolarityClass::Positive);
    REQUIRE(classify(std::nullopt) == PolarityClass::Neutral);
    REQUIRE_THROWS_AS((PolarityThresholds{0.7, 0.15}.validate()), ValidationError);
    REQUIRE_THROWS_AS((PolarityThresholds{-1.5, 0.15}.validate()), ValidationError);

    const core::PolaritySeries pol("NKE", {Date(2014, 1, 1), Date(2014, 1, 2), Date(2014, 1, 3)},
                                   {0.9, std::nullopt, -0.5});
    std::vector<Event> ev;
    for (int d = 1; d <= 4; ++d) ev.push_back({"NKE", Date(2014, 1, unsigned(d)), 3.0, {}, {}, false});
    const auto out = assign_polarity(ev, pol);
    REQUIRE(out[0].polarity_class == PolarityClass::Positive);
    REQUIRE(out[1].polarity_class == PolarityClass::Neutral);
    REQUIRE_FALSE(out[1].polarity.has_value());
    REQUIRE(out[2].polarity_class == PolarityClass::Negative);
    REQUIRE(out[3].polarity_class == PolarityClass::Neutral);
    ev[0].ticker = "KO";
    REQUIRE_THROWS_AS(assign_polarity(ev, pol), ValidationError);
}

TEST_CASE("assign_polarity partitions random events", "[events][polarity][property]") {
    stats::Rng rng(5);
    std::vector<Date> d;
    std::vector<std::optional<double>> v;
    for (int i = 0; i < 400; ++i) {
        d.push_back(kStart.plus_days(i));
        if (rng.uniform() < 0.1) {
            v.emplace_back();
        } else {
            v.emplace_back(rng.uniform(-1, 1));
        }
    }
    const core::PolaritySeries pol("NKE", d, v);
    std::vector<Event> ev;
    for (int i = 0; i < 400; i += 3) ev.push_back({"NKE", kStart.plus_days(i), 3.0, {}, {}, false});
    const auto out = assign_polarity(ev, pol);
    std::map<PolarityClass, std::size_t> counts;
    for (const auto& e : out) {
        ++counts[e.polarity_class];
        const auto p = e.polarity;
        const auto expected = !p ? PolarityClass::Neutral
                              : *p < 0.15 ? PolarityClass::Negative
                              : *p <= 0.7 ? PolarityClass::Neutral
                                          : PolarityClass::Positive;
        REQUIRE(e.polarity_class == expected);
    }
    REQUIRE(counts[PolarityClass::Negative] + counts[PolarityClass::Neutral] + counts[PolarityClass::Positive] ==
            out.size());
}

TEST_CASE("derive_thresholds", "[events][thresholds]") {
    const std::vector<double> sym{-1, -1, -1, 0, 0, 0, 1, 1, 1};
    const auto t = derive_thresholds(sym);
    REQUIRE_FALSE(t.degenerate);
    std::map<PolarityClass, int> c;
    for (double x : sym) ++c[classify(x, t.thresholds)];
    REQUIRE(c[PolarityClass::Negative] == 3);
    REQUIRE(c[PolarityClass::Neutral] == 3);
    REQUIRE(c[PolarityClass::Positive] == 3);

    const auto deg = derive_thresholds(std::vector<double>(10, 0.4));
    REQUIRE(deg.degenerate);
    REQUIRE_FALSE(deg.warning.empty());
    REQUIRE(deg.thresholds.lower == 0.15);
    REQUIRE(deg.thresholds.upper == 0.7);

    REQUIRE_THROWS_AS(derive_thresholds(std::vector<double>{0.1, 0.2}), ValidationError);

    stats::Rng rng(260);
    std::vector<double> skewed;
    for (int i = 0; i < 260; ++i) skewed.push_back(1.0 - 2.0 * std::pow(rng.uniform(), 3.0));
    const auto s = derive_thresholds(skewed);
    REQUIRE(s.thresholds.lower == Approx(oracle::quantile(skewed, 1.0 / 3.0)).epsilon(1e-14));
    REQUIRE(s.thresholds.upper == Approx(oracle::quantile(skewed, 2.0 / 3.0)).epsilon(1e-14));
    std::map<PolarityClass, int> sc;
    for (double x : skewed) ++sc[classify(x, s.thresholds)];
    for (auto [cls, n] : sc) {
        REQUIRE(n >= 86);
        REQUIRE(n <= 87);
    }
}

TEST_CASE("events CSV round trip", "[events][io]") {
    const std::vector<Event> ev{{"NKE", Date(2014, 3, 10), 3.5, 0.25, PolarityClass::Neutral, true},
                                {"KO", Date(2014, 4, 1), 2.125, std::nullopt, PolarityClass::Neutral, false},
                                {"AXP", Date(2014, 5, 2), 7.0, -0.75, PolarityClass::Negative, false}};
    const auto path = std::filesystem::temp_directory_path() / "tweetmarket_events_rt.csv";
    {
        std::ofstream out(path);
        write_events_csv(out, ev);
    }
    const auto back = read_events_csv(path);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(back[i].ticker == ev[i].ticker);
        REQUIRE(back[i].date == ev[i].date);
        REQUIRE(back[i].phi == ev[i].phi);
        REQUIRE(back[i].polarity == ev[i].polarity);
        REQUIRE(back[i].polarity_class == ev[i].polarity_class);
        REQUIRE(back[i].is_ea == ev[i].is_ea);
    }
    std::ostringstream hist;
    write_polarity_histogram(hist, ev, 4);
    REQUIRE(hist.str() == "bin_lower,bin_upper,count\n-1,-0.5,1\n-0.5,0,0\n0,0.5,1\n0.5,1,0\nmissing,missing,1\n");

    {
        std::ofstream out(path);
        out << "ticker,date\nNKE,2014-01-02\nKO,2014-13-02\n";
    }
    try {
        read_ea_dates(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 3);
    }
    std::filesystem::remove(path);
}
