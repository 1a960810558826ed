#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stitchcast/date.hpp"

namespace stitchcast {

/// Catalog record at the style level (above size variants).
struct Article {
    std::string article_id;
    std::string category;
    std::string article_class;
    std::string sub_class;
    std::map<std::string, std::string> attributes;  // absent key = attribute not applicable
    std::string description;
    double cost_price = 0.0;

    bool operator==(const Article&) const = default;
};

struct Store {
    std::string store_id;
    double size_sqm = 0.0;

    bool operator==(const Store&) const = default;
};

/// One (article, store, week) observation. Weeks are 1-based season weeks.
struct SalesRecord {
    std::string article_id;
    std::string store_id;
    int week = 0;
    long long units = 0;
    double selling_price = 0.0;

    bool operator==(const SalesRecord&) const = default;
};

struct VariantSalesRecord {
    std::string article_id;
    std::string size_code;
    std::string store_id;
    int week = 0;
    long long units = 0;

    bool operator==(const VariantSalesRecord&) const = default;
};

struct PhaseRange {
    int first_week = 0;
    int last_week = 0;

    bool operator==(const PhaseRange&) const = default;
};

/**
 * Season structure: start date, week count, the four phase windows and the
 * holiday/special-event dates that feed the nholidays feature.
 */
struct SeasonCalendar {
    Date season_start;
    int n_weeks = 26;
    std::vector<PhaseRange> phase_bounds;
    std::vector<Date> holidays;
    std::vector<Date> special_events;

    bool operator==(const SeasonCalendar&) const = default;

    /// 1-7, 8-13, 14-20, 21-26: two 7-week and two 6-week phases.
    static std::vector<PhaseRange> default_phase_bounds() {
        return {{1, 7}, {8, 13}, {14, 20}, {21, 26}};
    }

    static SeasonCalendar spring_summer(int year) {
        SeasonCalendar cal;
        cal.season_start = Date(year, 1, 1);
        cal.n_weeks = 26;
        cal.phase_bounds = default_phase_bounds();
        return cal;
    }

    Date season_end_exclusive() const { return season_start.plus_days(7LL * n_weeks); }

    void validate() const {
        if (n_weeks < 1) throw std::runtime_error("calendar: n_weeks must be positive");
        if (phase_bounds.empty()) throw std::runtime_error("calendar: phase_bounds missing");
        int expect = 1;
        for (const auto& ph : phase_bounds) {
            if (ph.first_week != expect || ph.last_week < ph.first_week)
                throw std::runtime_error("calendar: phase bounds must partition weeks 1.." +
                                         std::to_string(n_weeks));
            expect = ph.last_week + 1;
        }
        if (expect != n_weeks + 1)
            throw std::runtime_error("calendar: phase bounds must cover weeks 1.." +
                                     std::to_string(n_weeks));
        // The 4-phases-of-6-7-weeks season shape only applies at full season length.
        if (n_weeks >= 24) {
            if (phase_bounds.size() != 4)
                throw std::runtime_error("calendar: a full season has 4 phases");
            for (const auto& ph : phase_bounds) {
                int span = ph.last_week - ph.first_week + 1;
                if (span < 6 || span > 7)
                    throw std::runtime_error("calendar: each phase spans 6-7 weeks");
            }
        }
        for (const auto& d : holidays) check_in_season(d, "holiday");
        for (const auto& d : special_events) check_in_season(d, "special_event");
    }

private:
    void check_in_season(const Date& d, const char* kind) const {
        if (d < season_start || !(d < season_end_exclusive()))
            throw std::runtime_error(std::string("calendar: ") + kind + " " + d.to_string() +
                                     " outside season");
    }
};

/// 1-based season week containing `date`; the season start date is week 1.
inline int week_of(const Date& date, const SeasonCalendar& cal) {
    int64_t offset = date.days - cal.season_start.days;
    if (offset < 0 || offset >= 7LL * cal.n_weeks)
        throw std::out_of_range("date " + date.to_string() + " outside season " +
                                cal.season_start.to_string() + " + " +
                                std::to_string(cal.n_weeks) + " weeks");
    return static_cast<int>(offset / 7) + 1;
}

inline int phase_of(int week, const SeasonCalendar& cal) {
    if (week < 1 || week > cal.n_weeks)
        throw std::out_of_range("week " + std::to_string(week) + " outside 1.." +
                                std::to_string(cal.n_weeks));
    for (size_t i = 0; i < cal.phase_bounds.size(); ++i)
        if (week >= cal.phase_bounds[i].first_week && week <= cal.phase_bounds[i].last_week)
            return static_cast<int>(i) + 1;
    throw std::out_of_range("week " + std::to_string(week) + " not covered by phase bounds");
}

/// Count of listed holidays plus special events falling in the given week.
inline int holidays_in_week(int week, const SeasonCalendar& cal) {
    if (week < 1 || week > cal.n_weeks)
        throw std::out_of_range("week " + std::to_string(week) + " outside 1.." +
                                std::to_string(cal.n_weeks));
    int count = 0;
    for (const auto& d : cal.holidays)
        if (week_of(d, cal) == week) ++count;
    for (const auto& d : cal.special_events)
        if (week_of(d, cal) == week) ++count;
    return count;
}

/// Launch week per (article, store).
struct LaunchTable {
    std::map<std::pair<std::string, std::string>, int> weeks;

    bool operator==(const LaunchTable&) const = default;

    void set(const std::string& article_id, const std::string& store_id, int week) {
        weeks[{article_id, store_id}] = week;
    }

    std::optional<int> launch_week(const std::string& article_id, const std::string& store_id) const {
        auto it = weeks.find({article_id, store_id});
        if (it == weeks.end()) return std::nullopt;
        return it->second;
    }

    /// Every (article, store) that sold must have a launch at or before its first sale.
    void validate_against(const std::vector<SalesRecord>& sales, const SeasonCalendar& cal) const {
        for (const auto& [key, week] : weeks)
            if (week < 1 || week > cal.n_weeks)
                throw std::runtime_error("launch week " + std::to_string(week) + " for (" +
                                         key.first + ", " + key.second + ") outside season");
        std::map<std::pair<std::string, std::string>, int> first_sale;
        for (const auto& s : sales) {
            auto key = std::make_pair(s.article_id, s.store_id);
            auto it = first_sale.find(key);
            if (it == first_sale.end() || s.week < it->second) first_sale[key] = s.week;
        }
        for (const auto& [key, week] : first_sale) {
            auto launch = launch_week(key.first, key.second);
            if (!launch)
                throw std::runtime_error("no launch entry for (" + key.first + ", " + key.second +
                                         ") appearing in sales");
            if (*launch > week)
                throw std::runtime_error("launch week " + std::to_string(*launch) + " for (" +
                                         key.first + ", " + key.second + ") after first sale week " +
                                         std::to_string(week));
        }
    }
};

}  // namespace stitchcast
