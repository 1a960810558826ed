#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stitchcast {

namespace detail {

// Civil-date <-> day-count conversions (proleptic Gregorian, epoch 1970-01-01).
inline int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

inline void civil_from_days(int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yy + (m <= 2));
}

inline bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

inline unsigned last_day_of_month(int y, unsigned m) {
    static constexpr unsigned days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && is_leap(y) ? 29 : days[m - 1];
}

}  // namespace detail

/// Calendar date as a day count since 1970-01-01.
struct Date {
    int64_t days = 0;

    Date() = default;
    explicit Date(int64_t d) : days(d) {}
    Date(int year, unsigned month, unsigned day) : days(detail::days_from_civil(year, month, day)) {}

    auto operator<=>(const Date&) const = default;

    Date plus_days(int64_t n) const { return Date(days + n); }

    /// Parses strict "YYYY-MM-DD".
    static Date parse(std::string_view s) {
        int y = 0;
        unsigned m = 0, d = 0;
        if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
            std::sscanf(std::string(s).c_str(), "%d-%u-%u", &y, &m, &d) != 3)
            throw std::runtime_error("bad date (want YYYY-MM-DD): '" + std::string(s) + "'");
        if (m < 1 || m > 12 || d < 1 || d > detail::last_day_of_month(y, m))
            throw std::runtime_error("invalid calendar date: '" + std::string(s) + "'");
        return Date(y, m, d);
    }

    std::string to_string() const {
        int y;
        unsigned m, d;
        detail::civil_from_days(days, y, m, d);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
        return buf;
    }
};

}  // namespace stitchcast
