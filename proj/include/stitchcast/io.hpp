#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "stitchcast/core.hpp"
#include "stitchcast/csv.hpp"
#include "stitchcast/util.hpp"

namespace stitchcast {

/// Planted expected demand emitted by the generator; the test-season oracle.
struct TruthRecord {
    std::string article_id;
    std::string store_id;
    int week = 0;
    double expected_units = 0.0;

    bool operator==(const TruthRecord&) const = default;
};

namespace io {

inline const std::array<std::string, 8> kKnownAttributes = {
    "color",       "sleeve_length", "pattern", "material",
    "neck_shape",  "item_length",   "fastening_type", "fit"};

// ---- catalog.csv ----------------------------------------------------------

inline std::vector<Article> load_catalog(const std::string& path) {
    CsvReader r(path);
    auto header = read_header(r, {"article_id", "category", "class", "sub_class"});
    if (header.size() < 6 || header[header.size() - 2] != "description" ||
        header.back() != "cost_price")
        throw std::runtime_error(path + ": catalog header must end with description,cost_price");
    std::vector<std::string> attr_names(header.begin() + 4, header.end() - 2);

    std::vector<Article> catalog;
    std::set<std::string> seen;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != header.size())
            throw std::runtime_error(r.where() + ": expected " + std::to_string(header.size()) +
                                     " fields, got " + std::to_string(f.size()));
        Article a;
        a.article_id = f[0];
        a.category = f[1];
        a.article_class = f[2];
        a.sub_class = f[3];
        if (a.sub_class.empty())
            throw std::runtime_error(r.where() + ": column 'sub_class' must be non-empty");
        for (size_t i = 0; i < attr_names.size(); ++i)
            if (!f[4 + i].empty()) a.attributes[attr_names[i]] = f[4 + i];
        a.description = f[header.size() - 2];
        a.cost_price = parse_real(f.back(), r.where() + ": column 'cost_price'");
        if (!seen.insert(a.article_id).second)
            throw std::runtime_error(r.where() + ": duplicate article_id '" + a.article_id + "'");
        catalog.push_back(std::move(a));
    }
    return catalog;
}

inline void save_catalog(const std::string& path, const std::vector<Article>& catalog) {
    // Known attributes in schema order, any extra attribute names appended sorted.
    std::set<std::string> extras;
    for (const auto& a : catalog)
        for (const auto& [name, value] : a.attributes) {
            bool known = false;
            for (const auto& k : kKnownAttributes) known |= (k == name);
            if (!known) extras.insert(name);
        }
    std::vector<std::string> attr_names(kKnownAttributes.begin(), kKnownAttributes.end());
    attr_names.insert(attr_names.end(), extras.begin(), extras.end());

    CsvWriter w(path);
    std::vector<std::string> row = {"article_id", "category", "class", "sub_class"};
    row.insert(row.end(), attr_names.begin(), attr_names.end());
    row.push_back("description");
    row.push_back("cost_price");
    w.row(row);
    for (const auto& a : catalog) {
        row = {a.article_id, a.category, a.article_class, a.sub_class};
        for (const auto& name : attr_names) {
            auto it = a.attributes.find(name);
            row.push_back(it == a.attributes.end() ? "" : it->second);
        }
        row.push_back(a.description);
        row.push_back(fmt_money(a.cost_price));
        w.row(row);
    }
    w.close();
}

// ---- stores.csv -----------------------------------------------------------

inline std::vector<Store> load_stores(const std::string& path) {
    CsvReader r(path);
    read_header(r, {"store_id", "size_sqm"});
    std::vector<Store> stores;
    std::set<std::string> seen;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != 2) throw std::runtime_error(r.where() + ": expected 2 fields");
        Store s{f[0], parse_real(f[1], r.where() + ": column 'size_sqm'")};
        if (s.size_sqm <= 0)
            throw std::runtime_error(r.where() + ": column 'size_sqm' must be positive");
        if (!seen.insert(s.store_id).second)
            throw std::runtime_error(r.where() + ": duplicate store_id '" + s.store_id + "'");
        stores.push_back(std::move(s));
    }
    return stores;
}

inline void save_stores(const std::string& path, const std::vector<Store>& stores) {
    CsvWriter w(path);
    w.row({"store_id", "size_sqm"});
    for (const auto& s : stores) w.row({s.store_id, fmt_real(s.size_sqm)});
    w.close();
}

// ---- sales.csv ------------------------------------------------------------

inline std::vector<SalesRecord> load_sales(const std::string& path) {
    CsvReader r(path);
    read_header(r, {"article_id", "store_id", "week", "units", "selling_price"});
    std::vector<SalesRecord> sales;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != 5) throw std::runtime_error(r.where() + ": expected 5 fields");
        SalesRecord s;
        s.article_id = f[0];
        s.store_id = f[1];
        s.week = static_cast<int>(parse_int(f[2], r.where() + ": column 'week'"));
        s.units = parse_int(f[3], r.where() + ": column 'units'");
        s.selling_price = parse_real(f[4], r.where() + ": column 'selling_price'");
        if (s.week < 1) throw std::runtime_error(r.where() + ": column 'week' must be >= 1");
        if (s.units < 0) throw std::runtime_error(r.where() + ": column 'units' must be >= 0");
        if (s.selling_price <= 0)
            throw std::runtime_error(r.where() + ": column 'selling_price' must be > 0");
        sales.push_back(std::move(s));
    }
    return sales;
}

inline void save_sales(const std::string& path, const std::vector<SalesRecord>& sales) {
    CsvWriter w(path);
    w.row({"article_id", "store_id", "week", "units", "selling_price"});
    for (const auto& s : sales)
        w.row({s.article_id, s.store_id, std::to_string(s.week), std::to_string(s.units),
               fmt_money(s.selling_price)});
    w.close();
}

// ---- variant_sales.csv ----------------------------------------------------

inline std::vector<VariantSalesRecord> load_variant_sales(const std::string& path) {
    CsvReader r(path);
    read_header(r, {"article_id", "size_code", "store_id", "week", "units"});
    std::vector<VariantSalesRecord> rows;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != 5) throw std::runtime_error(r.where() + ": expected 5 fields");
        VariantSalesRecord v;
        v.article_id = f[0];
        v.size_code = f[1];
        v.store_id = f[2];
        v.week = static_cast<int>(parse_int(f[3], r.where() + ": column 'week'"));
        v.units = parse_int(f[4], r.where() + ": column 'units'");
        if (v.units < 0) throw std::runtime_error(r.where() + ": column 'units' must be >= 0");
        rows.push_back(std::move(v));
    }
    return rows;
}

inline void save_variant_sales(const std::string& path, const std::vector<VariantSalesRecord>& rows) {
    CsvWriter w(path);
    w.row({"article_id", "size_code", "store_id", "week", "units"});
    for (const auto& v : rows)
        w.row({v.article_id, v.size_code, v.store_id, std::to_string(v.week),
               std::to_string(v.units)});
    w.close();
}

// ---- launches.csv ---------------------------------------------------------

inline LaunchTable load_launches(const std::string& path) {
    CsvReader r(path);
    read_header(r, {"article_id", "store_id", "launch_week"});
    LaunchTable t;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != 3) throw std::runtime_error(r.where() + ": expected 3 fields");
        int week = static_cast<int>(parse_int(f[2], r.where() + ": column 'launch_week'"));
        if (t.weeks.count({f[0], f[1]}))
            throw std::runtime_error(r.where() + ": duplicate launch entry for (" + f[0] + ", " +
                                     f[1] + ")");
        t.set(f[0], f[1], week);
    }
    return t;
}

inline void save_launches(const std::string& path, const LaunchTable& t) {
    CsvWriter w(path);
    w.row({"article_id", "store_id", "launch_week"});
    for (const auto& [key, week] : t.weeks)
        w.row({key.first, key.second, std::to_string(week)});
    w.close();
}

// ---- truth_demand.csv -----------------------------------------------------

inline std::vector<TruthRecord> load_truth(const std::string& path) {
    CsvReader r(path);
    read_header(r, {"article_id", "store_id", "week", "expected_units"});
    std::vector<TruthRecord> rows;
    std::vector<std::string> f;
    while (r.next(f)) {
        if (f.size() != 4) throw std::runtime_error(r.where() + ": expected 4 fields");
        TruthRecord t;
        t.article_id = f[0];
        t.store_id = f[1];
        t.week = static_cast<int>(parse_int(f[2], r.where() + ": column 'week'"));
        t.expected_units = parse_real(f[3], r.where() + ": column 'expected_units'");
        rows.push_back(std::move(t));
    }
    return rows;
}

inline void save_truth(const std::string& path, const std::vector<TruthRecord>& rows) {
    CsvWriter w(path);
    w.row({"article_id", "store_id", "week", "expected_units"});
    for (const auto& t : rows)
        w.row({t.article_id, t.store_id, std::to_string(t.week), fmt_real(t.expected_units)});
    w.close();
}

// ---- calendar.json --------------------------------------------------------

inline SeasonCalendar load_calendar(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    SeasonCalendar cal;
    cal.season_start = Date::parse(j.at("season_start").get<std::string>());
    cal.n_weeks = j.at("n_weeks").get<int>();
    for (const auto& ph : j.at("phase_bounds"))
        cal.phase_bounds.push_back({ph.at(0).get<int>(), ph.at(1).get<int>()});
    for (const auto& d : j.at("holidays")) cal.holidays.push_back(Date::parse(d.get<std::string>()));
    for (const auto& d : j.at("special_events"))
        cal.special_events.push_back(Date::parse(d.get<std::string>()));
    cal.validate();
    return cal;
}

inline void save_calendar(const std::string& path, const SeasonCalendar& cal) {
    nlohmann::json j;
    j["season_start"] = cal.season_start.to_string();
    j["n_weeks"] = cal.n_weeks;
    auto bounds = nlohmann::json::array();
    for (const auto& ph : cal.phase_bounds)
        bounds.push_back(nlohmann::json::array({ph.first_week, ph.last_week}));
    j["phase_bounds"] = bounds;
    auto dates = nlohmann::json::array();
    for (const auto& d : cal.holidays) dates.push_back(d.to_string());
    j["holidays"] = dates;
    dates = nlohmann::json::array();
    for (const auto& d : cal.special_events) dates.push_back(d.to_string());
    j["special_events"] = dates;
    write_file(path, j.dump(2) + "\n");
}

}  // namespace io
}  // namespace stitchcast
