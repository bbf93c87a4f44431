#pragma once

// Synthetic AIS feeds with known ground truth. Everything is pushed through
// the real encoder so the decoder sees ordinary sentences.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fwatch/ais/encode.hpp"
#include "fwatch/identity/registry.hpp"
#include "fwatch/time.hpp"
#include "fwatch/zone/geojson.hpp"

namespace fwatch::synth {

using namespace std::chrono_literals;

struct Fix {
    UtcSeconds t{};
    double lat = 0.0;
    double lon = 0.0;
    double sog = 0.0;
};

/// A planned fishing run: every fix inside it is a candidate.
struct Run {
    Mmsi mmsi;
    UtcSeconds start{};
    UtcSeconds end{};
    geo::LatLon center;

    double hours() const { return to_hours(end - start); }
};

/// Time-ordered feed log assembled from encoded messages.
class LogWriter {
public:
    void position(Mmsi m, const Fix& f, int type = 1) {
        ais::PositionReport r;
        r.message_type = type;
        r.mmsi = m;
        r.latitude = f.lat;
        r.longitude = f.lon;
        r.sog = f.sog;
        r.cog = 90.0;
        r.true_heading = 90;
        r.utc_second = static_cast<int>(f.t.time_since_epoch().count() % 60);
        add(f.t, ais::to_sentences(ais::encode_position(r)));
    }

    void statics(UtcSeconds t, const ais::StaticReport& r) {
        add(t, ais::to_sentences(ais::encode_static(r), next_seq_++ % 10, 'B'));
    }

    void add(UtcSeconds t, const std::vector<std::string>& sentences) {
        for (const auto& s : sentences) lines_.push_back({t, order_++, s});
    }

    std::size_t sentence_count() const { return lines_.size(); }

    std::string str() const {
        auto sorted = lines_;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) { return a.t < b.t; });
        std::string out;
        for (const auto& l : sorted) out += format_iso8601(l.t) + "\t" + l.sentence + "\n";
        return out;
    }

private:
    struct Line {
        UtcSeconds t;
        std::size_t order;
        std::string sentence;
    };
    std::vector<Line> lines_;
    std::size_t order_ = 0;
    int next_seq_ = 0;
};

/// Fixes every `step` from `start` to `end` inclusive at `sog` knots, drifting
/// slowly east around `center` so implied speeds stay plausible.
inline std::vector<Fix> run_fixes(UtcSeconds start, UtcSeconds end, std::chrono::seconds step, geo::LatLon center,
                                  double sog) {
    std::vector<Fix> out;
    const double deg_per_s = sog / 60.0 / 3600.0;
    for (auto t = start; t <= end; t += step) {
        const double dt = static_cast<double>((t - start).count());
        out.push_back({t, center.lat, center.lon + deg_per_s * dt, sog});
    }
    return out;
}

inline ais::StaticReport type5(Mmsi m, std::string name, std::string callsign, int ship_type) {
    ais::StaticReport s;
    s.message_type = 5;
    s.mmsi = m;
    s.vessel_name = std::move(name);
    s.callsign = std::move(callsign);
    s.imo_number = 9000000 + m.value % 1000000;
    s.ship_type_code = ship_type;
    return s;
}

inline std::string registry_csv(const std::vector<identity::RegistryEntry>& entries) {
    std::string out = std::string(identity::registry_header) + "\n";
    for (const auto& e : entries)
        out += e.mmsi.str() + "," + (e.imo_number ? std::to_string(*e.imo_number) : "") + "," + e.callsign + "," +
               e.name + "," + e.gear_type + "," + e.source_list + "\n";
    return out;
}

inline nlohmann::json square_zone_geojson(const std::string& id, const std::string& name, double min_lon,
                                          double min_lat, double max_lon, double max_lat,
                                          const std::string& closure_start) {
    nlohmann::json ring = nlohmann::json::array({{min_lon, min_lat}, {max_lon, min_lat}, {max_lon, max_lat},
                                                 {min_lon, max_lat}, {min_lon, min_lat}});
    return {{"type", "FeatureCollection"},
            {"features",
             nlohmann::json::array({{{"type", "Feature"},
                                     {"properties", {{"id", id}, {"name", name}, {"closure_start", closure_start}}},
                                     {"geometry", {{"type", "Polygon"}, {"coordinates", nlohmann::json::array({ring})}}}}})}};
}

/// Compliant vessels and one violator around a square closed area.
/// Compliant vessels fish inside until the closure and outside after it;
/// the violator fishes outside except for one run inside after the closure.
/// The first half of the compliant fleet is registered, the rest
/// self-identify as fishing; the violator does neither.
struct ClosureScenario {
    std::string log;
    std::string registry;
    nlohmann::json zones;
    std::string zone_id = "pipa";
    UtcDate closure{};
    Mmsi violator;
    std::vector<Mmsi> compliant;
    std::vector<Run> runs;
    /// Expected report: month -> inside / outside hours.
    std::map<UtcDate, std::pair<double, double>> expected_report;
    /// The violator's single post-closure run inside the zone.
    Run violation;
    std::size_t violator_fishing_days = 0;
};

inline ClosureScenario closure_scenario(int compliant_vessels = 10) {
    ClosureScenario sc;
    const auto first_day = *parse_date("2014-10-01");
    sc.closure = *parse_date("2015-01-01");
    const int days = 182;
    const geo::LatLon inside{-3.0, -171.5}, outside{-3.0, -168.0};
    sc.zones = square_zone_geojson(sc.zone_id, "Phoenix Islands Protected Area", -172.0, -4.0, -170.0, -2.0,
                                   format_date(sc.closure));
    sc.violator = Mmsi{538005203};

    LogWriter log;
    std::vector<identity::RegistryEntry> registry;

    auto fish = [&](Mmsi m, UtcDate day, int start_min, int minutes, geo::LatLon center, double lat_offset) {
        const UtcSeconds start = UtcSeconds{day} + std::chrono::minutes(start_min);
        const UtcSeconds end = start + std::chrono::minutes(minutes);
        center.lat += lat_offset;
        log.position(m, {start - 10min, center.lat, center.lon - 0.03, 10.0});
        for (const auto& f : run_fixes(start, end, 5min, center, 3.0)) log.position(m, f);
        log.position(m, {end + 10min, center.lat, center.lon + 0.03, 10.0});
        sc.runs.push_back({m, start, end, center});
        const bool in = center.lon > -172.0 && center.lon < -170.0;
        auto& row = sc.expected_report[month_start(day)];
        const double h = to_hours(end - start);
        (in ? row.first : row.second) += h;
    };

    for (int i = 0; i < compliant_vessels; ++i) {
        const Mmsi m{static_cast<std::uint32_t>(538001000 + i)};
        sc.compliant.push_back(m);
        if (i < compliant_vessels / 2) {
            registry.push_back({m, 9100000u + static_cast<std::uint32_t>(i), "V7C" + std::to_string(i),
                                "PACIFIC " + std::to_string(i), "purse_seines", "WCPFC"});
        } else {
            log.statics(UtcSeconds{first_day} + std::chrono::minutes(1 + i),
                        type5(m, "TUNA " + std::to_string(i), "V7T" + std::to_string(i), ais::fishing_ship_type));
        }
        for (int d = 0; d < days; ++d) {
            if ((d + i) % 7 != 0) continue;
            const UtcDate day = first_day + std::chrono::days(d);
            fish(m, day, 6 * 60 + 10, 120, day < sc.closure ? inside : outside, 0.1 * (i % 10 - 5));
        }
    }

    log.statics(UtcSeconds{first_day} + 30min, type5(sc.violator, "MARSHALLS 203", "V7MS2", 70));
    for (const char* d : {"2014-10-15", "2014-11-12", "2015-01-08", "2015-02-03"}) {
        fish(sc.violator, *parse_date(d), 13 * 60, 150, outside, 0.55);
        ++sc.violator_fishing_days;
    }
    const auto violation_day = *parse_date("2015-01-20");
    fish(sc.violator, violation_day, 13 * 60, 180, inside, 0.55);
    ++sc.violator_fishing_days;
    sc.violation = sc.runs.back();

    sc.log = log.str();
    sc.registry = registry_csv(registry);
    return sc;
}

/// A random fleet exercising day and month boundaries, bridged gaps, speed
/// blips and cell edges. Half the vessels are registered, the rest are left
/// to the behavioural tiers.
struct RandomFleet {
    std::string log;
    std::string registry;
    std::size_t vessels = 0;
};

inline RandomFleet random_fleet(std::mt19937_64& rng) {
    RandomFleet out;
    LogWriter log;
    std::vector<identity::RegistryEntry> registry;
    std::uniform_int_distribution<int> n_vessels(2, 8), n_runs(1, 6), run_minutes(5, 600), step_s(60, 420),
        day(0, 75), minute_of_day(0, 1439);
    std::uniform_real_distribution<double> lat(-70.0, 70.0), lon(-179.0, 179.0), fishing_sog(0.6, 5.4),
        unit(0.0, 1.0);
    const auto base = *parse_date("2015-01-01");

    out.vessels = static_cast<std::size_t>(n_vessels(rng));
    for (std::size_t v = 0; v < out.vessels; ++v) {
        const Mmsi m{static_cast<std::uint32_t>(200000000 + rng() % 500000000)};
        if (unit(rng) < 0.5) registry.push_back({m, std::nullopt, "", "RANDOM", "trawlers", "TEST"});
        const int runs = n_runs(rng);
        for (int r = 0; r < runs; ++r) {
            const UtcSeconds start =
                UtcSeconds{base + std::chrono::days(day(rng))} + std::chrono::minutes(minute_of_day(rng));
            const UtcSeconds end = start + std::chrono::minutes(run_minutes(rng));
            geo::LatLon c{lat(rng), lon(rng)};
            if (unit(rng) < 0.3) c.lat = std::round(c.lat * 10.0) / 10.0;
            const double sog = std::round(fishing_sog(rng) * 10.0) / 10.0;
            const std::chrono::seconds step{step_s(rng)};
            for (auto f : run_fixes(start, end, step, c, sog)) {
                const double roll = unit(rng);
                if (roll < 0.05) f.sog = 9.0;
                else if (roll < 0.08) f.sog = 0.2;
                log.position(m, f, unit(rng) < 0.2 ? 18 : 1);
            }
        }
    }
    out.log = log.str();
    out.registry = registry_csv(registry);
    return out;
}

}  // namespace fwatch::synth
