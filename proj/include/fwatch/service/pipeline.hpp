#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fwatch/ais/decoder.hpp"
#include "fwatch/effort/records.hpp"
#include "fwatch/grid/grid.hpp"
#include "fwatch/identity/profile.hpp"
#include "fwatch/identity/registry.hpp"
#include "fwatch/service/config.hpp"
#include "fwatch/service/serialize.hpp"
#include "fwatch/track/persist.hpp"
#include "fwatch/zone/geojson.hpp"
#include "fwatch/zone/report.hpp"
#include "fwatch/zone/violations.hpp"

namespace fwatch::service {

/// Everything one batch run derives from its inputs.
struct Analysis {
    PipelineConfig config;
    ais::DecodeStats decode;
    track::TrackStore tracks;
    identity::RegistryIndex registry;
    zone::ZoneSet zones;
    std::map<Mmsi, identity::VesselProfile> profiles;
    /// Segments found before dropping Unclassified vessels.
    std::size_t candidate_segments = 0;
    /// Segments of Known, Likely and Suspected vessels only.
    std::vector<effort::FishingSegment> segments;
    std::vector<effort::EffortRecord> records;
    std::vector<zone::ViolationAlert> alerts;
    std::string report_zone;
    std::vector<zone::ShiftRow> report;
    grid::EffortGrid grid;
};

/// decode -> ingest -> classify -> detect effort -> zone checks -> grid.
inline Analysis analyze(std::istream& log, identity::RegistryIndex registry, zone::ZoneSet zones,
                        const PipelineConfig& config) {
    Analysis a;
    a.config = config;
    a.tracks = track::TrackStore(config.track);
    a.registry = std::move(registry);
    a.zones = std::move(zones);

    auto profile = [&](Mmsi m) -> identity::VesselProfile& {
        return a.profiles.try_emplace(m, m, config.classifier).first->second;
    };

    ais::StreamDecoder decoder(config.fragment_timeout);
    std::string line;
    while (std::getline(log, line)) {
        auto rec = decoder.feed_log_line(line);
        if (!rec) continue;
        if (const auto* p = std::get_if<ais::PositionReport>(&rec->message)) {
            if (a.tracks.ingest(*p, rec->received_at) == track::Disposition::Accepted) profile(p->mmsi);
        } else {
            const auto& s = std::get<ais::StaticReport>(rec->message);
            profile(s.mmsi).apply_static_report(s);
        }
    }
    a.decode = decoder.stats();

    for (auto& [m, p] : a.profiles)
        if (const auto* matches = a.registry.find(m)) p.add_registry_entries(*matches);

    std::vector<effort::FishingSegment> all;
    for (const auto& [m, track] : a.tracks.tracks()) {
        auto segs = effort::detect_vessel_effort(track, config.effort, config.gap_threshold);
        auto& p = profile(m);
        for (auto& s : segs) {
            p.update_on_effort({s.mmsi(), s.t_start, s.t_end});
            all.push_back(std::move(s));
        }
    }
    a.candidate_segments = all.size();
    for (auto& s : all)
        if (a.profiles.at(s.mmsi()).tier() != identity::Tier::Unclassified) a.segments.push_back(std::move(s));

    a.records = effort::effort_records(a.segments);
    a.alerts = zone::detect_violations(a.segments, a.zones.zones);
    a.grid = grid::bin_effort(a.segments, grid::GridSpec(config.resolution_deg));

    const zone::Zone* report_zone = nullptr;
    if (!config.report_zone.empty()) {
        report_zone = a.zones.find(config.report_zone);
    } else {
        for (const auto& z : a.zones.zones)
            if (z.closure_start) {
                report_zone = &z;
                break;
            }
    }
    if (report_zone && !a.segments.empty()) {
        a.report_zone = report_zone->id;
        auto first = a.segments.front().t_start, last = a.segments.front().t_end;
        for (const auto& s : a.segments) {
            first = std::min(first, s.t_start);
            last = std::max(last, s.t_end);
        }
        a.report = zone::effort_shift_report(a.segments, *report_zone, date_of(first), date_of(last));
    } else if (report_zone) {
        a.report_zone = report_zone->id;
    }
    return a;
}

namespace detail {
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
}  // namespace detail

/// Artifact file name -> contents, in write order. The summary embeds a
/// content hash of the other five files and its own counts as the snapshot id.
struct Artifacts {
    std::vector<std::pair<std::string, std::string>> files;
    std::string snapshot_id;
};

inline json run_summary(const Analysis& a, const std::string& snapshot_id) {
    json errors = json::object();
    for (const auto& [e, n] : a.decode.errors) errors[std::string(to_string(e))] = n;
    std::map<std::string, std::size_t> tiers = {{"known", 0}, {"likely", 0}, {"suspected", 0}, {"unclassified", 0}};
    for (const auto& [m, p] : a.profiles) ++tiers[std::string(identity::to_string(p.tier()))];
    double effort_hours = 0.0;
    for (const auto& r : a.records) effort_hours += r.hours;
    const auto& ts = a.tracks.stats();
    return {
        {"snapshot_id", snapshot_id},
        {"decode",
         {{"lines_read", a.decode.lines_read},
          {"accepted", a.decode.accepted},
          {"messages", a.decode.messages},
          {"pending_fragments", a.decode.pending_fragments},
          {"errors", errors}}},
        {"tracks",
         {{"vessels", a.tracks.vessel_count()},
          {"points", a.tracks.size()},
          {"duplicates", ts.duplicates},
          {"spikes", ts.spikes},
          {"invalid", ts.invalid}}},
        {"registry", {{"vessels", a.registry.size()}, {"malformed_rows", a.registry.malformed_rows}}},
        {"zones", {{"loaded", a.zones.zones.size()}, {"rejected", a.zones.rejected}, {"auto_closed", a.zones.auto_closed}}},
        {"vessels", tiers},
        {"effort",
         {{"candidate_segments", a.candidate_segments},
          {"segments", a.segments.size()},
          {"records", a.records.size()},
          {"hours", effort_hours}}},
        {"alerts", a.alerts.size()},
        {"grid", {{"resolution_deg", a.grid.spec().resolution()}, {"cells", a.grid.size()}, {"hours", a.grid.total_hours()}}},
        {"report_zone", a.report_zone.empty() ? json(nullptr) : json(a.report_zone)},
    };
}

inline Artifacts render_artifacts(const Analysis& a) {
    Artifacts out;
    std::ostringstream tracks, effort, alerts, report, grid;
    track::write_tracks(a.tracks, tracks);
    write_effort_csv(effort, a.records);
    write_alerts_jsonl(alerts, a.alerts);
    write_report_csv(report, a.report);
    write_grid_csv(grid, a.grid);
    out.files = {{"tracks.txt", tracks.str()},
                 {"effort.csv", effort.str()},
                 {"alerts.jsonl", alerts.str()},
                 {"report.csv", report.str()},
                 {"grid.csv", grid.str()}};
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& [name, body] : out.files) h = detail::fnv1a(body, detail::fnv1a(name, h));
    h = detail::fnv1a(run_summary(a, "").dump(), h);
    char id[20];
    std::snprintf(id, sizeof id, "%016llx", static_cast<unsigned long long>(h));
    out.snapshot_id = id;
    out.files.emplace_back("summary.json", run_summary(a, out.snapshot_id).dump(2) + "\n");
    return out;
}

struct PipelineInputs {
    std::string input;
    std::string registry;
    std::string zones;
    std::optional<std::string> config;
};

/// Failure tagged with the stage that could not proceed.
struct StageError : Error {
    StageError(std::string stage_name, const Error& cause)
        : Error(cause.code(), "[" + stage_name + "] " + cause.what()), stage(std::move(stage_name)) {}
    std::string stage;
};

/// Loads and analyzes inputs. Throws StageError on unreadable inputs or a
/// bad config; per-record problems are only counted.
inline Analysis load_and_analyze(const PipelineInputs& in) {
    auto stage = [](const char* name, auto&& fn) {
        try {
            return fn();
        } catch (const Error& e) {
            throw StageError(name, e);
        } catch (const std::exception& e) {
            throw StageError(name, Error(Errc::IoFailure, e.what()));
        }
    };
    PipelineConfig config = stage("config", [&] { return in.config ? load_config(*in.config) : PipelineConfig{}; });
    auto log = stage("input", [&] {
        auto f = std::make_unique<std::ifstream>(in.input);
        if (!*f) throw Error(Errc::IoFailure, "cannot open input " + in.input);
        return f;
    });
    auto registry = stage("registry", [&] { return identity::load_registry(in.registry); });
    auto zones = stage("zones", [&] { return zone::load_zones(in.zones); });
    return analyze(*log, std::move(registry), std::move(zones), config);
}

inline void write_artifacts(const Artifacts& art, const std::filesystem::path& out_dir) {
    try {
        std::filesystem::create_directories(out_dir);
        for (const auto& [name, body] : art.files) {
            std::ofstream f(out_dir / name, std::ios::binary);
            f << body;
            if (!f) throw Error(Errc::IoFailure, "cannot write " + (out_dir / name).string());
        }
    } catch (const Error& e) {
        throw StageError("output", e);
    } catch (const std::filesystem::filesystem_error& e) {
        throw StageError("output", Error(Errc::IoFailure, e.what()));
    }
}

}  // namespace fwatch::service
