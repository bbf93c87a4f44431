#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "fwatch/effort/detector.hpp"
#include "fwatch/error.hpp"
#include "fwatch/grid/grid.hpp"
#include "fwatch/identity/profile.hpp"
#include "fwatch/text.hpp"
#include "fwatch/track/store.hpp"

namespace fwatch::service {

/// Every tunable threshold of the pipeline, with its default.
struct PipelineConfig {
    std::chrono::seconds fragment_timeout{60};
    std::chrono::seconds gap_threshold = track::default_gap_threshold;
    track::TrackParams track;
    effort::EffortParams effort;
    identity::ClassifierParams classifier;
    double resolution_deg = 0.1;
    /// Zone used for the monthly inside/outside report; empty picks the
    /// first zone that has a closure date.
    std::string report_zone;
    std::string cors_origin = "*";
};

namespace detail {

inline std::string unquote(std::string_view v) {
    if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') || (v.front() == '\'' && v.back() == '\'')))
        return std::string(v.substr(1, v.size() - 2));
    return std::string(v);
}

}  // namespace detail

/// Parses `key = value` lines; `#` starts a comment, string values may be
/// quoted. Unknown keys and unparsable values are errors.
inline PipelineConfig parse_config(std::istream& in) {
    PipelineConfig c;
    using Setter = std::function<bool(std::string_view)>;
    auto number = [](auto& field, double scale = 1.0) {
        return Setter([&field, scale](std::string_view v) {
            auto x = text::parse_number<double>(v);
            if (!x || !std::isfinite(*x) || *x < 0) return false;
            using F = std::remove_reference_t<decltype(field)>;
            if constexpr (std::is_same_v<F, std::chrono::seconds>)
                field = std::chrono::seconds{static_cast<long long>(std::llround(*x * scale))};
            else if constexpr (std::is_same_v<F, std::size_t>)
                field = static_cast<std::size_t>(*x);
            else
                field = *x;
            return true;
        });
    };
    const std::map<std::string, Setter, std::less<>> setters = {
        {"fragment_timeout_seconds", number(c.fragment_timeout)},
        {"gap_threshold_hours", number(c.gap_threshold, 3600.0)},
        {"spike_limit_kn", number(c.track.spike_limit_kn)},
        {"v_min_kn", number(c.effort.v_min_kn)},
        {"v_max_kn", number(c.effort.v_max_kn)},
        {"min_duration_minutes", number(c.effort.min_duration, 60.0)},
        {"bridge_tolerance_minutes", number(c.effort.bridge_tolerance, 60.0)},
        {"suspected_day_threshold", number(c.classifier.suspected_day_threshold)},
        {"suspected_min_day_hours", number(c.classifier.min_day_hours)},
        {"resolution_deg", number(c.resolution_deg)},
        {"report_zone", Setter([&c](std::string_view v) { c.report_zone = detail::unquote(v); return true; })},
        {"cors_origin", Setter([&c](std::string_view v) { c.cors_origin = detail::unquote(v); return true; })},
    };

    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::string_view l = line;
        if (auto hash = l.find('#'); hash != std::string_view::npos && l.find('"') == std::string_view::npos)
            l = l.substr(0, hash);
        l = text::trim(l);
        if (l.empty()) continue;
        const auto eq = l.find('=');
        if (eq == std::string_view::npos)
            throw Error(Errc::BadConfig, "line " + std::to_string(lineno) + ": expected key = value");
        const auto key = text::trim(l.substr(0, eq));
        const auto value = text::trim(l.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end())
            throw Error(Errc::BadConfig, "line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
        if (!it->second(value))
            throw Error(Errc::BadConfig, "line " + std::to_string(lineno) + ": bad value for '" + std::string(key) + "'");
    }
    if (c.effort.v_min_kn > c.effort.v_max_kn) throw Error(Errc::BadConfig, "v_min_kn exceeds v_max_kn");
    if (c.gap_threshold.count() <= 0) throw Error(Errc::BadConfig, "gap_threshold_hours must be positive");
    try {
        grid::GridSpec{c.resolution_deg};
    } catch (const Error& e) {
        throw Error(Errc::BadConfig, e.what());
    }
    return c;
}

inline PipelineConfig parse_config(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

inline PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open config " + path);
    return parse_config(in);
}

}  // namespace fwatch::service
