#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fwatch/ais/messages.hpp"
#include "fwatch/error.hpp"
#include "fwatch/identity/registry.hpp"
#include "fwatch/time.hpp"

namespace fwatch::identity {

enum class Tier { Known, Likely, Suspected, Unclassified };

constexpr std::string_view to_string(Tier t) noexcept {
    switch (t) {
        case Tier::Known: return "known";
        case Tier::Likely: return "likely";
        case Tier::Suspected: return "suspected";
        case Tier::Unclassified: return "unclassified";
    }
    return "unclassified";
}

inline std::optional<Tier> parse_tier(std::string_view s) {
    for (Tier t : {Tier::Known, Tier::Likely, Tier::Suspected, Tier::Unclassified})
        if (s == to_string(t)) return t;
    return std::nullopt;
}

struct ClassifierParams {
    /// Distinct UTC dates of apparent fishing needed for Suspected.
    std::size_t suspected_day_threshold = 3;
    /// Fishing hours a date must accumulate to count toward that threshold.
    double min_day_hours = 1.0;
};

/// Registry match beats AIS self-identification beats repeated detection.
constexpr Tier classify_vessel(bool registry_match, bool self_id_fishing, std::size_t fishing_days,
                               std::size_t suspected_day_threshold = 3) noexcept {
    if (registry_match) return Tier::Known;
    if (self_id_fishing) return Tier::Likely;
    if (fishing_days >= suspected_day_threshold) return Tier::Suspected;
    return Tier::Unclassified;
}

/// Minimal view of a fishing interval needed to update a profile.
struct EffortInterval {
    Mmsi mmsi;
    UtcSeconds t_start{};
    UtcSeconds t_end{};
};

class VesselProfile {
public:
    explicit VesselProfile(Mmsi mmsi, ClassifierParams params = {}) : mmsi_(mmsi), params_(params) {}

    Mmsi mmsi() const noexcept { return mmsi_; }
    Tier tier() const noexcept {
        return classify_vessel(!registry_matches_.empty(), self_id_fishing_, fishing_days_observed().size(),
                               params_.suspected_day_threshold);
    }

    const std::vector<RegistryEntry>& registry_matches() const noexcept { return registry_matches_; }
    bool self_id_fishing() const noexcept { return self_id_fishing_; }
    const std::string& latest_name() const noexcept { return latest_name_; }
    const std::string& latest_callsign() const noexcept { return latest_callsign_; }
    std::optional<int> ship_type() const noexcept { return ship_type_; }

    /// UTC dates whose accumulated fishing hours reach `min_day_hours`.
    std::set<UtcDate> fishing_days_observed() const {
        std::set<UtcDate> days;
        for (const auto& [d, h] : hours_by_day_)
            if (h >= params_.min_day_hours) days.insert(d);
        return days;
    }
    const std::map<UtcDate, double>& fishing_hours_by_day() const noexcept { return hours_by_day_; }

    void add_registry_entries(const std::vector<RegistryEntry>& entries) {
        for (const auto& e : entries) {
            if (e.mmsi != mmsi_) throw Error(Errc::MmsiMismatch, e.mmsi.str() + " vs " + mmsi_.str());
            registry_matches_.push_back(e);
        }
    }

    /// Self-identification is sticky: one fishing-type report is enough.
    void apply_static_report(const ais::StaticReport& r) {
        if (r.mmsi != mmsi_) throw Error(Errc::MmsiMismatch, r.mmsi.str() + " vs " + mmsi_.str());
        if (!r.vessel_name.empty()) latest_name_ = r.vessel_name;
        if (!r.callsign.empty()) latest_callsign_ = r.callsign;
        if (r.ship_type_code) ship_type_ = r.ship_type_code;
        self_id_fishing_ = self_id_fishing_ || r.self_id_fishing;
    }

    /// Credits the interval's hours to every UTC date it overlaps.
    void update_on_effort(const EffortInterval& seg) {
        if (seg.mmsi != mmsi_) throw Error(Errc::MmsiMismatch, seg.mmsi.str() + " vs " + mmsi_.str());
        for (const auto& share : split_by_day(seg.t_start, seg.t_end)) hours_by_day_[share.bucket] += to_hours(share.duration);
    }

private:
    Mmsi mmsi_;
    ClassifierParams params_;
    std::vector<RegistryEntry> registry_matches_;
    bool self_id_fishing_ = false;
    std::string latest_name_;
    std::string latest_callsign_;
    std::optional<int> ship_type_;
    std::map<UtcDate, double> hours_by_day_;
};

}  // namespace fwatch::identity
