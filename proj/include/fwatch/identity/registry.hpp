#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwatch/error.hpp"
#include "fwatch/mmsi.hpp"
#include "fwatch/text.hpp"

namespace fwatch::identity {

/// One row of an authorized-vessel list.
struct RegistryEntry {
    Mmsi mmsi;
    std::optional<std::uint32_t> imo_number;
    std::string callsign;
    std::string name;
    std::string gear_type;
    std::string source_list;

    bool operator==(const RegistryEntry&) const = default;
};

struct RegistryIndex {
    std::map<Mmsi, std::vector<RegistryEntry>> entries;
    std::size_t malformed_rows = 0;

    const std::vector<RegistryEntry>* find(Mmsi m) const {
        auto it = entries.find(m);
        return it == entries.end() ? nullptr : &it->second;
    }
    std::size_t size() const noexcept { return entries.size(); }
};

inline constexpr std::string_view registry_header = "mmsi,imo,callsign,name,gear_type,source_list";

inline RegistryIndex load_registry(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || text::trim(line) != registry_header)
        throw Error(Errc::MissingHeader, "expected '" + std::string(registry_header) + "'");

    RegistryIndex index;
    while (std::getline(in, line)) {
        const auto trimmed = text::trim(line);
        if (trimmed.empty()) continue;
        const auto row = text::split_csv(trimmed);
        if (!row || row->size() != 6) {
            ++index.malformed_rows;
            continue;
        }
        const auto& f = *row;
        auto mmsi = Mmsi::parse(text::trim(f[0]));
        std::optional<std::uint32_t> imo;
        bool ok = mmsi && mmsi->valid();
        if (ok && !text::trim(f[1]).empty()) {
            imo = text::parse_number<std::uint32_t>(text::trim(f[1]));
            ok = imo.has_value();
        }
        RegistryEntry e{mmsi.value_or(Mmsi{}), imo, std::string(text::trim(f[2])), std::string(text::trim(f[3])),
                        std::string(text::trim(f[4])), std::string(text::trim(f[5]))};
        const bool any_field = e.imo_number || !e.callsign.empty() || !e.name.empty() || !e.gear_type.empty() ||
                               !e.source_list.empty();
        if (!ok || !any_field) {
            ++index.malformed_rows;
            continue;
        }
        index.entries[e.mmsi].push_back(std::move(e));
    }
    return index;
}

inline RegistryIndex load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open registry " + path);
    return load_registry(in);
}

}  // namespace fwatch::identity
