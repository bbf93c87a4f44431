#pragma once

#include <fstream>
#include <map>
#include <string>

#include "fwatch/error.hpp"
#include "fwatch/text.hpp"

namespace fwatch::ais {

/// Type-of-ship code that marks a vessel as self-identified fishing.
inline constexpr int fishing_ship_type = 30;

/// Loads the checked-in `code,description` type-of-ship table.
inline std::map<int, std::string> load_ship_types(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || text::trim(line) != "code,description")
        throw Error(Errc::MissingHeader, path);
    std::map<int, std::string> table;
    while (std::getline(in, line)) {
        auto row = text::split_csv(text::trim(line));
        if (!row || row->size() != 2) continue;
        if (auto code = text::parse_number<int>((*row)[0])) table[*code] = (*row)[1];
    }
    return table;
}

}  // namespace fwatch::ais
