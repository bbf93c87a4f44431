// Writes the demo fixture (two compliant vessels, one violator, one closed
// area) into a directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "synthetic_fleet.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "data/demo";
    std::filesystem::create_directories(dir);
    const auto sc = fwatch::synth::closure_scenario(2);
    auto put = [&](const char* name, const std::string& body) {
        std::ofstream f(dir / name, std::ios::binary);
        f << body;
        if (!f) {
            std::cerr << "make-demo: cannot write " << (dir / name) << '\n';
            std::exit(1);
        }
    };
    put("ais.log", sc.log);
    put("registry.csv", sc.registry);
    put("zones.geojson", sc.zones.dump(2) + "\n");
    put("fwatch.conf",
        "# Demo pipeline settings (defaults spelled out)\n"
        "fragment_timeout_seconds = 60\n"
        "gap_threshold_hours = 12\n"
        "spike_limit_kn = 50\n"
        "v_min_kn = 0.5\n"
        "v_max_kn = 5.5\n"
        "min_duration_minutes = 15\n"
        "bridge_tolerance_minutes = 5\n"
        "suspected_day_threshold = 3\n"
        "suspected_min_day_hours = 1.0\n"
        "resolution_deg = 0.1\n"
        "report_zone = pipa\n"
        "cors_origin = \"*\"\n");
    std::cout << "wrote demo fixture to " << dir << '\n';
}
