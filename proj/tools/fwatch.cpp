#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fwatch/fwatch.hpp"
#include "fwatch/service/server.hpp"

namespace {

using namespace fwatch;

std::atomic<bool> reload_requested{false};
httplib::Server* active_server = nullptr;

void on_signal(int sig) {
    if (sig == SIGHUP)
        reload_requested = true;
    else if (active_server)
        active_server->stop();
}

std::string now_iso() {
    return format_iso8601(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

int fail(const std::exception& e) {
    std::cerr << "fwatch: " << e.what() << '\n';
    return 2;
}

int cmd_decode(const std::string& input, const std::string& out_path) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "fwatch: [input] cannot open " << input << '\n';
        return 2;
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "fwatch: [output] cannot write " << out_path << '\n';
            return 2;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    ais::StreamDecoder dec;
    std::string line;
    while (std::getline(in, line))
        if (auto r = dec.feed_log_line(line)) out << service::to_json(r->message, r->received_at).dump() << '\n';
    const auto& s = dec.stats();
    std::cerr << "lines=" << s.lines_read << " accepted=" << s.accepted << " messages=" << s.messages
              << " pending=" << s.pending_fragments;
    for (const auto& [e, n] : s.errors) std::cerr << ' ' << to_string(e) << '=' << n;
    std::cerr << '\n';
    return 0;
}

service::Analysis analyze_optional(const std::string& input, const std::string& registry, const std::string& zones,
                                   const std::string& config) {
    auto cfg = config.empty() ? service::PipelineConfig{} : service::load_config(config);
    std::ifstream in(input);
    if (!in) throw Error(Errc::IoFailure, "[input] cannot open " + input);
    auto reg = registry.empty() ? identity::RegistryIndex{} : identity::load_registry(registry);
    auto zs = zones.empty() ? zone::ZoneSet{} : zone::load_zones(zones);
    return service::analyze(in, std::move(reg), std::move(zs), cfg);
}

int cmd_effort(const std::string& input, const std::string& registry, const std::string& zones,
               const std::string& config, const std::string& out_path) {
    try {
        const auto a = analyze_optional(input, registry, zones, config);
        if (out_path.empty()) {
            service::write_effort_csv(std::cout, a.records);
        } else {
            std::ofstream f(out_path);
            service::write_effort_csv(f, a.records);
            if (!f) throw Error(Errc::IoFailure, "[output] cannot write " + out_path);
        }
    } catch (const std::exception& e) {
        return fail(e);
    }
    return 0;
}

int cmd_run(const service::PipelineInputs& in, const std::string& out_dir) {
    try {
        const auto analysis = service::load_and_analyze(in);
        const auto artifacts = service::render_artifacts(analysis);
        service::write_artifacts(artifacts, out_dir);
        std::cout << "snapshot " << artifacts.snapshot_id << ": " << analysis.decode.messages << " messages, "
                  << analysis.tracks.vessel_count() << " vessels, " << analysis.segments.size()
                  << " fishing segments, " << analysis.alerts.size() << " alerts -> " << out_dir << '\n';
    } catch (const std::exception& e) {
        return fail(e);
    }
    return 0;
}

int cmd_serve(const service::PipelineInputs& in, const std::string& bind, const std::string& static_dir) {
    std::shared_ptr<service::SnapshotHolder> holder;
    std::string cors;
    try {
        auto analysis = service::load_and_analyze(in);
        cors = analysis.config.cors_origin;
        holder = std::make_shared<service::SnapshotHolder>(service::make_service(std::move(analysis), now_iso()));
    } catch (const std::exception& e) {
        return fail(e);
    }

    const auto colon = bind.rfind(':');
    const std::string host = colon == std::string::npos ? bind : bind.substr(0, colon);
    const int port = colon == std::string::npos ? 8080 : std::stoi(bind.substr(colon + 1));

    httplib::Server server;
    service::mount_api(server, holder, cors, static_dir);
    active_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::signal(SIGHUP, on_signal);

    std::atomic<bool> running{true};
    std::thread reloader([&] {
        while (running) {
            std::this_thread::sleep_for(std::chrono::milliseconds(200));
            if (!reload_requested.exchange(false)) continue;
            try {
                holder->swap(service::make_service(service::load_and_analyze(in), now_iso()));
                std::cerr << "fwatch: snapshot reloaded " << holder->get()->snapshot().snapshot_id << '\n';
            } catch (const std::exception& e) {
                std::cerr << "fwatch: reload failed, keeping previous snapshot: " << e.what() << '\n';
            }
        }
    });

    std::cerr << "fwatch: serving snapshot " << holder->get()->snapshot().snapshot_id << " on " << host << ':'
              << port << '\n';
    const bool ok = server.listen(host, port);
    running = false;
    reloader.join();
    if (!ok) {
        std::cerr << "fwatch: [serve] cannot bind " << bind << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fwatch: AIS decoding, fishing-effort detection and closure monitoring"};
    app.require_subcommand(1);

    std::string input, registry, zones, config, out, bind = "127.0.0.1:8080", static_dir;

    auto* decode = app.add_subcommand("decode", "Decode an AIS log to JSON lines");
    decode->add_option("--input", input, "Feed log (<ISO-8601>\\t<sentence> per line)")->required();
    decode->add_option("--out", out, "Output file (default stdout)");

    auto* effort = app.add_subcommand("effort", "Emit per-vessel daily fishing hours as CSV");
    effort->add_option("--input", input, "Feed log")->required();
    effort->add_option("--registry", registry, "Registry CSV");
    effort->add_option("--zones", zones, "Zones GeoJSON");
    effort->add_option("--config", config, "Config file");
    effort->add_option("--out", out, "Output file (default stdout)");

    auto* run = app.add_subcommand("run", "Run the full batch pipeline and write artifacts");
    auto* serve = app.add_subcommand("serve", "Run the pipeline and serve the read-only HTTP API");
    for (auto* sub : {run, serve}) {
        sub->add_option("--input", input, "Feed log")->required();
        sub->add_option("--registry", registry, "Registry CSV")->required();
        sub->add_option("--zones", zones, "Zones GeoJSON")->required();
        sub->add_option("--config", config, "Config file");
    }
    run->add_option("--out", out, "Artifact directory")->required();
    serve->add_option("--bind", bind, "host:port")->capture_default_str();
    serve->add_option("--static", static_dir, "Directory served at / (map client)");

    CLI11_PARSE(app, argc, argv);

    service::PipelineInputs in{input, registry, zones, std::nullopt};
    if (!config.empty()) in.config = config;

    if (*decode) return cmd_decode(input, out);
    if (*effort) return cmd_effort(input, registry, zones, config, out);
    if (*run) return cmd_run(in, out);
    return cmd_serve(in, bind, static_dir);
}
