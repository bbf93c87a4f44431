#pragma once

#include <memory>
#include <string>

#include <httplib.h>

#include "fwatch/service/api.hpp"

namespace fwatch::service {

/// Mounts the `/v1/*` API (and optionally a static directory for the map
/// client) on a cpp-httplib server.
inline void mount_api(httplib::Server& server, std::shared_ptr<SnapshotHolder> holder, std::string cors_origin,
                      const std::string& static_dir = {}) {
    server.Get(R"(/v1/.*)", [holder, cors_origin](const httplib::Request& req, httplib::Response& res) {
        QueryParams q(req.params.begin(), req.params.end());
        const auto service = holder->get();
        const auto r = service->handle(req.path, q);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", cors_origin);
        res.set_content(r.body, "application/json");
    });
    server.Options(R"(/v1/.*)", [cors_origin](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", cors_origin);
        res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
        res.status = 204;
    });
    if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace fwatch::service
