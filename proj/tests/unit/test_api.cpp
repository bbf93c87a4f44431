#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "fwatch/service/server.hpp"
#include "synthetic_fleet.hpp"

using namespace fwatch;
using namespace fwatch::service;
using nlohmann::json;

namespace {

std::shared_ptr<const ApiService> demo_service() {
    static const auto svc = [] {
        const auto sc = synth::closure_scenario(2);
        std::istringstream in(sc.log), reg(sc.registry);
        return make_service(analyze(in, identity::load_registry(reg), zone::load_zones(sc.zones), {}),
                            "2015-06-01T00:00:00Z");
    }();
    return svc;
}

json get(const std::string& path, QueryParams q = {}, int want = 200) {
    const auto r = demo_service()->handle(path, q);
    EXPECT_EQ(r.status, want) << path << " " << r.body;
    auto j = json::parse(r.body);
    EXPECT_EQ(j["snapshot_id"], demo_service()->snapshot().snapshot_id) << path;
    return j;
}

}  // namespace

TEST(Api, VesselsHideUnclassifiedByDefault) {
    const auto all = get("/v1/vessels", {{"tier", "all"}});
    EXPECT_EQ(all["vessels"].size(), 3u);
    const auto suspected = get("/v1/vessels", {{"tier", "suspected"}});
    ASSERT_EQ(suspected["vessels"].size(), 1u);
    EXPECT_EQ(suspected["vessels"][0]["mmsi"], 538005203);
    EXPECT_EQ(get("/v1/vessels", {{"tier", "known,likely"}})["vessels"].size(), 2u);
    const auto bad = get("/v1/vessels", {{"tier", "fishy"}}, 400);
    EXPECT_EQ(bad["field"], "tier");
}

TEST(Api, VesselDetailAndNotFound) {
    const auto v = get("/v1/vessels/538005203");
    EXPECT_EQ(v["vessel"]["tier"], "suspected");
    EXPECT_EQ(v["vessel"]["name"], "MARSHALLS 203");
    EXPECT_FALSE(v["vessel"]["effort"].empty());
    get("/v1/vessels/000000000", {}, 404);
    EXPECT_EQ(get("/v1/vessels/12345", {}, 400)["field"], "mmsi");
    get("/v1/nothing", {}, 404);
}

TEST(Api, TrackIsTimeOrderedAndFiltered) {
    const auto t = get("/v1/vessels/538005203/track");
    const auto& pts = t["points"];
    ASSERT_GT(pts.size(), 10u);
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1]["t"].get<std::string>(), pts[i]["t"].get<std::string>());
    const auto day = get("/v1/vessels/538005203/track", {{"from", "2015-01-20"}, {"to", "2015-01-20"}});
    EXPECT_EQ(day["points"].size(), 39u);
    EXPECT_TRUE(day["points"][1]["fishing_candidate"].get<bool>());
    EXPECT_FALSE(day["points"][0]["fishing_candidate"].get<bool>());
    EXPECT_EQ(get("/v1/vessels/538005203/track", {{"from", "yesterday"}}, 400)["field"], "from");
    EXPECT_EQ(get("/v1/vessels/538005203/track", {{"from", "2015-02-01"}, {"to", "2015-01-01"}}, 400)["field"], "to");
}

TEST(Api, GridDelegatesToQueryBbox) {
    const auto& data = *demo_service()->snapshot().data;
    const auto range = *data.grid.date_range();
    const auto want = data.grid.query_bbox({-172, -4, -170, -2}, range.first, range.second);
    const auto g = get("/v1/effort/grid", {{"bbox", "-172,-4,-170,-2"}});
    ASSERT_EQ(g["cells"].size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(g["cells"][i], to_json(want[i], data.grid.spec()));
    EXPECT_TRUE(get("/v1/effort/grid", {{"bbox", "-5,-5,5,5"}})["cells"].empty());
    const auto jan = get("/v1/effort/grid", {{"bbox", "-172,-4,-170,-2"}, {"from", "2015-01-01"}, {"to", "2015-01-31"}});
    ASSERT_EQ(jan["cells"].size(), 1u);
    EXPECT_EQ(jan["cells"][0]["hours"], 3.0);
    const auto coarse = get("/v1/effort/grid", {{"res", "1"}});
    double fine_total = 0, coarse_total = 0;
    const auto fine = get("/v1/effort/grid");
    for (const auto& c : fine["cells"]) fine_total += c["hours"].get<double>();
    for (const auto& c : coarse["cells"]) coarse_total += c["hours"].get<double>();
    EXPECT_NEAR(fine_total, coarse_total, 1e-9 * fine_total);
    EXPECT_EQ(get("/v1/effort/grid", {{"bbox", "1,2,3"}}, 400)["field"], "bbox");
    EXPECT_EQ(get("/v1/effort/grid", {{"bbox", "5,0,1,1"}}, 400)["field"], "bbox");
    EXPECT_EQ(get("/v1/effort/grid", {{"res", "0.7"}}, 400)["field"], "res");
}

TEST(Api, ZonesAlertsSummary) {
    const auto z = get("/v1/zones");
    ASSERT_EQ(z["features"].size(), 1u);
    EXPECT_EQ(z["features"][0]["properties"]["id"], "pipa");
    const auto a = get("/v1/alerts");
    ASSERT_EQ(a["alerts"].size(), 1u);
    EXPECT_EQ(a["alerts"][0]["mmsi"], 538005203);
    const auto s = get("/v1/summary");
    EXPECT_EQ(s["built_at"], "2015-06-01T00:00:00Z");
    EXPECT_EQ(s["alerts"], 1);
}

TEST(Api, ResponsesArePure) {
    for (const char* p : {"/v1/vessels", "/v1/effort/grid", "/v1/summary", "/v1/alerts"})
        EXPECT_EQ(demo_service()->handle(p, {}).body, demo_service()->handle(p, {}).body);
}

TEST(Api, HttpServerRoundTripAndSwap) {
    auto holder = std::make_shared<SnapshotHolder>(demo_service());
    httplib::Server server;
    mount_api(server, holder, "http://localhost:5173");
    const int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto r = client.Get("/v1/vessels/538005203");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 200);
    EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
    EXPECT_EQ(r->body, demo_service()->handle("/v1/vessels/538005203", {}).body);
    r = client.Get("/v1/effort/grid?bbox=-172,-4,-170,-2&from=2015-01-01&to=2015-01-31");
    ASSERT_TRUE(r);
    EXPECT_EQ(json::parse(r->body)["cells"].size(), 1u);
    r = client.Get("/v1/vessels/000000000");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 404);

    const auto sc = synth::closure_scenario(4);
    std::istringstream in(sc.log), reg(sc.registry);
    holder->swap(make_service(analyze(in, identity::load_registry(reg), zone::load_zones(sc.zones), {}), "later"));
    r = client.Get("/v1/summary");
    ASSERT_TRUE(r);
    EXPECT_EQ(json::parse(r->body)["built_at"], "later");
    EXPECT_NE(json::parse(r->body)["snapshot_id"], demo_service()->snapshot().snapshot_id);

    server.stop();
    th.join();
}
