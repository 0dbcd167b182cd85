#include "floatdom/io.hpp"
#include "floatdom/svg.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace floatdom;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

const ClosedCurved flower = zako_construct(midpoint_polygon<double>(3, 1 / std::sqrt(3.0)));

} // namespace

TEST_CASE("curve json round trip") {
    const FourierCurved f = FourierCurved(1.0, {{2, 0.1, -0.05}, {5, 0.0, 0.02}}).translated(Point2d(0.5, -1));
    const auto back = curve_from_json(json::parse(curve_to_json(f).dump()));
    const auto& g = std::get<FourierCurved>(back);
    CHECK(g.mean_radius() == f.mean_radius());
    REQUIRE(g.harmonics().size() == 2);
    CHECK(g.harmonics()[1].b == 0.02);
    CHECK((g.offset() - f.offset()).norm() == 0);
    for (double s : {0.0, 1.3, 4.0}) CHECK((g.point_at(s) - f.point_at(s)).norm() == 0);

    const auto j = curve_to_json(flower);
    CHECK(j["schema"] == 1);
    const auto parsed = curve_from_json(j);
    const auto& a = std::get<ArcSplineCurved>(parsed);
    const auto& b = std::get<ArcSplineCurved>(flower);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.arcs()[i].center == b.arcs()[i].center);
        CHECK(a.arcs()[i].radius == b.arcs()[i].radius);
        CHECK(a.arcs()[i].ccw == b.arcs()[i].ccw);
    }
}

TEST_CASE("malformed curve json") {
    auto expect_parse = [](const std::string& text) {
        try {
            curve_from_json(json::parse(text));
            FAIL("expected parse error for " << text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Parse);
        }
    };
    expect_parse(R"({"kind":"spline"})");
    expect_parse(R"({"a0":1})");
    expect_parse(R"({"kind":"fourier","a0":"one"})");
    expect_parse(R"({"kind":"fourier","a0":1,"harmonics":[[2,0.1]]})");
    expect_parse(R"({"kind":"arcs","arcs":[{"cx":0,"cy":0,"r":1,"start":0,"end":1}]})");
    expect_parse(R"({"schema":2,"kind":"fourier","a0":1})");
    CHECK_THROWS_AS(read_json_file("/nonexistent/curve.json"), Error);
}

TEST_CASE("polygon json") {
    const auto P = midpoint_polygon<double>(5, 1.0);
    const auto Q = polygon_from_json(json::parse(polygon_to_json(P).dump()));
    CHECK(Q.k == 5);
    REQUIRE(Q.vertices.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(Q.vertices[i] == P.vertices[i]);
    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"kind":"polygon","vertices":[[0,0]]})")), Error);
}

TEST_CASE("report json") {
    const auto p = arch_profile(flower, 0.5, 90);
    const auto j = profile_to_json(p);
    CHECK(j["model"] == "archimedean");
    CHECK(j["n_samples"] == 90);
    CHECK(j.contains("delta"));
    CHECK(j["verdict"].is_boolean());
    const auto g = gamma_roots_to_json(gamma_set<double>(6, 1e-12));
    CHECK(g["roots"].size() == 4);
    CHECK(g["roots"][0]["n"].is_number_integer());
}

TEST_CASE("svg of a circle with one chord") {
    SvgDecorations d;
    const ClosedCurved c = FourierCurved::circle();
    d.chords.push_back(chord_at_fraction(c, 0.0, 0.3));
    const auto svg = render_svg(c, d);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count(svg, "<path") == 1);
    CHECK(count(svg, "<line") == 1);
    CHECK(svg.find("nan") == std::string::npos);
    d.shade_caps = true;
    CHECK(count(render_svg(c, d), "<path") == 2);
}

TEST_CASE("svg of the flower") {
    SvgDecorations d;
    const double L = curve_perimeter(flower);
    for (int i = 0; i < 12; ++i) d.chords.push_back(chord_at_fraction(flower, L * i / 12, 0.5));
    d.labels.push_back({Point2d(0, 0), "a<b & c"});
    const auto svg = render_svg(flower, d);
    CHECK(count(svg, "<line") == 12);
    CHECK(count(svg, " A") >= 6);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
    CHECK(svg.find("a&lt;b &amp; c") != std::string::npos);
    CHECK(svg == render_svg(flower, d));
}
