#include "floatdom/io.hpp"

#include <fstream>
#include <sstream>

namespace floatdom {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double number(const json& j, const char* key) {
    if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number()) parse_error(std::string("field '") + key + "' is not a number");
    return v.get<double>();
}

void check_schema(const json& j) {
    if (!j.is_object()) parse_error("expected a JSON object");
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != schema_version))
        parse_error("unsupported schema version");
}

std::string kind_of(const json& j) {
    check_schema(j);
    if (!j.contains("kind") || !j["kind"].is_string()) parse_error("missing string field 'kind'");
    return j["kind"].get<std::string>();
}

json stats_to_json(const Stats<double>& s) {
    return {{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"stddev", s.stddev}, {"count", s.count}};
}

} // namespace

ClosedCurved curve_from_json(const json& j) {
    const std::string kind = kind_of(j);
    try {
        if (kind == "fourier") {
            std::vector<Harmonicd> hs;
            if (j.contains("harmonics")) {
                if (!j["harmonics"].is_array()) parse_error("'harmonics' must be an array");
                for (const auto& h : j["harmonics"]) {
                    if (!h.is_array() || h.size() != 3 || !h[0].is_number_integer() || !h[1].is_number() ||
                        !h[2].is_number())
                        parse_error("each harmonic must be [n, a_n, b_n]");
                    hs.push_back({h[0].get<int>(), h[1].get<double>(), h[2].get<double>()});
                }
            }
            Point2d offset = Point2d::Zero();
            if (j.contains("offset")) {
                const auto& o = j["offset"];
                if (!o.is_array() || o.size() != 2 || !o[0].is_number() || !o[1].is_number())
                    parse_error("'offset' must be [x, y]");
                offset = Point2d(o[0].get<double>(), o[1].get<double>());
            }
            return FourierCurved(number(j, "a0"), std::move(hs), offset);
        }
        if (kind == "arcs") {
            if (!j.contains("arcs") || !j["arcs"].is_array()) parse_error("missing array field 'arcs'");
            std::vector<CircularArc<double>> arcs;
            for (const auto& a : j["arcs"]) {
                if (!a.is_object()) parse_error("each arc must be an object");
                CircularArc<double> arc;
                arc.center = Point2d(number(a, "cx"), number(a, "cy"));
                arc.radius = number(a, "r");
                arc.start_angle = number(a, "start");
                arc.end_angle = number(a, "end");
                if (!a.contains("ccw") || !a["ccw"].is_boolean()) parse_error("missing boolean field 'ccw'");
                arc.ccw = a["ccw"].get<bool>();
                arcs.push_back(arc);
            }
            return ArcSplineCurved(std::move(arcs));
        }
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
    parse_error("unknown curve kind '" + kind + "'");
}

json curve_to_json(const ClosedCurved& c) {
    if (const auto* f = std::get_if<FourierCurved>(&c)) {
        json hs = json::array();
        for (const auto& h : f->harmonics()) hs.push_back({h.n, h.a, h.b});
        json out = {{"schema", schema_version}, {"kind", "fourier"}, {"a0", f->mean_radius()}, {"harmonics", hs}};
        if (f->offset() != Point2d::Zero()) out["offset"] = {f->offset().x(), f->offset().y()};
        return out;
    }
    const auto& s = std::get<ArcSplineCurved>(c);
    json arcs = json::array();
    for (const auto& a : s.arcs())
        arcs.push_back({{"cx", a.center.x()},
                        {"cy", a.center.y()},
                        {"r", a.radius},
                        {"start", a.start_angle},
                        {"end", a.end_angle},
                        {"ccw", a.ccw}});
    return {{"schema", schema_version}, {"kind", "arcs"}, {"arcs", arcs}};
}

ZaKoPolygond polygon_from_json(const json& j) {
    const std::string kind = kind_of(j);
    if (kind != "polygon") parse_error("expected kind 'polygon', got '" + kind + "'");
    ZaKoPolygond p;
    if (!j.contains("vertices") || !j["vertices"].is_array()) parse_error("missing array field 'vertices'");
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            parse_error("each vertex must be [x, y]");
        p.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    if (p.vertices.size() < 6 || p.vertices.size() % 2 != 0) parse_error("polygon needs an even number >= 6 of vertices");
    if (!j.contains("k") || !j["k"].is_number_integer()) parse_error("missing integer field 'k'");
    p.k = j["k"].get<int>();
    return p;
}

json polygon_to_json(const ZaKoPolygond& p) {
    json vs = json::array();
    for (const auto& v : p.vertices) vs.push_back({v.x(), v.y()});
    return {{"schema", schema_version}, {"kind", "polygon"}, {"vertices", vs}, {"k", p.k}};
}

json profile_to_json(const FloatProfile<double>& p) {
    const bool fy = p.model == FloatModel::FinnYoung;
    const Stats<double>& primary = fy ? p.angle_end : p.cap_area;
    json out = {{"schema", schema_version},
                {"model", to_string(p.model)},
                {"parameter", p.parameter},
                {fy ? "gamma" : "delta", p.parameter},
                {"n_samples", p.size()},
                {"max_abs_deviation", p.max_abs_deviation},
                {"mean", primary.mean},
                {"stddev", primary.stddev},
                {"verdict", p.verdict},
                {"tol", p.tol}};
    out["angle_end"] = stats_to_json(p.angle_end);
    out["chord_length"] = stats_to_json(p.chord_length);
    out["cap_area"] = stats_to_json(p.cap_area);
    if (!fy) {
        out["cap_relative_spread"] = p.cap_area.relative_spread();
        out["chord_relative_spread"] = p.chord_length.relative_spread();
        out["angle_mismatch"] = p.angle_mismatch;
        out["complement_cap_spread"] = p.complement_cap_spread;
        out["corner_samples"] = p.corner_samples;
    }
    return out;
}

json gamma_roots_to_json(const std::vector<GammaRootd>& roots) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back({{"n", r.n}, {"gamma", r.gamma}, {"residual", r.residual}});
    return {{"schema", schema_version}, {"roots", arr}};
}

json search_result_to_json(const SearchResult<double>& r, const SearchProblem<double>& pb) {
    json coeffs = json::array();
    for (const auto& h : r.coefficients) coeffs.push_back({h.n, h.a, h.b});
    json out = {{"schema", schema_version},
                {"mode", to_string(pb.mode)},
                {"parameter", pb.parameter},
                {"seed", pb.seed},
                {"coefficients", coeffs},
                {"objective", r.objective},
                {"iterations", r.iterations},
                {"min_rho", r.min_rho},
                {"converged", r.converged},
                {"stop_reason", r.stop_reason},
                {"max_coefficient", r.max_coefficient()}};
    if (r.verification) out["verification"] = profile_to_json(*r.verification);
    else out["verification"] = nullptr;
    return out;
}

json equivalence_to_json(const EquivalenceReport<double>& r) {
    return {{"area_constant", r.area_constant},   {"chord_constant", r.chord_constant},
            {"angles_equal", r.angles_equal},     {"agree", r.agree},
            {"area_spread", r.area_spread},       {"chord_spread", r.chord_spread},
            {"angle_mismatch", r.angle_mismatch}};
}

json diagnostic_to_json(const ConstantAngleFinding<double>& f) {
    return {{"applicable", f.applicable},     {"triggered", f.triggered},
            {"consistent", f.consistent},     {"theta_mean", f.theta_mean},
            {"theta_spread", f.theta_spread}, {"curvature_spread", f.curvature_spread},
            {"message", f.message}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        parse_error("'" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorCode::InvalidArgument, "write to '" + path + "' failed");
}

} // namespace floatdom
