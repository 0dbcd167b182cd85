#ifndef FLOATDOM_IO_HPP
#define FLOATDOM_IO_HPP

#include "floatdom/archimedean.hpp"
#include "floatdom/closed_curve.hpp"
#include "floatdom/gamma.hpp"
#include "floatdom/profile.hpp"
#include "floatdom/search.hpp"
#include "floatdom/zako.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace floatdom {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

// Curves: {"kind":"fourier","a0":..,"harmonics":[[n,a,b],..]} or
// {"kind":"arcs","arcs":[{"cx","cy","r","start","end","ccw"},..]}.
// Errors are reported as ErrorCode::Parse.
ClosedCurved curve_from_json(const json& j);
json curve_to_json(const ClosedCurved& c);

/// {"kind":"polygon","vertices":[[x,y],..],"k":n}
ZaKoPolygond polygon_from_json(const json& j);
json polygon_to_json(const ZaKoPolygond& p);

json profile_to_json(const FloatProfile<double>& p);
json gamma_roots_to_json(const std::vector<GammaRootd>& roots);
json search_result_to_json(const SearchResult<double>& r, const SearchProblem<double>& pb);
json equivalence_to_json(const EquivalenceReport<double>& r);
json diagnostic_to_json(const ConstantAngleFinding<double>& f);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace floatdom

#endif // FLOATDOM_IO_HPP
