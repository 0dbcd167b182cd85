#include "floatdom/finn_young.hpp"
#include "floatdom/search.hpp"

#include <doctest.h>

#include <cmath>

using namespace floatdom;

namespace {

SearchProblem<double> arch_problem(double delta) {
    SearchProblem<double> pb;
    pb.mode = SearchMode::Archimedean;
    pb.parameter = delta;
    return pb;
}

SearchProblem<double> fy_problem(double gamma, std::vector<int> hs) {
    SearchProblem<double> pb;
    pb.mode = SearchMode::FinnYoung;
    pb.parameter = gamma;
    pb.harmonics = std::move(hs);
    return pb;
}

double root4() { return gutkin_roots<double>(4, 1e-13).front().gamma; }

} // namespace

TEST_CASE("defect vanishes on the disc") {
    for (const auto& pb : {arch_problem(0.3), fy_problem(0.8, {2, 3, 4})}) {
        const auto r = floating_defect<double>({}, pb);
        REQUIRE(r.size() == pb.samples + 1);
        CHECK(r.lpNorm<Eigen::Infinity>() < 1e-10);
    }
}

TEST_CASE("defect on known curves") {
    const double g = root4();
    const auto c = fy_curve<double>(4, g, 0.3);
    CHECK(floating_defect(c.harmonics(), fy_problem(g, {4})).lpNorm<Eigen::Infinity>() < 1e-6);
    const std::vector<Harmonicd> oval{{2, 0.2, 0.0}};
    CHECK(floating_defect(oval, arch_problem(0.25)).head(256).lpNorm<Eigen::Infinity>() > 1e-3);
    // Barrier: rho = 1 + 1.2 cos 2t dips below zero.
    const auto bad = floating_defect<double>({{2, 1.2, 0.0}}, arch_problem(0.25));
    CHECK(bad.head(256).isZero());
    CHECK(bad(256) > 0);
}

TEST_CASE("problem validation") {
    auto pb = arch_problem(0.3);
    pb.harmonics = {3, 2};
    CHECK_THROWS_AS(pb.validate(), Error);
    pb = arch_problem(1.5);
    CHECK_THROWS_AS(pb.validate(), Error);
    pb = fy_problem(1.7, {2});
    CHECK_THROWS_AS(pb.validate(), Error);
    pb = arch_problem(0.3);
    CHECK_THROWS_AS(search_floating<double>(pb, {{2, 0.95, 0.0}}), Error);
}

TEST_CASE("starting at the disc converges immediately") {
    const auto r = search_floating<double>(arch_problem(0.3), {});
    CHECK(r.converged);
    CHECK(r.objective < 1e-16);
    CHECK(r.iterations <= 1);
}

TEST_CASE("archimedean search from seed 42") {
    const auto pb = arch_problem(0.5);
    const auto r = search_floating(pb, random_init(pb));
    CHECK(r.converged);
    CHECK(r.stop_reason == "objective");
    CHECK(r.verified());
    CHECK(r.max_coefficient() > 1e-2);
    CHECK(r.min_rho >= pb.margin);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i)
        CHECK(r.objective_history[i] <= r.objective_history[i - 1]);
    CHECK(std::abs(floating_defect(r.coefficients, pb).squaredNorm() - r.objective) < 1e-12);
}

TEST_CASE("finn-young search keeps the admissible harmonic only at a root") {
    const double g = root4();
    const auto at = search_floating<double>(fy_problem(g, {4}), {{4, 0.2, 0.0}});
    CHECK(at.objective < 1e-10);
    REQUIRE(at.coefficients.size() == 1);
    CHECK(std::abs(at.coefficients[0].a) > 0.1);
    CHECK(at.verified());

    const auto off = search_floating<double>(fy_problem(0.7, {4}), {{4, 0.2, 0.0}});
    CHECK(off.converged);
    CHECK(off.max_coefficient() < 1e-6);
}

TEST_CASE("search is reproducible and thread-count independent") {
    auto pb = arch_problem(0.4);
    pb.harmonics = {2, 3, 4};
    pb.samples = 96;
    const auto a = search_floating(pb, random_init(pb));
    const auto b = search_floating(pb, random_init(pb));
    pb.threads = 3;
    const auto c = search_floating(pb, random_init(pb));
    REQUIRE(a.coefficients.size() == c.coefficients.size());
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        CHECK(a.coefficients[i].a == b.coefficients[i].a);
        CHECK(a.coefficients[i].a == c.coefficients[i].a);
        CHECK(a.coefficients[i].b == c.coefficients[i].b);
    }
    CHECK(a.objective == c.objective);
    pb.seed = 7;
    const auto other = random_init(pb);
    CHECK(other[0].a != random_init(arch_problem(0.4))[0].a);
}
