#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hvperf/core.hpp"
#include "oracles.hpp"

using namespace hvperf;

namespace {

auto make_spec(ObjectiveVector ideal, ObjectiveVector nadir) -> ProblemSpec
{
    ProblemSpec p;
    p.key = { "f1", 1, 2 };
    p.ideal = ideal;
    p.nadir = nadir;
    p.i_ref = -0.5;
    return p;
}

} // namespace

TEST_CASE("normalize maps ideal to origin and nadir to (1,1)")
{
    auto p = make_spec({ -3.5, 2.0 }, { 7.25, 11.0 });
    CHECK(normalize(p.nadir, p) == NormalizedObjectives { 1.0, 1.0 });
    CHECK(normalize(p.ideal, p) == NormalizedObjectives { 0.0, 0.0 });

    auto q = make_spec({ 0, 0 }, { 4, 2 });
    CHECK(normalize({ 1, 1 }, q) == NormalizedObjectives { 0.25, 0.5 });
}

TEST_CASE("normalize does not clamp")
{
    auto q = make_spec({ 0, 0 }, { 4, 2 });
    CHECK(normalize({ -4, 6 }, q) == NormalizedObjectives { -1.0, 3.0 });
}

TEST_CASE("normalize rejects non-finite input naming the coordinate")
{
    auto q = make_spec({ 0, 0 }, { 4, 2 });
    double nan = std::numeric_limits<double>::quiet_NaN();
    double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(normalize({ nan, 1 }, q), DomainError);
    REQUIRE_THROWS_WITH(normalize({ nan, 1 }, q), Catch::Matchers::ContainsSubstring("f_alpha"));
    REQUIRE_THROWS_WITH(normalize({ 1, inf }, q), Catch::Matchers::ContainsSubstring("f_beta"));
}

TEST_CASE("problem spec validation")
{
    auto p = make_spec({ 0, 0 }, { 1, 1 });
    REQUIRE_NOTHROW(p.validate());
    p.nadir.f_beta = 0.0;
    REQUIRE_THROWS_AS(p.validate(), DomainError);
    p = make_spec({ 0, 0 }, { 1, 1 });
    p.i_ref = 0.1;
    REQUIRE_THROWS_AS(p.validate(), DomainError);
    p.i_ref = -1.0;
    REQUIRE_NOTHROW(p.validate());
}

TEST_CASE("dominance examples")
{
    CHECK(dominates(NormalizedObjectives { 1, 2 }, NormalizedObjectives { 2, 3 }));
    CHECK_FALSE(dominates(NormalizedObjectives { 1, 2 }, NormalizedObjectives { 2, 1 }));
    CHECK_FALSE(dominates(NormalizedObjectives { 2, 1 }, NormalizedObjectives { 1, 2 }));
    CHECK_FALSE(dominates(NormalizedObjectives { 1, 2 }, NormalizedObjectives { 1, 2 }));
    CHECK(dominates(NormalizedObjectives { 1, 2 }, NormalizedObjectives { 1, 3 }));
}

TEST_CASE("set dominance examples")
{
    std::vector<NormalizedObjectives> a { { 0.5, 0.5 } };
    std::vector<NormalizedObjectives> b { { 1, 1 } };
    CHECK(set_dominates(a, b));

    std::vector<NormalizedObjectives> a2 { { 0.5, 0.9 } };
    std::vector<NormalizedObjectives> b2 { { 1, 1 }, { 0.4, 1.0 } };
    CHECK_FALSE(set_dominates(a2, b2));

    std::vector<NormalizedObjectives> origin { { 0, 0 } };
    std::vector<NormalizedObjectives> inside { { 0.1, 1.0 }, { 1.0, 0.3 }, { 0.5, 0.5 }, { 1, 1 } };
    CHECK(set_dominates(origin, inside));

    std::vector<NormalizedObjectives> empty;
    REQUIRE_THROWS_AS(set_dominates(empty, b), DomainError);
    REQUIRE_THROWS_AS(set_dominates(a, empty), DomainError);
}

TEST_CASE("dominance is irreflexive, antisymmetric and transitive on random triples")
{
    std::mt19937_64 rng(7);
    // coarse grid so that ties are frequent
    std::uniform_int_distribution<int> coord(0, 4);
    auto draw = [&] { return NormalizedObjectives { coord(rng) / 4.0, coord(rng) / 4.0 }; };
    for (int i = 0; i < 20000; ++i) {
        auto a = draw();
        auto b = draw();
        auto c = draw();
        CHECK_FALSE(dominates(a, a));
        if (dominates(a, b)) {
            CHECK_FALSE(dominates(b, a));
        }
        if (dominates(a, b) && dominates(b, c)) {
            CHECK(dominates(a, c));
        }
    }
}

TEST_CASE("denormalize inverts normalize")
{
    // The round trip is exact up to one ulp of the largest magnitude among y,
    // ideal and nadir; cancellation in y - ideal rules out a bound relative
    // to y alone.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lo(-100.0, 0.0);
    std::uniform_real_distribution<double> width(1e-3, 1e3);
    std::uniform_real_distribution<double> t(-0.5, 1.5);
    for (int i = 0; i < 20000; ++i) {
        ObjectiveVector ideal { lo(rng), lo(rng) };
        ObjectiveVector nadir { ideal.f_alpha + width(rng), ideal.f_beta + width(rng) };
        auto p = make_spec(ideal, nadir);
        ObjectiveVector y { ideal.f_alpha + t(rng) * (nadir.f_alpha - ideal.f_alpha),
                            ideal.f_beta + t(rng) * (nadir.f_beta - ideal.f_beta) };
        auto back = denormalize(normalize(y, p), p);
        double sa = std::max({ std::abs(y.f_alpha), std::abs(ideal.f_alpha), std::abs(nadir.f_alpha) });
        double sb = std::max({ std::abs(y.f_beta), std::abs(ideal.f_beta), std::abs(nadir.f_beta) });
        CHECK(std::abs(back.f_alpha - y.f_alpha) <= std::nextafter(sa, INFINITY) - sa);
        CHECK(std::abs(back.f_beta - y.f_beta) <= std::nextafter(sb, INFINITY) - sb);
    }
}

TEST_CASE("denormalize is exact to 1 ulp when the ideal point is the origin")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> width(1e-3, 1e3);
    std::uniform_real_distribution<double> t(0.0, 2.0);
    for (int i = 0; i < 20000; ++i) {
        auto p = make_spec({ 0, 0 }, { width(rng), width(rng) });
        ObjectiveVector y { t(rng) * p.nadir.f_alpha, t(rng) * p.nadir.f_beta };
        auto back = denormalize(normalize(y, p), p);
        CHECK(oracle::ulp_distance(back.f_alpha, y.f_alpha) <= 1);
        CHECK(oracle::ulp_distance(back.f_beta, y.f_beta) <= 1);
    }
}

TEST_CASE("set_dominates against the nadir matches a brute-force rule")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(0, 8);
    std::vector<NormalizedObjectives> nadir { { 1, 1 } };
    for (int i = 0; i < 5000; ++i) {
        std::vector<NormalizedObjectives> a;
        auto n = 1 + rng() % 4;
        for (std::size_t k = 0; k < n; ++k) {
            a.push_back({ coord(rng) / 4.0, coord(rng) / 4.0 });
        }
        bool expected = false;
        for (auto const& p : a) {
            // strictly inside on one axis and not beyond on the other
            if ((p.u < 1 && p.v <= 1) || (p.u <= 1 && p.v < 1)) {
                expected = true;
            }
        }
        CHECK(set_dominates(a, nadir) == expected);
    }
}

TEST_CASE("problem key formatting")
{
    ProblemKey k { "f2", 7, 5 };
    CHECK(k.file_stem() == "f2_d5_i7");
    CHECK(k.id() == "f2:5:7");
}
