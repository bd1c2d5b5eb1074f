#include "alpfeas/simplex.hpp"

#include "alpfeas/rational.hpp"

#include "doctest.h"

using namespace alpfeas;

namespace {

LpProblem<Rational> lp_from(int nvars, std::vector<std::pair<std::vector<long>, long>> rows) {
    LpProblem<Rational> lp;
    lp.nvars = nvars;
    for (auto& [a, b] : rows) {
        LpRow<Rational> r;
        for (long v : a) r.a.emplace_back(v);
        r.b = Rational(b);
        lp.rows.push_back(std::move(r));
    }
    return lp;
}

} // namespace

TEST_CASE("phase 1 basic feasibility") {
    // x <= 2, -x <= -1  (1 <= x <= 2)
    auto lp = lp_from(1, {{{1}, 2}, {{-1}, -1}});
    SimplexSolver<Rational> s(lp);
    REQUIRE(s.solve_phase1());
    CHECK(s.basis_is_identity());
    const auto pt = s.point();
    CHECK(pt[0] >= Rational(1));
    CHECK(pt[0] <= Rational(2));
}

TEST_CASE("phase 1 detects infeasibility") {
    // x <= 0, -x <= -1
    auto lp = lp_from(1, {{{1}, 0}, {{-1}, -1}});
    SimplexSolver<Rational> s(lp);
    CHECK_FALSE(s.solve_phase1());
}

TEST_CASE("constant contradictory row") {
    // 0*x <= -1
    auto lp = lp_from(1, {{{0}, -1}});
    SimplexSolver<Rational> s(lp);
    CHECK_FALSE(s.solve_phase1());
}

TEST_CASE("empty problem is feasible") {
    LpProblem<Rational> lp;
    lp.nvars = 2;
    SimplexSolver<Rational> s(lp);
    CHECK(s.solve_phase1());
    CHECK(s.point() == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("phase 2 maximizes") {
    // x + y <= 4, x - y <= 2, -x <= 0, -y <= 0; max x = 3 at (3,1)
    auto lp = lp_from(2, {{{1, 1}, 4}, {{1, -1}, 2}, {{-1, 0}, 0}, {{0, -1}, 0}});
    SimplexSolver<Rational> s(lp);
    REQUIRE(s.solve_phase1());
    auto r = s.maximize(0, +1);
    REQUIRE_FALSE(r.unbounded);
    CHECK(r.value == Rational(3));
    CHECK(r.point[0] == Rational(3));
    CHECK(r.point[1] == Rational(1));
    CHECK(s.basis_is_identity());

    SimplexSolver<Rational> s2(lp);
    REQUIRE(s2.solve_phase1());
    auto rmin = s2.maximize(0, -1); // minimize x: x >= 0 binds
    REQUIRE_FALSE(rmin.unbounded);
    CHECK(rmin.value == Rational(0));
}

TEST_CASE("phase 2 detects unboundedness and returns a ray point") {
    // -x <= 0; max x unbounded
    auto lp = lp_from(1, {{{-1}, 0}});
    SimplexSolver<Rational> s(lp);
    REQUIRE(s.solve_phase1());
    auto r = s.maximize(0, +1);
    CHECK(r.unbounded);
    CHECK(r.point[0] > Rational(0));
}

TEST_CASE("degenerate equalities and redundant rows") {
    // x = 1 by two rows, plus the same row repeated (redundant after
    // phase 1), and y free: maximize y unbounded.
    auto lp = lp_from(2, {{{1, 0}, 1}, {{-1, 0}, -1}, {{-1, 0}, -1}});
    SimplexSolver<Rational> s(lp);
    REQUIRE(s.solve_phase1());
    const auto pt = s.point();
    CHECK(pt[0] == Rational(1));
    auto r = s.maximize(1, +1);
    CHECK(r.unbounded);
    CHECK(r.point[0] == Rational(1));
}

TEST_CASE("pivot limit raises LimitError") {
    // x + y >= 4 with x <= 3, y <= 3 needs more than one phase-1 pivot
    auto lp = lp_from(2, {{{-1, -1}, -4}, {{1, 0}, 3}, {{0, 1}, 3}});
    SimplexSolver<Rational> check(lp);
    REQUIRE(check.solve_phase1());
    REQUIRE(check.pivots() > 1);
    SimplexSolver<Rational> s(lp, /*pivot_limit=*/1);
    CHECK_THROWS_AS((void)s.solve_phase1(), LimitError);
}
