#include "alpfeas/oracle.hpp"

#include "alpfeas/corpus.hpp"
#include "alpfeas/errors.hpp"
#include "alpfeas/parser.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace alpfeas;

TEST_CASE("strict lp feasibility examples") {
    const LinearSystem a = parse_system("x < 1\n0 - x < 0\n");
    auto lt_only = [](const LinearSystem& s) {
        std::vector<Constraint> lt;
        for (const auto& c : s.constraints)
            if (c.relop == Relop::LT) lt.push_back(c);
        return lt;
    };
    auto ra = strict_lp_feasible({}, lt_only(a), a.variables);
    REQUIRE(ra.status == Feasibility::Feasible);
    CHECK(ra.point.at("x") > Rational(0));
    CHECK(ra.point.at("x") < Rational(1));

    const LinearSystem b = parse_system("x < 0\n0 - x < 0\n");
    CHECK(strict_lp_feasible({}, lt_only(b), b.variables).status == Feasibility::Infeasible);

    const LinearSystem c = parse_system("x <= 0\n0 - x <= 0\n");
    std::vector<Constraint> le(c.constraints.begin(), c.constraints.end());
    auto rc = strict_lp_feasible(le, {}, c.variables);
    REQUIRE(rc.status == Feasibility::Feasible);
    CHECK(rc.point.at("x") == Rational(0));
}

TEST_CASE("oracle examples") {
    CHECK(oracle_feasible(parse_system("x != 0\n")).status == Feasibility::Feasible);
    CHECK(oracle_feasible(parse_system("x <= 0\n0 - x <= 0\nx != 0\n")).status ==
          Feasibility::Infeasible);
    const Verdict v = oracle_feasible(parse_system("x1 + x2 != 0\nx1 - x2 != 0\nx1 <= 0\n0 - x1 <= 0\n"));
    REQUIRE(v.status == Feasibility::Feasible);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->point.at("x1") == Rational(0));
    CHECK(v.witness->point.at("x2") != Rational(0));
}

TEST_CASE("oracle witness satisfies the original system") {
    std::mt19937_64 rng(555);
    CorpusParams params;
    for (int trial = 0; trial < 80; ++trial) {
        const LinearSystem sys = random_system(rng, params);
        const Verdict v = oracle_feasible(sys);
        if (v.status == Feasibility::Feasible) {
            REQUIRE(v.witness.has_value());
            CHECK(satisfies(sys, v.witness->point, Rational(1)));
        }
    }
}

TEST_CASE("oracle verdict is invariant under row permutation") {
    std::mt19937_64 rng(556);
    CorpusParams params;
    for (int trial = 0; trial < 40; ++trial) {
        LinearSystem sys = random_system(rng, params);
        const Feasibility before = oracle_feasible(sys).status;
        std::shuffle(sys.constraints.begin(), sys.constraints.end(), rng);
        CHECK(oracle_feasible(sys).status == before);
    }
}

TEST_CASE("oracle enforces the inequation cap") {
    LinearSystem sys;
    for (int i = 0; i < 3; ++i) {
        Constraint c;
        c.relop = Relop::NE;
        c.coeffs["x" + std::to_string(i)] = KPoly(Rational(1));
        c.rhs = Rational(0);
        sys.constraints.push_back(std::move(c));
    }
    sys = validate(sys);
    OracleOptions opts;
    opts.max_ne = 2;
    CHECK_THROWS_AS(oracle_feasible(sys, opts), LimitError);
    CHECK(oracle_feasible(sys).status == Feasibility::Feasible);
}
