#include "alpfeas/model.hpp"

#include "doctest.h"

using namespace alpfeas;

namespace {

Constraint make_row(std::map<std::string, Rational> coeffs, Relop op, Rational rhs) {
    return normalize(coeffs, Rational(0), op, false, {}, rhs);
}

} // namespace

TEST_CASE("validate counts operators") {
    LinearSystem sys;
    sys.constraints.push_back(make_row({{"x", Rational(1)}}, Relop::LE, Rational(1)));
    sys.constraints.push_back(make_row({{"x", Rational(1)}}, Relop::LT, Rational(2)));
    sys.constraints.push_back(make_row({{"x", Rational(1)}}, Relop::NE, Rational(0)));
    const LinearSystem v = validate(sys);
    CHECK(v.counts().le == 1);
    CHECK(v.counts().lt == 1);
    CHECK(v.counts().ne == 1);
    CHECK(v.counts().eq == 0);
    CHECK(v.variables == std::vector<std::string>{"x"});
}

TEST_CASE("validate accepts the empty system") {
    const LinearSystem v = validate(LinearSystem{});
    CHECK(v.constraints.empty());
    CHECK(v.counts().le == 0);
}

TEST_CASE("validate keeps constant rows") {
    LinearSystem sys;
    Constraint c;
    c.relop = Relop::LE;
    c.rhs = Rational(-1); // 0 <= -1, legal and unsatisfiable
    sys.constraints.push_back(c);
    const LinearSystem v = validate(sys);
    CHECK(v.constraints.size() == 1);
    CHECK(v.constraints[0].coeffs.empty());
}

TEST_CASE("validate rejects undeclared references and duplicate declarations") {
    LinearSystem sys;
    sys.variables = {"a", "a"};
    sys.declared_variables = true;
    CHECK_THROWS_AS(validate(sys), ValidationError);

    LinearSystem sys2;
    sys2.variables = {"a"};
    sys2.declared_variables = true;
    sys2.constraints.push_back(make_row({{"b", Rational(1)}}, Relop::LE, Rational(0)));
    CHECK_THROWS_AS(validate(sys2), ValidationError);
}

TEST_CASE("normalize flips >= and moves terms") {
    // x1 >= 2  ->  -x1 <= -2
    const Constraint a = normalize({{"x1", Rational(1)}}, Rational(0), Relop::LE, true, {}, Rational(2));
    CHECK(a.relop == Relop::LE);
    CHECK(a.coeffs.at("x1") == KPoly(Rational(-1)));
    CHECK(a.rhs == Rational(-2));

    // x1 > x2  ->  x2 - x1 < 0
    const Constraint b = normalize({{"x1", Rational(1)}}, Rational(0), Relop::LT, true,
                                   {{"x2", Rational(1)}}, Rational(0));
    CHECK(b.relop == Relop::LT);
    CHECK(b.coeffs.at("x1") == KPoly(Rational(-1)));
    CHECK(b.coeffs.at("x2") == KPoly(Rational(1)));
    CHECK(b.rhs == Rational(0));

    // 3 = x  ->  x = 3
    const Constraint c = normalize({}, Rational(3), Relop::EQ, false, {{"x", Rational(1)}}, Rational(0));
    CHECK(c.relop == Relop::EQ);
    CHECK(c.coeffs.at("x") == KPoly(Rational(1)));
    CHECK(c.rhs == Rational(3));
}

TEST_CASE("satisfies applies each relop's own semantics") {
    LinearSystem sys;
    sys.constraints.push_back(make_row({{"x", Rational(1)}}, Relop::LT, Rational(1)));
    sys.constraints.push_back(make_row({{"x", Rational(1)}}, Relop::NE, Rational(0)));
    const LinearSystem v = validate(sys);
    CHECK(satisfies(v, {{"x", Rational(1, 2)}}, Rational(1)));
    CHECK_FALSE(satisfies(v, {{"x", Rational(1)}}, Rational(1)));
    CHECK(first_violation(v, {{"x", Rational(0)}}, Rational(1)) == size_t{1});
}

TEST_CASE("alp rows deduplicate up to positive scaling") {
    AlpProblem alp;
    alp.variables = {"x", "y"};
    AlpConstraint r1;
    r1.coeffs["x"] = KPoly(Rational(1));
    r1.coeffs["y"] = KPoly(Rational(-2));
    r1.rhs = KPoly(Rational(3));
    AlpConstraint r2; // the same row scaled by 2
    r2.coeffs["x"] = KPoly(Rational(2));
    r2.coeffs["y"] = KPoly(Rational(-4));
    r2.rhs = KPoly(Rational(6));
    AlpConstraint r3; // negated: a genuinely different <=-row
    r3.coeffs["x"] = KPoly(Rational(-1));
    r3.coeffs["y"] = KPoly(Rational(2));
    r3.rhs = KPoly(Rational(-3));
    alp.add_row(r1);
    alp.add_row(r2);
    alp.add_row(r3);
    CHECK(alp.rows.size() == 2);
    alp.add_row(r1);
    CHECK(alp.rows.size() == 2);
}

TEST_CASE("case descriptor text") {
    CHECK(CaseDescriptor::empty().str() == "empty");
    CHECK(CaseDescriptor::single(Sign::Pos).str() == "single(+)");
    CHECK(CaseDescriptor::pair(1, 3, Sign::Pos, Sign::Neg).str() == "pair(1,3,+,-)");
}
