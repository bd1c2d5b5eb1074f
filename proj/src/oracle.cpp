#include "alpfeas/oracle.hpp"

#include "alpfeas/errors.hpp"
#include "alpfeas/simplex.hpp"

#include <stdexcept>

namespace alpfeas {

namespace {

void fill_row(LpRow<Rational>& r, const Constraint& c,
              const std::map<std::string, int>& idx, bool negate) {
    for (const auto& [name, coeff] : c.coeffs) {
        if (coeff.degree() > 0)
            throw std::invalid_argument("oracle: parametric coefficients are not supported");
        r.a[static_cast<size_t>(idx.at(name))] = negate ? -coeff.constant() : coeff.constant();
    }
    r.b = negate ? -c.rhs : c.rhs;
}

} // namespace

StrictLpResult strict_lp_feasible(const std::vector<Constraint>& le_rows,
                                  const std::vector<Constraint>& lt_rows,
                                  const std::vector<std::string>& variables) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < variables.size(); ++i) idx.emplace(variables[i], static_cast<int>(i));
    const int nx = static_cast<int>(variables.size());
    const int t_var = nx; // shared strictness slack, last variable

    LpProblem<Rational> lp;
    lp.nvars = nx + 1;
    auto blank = [&] {
        LpRow<Rational> r;
        r.a.assign(static_cast<size_t>(lp.nvars), Rational(0));
        return r;
    };
    for (const auto& c : le_rows) {
        LpRow<Rational> r = blank();
        fill_row(r, c, idx, false);
        lp.rows.push_back(std::move(r));
    }
    for (const auto& c : lt_rows) {
        LpRow<Rational> r = blank();
        fill_row(r, c, idx, false);
        r.a[static_cast<size_t>(t_var)] = Rational(1); // tightened by +t
        lp.rows.push_back(std::move(r));
    }
    { // 0 <= t <= 1
        LpRow<Rational> r = blank();
        r.a[static_cast<size_t>(t_var)] = Rational(-1);
        r.b = Rational(0);
        lp.rows.push_back(std::move(r));
        LpRow<Rational> u = blank();
        u.a[static_cast<size_t>(t_var)] = Rational(1);
        u.b = Rational(1);
        lp.rows.push_back(std::move(u));
    }

    StrictLpResult out;
    SimplexSolver<Rational> solver(lp);
    if (!solver.solve_phase1()) return out;

    std::vector<Rational> pt;
    if (lt_rows.empty()) {
        pt = solver.point();
    } else {
        auto r = solver.maximize(t_var, +1);
        if (r.unbounded) throw std::logic_error("strict_lp: t is bounded by construction");
        if (r.value.sign() <= 0) return out; // no interior point
        pt = std::move(r.point);
    }
    out.status = Feasibility::Feasible;
    for (size_t i = 0; i < variables.size(); ++i) out.point.emplace(variables[i], pt[i]);
    return out;
}

Verdict oracle_feasible(const LinearSystem& system, const OracleOptions& options) {
    std::vector<Constraint> le_rows;
    std::vector<Constraint> lt_rows;
    std::vector<Constraint> ne_rows;
    for (const auto& c : system.constraints) {
        switch (c.relop) {
        case Relop::LE: le_rows.push_back(c); break;
        case Relop::LT: lt_rows.push_back(c); break;
        case Relop::EQ: {
            Constraint fwd = c;
            fwd.relop = Relop::LE;
            le_rows.push_back(std::move(fwd));
            Constraint rev;
            rev.relop = Relop::LE;
            for (const auto& [name, p] : c.coeffs) rev.coeffs.emplace(name, -p);
            rev.rhs = -c.rhs;
            le_rows.push_back(std::move(rev));
            break;
        }
        case Relop::NE: ne_rows.push_back(c); break;
        }
    }
    const int r = static_cast<int>(ne_rows.size());
    if (r > options.max_ne)
        throw LimitError("oracle: " + std::to_string(r) + " inequations exceed the cap of " +
                         std::to_string(options.max_ne));

    Verdict verdict;
    for (unsigned long assign = 0; assign < (1UL << r); ++assign) {
        std::vector<Constraint> strict = lt_rows;
        for (int i = 0; i < r; ++i) {
            const Constraint& ne = ne_rows[static_cast<size_t>(i)];
            Constraint row;
            row.relop = Relop::LT;
            if ((assign >> i) & 1UL) {
                // c.x > r, i.e. -c.x < -r
                for (const auto& [name, p] : ne.coeffs) row.coeffs.emplace(name, -p);
                row.rhs = -ne.rhs;
            } else {
                row.coeffs = ne.coeffs;
                row.rhs = ne.rhs;
            }
            strict.push_back(std::move(row));
        }
        StrictLpResult res = strict_lp_feasible(le_rows, strict, system.variables);
        if (res.status == Feasibility::Feasible) {
            verdict.status = Feasibility::Feasible;
            Witness w;
            w.k0 = Rational(0); // not ALP-derived; no threshold involved
            w.point = std::move(res.point);
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    verdict.status = Feasibility::Infeasible;
    return verdict;
}

} // namespace alpfeas
