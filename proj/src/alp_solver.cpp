#include "alpfeas/alp_solver.hpp"

#include "alpfeas/errors.hpp"
#include "alpfeas/simplex.hpp"

#include <stdexcept>

namespace alpfeas {

namespace {

thread_local SolverStats g_stats;

std::map<std::string, int> index_of(const std::vector<std::string>& vars) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < vars.size(); ++i) idx.emplace(vars[i], static_cast<int>(i));
    return idx;
}

LpProblem<KRatFun> build_symbolic_lp(const AlpProblem& alp) {
    const auto idx = index_of(alp.variables);
    LpProblem<KRatFun> lp;
    lp.nvars = static_cast<int>(alp.variables.size());
    for (const auto& row : alp.rows) {
        LpRow<KRatFun> r;
        r.a.assign(static_cast<size_t>(lp.nvars), KRatFun(0));
        for (const auto& [name, coeff] : row.coeffs) {
            auto it = idx.find(name);
            if (it == idx.end())
                throw std::logic_error("alp row references unknown variable '" + name + "'");
            r.a[static_cast<size_t>(it->second)] = KRatFun(coeff);
        }
        r.b = KRatFun(row.rhs);
        lp.rows.push_back(std::move(r));
    }
    return lp;
}

std::map<std::string, KRatFun> to_witness(const AlpProblem& alp, const std::vector<KRatFun>& pt) {
    std::map<std::string, KRatFun> w;
    for (size_t i = 0; i < alp.variables.size(); ++i) w.emplace(alp.variables[i], pt[i]);
    return w;
}

} // namespace

SolverStats last_solver_stats() { return g_stats; }

std::pair<Feasibility, std::map<std::string, KRatFun>> alp_feasible(const AlpProblem& alp) {
    SimplexSolver<KRatFun> solver(build_symbolic_lp(alp));
    const bool ok = solver.solve_phase1();
    g_stats = {solver.pivots(), solver.max_stall_run()};
    if (!ok) return {Feasibility::Infeasible, {}};
    return {Feasibility::Feasible, to_witness(alp, solver.point())};
}

CaseOutcome solve_case(const AlpProblem& alp, const std::vector<std::string>& nonzero_vars) {
    CaseOutcome out;
    SimplexSolver<KRatFun> solver(build_symbolic_lp(alp));
    if (!solver.solve_phase1()) {
        g_stats = {solver.pivots(), solver.max_stall_run()};
        return out;
    }
    g_stats = {solver.pivots(), solver.max_stall_run()};
    const auto idx = index_of(alp.variables);
    std::vector<KRatFun> current = solver.point();

    std::vector<int> processed;
    for (const auto& name : nonzero_vars) {
        auto it = idx.find(name);
        if (it == idx.end()) throw std::logic_error("nonzero target '" + name + "' not an ALP variable");
        const int vi = it->second;
        if (!current[static_cast<size_t>(vi)].is_zero()) {
            processed.push_back(vi);
            continue;
        }
        // The basic solution pinned this functional to zero. Look for any
        // feasible point where it is nonzero, in either direction.
        std::optional<std::vector<KRatFun>> other;
        for (int dir : {+1, -1}) {
            SimplexSolver<KRatFun> probe = solver;
            auto r = probe.maximize(vi, dir);
            if (r.unbounded || sign(r.value) > 0) {
                other = std::move(r.point);
                break;
            }
        }
        if (!other) {
            out.status = CaseOutcome::Status::Degenerate;
            return out;
        }
        // Convex combination (1-t)*current + t*other keeps feasibility;
        // pick t avoiding the finitely many values that re-zero an
        // already-processed functional. t = 1/s leaves this functional at
        // (1/s) * other[vi] != 0.
        for (long s = 1;; ++s) {
            const KRatFun t(Rational(1, s));
            const KRatFun one_minus(Rational(s - 1, s));
            bool good = true;
            for (int pj : processed) {
                const KRatFun mixed = one_minus * current[static_cast<size_t>(pj)] +
                                      t * (*other)[static_cast<size_t>(pj)];
                if (mixed.is_zero()) {
                    good = false;
                    break;
                }
            }
            if (!good) continue;
            for (size_t j = 0; j < current.size(); ++j)
                current[j] = one_minus * current[j] + t * (*other)[j];
            break;
        }
        processed.push_back(vi);
    }
    out.status = CaseOutcome::Status::Feasible;
    out.witness = to_witness(alp, current);
    return out;
}

namespace {

bool alp_rows_hold_at(const AlpProblem& alp, const std::map<std::string, Rational>& values,
                      const Rational& k) {
    for (const auto& row : alp.rows) {
        Rational lhs;
        for (const auto& [name, coeff] : row.coeffs) {
            auto it = values.find(name);
            const Rational x = it == values.end() ? Rational(0) : it->second;
            lhs += coeff.eval(k) * x;
        }
        if (!(lhs <= row.rhs.eval(k))) return false;
    }
    return true;
}

Witness concretize_impl(const std::map<std::string, KRatFun>& symbolic,
                        const LinearSystem& system, const AlpProblem* alp) {
    for (unsigned t = 0; t <= 128; ++t) {
        const Rational k = Rational::pow2(t);
        bool pole = false;
        for (const auto& [name, f] : symbolic) {
            (void)name;
            if (f.has_pole_at(k)) {
                pole = true;
                break;
            }
        }
        if (pole) continue;
        std::map<std::string, Rational> values;
        for (const auto& [name, f] : symbolic) values.emplace(name, f.eval(k));
        std::map<std::string, Rational> point;
        for (const auto& v : system.variables) {
            auto it = values.find(v);
            point.emplace(v, it == values.end() ? Rational(0) : it->second);
        }
        if (!satisfies(system, point, k)) continue;
        if (alp && !alp_rows_hold_at(*alp, values, k)) continue;
        Witness w;
        w.symbolic = symbolic;
        w.k0 = k;
        w.point = std::move(point);
        return w;
    }
    throw LimitError("concretize: no satisfying K up to 2^128; the witness does not "
                     "stabilize, which the theory rules out");
}

} // namespace

Witness concretize_witness(const std::map<std::string, KRatFun>& symbolic,
                           const LinearSystem& system) {
    return concretize_impl(symbolic, system, nullptr);
}

Witness concretize_witness_checked(const std::map<std::string, KRatFun>& symbolic,
                                   const LinearSystem& system, const AlpProblem& alp) {
    return concretize_impl(symbolic, system, &alp);
}

Feasibility fixed_k_feasible(const AlpProblem& alp, const Rational& k) {
    if (k.sign() <= 0) throw std::invalid_argument("fixed_k_feasible: k must be positive");
    const auto idx = index_of(alp.variables);
    LpProblem<Rational> lp;
    lp.nvars = static_cast<int>(alp.variables.size());
    for (const auto& row : alp.rows) {
        LpRow<Rational> r;
        r.a.assign(static_cast<size_t>(lp.nvars), Rational(0));
        for (const auto& [name, coeff] : row.coeffs)
            r.a[static_cast<size_t>(idx.at(name))] = coeff.eval(k);
        r.b = row.rhs.eval(k);
        lp.rows.push_back(std::move(r));
    }
    SimplexSolver<Rational> solver(lp);
    const bool ok = solver.solve_phase1();
    g_stats = {solver.pivots(), solver.max_stall_run()};
    return ok ? Feasibility::Feasible : Feasibility::Infeasible;
}

bool witness_satisfies_alp(const AlpProblem& alp,
                           const std::map<std::string, KRatFun>& witness) {
    for (const auto& row : alp.rows) {
        KRatFun lhs;
        for (const auto& [name, coeff] : row.coeffs) {
            auto it = witness.find(name);
            const KRatFun x = it == witness.end() ? KRatFun(0) : it->second;
            lhs += KRatFun(coeff) * x;
        }
        if (compare(lhs, KRatFun(row.rhs)) > 0) return false;
    }
    return true;
}

} // namespace alpfeas
