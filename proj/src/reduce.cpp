#include "alpfeas/reduce.hpp"

#include "alpfeas/alp_solver.hpp"
#include "alpfeas/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace alpfeas {

AlpConstraint strictify(const Constraint& lt_row, const std::string& e) {
    if (lt_row.relop != Relop::LT)
        throw std::invalid_argument("strictify: row is not a <-row");
    AlpConstraint out;
    out.coeffs = lt_row.coeffs;
    out.coeffs[e] = out.coeffs[e] + KPoly(Rational(1));
    out.rhs = KPoly(lt_row.rhs);
    return out;
}

AlpConstraint strictness_row(const std::string& e) {
    AlpConstraint out;
    out.coeffs[e] = -KPoly::k();
    out.rhs = KPoly(Rational(-1));
    return out;
}

std::pair<AlpConstraint, AlpConstraint> split_equality(const Constraint& eq_row) {
    if (eq_row.relop != Relop::EQ)
        throw std::invalid_argument("split_equality: row is not an =-row");
    AlpConstraint fwd;
    fwd.coeffs = eq_row.coeffs;
    fwd.rhs = KPoly(eq_row.rhs);
    AlpConstraint rev;
    for (const auto& [name, p] : eq_row.coeffs) rev.coeffs.emplace(name, -p);
    rev.rhs = KPoly(-eq_row.rhs);
    return {std::move(fwd), std::move(rev)};
}

std::pair<GadgetVars, std::vector<Constraint>>
build_inequation_gadget(const std::vector<Constraint>& ne_rows) {
    const int r = static_cast<int>(ne_rows.size());
    if (r < 2)
        throw std::invalid_argument("inequation gadget needs at least two !=-rows");
    GadgetVars g;
    g.e = "~e";
    for (int i = 1; i <= r; ++i) {
        g.f.push_back("~f" + std::to_string(i));
        g.y.push_back("~y" + std::to_string(i));
        g.z.push_back("~z" + std::to_string(i));
        g.offsets.push_back(KPoly::linear(Rational(1), Rational(i))); // K + i
    }
    std::vector<Constraint> eqs;
    // c_i . x - r_i = f_i, written as c_i . x - f_i = r_i
    for (int i = 0; i < r; ++i) {
        Constraint c;
        c.relop = Relop::EQ;
        c.coeffs = ne_rows[static_cast<size_t>(i)].coeffs;
        c.coeffs[g.f[static_cast<size_t>(i)]] = KPoly(Rational(-1));
        c.rhs = ne_rows[static_cast<size_t>(i)].rhs;
        eqs.push_back(std::move(c));
    }
    // f_i = sum_{j != i} y_j, written as sum y_j - f_i = 0
    for (int i = 0; i < r; ++i) {
        Constraint c;
        c.relop = Relop::EQ;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            c.coeffs[g.y[static_cast<size_t>(j)]] = KPoly(Rational(1));
        }
        c.coeffs[g.f[static_cast<size_t>(i)]] = KPoly(Rational(-1));
        c.rhs = Rational(0);
        eqs.push_back(std::move(c));
    }
    // (K+i) y_i = z_i, written as (K+i) y_i - z_i = 0
    for (int i = 0; i < r; ++i) {
        Constraint c;
        c.relop = Relop::EQ;
        c.coeffs[g.y[static_cast<size_t>(i)]] = g.offsets[static_cast<size_t>(i)];
        c.coeffs[g.z[static_cast<size_t>(i)]] = KPoly(Rational(-1));
        c.rhs = Rational(0);
        eqs.push_back(std::move(c));
    }
    return {std::move(g), std::move(eqs)};
}

std::vector<CaseDescriptor> enumerate_cases(int r) {
    std::vector<CaseDescriptor> out;
    if (r <= 0) {
        out.push_back(CaseDescriptor::empty());
        return out;
    }
    if (r == 1) {
        out.push_back(CaseDescriptor::single(Sign::Neg));
        out.push_back(CaseDescriptor::single(Sign::Pos));
        return out;
    }
    static constexpr std::pair<Sign, Sign> kSignOrder[] = {
        {Sign::Neg, Sign::Neg}, {Sign::Neg, Sign::Pos}, {Sign::Pos, Sign::Neg}, {Sign::Pos, Sign::Pos}};
    for (int a = 1; a < r; ++a) {
        for (int b = a + 1; b <= r; ++b) {
            for (const auto& [sa, sb] : kSignOrder) {
                out.push_back(CaseDescriptor::pair(a, b, sa, sb));
            }
        }
    }
    return out;
}

namespace {

/// sign POS: e - v <= 0 (v >= e); sign NEG: v + e <= 0 (v <= -e).
AlpConstraint sign_row(const std::string& var, Sign s, const std::string& e) {
    AlpConstraint row;
    if (s == Sign::Pos) {
        row.coeffs[e] = KPoly(Rational(1));
        row.coeffs[var] = KPoly(Rational(-1));
    } else {
        row.coeffs[var] = KPoly(Rational(1));
        row.coeffs[e] = KPoly(Rational(1));
    }
    row.rhs = KPoly();
    return row;
}

} // namespace

std::vector<AlpConstraint> case_rows(const CaseDescriptor& c, const GadgetVars& gadget) {
    std::vector<AlpConstraint> out;
    switch (c.kind) {
    case CaseDescriptor::Kind::Empty:
        return out;
    case CaseDescriptor::Kind::Single:
        out.push_back(sign_row(gadget.f.at(0), c.sign_a, gadget.e));
        break;
    case CaseDescriptor::Kind::Pair:
        out.push_back(sign_row(gadget.z.at(static_cast<size_t>(c.a - 1)), c.sign_a, gadget.e));
        out.push_back(sign_row(gadget.z.at(static_cast<size_t>(c.b - 1)), c.sign_b, gadget.e));
        break;
    }
    out.push_back(strictness_row(gadget.e));
    return out;
}

ReductionBundle reduce(const LinearSystem& system) {
    ReductionBundle bundle;
    bundle.original = system;

    std::vector<Constraint> ne_rows;
    for (const auto& c : system.constraints)
        if (c.relop == Relop::NE) ne_rows.push_back(c);
    const int r = static_cast<int>(ne_rows.size());
    const SystemCounts counts = system.counts();
    const bool needs_e = counts.lt > 0 || r > 0;

    GadgetVars& g = bundle.gadget;
    std::vector<Constraint> gadget_eqs;
    if (r >= 2) {
        auto built = build_inequation_gadget(ne_rows);
        g = std::move(built.first);
        gadget_eqs = std::move(built.second);
    } else if (r == 1) {
        g.e = "~e";
        g.f.push_back("~f1");
        Constraint c;
        c.relop = Relop::EQ;
        c.coeffs = ne_rows[0].coeffs;
        c.coeffs[g.f[0]] = KPoly(Rational(-1));
        c.rhs = ne_rows[0].rhs;
        gadget_eqs.push_back(std::move(c));
    } else if (needs_e) {
        g.e = "~e";
    }

    std::vector<std::string> variables = system.variables;
    if (needs_e) variables.push_back(g.e);
    for (const auto& v : g.f) variables.push_back(v);
    for (const auto& v : g.y) variables.push_back(v);
    for (const auto& v : g.z) variables.push_back(v);

    std::vector<AlpConstraint> base;
    bool strictness_added = false;
    for (const auto& c : system.constraints) {
        switch (c.relop) {
        case Relop::LE: {
            AlpConstraint row;
            row.coeffs = c.coeffs;
            row.rhs = KPoly(c.rhs);
            base.push_back(std::move(row));
            break;
        }
        case Relop::LT:
            base.push_back(strictify(c, g.e));
            if (!strictness_added) {
                base.push_back(strictness_row(g.e));
                strictness_added = true;
            }
            break;
        case Relop::EQ: {
            auto [fwd, rev] = split_equality(c);
            base.push_back(std::move(fwd));
            base.push_back(std::move(rev));
            break;
        }
        case Relop::NE:
            break; // handled by the gadget equalities
        }
    }
    for (const auto& eq : gadget_eqs) {
        auto [fwd, rev] = split_equality(eq);
        base.push_back(std::move(fwd));
        base.push_back(std::move(rev));
    }

    for (const auto& c : enumerate_cases(r)) {
        AlpProblem alp;
        alp.variables = variables;
        alp.case_desc = c;
        for (const auto& row : base) alp.add_row(row);
        for (const auto& row : case_rows(c, g)) alp.add_row(row);
        bundle.alps.push_back(std::move(alp));
    }
    return bundle;
}

namespace {

struct CaseResult {
    enum class Kind { Infeasible, Degenerate, Feasible };
    Kind kind = Kind::Infeasible;
    Witness witness;
};

CaseResult run_case(const AlpProblem& alp, const std::vector<std::string>& f_vars,
                    const LinearSystem& system) {
    CaseResult res;
    CaseOutcome outcome = solve_case(alp, f_vars);
    switch (outcome.status) {
    case CaseOutcome::Status::Infeasible:
        res.kind = CaseResult::Kind::Infeasible;
        break;
    case CaseOutcome::Status::Degenerate:
        res.kind = CaseResult::Kind::Degenerate;
        break;
    case CaseOutcome::Status::Feasible:
        res.kind = CaseResult::Kind::Feasible;
        res.witness = concretize_witness_checked(outcome.witness, system, alp);
        break;
    }
    return res;
}

} // namespace

Verdict decide_feasibility(const LinearSystem& system, const DecideOptions& options) {
    const ReductionBundle bundle = reduce(system);
    const size_t n = bundle.alps.size();

    Verdict verdict;
    verdict.alp_count = static_cast<int>(n);

    std::vector<CaseResult> results(n);
    if (options.jobs <= 1) {
        for (size_t i = 0; i < n; ++i) {
            results[i] = run_case(bundle.alps[i], bundle.gadget.f, system);
            if (results[i].kind == CaseResult::Kind::Feasible) break; // lowest index found
        }
    } else {
        std::atomic<size_t> next{0};
        std::atomic<size_t> best{n};
        std::mutex mu;
        std::exception_ptr failure;
        auto worker = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= n) return;
                if (i > best.load()) continue; // a lower case already certified
                try {
                    CaseResult res = run_case(bundle.alps[i], bundle.gadget.f, system);
                    if (res.kind == CaseResult::Kind::Feasible) {
                        size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                    }
                    std::lock_guard<std::mutex> lock(mu);
                    results[i] = std::move(res);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int jobs = std::min<int>(options.jobs, static_cast<int>(n));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (size_t i = 0; i < n; ++i) {
        if (results[i].kind == CaseResult::Kind::Degenerate) ++verdict.degenerate_cases;
        if (results[i].kind == CaseResult::Kind::Feasible) {
            verdict.status = Feasibility::Feasible;
            verdict.feasible_case = bundle.alps[i].case_desc;
            verdict.witness = std::move(results[i].witness);
            return verdict;
        }
    }
    verdict.status = Feasibility::Infeasible;
    return verdict;
}

LinearSystem augment_nontrivial(const LinearSystem& system,
                                const std::vector<std::string>& subset) {
    std::vector<std::string> issues;
    if (subset.empty()) issues.push_back("subset is empty");
    std::set<std::string> seen;
    for (const auto& v : subset) {
        if (!system.has_variable(v)) issues.push_back("unknown variable '" + v + "'");
        if (!seen.insert(v).second) issues.push_back("duplicate subset member '" + v + "'");
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    LinearSystem out = system;
    std::vector<std::string> w_names;
    for (size_t j = 0; j < subset.size(); ++j) {
        w_names.push_back("~w" + std::to_string(j + 1));
        out.variables.push_back(w_names.back());
    }
    Constraint ne;
    ne.relop = Relop::NE;
    for (const auto& w : w_names) ne.coeffs[w] = KPoly(Rational(1));
    ne.rhs = Rational(0);
    out.constraints.push_back(std::move(ne));
    for (size_t j = 0; j < subset.size(); ++j) {
        Constraint eq;
        eq.relop = Relop::EQ;
        eq.coeffs[subset[j]] = KPoly(Rational(1));
        // x = (K + j) w, j = 1..m
        eq.coeffs[w_names[j]] = -KPoly::linear(Rational(1), Rational(static_cast<long>(j) + 1));
        eq.rhs = Rational(0);
        out.constraints.push_back(std::move(eq));
    }
    return out;
}

Rational gadget_matrix_det(int n) {
    if (n < 2) throw std::invalid_argument("gadget_matrix_det: N must be at least 2");
    const size_t sz = static_cast<size_t>(n);
    std::vector<std::vector<mpz_class>> m(sz, std::vector<mpz_class>(sz, 1));
    for (size_t i = 0; i < sz; ++i) m[i][i] = 0;

    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign_flip = 1;
    for (size_t k = 0; k + 1 < sz; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < sz && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == sz) return Rational(0);
            std::swap(m[k], m[swap_row]);
            sign_flip = -sign_flip;
        }
        for (size_t i = k + 1; i < sz; ++i) {
            for (size_t j = k + 1; j < sz; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpz_class det = m[sz - 1][sz - 1];
    if (sign_flip < 0) det = -det;
    if (det == 0) throw std::logic_error("gadget matrix determinant is zero");
    return Rational(det, mpz_class(1));
}

} // namespace alpfeas
