#include "alpfeas/corpus.hpp"

#include "alpfeas/errors.hpp"
#include "alpfeas/oracle.hpp"
#include "alpfeas/reduce.hpp"

#include <chrono>
#include <sstream>

namespace alpfeas {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Constraint random_row(std::mt19937_64& rng, const std::vector<std::string>& vars, Relop op,
                      const CorpusParams& params) {
    std::map<std::string, Rational> coeffs;
    for (const auto& v : vars) {
        const long c = pick(rng, -params.coeff_range, params.coeff_range);
        if (c != 0) coeffs[v] = Rational(c);
    }
    const Rational rhs(pick(rng, -params.coeff_range, params.coeff_range));
    const bool flip = (op == Relop::LE || op == Relop::LT) && rng() % 2 == 0;
    // route through normalize so generated rows match parsed ones
    return normalize(coeffs, Rational(0), op, flip, {}, rhs);
}

Constraint negated_le(const Constraint& c) {
    std::map<std::string, Rational> coeffs;
    for (const auto& [name, p] : c.coeffs) coeffs[name] = -p.constant();
    return normalize(coeffs, Rational(0), Relop::LE, false, {}, -c.rhs);
}

Constraint as_ne(const Constraint& c) {
    std::map<std::string, Rational> coeffs;
    for (const auto& [name, p] : c.coeffs) coeffs[name] = p.constant();
    return normalize(coeffs, Rational(0), Relop::NE, false, {}, c.rhs);
}

} // namespace

LinearSystem random_system(std::mt19937_64& rng, const CorpusParams& params) {
    LinearSystem sys;
    const int n = static_cast<int>(pick(rng, 1, params.max_vars));
    for (int i = 1; i <= n; ++i) sys.variables.push_back("x" + std::to_string(i));
    sys.declared_variables = true;

    const int p = static_cast<int>(pick(rng, 0, params.max_le));
    const int q = static_cast<int>(pick(rng, 0, params.max_lt));
    const int r = static_cast<int>(pick(rng, 0, params.max_ne));
    const int eq = params.allow_eq && rng() % 4 == 0 ? 1 : 0;

    std::vector<Constraint> le_rows;
    for (int i = 0; i < p; ++i) {
        // every fourth row (when possible) negates an earlier <=-row,
        // forcing an equality on purpose
        if (!le_rows.empty() && rng() % 4 == 0) {
            const auto& base = le_rows[static_cast<size_t>(pick(rng, 0, static_cast<long>(le_rows.size()) - 1))];
            le_rows.push_back(negated_le(base));
        } else {
            le_rows.push_back(random_row(rng, sys.variables, Relop::LE, params));
        }
    }
    for (const auto& c : le_rows) sys.constraints.push_back(c);
    for (int i = 0; i < q; ++i)
        sys.constraints.push_back(random_row(rng, sys.variables, Relop::LT, params));
    if (eq == 1) sys.constraints.push_back(random_row(rng, sys.variables, Relop::EQ, params));
    for (int i = 0; i < r; ++i) {
        // a third of the inequations sit exactly on an earlier row's
        // hyperplane, which is where the gadget earns its keep
        if (!le_rows.empty() && rng() % 3 == 0) {
            const auto& base = le_rows[static_cast<size_t>(pick(rng, 0, static_cast<long>(le_rows.size()) - 1))];
            sys.constraints.push_back(as_ne(base));
        } else {
            sys.constraints.push_back(random_row(rng, sys.variables, Relop::NE, params));
        }
    }
    return validate(std::move(sys));
}

BenchResult run_bench(std::uint64_t seed, int count, const CorpusParams& params, int jobs) {
    BenchResult result;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const LinearSystem sys = random_system(rng, params);
        const SystemCounts counts = sys.counts();
        BenchRow row;
        row.index = i;
        row.n_vars = static_cast<int>(sys.variables.size());
        row.p = counts.le;
        row.q = counts.lt;
        row.r = counts.ne;
        row.eq = counts.eq;
        row.oracle_cases = 1L << counts.ne;
        try {
            DecideOptions opts;
            opts.jobs = jobs;
            const Verdict v = decide_feasibility(sys, opts);
            const Verdict o = oracle_feasible(sys);
            row.alp_count = v.alp_count;
            row.verdict = v.status == Feasibility::Feasible ? "feasible" : "infeasible";
            row.oracle_verdict = o.status == Feasibility::Feasible ? "feasible" : "infeasible";
            row.agree = v.status == o.status;
            if (v.witness) row.k0 = v.witness->k0.str();
            if (row.agree) ++result.agreements;
        } catch (const LimitError& e) {
            row.error = e.what();
            ++result.errors;
        }
        result.rows.push_back(std::move(row));
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string bench_csv(const BenchResult& result) {
    std::ostringstream os;
    os << "index,n_vars,p,q,r,eq,verdict,oracle_verdict,agree,alp_count,oracle_cases,k0,error\n";
    for (const auto& row : result.rows) {
        os << row.index << ',' << row.n_vars << ',' << row.p << ',' << row.q << ',' << row.r << ','
           << row.eq << ',' << row.verdict << ',' << row.oracle_verdict << ','
           << (row.agree ? 1 : 0) << ',' << row.alp_count << ',' << row.oracle_cases << ','
           << row.k0 << ',' << row.error << '\n';
    }
    return os.str();
}

} // namespace alpfeas
