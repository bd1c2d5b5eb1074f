#pragma once

#include "alpfeas/errors.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace alpfeas {

/// One <=-row over free variables: sum(a[j] * x[j]) <= b.
template <class F>
struct LpRow {
    std::vector<F> a;
    F b{};
};

/// A feasibility/objective problem over free (sign-unrestricted)
/// variables, every row a <=-row.
template <class F>
struct LpProblem {
    int nvars = 0;
    std::vector<LpRow<F>> rows;
};

/// Value of ALPFEAS_PIVOT_LIMIT, or 0 when unset/invalid.
inline long pivot_limit_override() {
    const char* env = std::getenv("ALPFEAS_PIVOT_LIMIT");
    if (!env) return 0;
    const long v = std::atol(env);
    return v > 0 ? v : 0;
}

/// Dense two-phase simplex over an exact ordered field F. The only
/// comparison used anywhere is the free function sign(F), so the same
/// code decides LPs over plain rationals and over rational functions of
/// K ordered at infinity. Bland's rule everywhere, so no cycling; a
/// pivot-count bound (default 10 * rows * columns, overridable through
/// ALPFEAS_PIVOT_LIMIT) turns runaway pivoting into a LimitError instead
/// of a wrong verdict.
///
/// Free variables are handled as differences of nonnegative pairs, one
/// slack per row, artificial variables only for rows whose right side
/// starts negative.
template <class F>
class SimplexSolver {
public:
    explicit SimplexSolver(const LpProblem<F>& lp, long pivot_limit = 0) : nvars_(lp.nvars) {
        const int m = static_cast<int>(lp.rows.size());
        const int n2 = 2 * nvars_;
        nstruct_ = n2 + m; // split vars + slacks
        // artificial columns appended after the structural block
        int nart = 0;
        for (const auto& row : lp.rows)
            if (sign(row.b) < 0) ++nart;
        ncols_ = nstruct_ + nart;
        rhs_ = ncols_;

        tab_.assign(static_cast<size_t>(m) + 1, std::vector<F>(static_cast<size_t>(ncols_) + 1, F(0)));
        basis_.assign(static_cast<size_t>(m), -1);
        is_artificial_.assign(static_cast<size_t>(ncols_), false);

        int art = nstruct_;
        for (int i = 0; i < m; ++i) {
            const LpRow<F>& row = lp.rows[static_cast<size_t>(i)];
            const bool neg = sign(row.b) < 0;
            auto& t = tab_[static_cast<size_t>(i)];
            for (int j = 0; j < nvars_; ++j) {
                F a = row.a[static_cast<size_t>(j)];
                if (neg) a = F(0) - a;
                t[static_cast<size_t>(2 * j)] = a;
                t[static_cast<size_t>(2 * j + 1)] = F(0) - a;
            }
            t[static_cast<size_t>(n2 + i)] = neg ? F(-1) : F(1); // slack
            t[static_cast<size_t>(rhs_)] = neg ? F(0) - row.b : row.b;
            if (neg) {
                t[static_cast<size_t>(art)] = F(1);
                is_artificial_[static_cast<size_t>(art)] = true;
                basis_[static_cast<size_t>(i)] = art;
                ++art;
            } else {
                basis_[static_cast<size_t>(i)] = n2 + i;
            }
        }

        pivot_limit_ = pivot_limit;
        if (pivot_limit_ <= 0) pivot_limit_ = pivot_limit_override();
        if (pivot_limit_ <= 0) pivot_limit_ = 10L * std::max(1, m) * std::max(1, ncols_);
    }

    /// Phase 1: drives the artificial sum to zero. Returns true when the
    /// row system is feasible; afterwards the tableau holds a basic
    /// feasible solution and artificial columns are gone.
    bool solve_phase1() {
        const int m = rows();
        // objective: minimize sum of artificials
        auto& obj = tab_.back();
        std::fill(obj.begin(), obj.end(), F(0));
        for (int j = 0; j < ncols_; ++j)
            if (is_artificial_[static_cast<size_t>(j)]) obj[static_cast<size_t>(j)] = F(1);
        for (int i = 0; i < m; ++i) {
            const int b = basis_[static_cast<size_t>(i)];
            if (is_artificial_[static_cast<size_t>(b)]) {
                // price out: obj -= obj[b] * row_i, and obj[b] == 1 here
                axpy(obj, tab_[static_cast<size_t>(i)], F(-1));
            }
        }
        // artificial columns never re-enter; basic ones have zero reduced
        // cost, so excluding them is safe
        minimize([&](int j) { return !is_artificial_[static_cast<size_t>(j)]; });
        const F value = F(0) - obj[static_cast<size_t>(rhs_)];
        if (sign(value) != 0) return false;
        expel_artificials();
        return true;
    }

    /// Current basic solution mapped back to the original free variables.
    std::vector<F> point() const {
        std::vector<F> col_value(static_cast<size_t>(ncols_), F(0));
        for (int i = 0; i < rows(); ++i)
            col_value[static_cast<size_t>(basis_[static_cast<size_t>(i)])] =
                tab_[static_cast<size_t>(i)][static_cast<size_t>(rhs_)];
        std::vector<F> out(static_cast<size_t>(nvars_), F(0));
        for (int j = 0; j < nvars_; ++j)
            out[static_cast<size_t>(j)] =
                col_value[static_cast<size_t>(2 * j)] - col_value[static_cast<size_t>(2 * j + 1)];
        return out;
    }

    struct Phase2Result {
        bool unbounded = false;
        F value{};             // optimal objective when bounded
        std::vector<F> point;  // optimum, or a feasible point along the improving ray
    };

    /// Phase 2 on a phase-1-feasible tableau: maximize direction * x[var].
    Phase2Result maximize(int var, int direction = 1) {
        auto& obj = tab_.back();
        std::fill(obj.begin(), obj.end(), F(0));
        // minimize -direction * x[var] = -dir*u + dir*v
        obj[static_cast<size_t>(2 * var)] = F(-direction);
        obj[static_cast<size_t>(2 * var + 1)] = F(direction);
        for (int i = 0; i < rows(); ++i) {
            const int b = basis_[static_cast<size_t>(i)];
            const F cb = obj[static_cast<size_t>(b)];
            if (sign(cb) != 0) axpy(obj, tab_[static_cast<size_t>(i)], F(0) - cb);
        }
        const int ray_col = minimize([](int) { return true; });
        Phase2Result res;
        if (ray_col < 0) {
            res.value = obj[static_cast<size_t>(rhs_)]; // == max of direction * x[var]
            res.point = point();
        } else {
            res.unbounded = true;
            // step length 1 along the improving ray keeps every basic
            // variable nonnegative (the entering column is <= 0 there)
            std::vector<F> col_value(static_cast<size_t>(ncols_), F(0));
            for (int i = 0; i < rows(); ++i)
                col_value[static_cast<size_t>(basis_[static_cast<size_t>(i)])] =
                    tab_[static_cast<size_t>(i)][static_cast<size_t>(rhs_)] -
                    tab_[static_cast<size_t>(i)][static_cast<size_t>(ray_col)];
            col_value[static_cast<size_t>(ray_col)] = F(1);
            res.point.assign(static_cast<size_t>(nvars_), F(0));
            for (int j = 0; j < nvars_; ++j)
                res.point[static_cast<size_t>(j)] = col_value[static_cast<size_t>(2 * j)] -
                                                    col_value[static_cast<size_t>(2 * j + 1)];
        }
        return res;
    }

    long pivots() const { return pivots_; }
    long max_stall_run() const { return max_stall_; }

    /// Exact structural invariant: basic columns form an identity
    /// submatrix and every right side is nonnegative.
    bool basis_is_identity() const {
        for (int i = 0; i < rows(); ++i) {
            const int b = basis_[static_cast<size_t>(i)];
            for (int r = 0; r < rows(); ++r) {
                const F& v = tab_[static_cast<size_t>(r)][static_cast<size_t>(b)];
                if (r == i) {
                    if (!(sign(v - F(1)) == 0)) return false;
                } else if (sign(v) != 0) {
                    return false;
                }
            }
            if (sign(tab_[static_cast<size_t>(i)][static_cast<size_t>(rhs_)]) < 0) return false;
        }
        return true;
    }

private:
    int rows() const { return static_cast<int>(basis_.size()); }

    static void axpy(std::vector<F>& dst, const std::vector<F>& src, const F& factor) {
        for (size_t j = 0; j < dst.size(); ++j) {
            if (sign(src[j]) != 0) dst[j] += factor * src[j];
        }
    }

    void pivot(int pr, int pc) {
        if (++pivots_ > pivot_limit_)
            throw LimitError("simplex: pivot limit " + std::to_string(pivot_limit_) + " exceeded");
        auto& prow = tab_[static_cast<size_t>(pr)];
        const F inv = F(1) / prow[static_cast<size_t>(pc)];
        for (auto& v : prow) {
            if (sign(v) != 0) v *= inv;
        }
        prow[static_cast<size_t>(pc)] = F(1);
        for (size_t r = 0; r < tab_.size(); ++r) {
            if (static_cast<int>(r) == pr) continue;
            F factor = tab_[r][static_cast<size_t>(pc)];
            if (sign(factor) == 0) continue;
            axpy(tab_[r], prow, F(0) - factor);
            tab_[r][static_cast<size_t>(pc)] = F(0);
        }
        basis_[static_cast<size_t>(pr)] = pc;
    }

    /// Bland's-rule minimization of the current objective row over the
    /// columns accepted by `allowed`. Returns -1 on optimality, or the
    /// entering column when the objective is unbounded below.
    template <class Allowed>
    int minimize(Allowed allowed) {
        auto& obj = tab_.back();
        long stall = 0;
        while (true) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (!allowed(j)) continue;
                if (sign(obj[static_cast<size_t>(j)]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return -1;
            int leave = -1;
            for (int i = 0; i < rows(); ++i) {
                const F& aij = tab_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (sign(aij) <= 0) continue;
                if (leave < 0) {
                    leave = i;
                    continue;
                }
                const F cur = tab_[static_cast<size_t>(i)][static_cast<size_t>(rhs_)] / aij;
                const F best = tab_[static_cast<size_t>(leave)][static_cast<size_t>(rhs_)] /
                               tab_[static_cast<size_t>(leave)][static_cast<size_t>(enter)];
                const int c = sign(cur - best);
                if (c < 0 || (c == 0 && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)]))
                    leave = i;
            }
            if (leave < 0) return enter; // unbounded
            const F before = obj[static_cast<size_t>(rhs_)];
            pivot(leave, enter);
            const F after = obj[static_cast<size_t>(rhs_)];
            if (sign(after - before) == 0) {
                ++stall;
                if (stall > max_stall_) max_stall_ = stall;
            } else {
                stall = 0;
            }
        }
    }

    /// After a zero-value phase 1, removes artificial variables from the
    /// basis (degenerate pivots) and deletes rows that turned out
    /// redundant, then truncates the artificial column block.
    void expel_artificials() {
        for (int i = 0; i < rows(); ++i) {
            const int b = basis_[static_cast<size_t>(i)];
            if (!is_artificial_[static_cast<size_t>(b)]) continue;
            int pc = -1;
            for (int j = 0; j < nstruct_; ++j) {
                if (sign(tab_[static_cast<size_t>(i)][static_cast<size_t>(j)]) != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0) {
                pivot(i, pc);
            } else {
                // all-zero row: drop it
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --i;
            }
        }
        for (auto& row : tab_) {
            F rhs_value = std::move(row[static_cast<size_t>(rhs_)]);
            row.resize(static_cast<size_t>(nstruct_) + 1);
            row[static_cast<size_t>(nstruct_)] = std::move(rhs_value);
        }
        ncols_ = nstruct_;
        rhs_ = ncols_;
        is_artificial_.assign(static_cast<size_t>(ncols_), false);
    }

    int nvars_ = 0;
    int nstruct_ = 0;
    int ncols_ = 0;
    int rhs_ = 0;
    std::vector<std::vector<F>> tab_; // rows + trailing objective row
    std::vector<int> basis_;
    std::vector<bool> is_artificial_;
    long pivots_ = 0;
    long pivot_limit_ = 0;
    long max_stall_ = 0;
};

} // namespace alpfeas
