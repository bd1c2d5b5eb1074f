#pragma once

#include "alpfeas/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alpfeas {

/// Feasibility of one generated ALP for all sufficiently large K,
/// decided by phase-1 simplex over the ordered field of rational
/// functions. On FEASIBLE the map assigns a rational function of K to
/// every ALP variable.
std::pair<Feasibility, std::map<std::string, KRatFun>> alp_feasible(const AlpProblem& alp);

/// Outcome of the full per-case decision used by the feasibility loop.
struct CaseOutcome {
    enum class Status {
        Feasible,   ///< witness found with every listed functional nonzero
        Infeasible, ///< the ALP itself is infeasible over the ordered field
        Degenerate, ///< feasible, but some listed functional is identically
                    ///< zero across the whole solution set; the case can
                    ///< never certify the original inequations
    };
    Status status = Status::Infeasible;
    std::map<std::string, KRatFun> witness;
};

/// Decides one case ALP and, when feasible, post-processes the basic
/// solution so that every variable named in nonzero_vars carries a not-
/// identically-zero rational function. The solution set is convex, so
/// whenever each functional is nonzero somewhere, a single point avoiding
/// all of their zero sets exists and is found by combining optima of
/// auxiliary objectives; if some functional vanishes on the entire
/// solution set the case is reported Degenerate.
CaseOutcome solve_case(const AlpProblem& alp, const std::vector<std::string>& nonzero_vars);

/// Tries K = 2^t for t = 0, 1, ... until the evaluated original
/// variables satisfy every constraint of `system` exactly (poles skipped);
/// throws LimitError after t = 128, which the theory rules out for
/// witnesses produced by solve_case.
Witness concretize_witness(const std::map<std::string, KRatFun>& symbolic,
                           const LinearSystem& system);

/// Same scan, additionally requiring the full evaluated assignment to
/// satisfy every row of the generating ALP at the chosen K, so the
/// reported threshold also certifies the fixed-K program.
Witness concretize_witness_checked(const std::map<std::string, KRatFun>& symbolic,
                                   const LinearSystem& system, const AlpProblem& alp);

/// Substitutes K = k (k > 0) and decides the resulting ordinary LP over
/// plain rationals: the numeric cross-check of the steady-state claim.
Feasibility fixed_k_feasible(const AlpProblem& alp, const Rational& k);

/// Exact check of a symbolic assignment against every ALP row in the
/// ordered field.
bool witness_satisfies_alp(const AlpProblem& alp,
                           const std::map<std::string, KRatFun>& witness);

/// Statistics of the most recent solver run on this thread (pivot count
/// and the longest run of non-improving phase-1 pivots); test hook.
struct SolverStats {
    long pivots = 0;
    long max_stall_run = 0;
};
SolverStats last_solver_stats();

} // namespace alpfeas
