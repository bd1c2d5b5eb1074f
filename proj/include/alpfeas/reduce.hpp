#pragma once

#include "alpfeas/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace alpfeas {

/// Fresh variables of the inequation gadget. All names live in the '~'
/// namespace, which the .lsys grammar cannot produce, so they never
/// collide with user variables. offsets[i] = K + (i+1), pairwise distinct.
struct GadgetVars {
    std::vector<std::string> f;
    std::vector<std::string> y;
    std::vector<std::string> z;
    std::string e;
    std::vector<KPoly> offsets;
};

/// Everything the reduction produces for one input system.
struct ReductionBundle {
    LinearSystem original;
    std::vector<AlpProblem> alps;
    GadgetVars gadget; ///< f sized R when R >= 1; y/z sized R when R >= 2
};

/// Step-1 strictification of one <-row: b.x < q becomes b.x + e <= q
/// together with the shared row 1 - K e <= 0 (added once per ALP).
AlpConstraint strictify(const Constraint& lt_row, const std::string& e);
/// The shared strictness row 1 - K e <= 0, stored as -K e <= -1.
AlpConstraint strictness_row(const std::string& e);

/// Step-5 split of an =-row into its two <=-halves.
std::pair<AlpConstraint, AlpConstraint> split_equality(const Constraint& eq_row);

/// Steps 3-4 for R >= 2 inequations: fresh f/y/z variables plus the 3R
/// equalities {c_i.x - r_i = f_i}, {f_i = sum_{j != i} y_j},
/// {(K+i) y_i = z_i}. Throws std::invalid_argument for R < 2.
std::pair<GadgetVars, std::vector<Constraint>>
build_inequation_gadget(const std::vector<Constraint>& ne_rows);

/// Step-6 case list: 1 empty case for R = 0, the two single-sign cases
/// for R = 1, and all (pair, sign, sign) combinations for R >= 2 in
/// deterministic order: pairs lexicographic, signs (-,-), (-,+), (+,-),
/// (+,+). |result| = 2R(R-1) for R >= 2.
std::vector<CaseDescriptor> enumerate_cases(int r);

/// Step-7 rows of one case: z >= e or z <= -e per chosen sign (f_1
/// directly for the single case) plus the shared strictness row.
std::vector<AlpConstraint> case_rows(const CaseDescriptor& c, const GadgetVars& gadget);

/// Steps 1-8: the full family of ALPs for one validated system.
ReductionBundle reduce(const LinearSystem& system);

struct DecideOptions {
    int jobs = 1;
};

/// Step-9 decision loop: solves the family in enumeration order and
/// returns FEASIBLE with the lowest-index case that yields a concretized,
/// exactly verified witness, else INFEASIBLE. Deterministic for any jobs
/// setting.
Verdict decide_feasibility(const LinearSystem& system, const DecideOptions& options = {});

/// Adds the non-triviality constraints for a subset of variables: fresh
/// ~w variables, the single row sum(w_j) != 0 and the couplings
/// x_subset[j] = (K+j) w_j, matching the published 5-constraint pattern
/// for a 4-variable subset. The result feeds reduce() directly.
LinearSystem augment_nontrivial(const LinearSystem& system,
                                const std::vector<std::string>& subset);

/// Exact determinant of the N x N matrix with zero diagonal and unit
/// off-diagonal entries, by fraction-free (Bareiss) elimination; the
/// nonzero value ((N-1) * (-1)^(N-1)) is what makes the gadget
/// equalities solvable for y. Throws std::invalid_argument for N < 2.
Rational gadget_matrix_det(int n);

} // namespace alpfeas
