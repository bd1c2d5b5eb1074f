#pragma once

#include "alpfeas/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace alpfeas {

struct StrictLpResult {
    Feasibility status = Feasibility::Infeasible;
    std::map<std::string, Rational> point;
};

/// Feasibility of a mix of <=-rows and strict <-rows over plain
/// rationals: maximize one shared slack t with every strict row
/// tightened by +t and t <= 1; feasible iff the optimum is positive
/// (iff the <=-system alone is feasible when there are no strict rows).
/// Returns an exact interior point on success.
StrictLpResult strict_lp_feasible(const std::vector<Constraint>& le_rows,
                                  const std::vector<Constraint>& lt_rows,
                                  const std::vector<std::string>& variables);

struct OracleOptions {
    int max_ne = 12; ///< cap on the 2^R sign enumeration
};

/// Ground-truth decision by the exponential case split: each =-row
/// becomes two <=-rows, then every one of the 2^R sign assignments
/// replaces each !=-row with one strict row and asks strict_lp_feasible.
/// The witness comes from the lowest feasible assignment index.
Verdict oracle_feasible(const LinearSystem& system, const OracleOptions& options = {});

} // namespace alpfeas
