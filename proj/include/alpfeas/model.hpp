#pragma once

#include "alpfeas/kpoly.hpp"
#include "alpfeas/kratfun.hpp"
#include "alpfeas/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alpfeas {

/// Relational operators of a validated system. >= and > are normalized
/// away when constraints are built.
enum class Relop { LE, LT, EQ, NE };

std::string relop_text(Relop op);

/// One linear constraint: sum(coeffs[v] * v) relop rhs. Coefficients are
/// polynomials in K so that the non-triviality augmentation (which adds
/// rows like x = (K+1)w) can flow through the same type; parsed systems
/// have degree-0 coefficients throughout.
struct Constraint {
    std::map<std::string, KPoly> coeffs;
    Relop relop = Relop::LE;
    Rational rhs;

    bool is_parametric() const;
    friend bool operator==(const Constraint& a, const Constraint& b) = default;
};

/// Normalizes a raw parsed constraint: moves every variable term to the
/// left and the constant to the right; >= and > flip into <= and < with
/// negated sides; = and != rows get their first nonzero coefficient made
/// positive so text round-trips are stable.
Constraint normalize(const std::map<std::string, Rational>& lhs_coeffs, const Rational& lhs_const,
                     Relop op, bool flip_sides,
                     const std::map<std::string, Rational>& rhs_coeffs, const Rational& rhs_const);

struct SystemCounts {
    int le = 0;
    int lt = 0;
    int eq = 0;
    int ne = 0;
};

/// A system of simultaneous constraints over named real variables.
struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
    bool declared_variables = false;

    SystemCounts counts() const;
    bool is_parametric() const;
    bool has_variable(const std::string& name) const;

    friend bool operator==(const LinearSystem& a, const LinearSystem& b);
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Checks variable references and fixes the canonical ordering: declared
/// order when a declaration exists, else first use. Rows with empty
/// coefficient maps are kept (0 <= -1 is a legal, unsatisfiable row).
/// Throws ValidationError on undeclared references or duplicate
/// declarations.
LinearSystem validate(LinearSystem system);

/// Exact satisfaction check of one point against every constraint,
/// each relop with its own semantics (<, != strict). Parametric
/// coefficients are evaluated at K = k.
bool satisfies(const LinearSystem& system, const std::map<std::string, Rational>& point,
               const Rational& k);
/// Index of the first violated constraint, or nullopt if all hold.
std::optional<size_t> first_violation(const LinearSystem& system,
                                      const std::map<std::string, Rational>& point,
                                      const Rational& k);

/// One row of a generated ALP: sum(coeffs[v] * v) <= rhs, every
/// polynomial of degree <= 1 as emitted by the reduction.
struct AlpConstraint {
    std::map<std::string, KPoly> coeffs;
    KPoly rhs;

    /// Scale-invariant comparison key: the row multiplied by the unique
    /// positive rational that makes all coefficients integral with
    /// content 1. Used for deduplication.
    AlpConstraint canonical() const;

    friend bool operator==(const AlpConstraint& a, const AlpConstraint& b) = default;
    friend bool operator<(const AlpConstraint& a, const AlpConstraint& b);
};

enum class Sign { Neg, Pos };

inline char sign_char(Sign s) { return s == Sign::Neg ? '-' : '+'; }

/// Which sign case of the inequation gadget an ALP encodes: a pair of
/// z indices with one sign each, the single-f form used when R = 1, or
/// the empty case when the system has no inequations.
struct CaseDescriptor {
    enum class Kind { Empty, Single, Pair };
    Kind kind = Kind::Empty;
    int a = 0; // 1-based z index, Pair only
    int b = 0;
    Sign sign_a = Sign::Neg;
    Sign sign_b = Sign::Neg;

    static CaseDescriptor empty() { return {}; }
    static CaseDescriptor single(Sign s);
    static CaseDescriptor pair(int a, int b, Sign sa, Sign sb);

    std::string str() const;
    friend bool operator==(const CaseDescriptor& a, const CaseDescriptor& b) = default;
};

/// One generated ALP: every row is a <=-row, rows deduplicated under
/// canonical comparison.
struct AlpProblem {
    std::vector<std::string> variables;
    std::vector<AlpConstraint> rows;
    CaseDescriptor case_desc;

    /// Appends the row unless an identical row (up to positive scaling)
    /// is already present.
    void add_row(AlpConstraint row);
};

enum class Feasibility { Feasible, Infeasible };

/// A feasible ALP solution turned concrete: rational-function values per
/// variable, a power-of-two K at which their evaluation satisfies the
/// original system exactly, and that exact rational point.
struct Witness {
    std::map<std::string, KRatFun> symbolic;
    Rational k0;
    std::map<std::string, Rational> point;
};

struct Verdict {
    Feasibility status = Feasibility::Infeasible;
    std::optional<CaseDescriptor> feasible_case;
    std::optional<Witness> witness;
    int alp_count = 0;
    /// Cases whose ALP was feasible over the ordered field but whose
    /// solution set pins some inequation functional to zero; they cannot
    /// certify the original system and are skipped.
    int degenerate_cases = 0;
};

} // namespace alpfeas
