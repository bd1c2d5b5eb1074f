#include "alpfeas/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace alpfeas {

std::string relop_text(Relop op) {
    switch (op) {
    case Relop::LE: return "<=";
    case Relop::LT: return "<";
    case Relop::EQ: return "=";
    case Relop::NE: return "!=";
    }
    return "?";
}

bool Constraint::is_parametric() const {
    return std::any_of(coeffs.begin(), coeffs.end(),
                       [](const auto& kv) { return kv.second.degree() > 0; });
}

Constraint normalize(const std::map<std::string, Rational>& lhs_coeffs, const Rational& lhs_const,
                     Relop op, bool flip_sides,
                     const std::map<std::string, Rational>& rhs_coeffs, const Rational& rhs_const) {
    std::map<std::string, Rational> c = lhs_coeffs;
    for (const auto& [name, v] : rhs_coeffs) c[name] -= v;
    Rational rhs = rhs_const - lhs_const;

    // flip_sides: the raw operator was >= or >, equivalent to negating both sides.
    if (flip_sides) {
        for (auto& [name, v] : c) v = -v;
        rhs = -rhs;
    }
    if (op == Relop::EQ || op == Relop::NE) {
        auto lead = std::find_if(c.begin(), c.end(),
                                 [](const auto& kv) { return !kv.second.is_zero(); });
        if (lead != c.end() && lead->second.sign() < 0) {
            for (auto& [name, v] : c) v = -v;
            rhs = -rhs;
        }
    }

    Constraint out;
    out.relop = op;
    out.rhs = rhs;
    for (const auto& [name, v] : c) {
        if (!v.is_zero()) out.coeffs.emplace(name, KPoly(v));
    }
    return out;
}

SystemCounts LinearSystem::counts() const {
    SystemCounts n;
    for (const auto& c : constraints) {
        switch (c.relop) {
        case Relop::LE: ++n.le; break;
        case Relop::LT: ++n.lt; break;
        case Relop::EQ: ++n.eq; break;
        case Relop::NE: ++n.ne; break;
        }
    }
    return n;
}

bool LinearSystem::is_parametric() const {
    return std::any_of(constraints.begin(), constraints.end(),
                       [](const Constraint& c) { return c.is_parametric(); });
}

bool LinearSystem::has_variable(const std::string& name) const {
    return std::find(variables.begin(), variables.end(), name) != variables.end();
}

bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.variables == b.variables && a.constraints == b.constraints;
}

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(issues.empty() ? "validation failed"
                                        : "validation failed: " + issues.front() +
                                              (issues.size() > 1 ? " (+" + std::to_string(issues.size() - 1) + " more)"
                                                                 : "")),
      issues_(std::move(issues)) {}

LinearSystem validate(LinearSystem system) {
    std::vector<std::string> issues;
    std::set<std::string> seen;
    for (const auto& v : system.variables) {
        if (!seen.insert(v).second) issues.push_back("duplicate variable declaration '" + v + "'");
    }
    for (size_t i = 0; i < system.constraints.size(); ++i) {
        for (const auto& [name, coeff] : system.constraints[i].coeffs) {
            (void)coeff;
            if (seen.count(name)) continue;
            if (system.declared_variables) {
                issues.push_back("constraint " + std::to_string(i + 1) +
                                 " references undeclared variable '" + name + "'");
            } else {
                system.variables.push_back(name);
                seen.insert(name);
            }
        }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return system;
}

namespace {

Rational row_value(const Constraint& c, const std::map<std::string, Rational>& point,
                   const Rational& k) {
    Rational acc;
    for (const auto& [name, coeff] : c.coeffs) {
        auto it = point.find(name);
        const Rational x = (it == point.end()) ? Rational(0) : it->second;
        acc += coeff.eval(k) * x;
    }
    return acc;
}

bool row_holds(const Constraint& c, const std::map<std::string, Rational>& point,
               const Rational& k) {
    const Rational v = row_value(c, point, k);
    switch (c.relop) {
    case Relop::LE: return v <= c.rhs;
    case Relop::LT: return v < c.rhs;
    case Relop::EQ: return v == c.rhs;
    case Relop::NE: return v != c.rhs;
    }
    return false;
}

} // namespace

bool satisfies(const LinearSystem& system, const std::map<std::string, Rational>& point,
               const Rational& k) {
    return !first_violation(system, point, k).has_value();
}

std::optional<size_t> first_violation(const LinearSystem& system,
                                      const std::map<std::string, Rational>& point,
                                      const Rational& k) {
    for (size_t i = 0; i < system.constraints.size(); ++i) {
        if (!row_holds(system.constraints[i], point, k)) return i;
    }
    return std::nullopt;
}

AlpConstraint AlpConstraint::canonical() const {
    // Collect every rational coefficient across the row.
    mpz_class den_lcm = 1;
    for (const auto& [name, p] : coeffs) {
        (void)name;
        for (int d = 0; d <= p.degree(); ++d) {
            if (!p.coeff(d).is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(d).den().get_mpz_t());
        }
    }
    for (int d = 0; d <= rhs.degree(); ++d) {
        if (!rhs.coeff(d).is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), rhs.coeff(d).den().get_mpz_t());
    }
    mpz_class num_gcd = 0;
    auto fold = [&](const Rational& r) {
        if (r.is_zero()) return;
        mpz_class scaled = r.num() * (den_lcm / r.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    };
    for (const auto& [name, p] : coeffs) {
        (void)name;
        for (int d = 0; d <= p.degree(); ++d) fold(p.coeff(d));
    }
    for (int d = 0; d <= rhs.degree(); ++d) fold(rhs.coeff(d));
    if (num_gcd == 0) return *this; // all-zero row

    const Rational scale{den_lcm, num_gcd}; // positive: num_gcd from gcd is >= 0
    AlpConstraint out;
    for (const auto& [name, p] : coeffs) {
        KPoly q = p.scaled(scale);
        if (!q.is_zero()) out.coeffs.emplace(name, std::move(q));
    }
    out.rhs = rhs.scaled(scale);
    return out;
}

bool operator<(const AlpConstraint& a, const AlpConstraint& b) {
    auto key = [](const AlpConstraint& r) {
        std::ostringstream os;
        for (const auto& [name, p] : r.coeffs) os << name << ":" << p.str() << ";";
        os << "|" << r.rhs.str();
        return os.str();
    };
    return key(a) < key(b);
}

CaseDescriptor CaseDescriptor::single(Sign s) {
    CaseDescriptor d;
    d.kind = Kind::Single;
    d.sign_a = s;
    return d;
}

CaseDescriptor CaseDescriptor::pair(int a, int b, Sign sa, Sign sb) {
    CaseDescriptor d;
    d.kind = Kind::Pair;
    d.a = a;
    d.b = b;
    d.sign_a = sa;
    d.sign_b = sb;
    return d;
}

std::string CaseDescriptor::str() const {
    switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Single: return std::string("single(") + sign_char(sign_a) + ")";
    case Kind::Pair: {
        std::ostringstream os;
        os << "pair(" << a << "," << b << "," << sign_char(sign_a) << "," << sign_char(sign_b) << ")";
        return os.str();
    }
    }
    return "?";
}

void AlpProblem::add_row(AlpConstraint row) {
    const AlpConstraint canon = row.canonical();
    for (const auto& existing : rows) {
        if (existing.canonical() == canon) return;
    }
    rows.push_back(std::move(row));
}

} // namespace alpfeas
