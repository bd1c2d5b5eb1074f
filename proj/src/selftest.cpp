#include "alpfeas/selftest.hpp"

#include "alpfeas/kratfun.hpp"
#include "alpfeas/parser.hpp"
#include "alpfeas/reduce.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace alpfeas {

const char* worked_example_lsys() {
    return "vars x1 x2 x3\n"
           "x1 + 2 x2 - x3 <= 4\n"
           "2 x1 - x2 + x3 <= 5\n"
           "x1 - x2 + 2 x3 < 3\n"
           "-2 x1 + x2 + x3 < 2\n"
           "x1 + x2 + x3 != 1\n"
           "2 x1 - x2 - x3 != 0\n"
           "x1 + 2 x2 - 2 x3 != 2\n";
}

namespace {

bool check_determinants(std::string& detail) {
    std::ostringstream os;
    for (int n = 2; n <= 8; ++n) {
        const Rational det = gadget_matrix_det(n);
        const long expect = (n - 1) * ((n % 2 == 0) ? -1 : 1);
        os << "N=" << n << ":" << det.str() << (n < 8 ? " " : "");
        if (det != Rational(expect) || det == Rational(0)) {
            detail = os.str() + " (expected " + std::to_string(expect) + ")";
            return false;
        }
    }
    detail = os.str();
    return true;
}

bool check_case_counts(std::string& detail) {
    std::ostringstream os;
    for (int r = 0; r <= 8; ++r) {
        const size_t expect = r == 0 ? 1 : (r == 1 ? 2 : static_cast<size_t>(2 * r * (r - 1)));
        const size_t got = enumerate_cases(r).size();
        os << "R=" << r << ":" << got << (r < 8 ? " " : "");
        if (got != expect) {
            detail = os.str() + " (expected " + std::to_string(expect) + ")";
            return false;
        }
    }
    detail = os.str();
    return true;
}

bool check_field_axioms(std::string& detail) {
    std::mt19937_64 rng(97);
    auto poly = [&](int max_deg, bool nonzero) {
        std::vector<Rational> cs;
        do {
            cs.clear();
            const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
            for (int i = 0; i <= deg; ++i) cs.emplace_back(static_cast<long>(rng() % 11) - 5);
        } while (nonzero && KPoly::from_coeffs(cs).is_zero());
        return KPoly::from_coeffs(cs);
    };
    const int trials = 120;
    for (int t = 0; t < trials; ++t) {
        const KRatFun a{poly(3, false), poly(2, true)};
        const KRatFun b{poly(3, false), poly(2, true)};
        const KRatFun c{poly(3, false), poly(2, true)};
        if (!((a + b) + c == a + (b + c)) || !(a * (b + c) == a * b + a * c) ||
            !(a - a).is_zero() || (!a.is_zero() && !(a * (KRatFun(1) / a) == KRatFun(1)))) {
            detail = "failed at trial " + std::to_string(t);
            return false;
        }
    }
    detail = std::to_string(trials) + " random triples";
    return true;
}

bool check_sign_case_foundation(std::string& detail) {
    std::mt19937_64 rng(98);
    int trials = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 50; ++t) {
            ++trials;
            std::vector<Rational> z;
            int nonzero = 0;
            for (int i = 0; i < n; ++i) {
                long v = rng() % 3 == 0 ? 0 : static_cast<long>(rng() % 9) - 4;
                if (v != 0) ++nonzero;
                z.emplace_back(v);
            }
            int y_nonzero = 0;
            for (int i = 0; i < n; ++i) {
                KRatFun acc;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    acc += KRatFun(KPoly(z[static_cast<size_t>(j)]),
                                   KPoly::linear(Rational(1), Rational(j + 1)));
                }
                if (!acc.is_zero()) ++y_nonzero;
            }
            const bool lhs = nonzero >= 2;
            const bool rhs = y_nonzero == n;
            if (lhs != rhs || (nonzero == 1 && y_nonzero != n - 1)) {
                detail = "failed for N=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(trials) + " z-vectors, N=2..6";
    return true;
}

bool check_worked_example(std::string& detail) {
    const LinearSystem sys = parse_system(worked_example_lsys());
    const ReductionBundle bundle = reduce(sys);
    if (bundle.alps.size() != 12) {
        detail = "expected 12 ALPs, got " + std::to_string(bundle.alps.size());
        return false;
    }
    const AlpProblem* target = nullptr;
    for (const auto& alp : bundle.alps)
        if (alp.case_desc == CaseDescriptor::pair(1, 3, Sign::Pos, Sign::Pos)) target = &alp;
    if (!target) {
        detail = "case pair(1,3,+,+) missing";
        return false;
    }
    if (target->rows.size() != 25) {
        detail = "expected 25 rows in pair(1,3,+,+), got " + std::to_string(target->rows.size());
        return false;
    }
    detail = "12 ALPs, 25 rows in pair(1,3,+,+)";
    return true;
}

} // namespace

int run_selftest(std::ostream& os) {
    const std::pair<const char*, std::function<bool(std::string&)>> checks[] = {
        {"gadget matrix determinants N=2..8", check_determinants},
        {"case counts R=0..8", check_case_counts},
        {"ordered field axioms", check_field_axioms},
        {"sign-case foundation N=2..6", check_sign_case_foundation},
        {"worked-example shape", check_worked_example},
    };
    int failures = 0;
    for (const auto& [name, fn] : checks) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        os << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) os << ": " << detail;
        os << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace alpfeas
