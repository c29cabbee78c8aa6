#include "pairabs/app.hpp"

#include <ostream>

namespace pairabs::app {

int run_verify(std::uint64_t seed, std::int64_t trials, double tolerance, double alpha0, std::ostream& out,
               const oracle::MatrixElementFn& closed_form) {
    if (trials <= 0) {
        out << "error: trials must be positive\n";
        return kExitInvalid;
    }
    if (!(tolerance > 0.0)) {
        out << "error: tolerance must be positive\n";
        return kExitInvalid;
    }
    if (!(alpha0 > 0.0 && alpha0 <= 1.0)) {
        out << "error: alpha0 must lie in (0, 1]\n";
        return kExitInvalid;
    }

    const auto rep = oracle::verify_equivalence(seed, static_cast<std::uint64_t>(trials), tolerance,
                                                RecoilModel(alpha0), closed_form);
    out << "seed=" << seed << " trials=" << rep.trials << " skipped_excluded=" << rep.skipped_excluded
        << " tolerance=" << format_number(tolerance) << '\n'
        << "max_dev_m=" << format_number(rep.max_dev_m) << '\n'
        << "max_dev_m_formal=" << format_number(rep.max_dev_m_formal) << '\n'
        << "max_dev_n0=" << format_number(rep.max_dev_n0) << '\n'
        << "max_dev_nf=" << format_number(rep.max_dev_nf) << '\n';
    if (!rep.ok()) {
        out << "FAIL: first violation at seed=" << seed << " index=" << *rep.first_violation << '\n';
        return kExitFailure;
    }
    out << "OK\n";
    return kExitOk;
}

}  // namespace pairabs::app
