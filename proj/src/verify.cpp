#include "detstrat/verify.hpp"

#include "detstrat/derham.hpp"
#include "detstrat/obstruction.hpp"

#include <stdexcept>

namespace detstrat {

std::vector<SpaceSpec> spaces_up_to(Family family, int max_n)
{
    std::vector<SpaceSpec> out;
    switch (family) {
    case Family::General:
        for (int m = 1; m <= max_n; ++m)
            for (int n = 1; n <= m; ++n) out.push_back(SpaceSpec::general(m, n));
        break;
    case Family::Symmetric:
        for (int n = 1; n <= max_n; ++n) out.push_back(SpaceSpec::symmetric(n));
        break;
    case Family::Skew:
        for (int n = 2; n <= max_n; ++n) out.push_back(SpaceSpec::skew(n));
        break;
    }
    return out;
}

VerifyReport verify_family(Family family, int max_n)
{
    VerifyReport report;
    for (const auto& space : spaces_up_to(family, max_n)) {
        ++report.spaces_checked;
        for (int p = 0; p <= space.max_stratum(); ++p) {
            ++report.cells_checked;
            const LaurentPoly e = inv_derham_gf_enum(space, p);
            const LaurentPoly c = inv_derham_gf_closed(space, p);
            if (e != c) {
                report.first_failure = space.to_string() + " p=" + std::to_string(p) +
                                       ": de Rham enumeration " + e.to_string() + " != closed form " +
                                       c.to_string();
                return report;
            }
        }

        const StrataMatrix solved = solve_euler(chi_from_enumeration(space), signed_micro(space));
        const StrataMatrix expected = euler_closed(space);
        for (std::size_t i = 0; i < expected.order(); ++i)
            for (std::size_t j = i; j < expected.order(); ++j) {
                ++report.cells_checked;
                if (solved(i, j) != expected(i, j)) {
                    report.first_failure = space.to_string() + " e(" + std::to_string(i) + "," +
                                           std::to_string(j) + "): solved " + solved(i, j).str() +
                                           " != closed form " + expected(i, j).str();
                    return report;
                }
            }

        ++report.cells_checked;
        if (!verify_index_identity(space)) {
            report.first_failure = space.to_string() + ": chi != E * M on the closed forms";
            return report;
        }
    }
    return report;
}

}  // namespace detstrat
