#include "flowshop/bounds.hpp"

#include <algorithm>
#include <cassert>

namespace flowshop {

Matrix rho_table(const Instance& inst) {
    Matrix rho(static_cast<std::size_t>(inst.n),
               std::vector<std::int64_t>(static_cast<std::size_t>(inst.m), 0));
    for (int j = 0; j < inst.n; ++j) {
        for (int k = 0; k < inst.m; ++k) {
            const auto ju = static_cast<std::size_t>(j);
            const auto ku = static_cast<std::size_t>(k);
            std::int64_t v = inst.p[ju][ku];
            if (inst.types[ku] == MachineType::CSDST) {
                const SdstParams& sdst = *inst.ext.sdst;
                const Matrix& tau = sdst.tau.at(k + 1);
                const auto cur = static_cast<std::size_t>(sdst.tool_of_job[ju]) - 1;
                std::int64_t min_in = tau[0][cur];
                for (std::size_t from = 1; from < tau.size(); ++from)
                    min_in = std::min(min_in, tau[from][cur]);
                v += min_in;
            }
            rho[ju][ku] = v;
        }
    }
    return rho;
}

std::int64_t lower_bound(const Instance& inst, const Matrix& rho,
                         const PrefixEvaluator& eval, bool tight) {
    const int len = eval.length();
    assert(len >= 1 && len <= inst.n);
    const int m = inst.m;
    const auto last = static_cast<std::size_t>(eval.prefix().back());

    // Machine tail of the last scheduled job.
    std::int64_t lb_tail = 0;
    std::int64_t suffix = 0;
    for (int k = m - 1; k >= 0; --k) {
        assert(eval.cell(len - 1, k).is_finite());
        lb_tail = std::max(lb_tail, eval.cell(len - 1, k).value() + suffix);
        suffix += rho[last][static_cast<std::size_t>(k)];
    }

    // Remaining work on the last machine.
    std::vector<char> used(static_cast<std::size_t>(inst.n), 0);
    for (int job : eval.prefix()) used[static_cast<std::size_t>(job)] = 1;
    std::int64_t lb_jobs = eval.cell(len - 1, m - 1).value();
    for (int j = 0; j < inst.n; ++j)
        if (!used[static_cast<std::size_t>(j)])
            lb_jobs += rho[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - 1)];
    if (tight && inst.types[static_cast<std::size_t>(m - 1)] == MachineType::Crep &&
        inst.ext.periodic) {
        // At least floor(remaining / q) of the q-multiple positions are still
        // ahead, each forcing one adjustment on the last machine.
        const std::int64_t forced = (inst.n - len) / inst.ext.periodic->q;
        lb_jobs += forced * inst.ext.periodic->delta[static_cast<std::size_t>(m - 1)];
    }

    return std::max(lb_tail, lb_jobs);
}

}  // namespace flowshop
