#ifndef LIFTSPIN_COMBINAT_HPP
#define LIFTSPIN_COMBINAT_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace liftspin
{

// Subset-sum multiplicities over the 2n odd integers {1-2n, 3-2n, ..., 2n-1}.
//
// alpha(r, m) counts m-element subsets with element sum r, and
// beta(r, m) = alpha(r, m) - alpha(r, m - 2). Arguments outside the
// support give 0. The table is filled once by dynamic programming and is
// read-only afterwards.
class BetaTable
{
public:
    explicit BetaTable(int n);

    int n() const noexcept
    {
        return m_n;
    }
    // Largest |r| with a nonzero alpha(r, m): m(2n - m).
    int max_sum(int m) const noexcept;

    std::int64_t alpha(int r, int m) const noexcept;
    // beta(r, m) including any perturbation applied through with_beta_delta.
    std::int64_t beta(int r, int m) const noexcept;

    // Copy with a single beta entry shifted by delta. Used for mutation tests.
    BetaTable with_beta_delta(int r, int m, std::int64_t delta) const;

private:
    int m_n;
    // m_alpha[m][r + m_n * m_n]
    std::vector<std::vector<std::int64_t>> m_alpha;
    std::map<std::pair<int, int>, std::int64_t> m_beta_delta;
};

std::int64_t alpha_count(int r, int m, int n);
std::int64_t beta_value(int r, int m, int n);

// sum_{m=0}^{n} sum_r beta(r,m,n) (n-m+1) == 2^{2n}
bool degree_audit_ikeda(int n);
// 2n + sum_{m=1}^{n-1} sum_r beta(r,m,n-1) * 2(n-m) == 2^{2n-1}
bool degree_audit_miyawaki(int n);

} // namespace liftspin

#endif
