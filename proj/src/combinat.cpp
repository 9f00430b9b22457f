#include <liftspin/combinat.hpp>

#include <cstdlib>
#include <memory>
#include <mutex>
#include <unordered_map>

#include <liftspin/errors.hpp>

namespace liftspin
{

BetaTable::BetaTable(int n) : m_n(n)
{
    if (n <= 0) throw InvalidInput("BetaTable needs n >= 1, got " + std::to_string(n));
    // Sums of subsets of the 2n odd numbers lie in [-n^2, n^2].
    const int offset = n * n;
    const int width = 2 * offset + 1;
    m_alpha.assign(2 * n + 1, std::vector<std::int64_t>(width, 0));
    m_alpha[0][offset] = 1;
    for (int idx = 0; idx < 2 * n; ++idx) {
        const int x = 1 - 2 * n + 2 * idx;
        // Descending m so each element is used at most once.
        for (int m = idx + 1; m >= 1; --m) {
            auto &row = m_alpha[m];
            const auto &prev = m_alpha[m - 1];
            for (int s = 0; s < width; ++s) {
                const int from = s - x;
                if (from >= 0 && from < width) row[s] += prev[from];
            }
        }
    }
}

int BetaTable::max_sum(int m) const noexcept
{
    if (m < 0 || m > 2 * m_n) return -1;
    return m * (2 * m_n - m);
}

std::int64_t BetaTable::alpha(int r, int m) const noexcept
{
    if (m < 0 || m > 2 * m_n) return 0;
    const int offset = m_n * m_n;
    if (std::abs(r) > offset) return 0;
    return m_alpha[m][r + offset];
}

std::int64_t BetaTable::beta(int r, int m) const noexcept
{
    std::int64_t v = alpha(r, m) - alpha(r, m - 2);
    if (auto it = m_beta_delta.find({r, m}); it != m_beta_delta.end()) v += it->second;
    return v;
}

BetaTable BetaTable::with_beta_delta(int r, int m, std::int64_t delta) const
{
    BetaTable copy = *this;
    copy.m_beta_delta[{r, m}] += delta;
    return copy;
}

namespace
{

const BetaTable &cached_table(int n)
{
    static std::mutex mutex;
    static std::unordered_map<int, std::unique_ptr<const BetaTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[n];
    if (!slot) slot = std::make_unique<const BetaTable>(n);
    return *slot;
}

} // namespace

std::int64_t alpha_count(int r, int m, int n)
{
    if (n <= 0) throw InvalidInput("alpha_count needs n >= 1");
    return cached_table(n).alpha(r, m);
}

std::int64_t beta_value(int r, int m, int n)
{
    if (n <= 0) throw InvalidInput("beta_value needs n >= 1");
    return cached_table(n).beta(r, m);
}

bool degree_audit_ikeda(int n)
{
    const auto &table = cached_table(n);
    std::int64_t total = 0;
    for (int m = 0; m <= n; ++m) {
        const int bound = table.max_sum(m);
        for (int r = -bound; r <= bound; r += 2) total += table.beta(r, m) * (n - m + 1);
    }
    return total == (std::int64_t{1} << (2 * n));
}

bool degree_audit_miyawaki(int n)
{
    if (n < 2) throw InvalidInput("degree_audit_miyawaki needs n >= 2");
    const auto &table = cached_table(n - 1);
    std::int64_t total = 2 * n;
    for (int m = 1; m <= n - 1; ++m) {
        const int bound = table.max_sum(m);
        for (int r = -bound; r <= bound; r += 2) total += table.beta(r, m) * 2 * (n - m);
    }
    return total == (std::int64_t{1} << (2 * n - 1));
}

} // namespace liftspin
