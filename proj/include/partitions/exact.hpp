#ifndef PARTITIONS_EXACT_HPP
#define PARTITIONS_EXACT_HPP

#include "partitions/errors.hpp"
#include "partitions/real.hpp"

#include <algorithm>
#include <vector>

namespace partitions {

// Exact p_Lambda(n) for n = 0..n_max. Counts are arbitrary-precision:
// p(10^4) already has ~100 digits. Immutable after construction.
struct BigCountTable {
    long long n_max = 0;
    std::vector<bigint> counts;        // index 0..n_max
    std::vector<long long> parts_used; // sorted, distinct, <= n_max

    const bigint& operator[](long long n) const { return counts.at(static_cast<std::size_t>(n)); }
};

// Coefficientwise extraction of prod_{m in parts} (1 - x^m)^{-1}:
// one ascending pass per part (unbounded multiplicity).
inline BigCountTable exact_counts(std::vector<long long> parts, long long n_max) {
    if (n_max < 0) throw argument_error("exact_counts: n_max must be >= 0");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (!parts.empty() && parts.front() < 1)
        throw argument_error("exact_counts: parts must be positive");
    while (!parts.empty() && parts.back() > n_max) parts.pop_back();

    BigCountTable table;
    table.n_max      = n_max;
    table.parts_used = parts;
    table.counts.assign(static_cast<std::size_t>(n_max) + 1, bigint(0));
    table.counts[0] = 1;
    for (long long m : parts)
        for (long long n = m; n <= n_max; ++n)
            table.counts[static_cast<std::size_t>(n)] += table.counts[static_cast<std::size_t>(n - m)];
    return table;
}

// Independent oracle for Lambda = N*: Euler's recurrence over generalized
// pentagonal numbers g_k = k(3k-1)/2 with alternating signs.
inline BigCountTable pentagonal_counts(long long n_max) {
    if (n_max < 0) throw argument_error("pentagonal_counts: n_max must be >= 0");
    BigCountTable table;
    table.n_max = n_max;
    table.counts.assign(static_cast<std::size_t>(n_max) + 1, bigint(0));
    table.counts[0] = 1;
    table.parts_used.reserve(static_cast<std::size_t>(n_max));
    for (long long m = 1; m <= n_max; ++m) table.parts_used.push_back(m);

    for (long long n = 1; n <= n_max; ++n) {
        bigint acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const bool plus = (k % 2 == 1);
            const bigint& t1 = table.counts[static_cast<std::size_t>(n - g1)];
            if (plus) acc += t1; else acc -= t1;
            if (g2 <= n) {
                const bigint& t2 = table.counts[static_cast<std::size_t>(n - g2)];
                if (plus) acc += t2; else acc -= t2;
            }
        }
        table.counts[static_cast<std::size_t>(n)] = acc;
    }
    return table;
}

// f(n) = sum of parts of Lambda dividing n, for n = 1..n_max (index 0 unused).
// Values are bounded by sigma(n), comfortably in 64 bits for any feasible n_max.
inline std::vector<long long> f_weights(const std::vector<long long>& parts, long long n_max) {
    if (n_max < 1) throw argument_error("f_weights: n_max must be >= 1");
    std::vector<long long> f(static_cast<std::size_t>(n_max) + 1, 0);
    for (long long m : parts) {
        if (m < 1 || m > n_max) continue;
        for (long long n = m; n <= n_max; n += m) f[static_cast<std::size_t>(n)] += m;
    }
    return f;
}

} // namespace partitions

#endif
