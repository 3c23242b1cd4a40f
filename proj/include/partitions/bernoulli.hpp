#ifndef PARTITIONS_BERNOULLI_HPP
#define PARTITIONS_BERNOULLI_HPP

#include "partitions/errors.hpp"
#include "partitions/real.hpp"

#include <mutex>
#include <vector>

namespace partitions {

// Exact Bernoulli numbers B_0..B_upto as rationals, B_1 = -1/2 convention.
struct BernoulliCache {
    std::vector<bigrat> values;

    const bigrat& operator[](std::size_t m) const { return values.at(m); }
    std::size_t size() const { return values.size(); }
};

// sum_{j=0}^{m} C(m+1,j) B_j = 0  for m >= 1
inline BernoulliCache bernoulli(int upto) {
    if (upto < 0) throw argument_error("bernoulli: upto must be >= 0");
    BernoulliCache cache;
    auto& b = cache.values;
    b.reserve(static_cast<std::size_t>(upto) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= upto; ++m) {
        if (m > 1 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        bigint binom = 1; // C(m+1, j), updated incrementally
        bigrat acc   = 0;
        for (int j = 0; j < m; ++j) {
            acc += bigrat(binom) * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.emplace_back(-acc / bigrat(m + 1));
    }
    return cache;
}

namespace detail {

// Shared cache, grown on demand; guarded since callers may be concurrent.
inline const BernoulliCache& bernoulli_shared(int upto) {
    static std::mutex mtx;
    static BernoulliCache cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (static_cast<int>(cache.values.size()) <= upto) cache = bernoulli(upto + 32);
    return cache;
}

// B_m(x) = sum_i C(m,i) B_i x^{m-i}
template <class Real>
Real bernoulli_poly(int m, const Real& x) {
    const BernoulliCache& b = bernoulli_shared(m);
    Real acc                = 0;
    bigint binom            = 1;
    std::vector<Real> xp(static_cast<std::size_t>(m) + 1);
    xp[0] = 1;
    for (int i = 1; i <= m; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    for (int i = 0; i <= m; ++i) {
        if (!(i > 1 && i % 2 == 1)) // odd B vanish past B_1
            acc += Real(binom) * Real(b[static_cast<std::size_t>(i)]) * xp[static_cast<std::size_t>(m - i)];
        binom = binom * (m - i) / (i + 1);
    }
    return acc;
}

} // namespace detail

} // namespace partitions

#endif
