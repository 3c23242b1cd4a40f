#ifndef PARTITIONS_REAL_HPP
#define PARTITIONS_REAL_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace partitions {

namespace mp = boost::multiprecision;

using bigint   = mp::cpp_int;
using bigrat   = mp::cpp_rational;

// High-precision carriers. Binary floats with a decimal-digit template knob;
// expression templates off so values behave like plain arithmetic types.
template <unsigned Digits>
using real_of = mp::number<mp::backends::cpp_bin_float<Digits>, mp::et_off>;

template <unsigned Digits>
using complex_of_digits =
    mp::number<mp::backends::complex_adaptor<mp::backends::cpp_bin_float<Digits>>, mp::et_off>;

using real50  = real_of<50>;
using real100 = real_of<100>;

template <class Real>
struct real_traits;

template <unsigned D>
struct real_traits<real_of<D>> {
    using complex_type            = complex_of_digits<D>;
    static constexpr int digits10 = static_cast<int>(D);
};

template <class Real>
using complex_for = typename real_traits<Real>::complex_type;

template <class Real>
inline constexpr int digits_of = real_traits<Real>::digits10;

template <class Real>
Real pi_v() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
Real log2pi_v() {
    static const Real v = log(2 * pi_v<Real>());
    return v;
}

// 10^-(digits-k): the working tolerance ladder used throughout
template <class Real>
Real eps_digits(int slack) {
    return pow(Real(10), -(digits_of<Real> - slack));
}

namespace detail {

// Deterministic chunked parallel reduce: chunk boundaries depend only on
// (count, grain) and partial results are combined in chunk order, so output
// is identical no matter how many threads run.
template <class T, class ChunkFn>
std::vector<T> parallel_chunks(long count, long grain, ChunkFn&& fn) {
    if (count <= 0) return {};
    const long nchunks = (count + grain - 1) / grain;
    std::vector<T> results(static_cast<std::size_t>(nchunks));
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    const unsigned nthreads = static_cast<unsigned>(std::min<long>(hw, nchunks));
    if (nthreads <= 1) {
        for (long c = 0; c < nchunks; ++c)
            results[static_cast<std::size_t>(c)] = fn(c * grain, std::min(count, (c + 1) * grain));
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::atomic<long> next{0};
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const long c = next.fetch_add(1);
                if (c >= nchunks) return;
                results[static_cast<std::size_t>(c)] =
                    fn(c * grain, std::min(count, (c + 1) * grain));
            }
        });
    for (auto& th : pool) th.join();
    return results;
}

} // namespace detail

} // namespace partitions

#endif
