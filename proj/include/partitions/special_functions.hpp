#ifndef PARTITIONS_SPECIAL_FUNCTIONS_HPP
#define PARTITIONS_SPECIAL_FUNCTIONS_HPP

#include "partitions/bernoulli.hpp"
#include "partitions/errors.hpp"
#include "partitions/real.hpp"

#include <cmath>

namespace partitions {

namespace detail {

// Stirling series is used once Re z >= this; derived from the target
// precision (optimal truncation error ~ exp(-2*pi*Re z)).
template <class Real>
int stirling_shift() {
    return std::max(18, static_cast<int>(digits_of<Real> * 0.3843) + 5);
}

template <class Complex>
Complex log_gamma_stirling(const Complex& z) {
    using Real = decltype(std::declval<Complex>().real());
    Complex w  = z;
    Complex acc(0);
    // log G(z) = log G(z+m) - sum_{j<m} log(z+j); principal branch per factor
    const int shift = stirling_shift<Real>();
    while (w.real() < shift) {
        acc -= log(w);
        w += 1;
    }
    Complex lg = (w - Real(1) / 2) * log(w) - w + log2pi_v<Real>() / 2;
    const Complex w2inv = Real(1) / (w * w);
    Complex zpow        = Real(1) / w; // w^{-(2j-1)}
    const Real tol      = eps_digits<Real>(3);
    for (int j = 1; j <= 8 * digits_of<Real>; ++j) {
        const bigrat& b2j = bernoulli_shared(2 * j)[static_cast<std::size_t>(2 * j)];
        Complex term      = Real(b2j) / Real(2 * j * (2 * j - 1)) * zpow;
        lg += term;
        if (abs(term) < tol * abs(lg)) break;
        zpow *= w2inv;
    }
    return lg + acc;
}

} // namespace detail

// Principal-branch-consistent log Gamma; poles at the non-positive integers.
template <class Complex>
Complex log_gamma(const Complex& z) {
    const auto re = z.real();
    const auto im = z.imag();
    if (im == 0 && re <= 0 && re == floor(re))
        throw pole_error("log_gamma: pole at non-positive integer");
    return detail::log_gamma_stirling(z);
}

// Real positive arguments get a real-valued overload.
template <unsigned D>
real_of<D> log_gamma(const real_of<D>& x) {
    if (x <= 0 && x == floor(x)) throw pole_error("log_gamma: pole at non-positive integer");
    if (x > 0) return detail::log_gamma_stirling(complex_of_digits<D>(x)).real();
    throw argument_error("log_gamma(real): negative non-integer arguments need the complex overload");
}

template <class Complex>
Complex gamma_fn(const Complex& z) {
    return exp(log_gamma(z));
}

template <unsigned D>
real_of<D> gamma_fn(const real_of<D>& x) {
    return exp(log_gamma(x));
}

// Hurwitz zeta(s, a) for real s != 1 and 0 < a <= 1.
//
// Non-positive integer s: exact closed form via Bernoulli polynomials,
//   zeta(-m, a) = -B_{m+1}(a)/(m+1)
// (also sidesteps the cancellation the tail formula suffers at negative s).
// Otherwise Euler-Maclaurin:
//   sum_{r<N}(r+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//     + sum_j B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
// with the tail stopped once below the precision target.
template <class Real>
Real hurwitz_zeta(const Real& s, const Real& a) {
    if (!(a > 0) || a > 1) throw argument_error("hurwitz_zeta: a must be in (0,1]");
    if (s == 1) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (s <= 0 && s == floor(s)) {
        const int m = static_cast<int>(-s);
        return -detail::bernoulli_poly(m + 1, a) / (m + 1);
    }

    const int digits = digits_of<Real>;
    const int N      = std::max({12, static_cast<int>(0.56 * digits) + 2,
                                 static_cast<int>(std::abs(static_cast<double>(s))) + 6});
    Real acc = 0;
    for (int r = 0; r < N; ++r) acc += pow(Real(r) + a, -s);

    const Real na   = Real(N) + a;
    const Real nas  = pow(na, -s);
    acc += nas * na / (s - 1);
    acc += nas / 2;

    // correction terms; rising factorial (s)_{2j-1} built incrementally
    const Real na2inv = 1 / (na * na);
    Real factor       = s * nas / na; // (s)_1 * (N+a)^{-s-1}
    Real fact         = 2;            // (2j)!
    const Real tol    = eps_digits<Real>(4) * (1 + abs(acc));
    for (int j = 1; j <= 4 * N; ++j) {
        const bigrat& b2j = detail::bernoulli_shared(2 * j)[static_cast<std::size_t>(2 * j)];
        const Real term   = Real(b2j) / fact * factor;
        acc += term;
        if (abs(term) < tol) break;
        // advance to j+1
        factor *= (s + 2 * j - 1) * (s + 2 * j) * na2inv;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return acc;
}

// Riemann zeta for real s != 1. Trivial zeros are returned as exact zeros,
// negative integers via Bernoulli numbers.
template <class Real>
Real riemann_zeta(const Real& s) {
    if (s == 1) throw pole_error("riemann_zeta: pole at s = 1");
    if (s <= 0 && s == floor(s)) {
        const int m = static_cast<int>(-s);
        if (m > 0 && m % 2 == 0) return Real(0);
        // zeta(-m) = (-1)^m B_{m+1}/(m+1) under the B_1 = -1/2 convention
        const bigrat& b = detail::bernoulli_shared(m + 1)[static_cast<std::size_t>(m + 1)];
        const Real v    = Real(b) / (m + 1);
        return (m % 2 == 0) ? v : -v;
    }
    return hurwitz_zeta(s, Real(1));
}

// zeta'(0) = -log(2*pi)/2
template <class Real>
Real zeta_deriv0() {
    return -log2pi_v<Real>() / 2;
}

// d/ds zeta(s,a) at s = 0:  log Gamma(a) - log(2*pi)/2
template <class Real>
Real hurwitz_deriv0(const Real& a) {
    if (!(a > 0) || a > 1) throw argument_error("hurwitz_deriv0: a must be in (0,1]");
    return log_gamma(a) - log2pi_v<Real>() / 2;
}

} // namespace partitions

#endif
