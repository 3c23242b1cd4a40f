#ifndef PARTITIONS_ROOTS_HPP
#define PARTITIONS_ROOTS_HPP

#include "partitions/errors.hpp"
#include "partitions/real.hpp"

#include <algorithm>
#include <vector>

namespace partitions {

namespace detail {

template <class Complex>
Complex horner(const std::vector<Complex>& coeffs, const Complex& z) {
    Complex acc = coeffs.front();
    for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * z + coeffs[i];
    return acc;
}

} // namespace detail

// All complex zeros of a0 x^k + a1 x^{k-1} + ... + ak by Aberth-Ehrlich
// simultaneous iteration. Degree stays small here (<= ~20), so start from a
// single circle of radius given by the Cauchy bound and iterate without
// deflation. Conjugate symmetry is enforced on the result for real input.
template <class Real>
std::vector<complex_for<Real>> polynomial_roots(const std::vector<long long>& int_coeffs) {
    using Complex = complex_for<Real>;
    if (int_coeffs.size() < 2) throw argument_error("polynomial_roots: degree must be >= 1");
    if (int_coeffs.front() == 0) throw argument_error("polynomial_roots: leading coefficient is zero");

    const std::size_t k = int_coeffs.size() - 1;
    std::vector<Complex> p(int_coeffs.size());
    for (std::size_t i = 0; i < int_coeffs.size(); ++i) p[i] = Complex(Real(int_coeffs[i]));
    std::vector<Complex> dp(k); // derivative
    for (std::size_t i = 0; i < k; ++i) dp[i] = p[i] * Real(static_cast<long long>(k - i));

    // Cauchy bound: 1 + max |a_i/a_0|
    Real radius = 0;
    for (std::size_t i = 1; i <= k; ++i)
        radius = std::max(radius, abs(Real(int_coeffs[i])) / abs(Real(int_coeffs[0])));
    radius += 1;

    const Real two_pi = 2 * pi_v<Real>();
    std::vector<Complex> z(k);
    for (std::size_t i = 0; i < k; ++i) {
        // irrational-ish angle offset so no starting point sits on the real axis
        const Real theta = two_pi * Real(static_cast<long long>(i)) / Real(static_cast<long long>(k)) + Real(4) / 10;
        z[i]             = radius * Complex(cos(theta), sin(theta));
    }

    Real scale = 0;
    for (auto c : int_coeffs) scale = std::max(scale, abs(Real(c)));
    const Real target = Real("1e-30");

    bool converged = false;
    for (int iter = 0; iter < 200 && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < k; ++i) {
            const Complex pv = detail::horner(p, z[i]);
            const Complex dv = detail::horner(dp, z[i]);
            Complex w        = (dv == Complex(0)) ? Complex(0) : pv / dv;
            Complex repel(0);
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) repel += Real(1) / (z[i] - z[j]);
            const Complex denom = Complex(1) - w * repel;
            const Complex step  = (denom == Complex(0)) ? w : w / denom;
            z[i] -= step;
            const Real residual_scale = scale * pow(std::max(Real(1), abs(z[i])), static_cast<int>(k));
            if (abs(detail::horner(p, z[i])) > target * residual_scale) converged = false;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Real residual_scale = scale * pow(std::max(Real(1), abs(z[i])), static_cast<int>(k));
        if (!(abs(detail::horner(p, z[i])) < Real("1e-25") * residual_scale))
            throw numeric_error("polynomial_roots: iteration cap reached without convergence");
    }

    // Pair conjugates exactly: snap near-real roots, average conjugate partners.
    const Real snap = Real("1e-40") * radius;
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (used[i]) continue;
        if (abs(z[i].imag()) < snap) {
            z[i] = Complex(z[i].real());
            used[i] = true;
            continue;
        }
        std::size_t best = i;
        Real best_d      = -1;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (used[j]) continue;
            const Real d = abs(z[j] - conj(z[i]));
            if (best_d < 0 || d < best_d) { best_d = d; best = j; }
        }
        if (best != i && best_d < Real("1e-20") * radius) {
            const Complex avg = (z[i] + conj(z[best])) / 2;
            z[i]    = avg;
            z[best] = conj(avg);
            used[i] = used[best] = true;
        }
    }
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // Multiple roots converge only as a cluster around the true value. Take
    // the cluster centroid and polish it as a simple zero of the (m-1)-th
    // derivative, which restores full precision. Integer polynomials of this
    // size keep distinct roots far above the clustering tolerance.
    const Real ctol = Real("1e-12") * radius;
    for (std::size_t i = 0; i < k;) {
        std::size_t j = i + 1;
        while (j < k && abs(z[j] - z[i]) < ctol) ++j;
        const std::size_t m = j - i;
        if (m > 1) {
            Complex x(0);
            for (std::size_t t = i; t < j; ++t) x += z[t];
            x /= Real(static_cast<long long>(m));
            std::vector<Complex> d = p;
            for (std::size_t t = 0; t + 1 < m; ++t) {
                std::vector<Complex> nd(d.size() - 1);
                for (std::size_t c = 0; c + 1 < d.size(); ++c)
                    nd[c] = d[c] * Real(static_cast<long long>(d.size() - 1 - c));
                d = std::move(nd);
            }
            std::vector<Complex> dd(d.size() - 1);
            for (std::size_t c = 0; c + 1 < d.size(); ++c)
                dd[c] = d[c] * Real(static_cast<long long>(d.size() - 1 - c));
            for (int it = 0; it < 80; ++it) {
                const Complex den = detail::horner(dd, x);
                if (den == Complex(0)) break;
                const Complex step = detail::horner(d, x) / den;
                x -= step;
                if (abs(step) < Real("1e-45") * (1 + abs(x))) break;
            }
            if (abs(x.imag()) < ctol) x = Complex(x.real());
            for (std::size_t t = i; t < j; ++t) z[t] = x;
        }
        i = j;
    }
    return z;
}

} // namespace partitions

#endif
