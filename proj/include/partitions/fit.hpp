#ifndef PARTITIONS_FIT_HPP
#define PARTITIONS_FIT_HPP

#include "partitions/asymptotics.hpp"
#include "partitions/exact.hpp"
#include "partitions/models.hpp"

#include <vector>

namespace partitions {

template <class Real>
struct FitResult {
    Real c1_hat;
    Real stderr_c1;
    Real c1_closed; // gamma_{1,0} (+ gamma_{0,1} when the exponents coincide)
    int points = 0;
};

// Least-squares recovery of the first correction coefficient: regress
// p(n)/mainterm - 1 on n^{-e1} (plus the next exponent as a nuisance
// regressor) over a geometric ladder of n drawn from the exact table.
template <class Real>
FitResult<Real> fit_first_correction(const LambdaSpec& spec, const BigCountTable& table) {
    if (table.n_max < 2000)
        throw argument_error("fit: exact counts to n_max >= 2000 required");
    const auto ld = l_data<Real>(spec);
    const auto ac = constants(ld);

    const Real e1     = ac.alpha / (ac.alpha + 1);
    const Real e2     = 1 / (ac.alpha + 1);
    const bool merged = (e1 == e2); // alpha = 1: gamma10 and gamma01 share the exponent
    const Real enext  = merged ? Real(1) : std::min(2 * e1, e2);

    // ladder n_max, n_max/sqrt(2), ... while n stays in the asymptotic regime
    std::vector<long long> ns;
    const long long n_low = std::max<long long>(32, table.n_max / 64);
    double cur            = static_cast<double>(table.n_max);
    while (cur >= static_cast<double>(n_low)) {
        const long long n = static_cast<long long>(cur + 0.5);
        if (ns.empty() || n < ns.back()) ns.push_back(n);
        cur /= 1.4142135623730951;
    }

    Real s11 = 0, s12 = 0, s22 = 0, sy1 = 0, sy2 = 0;
    std::vector<Real> xs1, xs2, ys;
    for (long long n : ns) {
        const Real logp = log(Real(table[n]));
        const Real y    = expm1(logp - estimate(ac, n, 0).log_value);
        const Real x1   = pow(Real(n), -e1);
        const Real x2   = pow(Real(n), -enext);
        xs1.push_back(x1); xs2.push_back(x2); ys.push_back(y);
        s11 += x1 * x1; s12 += x1 * x2; s22 += x2 * x2;
        sy1 += x1 * y;  sy2 += x2 * y;
    }
    const Real det = s11 * s22 - s12 * s12;
    if (det == 0 || ns.size() < 3)
        throw argument_error("fit: insufficient range for the regression");
    const Real c1 = (sy1 * s22 - sy2 * s12) / det;
    const Real c2 = (s11 * sy2 - s12 * sy1) / det;

    Real rss = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const Real r = ys[i] - c1 * xs1[i] - c2 * xs2[i];
        rss += r * r;
    }
    const Real sigma2 = rss / Real(static_cast<long long>(ys.size()) - 2);

    FitResult<Real> out;
    out.c1_hat     = c1;
    out.stderr_c1  = sqrt(sigma2 * s22 / det);
    out.c1_closed  = ac.gamma10 + ((merged && ac.gamma01) ? *ac.gamma01 : Real(0));
    out.points     = static_cast<int>(ys.size());
    return out;
}

} // namespace partitions

#endif
