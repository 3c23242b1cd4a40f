#ifndef PARTITIONS_ASYMPTOTICS_HPP
#define PARTITIONS_ASYMPTOTICS_HPP

#include "partitions/errors.hpp"
#include "partitions/models.hpp"
#include "partitions/special_functions.hpp"

#include <optional>

namespace partitions {

// Constants of the main asymptotic estimate
//   p(n) ~ b exp(c n^{alpha/(alpha+1)}) / n^h
// together with the first-order correction coefficients gamma_{1,0} and
// gamma_{0,1} (the latter needs L(-1) and is omitted when unavailable).
template <class Real>
struct AsymConstants {
    Real alpha;
    Real frak_a;
    Real frak_b;
    Real frak_c;
    Real frak_h;
    Real gamma10;
    std::optional<Real> gamma01;
};

template <class Real>
AsymConstants<Real> constants(const LData<Real>& ld) {
    if (!(ld.alpha > 0) || !(ld.residue_A > 0))
        throw argument_error("constants: alpha and residue must be positive");
    AsymConstants<Real> ac;
    const Real alpha = ld.alpha;
    ac.alpha         = alpha;
    ac.frak_a = pow(ld.residue_A * gamma_fn(1 + alpha) * riemann_zeta(1 + alpha), 1 / (alpha + 1));
    ac.frak_b = exp(ld.L0_prime) * pow(ac.frak_a, -ld.L0 + Real(1) / 2) / sqrt(2 * pi_v<Real>() * (1 + alpha));
    ac.frak_c = ac.frak_a * (1 + 1 / alpha);
    ac.frak_h = (1 - ld.L0 + alpha / 2) / (alpha + 1);
    ac.gamma10 = (-ld.L0 * ld.L0 + ld.L0 * (alpha + 1) + (alpha + 3) * (alpha + 2) / 4 -
                  Real(5) / 12 * (alpha + 2) * (alpha + 2)) /
                 (2 * (1 + alpha) * ac.frak_a);
    if (ld.Lm1) ac.gamma01 = ac.frak_a * *ld.Lm1 / 2;
    return ac;
}

template <class Real>
struct Estimate {
    Real log_value;
    Real linear;
    bool degraded = false; // order-1 requested but gamma01 unavailable
};

// log p-hat(n) at order 0 or 1; the order-1 correction multiplies the main
// term by (1 + gamma10 n^{-alpha/(alpha+1)} + gamma01 n^{-1/(alpha+1)}).
template <class Real>
Estimate<Real> estimate(const AsymConstants<Real>& ac, long long n, int order) {
    if (n < 1) throw argument_error("estimate: n must be >= 1");
    if (order != 0 && order != 1) throw argument_error("estimate: order must be 0 or 1");
    const Real rn = Real(n);
    Estimate<Real> e;
    e.log_value = log(ac.frak_b) + ac.frak_c * pow(rn, ac.alpha / (ac.alpha + 1)) - ac.frak_h * log(rn);
    if (order == 1) {
        Real corr = ac.gamma10 * pow(rn, -ac.alpha / (ac.alpha + 1));
        if (ac.gamma01) corr += *ac.gamma01 * pow(rn, -1 / (ac.alpha + 1));
        else e.degraded = true;
        e.log_value += log1p(corr);
    }
    e.linear = exp(e.log_value);
    return e;
}

// Saddle-point location from the inversion expansion:
//   rho = a n^{-1/(1+alpha)} + L(0)/((1+alpha) n) + ...
// terms = 2 is the documented contract; 3 and 4 add the next coefficients
//   c_{2,1} = alpha L(0)^2 / (2 (1+alpha)^2 a),
//   c_{1,2} = zeta(0) L(-1) a / (1+alpha)
// which are only available when L(-1) is known.
template <class Real>
Real rho_expansion(const LData<Real>& ld, long long n, int terms = 2) {
    if (n < 1) throw argument_error("rho_expansion: n must be >= 1");
    if (terms < 1 || terms > 4) throw argument_error("rho_expansion: terms must be 1..4");
    const Real alpha = ld.alpha;
    const Real rn    = Real(n);
    const Real a     = pow(ld.residue_A * gamma_fn(1 + alpha) * riemann_zeta(1 + alpha), 1 / (alpha + 1));
    Real rho         = a * pow(rn, -1 / (1 + alpha));
    if (terms >= 2) rho += ld.L0 / ((1 + alpha) * rn);
    if (terms >= 3)
        rho += alpha * ld.L0 * ld.L0 / (2 * (1 + alpha) * (1 + alpha) * a) *
               pow(rn, -(2 * alpha + 1) / (1 + alpha));
    if (terms >= 4 && ld.Lm1)
        rho += Real(-1) / 2 * *ld.Lm1 * a / (1 + alpha) * pow(rn, -(alpha + 2) / (1 + alpha));
    return rho;
}

} // namespace partitions

#endif
