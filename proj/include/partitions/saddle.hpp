#ifndef PARTITIONS_SADDLE_HPP
#define PARTITIONS_SADDLE_HPP

#include "partitions/asymptotics.hpp"
#include "partitions/errors.hpp"
#include "partitions/models.hpp"
#include "partitions/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace partitions {

namespace detail {

// part cutoff: e^{-sigma M} below the precision target (plus guard digits)
template <class Real>
long long part_cutoff(const Real& sigma) {
    const double s = static_cast<double>(sigma);
    return static_cast<long long>(std::ceil((digits_of<Real> + 3) * 2.302585092994046 / s)) + 1;
}

// omega^e by binary powering against a lazily grown table of omega^(2^b)
template <class Complex>
struct PowerWalk {
    std::vector<Complex> pow2;

    explicit PowerWalk(const Complex& omega) { pow2.push_back(omega); }

    const Complex& get(long long e) {
        if (e == 1) return pow2.front();
        while ((1LL << pow2.size()) <= e) pow2.push_back(pow2.back() * pow2.back());
        scratch = Complex(1);
        int b   = 0;
        for (long long rest = e; rest; rest >>= 1, ++b)
            if (rest & 1) scratch *= pow2[static_cast<std::size_t>(b)];
        return scratch;
    }

    Complex scratch{1};
};

} // namespace detail

// For a solved saddle: the location rho, the part cutoff used, and the cached
// Phi values entering the Gaussian factor. Immutable once built.
template <class Real>
struct SaddleContext {
    LambdaSpec spec;
    long long n = 0;
    Real rho;
    long long M_trunc = 0;
    Real phi2;  // Phi''(rho) > 0
    Real F_log; // Phi(rho)
};

// Phi(s) = -sum_{m in Lambda} log(1 - e^{-sm}) over Re s > 0, principal
// branch per factor, truncated where the geometric tail drops below precision.
template <class Real>
complex_for<Real> phi(const LambdaSpec& spec, const complex_for<Real>& s) {
    using Complex = complex_for<Real>;
    if (!(s.real() > 0)) throw argument_error("phi: requires Re s > 0");
    const auto parts = parts_up_to(spec, detail::part_cutoff(s.real()));
    Complex acc(0);
    for (long long m : parts) acc -= log(Complex(1) - exp(-s * Real(m)));
    return acc;
}

template <class Real>
Real phi_real(const LambdaSpec& spec, const Real& sigma) {
    if (!(sigma > 0)) throw argument_error("phi: requires Re s > 0");
    const auto parts = parts_up_to(spec, detail::part_cutoff(sigma));
    const Real u1    = exp(-sigma);
    detail::PowerWalk<Real> walk(u1);
    Real acc  = 0;
    Real u    = 1;
    long long prev = 0;
    for (long long m : parts) {
        u *= walk.get(m - prev);
        prev = m;
        acc -= log1p(-u);
    }
    return acc;
}

// (-1)^k Phi^(k)(sigma) = sum_m m^k S_k(e^{-sigma m}) with
// S_1 = u/(1-u), S_2 = u/(1-u)^2, S_3 = u(1+u)/(1-u)^3, S_4 = u(1+4u+u^2)/(1-u)^4.
template <class Real>
Real phi_deriv(const LambdaSpec& spec, const Real& sigma, int k) {
    if (!(sigma > 0)) throw argument_error("phi_deriv: requires sigma > 0");
    if (k < 1 || k > 4) throw argument_error("phi_deriv: k must be 1..4");
    const auto parts = parts_up_to(spec, detail::part_cutoff(sigma));
    const Real u1    = exp(-sigma);
    detail::PowerWalk<Real> walk(u1);
    Real acc  = 0;
    Real u    = 1;
    long long prev = 0;
    for (long long m : parts) {
        u *= walk.get(m - prev);
        prev = m;
        const Real d   = 1 - u;
        const Real rm  = Real(m);
        Real mk        = rm;
        for (int i = 1; i < k; ++i) mk *= rm;
        Real s;
        switch (k) {
            case 1: s = u / d; break;
            case 2: s = u / (d * d); break;
            case 3: s = u * (1 + u) / (d * d * d); break;
            default: s = u * (1 + u * (4 + u)) / (d * d * d * d); break;
        }
        acc += mk * s;
    }
    return (k % 2 == 0) ? acc : -acc;
}

// Solve -Phi'(rho) = n: Newton on the expansion seed with a bisection
// safeguard on a bracketing interval (g is strictly decreasing).
template <class Real>
SaddleContext<Real> solve_saddle(const LambdaSpec& spec, long long n, const LData<Real>& ld) {
    if (n < 1) throw argument_error("solve_saddle: n must be >= 1");
    const Real target = Real(n);
    auto g = [&](const Real& s) { return -phi_deriv(spec, s, 1) - target; };

    Real seed = rho_expansion(ld, n, ld.Lm1 ? 4 : 2);
    if (!(seed > 0)) seed = rho_expansion(ld, n, 1);
    Real lo = seed / 10, hi = seed * 10;
    int expand = 0;
    while (g(lo) < 0) {
        lo /= 10;
        if (++expand > 60) throw numeric_error("solve_saddle: bracket failure (low)");
    }
    while (g(hi) > 0) {
        hi *= 10;
        if (++expand > 60) throw numeric_error("solve_saddle: bracket failure (high)");
    }

    Real x        = std::clamp(seed, lo, hi);
    const Real tol = eps_digits<Real>(12) * target;
    Real gx       = g(x);
    for (int iter = 0; iter < 120 && abs(gx) > tol; ++iter) {
        if (gx > 0) lo = x; else hi = x;
        const Real slope = -phi_deriv(spec, x, 2);
        Real next        = x - gx / slope;
        if (!(next > lo) || !(next < hi)) next = (lo + hi) / 2;
        x  = next;
        gx = g(x);
    }
    if (abs(gx) > Real("1e-9") * target)
        throw numeric_error("solve_saddle: residual tolerance not reached");

    SaddleContext<Real> ctx{spec, n, x, detail::part_cutoff(x), phi_deriv(spec, x, 2),
                            phi_real(spec, x)};
    return ctx;
}

template <class Real>
SaddleContext<Real> solve_saddle(const LambdaSpec& spec, long long n) {
    return solve_saddle(spec, n, l_data<Real>(spec));
}

namespace detail {

inline int default_quad_points(const LambdaSpec& spec, long long n) {
    const double alpha = 1.0 / degree_of(spec);
    const double expo  = (alpha + 2) / (2 * (alpha + 1));
    return std::max(256, 16 * static_cast<int>(std::ceil(std::pow(static_cast<double>(n), expo))));
}

} // namespace detail

// p(n) by trapezoidal quadrature of Cauchy's integral at sigma = rho:
//   (1/2pi) int_{-pi}^{pi} e^{rho n + i t n} F(rho+it) dt.
// F is evaluated as the product over parts of (1 - e^{-m rho} e^{-imt})^{-1}
// (identical to exp(phi)); conjugate symmetry halves the node count, and the
// residual imaginary part is checked at the self-conjugate nodes.
template <class Real>
Real cauchy_count(const LambdaSpec& spec, long long n, int quad_points = 0) {
    using Complex = complex_for<Real>;
    if (n < 1) throw argument_error("cauchy_count: n must be >= 1");
    if (quad_points != 0 && quad_points < 64)
        throw argument_error("cauchy_count: quad_points must be >= 64");

    const auto ctx = solve_saddle(spec, n, l_data<Real>(spec));
    long long Q    = quad_points > 0 ? quad_points : detail::default_quad_points(spec, n);
    if (Q % 2) ++Q;

    const auto parts = parts_up_to(spec, ctx.M_trunc);
    std::vector<long long> gaps(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) gaps[i] = parts[i] - (i ? parts[i - 1] : 0);

    const Real two_pi = 2 * pi_v<Real>();
    const Real w1     = exp(-ctx.rho);

    auto node_value = [&](long long j) -> Complex {
        const Real t = two_pi * Real(j) / Real(Q);
        const Complex omega(cos(t), -sin(t)); // e^{-it}
        detail::PowerWalk<Complex> zwalk(omega);
        detail::PowerWalk<Real> wwalk(w1);
        Complex prod(1);
        Complex zeta_m(1);
        Real w(1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            zeta_m *= zwalk.get(gaps[i]);
            w *= wwalk.get(gaps[i]);
            prod *= Complex(1) - w * zeta_m;
        }
        // e^{itn} with tn reduced mod 2pi (j n mod Q avoids large-angle trig)
        const long long r = static_cast<long long>((static_cast<__int128>(j) * n) % Q);
        const Real tn     = two_pi * Real(r) / Real(Q);
        return Complex(cos(tn), sin(tn)) / prod;
    };

    const long long half = Q / 2;
    const auto chunks    = detail::parallel_chunks<Complex>(
        half + 1, 8, [&](long long b, long long e) {
            Complex acc(0);
            for (long long j = b; j < e; ++j) {
                const Complex v = node_value(j);
                if (j == 0 || j == half) acc += v / 2;
                else acc += v;
            }
            return acc;
        });
    Complex sum(0);
    for (const auto& c : chunks) sum += c;
    sum *= 2; // conjugate half

    const Real real_part = sum.real();
    // the paired nodes cancel imaginary parts identically; residue comes from t = 0, pi
    const Real imag_resid = abs(node_value(0).imag() + node_value(half).imag());
    if (imag_resid > Real("1e-3") * abs(real_part))
        throw numeric_error("cauchy_count: imaginary residual above tolerance; raise quad_points");

    return exp(ctx.rho * n) * real_part / Real(Q);
}

namespace detail {

// lambda_{2k}(rho) from the Taylor-coefficient formula, restricted to third
// and fourth derivative orders: sum over ordered tuples (m_1..m_h), m_j in
// {3,4}, sum m_j = 2k, of (i)^{2k}/h! prod Phi^(m_j)/m_j!.
template <class Real>
Real lambda_2k_34(int two_k, const Real& phi3, const Real& phi4) {
    const Real f3 = phi3 / 6, f4 = phi4 / 24;
    Real total = 0;
    // tuples with c3 threes and c4 fours; ordered count = (c3+c4)! / (c3! c4!)
    for (int c4 = 0; 4 * c4 <= two_k; ++c4) {
        const int rem = two_k - 4 * c4;
        if (rem % 3 != 0) continue;
        const int c3 = rem / 3;
        const int h  = c3 + c4;
        if (h == 0) continue;
        Real multinom = 1; // h! / (c3! c4!) then divided by h! leaves 1/(c3! c4!)
        for (int i = 2; i <= c3; ++i) multinom /= i;
        for (int i = 2; i <= c4; ++i) multinom /= i;
        total += multinom * pow(f3, c3) * pow(f4, c4);
    }
    return ((two_k / 2) % 2 == 0 ? total : -total); // i^{2k} = (-1)^k
}

} // namespace detail

// Truncated saddle series: log of e^{rho n} F(rho)/sqrt(2 pi) times
// [ Phi''^{-1/2} + sum_k (2k)! lambda_{2k} / (2^k k! Phi''^{k+1/2}) ].
// K = 0 is the pure Gaussian approximation; K = 1 adds the complete first
// correction (k = 2,3, derivative orders 3..4); K = 2 adds every further term
// expressible with those orders (k <= 6).
template <class Real>
Real saddle_estimate(const LambdaSpec& spec, long long n, int K) {
    if (K < 0 || K > 2) throw argument_error("saddle_estimate: K must be 0, 1 or 2");
    const auto ctx = solve_saddle(spec, n, l_data<Real>(spec));
    Real bracket   = 1 / sqrt(ctx.phi2);
    if (K >= 1) {
        const Real phi3 = phi_deriv(spec, ctx.rho, 3);
        const Real phi4 = phi_deriv(spec, ctx.rho, 4);
        const int kmax  = (K == 1) ? 3 : 6;
        Real fact_k = 2, fact_2k = 24, pow2k = 4; // k!, (2k)!, 2^k at k=2
        for (int k = 2; k <= kmax; ++k) {
            const Real lam = detail::lambda_2k_34(2 * k, phi3, phi4);
            if (lam != 0)
                bracket += fact_2k * lam / (pow2k * fact_k * pow(ctx.phi2, k) * sqrt(ctx.phi2));
            fact_k *= k + 1;
            fact_2k *= (2 * k + 1) * (2 * k + 2);
            pow2k *= 2;
        }
    }
    return ctx.rho * n + ctx.F_log + log(bracket) - log(2 * pi_v<Real>()) / 2;
}

// ---------------------------------------------------------------------------
// numerical verification of the Phi expansions and of the minor-arc bound
// ---------------------------------------------------------------------------

template <class Real>
struct PhiExpansionReport {
    bool strong = false;
    int included_sigma_power = 0; // 0: weak (const term); strong: through sigma^2
    std::vector<Real> sigmas, direct, expansion, residual;
    Real slope = 0;              // LS slope of log|residual| against log sigma
    bool at_noise_floor = false; // residuals at working-precision noise
};

// Compare direct summation of Phi(sigma) against the expansion
//   A Gamma(alpha) zeta(1+alpha) sigma^-alpha - L(0) log sigma + L'(0)
// plus, in strong mode, -zeta(0)L(-1) sigma + zeta(-1)L(-2) sigma^2/2.
template <class Real>
PhiExpansionReport<Real> verify_phi_expansion(const LambdaSpec& spec,
                                              const std::vector<Real>& sigma_list, bool strong) {
    const auto ld = l_data<Real>(spec);
    PhiExpansionReport<Real> rep;
    rep.strong = strong;
    if (strong && (!ld.Lm1 || !ld.neg_values.count(2)))
        throw capability_error("verify_phi_expansion: strong mode needs L(-1) and L(-2)");
    rep.included_sigma_power = strong ? 2 : 0;

    const Real lead = ld.residue_A * gamma_fn(ld.alpha) * riemann_zeta(1 + ld.alpha);
    for (const Real& sigma : sigma_list) {
        const Real direct = phi_real(spec, sigma);
        Real expans       = lead * pow(sigma, -ld.alpha) - ld.L0 * log(sigma) + ld.L0_prime;
        if (strong) {
            expans += -riemann_zeta(Real(0)) * *ld.Lm1 * sigma;
            expans += riemann_zeta(Real(-1)) * ld.neg_values.at(2) * sigma * sigma / 2;
        }
        rep.sigmas.push_back(sigma);
        rep.direct.push_back(direct);
        rep.expansion.push_back(expans);
        rep.residual.push_back(direct - expans);
    }

    // slope fit on points above the numeric noise floor
    const Real floor_eps = eps_digits<Real>(8);
    std::vector<Real> xs, ys;
    int floored = 0;
    for (std::size_t i = 0; i < rep.sigmas.size(); ++i) {
        const Real noise = floor_eps * std::max(Real(1), abs(rep.direct[i]));
        if (abs(rep.residual[i]) <= noise) { ++floored; continue; }
        xs.push_back(log(rep.sigmas[i]));
        ys.push_back(log(abs(rep.residual[i])));
    }
    rep.at_noise_floor = floored * 2 > static_cast<int>(rep.sigmas.size());
    if (xs.size() >= 2) {
        Real sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
        }
        const Real m = Real(static_cast<long long>(xs.size()));
        rep.slope    = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    } else {
        rep.slope = Real(99); // everything at noise: expansion exact to precision
    }
    return rep;
}

template <class Real>
struct ArcBoundReport {
    Real rho, beta;
    Real t_min;   // rho^beta, start of the verified range
    Real t_minor; // 2 pi rho, start of the minor arcs proper
    Real first_ratio;
    Real max_ratio_full;      // over [rho^beta, pi]
    Real max_ratio_minor;     // over [2 pi rho, pi]
    Real integral_estimate;   // int |F(rho+it)|/F(rho) dt over rho^beta<=|t|<=pi
    Real integral_over_rho2F; // against the rho^2 F(rho) bound
    long long grid = 0;
};

// Grid scan of |F(rho+it)|/F(rho) over the arc rho^beta <= |t| <= pi with the
// fixed exponent beta = 1 + alpha/2.4. The measure-weighted integral estimates
// the lemma's bound constant; the max over t >= 2 pi rho covers the range
// where the Dirichlet-approximation argument applies.
template <class Real>
ArcBoundReport<Real> verify_arc_bound(const LambdaSpec& spec, long long n, long long grid = 2000) {
    using Complex = complex_for<Real>;
    if (grid < 1000) throw argument_error("verify_arc_bound: grid must be >= 1000");
    const auto ld  = l_data<Real>(spec);
    const auto ctx = solve_saddle(spec, n, ld);

    ArcBoundReport<Real> rep;
    rep.rho     = ctx.rho;
    rep.beta    = 1 + ld.alpha / (Real(24) / 10);
    rep.t_min   = pow(ctx.rho, rep.beta);
    rep.t_minor = 2 * pi_v<Real>() * ctx.rho;
    rep.grid    = grid;

    const auto parts = parts_up_to(spec, ctx.M_trunc);
    std::vector<long long> gaps(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) gaps[i] = parts[i] - (i ? parts[i - 1] : 0);
    const Real w1 = exp(-ctx.rho);
    const Real h  = (pi_v<Real>() - rep.t_min) / Real(grid);

    // ratio^2 = prod (1-w)^2 / |1-w zeta|^2, accumulated as one product
    auto ratio_at = [&](const Real& t) -> Real {
        const Complex omega(cos(t), -sin(t));
        detail::PowerWalk<Complex> zwalk(omega);
        detail::PowerWalk<Real> wwalk(w1);
        Complex zeta_m(1);
        Real w(1), prod(1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            zeta_m *= zwalk.get(gaps[i]);
            w *= wwalk.get(gaps[i]);
            const Real re = 1 - w * zeta_m.real();
            const Real im = w * zeta_m.imag();
            const Real d  = 1 - w;
            prod *= d * d / (re * re + im * im);
        }
        return sqrt(prod);
    };

    struct Partial {
        Real sum, max_full, max_minor, first;
        bool has_first;
    };
    const auto chunks = detail::parallel_chunks<Partial>(grid, 16, [&](long long b, long long e) {
        Partial p{Real(0), Real(0), Real(0), Real(0), false};
        for (long long i = b; i < e; ++i) {
            const Real t = rep.t_min + (Real(i) + Real(1) / 2) * h;
            const Real r = ratio_at(t);
            if (i == 0) { p.first = r; p.has_first = true; }
            p.sum += r;
            p.max_full = std::max(p.max_full, r);
            if (t >= rep.t_minor) p.max_minor = std::max(p.max_minor, r);
        }
        return p;
    });
    Real sum = 0, max_full = 0, max_minor = 0, first = 0;
    for (const auto& c : chunks) {
        sum += c.sum;
        max_full  = std::max(max_full, c.max_full);
        max_minor = std::max(max_minor, c.max_minor);
        if (c.has_first) first = c.first;
    }
    rep.first_ratio         = first;
    rep.max_ratio_full      = max_full;
    rep.max_ratio_minor     = max_minor;
    rep.integral_estimate   = 2 * sum * h; // both signs of t
    rep.integral_over_rho2F = rep.integral_estimate / (ctx.rho * ctx.rho);
    return rep;
}

} // namespace partitions

#endif
