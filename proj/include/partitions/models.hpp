#ifndef PARTITIONS_MODELS_HPP
#define PARTITIONS_MODELS_HPP

#include "partitions/errors.hpp"
#include "partitions/exact.hpp"
#include "partitions/real.hpp"
#include "partitions/roots.hpp"
#include "partitions/special_functions.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace partitions {

// ---------------------------------------------------------------------------
// Part-set models: the example families with analytically known L-functions.
// ---------------------------------------------------------------------------

struct Classical {
    bool operator==(const Classical&) const = default;
};

// parts (q n + a)^k for n >= 0, gcd(a,q) = 1. a > q is allowed and treated as
// the reduced progression with a finite prefix removed.
struct PowerAP {
    long long a = 1, q = 1, k = 1;
    bool operator==(const PowerAP&) const = default;
};

// parts f(n) = c0 n^k + c1 n^{k-1} + ... + ck for n >= 0 (descending powers),
// with f(N) in N* and f injective on N.
struct Polynomial {
    std::vector<long long> coeffs;
    bool operator==(const Polynomial&) const = default;
};

// union of progressions a_i + q_i N (k = 1), 1 <= a_i <= q_i.
struct UnionAP {
    std::vector<std::pair<long long, long long>> aps;
    bool operator==(const UnionAP&) const = default;
};

// k N* together with the single extra part a, k >= 2, gcd(a,k) = 1.
struct KPowerSingleton {
    long long k = 2, a = 1;
    bool operator==(const KPowerSingleton&) const = default;
};

using LambdaSpec = std::variant<Classical, PowerAP, Polynomial, UnionAP, KPowerSingleton>;

// Analytic data of L_Lambda: pole location/residue plus the special values
// entering the Theorem constants. neg_values[j] holds L(-j) where computable.
template <class Real>
struct LData {
    Real alpha;
    Real residue_A;
    Real L0;
    Real L0_prime;
    std::optional<Real> Lm1;
    std::map<int, Real> neg_values;
};

namespace detail {

inline long long ll_gcd(long long a, long long b) {
    while (b) { a %= b; std::swap(a, b); }
    return a < 0 ? -a : a;
}

// overflow-checked a*b; nullopt on overflow
inline std::optional<long long> mul_checked(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    const long long r = a * b;
    if (r / b != a) return std::nullopt;
    return r;
}

// f(n) in integer arithmetic; nullopt if it exceeds the 64-bit range
inline std::optional<long long> poly_eval_ll(const std::vector<long long>& c, long long n) {
    long long acc = 0;
    for (long long ci : c) {
        auto m = mul_checked(acc, n);
        if (!m) return std::nullopt;
        acc = *m + ci;
    }
    return acc;
}

// index n >= monotone_from(f) implies f strictly increasing at integer steps
inline long long poly_monotone_from(const std::vector<long long>& coeffs) {
    const std::size_t k = coeffs.size() - 1;
    if (k == 1) return 0;
    std::vector<long long> dc(k);
    for (std::size_t i = 0; i < k; ++i) dc[i] = coeffs[i] * static_cast<long long>(k - i);
    const auto roots = polynomial_roots<real50>(dc);
    long long bound  = 0;
    for (const auto& r : roots)
        if (abs(r.imag()) < real50("1e-30"))
            bound = std::max(bound, static_cast<long long>(static_cast<double>(r.real())) + 2);
    return bound;
}

inline void validate_spec(const Classical&) {}

inline void validate_spec(const PowerAP& s) {
    if (s.a < 1 || s.q < 1 || s.k < 1)
        throw argument_error("ap: a, q, k must all be >= 1");
    if (ll_gcd(s.a, s.q) != 1)
        throw argument_error("ap: gcd(a,q) must be 1");
}

inline void validate_spec(const Polynomial& s) {
    if (s.coeffs.size() < 2) throw argument_error("poly: degree must be >= 1");
    if (s.coeffs.front() <= 0) throw argument_error("poly: leading coefficient must be positive");
    const long long n1 = poly_monotone_from(s.coeffs) + 1;
    std::set<long long> seen;
    long long max_prefix = 0;
    for (long long n = 0; n <= n1; ++n) {
        auto v = poly_eval_ll(s.coeffs, n);
        if (!v) throw argument_error("poly: coefficient range too large");
        if (*v < 1) throw argument_error("poly: f(" + std::to_string(n) + ") = " +
                                         std::to_string(*v) + " is not a positive integer");
        if (!seen.insert(*v).second)
            throw argument_error("poly: f is not injective on N (duplicate value " +
                                 std::to_string(*v) + ")");
        max_prefix = std::max(max_prefix, *v);
    }
    // strictly increasing past n1; only collisions with the prefix remain possible
    for (long long n = n1 + 1;; ++n) {
        auto v = poly_eval_ll(s.coeffs, n);
        if (!v || *v > max_prefix) break;
        if (seen.count(*v))
            throw argument_error("poly: f is not injective on N (duplicate value " +
                                 std::to_string(*v) + ")");
    }
}

inline void validate_spec(const UnionAP& s) {
    if (s.aps.size() < 2) throw argument_error("unionap: need at least two progressions");
    long long g = 0;
    for (auto [a, q] : s.aps) {
        if (a < 1 || q < 1 || a > q)
            throw argument_error("unionap: each progression needs 1 <= a <= q");
        g = ll_gcd(g, ll_gcd(a, q));
    }
    if (g != 1) throw argument_error("unionap: gcd of all (a_i, q_i) must be 1");
}

inline void validate_spec(const KPowerSingleton& s) {
    if (s.k < 2 || s.a < 1) throw argument_error("kpow1: need k >= 2 and a >= 1");
    if (ll_gcd(s.a, s.k) != 1) throw argument_error("kpow1: gcd(a,k) must be 1");
}

// extended gcd: returns g and x with a*x == g (mod b)
inline long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    const long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// intersection (a1+q1 N) cap (a2+q2 N) as c + d N with 1 <= c <= d, if nonempty
inline std::optional<std::pair<long long, long long>>
ap_intersect(std::pair<long long, long long> A, std::pair<long long, long long> B) {
    const auto [a1, q1] = A;
    const auto [a2, q2] = B;
    long long x, y;
    const long long g = egcd(q1, q2, x, y);
    if ((a2 - a1) % g != 0) return std::nullopt;
    const long long d = q1 / g * q2;
    // c == a1 (mod q1), c == a2 (mod q2)
    const long long step = (a2 - a1) / g % (q2 / g);
    long long c          = a1 + (__int128(step) * x % (q2 / g) + (q2 / g)) % (q2 / g) * q1;
    c %= d;
    if (c <= 0) c += d;
    return std::make_pair(c, d);
}

} // namespace detail

inline void validate_spec(const LambdaSpec& spec) {
    std::visit([](const auto& s) { detail::validate_spec(s); }, spec);
}

inline int degree_of(const LambdaSpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PowerAP>) return static_cast<int>(s.k);
            else if constexpr (std::is_same_v<T, Polynomial>) return static_cast<int>(s.coeffs.size()) - 1;
            else return 1;
        },
        spec);
}

// ---------------------------------------------------------------------------
// parts enumeration
// ---------------------------------------------------------------------------

inline std::vector<long long> parts_up_to(const LambdaSpec& spec, long long x_max) {
    if (x_max < 1) throw argument_error("parts_up_to: x_max must be >= 1");
    validate_spec(spec);
    std::vector<long long> parts;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Classical>) {
                parts.resize(static_cast<std::size_t>(x_max));
                std::iota(parts.begin(), parts.end(), 1LL);
            } else if constexpr (std::is_same_v<T, PowerAP>) {
                for (long long n = 0;; ++n) {
                    const long long base = s.q * n + s.a;
                    long long p          = 1;
                    bool over            = false;
                    for (long long i = 0; i < s.k && !over; ++i) {
                        auto m = detail::mul_checked(p, base);
                        if (!m || *m > x_max) over = true;
                        else p = *m;
                    }
                    if (over) break;
                    parts.push_back(p);
                }
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                const long long n1 = detail::poly_monotone_from(s.coeffs);
                for (long long n = 0;; ++n) {
                    auto v = detail::poly_eval_ll(s.coeffs, n);
                    if (v && *v <= x_max) parts.push_back(*v);
                    else if (n > n1) break;
                }
                std::sort(parts.begin(), parts.end());
            } else if constexpr (std::is_same_v<T, UnionAP>) {
                std::set<long long> acc;
                for (auto [a, q] : s.aps)
                    for (long long v = a; v <= x_max; v += q) acc.insert(v);
                parts.assign(acc.begin(), acc.end());
            } else { // KPowerSingleton
                std::set<long long> acc;
                for (long long v = s.k; v <= x_max; v += s.k) acc.insert(v);
                if (s.a <= x_max) acc.insert(s.a);
                parts.assign(acc.begin(), acc.end());
            }
        },
        spec);
    return parts;
}

inline std::vector<long long> f_weights(const LambdaSpec& spec, long long n_max) {
    return f_weights(parts_up_to(spec, n_max), n_max);
}

// ---------------------------------------------------------------------------
// admissibility: condition (a) gcd(Lambda) = 1 and condition (g)
// Lambda \ qN infinite for every q >= 2
// ---------------------------------------------------------------------------

struct Admissibility {
    bool gcd_one = false;
    bool cond_g  = false;
    std::optional<long long> witness; // modulus exhibiting the failure
};

inline Admissibility check_admissible(const LambdaSpec& spec) {
    Admissibility r;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Classical>) {
                r = {true, true, std::nullopt};
            } else if constexpr (std::is_same_v<T, PowerAP>) {
                r.gcd_one = detail::ll_gcd(s.a, s.q) == 1;
                r.cond_g  = r.gcd_one; // progression avoids every modulus when gcd(a,q)=1
                if (!r.gcd_one) r.witness = detail::ll_gcd(s.a, s.q);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                // f identically 0 mod p for some prime p | f(0) kills both (a) and (g)
                long long c = std::abs(s.coeffs.back());
                std::vector<long long> primes;
                for (long long p = 2; p * p <= c; ++p)
                    if (c % p == 0) {
                        primes.push_back(p);
                        while (c % p == 0) c /= p;
                    }
                if (c > 1) primes.push_back(c);
                for (long long p : primes) {
                    bool all_zero = true;
                    for (long long n = 0; n < p && all_zero; ++n) {
                        auto v = detail::poly_eval_ll(s.coeffs, n);
                        if (!v || *v % p != 0) all_zero = false;
                    }
                    if (all_zero) {
                        r = {false, false, p};
                        return;
                    }
                }
                r = {true, true, std::nullopt};
            } else if constexpr (std::is_same_v<T, UnionAP>) {
                long long g = 0;
                for (auto [a, q] : s.aps) g = detail::ll_gcd(g, detail::ll_gcd(a, q));
                r.gcd_one = g == 1;
                r.cond_g  = g == 1;
                if (g != 1) r.witness = g;
            } else { // KPowerSingleton: only the single part a lies off kN
                r.gcd_one = detail::ll_gcd(s.a, s.k) == 1;
                r.cond_g  = false;
                r.witness = s.k;
            }
        },
        spec);
    return r;
}

// ---------------------------------------------------------------------------
// L-data and numerical evaluation of L
// ---------------------------------------------------------------------------

namespace detail {

// (qn+a)^k with a > q reduced to the progression (q n + a1)^k minus a finite
// prefix of dropped bases.
struct APReduced {
    long long a1, q, k;
    std::vector<long long> dropped; // bases a1 + j q, j < (a-a1)/q
};

inline APReduced ap_reduce(long long a, long long q, long long k) {
    APReduced r;
    r.q = q;
    r.k = k;
    const long long m = (a - 1) / q;
    r.a1              = a - m * q;
    for (long long j = 0; j < m; ++j) r.dropped.push_back(r.a1 + j * q);
    return r;
}

// L(-j) for the reduced progression: q^{jk} zeta(-jk, a1/q) - sum base^{jk}
template <class Real>
Real ap_l_neg(const APReduced& r, int j) {
    const Real aq = Real(r.a1) / Real(r.q);
    Real v        = pow(Real(r.q), static_cast<int>(j * r.k)) *
                    hurwitz_zeta(Real(-j * r.k), aq);
    for (long long base : r.dropped) v -= pow(Real(base), static_cast<int>(j * r.k));
    return v;
}

template <class Real>
Real ap_l_eval(const APReduced& r, const Real& z) {
    const Real kz = Real(r.k) * z;
    if (kz == 1) throw pole_error("l_eval: z is the pole of L");
    const Real aq = Real(r.a1) / Real(r.q);
    Real v        = pow(Real(r.q), -kz) * hurwitz_zeta(kz, aq);
    for (long long base : r.dropped) v -= pow(Real(base), -z * Real(r.k));
    return v;
}

// all nonempty subset intersections of the union's progressions, with sign
inline std::vector<std::tuple<int, long long, long long>> union_terms(const UnionAP& u) {
    std::vector<std::tuple<int, long long, long long>> terms; // (sign, c, d)
    const std::size_t n = u.aps.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::optional<std::pair<long long, long long>> cur;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (!cur) cur = u.aps[i];
            else {
                cur = ap_intersect(*cur, u.aps[i]);
                if (!cur) break;
            }
        }
        if (!cur) continue;
        const int sign = (__builtin_popcount(mask) % 2 == 1) ? +1 : -1;
        terms.emplace_back(sign, cur->first, cur->second);
    }
    return terms;
}

template <class Real>
Real poly_l_eval(const Polynomial& P, const Real& z, long long M_override, int J_override);

} // namespace detail

template <class Real>
Real l_eval(const LambdaSpec& spec, const Real& z);

template <class Real>
LData<Real> l_data(const LambdaSpec& spec) {
    validate_spec(spec);
    const auto adm = check_admissible(spec);
    if (!adm.gcd_one)
        throw admissibility_error(
            "model is inadmissible: condition (g) fails, parts share modulus " +
                std::to_string(adm.witness.value_or(0)),
            adm.witness.value_or(0));

    LData<Real> ld;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Classical>) {
                ld.alpha     = 1;
                ld.residue_A = 1;
                ld.L0        = -Real(1) / 2;
                ld.L0_prime  = zeta_deriv0<Real>();
                ld.Lm1       = -Real(1) / 12;
                for (int j = 1; j <= 8; ++j) ld.neg_values[j] = riemann_zeta(Real(-j));
            } else if constexpr (std::is_same_v<T, PowerAP>) {
                const auto r  = detail::ap_reduce(s.a, s.q, s.k);
                const Real aq = Real(r.a1) / Real(r.q);
                ld.alpha      = Real(1) / s.k;
                ld.residue_A  = Real(1) / (Real(s.q) * s.k);
                ld.L0         = hurwitz_zeta(Real(0), aq) - Real(static_cast<long long>(r.dropped.size()));
                ld.L0_prime   = Real(s.k) * (hurwitz_deriv0(aq) - log(Real(s.q)) * hurwitz_zeta(Real(0), aq));
                for (long long base : r.dropped) ld.L0_prime += Real(s.k) * log(Real(base));
                ld.Lm1 = detail::ap_l_neg<Real>(r, 1);
                for (int j = 1; j <= 8; ++j) ld.neg_values[j] = detail::ap_l_neg<Real>(r, j);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                const int k   = static_cast<int>(s.coeffs.size()) - 1;
                const Real a0 = Real(s.coeffs[0]);
                const Real a1 = Real(s.coeffs[1]);
                ld.alpha      = Real(1) / k;
                ld.residue_A  = 1 / (Real(k) * pow(a0, Real(1) / k));
                ld.L0         = Real(1) / 2 - a1 / (a0 * k);
                using Complex = complex_for<Real>;
                Complex sum_lg(0);
                for (const auto& root : polynomial_roots<Real>(s.coeffs))
                    sum_lg += log_gamma(Complex(-root));
                // conjugate pairing makes the sum real up to rounding
                if (abs(sum_lg.imag()) > Real("1e-10") * (1 + abs(sum_lg.real())))
                    throw numeric_error("l_data: root log-gamma sum has non-real residue");
                ld.L0_prime = -ld.L0 * log(a0) - Real(k) / 2 * log2pi_v<Real>() + sum_lg.real();
                ld.Lm1      = l_eval(spec, Real(-1)); // no closed form; numerical continuation
            } else if constexpr (std::is_same_v<T, UnionAP>) {
                ld.alpha     = 1;
                ld.residue_A = 0;
                ld.L0        = 0;
                ld.L0_prime  = 0;
                Real lm1     = 0;
                for (auto [sign, c, d] : detail::union_terms(s)) {
                    const Real sg = sign;
                    const Real cd = Real(c) / Real(d);
                    ld.residue_A += sg / Real(d);
                    ld.L0 += sg * hurwitz_zeta(Real(0), cd);
                    ld.L0_prime += sg * (hurwitz_deriv0(cd) - log(Real(d)) * hurwitz_zeta(Real(0), cd));
                    lm1 += sg * Real(d) * hurwitz_zeta(Real(-1), cd);
                }
                ld.Lm1 = lm1;
                for (int j = 1; j <= 8; ++j) {
                    Real v = 0;
                    for (auto [sign, c, d] : detail::union_terms(s))
                        v += Real(sign) * pow(Real(d), j) * hurwitz_zeta(Real(-j), Real(c) / Real(d));
                    ld.neg_values[j] = v;
                }
            } else { // KPowerSingleton: L(z) = k^{-z} zeta(z) + a^{-z}
                ld.alpha     = 1;
                ld.residue_A = Real(1) / s.k;
                ld.L0        = Real(1) / 2; // zeta(0) + 1
                ld.L0_prime  = log(Real(s.k)) / 2 + zeta_deriv0<Real>() - log(Real(s.a));
                ld.Lm1       = Real(s.a) - Real(s.k) / 12;
                for (int j = 1; j <= 8; ++j)
                    ld.neg_values[j] = pow(Real(s.k), j) * riemann_zeta(Real(-j)) + pow(Real(s.a), j);
            }
        },
        spec);
    return ld;
}

namespace detail {

// Analytic continuation of L for polynomial part sets, following the head +
// binomial-tail expansion: for n > M,
//   f(n)^{-z} = a0^{-z} n^{-kz} (1+G(n))^{-z},  G(n) = sum_j c_j/(c_0 n^j),
// expanded to depth J; each 1/n^w tail sums to zeta(kz+w) minus a partial sum.
// Terms where kz+w hits 1 are removable (their coefficient vanishes there) and
// are evaluated as limits; a non-vanishing coefficient there is a genuine pole.
template <class Real>
Real poly_l_eval(const Polynomial& P, const Real& z, long long M_override, int J_override) {
    const int k   = static_cast<int>(P.coeffs.size()) - 1;
    const Real a0 = Real(P.coeffs[0]);

    const double zd   = std::abs(static_cast<double>(z));
    long long M       = M_override > 0 ? M_override
                                       : std::max<long long>(50, static_cast<long long>(10 * (1 + k * zd)) + 1);
    const int J       = J_override > 0 ? J_override : static_cast<int>(std::ceil(1 + k * zd)) + 30;

    // ensure the binomial series contracts fast: |G(M)| <= 0.1
    auto Gmag = [&](long long n) {
        Real g = 0;
        for (int j = 1; j <= k; ++j)
            g += abs(Real(P.coeffs[static_cast<std::size_t>(j)])) / (a0 * pow(Real(n), j));
        return g;
    };
    while (Gmag(M) > Real(1) / 10) M *= 2;

    const int W = std::max<int>(J, static_cast<int>((digits_of<Real> + 15) * 2.302585 /
                                                    std::log(static_cast<double>(M)))) + 2 * k + 4;

    // tail coefficients C[w] = sum_h binom(-z,h) [G^h]_w as a function of z
    auto tail_coeffs = [&](const Real& zz) {
        std::vector<Real> C(static_cast<std::size_t>(W) + 1, Real(0));
        std::vector<Real> cur(static_cast<std::size_t>(W) + 1, Real(0));
        cur[0]     = 1;
        C[0]       = 1; // h = 0
        Real binom = 1;
        for (int h = 1; h <= J && h <= W; ++h) {
            binom *= (-zz - (h - 1)) / h;
            // cur <- cur * G (G has entries c_j/c_0 at powers j = 1..k)
            std::vector<Real> nxt(static_cast<std::size_t>(W) + 1, Real(0));
            for (int w = h - 1; w <= W; ++w) {
                if (cur[static_cast<std::size_t>(w)] == 0) continue;
                for (int j = 1; j <= k && w + j <= W; ++j)
                    nxt[static_cast<std::size_t>(w + j)] +=
                        cur[static_cast<std::size_t>(w)] * Real(P.coeffs[static_cast<std::size_t>(j)]) / a0;
            }
            cur.swap(nxt);
            if (binom == 0) break; // -z a non-negative integer: series terminates
            for (int w = h; w <= W; ++w) C[static_cast<std::size_t>(w)] += binom * cur[static_cast<std::size_t>(w)];
        }
        return C;
    };

    const auto C = tail_coeffs(z);
    Real Cmax    = 0;
    for (const auto& c : C) Cmax = std::max(Cmax, abs(c));

    // head: f(0)^{-z} + sum_{1<=n<=M} f(n)^{-z}
    Real acc = pow(Real(P.coeffs.back()), -z);
    for (long long n = 1; n <= M; ++n) {
        Real fn = 0;
        for (long long c : P.coeffs) fn = fn * Real(n) + Real(c);
        acc += pow(fn, -z);
    }

    // partial sums S_M(kz+w) = sum_{n<=M} n^{-kz-w}, advanced by 1/n per w
    std::vector<Real> npow(static_cast<std::size_t>(M) + 1);
    for (long long n = 1; n <= M; ++n) npow[static_cast<std::size_t>(n)] = pow(Real(n), -Real(k) * z);

    Real tail = 0;
    for (int w = 0; w <= W; ++w) {
        Real S = 0;
        for (long long n = 1; n <= M; ++n) S += npow[static_cast<std::size_t>(n)];
        if (w < W)
            for (long long n = 2; n <= M; ++n) npow[static_cast<std::size_t>(n)] /= Real(n);
        const Real cw = C[static_cast<std::size_t>(w)];
        const Real s  = Real(k) * z + w;
        if (abs(s - 1) < Real("1e-25")) {
            if (abs(cw) <= Real("1e-30") * std::max(Real(1), Cmax)) {
                // removable: contribution is C_w'(z)/k
                const Real dz = Real("1e-15");
                const auto Cp = tail_coeffs(z + dz);
                const auto Cm = tail_coeffs(z - dz);
                tail += (Cp[static_cast<std::size_t>(w)] - Cm[static_cast<std::size_t>(w)]) / (2 * dz) / Real(k);
                continue;
            }
            throw pole_error("l_eval: polynomial L has a pole at z = " + std::to_string((1.0 - w) / k));
        }
        if (cw == 0) continue;
        tail += cw * (riemann_zeta(s) - S);
    }
    return acc + pow(a0, -z) * tail;
}

} // namespace detail

// Numerical evaluation of L_Lambda(z) on the real line (analytic continuation
// for the polynomial family; closed Hurwitz/Riemann forms elsewhere).
template <class Real>
Real l_eval(const LambdaSpec& spec, const Real& z) {
    validate_spec(spec);
    return std::visit(
        [&](const auto& s) -> Real {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Classical>) {
                if (z == 1) throw pole_error("l_eval: z is the pole of L");
                return riemann_zeta(z);
            } else if constexpr (std::is_same_v<T, PowerAP>) {
                return detail::ap_l_eval(detail::ap_reduce(s.a, s.q, s.k), z);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                if (abs(Real(degree_of(spec)) * z - 1) < Real("1e-25"))
                    throw pole_error("l_eval: z is the pole of L");
                return detail::poly_l_eval(s, z, 0, 0);
            } else if constexpr (std::is_same_v<T, UnionAP>) {
                if (z == 1) throw pole_error("l_eval: z is the pole of L");
                Real v = 0;
                for (auto [sign, c, d] : detail::union_terms(s))
                    v += Real(sign) * pow(Real(d), -z) * hurwitz_zeta(z, Real(c) / Real(d));
                return v;
            } else { // KPowerSingleton
                if (z == 1) throw pole_error("l_eval: z is the pole of L");
                return pow(Real(s.k), -z) * riemann_zeta(z) + pow(Real(s.a), -z);
            }
        },
        spec);
}

// evaluation with explicit truncation overrides (self-consistency checks)
template <class Real>
Real l_eval_poly_truncated(const Polynomial& P, const Real& z, long long M, int J) {
    return detail::poly_l_eval(P, z, M, J);
}

// ---------------------------------------------------------------------------
// spec grammar: classical | powers(k) | ap(a,q,k) | poly(a0,...,ak)
//               | unionap(a,q;b,r[;...]) | kpow1(k,a)
// ---------------------------------------------------------------------------

inline std::string to_string(const LambdaSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Classical>) return "classical";
            else if constexpr (std::is_same_v<T, PowerAP>) {
                if (s.a == 1 && s.q == 1 && s.k == 1) return "classical";
                if (s.a == 1 && s.q == 1) return "powers(" + std::to_string(s.k) + ")";
                return "ap(" + std::to_string(s.a) + "," + std::to_string(s.q) + "," +
                       std::to_string(s.k) + ")";
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                std::string out = "poly(";
                for (std::size_t i = 0; i < s.coeffs.size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.coeffs[i]);
                return out + ")";
            } else if constexpr (std::is_same_v<T, UnionAP>) {
                std::string out = "unionap(";
                for (std::size_t i = 0; i < s.aps.size(); ++i)
                    out += (i ? ";" : "") + std::to_string(s.aps[i].first) + "," +
                           std::to_string(s.aps[i].second);
                return out + ")";
            } else {
                return "kpow1(" + std::to_string(s.k) + "," + std::to_string(s.a) + ")";
            }
        },
        spec);
}

namespace detail {

struct SpecParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    long long integer() {
        const std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1))
            fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }

    std::vector<long long> int_list(char close) {
        std::vector<long long> v;
        v.push_back(integer());
        while (eat(',')) v.push_back(integer());
        if (!eat(close)) fail(std::string("expected ',' or '") + close + "'");
        return v;
    }
};

} // namespace detail

inline LambdaSpec parse_spec(const std::string& text) {
    detail::SpecParser p{text};
    std::size_t end = 0;
    while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
    const std::string name = text.substr(0, end);
    p.pos                  = end;

    LambdaSpec spec;
    if (name == "classical") {
        spec = Classical{};
    } else if (name == "powers") {
        if (!p.eat('(')) p.fail("expected '('");
        const auto v = p.int_list(')');
        if (v.size() != 1) p.fail("powers takes one argument");
        spec = PowerAP{1, 1, v[0]};
    } else if (name == "ap") {
        if (!p.eat('(')) p.fail("expected '('");
        const auto v = p.int_list(')');
        if (v.size() != 3) p.fail("ap takes three arguments");
        spec = PowerAP{v[0], v[1], v[2]};
    } else if (name == "poly") {
        if (!p.eat('(')) p.fail("expected '('");
        spec = Polynomial{p.int_list(')')};
    } else if (name == "unionap") {
        if (!p.eat('(')) p.fail("expected '('");
        UnionAP u;
        for (;;) {
            const long long a = p.integer();
            if (!p.eat(',')) p.fail("expected ','");
            const long long q = p.integer();
            u.aps.emplace_back(a, q);
            if (p.eat(')')) break;
            if (!p.eat(';')) p.fail("expected ';' or ')'");
        }
        spec = u;
    } else if (name == "kpow1") {
        if (!p.eat('(')) p.fail("expected '('");
        const auto v = p.int_list(')');
        if (v.size() != 2) p.fail("kpow1 takes two arguments");
        spec = KPowerSingleton{v[0], v[1]};
    } else {
        p.pos = 0;
        p.fail("unknown model '" + name + "'");
    }
    if (p.pos != text.size()) p.fail("trailing characters after spec");
    validate_spec(spec);
    return spec;
}

} // namespace partitions

#endif
