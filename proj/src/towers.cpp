#include "agc/towers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agc/ff.hpp"

namespace agc {

namespace {

long long ipow(long long base, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > (1LL << 62) / base) throw std::overflow_error("integer power overflow");
        r *= base;
    }
    return r;
}

long long to_ll(i128 v) {
    if (v > i128(1) << 62 || v < -(i128(1) << 62)) throw std::overflow_error("value exceeds 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

TowerStats make_tower_stats(long long q, const Rat& nu, std::optional<Rat> gamma) {
    if (nu < Rat(0)) throw std::invalid_argument("splitting rate must be >= 0");
    TowerStats st{q, nu, gamma, Rat(0)};
    if (gamma) {
        if (*gamma <= Rat(0)) throw std::invalid_argument("tower genus must be positive");
        st.lambda = nu / *gamma;
    }
    // lambda <= A(q) <= sqrt(q) - 1, compared exactly as (lambda+1)^2 <= q
    Rat lp1 = st.lambda + Rat(1);
    if (lp1 * lp1 > Rat(q))
        throw std::invalid_argument("tower limit exceeds the Drinfeld-Vladut bound");
    return st;
}

TowerLevel optimal_tower_level(long long q, long long i) {
    if (q <= 2) throw std::invalid_argument("tower base parameter must be > 2");
    if (i < 1) throw std::invalid_argument("tower level index must be >= 1");
    long long genus;
    if (i % 2 == 0) {
        long long t = ipow(q, i / 2) - 1;
        genus = t * t;
    } else {
        genus = (ipow(q, (i + 1) / 2) - 1) * (ipow(q, (i - 1) / 2) - 1);
    }
    long long n = ipow(q, i - 1) * (q * q - q) + 1;
    return {genus, n};
}

double odd_genus_alt_reading(long long q, long long i) {
    double lq = std::log(static_cast<double>(q));
    double a = std::exp(lq * (static_cast<double>(i) + 1.0) / 2.0) - 1.0;
    double b = std::exp(lq * (static_cast<double>(i) - 2.0) / 2.0) - 1.0;
    return a * b;
}

std::optional<long long> pick_code_multiplier(long long n_i, long long g_i, long long deg_g,
                                              const Rat& delta) {
    if (n_i < 1 || deg_g < 1 || g_i < 0) throw std::invalid_argument("bad code schedule input");
    if (delta <= Rat(0) || delta >= Rat(1)) throw std::invalid_argument("delta outside (0,1)");
    Rat alpha(deg_g, n_i);
    Rat budget = Rat(1) - delta;
    if (alpha >= budget) return std::nullopt;
    long long r = to_ll((budget * Rat(n_i, deg_g)).floor());
    // replay both inequalities of the schedule display
    Rat used = Rat(r) * alpha;
    if (!(budget >= used && used > budget - alpha))
        throw std::logic_error("schedule postcondition violated");
    return r;
}

ClosureRates closure_rates(long long g0, long long t, long long r, const Rat& epsilon) {
    if (g0 < 0 || t < 1 || r < 1) throw std::invalid_argument("bad closure-rate input");
    if (epsilon != Rat(1) && epsilon != Rat(1, 2))
        throw std::invalid_argument("epsilon must be 1/2 (tame) or 1 (wild)");
    Rat c = Rat(g0 - 1) + epsilon * Rat(t);
    if (!(Rat(0) < c && c < Rat(r)))
        throw std::invalid_argument("inadmissible: need 0 < g0 - 1 + eps*t < r");
    return {Rat(1) - c / Rat(r), Rat(r) / c};
}

Rat closure_genus_bound(long long g0, const Rat& epsilon, long long t) {
    return Rat(g0 - 1) + epsilon * Rat(t);
}

Rat divisor_degree_bound(long long ext_degree, long long mu, long long i) {
    if (mu <= 1 || i < 0) throw std::invalid_argument("bad divisor-degree input");
    return Rat(ext_degree) / Rat(ipow(mu, i));
}

RiInterval ri_interval(const Rat& delta, long long mu, long long r, long long i, long long n_i,
                       long long deg_g) {
    if (mu <= 1 || r < 1 || i < 0 || n_i < 1 || deg_g < 1)
        throw std::invalid_argument("bad r_i interval input");
    if (delta <= Rat(0) || delta >= Rat(1)) throw std::invalid_argument("delta outside (0,1)");
    long long mui = ipow(mu, i);
    Rat ratio(n_i, deg_g);
    Rat lo_rat = (Rat(1) - delta - Rat(1) / (Rat(mui) * Rat(r))) * ratio;
    Rat hi_rat = (Rat(1) - delta) * ratio;
    // the multiplier is a positive integer, so an exhausted budget empties the interval
    RiInterval iv{std::max(to_ll(lo_rat.ceil()), 1LL), to_ll(hi_rat.floor())};
    // in the regime deg_g <= n/(mu^i r) the lower endpoint dominates
    // (1-delta) r mu^i - 1
    if (Rat(deg_g) * Rat(mui) * Rat(r) <= Rat(n_i) && !iv.empty()) {
        Rat floor_bound = (Rat(1) - delta) * Rat(r) * Rat(mui) - Rat(1);
        if (Rat(iv.lo) < floor_bound) throw std::logic_error("r_i lower bound violated");
    }
    return iv;
}

long long closure_degree_wild(long long q, long long i) {
    if (q <= 2) throw std::invalid_argument("wild tower requires q > 2");
    if (i < 1) throw std::invalid_argument("level index must be >= 1");
    bool even_q = q % 2 == 0;
    long long exponent = (i <= 2) ? 2 * i - 1 : 3 * i - 3;
    if (even_q) exponent -= i / 2;
    return ipow(q, exponent);
}

long long closure_degree_tame(long long i) {
    if (i < 1) throw std::invalid_argument("level index must be >= 1");
    long long exponent = (i <= 3) ? i : (i <= 5 ? 2 * i - 3 : 3 * i - 8);
    return ipow(2, exponent);
}

namespace {

ParamRow param_row(long long base, long long i, const Rat& delta, bool wild) {
    long long r = wild ? base * base - base : 2 * (base - 1);
    long long mu = wild ? base : 2;
    long long m = wild ? closure_degree_wild(base, i) : closure_degree_tame(i);
    if (m > (1LL << 62) / r) throw std::overflow_error("table length overflow");
    long long n = r * m;

    ParamRow row{};
    row.i = i;
    row.m_i = m;
    row.n_i = n;
    row.d_lower = delta * Rat(n);
    // c = q + q^-i (wild) or 2 + 2^-i (tame)
    Rat c = Rat(mu) + Rat(1, ipow(mu, i));
    row.k_lower = ((Rat(1) - delta) * Rat(r) - c) * Rat(m);
    row.k_nontrivial = delta < Rat(1) - c / Rat(r);
    row.bounds_valid = wild ? true : (ipow(2, i) >= base);

    // one-point divisor at its degree bound m/mu^i, so n/degG = r mu^i
    long long mui = ipow(mu, i);
    Rat x = (Rat(1) - delta) * Rat(r) * Rat(mui);
    row.r_hi = to_ll(x.floor());
    row.r_lo = to_ll((x - Rat(1)).ceil());
    return row;
}

}  // namespace

ParamRow wild_param_row(long long q, long long i, const Rat& delta) {
    if (q <= 2 || !as_prime_power(q)) throw std::invalid_argument("wild table requires a prime power q > 2");
    Rat hi = Rat(1) - Rat(1, q * q);
    if (delta <= Rat(0) || delta >= hi)
        throw std::invalid_argument("delta outside (0, 1 - q^-2)");
    return param_row(q, i, delta, true);
}

ParamRow tame_param_row(long long p, long long i, const Rat& delta) {
    if (p < 13 || !is_prime(p)) throw std::invalid_argument("tame table requires a prime p >= 13");
    Rat hi = Rat(1) - Rat(1, p * p);
    if (delta <= Rat(0) || delta >= hi)
        throw std::invalid_argument("delta outside (0, 1 - p^-2)");
    return param_row(p, i, delta, false);
}

}  // namespace agc
