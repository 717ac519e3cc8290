// Tower parameter arithmetic: genus/splitting-rate records, the good-sequence
// multiplier schedule, Galois-closure rate bounds, and the explicit wild/tame
// parameter tables. All table arithmetic is exact rational.
#ifndef AGC_TOWERS_HPP
#define AGC_TOWERS_HPP

#include <optional>
#include <string>

#include "agc/rational.hpp"

namespace agc {

// splitting rate nu, tower genus gamma (nullopt encodes +infinity) and the
// limit lambda = nu/gamma, validated against the Drinfeld-Vladut bound for q
struct TowerStats {
    long long q;
    Rat nu;
    std::optional<Rat> gamma;
    Rat lambda;
};
TowerStats make_tower_stats(long long q, const Rat& nu, std::optional<Rat> gamma);

// level data of the optimal wild recursive tower over F_{q^2}:
// genus (q^{i/2}-1)^2 for even i, (q^{(i+1)/2}-1)(q^{(i-1)/2}-1) for odd i,
// and the rational-place lower bound q^{i-1}(q^2-q)+1
struct TowerLevel {
    long long genus;
    long long n_rational_lower;
};
TowerLevel optimal_tower_level(long long q, long long i);
// alternate printed reading of the odd-level genus with exponent (i-2)/2;
// non-integral for odd i, which is why it is reported, not used
double odd_genus_alt_reading(long long q, long long i);

// largest r_i with r_i * deg_g / n <= 1 - delta; nullopt when deg_g/n >= 1-delta
std::optional<long long> pick_code_multiplier(long long n_i, long long g_i, long long deg_g,
                                              const Rat& delta);

// ell = 1 - (g0 - 1 + eps*t)/r and the tower-limit lower bound r/(g0-1+eps*t);
// requires 0 < g0 - 1 + eps*t < r and eps in {1/2, 1}
struct ClosureRates {
    Rat ell;
    Rat lambda_lower;
};
ClosureRates closure_rates(long long g0, long long t, long long r, const Rat& epsilon);

Rat closure_genus_bound(long long g0, const Rat& epsilon, long long t);
// deg G_i <= [F_i : F_0] / mu^i
Rat divisor_degree_bound(long long ext_degree, long long mu, long long i);

// integer interval [ceil((1-d-1/(mu^i r)) n/degG), floor((1-d) n/degG)]
struct RiInterval {
    long long lo, hi;
    bool empty() const { return lo > hi; }
};
RiInterval ri_interval(const Rat& delta, long long mu, long long r, long long i, long long n_i,
                       long long deg_g);

// Galois closure degrees [F'_i : F_0] for the wild tower over F_{q^2} and the
// tame tower over F_{p^2}
long long closure_degree_wild(long long q, long long i);
long long closure_degree_tame(long long i);

struct ParamRow {
    long long i;
    long long m_i;
    long long n_i;
    Rat k_lower;
    Rat d_lower;
    long long r_lo, r_hi;
    bool k_nontrivial;  // delta small enough that the k bound is positive
    bool bounds_valid;  // level index inside the range where the k/d bounds apply
};
// wild: r = q^2 - q blocks over F_{q^2}; requires q > 2, 0 < delta < 1 - q^-2
ParamRow wild_param_row(long long q, long long i, const Rat& delta);
// tame: r = 2(p-1) blocks over F_{p^2}; requires p >= 13 prime, 0 < delta < 1 - p^-2
ParamRow tame_param_row(long long p, long long i, const Rat& delta);

}  // namespace agc

#endif
