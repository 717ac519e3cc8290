// Asymptotic bound calculus: q-ary entropy, Gilbert-Varshamov and
// Tsfasman-Vladut-Zink curves, Ihara-function bounds, and the prime-field
// restriction bounds. Rational quantities stay rational; only entropy-based
// values are floating point.
#ifndef AGC_BOUNDS_HPP
#define AGC_BOUNDS_HPP

#include <optional>
#include <vector>

#include "agc/rational.hpp"

namespace agc {

enum class BoundKind { GV, TVZ, SerreLower, DVUpper, ZinkCubic, Linear };

// A point of a bound curve: value is the rate lower bound at relative
// distance delta. Linear bounds carry the exact rational alongside.
struct BoundPoint {
    Rat delta;
    BoundKind kind;
    double value;
    std::optional<Rat> exact;
};

// an (ell, delta) guarantee: rate at least ell - delta at relative distance
// at least delta; requires 0 < delta < ell < 1
struct LDeltaBound {
    Rat ell;
    Rat delta;
};
LDeltaBound make_ldelta_bound(const Rat& ell, const Rat& delta);

// q-ary entropy on [0, 1 - 1/q], H_q(0) = 0
double entropy_q(double x, long long q);

// ell of the Gilbert-Varshamov (ell,delta)-bound: delta + 1 - H_q(delta).
// The source display has H_q(delta/2) here; that variant makes the bound
// uniformly stronger than TVZ and contradicts the q >= 49 crossing claim, so
// the classical argument is used. The display variant is kept for the
// discrepancy report.
double gv_ell(double delta, long long q);
double gv_ell_display_variant(double delta, long long q);

struct IharaBounds {
    double serre_lower;                     // (1/96) log2 q
    double dv_upper;                        // sqrt(q) - 1
    std::optional<long long> square_exact;  // q' - 1 when q = q'^2
    std::optional<Rat> zink_cubic;          // 2(q'^2-1)/(q'+2) when q = q'^3
};
IharaBounds ihara_bounds(long long q);

// 1 - 1/(q'-1) for q = q'^2, q' a prime power > 2
Rat tvz_ell(long long q);

struct Interval {
    double lo, hi;
};
// (tvz line) - (gv curve) at delta, i.e. the amount by which TVZ beats GV
double gv_tvz_margin(long long q, double delta);
// maximal delta-intervals where the TVZ line exceeds the GV curve, located on
// a grid and sharpened by bisection; empty result is valid
std::vector<Interval> gv_tvz_crossing(long long q, double grid_step = 1e-4, double tol = 1e-9);

struct RestrictionBound {
    long long k_lower;  // sk - (s-1)n, meaningful only when positive
    long long d_lower;
};
RestrictionBound restrict_code_bound(long long n, long long k, long long d, long long s);

// 1 - 2m/(p^m - 1) - (2m-1) delta
Rat manin_prime_bound(long long p, long long m, const Rat& delta);

// 0 < 1/(2m) - 1/(p^m - 1) < 1
bool restriction_good(long long p, long long m);

// sampled bound curve, sorted by delta; linear_ell is required for
// BoundKind::Linear and ignored otherwise
std::vector<BoundPoint> bound_curve(long long q, const std::vector<BoundKind>& kinds,
                                    const Rat& step, std::optional<Rat> linear_ell = {});

const char* bound_kind_name(BoundKind k);

}  // namespace agc

#endif
