#include "agc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "agc/ff.hpp"

namespace agc {

LDeltaBound make_ldelta_bound(const Rat& ell, const Rat& delta) {
    if (!(Rat(0) < delta && delta < ell && ell < Rat(1)))
        throw std::invalid_argument("(ell, delta) bound needs 0 < delta < ell < 1");
    return {ell, delta};
}

double entropy_q(double x, long long q) {
    if (q < 2) throw std::domain_error("entropy_q: q must be >= 2");
    double hi = 1.0 - 1.0 / static_cast<double>(q);
    if (x < -1e-15 || x > hi + 1e-15) throw std::domain_error("entropy_q: x outside [0, 1-1/q]");
    if (x <= 0) return 0.0;
    double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1)) / lq - x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

double gv_ell(double delta, long long q) { return delta + 1.0 - entropy_q(delta, q); }

double gv_ell_display_variant(double delta, long long q) {
    return delta + 1.0 - entropy_q(delta / 2.0, q);
}

IharaBounds ihara_bounds(long long q) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::domain_error("ihara_bounds: q must be a prime power");
    IharaBounds b{};
    b.serre_lower = std::log2(static_cast<double>(q)) / 96.0;
    b.dv_upper = std::sqrt(static_cast<double>(q)) - 1.0;
    if (pp->k % 2 == 0) {
        long long qp = 1;
        for (int i = 0; i < pp->k / 2; ++i) qp *= pp->p;
        b.square_exact = qp - 1;
    }
    if (pp->k % 3 == 0) {
        long long qp = 1;
        for (int i = 0; i < pp->k / 3; ++i) qp *= pp->p;
        b.zink_cubic = Rat(2 * (qp * qp - 1), qp + 2);
    }
    return b;
}

Rat tvz_ell(long long q) {
    auto pp = as_prime_power(q);
    if (!pp || pp->k % 2 != 0) throw std::domain_error("tvz_ell: q must be a square prime power");
    long long qp = 1;
    for (int i = 0; i < pp->k / 2; ++i) qp *= pp->p;
    if (qp <= 2) throw std::domain_error("tvz_ell: needs q'^2 with q' > 2 so that A(q) > 1");
    return Rat(1) - Rat(1, qp - 1);
}

double gv_tvz_margin(long long q, double delta) {
    double tvz = tvz_ell(q).to_double();
    return (tvz - delta) - (gv_ell(delta, q) - delta);
}

std::vector<Interval> gv_tvz_crossing(long long q, double grid_step, double tol) {
    double tvz = tvz_ell(q).to_double();
    double hi_dom = 1.0 - 1.0 / static_cast<double>(q);
    auto f = [&](double d) { return (tvz - d) - (gv_ell(d, q) - d); };

    // bisect a sign change of f inside [a,b] down to the requested tolerance
    auto bisect = [&](double a, double b) {
        bool fa_neg = f(a) < 0;
        for (int it = 0; it < 200 && (b - a) > tol * 1e-3; ++it) {
            double m = 0.5 * (a + b);
            if ((f(m) < 0) == fa_neg)
                a = m;
            else
                b = m;
        }
        return 0.5 * (a + b);
    };

    // f < 0 at both domain edges (GV ell tends to 1 at delta -> 0 and the TVZ
    // line is exhausted before 1 - 1/q), so positive stretches open and close
    // at interior sign changes.
    std::vector<Interval> out;
    double prev = grid_step * 0.5;
    bool prev_pos = f(prev) > 0;
    std::optional<double> open;
    if (prev_pos) open = prev;
    for (double d = prev + grid_step; d < hi_dom; d += grid_step) {
        bool pos = f(d) > 0;
        if (pos != prev_pos) {
            double root = bisect(prev, d);
            if (pos) {
                open = root;
            } else if (open) {
                out.push_back({*open, root});
                open.reset();
            }
        }
        prev = d;
        prev_pos = pos;
    }
    if (open) out.push_back({*open, hi_dom});
    return out;
}

RestrictionBound restrict_code_bound(long long n, long long k, long long d, long long s) {
    if (k < 0 || k > n) throw std::invalid_argument("restrict_code_bound: need 0 <= k <= n");
    if (s < 1) throw std::invalid_argument("restrict_code_bound: need s >= 1");
    return {s * k - (s - 1) * n, d};
}

Rat manin_prime_bound(long long p, long long m, const Rat& delta) {
    if (!is_prime(p)) throw std::invalid_argument("manin_prime_bound: p must be prime");
    if (m < 1) throw std::invalid_argument("manin_prime_bound: m must be >= 1");
    if (delta < Rat(0) || delta > Rat(1))
        throw std::invalid_argument("manin_prime_bound: delta outside [0,1]");
    Rat pm = Rat(p).pow(m);
    return Rat(1) - Rat(2 * m) / (pm - Rat(1)) - Rat(2 * m - 1) * delta;
}

bool restriction_good(long long p, long long m) {
    if (!is_prime(p) || m < 1) throw std::invalid_argument("restriction_good: bad arguments");
    Rat v = Rat(1, 2 * m) - Rat(1) / (Rat(p).pow(m) - Rat(1));
    return v > Rat(0) && v < Rat(1);
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::GV: return "gv";
        case BoundKind::TVZ: return "tvz";
        case BoundKind::SerreLower: return "serre";
        case BoundKind::DVUpper: return "dv";
        case BoundKind::ZinkCubic: return "zink";
        case BoundKind::Linear: return "linear";
    }
    return "?";
}

std::vector<BoundPoint> bound_curve(long long q, const std::vector<BoundKind>& kinds,
                                    const Rat& step, std::optional<Rat> linear_ell) {
    if (step <= Rat(0)) throw std::invalid_argument("bound_curve: step must be positive");
    Rat hi = Rat(1) - Rat(1, q);
    std::vector<BoundPoint> out;

    auto linear_value = [](const Rat& ell, const Rat& delta) {
        Rat v = ell - delta;
        return v > Rat(0) ? v : Rat(0);
    };

    for (Rat delta(0); delta <= hi; delta += step) {
        for (BoundKind k : kinds) {
            BoundPoint pt{delta, k, 0.0, std::nullopt};
            switch (k) {
                case BoundKind::GV:
                    pt.value = gv_ell(delta.to_double(), q) - delta.to_double();
                    break;
                case BoundKind::TVZ: {
                    Rat v = linear_value(tvz_ell(q), delta);
                    pt.exact = v;
                    pt.value = v.to_double();
                    break;
                }
                case BoundKind::SerreLower: {
                    double ell = 1.0 - 96.0 / std::log2(static_cast<double>(q));
                    pt.value = std::max(ell - delta.to_double(), 0.0);
                    break;
                }
                case BoundKind::DVUpper: {
                    double a = ihara_bounds(q).dv_upper;
                    double ell = a > 1.0 ? 1.0 - 1.0 / a : 0.0;
                    pt.value = std::max(ell - delta.to_double(), 0.0);
                    break;
                }
                case BoundKind::ZinkCubic: {
                    auto z = ihara_bounds(q).zink_cubic;
                    if (!z) throw std::domain_error("zink bound needs a cube cardinality");
                    if (*z > Rat(1)) {
                        Rat v = linear_value(Rat(1) - Rat(1) / *z, delta);
                        pt.exact = v;
                        pt.value = v.to_double();
                    }
                    break;
                }
                case BoundKind::Linear: {
                    if (!linear_ell) throw std::invalid_argument("linear bound needs an ell");
                    Rat v = linear_value(*linear_ell, delta);
                    pt.exact = v;
                    pt.value = v.to_double();
                    break;
                }
            }
            out.push_back(std::move(pt));
        }
    }
    return out;
}

}  // namespace agc
