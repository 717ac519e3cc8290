#include "agc/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agc {

int eps_divides(long long n, long long m) {
    if (n < 1) throw std::domain_error("eps_divides: n must be >= 1");
    return m % n == 0 ? 1 : 0;
}

std::vector<FqElem> residue_set(const Poly& h, int n) {
    if (h.is_zero()) throw std::invalid_argument("residue_set: h must be nonzero");
    const FieldPtr& f = h.field();
    if (f->q() > kEnumLimit) throw std::domain_error("residue_set: field too large to enumerate");
    std::vector<FqElem> out;
    for (long long i = 0; i < f->q(); ++i) {
        FqElem beta = f->from_index(i);
        FqElem v = h.eval(beta);
        if (!v.is_zero() && is_nth_power(v, n)) out.push_back(std::move(beta));
    }
    return out;
}

bool feasible_square(long long m, long long u) {
    if (m < 1 || u < 1) throw std::invalid_argument("feasible_square: need m, u >= 1");
    long long a = m - (u + 2 + eps_divides(2, m));
    // 2 sqrt(2u) <= a  <=>  a >= 0 and a^2 >= 8u
    return a >= 0 && a * a >= 8 * u && a < 3 * u;
}

bool feasible_cube(long long m, long long v) {
    if (m < 1 || v < 1) throw std::invalid_argument("feasible_cube: need m, v >= 1");
    long long a = m - (v + 2 + eps_divides(3, m));
    // a < 2v - 1/2  <=>  2a <= 4v - 2 over the integers
    return a >= 0 && a * a >= 12 * v && 2 * a <= 4 * v - 2;
}

HilbertRates hilbert_tower_rates(long long m, long long uv, ResidueKind kind) {
    if (kind == ResidueKind::Square) {
        if (!feasible_square(m, uv))
            throw std::invalid_argument("hilbert_tower_rates: (m, u) pair is infeasible");
        long long d = m - 2 - eps_divides(2, m);
        return {Rat(1) - Rat(d, 4 * uv), Rat(4 * uv, d)};
    }
    if (!feasible_cube(m, uv))
        throw std::invalid_argument("hilbert_tower_rates: (m, v) pair is infeasible");
    long long d = 2 * (m - eps_divides(3, m)) - 3;
    return {Rat(1) - Rat(d, 6 * uv), Rat(6 * uv, d)};
}

FieldThreshold field_size_threshold(long long uv, ResidueKind kind) {
    if (kind == ResidueKind::Square) {
        if (uv < 2) throw std::invalid_argument("field_size_threshold: square case needs u >= 2");
        return {4 * (uv + 2) * (uv + 2), 2 * uv + 5};
    }
    if (uv < 5) throw std::invalid_argument("field_size_threshold: cube case needs v >= 5");
    long long base = (uv % 3 == 2) ? 2 * uv + 4 : 2 * uv + 5;
    return {4 * base * base, 2 * uv + 5};
}

long long hasse_weil_margin(long long m, long long u, long long x) {
    return x * x - (m - 1) * x - (m - 2 * u);
}

Poly build_reciprocal_poly(const std::vector<FqElem>& R) {
    if (R.empty()) throw std::invalid_argument("build_reciprocal_poly: empty root set");
    const FieldPtr& f = R.front().field();
    FqElem one = f->one();
    FqElem minus_one = -one;
    std::vector<FqElem> roots{minus_one};
    for (const auto& a : R) {
        if (a.is_zero() || a == one || a == minus_one)
            throw std::invalid_argument("reciprocal root must avoid 0, 1, -1: " + a.str());
        FqElem inv = a.inverse();
        for (const auto& b : R) {
            if (&a != &b && a == b)
                throw std::invalid_argument("repeated reciprocal root: " + a.str());
            if (inv == b)
                throw std::invalid_argument("inverse of root lies in the root set: " + a.str());
        }
        roots.push_back(a);
        roots.push_back(inv);
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw std::invalid_argument("reciprocal roots collide: " + roots[i].str());
    Poly h = poly_from_roots(roots, one);
    if (h.eval(f->zero()) != one) throw std::logic_error("reciprocal polynomial has h(0) != 1");
    return h;
}

namespace {

// canonical root set {2, ..., n_roots+1} must be valid mod p: no root equal to
// 0, +-1 and no inverse falling back into the set
void check_canonical_roots(long long p, int n_roots) {
    if (n_roots < 1) throw std::invalid_argument("need at least one root");
    for (long long k = 2; k <= n_roots + 1; ++k) {
        long long km = k % p;
        if (km == 0 || km == 1 || km == p - 1)
            throw std::invalid_argument("canonical root degenerates mod p");
        for (long long k2 = 2; k2 <= n_roots + 1; ++k2)
            if ((k * k2) % p == 1)
                throw std::invalid_argument("canonical root set is not inverse-free mod p");
    }
}

}  // namespace

int reciprocal_poly_symbol(long long p, long long j, int n_roots) {
    if (p % 2 == 0 || !is_prime(p)) throw std::domain_error("p must be an odd prime");
    if (j < 2 || j > (p - 1) / (n_roots + 1))
        throw std::domain_error("j outside 2..(p-1)/(max root)");
    check_canonical_roots(p, n_roots);
    int v = legendre(1 - j, p);
    for (long long k = 2; k <= n_roots + 1; ++k) {
        v *= legendre(j + k, p) * legendre(k, p) * legendre(k * j + 1, p);
    }
    return v;
}

long long reciprocal_poly_eval_mod(long long p, long long t, int n_roots) {
    if (p % 2 == 0 || !is_prime(p)) throw std::domain_error("p must be an odd prime");
    check_canonical_roots(p, n_roots);
    t = ((t % p) + p) % p;
    long long v = (t + 1) % p;
    for (long long k = 2; k <= n_roots + 1; ++k) {
        long long kinv = pow_mod(k, p - 2, p);
        v = mul_mod(v, ((t - k) % p + p) % p, p);
        v = mul_mod(v, ((t - kinv) % p + p) % p, p);
    }
    return v;
}

std::vector<ProgressionPrime> find_progression_primes(long long modulus,
                                                      const std::vector<long long>& residues,
                                                      int count, long long ceiling) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    if (residues.empty()) throw std::invalid_argument("no residues given");
    std::vector<long long> res;
    for (long long r : residues) res.push_back(((r % modulus) + modulus) % modulus);
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());

    std::vector<ProgressionPrime> out;
    for (long long k = 1; static_cast<int>(out.size()) < count; ++k) {
        if (modulus * k > ceiling) break;  // exhausted the configured search range
        for (long long r : res) {
            long long p = modulus * k + r;
            if (p > ceiling || static_cast<int>(out.size()) >= count) break;
            if (!is_prime(p)) continue;
            ProgressionPrime pp{p, r, std::nullopt};
            if (p >= 37) {
                int direct = legendre(reciprocal_poly_eval_mod(p, p - 2), p);
                int closed = reciprocal_poly_symbol(p, 2);
                if (direct != closed)
                    throw std::logic_error("closed-form symbol disagrees with direct evaluation");
                pp.certificate = direct;
            }
            out.push_back(pp);
        }
    }
    return out;
}

std::optional<SearchCertificate> search_certificate(const FieldPtr& field, long long m_lo,
                                                    long long m_hi, ResidueKind kind,
                                                    long long max_candidates) {
    long long q = field->q();
    if (q > 4096) throw std::domain_error("certificate search ceiling is q <= 4096");
    if (kind == ResidueKind::Square && q % 2 == 0)
        throw std::domain_error("square-kind certificates need odd q");
    if (kind == ResidueKind::Cube && (field->p() != 2 || field->s() % 2 != 0))
        throw std::domain_error("cube-kind certificates need q = 2^(2s)");
    int n = kind == ResidueKind::Square ? 2 : 3;

    m_lo = std::max(m_lo, 1LL);
    m_hi = std::min(m_hi, q);  // a split separable polynomial has at most q roots
    long long budget = max_candidates;

    for (long long m = m_lo; m <= m_hi; ++m) {
        std::vector<long long> feasible_sizes;
        for (long long u = 1; u <= m; ++u) {
            bool ok = kind == ResidueKind::Square ? feasible_square(m, u) : feasible_cube(m, u);
            if (ok) feasible_sizes.push_back(u);
        }
        if (feasible_sizes.empty()) continue;

        // m-subsets of the field in lexicographic combination order
        std::vector<long long> combo(m);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            if (--budget < 0)
                throw std::runtime_error("certificate search budget exhausted (no verdict)");
            std::vector<FqElem> roots;
            roots.reserve(m);
            for (long long idx : combo) roots.push_back(field->from_index(idx));
            Poly h = poly_from_roots(roots, field->one());
            std::vector<FqElem> S = residue_set(h, n);
            for (long long u : feasible_sizes) {
                if (u > static_cast<long long>(S.size())) continue;
                HilbertRates rates = hilbert_tower_rates(m, u, kind);
                SearchCertificate cert{field, h,    m,
                                       kind,  u,    {S.begin(), S.begin() + u},
                                       rates.ell,   rates.lambda_lower};
                return cert;
            }
            // advance the combination
            long long pos = m - 1;
            while (pos >= 0 && combo[pos] == q - m + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (long long t = pos + 1; t < m; ++t) combo[t] = combo[t - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace agc
