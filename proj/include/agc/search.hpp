// Search machinery for good towers over a fixed field: residue-set
// computation, feasibility conditions on (degree, witness-size) pairs,
// field-size thresholds, the inverse-closed generator polynomials and their
// Legendre-product evaluation, and prime searches along arithmetic
// progressions.
#ifndef AGC_SEARCH_HPP
#define AGC_SEARCH_HPP

#include <optional>
#include <vector>

#include "agc/ff.hpp"
#include "agc/rational.hpp"

namespace agc {

enum class ResidueKind { Square, Cube };

// 1 if n | m else 0
int eps_divides(long long n, long long m);

// S_q^n(h): all beta with h(beta) a nonzero n-th power, ascending by index
std::vector<FqElem> residue_set(const Poly& h, int n);

// 2 sqrt(2u) <= m - (u + 2 + eps_2(m)) < 3u, decided exactly (no floats)
bool feasible_square(long long m, long long u);
// 2 sqrt(3v) <= m - (v + 2 + eps_3(m)) < 2v - 1/2
bool feasible_cube(long long m, long long v);

// limit lower bound and ell of the infinite tamely ramified tower certified by
// a feasible (m, u) pair
struct HilbertRates {
    Rat ell;
    Rat lambda_lower;
};
HilbertRates hilbert_tower_rates(long long m, long long uv, ResidueKind kind);

// minimal field cardinality guaranteeing a witness set of the requested size,
// plus the default polynomial degree 2u+5 used to realize it
struct FieldThreshold {
    long long q_min;
    long long m_default;
};
FieldThreshold field_size_threshold(long long uv, ResidueKind kind);

// x^2 - (m-1)x - (m-2u), the square-case point-count feasibility quadratic
long long hasse_weil_margin(long long m, long long u, long long x);

// h(t) = (t+1) prod (t - a_i)(t - a_i^-1); roots must avoid {0, 1, -1}, be
// pairwise distinct and have their inverses outside R. Monic, separable,
// split, degree 2|R|+1, constant term 1.
Poly build_reciprocal_poly(const std::vector<FqElem>& R);

// closed-form Legendre product for h(p - j) with R = {2, ..., n_roots+1}:
// (1-j/p) prod_k (j+k/p)(k/p)(kj+1/p); must equal the direct evaluation
int reciprocal_poly_symbol(long long p, long long j, int n_roots = 4);
// direct h(t) mod p for the same canonical root set
long long reciprocal_poly_eval_mod(long long p, long long t, int n_roots = 4);

struct ProgressionPrime {
    long long p;
    long long residue;
    // legendre(h(p-2), p) for the canonical R = {2,3,4,5}; attached whenever
    // that h is well defined mod p (cross-checked against the closed form)
    std::optional<int> certificate;
};
// the first `count` primes p = modulus*k + residue with k >= 1, ascending over
// the union of progressions; stops early at the search ceiling
std::vector<ProgressionPrime> find_progression_primes(long long modulus,
                                                      const std::vector<long long>& residues,
                                                      int count,
                                                      long long ceiling = 10'000'000);

struct SearchCertificate {
    FieldPtr field;
    Poly h;  // monic, separable, splits completely
    long long m;
    ResidueKind kind;
    long long uv;                  // witness size u (square) or v (cube)
    std::vector<FqElem> witness;   // subset of the residue set, ascending
    Rat ell;
    Rat lambda_lower;
};

// Deterministic scan: smallest degree first, root sets in lexicographic
// combination order, smallest feasible witness size. Square kind requires odd
// q, cube kind requires q = 2^(2s). Absence is a valid result; a scan that
// exceeds max_candidates throws instead of claiming absence.
std::optional<SearchCertificate> search_certificate(const FieldPtr& field, long long m_lo,
                                                    long long m_hi, ResidueKind kind,
                                                    long long max_candidates = 200'000);

}  // namespace agc

#endif
