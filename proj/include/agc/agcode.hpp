// Superelliptic covers y^n = h(x), their rational points and Kummer-split
// places, one-point Riemann-Roch bases, evaluation codes with block
// structure, brute-force distance, and computational block-transitivity
// certificates.
#ifndef AGC_AGCODE_HPP
#define AGC_AGCODE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agc/ff.hpp"

namespace agc {

// y^n = h(x) with n | q-1 and gcd(n, p) = 1; n = 1 encodes the rational
// function field (genus 0). Genus comes from the closed forms
//   n=2: (m-d)/2 with d = gcd(2,m),   n=3: (m-1) - (d-1)/2 with d = gcd(3,m).
struct SuperCurve {
    FieldPtr field;
    int n;
    Poly h;
    FqElem zeta;  // primitive n-th root of unity, smallest by index
    long long m;
    long long genus;
};
SuperCurve make_curve(const FieldPtr& field, int n, const Poly& h);

struct PointSet {
    // ascending by x index, then y index
    std::vector<std::pair<FqElem, FqElem>> affine;
    int infinite_count;      // gcd(n, m) rational places at infinity
    int infinite_ram_index;  // n / gcd(n, m)
    long long total_rational() const {
        return static_cast<long long>(affine.size()) + infinite_count;
    }
};
// exhaustive enumeration; asserts the Hasse-Weil window
PointSet rational_points(const SuperCurve& curve);

// places that split completely: beta with h(beta) a nonzero n-th power, each
// carrying its n points ordered along the zeta-orbit (y0, zeta y0, ...) from
// the smallest y
struct SplitPoint {
    FqElem beta;
    std::vector<FqElem> ys;
};
std::vector<SplitPoint> split_points(const SuperCurve& curve);

// x^i y^j with n*i + m*j <= r, 0 <= j < n; requires gcd(n, m) = 1 so the
// infinite place is unique and totally ramified
struct Monomial {
    long long x_exp;
    int y_exp;
};
std::vector<Monomial> rr_basis(const SuperCurve& curve, long long r);

struct LinearCode {
    FieldPtr field;
    long long n_len = 0;
    long long k_dim = 0;
    // reduced row echelon form, k_dim rows of length n_len
    std::vector<std::vector<FqElem>> gen;
    std::vector<long long> blocks;  // sizes partitioning n_len; empty = no structure
    struct Provenance {
        long long deg_g;
        long long genus;
        std::vector<FqElem> betas;
    };
    std::optional<Provenance> provenance;
};

// C_L(D, r P_inf) evaluated at the points over the chosen split betas; the
// generator matrix is row-reduced to full rank and the in-block point order
// is the zeta orbit, which pins the block action to a rotation
LinearCode eval_code(const SuperCurve& curve, const std::vector<FqElem>& betas, long long r);

// exact minimum Hamming weight; nullopt when q^k - 1 exceeds the enumeration
// budget (callers then keep the designed-distance certificate only)
std::optional<long long> min_distance_bruteforce(const LinearCode& code,
                                                 long long max_enumerations = 1LL << 24);

// one permutation per block, acting within that block
struct BlockPermutation {
    std::vector<std::vector<long long>> per_block;
};
BlockPermutation identity_perm(const LinearCode& code);
// simultaneous within-block rotation by one, the action induced by y -> zeta*y
BlockPermutation zeta_rotation(const LinearCode& code);

// membership test: permuting every generator row stays inside the row space,
// i.e. pi * C is contained in C
bool apply_block_perm(const LinearCode& code, const BlockPermutation& perm);

struct BlockTransCertificate {
    long long r_blocks;
    std::vector<BlockPermutation> generators;  // verified members
    bool transitive_per_block;
};
BlockTransCertificate certify_block_transitive(const LinearCode& code);

// block-diagonal sum; blocks concatenate (an unstructured summand counts as
// one block)
LinearCode direct_sum(const std::vector<LinearCode>& codes);

}  // namespace agc

#endif
