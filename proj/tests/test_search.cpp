#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "agc/search.hpp"

using namespace agc;

namespace {

std::vector<long long> indexes(const std::vector<FqElem>& v) {
    std::vector<long long> out;
    for (const auto& e : v) out.push_back(e.index());
    return out;
}

}  // namespace

TEST_CASE("eps_divides") {
    CHECK(eps_divides(2, 9) == 0);
    CHECK(eps_divides(3, 21) == 1);
    CHECK(eps_divides(5, 0) == 1);
    CHECK_THROWS_AS(eps_divides(0, 3), std::domain_error);
}

TEST_CASE("residue sets reproduce the worked examples") {
    auto f25 = FqField::make(5, 2, {2, 4, 1});
    auto roots = std::vector<long long>{2, 5, 8, 10, 11, 12, 16, 21, 23};
    std::vector<FqElem> relems;
    for (long long i : roots) relems.push_back(f25->from_index(i));
    Poly h = poly_from_roots(relems, f25->one());
    auto S = residue_set(h, 2);
    CHECK(indexes(S) == std::vector<long long>{1, 3, 6, 19});  // {1, 3, a+1, 3a+4}

    // constant polynomial: 1 is a square everywhere, so S is the whole field
    Poly one = Poly::one(f25);
    CHECK(residue_set(one, 2).size() == 25);

    CHECK_THROWS_AS(residue_set(Poly::zero(f25), 2), std::invalid_argument);

    // membership only depends on the element, not on enumeration order:
    // recompute the set walking the field backwards
    std::vector<long long> backwards;
    for (long long i = f25->q() - 1; i >= 0; --i) {
        FqElem beta = f25->from_index(i);
        FqElem v = h.eval(beta);
        if (!v.is_zero() && is_nth_power(v, 2)) backwards.push_back(i);
    }
    std::sort(backwards.begin(), backwards.end());
    CHECK(backwards == indexes(S));
}

TEST_CASE("feasibility conditions, exact at the boundaries") {
    CHECK(feasible_square(9, 2));
    CHECK(!feasible_square(9, 1));
    CHECK(!feasible_square(9, 3));  // 2 sqrt(6) > 4
    CHECK(!feasible_square(8, 2));
    CHECK(feasible_cube(21, 7));
    CHECK(feasible_cube(21, 8));
    CHECK(!feasible_cube(21, 6));
    CHECK(!feasible_cube(21, 9));
    CHECK(feasible_cube(13, 4));

    // agree with a floating-point reading away from exact boundary ties
    for (long long m = 1; m <= 60; ++m) {
        for (long long u = 1; u <= 20; ++u) {
            long long a2 = m - (u + 2 + (m % 2 == 0 ? 1 : 0));
            double lhs = 2.0 * std::sqrt(2.0 * u);
            if (a2 >= 0 && std::abs(lhs - a2) > 1e-9) {
                bool fl = lhs <= a2 && a2 < 3 * u;
                CHECK(feasible_square(m, u) == fl);
            }
            long long a3 = m - (u + 2 + (m % 3 == 0 ? 1 : 0));
            double lhs3 = 2.0 * std::sqrt(3.0 * u);
            if (a3 >= 0 && std::abs(lhs3 - a3) > 1e-9) {
                bool fl = lhs3 <= a3 && a3 < 2 * u - 0.5;
                CHECK(feasible_cube(m, u) == fl);
            }
        }
    }
}

TEST_CASE("tower rates from feasible pairs") {
    auto sq = hilbert_tower_rates(9, 2, ResidueKind::Square);
    CHECK(sq.lambda_lower == Rat(8, 7));
    CHECK(sq.ell == Rat(1, 8));
    auto cu = hilbert_tower_rates(21, 8, ResidueKind::Cube);
    CHECK(cu.lambda_lower == Rat(48, 37));
    CHECK(cu.ell == Rat(11, 48));
    CHECK(cu.lambda_lower == Rat(1) + Rat(11, 37));
    CHECK_THROWS_AS(hilbert_tower_rates(9, 3, ResidueKind::Square), std::invalid_argument);
}

TEST_CASE("field size thresholds") {
    CHECK(field_size_threshold(2, ResidueKind::Square).q_min == 64);
    CHECK(field_size_threshold(3, ResidueKind::Square).q_min == 100);
    CHECK(field_size_threshold(4, ResidueKind::Square).q_min == 144);
    CHECK(field_size_threshold(12, ResidueKind::Square).q_min == 784);
    CHECK(field_size_threshold(2, ResidueKind::Square).m_default == 9);
    CHECK(field_size_threshold(5, ResidueKind::Cube).q_min == 4 * 14 * 14);   // v=2 mod 3
    CHECK(field_size_threshold(6, ResidueKind::Cube).q_min == 4 * 17 * 17);   // v=0 mod 3
    CHECK(field_size_threshold(7, ResidueKind::Cube).q_min == 4 * 19 * 19);   // v=1 mod 3
    CHECK_THROWS_AS(field_size_threshold(1, ResidueKind::Square), std::invalid_argument);
    CHECK_THROWS_AS(field_size_threshold(4, ResidueKind::Cube), std::invalid_argument);

    // the even-degree choice m = 2(u+2) puts the quadratic margin at exactly 2u
    for (long long u = 2; u <= 20; ++u) {
        CHECK(hasse_weil_margin(2 * u + 4, u, 2 * (u + 2)) == 2 * u);
        CHECK(hasse_weil_margin(2 * u + 4, u, 2 * (u + 2)) >= 0);
    }
}

TEST_CASE("reciprocal polynomials over the small prime fields") {
    struct Case {
        long long p;
        std::vector<long long> roots;
        std::vector<long long> all_roots;
        long long at, val, sqrt;
    };
    const std::vector<Case> cases = {
        {13, {2, 3, 4, 5}, {12, 2, 7, 3, 9, 4, 10, 5, 8}, 11, 3, 4},
        {17, {2, 3, 4, 5}, {16, 2, 9, 3, 6, 4, 13, 5, 7}, 1, 13, 8},
        {19, {2, 3, 4, 6}, {18, 2, 10, 3, 13, 4, 5, 6, 16}, 12, 4, 2},
        {23, {2, 3, 4, 5}, {22, 2, 12, 3, 8, 4, 6, 5, 14}, 7, 3, 7},
    };
    for (const auto& c : cases) {
        auto f = FqField::make(c.p, 1);
        std::vector<FqElem> R;
        for (long long r : c.roots) R.push_back(f->from_index(r));
        Poly h = build_reciprocal_poly(R);
        CHECK(h.degree() == 9);
        CHECK(h.is_monic());
        CHECK(is_separable(h));
        auto split = splits_completely(h);
        REQUIRE(split.has_value());
        CHECK(indexes(*split).size() == 9);
        auto got = indexes(*split);
        auto want = c.all_roots;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(h.eval(f->zero()) == f->one());
        FqElem v = h.eval(f->from_index(c.at));
        CHECK(v.index() == c.val);
        CHECK(f->from_index(c.sqrt) * f->from_index(c.sqrt) == v);
    }
}

TEST_CASE("reciprocal polynomial rejects bad root sets") {
    auto f = FqField::make(13, 1);
    auto mk = [&](std::vector<long long> idx) {
        std::vector<FqElem> v;
        for (long long i : idx) v.push_back(f->from_index(i));
        return v;
    };
    CHECK_THROWS_AS(build_reciprocal_poly(mk({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_reciprocal_poly(mk({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_reciprocal_poly(mk({12, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_reciprocal_poly(mk({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_reciprocal_poly(mk({2, 7})), std::invalid_argument);  // 7 = 2^-1
    // {2,3,4,5} over F_19 collides: 4^-1 = 5
    auto f19 = FqField::make(19, 1);
    std::vector<FqElem> bad;
    for (long long i : {2, 3, 4, 5}) bad.push_back(f19->from_index(i));
    CHECK_THROWS_AS(build_reciprocal_poly(bad), std::invalid_argument);
}

TEST_CASE("closed-form symbol equals direct evaluation for every odd prime 37..2000") {
    for (long long p = 37; p <= 2000; ++p) {
        if (!is_prime(p)) continue;
        for (long long j = 2; j <= 7; ++j) {
            int direct = legendre(reciprocal_poly_eval_mod(p, p - j), p);
            CHECK(reciprocal_poly_symbol(p, j) == direct);
        }
    }
    CHECK_THROWS_AS(reciprocal_poly_symbol(37, 8), std::domain_error);  // j > (p-1)/5
    CHECK_THROWS_AS(reciprocal_poly_symbol(39, 2), std::domain_error);
}

TEST_CASE("progression prime search") {
    auto one = find_progression_primes(220, {1, 9, 11, 19}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].p == 229);  // 221 = 13*17 is composite
    CHECK(one[0].residue == 9);
    CHECK(one[0].certificate.value() == 1);

    // residues outside the canonical claim carry primes but no assertion
    auto r3 = find_progression_primes(220, {3}, 3);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].p == 223);
    for (const auto& pp : r3) {
        CHECK(pp.p % 220 == 3);
        CHECK(is_prime(pp.p));
    }

    // ceiling exhaustion reports fewer primes instead of hanging
    auto capped = find_progression_primes(220, {1, 9, 11, 19}, 100, 3000);
    CHECK(capped.size() < 100);
    for (const auto& pp : capped) CHECK(pp.p <= 3000);
}

TEST_CASE("certificate search is deterministic and replays feasibility") {
    auto f25 = FqField::make(5, 2, {2, 4, 1});
    auto cert = search_certificate(f25, 1, 9, ResidueKind::Square);
    REQUIRE(cert.has_value());
    CHECK(cert->m == 9);
    CHECK(cert->uv == 2);
    // first-hit root set is the first nine field elements
    auto split = splits_completely(cert->h);
    REQUIRE(split.has_value());
    auto got = indexes(*split);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(indexes(cert->witness) == std::vector<long long>{10, 12});
    CHECK(feasible_square(cert->m, cert->uv));
    CHECK(cert->lambda_lower == Rat(8, 7));
    for (const auto& w : cert->witness) {
        CHECK(!cert->h.eval(w).is_zero());
        CHECK(is_nth_power(cert->h.eval(w), 2));
    }
    // a second run returns the identical certificate
    auto again = search_certificate(f25, 1, 9, ResidueKind::Square);
    CHECK(indexes(again->witness) == indexes(cert->witness));
    CHECK(again->h == cert->h);

    // no certificate exists over F_11 for any degree
    auto f11 = FqField::make(11, 1);
    CHECK(!search_certificate(f11, 1, 11, ResidueKind::Square).has_value());

    CHECK_THROWS_AS(search_certificate(FqField::make(2, 6), 1, 9, ResidueKind::Square),
                    std::domain_error);
    CHECK_THROWS_AS(search_certificate(f25, 1, 9, ResidueKind::Cube), std::domain_error);
}
