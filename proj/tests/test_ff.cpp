#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "agc/ff.hpp"

using namespace agc;

namespace {

// test-only oracle: the set of nonzero n-th powers by exhaustive enumeration
std::set<long long> nth_power_set(const FieldPtr& f, int n) {
    std::set<long long> out;
    for (long long i = 1; i < f->q(); ++i) out.insert(f->from_index(i).pow(n).index());
    return out;
}

// deterministic LCG so the axiom spot-checks are reproducible
struct Lcg {
    unsigned long long state = 0x243F6A8885A308D3ull;
    long long next(long long bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long long>((state >> 17) % static_cast<unsigned long long>(bound));
    }
};

const std::vector<long long> kSmallPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                             43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                             101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                             151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199};

std::vector<FieldPtr> fields_up_to_128() {
    std::vector<FieldPtr> out;
    for (long long q = 2; q <= 128; ++q) {
        auto pp = as_prime_power(q);
        if (pp) out.push_back(FqField::make(pp->p, pp->k));
    }
    return out;
}

}  // namespace

TEST_CASE("primality and prime powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(2147483647));
    CHECK(!is_prime(1));
    CHECK(!is_prime(221));
    CHECK(as_prime_power(49)->p == 7);
    CHECK(as_prime_power(64)->k == 6);
    CHECK(!as_prime_power(12));
    CHECK(!as_prime_power(1));
}

TEST_CASE("legendre examples and error paths") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(0, 13) == 0);
    // 3^2 = 2 mod 7, verified by the exhaustive-squares oracle below
    CHECK(legendre(2, 7) == 1);
    CHECK_THROWS_AS(legendre(3, 15), std::domain_error);
    CHECK_THROWS_AS(legendre(3, 2), std::domain_error);
}

TEST_CASE("legendre agrees with jacobi, euler criterion and brute force") {
    for (long long p : kSmallPrimes) {
        std::set<long long> squares;
        for (long long a = 1; a < p; ++a) squares.insert(a * a % p);
        for (long long a = 0; a < p; ++a) {
            int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
            CHECK(legendre(a, p) == expected);
            CHECK(legendre_euler(a, p) == expected);
            CHECK(jacobi(a, p) == expected);
        }
    }
}

TEST_CASE("jacobi: trivial modulus, multiplicativity, prime powers") {
    for (long long a = -5; a <= 5; ++a) CHECK(jacobi(a, 1) == 1);
    CHECK(jacobi(2, 15) == 1);  // (2/3)(2/5) = (-1)(-1)
    CHECK(jacobi(2, 343) == 1); // odd power of 7 keeps the symbol of (2/7)
    for (long long n = 1; n <= 99; n += 2)
        for (long long a = 0; a <= 50; ++a)
            for (long long b = 0; b <= 20; ++b)
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
}

TEST_CASE("field construction and the deterministic default modulus") {
    auto f13 = FqField::make(13, 1);
    CHECK(f13->q() == 13);
    CHECK(f13->modulus().empty());

    // smallest monic irreducibles with coefficients compared low-to-high,
    // so c_0 is the most significant in the ordering
    auto f25 = FqField::make(5, 2);
    CHECK(f25->modulus() == std::vector<long long>{1, 1, 1});        // t^2+t+1
    auto f64 = FqField::make(2, 6);
    CHECK(f64->modulus() == std::vector<long long>{1, 0, 0, 0, 0, 1, 1});  // t^6+t^5+1
    auto f81 = FqField::make(3, 4);
    CHECK(f81->modulus() == std::vector<long long>{1, 0, 1, 1, 1});  // t^4+t^3+t^2+1

    // explicit moduli from the worked examples
    CHECK_NOTHROW(FqField::make(5, 2, {2, 4, 1}));
    CHECK_NOTHROW(FqField::make(2, 6, {1, 1, 0, 1, 1, 0, 1}));

    CHECK_THROWS_AS(FqField::make(12, 1), std::invalid_argument);
    CHECK_THROWS_AS(FqField::make(5, 2, {4, 0, 1}), std::invalid_argument);  // t^2+4=(t-1)(t+1)... reducible
    CHECK_THROWS_AS(FqField::make(5, 2, {2, 4, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(FqField::make(5, 2, {2, 4, 1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FqField::make(5, 0), std::invalid_argument);
}

TEST_CASE("field spec parsing round trip") {
    auto f = FqField::parse_spec("5^2:2,4,1");
    CHECK(f->q() == 25);
    CHECK(f->modulus() == std::vector<long long>{2, 4, 1});
    CHECK(FqField::parse_spec("25")->q() == 25);
    CHECK(FqField::parse_spec("13")->q() == 13);
    CHECK(FqField::parse_spec(f->spec_string())->same_as(*f));
    CHECK_THROWS_AS(FqField::parse_spec("12"), std::invalid_argument);
}

TEST_CASE("element display and parsing") {
    auto f25 = FqField::make(5, 2, {2, 4, 1});
    CHECK(f25->from_index(19).str() == "4 + 3*a");
    CHECK(f25->parse_elem("3*a+4").index() == 19);
    CHECK(f25->parse_elem("4+3*a").index() == 19);
    CHECK(f25->parse_elem("19").index() == 19);
    CHECK(f25->parse_elem("a").index() == 5);
    CHECK(f25->zero().str() == "0");
    for (long long i = 0; i < 25; ++i)
        CHECK(f25->parse_elem(f25->from_index(i).str()).index() == i);
    auto f64 = FqField::make(2, 6, {1, 1, 0, 1, 1, 0, 1});
    CHECK(f64->parse_elem("a^5+a^4+a^2+a+1").index() == 55);
    CHECK_THROWS_AS(f25->parse_elem("b+1"), std::invalid_argument);
    CHECK_THROWS_AS(f25->parse_elem("a^2"), std::invalid_argument);
}

TEST_CASE("cross-field operations are rejected") {
    auto a = FqField::make(5, 2)->one();
    auto b = FqField::make(5, 2, {2, 4, 1})->one();
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    auto c = FqField::make(7, 1)->one();
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("field axioms spot checks and x^q = x") {
    Lcg rng;
    for (const auto& f : fields_up_to_128()) {
        long long q = f->q();
        for (int t = 0; t < 24; ++t) {
            FqElem x = f->from_index(rng.next(q));
            FqElem y = f->from_index(rng.next(q));
            FqElem z = f->from_index(rng.next(q));
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) CHECK(x * x.inverse() == f->one());
        }
        for (long long i = 0; i < q; ++i) {
            FqElem x = f->from_index(i);
            CHECK(x.pow(q) == x);
        }
    }
}

TEST_CASE("is_nth_power matches the exhaustive oracle on every field up to 128") {
    for (const auto& f : fields_up_to_128()) {
        for (int n : {2, 3}) {
            auto oracle = nth_power_set(f, n);
            for (long long i = 1; i < f->q(); ++i) {
                CHECK(is_nth_power(f->from_index(i), n) == (oracle.count(i) > 0));
            }
        }
    }
    auto f13 = FqField::make(13, 1);
    CHECK_THROWS_AS(is_nth_power(f13->zero(), 2), std::domain_error);
    CHECK(is_nth_power(f13->one(), 2));
    // 2 generates F_13^*, so it cannot be a square
    CHECK(!is_nth_power(f13->from_index(2), 2));
}

TEST_CASE("polynomial arithmetic basics") {
    auto f = FqField::make(13, 1);
    Poly h = Poly::from_indexes(f, {1, 0, 1});  // 1 + t^2
    CHECK(h.degree() == 2);
    CHECK(h.eval(f->from_index(5)).index() == 0);  // 26 = 0 mod 13
    Poly z = Poly::zero(f);
    CHECK(z.degree() == -1);  // the zero polynomial carries degree -infinity
    CHECK((h * z).is_zero());
    CHECK(h + z == h);

    auto [quo, rem] = (h * h).divmod(h);
    CHECK(quo == h);
    CHECK(rem.is_zero());

    Poly t = Poly::from_indexes(f, {0, 1});
    CHECK(Poly::gcd(h * t, t * t) == t);
}

TEST_CASE("poly_from_roots reproduces the reference evaluation over F_13") {
    auto f = FqField::make(13, 1);
    std::vector<FqElem> roots;
    for (long long r : {2, 7, 3, 9, 4, 10, 5, 8, 12}) roots.push_back(f->from_index(r));
    Poly h = poly_from_roots(roots, f->one());
    CHECK(h.degree() == 9);
    CHECK(h.is_monic());
    CHECK(h.eval(f->from_index(11)).index() == 3);
    CHECK(is_nth_power(h.eval(f->from_index(11)), 2));  // 3 = 4^2 mod 13
}

TEST_CASE("separability and complete splitting") {
    auto f7 = FqField::make(7, 1);
    Poly t_minus_1 = Poly::from_indexes(f7, {6, 1});
    CHECK(!is_separable(t_minus_1 * t_minus_1));
    CHECK(is_separable(Poly::from_indexes(f7, {1, 0, 1})));

    // t^2 + 1 has no roots mod 7 because -1 is a non-square
    CHECK(!splits_completely(Poly::from_indexes(f7, {1, 0, 1})).has_value());
    auto roots = splits_completely(t_minus_1 * t_minus_1);
    REQUIRE(roots.has_value());
    CHECK(roots->size() == 2);  // multiset with the double root

    auto f13 = FqField::make(13, 1);
    // t^13 - t splits into every linear factor
    std::vector<long long> coef(14, 0);
    coef[1] = 12;
    coef[13] = 1;
    auto all = splits_completely(Poly::from_indexes(f13, coef));
    REQUIRE(all.has_value());
    CHECK(all->size() == 13);
}
