// Exact finite field arithmetic F_{p^s}, univariate polynomials over such
// fields, and integer-level Legendre/Jacobi symbols. Everything here is
// immutable after construction and safe to share across threads.
#ifndef AGC_FF_HPP
#define AGC_FF_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agc {

// ---- integer number theory ----

// deterministic Miller-Rabin, valid for the full 64-bit range
bool is_prime(long long n);
long long pow_mod(long long base, long long exp, long long mod);
long long mul_mod(long long a, long long b, long long mod);

struct PrimePower {
    long long p;
    int k;
};
// q = p^k with p prime, k >= 1; nullopt when q is not a prime power
std::optional<PrimePower> as_prime_power(long long q);

// Legendre symbol via the quadratic-reciprocity recursion; throws unless p is
// an odd prime. legendre_euler is the independent a^((p-1)/2) route.
int legendre(long long a, long long p);
int legendre_euler(long long a, long long p);
// Jacobi symbol, n odd >= 1 (jacobi(a,1) == 1 for all a)
int jacobi(long long a, long long n);

// ---- finite fields ----

class FqField;
class FqElem;
class Poly;
using FieldPtr = std::shared_ptr<const FqField>;

class FqElem {
  public:
    const FieldPtr& field() const { return field_; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long index() const;  // sum c_i p^i, the integer representation
    bool is_zero() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inverse() const;
    FqElem pow(long long e) const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }
    bool operator<(const FqElem& o) const;  // by index, same field only

    std::string str() const;  // e.g. "0", "3", "1 + 4*a", parseable back

  private:
    friend class FqField;
    FqElem(FieldPtr f, std::vector<long long> c) : field_(std::move(f)), c_(std::move(c)) {}
    FieldPtr field_;
    std::vector<long long> c_;
};

// Dense univariate polynomial over an FqField, low coefficient first,
// trailing zeros stripped. degree() returns -1 for the zero polynomial
// (standing in for degree -infinity).
class Poly {
  public:
    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FqElem> coeffs);

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly one(const FieldPtr& f);
    // coefficient list given as element indexes, low degree first
    static Poly from_indexes(const FieldPtr& f, const std::vector<long long>& idx);

    const FieldPtr& field() const { return field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    FqElem coeff(int i) const;  // zero beyond degree

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly derivative() const;
    Poly monic() const;
    FqElem eval(const FqElem& x) const;

    static Poly gcd(Poly a, Poly b);  // monic gcd

    std::string str(std::string_view var = "t") const;

  private:
    void strip();
    FieldPtr field_;
    std::vector<FqElem> c_;
};

class FqField : public std::enable_shared_from_this<FqField> {
  public:
    // Without an explicit modulus the lexicographically smallest monic
    // irreducible of degree s is chosen (coefficients compared low-to-high),
    // so construction is reproducible.
    static FieldPtr make(long long p, int s);
    static FieldPtr make(long long p, int s, const std::vector<long long>& modulus,
                         std::string generator_name = "a");
    // "25", "5^2" or "5^2:2,4,1" (modulus coefficients low degree first)
    static FieldPtr parse_spec(std::string_view spec);

    long long p() const { return p_; }
    int s() const { return s_; }
    long long q() const { return q_; }
    // size s+1 and monic for s > 1; empty for prime fields
    const std::vector<long long>& modulus() const { return mod_; }
    const std::string& generator_name() const { return gen_; }
    std::string spec_string() const;

    bool same_as(const FqField& o) const;

    FqElem zero() const;
    FqElem one() const;
    FqElem from_index(long long idx) const;
    FqElem from_coeffs(std::vector<long long> c) const;  // reduced mod p, padded to s
    // integer index, or an expression in the generator: "3*a+4", "a^2+1"
    FqElem parse_elem(std::string_view text) const;

  private:
    FqField(long long p, int s, std::vector<long long> mod, std::string gen);
    friend class FqElem;
    friend class Poly;

    std::vector<long long> raw_add(const std::vector<long long>&, const std::vector<long long>&) const;
    std::vector<long long> raw_sub(const std::vector<long long>&, const std::vector<long long>&) const;
    std::vector<long long> raw_mul(const std::vector<long long>&, const std::vector<long long>&) const;
    std::vector<long long> raw_pow(std::vector<long long>, long long e) const;

    long long p_;
    int s_;
    long long q_;
    std::vector<long long> mod_;  // monic, length s+1 (empty when s == 1)
    std::string gen_;
};

// ---- spec'd free operations on polynomials/elements ----

Poly poly_from_roots(const std::vector<FqElem>& roots, const FqElem& leading);
FqElem poly_eval(const Poly& h, const FqElem& x);
// gcd(h, h') is constant
bool is_separable(const Poly& h);
// multiset of roots when h factors into deg(h) linear factors, else nullopt;
// exhaustive evaluation, so the field must be enumerable (q <= 2^16)
std::optional<std::vector<FqElem>> splits_completely(const Poly& h);
// x nonzero; true iff x is an n-th power, decided by x^((q-1)/gcd(n,q-1)) == 1
bool is_nth_power(const FqElem& x, int n);

// exhaustive-enumeration cap shared by splits_completely, residue sets and
// point counting
inline constexpr long long kEnumLimit = 1LL << 16;

}  // namespace agc

#endif
