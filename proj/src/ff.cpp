#include "agc/ff.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace agc {

// ---------------------------------------------------------------- integers

long long mul_mod(long long a, long long b, long long mod) {
    return static_cast<long long>(static_cast<__int128>(a) * b % mod);
}

long long pow_mod(long long base, long long exp, long long mod) {
    if (mod <= 0) throw std::domain_error("pow_mod: modulus must be positive");
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0) return n == q;
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is deterministic for all 64-bit integers
    for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        long long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(long long q) {
    if (q < 2) return std::nullopt;
    // extract the smallest prime factor, then check q is a pure power of it
    long long p = q;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    long long m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return PrimePower{p, k};
}

int jacobi(long long a, long long n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int legendre(long long a, long long p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    return jacobi(a, p);
}

int legendre_euler(long long a, long long p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    long long r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

// ------------------------------------------------------- helpers over F_p[t]

namespace {

using FpPoly = std::vector<long long>;  // low first, trailing zeros stripped

void fp_strip(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of num / den (den nonzero), all coefficients mod p
FpPoly fp_mod(FpPoly num, const FpPoly& den, long long p) {
    int dd = static_cast<int>(den.size()) - 1;
    long long inv_lead = pow_mod(den.back(), p - 2, p);
    fp_strip(num);
    while (static_cast<int>(num.size()) - 1 >= dd) {
        long long c = mul_mod(num.back(), inv_lead, p);
        int off = static_cast<int>(num.size()) - 1 - dd;
        for (int i = 0; i <= dd; ++i) {
            num[off + i] = ((num[off + i] - c * den[i]) % p + p) % p;
        }
        fp_strip(num);
    }
    return num;
}

bool fp_divides(const FpPoly& den, const FpPoly& num, long long p) {
    return fp_mod(num, den, p).empty();
}

// trial division by every monic polynomial of degree 1..s/2
bool fp_irreducible(const FpPoly& f, long long p) {
    int s = static_cast<int>(f.size()) - 1;
    if (s <= 0) return false;
    if (s == 1) return true;
    for (int d = 1; d <= s / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            if (count > (1LL << 22)) throw std::domain_error("irreducibility test too large");
        }
        for (long long idx = 0; idx < count; ++idx) {
            FpPoly cand(d + 1);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            cand[d] = 1;
            if (fp_divides(cand, f, p)) return false;
        }
    }
    return true;
}

// smallest monic irreducible of degree s, coefficients compared low-to-high
FpPoly fp_smallest_irreducible(long long p, int s) {
    std::vector<long long> lower(s, 0);
    while (true) {
        FpPoly cand(lower);
        cand.push_back(1);
        if (fp_irreducible(cand, p)) return cand;
        // advance (c_0,...,c_{s-1}) in lexicographic order, c_0 most significant
        int i = s - 1;
        while (i >= 0 && lower[i] == p - 1) lower[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++lower[i];
    }
}

long long checked_pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / base) throw std::overflow_error("p^s exceeds the exact integer range");
        r *= base;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------- FqField

FqField::FqField(long long p, int s, std::vector<long long> mod, std::string gen)
    : p_(p), s_(s), q_(checked_pow_ll(p, s)), mod_(std::move(mod)), gen_(std::move(gen)) {}

FieldPtr FqField::make(long long p, int s) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (s == 1) return FieldPtr(new FqField(p, 1, {}, "a"));
    checked_pow_ll(p, s);
    return FieldPtr(new FqField(p, s, fp_smallest_irreducible(p, s), "a"));
}

FieldPtr FqField::make(long long p, int s, const std::vector<long long>& modulus,
                       std::string generator_name) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (s == 1) {
        if (!modulus.empty()) throw std::invalid_argument("prime fields take no modulus");
        return FieldPtr(new FqField(p, 1, {}, std::move(generator_name)));
    }
    if (static_cast<int>(modulus.size()) != s + 1)
        throw std::invalid_argument("modulus must have degree s");
    FpPoly m(modulus);
    for (auto& c : m) c = ((c % p) + p) % p;
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!fp_irreducible(m, p)) throw std::invalid_argument("modulus is reducible over F_p");
    return FieldPtr(new FqField(p, s, std::move(m), std::move(generator_name)));
}

FieldPtr FqField::parse_spec(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon == std::string_view::npos ? spec.size() : colon);
    long long p = 0;
    int s = 1;
    auto caret = head.find('^');
    auto to_ll = [](std::string_view t) -> long long {
        long long v = 0;
        if (t.empty()) throw std::invalid_argument("bad field spec");
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("bad field spec");
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    if (caret != std::string_view::npos) {
        p = to_ll(head.substr(0, caret));
        s = static_cast<int>(to_ll(head.substr(caret + 1)));
    } else {
        // plain cardinality: factor q = p^s
        long long q = to_ll(head);
        auto pp = as_prime_power(q);
        if (!pp) throw std::invalid_argument("field cardinality is not a prime power");
        p = pp->p;
        s = pp->k;
    }
    if (colon == std::string_view::npos) return make(p, s);
    std::vector<long long> mod;
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        mod.push_back(to_ll(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return make(p, s, mod);
}

std::string FqField::spec_string() const {
    std::string out = std::to_string(p_);
    if (s_ > 1) {
        out += "^" + std::to_string(s_) + ":";
        for (int i = 0; i <= s_; ++i) {
            if (i) out += ",";
            out += std::to_string(mod_[i]);
        }
    }
    return out;
}

bool FqField::same_as(const FqField& o) const {
    return p_ == o.p_ && s_ == o.s_ && mod_ == o.mod_;
}

FqElem FqField::zero() const {
    return FqElem(shared_from_this(), std::vector<long long>(s_, 0));
}

FqElem FqField::one() const {
    std::vector<long long> c(s_, 0);
    c[0] = 1;
    return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_index(long long idx) const {
    if (idx < 0 || idx >= q_) throw std::out_of_range("element index out of range");
    std::vector<long long> c(s_);
    for (int i = 0; i < s_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_coeffs(std::vector<long long> c) const {
    if (static_cast<int>(c.size()) > s_) throw std::invalid_argument("too many coefficients");
    c.resize(s_, 0);
    for (auto& x : c) x = ((x % p_) + p_) % p_;
    return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::parse_elem(std::string_view text) const {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty element literal");
    bool pure_int = std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
    if (pure_int) {
        long long v = 0;
        for (char ch : t) {
            v = v * 10 + (ch - '0');
            if (v > q_) throw std::out_of_range("element index out of range");
        }
        return from_index(v);
    }
    // sum of terms: c, c*a^k, a^k (with optional sign)
    std::vector<long long> coeffs(s_, 0);
    size_t pos = 0;
    while (pos < t.size()) {
        long long sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            sign = t[pos] == '-' ? -1 : 1;
            ++pos;
        }
        long long coef = 1;
        bool saw_digits = false;
        long long v = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            v = v * 10 + (t[pos] - '0');
            saw_digits = true;
            ++pos;
        }
        if (saw_digits) coef = v;
        if (pos < t.size() && t[pos] == '*') ++pos;
        long long power = 0;
        if (pos < t.size() && t.compare(pos, gen_.size(), gen_) == 0) {
            pos += gen_.size();
            power = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                long long e = 0;
                bool any = false;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
                    e = e * 10 + (t[pos] - '0');
                    any = true;
                    ++pos;
                }
                if (!any) throw std::invalid_argument("bad exponent in element literal");
                power = e;
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("unparseable element literal: " + std::string(text));
        }
        if (power >= s_) throw std::invalid_argument("generator power exceeds field degree");
        coeffs[power] = ((coeffs[power] + sign * coef) % p_ + p_) % p_;
    }
    return FqElem(shared_from_this(), std::move(coeffs));
}

std::vector<long long> FqField::raw_add(const std::vector<long long>& a,
                                        const std::vector<long long>& b) const {
    std::vector<long long> r(s_);
    for (int i = 0; i < s_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

std::vector<long long> FqField::raw_sub(const std::vector<long long>& a,
                                        const std::vector<long long>& b) const {
    std::vector<long long> r(s_);
    for (int i = 0; i < s_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
    return r;
}

std::vector<long long> FqField::raw_mul(const std::vector<long long>& a,
                                        const std::vector<long long>& b) const {
    if (s_ == 1) return {mul_mod(a[0], b[0], p_)};
    std::vector<long long> prod(2 * s_ - 1, 0);
    for (int i = 0; i < s_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < s_; ++j) {
            prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p_)) % p_;
        }
    }
    // reduce by the monic modulus
    for (int d = 2 * s_ - 2; d >= s_; --d) {
        long long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < s_; ++i) {
            prod[d - s_ + i] = ((prod[d - s_ + i] - mul_mod(c, mod_[i], p_)) % p_ + p_) % p_;
        }
    }
    prod.resize(s_);
    return prod;
}

std::vector<long long> FqField::raw_pow(std::vector<long long> base, long long e) const {
    std::vector<long long> r(s_, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = raw_mul(r, base);
        base = raw_mul(base, base);
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------- FqElem

namespace {
void check_same_field(const FqElem& a, const FqElem& b) {
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same_as(*b.field()))
        throw std::invalid_argument("operation between elements of distinct fields");
}
}  // namespace

long long FqElem::index() const {
    long long v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * field_->p() + *it;
    return v;
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_same_field(*this, o);
    return FqElem(field_, field_->raw_add(c_, o.c_));
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_same_field(*this, o);
    return FqElem(field_, field_->raw_sub(c_, o.c_));
}

FqElem FqElem::operator*(const FqElem& o) const {
    check_same_field(*this, o);
    return FqElem(field_, field_->raw_mul(c_, o.c_));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::operator-() const {
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (field_->p() - c_[i]) % field_->p();
    return FqElem(field_, std::move(r));
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return pow(field_->q() - 2);
}

FqElem FqElem::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return FqElem(field_, field_->raw_pow(c_, e));
}

bool FqElem::operator==(const FqElem& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

bool FqElem::operator<(const FqElem& o) const {
    check_same_field(*this, o);
    return index() < o.index();
}

std::string FqElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += field_->generator_name();
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ------------------------------------------------------------------ Poly

Poly::Poly(FieldPtr f, std::vector<FqElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& e : c_) {
        if (!e.field()->same_as(*field_))
            throw std::invalid_argument("polynomial coefficient from a different field");
    }
    strip();
}

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(const FieldPtr& f) { return Poly(f, {f->one()}); }

Poly Poly::from_indexes(const FieldPtr& f, const std::vector<long long>& idx) {
    std::vector<FqElem> c;
    c.reserve(idx.size());
    for (long long i : idx) c.push_back(f->from_index(i));
    return Poly(f, std::move(c));
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

FqElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("polynomial field mismatch");
    std::vector<FqElem> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("polynomial field mismatch");
    std::vector<FqElem> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FqElem> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    return field_->same_as(*o.field_) && c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (!field_->same_as(*d.field_)) throw std::invalid_argument("polynomial field mismatch");
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    std::vector<FqElem> quo(std::max<int>(degree() - d.degree() + 1, 0), field_->zero());
    FqElem inv_lead = d.c_.back().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        FqElem f = rem.c_.back() * inv_lead;
        quo[shift] = f;
        for (int i = 0; i <= d.degree(); ++i) {
            rem.c_[shift + i] = rem.c_[shift + i] - f * d.c_[i];
        }
        rem.strip();
    }
    return {Poly(field_, std::move(quo)), rem};
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(field_);
    std::vector<FqElem> r;
    r.reserve(c_.size() - 1);
    for (int i = 1; i <= degree(); ++i) {
        r.push_back(c_[i] * field_->from_coeffs({i % field_->p()}));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    FqElem inv = c_.back().inverse();
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(e * inv);
    return Poly(field_, std::move(r));
}

FqElem Poly::eval(const FqElem& x) const {
    FqElem acc = field_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c_[i].str();
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
            continue;
        }
        if (cs != "1") out += (needs_parens ? "(" + cs + ")" : cs) + "*";
        out += std::string(var);
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// ------------------------------------------------------- free operations

Poly poly_from_roots(const std::vector<FqElem>& roots, const FqElem& leading) {
    const FieldPtr& f = leading.field();
    Poly acc(f, {leading});
    for (const auto& r : roots) {
        check_same_field(r, leading);
        acc = acc * Poly(f, {-r, f->one()});
    }
    return acc;
}

FqElem poly_eval(const Poly& h, const FqElem& x) { return h.eval(x); }

bool is_separable(const Poly& h) {
    if (h.is_zero()) return false;
    if (h.degree() == 0) return true;
    Poly d = h.derivative();
    if (d.is_zero()) return false;  // e.g. t^p - c in characteristic p
    return Poly::gcd(h, d).degree() == 0;
}

std::optional<std::vector<FqElem>> splits_completely(const Poly& h) {
    if (h.is_zero()) return std::nullopt;
    const FieldPtr& f = h.field();
    if (f->q() > kEnumLimit) throw std::domain_error("field too large for exhaustive root finding");
    std::vector<FqElem> roots;
    Poly cur = h;
    for (long long i = 0; i < f->q() && cur.degree() > 0; ++i) {
        FqElem x = f->from_index(i);
        Poly lin(f, {-x, f->one()});
        while (cur.degree() > 0 && cur.eval(x).is_zero()) {
            roots.push_back(x);
            cur = cur.divmod(lin).first;
        }
    }
    if (cur.degree() != 0) return std::nullopt;
    return roots;
}

bool is_nth_power(const FqElem& x, int n) {
    if (x.is_zero()) throw std::domain_error("is_nth_power: x must be nonzero");
    if (n < 1) throw std::domain_error("is_nth_power: n must be >= 1");
    long long q = x.field()->q();
    long long d = std::gcd(static_cast<long long>(n), q - 1);
    if (d == 1) return true;
    return x.pow((q - 1) / d) == x.field()->one();
}

}  // namespace agc
