#include "agc/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace agc {

namespace {

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
    return r;
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
    return r;
}

}  // namespace

std::string i128_str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 negation would overflow, but values that large never appear here
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

void Rat::init(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

Rat Rat::make128(i128 n, i128 d) {
    Rat r;
    r.init(n, d);
    return r;
}

Rat Rat::operator-() const { return make128(-num_, den_); }

Rat Rat::operator+(const Rat& o) const {
    i128 g = gcd128(den_, o.den_);
    i128 l = checked_mul(den_ / g, o.den_);
    i128 n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
    return make128(n, l);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
    i128 g1 = gcd128(num_, o.den_);
    i128 g2 = gcd128(o.num_, den_);
    return make128(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * make128(o.den_, o.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    i128 lhs = checked_mul(num_, o.den_);
    i128 rhs = checked_mul(o.num_, den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

i128 Rat::floor() const {
    i128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

i128 Rat::ceil() const {
    i128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rat Rat::pow(long long e) const {
    if (e < 0) {
        if (num_ == 0) throw std::domain_error("0 to a negative power");
        return make128(den_, num_).pow(-e);
    }
    Rat r(1);
    Rat b = *this;
    while (e) {
        if (e & 1) r *= b;
        b = (e > 1) ? b * b : b;
        e >>= 1;
    }
    return r;
}

double Rat::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::str() const {
    if (den_ == 1) return i128_str(num_);
    return i128_str(num_) + "/" + i128_str(den_);
}

std::optional<Rat> Rat::parse(std::string_view s) {
    auto parse_int = [](std::string_view t, i128& out) -> bool {
        if (t.empty()) return false;
        bool neg = t.front() == '-';
        if (neg || t.front() == '+') t.remove_prefix(1);
        if (t.empty()) return false;
        i128 v = 0;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
            v = v * 10 + (ch - '0');
            if (v > (i128(1) << 100)) return false;
        }
        out = neg ? -v : v;
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        i128 n, d;
        if (!parse_int(s.substr(0, slash), n) || !parse_int(s.substr(slash + 1), d) || d == 0)
            return std::nullopt;
        return make128(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        i128 whole, frac;
        std::string_view fs = s.substr(dot + 1);
        if (fs.empty() || fs.size() > 18) return std::nullopt;
        if (!parse_int(s.substr(0, dot), whole) || !parse_int(fs, frac) || frac < 0)
            return std::nullopt;
        i128 scale = 1;
        for (size_t i = 0; i < fs.size(); ++i) scale *= 10;
        bool neg = !s.empty() && s.front() == '-';
        i128 n = (neg ? -1 : 1) * ((neg ? -whole : whole) * scale + frac);
        return make128(n, scale);
    }
    i128 n;
    if (!parse_int(s, n)) return std::nullopt;
    return make128(n, 1);
}

}  // namespace agc
