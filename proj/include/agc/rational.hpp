// Exact rational arithmetic on 128-bit integers. All table and bound values
// that are rational in exact form go through this type; overflow throws
// instead of wrapping.
#ifndef AGC_RATIONAL_HPP
#define AGC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace agc {

using i128 = __int128;

std::string i128_str(i128 v);

class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { init(n, d); }
    static Rat make128(i128 n, i128 d);

    i128 num() const { return num_; }
    i128 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const;

    i128 floor() const;
    i128 ceil() const;
    Rat pow(long long e) const;  // integer exponent, e may be negative
    double to_double() const;

    // "n/d", or just "n" when the denominator is 1
    std::string str() const;
    // accepts "n", "n/d" and plain decimals like "0.25"
    static std::optional<Rat> parse(std::string_view s);

  private:
    void init(i128 n, i128 d);
    i128 num_, den_;
};

}  // namespace agc

#endif
