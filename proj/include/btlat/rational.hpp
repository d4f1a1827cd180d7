#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace btlat {

/// Exact rational number on 64-bit words. Denominator is always positive
/// and the fraction is kept reduced. All quantities in this library are
/// small (ranks <= 7, denominators bounded by lcm's of the d_alpha), so
/// 64 bits leave ample headroom.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : n_(n), d_(1) {}
    Rat(long long n, long long d) : n_(n), d_(d) { normalize(); }

    long long num() const { return n_; }
    long long den() const { return d_; }

    bool is_integer() const { return d_ == 1; }
    bool is_zero() const { return n_ == 0; }

    // Largest integer <= value.
    long long floor() const {
        if (n_ >= 0) return n_ / d_;
        return -((-n_ + d_ - 1) / d_);
    }
    long long ceil() const { return -Rat(-n_, d_).floor(); }
    // Fractional part in [0, 1).
    Rat frac() const { return *this - Rat(floor()); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.d_ - b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.n_, a.d_ * b.d_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.n_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.n_ * b.d_, a.d_ * b.n_);
    }
    Rat operator-() const { return Rat(-n_, d_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.n_ * b.d_ < b.n_ * a.d_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Canonical "p/q" form, q >= 1 (so "3/1", "-1/2", "0/1").
    std::string str() const {
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    /// Accepts "p" or "p/q"; q may carry the sign.
    static Rat parse(std::string_view s);

private:
    void normalize() {
        if (d_ == 0) throw std::domain_error("Rat: zero denominator");
        if (d_ < 0) { n_ = -n_; d_ = -d_; }
        long long g = std::gcd(n_ < 0 ? -n_ : n_, d_);
        if (g > 1) { n_ /= g; d_ /= g; }
        if (n_ == 0) d_ = 1;
    }

    long long n_ = 0;
    long long d_ = 1;
};

inline Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    auto to_ll = [](std::string_view t) {
        if (t.empty()) throw std::invalid_argument("Rat::parse: empty field");
        size_t pos = 0;
        long long v = std::stoll(std::string(t), &pos);
        if (pos != t.size()) throw std::invalid_argument("Rat::parse: trailing junk");
        return v;
    };
    if (slash == std::string_view::npos) return Rat(to_ll(s));
    return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

} // namespace btlat
