#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mag {

/// A natural number extended with a distinguished Infinity.
/// Addition absorbs Infinity; comparison totally orders the naturals
/// below Infinity. All operations are total.
class ExtDistance {
public:
    constexpr ExtDistance() : finite_(true), value_(0) {}
    constexpr explicit ExtDistance(std::int64_t n) : finite_(true), value_(n) {
        if (n < 0) throw std::invalid_argument("ExtDistance: negative value");
    }

    static constexpr ExtDistance infinity() {
        ExtDistance d;
        d.finite_ = false;
        d.value_ = 0;
        return d;
    }

    constexpr bool is_finite() const { return finite_; }

    /// Finite value; throws if infinite.
    constexpr std::int64_t value() const {
        if (!finite_) throw std::logic_error("ExtDistance: value() on Infinity");
        return value_;
    }

    friend constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtDistance(a.value_ + b.value_);
    }

    friend constexpr bool operator==(ExtDistance a, ExtDistance b) {
        return a.finite_ == b.finite_ && a.value_ == b.value_;
    }

    friend constexpr bool operator<(ExtDistance a, ExtDistance b) {
        if (a.finite_ && b.finite_) return a.value_ < b.value_;
        return a.finite_ && !b.finite_;
    }
    friend constexpr bool operator<=(ExtDistance a, ExtDistance b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtDistance a, ExtDistance b) { return b < a; }
    friend constexpr bool operator>=(ExtDistance a, ExtDistance b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, ExtDistance d) {
        if (d.finite_) return os << d.value_;
        return os << "inf";
    }

private:
    bool finite_;
    std::int64_t value_;
};

}  // namespace mag
