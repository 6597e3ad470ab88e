#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace targetsim {

/// Exact euro amount in integer cents, 128-bit signed.
///
/// All ledger arithmetic has to balance to zero exactly, so Money never
/// rounds: add, subtract and negate are exact, and overflow throws instead
/// of wrapping. Fractional results live in RationalMoney, not here.
class Money {
public:
    constexpr Money() : cents_(0) {}

    static constexpr Money cents(__int128 v) { return Money(v); }
    static constexpr Money euros(std::int64_t v) { return Money(static_cast<__int128>(v) * 100); }
    /// Paper-scale amounts are quoted in billions of euro.
    static constexpr Money billions(std::int64_t v) {
        return Money(static_cast<__int128>(v) * 100'000'000'000LL);
    }

    constexpr __int128 count() const { return cents_; }
    constexpr bool is_zero() const { return cents_ == 0; }
    constexpr bool is_positive() const { return cents_ > 0; }
    constexpr bool is_negative() const { return cents_ < 0; }

    Money operator+(Money o) const {
        __int128 r;
        if (__builtin_add_overflow(cents_, o.cents_, &r)) throw std::overflow_error("money add overflow");
        return Money(r);
    }
    Money operator-(Money o) const {
        __int128 r;
        if (__builtin_sub_overflow(cents_, o.cents_, &r)) throw std::overflow_error("money sub overflow");
        return Money(r);
    }
    Money operator-() const {
        __int128 r;
        if (__builtin_sub_overflow(static_cast<__int128>(0), cents_, &r))
            throw std::overflow_error("money negate overflow");
        return Money(r);
    }
    Money operator*(std::int64_t k) const {
        __int128 r;
        if (__builtin_mul_overflow(cents_, static_cast<__int128>(k), &r))
            throw std::overflow_error("money mul overflow");
        return Money(r);
    }
    Money& operator+=(Money o) { *this = *this + o; return *this; }
    Money& operator-=(Money o) { *this = *this - o; return *this; }

    Money abs() const { return cents_ < 0 ? -*this : *this; }
    /// True iff this amount is an integer multiple of a positive quantum.
    bool multiple_of(Money quantum) const {
        if (quantum.cents_ <= 0) throw std::invalid_argument("quantum must be positive");
        return cents_ % quantum.cents_ == 0;
    }

    auto operator<=>(const Money&) const = default;

    std::string to_string() const;
    /// Parses a decimal integer cent amount; throws std::invalid_argument on
    /// malformed input and std::overflow_error past 128 bits.
    static Money parse(const std::string& text);

private:
    constexpr explicit Money(__int128 v) : cents_(v) {}
    __int128 cents_;
};

std::ostream& operator<<(std::ostream& os, Money m);

} // namespace targetsim
