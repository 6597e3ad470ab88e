#pragma once

#include "targetsim/money.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace targetsim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt to_bigint(Money m) { return BigInt(m.count()); }
inline BigRational to_rational(Money m) { return BigRational(to_bigint(m)); }

/// Money that may carry a fractional part, kept as an exact rational in
/// cent units. Identities that hold in the algebra hold here bit for bit;
/// rounding happens once, on export.
class RationalMoney {
public:
    RationalMoney() = default;
    explicit RationalMoney(BigRational cents) : value_(std::move(cents)) {}
    RationalMoney(Money m) : value_(to_rational(m)) {}
    static RationalMoney ratio(Money num, std::int64_t den);

    const BigRational& value() const { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_integral() const { return denominator() == 1; }
    /// Exact cent value, or nullopt when the denominator does not divide out.
    std::optional<Money> exact_cents() const;
    /// Nearest cent, ties to even.
    Money rounded_cents() const;

    RationalMoney operator+(const RationalMoney& o) const { return RationalMoney(value_ + o.value_); }
    RationalMoney operator-(const RationalMoney& o) const { return RationalMoney(value_ - o.value_); }
    RationalMoney operator-() const { return RationalMoney(-value_); }
    RationalMoney operator*(const BigRational& k) const { return RationalMoney(value_ * k); }
    bool operator==(const RationalMoney& o) const = default;

    std::string to_string() const;

private:
    BigRational value_;
};

/// floor/nearest helpers shared by rendering code.
BigInt round_div_half_even(const BigInt& num, const BigInt& den);

/// Rounds a rational to `places` decimal digits, half to even, and renders
/// it with a fixed number of digits ("0.7100" for 71/100 at 4 places).
std::string decimal_string(const BigRational& v, int places);

/// Parses a plain decimal fraction such as "0.05" or "-1.25" into an exact
/// rational. Exponents and locale separators are not accepted.
BigRational rational_from_decimal(const std::string& text);

/// Money times an exact fraction, rounded to cents half to even.
Money scale_money(Money m, const BigRational& factor);

} // namespace targetsim
