#include "targetsim/rational.hpp"

#include <stdexcept>

namespace targetsim {

RationalMoney RationalMoney::ratio(Money num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return RationalMoney(BigRational(to_bigint(num), BigInt(den)));
}

std::optional<Money> RationalMoney::exact_cents() const {
    if (!is_integral()) return std::nullopt;
    BigInt n = numerator();
    return Money::cents(static_cast<__int128>(n));
}

Money RationalMoney::rounded_cents() const {
    BigInt q = round_div_half_even(numerator(), denominator());
    return Money::cents(static_cast<__int128>(q));
}

std::string RationalMoney::to_string() const {
    if (is_integral()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

BigInt round_div_half_even(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::invalid_argument("round_div_half_even: denominator must be positive");
    bool neg = num < 0;
    BigInt a = neg ? BigInt(-num) : num;
    BigInt q = a / den;
    BigInt r = a % den;
    BigInt twice = r * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) q += 1;
    return neg ? BigInt(-q) : q;
}

std::string decimal_string(const BigRational& v, int places) {
    if (places < 0) throw std::invalid_argument("decimal places must be >= 0");
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt num = boost::multiprecision::numerator(v) * scale;
    BigInt den = boost::multiprecision::denominator(v);
    BigInt scaled = round_div_half_even(num, den);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.str();
    std::string out;
    if (neg) out.push_back('-');
    if (places == 0) {
        out += digits;
        return out;
    }
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - places);
    out.push_back('.');
    out += digits.substr(digits.size() - places);
    return out;
}

BigRational rational_from_decimal(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("bad decimal: \"" + text + "\"");
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: \"" + text + "\"");
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
        any_digit = true;
    }
    if (!any_digit) throw std::invalid_argument("bad decimal: \"" + text + "\"");
    if (neg) num = -num;
    return BigRational(num, den);
}

Money scale_money(Money m, const BigRational& factor) {
    return RationalMoney(to_rational(m) * factor).rounded_cents();
}

} // namespace targetsim
