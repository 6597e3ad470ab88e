#include "targetsim/money.hpp"

#include <limits>
#include <ostream>

namespace targetsim {

namespace {

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits off the magnitude; unsigned holds |INT128_MIN| too.
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = sizeof(buf);
    while (mag > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
        mag /= 10;
    }
    std::string out;
    if (neg) out.push_back('-');
    out.append(buf + pos, sizeof(buf) - pos);
    return out;
}

} // namespace

std::string Money::to_string() const { return int128_to_string(cents_); }

Money Money::parse(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("empty amount: \"" + text + "\"");
    unsigned __int128 mag = 0;
    constexpr unsigned __int128 limit_pos = static_cast<unsigned __int128>(std::numeric_limits<__int128>::max());
    const unsigned __int128 limit = neg ? limit_pos + 1 : limit_pos;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad amount digit in \"" + text + "\"");
        unsigned digit = static_cast<unsigned>(c - '0');
        if (mag > (limit - digit) / 10) throw std::overflow_error("amount out of range: \"" + text + "\"");
        mag = mag * 10 + digit;
    }
    __int128 v = neg ? -static_cast<__int128>(mag) : static_cast<__int128>(mag);
    return Money::cents(v);
}

std::ostream& operator<<(std::ostream& os, Money m) { return os << m.to_string(); }

} // namespace targetsim
