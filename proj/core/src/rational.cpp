#include "convexpoly/rational.hpp"

#include <algorithm>
#include <cctype>

namespace convexpoly {

std::size_t bit_length(const Integer& k) {
    Integer a = mp::abs(k);
    if (a <= 1) return 1;
    // ceil(log2 a) = msb(a - 1) + 1 for a >= 2.
    return static_cast<std::size_t>(mp::msb(Integer(a - 1))) + 1;
}

std::size_t bit_length(const Rational& r) {
    return bit_length(numerator(r)) + bit_length(denominator(r));
}

Integer int_pow(const Integer& base, unsigned exp) {
    Integer result(1), b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational result(1), b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

int sign_of(const Rational& r) {
    if (r < 0) return -1;
    if (r > 0) return 1;
    return 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer floor_rat(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

Integer ceil_rat(const Rational& r) {
    return -floor_rat(-r);
}

Integer round_rat(const Rational& r) {
    return floor_rat(r + Rational(1, 2));
}

Rational round_to_dyadic(const Rational& x, unsigned mantissa_bits) {
    if (x == 0) return Rational(0);
    const Integer num = mp::abs(numerator(x));
    const Integer den = denominator(x);
    long e = static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den));
    // e is floor(log2 |x|) up to one off; fix by exact comparison.
    {
        Integer lhs = num, rhs = den;
        if (e >= 0) rhs <<= static_cast<unsigned>(e);
        else lhs <<= static_cast<unsigned>(-e);
        if (lhs < rhs) --e;
    }
    const long shift = static_cast<long>(mantissa_bits) - 1 - e;
    if (shift == 0) return Rational(round_rat(x));
    if (shift > 0) {
        Integer scale = Integer(1) << static_cast<unsigned>(shift);
        return Rational(round_rat(x * Rational(scale))) / Rational(scale);
    }
    Integer scale = Integer(1) << static_cast<unsigned>(-shift);
    return Rational(round_rat(x / Rational(scale))) * Rational(scale);
}

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) throw std::invalid_argument("not an integer");
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw std::invalid_argument("not an integer");
        Integer d(den);
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(Integer(num)) / Rational(d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::string to_fraction_string(const Rational& r) {
    const Integer den = denominator(r);
    std::string s = numerator(r).str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string to_decimal_string(const Rational& r, unsigned significant_digits) {
    if (significant_digits == 0) significant_digits = 1;
    if (r == 0) return "0";
    const bool negative = r < 0;
    const Rational x = mp::abs(r);
    const Integer p = numerator(x), q = denominator(x);

    // e = floor(log10 x), found from digit counts and fixed exactly.
    long e = static_cast<long>(p.str().size()) - static_cast<long>(q.str().size());
    auto pow10_le_x = [&](long k) {
        // 10^k <= p/q ?
        if (k >= 0) return int_pow(10, static_cast<unsigned>(k)) * q <= p;
        return q <= int_pow(10, static_cast<unsigned>(-k)) * p;
    };
    while (!pow10_le_x(e)) --e;
    while (pow10_le_x(e + 1)) ++e;

    // m = round(x * 10^(s-1-e)) has exactly s digits, modulo one carry.
    const long s = static_cast<long>(significant_digits);
    long scale = s - 1 - e;
    Rational scaled = x;
    if (scale >= 0) scaled *= Rational(int_pow(10, static_cast<unsigned>(scale)));
    else scaled /= Rational(int_pow(10, static_cast<unsigned>(-scale)));
    Integer m = round_rat(scaled);
    if (m == int_pow(10, significant_digits)) {
        m = int_pow(10, significant_digits - 1);
        ++e;
    }
    std::string digits = m.str();

    std::string out;
    if (e >= s - 1) {
        out = digits + std::string(static_cast<std::size_t>(e - s + 1), '0');
    } else if (e >= 0) {
        out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              digits.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    return negative ? "-" + out : out;
}

}  // namespace convexpoly
