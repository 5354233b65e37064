#include "tptk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tptk {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw std::invalid_argument("malformed rational literal: " + text);
        Integer den_z(den);
        if (den_z == 0) throw std::invalid_argument("zero denominator: " + text);
        Rational r{Integer(num), den_z};
        r.canonicalize();
        return r;
    }

    if (is_plain_integer(text)) return Rational(Integer(text));

    // decimal / scientific
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
        if (text[i] == '.') {
            if (seen_dot) throw std::invalid_argument("malformed rational literal: " + text);
            seen_dot = true;
        } else {
            digits += text[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + text);
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E')
            throw std::invalid_argument("malformed rational literal: " + text);
        std::string exp = text.substr(i + 1);
        if (!is_plain_integer(exp)) throw std::invalid_argument("malformed rational literal: " + text);
        exponent = std::stol(exp);
    }

    Integer mantissa(digits);
    if (negative) mantissa = -mantissa;
    long ten_power = exponent - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(ten_power < 0 ? -ten_power : ten_power));
    Rational r = ten_power >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace tptk
