#include "ladr/rational.hpp"

#include <cctype>

#include "ladr/error.hpp"

namespace ladr {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text, bool allow_decimal) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw ParseError("bad rational literal: '" + text + "'");
        const Integer numerator(num);
        const Integer denominator(den);
        if (denominator == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(numerator, denominator);
        r.canonicalize();
        return r;
    }
    if (is_integer_literal(text)) {
        Rational r(Integer(text), 1);
        r.canonicalize();
        return r;
    }
    const auto dot = text.find('.');
    if (allow_decimal && dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        const std::string sign = (!whole.empty() && whole[0] == '-') ? "-" : "";
        const std::string whole_digits =
            (whole.empty() || whole == "-" || whole == "+") ? "0"
                                                            : (sign.empty() ? whole : whole.substr(1));
        if (!is_integer_literal(whole_digits) || frac.empty() || !is_integer_literal(frac) ||
            frac[0] == '-' || frac[0] == '+')
            throw ParseError("bad decimal literal: '" + text + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational r(Integer(whole_digits) * scale + Integer(frac), scale);
        r.canonicalize();
        if (sign == "-") r = -r;
        return r;
    }
    throw ParseError("bad rational literal: '" + text + "'");
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Integer floor_int(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

Integer ceil_int(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

}  // namespace ladr
