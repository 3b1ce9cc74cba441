#include "qzeta/rational.hpp"

#include "qzeta/errors.hpp"

#include <cctype>

namespace qzeta {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw DomainError("malformed rational: '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw DomainError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw DomainError("malformed rational: '" + std::string(whole) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part[0] == '-';
        if (int_part == "-" || int_part == "+" || int_part.empty())
            int_part = "0";
        Integer ip = parse_integer(int_part, text);
        Integer scale = 1;
        Integer fp = 0;
        if (!frac_part.empty()) {
            fp = parse_integer(frac_part, text);
            if (frac_part[0] == '-' || frac_part[0] == '+')
                throw DomainError("malformed rational: '" + std::string(text) + "'");
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        }
        Integer magnitude = abs(ip) * scale + fp;
        Rational r(negative ? Integer(-magnitude) : magnitude, scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0)
            throw DomainError("zero to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

} // namespace qzeta
