#include "qzeta/qpoly.hpp"

#include "qzeta/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace qzeta {

namespace {

void trim(IntegerVector& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

Integer content_of(const IntegerVector& v) {
    Integer g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

// Divides out the integer content and makes the leading coefficient positive.
// Returns the signed factor removed.
Integer make_primitive(IntegerVector& v) {
    trim(v);
    if (v.empty())
        return 0;
    Integer g = content_of(v);
    if (v.back() < 0)
        g = -g;
    if (g != 1)
        for (auto& c : v)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return g;
}

IntegerVector multiply(const IntegerVector& a, const IntegerVector& b) {
    if (a.empty() || b.empty())
        return {};
    IntegerVector out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

// Exact quotient a / b over Z, or nullopt if b does not divide a.
std::optional<IntegerVector> divide_integer(const IntegerVector& a, const IntegerVector& b) {
    if (b.empty())
        throw DomainError("polynomial division by zero");
    if (a.empty())
        return IntegerVector{};
    if (a.size() < b.size())
        return std::nullopt;
    IntegerVector rem = a;
    IntegerVector quot(a.size() - b.size() + 1);
    const Integer& lead = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + b.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 0; i + 1 < b.size() && i < rem.size(); ++i)
        if (rem[i] != 0)
            return std::nullopt;
    return quot;
}

Integer eval_integer(const IntegerVector& v, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        acc *= x;
        acc += v[i];
    }
    return acc;
}

Integer max_norm(const IntegerVector& v) {
    Integer m = 0;
    for (const auto& c : v)
        if (abs(c) > m)
            m = abs(c);
    return m;
}

// Recovers the polynomial whose value at x is h, using symmetric digits.
IntegerVector interpolate(Integer h, const Integer& x) {
    IntegerVector out;
    Integer half = x / 2;
    while (h != 0) {
        Integer g;
        mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (g > half)
            g -= x;
        out.push_back(g);
        h -= g;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    }
    return out;
}

// Heuristic GCD of primitive integer polynomials (evaluation at a large
// integer, integer gcd, symmetric-digit reconstruction, trial division).
std::optional<IntegerVector> heuristic_gcd(const IntegerVector& f, const IntegerVector& g) {
    const Integer fn = max_norm(f);
    const Integer gn = max_norm(g);
    const Integer b = 2 * std::min(fn, gn) + 29;
    Integer x = std::max(Integer(std::min(b, Integer(99 * sqrt(b)))),
                         Integer(2 * std::min(Integer(fn / abs(f.back())), Integer(gn / abs(g.back()))) + 2));
    for (int attempt = 0; attempt < 6; ++attempt) {
        Integer ff = eval_integer(f, x);
        Integer gg = eval_integer(g, x);
        if (ff != 0 && gg != 0) {
            Integer h;
            mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
            IntegerVector cand = interpolate(h, x);
            make_primitive(cand);
            if (!cand.empty() && divide_integer(f, cand) && divide_integer(g, cand))
                return cand;
        }
        x = 73794 * x * Integer(sqrt(Integer(sqrt(x)))) / 27011;
    }
    return std::nullopt;
}

// Primitive polynomial remainder sequence; always correct, slower.
IntegerVector prs_gcd(IntegerVector a, IntegerVector b) {
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        IntegerVector r = a;
        const Integer lead = b.back();
        while (r.size() >= b.size()) {
            const Integer top = r.back();
            const std::size_t shift = r.size() - b.size();
            for (auto& c : r)
                c *= lead;
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
            trim(r);
            if (r.empty())
                break;
            make_primitive(r);
        }
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

} // namespace

QPoly::QPoly(const std::vector<Rational>& coeffs) {
    Integer lcm_den = 1;
    for (const auto& c : coeffs)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    IntegerVector ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        ints[i] = coeffs[i].get_num() * (lcm_den / coeffs[i].get_den());
    *this = from_integers(Rational(Integer(1), lcm_den), std::move(ints));
}

QPoly QPoly::constant(const Rational& c) {
    return monomial(c, 0);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
    QPoly p;
    if (c == 0)
        return p;
    p.prim_.assign(degree + 1, Integer(0));
    p.prim_[degree] = 1;
    p.content_ = c;
    return p;
}

QPoly QPoly::from_integers(Rational content, IntegerVector coeffs) {
    QPoly p;
    if (content == 0)
        return p;
    Integer g = make_primitive(coeffs);
    if (coeffs.empty())
        return p;
    p.prim_ = std::move(coeffs);
    p.content_ = content * g;
    return p;
}

bool QPoly::is_one() const {
    return prim_.size() == 1 && content_ == 1;
}

Rational QPoly::coeff(std::size_t i) const {
    if (i >= prim_.size())
        return 0;
    return content_ * prim_[i];
}

Rational QPoly::leading() const {
    return is_zero() ? Rational(0) : Rational(content_ * prim_.back());
}

std::vector<Rational> QPoly::coeffs() const {
    std::vector<Rational> out(prim_.size());
    for (std::size_t i = 0; i < prim_.size(); ++i)
        out[i] = content_ * prim_[i];
    return out;
}

QPoly QPoly::operator-() const {
    QPoly p = *this;
    p.content_ = -p.content_;
    return p;
}

QPoly QPoly::scaled(const Rational& c) const {
    if (c == 0 || is_zero())
        return {};
    QPoly p = *this;
    p.content_ *= c;
    return p;
}

QPoly QPoly::primitive_part() const {
    QPoly p = *this;
    if (!p.is_zero())
        p.content_ = 1;
    return p;
}

QPoly QPoly::subst_power(unsigned m) const {
    if (m == 0)
        throw DomainError("substitution exponent must be positive");
    if (m == 1 || is_constant())
        return *this;
    QPoly p;
    p.content_ = content_;
    p.prim_.assign((prim_.size() - 1) * m + 1, Integer(0));
    for (std::size_t i = 0; i < prim_.size(); ++i)
        p.prim_[i * m] = prim_[i];
    return p;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = prim_.size(); i-- > 0;) {
        acc *= x;
        acc += prim_[i];
    }
    return acc * content_;
}

std::complex<double> QPoly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = prim_.size(); i-- > 0;)
        acc = acc * x + Rational(content_ * prim_[i]).get_d();
    return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const Integer& da = a.content_.get_den();
    const Integer& db = b.content_.get_den();
    Integer l;
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    const Integer fa = a.content_.get_num() * (l / da);
    const Integer fb = b.content_.get_num() * (l / db);
    IntegerVector out(std::max(a.prim_.size(), b.prim_.size()));
    for (std::size_t i = 0; i < a.prim_.size(); ++i)
        mpz_mul(out[i].get_mpz_t(), fa.get_mpz_t(), a.prim_[i].get_mpz_t());
    for (std::size_t i = 0; i < b.prim_.size(); ++i)
        mpz_addmul(out[i].get_mpz_t(), fb.get_mpz_t(), b.prim_[i].get_mpz_t());
    return QPoly::from_integers(Rational(Integer(1), l), std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    // Gauss: the product of primitive polynomials is primitive.
    QPoly p;
    p.prim_ = multiply(a.prim_, b.prim_);
    p.content_ = a.content_ * b.content_;
    return p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero())
        return b.primitive_part();
    if (b.is_zero())
        return a.primitive_part();
    if (a.is_constant() || b.is_constant())
        return QPoly::constant(1);
    if (a.primitive() == b.primitive())
        return a.primitive_part();
    IntegerVector g;
    if (auto h = heuristic_gcd(a.primitive(), b.primitive()))
        g = std::move(*h);
    else
        g = prs_gcd(a.primitive(), b.primitive());
    return QPoly::from_integers(Rational(1), std::move(g));
}

QPoly divide_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.is_zero())
        return {};
    auto q = divide_integer(a.primitive(), b.primitive());
    if (!q)
        throw DomainError("polynomial division is not exact");
    return QPoly::from_integers(a.content() / b.content(), std::move(*q));
}

} // namespace qzeta
