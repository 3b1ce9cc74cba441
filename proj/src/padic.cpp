#include "qzeta/padic.hpp"

#include "qzeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qzeta {

Integer prime_power(std::int64_t p, long k) {
    if (k < 0)
        throw DomainError("negative prime power");
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

long valuation(const Integer& x, std::int64_t p) {
    if (x == 0)
        throw DomainError("valuation of zero");
    Integer pz(static_cast<long>(p));
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long padic_series_domain(std::int64_t p) {
    return p == 2 ? 2 : 1;
}

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("element is not invertible modulo p^k");
    return r;
}

void check_prime(std::int64_t p) {
    if (p < 2)
        throw DomainError("p must be a prime >= 2");
}

void same_prime(const Padic& a, const Padic& b) {
    if (a.prime() != b.prime())
        throw DomainError("p-adic operands over different primes");
}

// floor(log_p k) >= v_p(k)
long log_floor(long k, std::int64_t p) {
    long e = 0;
    for (long x = k; x >= p; x /= p)
        ++e;
    return e;
}

} // namespace

Padic Padic::zero(std::int64_t p, long abs_precision) {
    check_prime(p);
    return Padic(p, abs_precision, Integer(0), 0);
}

Padic Padic::normalized(std::int64_t p, long val, Integer value, long abs_precision) {
    // value * p^val with value known modulo p^{abs_precision - val}
    if (abs_precision <= val)
        return zero(p, abs_precision);
    value = mod_pos(value, prime_power(p, abs_precision - val));
    if (value == 0)
        return zero(p, abs_precision);
    const long extra = qzeta::valuation(value, p);
    if (extra > 0) {
        Integer pe = prime_power(p, extra);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), pe.get_mpz_t());
    }
    return Padic(p, val + extra, std::move(value), abs_precision - val - extra);
}

Padic Padic::from_rational(std::int64_t p, const Rational& x, long precision) {
    check_prime(p);
    if (precision <= 0)
        throw PrecisionError("precision exhausted: requested precision must be positive");
    if (x == 0)
        return zero(p, precision);
    Integer num = x.get_num(), den = x.get_den();
    const Integer pz(static_cast<long>(p));
    const long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    const Integer modulus = prime_power(p, precision);
    Integer unit = mod_pos(num * inverse_mod(den, modulus), modulus);
    return Padic(p, vn - vd, std::move(unit), precision);
}

Rational Padic::to_rational() const {
    if (is_zero())
        return 0;
    if (val_ >= 0)
        return Rational(unit_ * prime_power(p_, val_));
    return Rational(unit_, prime_power(p_, -val_));
}

Integer Padic::residue() const {
    if (is_zero())
        return 0;
    if (val_ < 0)
        throw DomainError("residue of a non-integral p-adic number");
    return unit_ * prime_power(p_, val_);
}

Padic Padic::operator-() const {
    if (is_zero())
        return *this;
    return Padic(p_, val_, mod_pos(-unit_, prime_power(p_, rel_)), rel_);
}

Padic operator+(const Padic& a, const Padic& b) {
    same_prime(a, b);
    const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero() && b.is_zero())
        return Padic::zero(a.p_, abs_prec);
    long vmin;
    if (a.is_zero())
        vmin = b.val_;
    else if (b.is_zero())
        vmin = a.val_;
    else
        vmin = std::min(a.val_, b.val_);
    Integer sum = 0;
    if (!a.is_zero())
        sum += a.unit_ * prime_power(a.p_, a.val_ - vmin);
    if (!b.is_zero())
        sum += b.unit_ * prime_power(b.p_, b.val_ - vmin);
    return Padic::normalized(a.p_, vmin, std::move(sum), abs_prec);
}

Padic operator-(const Padic& a, const Padic& b) {
    return a + (-b);
}

Padic operator*(const Padic& a, const Padic& b) {
    same_prime(a, b);
    if (a.is_zero() && b.is_zero())
        return Padic::zero(a.p_, a.val_ + b.val_);
    if (a.is_zero())
        return Padic::zero(a.p_, a.val_ + b.val_);
    if (b.is_zero())
        return Padic::zero(a.p_, a.val_ + b.val_);
    const long rel = std::min(a.rel_, b.rel_);
    const Integer modulus = prime_power(a.p_, rel);
    return Padic(a.p_, a.val_ + b.val_, mod_pos(a.unit_ * b.unit_, modulus), rel);
}

Padic operator/(const Padic& a, const Padic& b) {
    same_prime(a, b);
    if (b.is_zero())
        throw DomainError("p-adic division by zero (divisor vanishes to precision O(" + std::to_string(b.p_) +
                          "^" + std::to_string(b.val_) + "))");
    if (a.is_zero())
        return Padic::zero(a.p_, a.val_ - b.val_);
    const long rel = std::min(a.rel_, b.rel_);
    const Integer modulus = prime_power(a.p_, rel);
    return Padic(a.p_, a.val_ - b.val_, mod_pos(a.unit_ * inverse_mod(b.unit_, modulus), modulus), rel);
}

std::string Padic::to_string() const {
    const std::string big_o = "O(" + std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
    if (is_zero())
        return big_o;
    std::string s = unit_.get_str();
    if (val_ != 0)
        s += "*" + std::to_string(p_) + "^" + std::to_string(val_);
    return s + " + " + big_o;
}

Padic padic_log(const Padic& q) {
    const std::int64_t p = q.prime();
    const Padic one = Padic::from_integer(p, 1, std::max(q.absolute_precision(), 1L));
    const Padic u = q - one;
    const long domain = padic_series_domain(p);
    if (u.is_zero()) {
        if (u.valuation() < domain)
            throw DomainError("padic_log: q - 1 not known to the required valuation");
        return Padic::zero(p, u.absolute_precision());
    }
    if (u.valuation() < domain)
        throw DomainError("padic_log: needs v_p(q - 1) >= " + std::to_string(domain));
    const long target = u.absolute_precision();
    const long v = u.valuation();

    // Terms u^k/k have valuation >= k v - log_p k; stop once that reaches target.
    long k_max = 1;
    while (k_max * v - log_floor(k_max, p) < target || (k_max + 1) * v - log_floor(k_max + 1, p) < target)
        ++k_max;
    const long guard = log_floor(k_max, p) + 1;
    const Integer work = prime_power(p, target + guard);
    const Integer out_mod = prime_power(p, target);
    const Integer base = mod_pos(u.residue(), work);

    Integer power = 1, acc = 0;
    for (long k = 1; k <= k_max; ++k) {
        power = mod_pos(power * base, work);
        if (power == 0)
            continue;
        Integer kk(k), rest;
        const Integer pz(static_cast<long>(p));
        const long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), kk.get_mpz_t(), pz.get_mpz_t()));
        Integer term = power;
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), prime_power(p, e).get_mpz_t());
        term = mod_pos(term * inverse_mod(rest, out_mod), out_mod);
        if (k % 2 == 0)
            acc -= term;
        else
            acc += term;
    }
    return Padic::from_integer(p, mod_pos(acc, out_mod), target) + Padic::zero(p, target);
}

Padic padic_exp(const Padic& t) {
    const std::int64_t p = t.prime();
    const long domain = padic_series_domain(p);
    const long target = t.absolute_precision();
    if (t.is_zero()) {
        if (t.valuation() < domain)
            throw DomainError("padic_exp: argument not known to the required valuation");
        return Padic::from_integer(p, 1, target);
    }
    if (t.valuation() < domain)
        throw DomainError("padic_exp: needs v_p(t) >= " + std::to_string(domain));
    const long v = t.valuation();

    // v_p(t^k/k!) >= k v - (k - 1)/(p - 1), increasing in k.
    auto bound = [&](long k) { return static_cast<double>(k * v) - static_cast<double>(k - 1) / static_cast<double>(p - 1); };
    long k_max = 1;
    while (bound(k_max + 1) < static_cast<double>(target))
        ++k_max;
    const long guard = static_cast<long>((k_max - 1) / (p - 1)) + 1;
    const Integer work = prime_power(p, target + guard);
    const Integer out_mod = prime_power(p, target);
    const Integer base = mod_pos(t.residue(), work);
    const Integer pz(static_cast<long>(p));

    Integer power = 1, acc = 1, fact_rest = 1;
    long fact_val = 0;
    for (long k = 1; k <= k_max; ++k) {
        power = mod_pos(power * base, work);
        Integer kk(k), rest;
        fact_val += static_cast<long>(mpz_remove(rest.get_mpz_t(), kk.get_mpz_t(), pz.get_mpz_t()));
        fact_rest = mod_pos(fact_rest * rest, out_mod);
        if (power == 0)
            continue;
        Integer term = power;
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), prime_power(p, fact_val).get_mpz_t());
        acc += term * inverse_mod(fact_rest, out_mod);
    }
    return Padic::from_integer(p, mod_pos(acc, out_mod), target) + Padic::zero(p, target);
}

Padic padic_pow(const Padic& q, long x) {
    if (x < 0) {
        const Padic one = Padic::from_integer(q.prime(), 1, std::max(q.relative_precision(), 1L));
        return one / padic_pow(q, -x);
    }
    Padic result = Padic::from_integer(q.prime(), 1, std::max(q.relative_precision(), 1L));
    Padic base = q;
    while (x > 0) {
        if (x & 1)
            result = result * base;
        x >>= 1;
        if (x > 0)
            base = base * base;
    }
    return result;
}

Padic padic_pow_exp_log(const Padic& q, const Padic& x) {
    if (!x.is_zero() && x.valuation() < 0)
        throw DomainError("exponent must be a p-adic integer");
    return padic_exp(x * padic_log(q));
}

Padic q_bracket(long x, const Padic& q) {
    const Padic one = Padic::from_integer(q.prime(), 1, std::max(q.absolute_precision(), 1L));
    const Padic denom = one - q;
    if (denom.is_zero())
        throw DomainError("q-bracket undefined at q = 1");
    return (one - padic_pow(q, x)) / denom;
}

Padic eval_padic(const RationalFunction& f, const Padic& q) {
    const std::int64_t p = q.prime();
    // Coefficients are exact; give them more digits than q carries.
    const long coeff_prec = std::max(q.absolute_precision(), 1L) + 64;
    auto horner = [&](const QPoly& poly) {
        Padic acc = Padic::zero(p, coeff_prec);
        const auto coeffs = poly.coeffs();
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = acc * q + Padic::from_rational(p, coeffs[i], coeff_prec);
        return acc;
    };
    const Padic den = horner(f.den());
    if (den.is_zero())
        throw PrecisionError("valuation underflow: denominator vanishes to working precision");
    return horner(f.num()) / den;
}

Padic eval_padic(const LogScalar& a, const Padic& q) {
    Padic out = eval_padic(a.rat(), q);
    if (a.has_log())
        out = out + eval_padic(a.log(), q) * padic_log(q);
    return out;
}

} // namespace qzeta
