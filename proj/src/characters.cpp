#include "qzeta/characters.hpp"

#include "qzeta/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace qzeta {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

struct PrimePower {
    std::int64_t p;
    int k;
    std::int64_t pk;
};

std::vector<PrimePower> factorize(std::int64_t d) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0)
            continue;
        PrimePower f{p, 0, 1};
        while (d % p == 0) {
            d /= p;
            ++f.k;
            f.pk *= p;
        }
        out.push_back(f);
    }
    if (d > 1)
        out.push_back({d, 1, d});
    return out;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    std::int64_t x = mod(a, m), n = 1;
    while (x != 1 % m) {
        x = mulmod(x, a, m);
        ++n;
    }
    return n;
}

// Element congruent to g mod pk and to 1 mod d / pk.
std::int64_t crt_lift(std::int64_t g, std::int64_t pk, std::int64_t d) {
    const std::int64_t rest = d / pk;
    if (rest == 1)
        return mod(g, d);
    // x = 1 + rest * t with 1 + rest * t = g (mod pk).
    std::int64_t inv = 0;
    for (std::int64_t t = 1; t < pk; ++t)
        if (mulmod(rest % pk, t, pk) == 1) {
            inv = t;
            break;
        }
    std::int64_t t = mulmod(mod(g - 1, pk), inv, pk);
    return mod(1 + rest * t, d);
}

} // namespace

UnityRoot UnityRoot::from_exponent(Rational exponent) {
    UnityRoot u;
    u.zero_ = false;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), exponent.get_num_mpz_t(), exponent.get_den_mpz_t());
    u.exponent_ = exponent - fl;
    return u;
}

std::int64_t UnityRoot::order() const {
    return zero_ ? 0 : exponent_.get_den().get_si();
}

UnityRoot operator*(const UnityRoot& a, const UnityRoot& b) {
    if (a.zero_ || b.zero_)
        return UnityRoot::zero();
    return UnityRoot::from_exponent(a.exponent_ + b.exponent_);
}

std::complex<double> to_complex(const UnityRoot& u) {
    if (u.is_zero())
        return 0.0;
    const Rational& e = u.exponent();
    if (e == 0)
        return {1.0, 0.0};
    if (e == Rational(1, 4))
        return {0.0, 1.0};
    if (e == Rational(1, 2))
        return {-1.0, 0.0};
    if (e == Rational(3, 4))
        return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * e.get_d();
    return {std::cos(angle), std::sin(angle)};
}

std::int64_t euler_phi(std::int64_t d) {
    if (d < 1)
        throw DomainError("modulus must be positive");
    std::int64_t phi = d;
    for (const auto& f : factorize(d))
        phi = phi / f.p * (f.p - 1);
    return phi;
}

std::vector<UnitGroupFactor> unit_group_generators(std::int64_t d) {
    if (d < 1)
        throw DomainError("modulus must be positive");
    std::vector<UnitGroupFactor> out;
    for (const auto& f : factorize(d)) {
        if (f.p == 2) {
            if (f.k == 2)
                out.push_back({crt_lift(3, 4, d), 2});
            else if (f.k >= 3) {
                out.push_back({crt_lift(f.pk - 1, f.pk, d), 2});
                out.push_back({crt_lift(5, f.pk, d), f.pk / 4});
            }
            continue;
        }
        const std::int64_t phi = f.pk / f.p * (f.p - 1);
        std::int64_t g = 2;
        while (multiplicative_order(g, f.pk) != phi || std::gcd(g, f.p) != 1)
            ++g;
        out.push_back({crt_lift(g, f.pk, d), phi});
    }
    return out;
}

UnitGroup::UnitGroup(std::int64_t modulus)
    : modulus_(modulus), factors_(unit_group_generators(modulus)), dlog_(static_cast<std::size_t>(modulus)),
      is_unit_(static_cast<std::size_t>(modulus), false) {
    if (modulus_ > 1'000'000)
        throw DomainError("modulus too large for brute-force discrete logs");
    std::vector<std::int64_t> e(factors_.size(), 0);
    while (true) {
        std::int64_t a = 1 % modulus_;
        for (std::size_t j = 0; j < factors_.size(); ++j)
            a = mulmod(a, powmod(factors_[j].generator, e[j], modulus_), modulus_);
        is_unit_[static_cast<std::size_t>(a)] = true;
        dlog_[static_cast<std::size_t>(a)] = e;
        std::size_t j = 0;
        while (j < e.size() && ++e[j] == factors_[j].order)
            e[j++] = 0;
        if (j == e.size())
            break;
    }
}

const std::vector<std::int64_t>* UnitGroup::dlog(std::int64_t a) const {
    const auto r = static_cast<std::size_t>(mod(a, modulus_));
    return is_unit_[r] ? &dlog_[r] : nullptr;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (exponents_.size() != group_->factors().size())
        throw DomainError("exponent vector length does not match the unit-group rank");
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        exponents_[j] = mod(exponents_[j], group_->factors()[j].order);
}

std::int64_t DirichletCharacter::index() const {
    std::int64_t idx = 0, radix = 1;
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        idx += exponents_[j] * radix;
        radix *= group_->factors()[j].order;
    }
    return idx;
}

UnityRoot DirichletCharacter::operator()(std::int64_t a) const {
    const auto* logs = group_->dlog(a);
    if (!logs)
        return UnityRoot::zero();
    Rational e = 0;
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        e += ratio(exponents_[j] * (*logs)[j], group_->factors()[j].order);
    return UnityRoot::from_exponent(e);
}

bool DirichletCharacter::is_principal() const {
    for (auto k : exponents_)
        if (k != 0)
            return false;
    return true;
}

bool DirichletCharacter::is_real() const {
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        if ((2 * exponents_[j]) % group_->factors()[j].order != 0)
            return false;
    return true;
}

int DirichletCharacter::real_value(std::int64_t a) const {
    if (!is_real())
        throw DomainError("character takes non-real values");
    const UnityRoot u = (*this)(a);
    if (u.is_zero())
        return 0;
    return u.exponent() == 0 ? 1 : -1;
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t d) {
    auto group = std::make_shared<const UnitGroup>(d);
    const std::int64_t count = euler_phi(d);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> e;
        std::int64_t rest = idx;
        for (const auto& f : group->factors()) {
            e.push_back(rest % f.order);
            rest /= f.order;
        }
        out.emplace_back(group, std::move(e));
    }
    return out;
}

DirichletCharacter character(std::int64_t d, std::int64_t index) {
    const std::int64_t count = euler_phi(d);
    if (index < 0 || index >= count)
        throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(d) + " (" + std::to_string(count) + " characters)");
    auto group = std::make_shared<const UnitGroup>(d);
    std::vector<std::int64_t> e;
    for (const auto& f : group->factors()) {
        e.push_back(index % f.order);
        index /= f.order;
    }
    return DirichletCharacter(std::move(group), std::move(e));
}

std::int64_t conductor(const DirichletCharacter& chi) {
    const std::int64_t d = chi.modulus();
    for (std::int64_t d0 = 1; d0 <= d; ++d0) {
        if (d % d0 != 0)
            continue;
        bool factors = true;
        for (std::int64_t a = 1 % d; factors && a < d; a += d0) {
            const UnityRoot v = chi(a);
            if (!v.is_zero() && !(v == UnityRoot::one()))
                factors = false;
        }
        if (factors)
            return d0;
    }
    return d;
}

} // namespace qzeta
