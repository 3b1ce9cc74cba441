#pragma once

#include "qzeta/rational.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace qzeta {

/// e^{2 pi i * exponent} with exponent in [0, 1), or the zero value taken by
/// characters at non-units.
class UnityRoot {
public:
    static UnityRoot zero() { return UnityRoot(); }
    static UnityRoot from_exponent(Rational exponent);
    static UnityRoot one() { return from_exponent(0); }

    bool is_zero() const { return zero_; }
    const Rational& exponent() const { return exponent_; }
    // Order of the root (denominator of the exponent); 0 for the zero value.
    std::int64_t order() const;
    bool is_real() const { return zero_ || exponent_ == 0 || exponent_ == Rational(1, 2); }

    friend UnityRoot operator*(const UnityRoot& a, const UnityRoot& b);
    friend bool operator==(const UnityRoot&, const UnityRoot&) = default;

private:
    UnityRoot() = default;
    bool zero_ = true;
    Rational exponent_{0};
};

// cos + i sin of 2 pi exponent; exact for 0, 1/4, 1/2, 3/4 and the zero value.
std::complex<double> to_complex(const UnityRoot& u);

struct UnitGroupFactor {
    std::int64_t generator;
    std::int64_t order;
};

// Generators of (Z/dZ)^* from its CRT decomposition, ordered by prime; a
// power of two 2^k with k >= 3 contributes -1 (order 2) then 5 (order 2^{k-2}).
std::vector<UnitGroupFactor> unit_group_generators(std::int64_t d);

std::int64_t euler_phi(std::int64_t d);

/// Unit group mod d with a discrete-log table over the generators.
class UnitGroup {
public:
    explicit UnitGroup(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<UnitGroupFactor>& factors() const { return factors_; }
    // Exponent vector of a unit; empty span semantics: nullptr for non-units.
    const std::vector<std::int64_t>* dlog(std::int64_t a) const;

private:
    std::int64_t modulus_;
    std::vector<UnitGroupFactor> factors_;
    std::vector<std::vector<std::int64_t>> dlog_;
    std::vector<bool> is_unit_;
};

/// Dirichlet character mod d given by exponents k_j on the unit-group
/// generators: chi(g_j) = e^{2 pi i k_j / e_j}. The mod-1 character is
/// constant 1, including chi(0).
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents);

    std::int64_t modulus() const { return group_->modulus(); }
    const std::vector<UnitGroupFactor>& generators() const { return group_->factors(); }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    // Mixed-radix position in enumerate_characters (first generator least significant).
    std::int64_t index() const;

    UnityRoot operator()(std::int64_t a) const;
    bool is_principal() const;
    // Every value lies in {-1, 0, 1}.
    bool is_real() const;
    // chi(a) as -1, 0 or 1; throws DomainError for non-real characters.
    int real_value(std::int64_t a) const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> exponents_;
};

// All phi(d) characters; index 0 is principal.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t d);
DirichletCharacter character(std::int64_t d, std::int64_t index);

std::int64_t conductor(const DirichletCharacter& chi);

} // namespace qzeta
