#pragma once

#include <string>
#include <vector>

#include "greenring/numeric.hpp"

namespace greenring {

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(long long m);

class Cyc;

// The cyclotomic field Q(zeta_m) as Q[x] / Phi_m(x). Exact arithmetic only.
class CycField {
public:
    explicit CycField(long long order);

    long long order() const { return order_; }
    std::size_t degree() const { return degree_; }

    Cyc zero() const;
    Cyc one() const;
    Cyc rational(const Rat& r) const;
    Cyc zeta_pow(long long e) const;  // zeta_m^e, e arbitrary

private:
    friend class Cyc;
    long long order_;
    std::size_t degree_;
    std::vector<Rat> modulus_;                  // monic Phi_m, degree+1 coeffs
    std::vector<std::vector<Rat>> power_table_; // x^k mod Phi_m for k < 2*degree-1
};

// Element of Q(zeta_m): reduced coordinate vector in the power basis.
class Cyc {
public:
    Cyc() = default;

    const CycField& field() const { return *field_; }
    bool is_zero() const;
    bool is_rational(const Rat& r) const;

    Cyc operator+(const Cyc& rhs) const;
    Cyc operator-(const Cyc& rhs) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& rhs) const;
    Cyc operator*(const Rat& r) const;
    Cyc inverse() const;  // throws on zero
    Cyc operator/(const Cyc& rhs) const { return *this * rhs.inverse(); }
    bool operator==(const Cyc& rhs) const;

    std::string to_string() const;

private:
    friend class CycField;
    Cyc(const CycField* f, std::vector<Rat> c) : field_(f), coeffs_(std::move(c)) {}

    const CycField* field_ = nullptr;
    std::vector<Rat> coeffs_;
};

}  // namespace greenring
