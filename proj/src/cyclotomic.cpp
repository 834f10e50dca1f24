#include "greenring/cyclotomic.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace greenring {

namespace {

// Exact division of integer polynomials (constant term first); the remainder
// must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() == 0)
        throw std::logic_error("poly_div_exact: bad divisor");
    if (num.size() >= den.size()) {
        std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
        for (std::size_t k = quot.size(); k-- > 0;) {
            if (num[k + den.size() - 1] % den.back() != 0)
                throw std::logic_error("poly_div_exact: inexact division");
            Int q = num[k + den.size() - 1] / den.back();
            quot[k] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
        }
        for (const Int& c : num)
            if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
        while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
        return quot;
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return {Int(0)};
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long long m) {
    assert(m >= 1);
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    std::vector<Int> den = {Int(1)};
    for (long long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<Int> phi_d = cyclotomic_polynomial(d);
        std::vector<Int> prod(den.size() + phi_d.size() - 1, Int(0));
        for (std::size_t i = 0; i < den.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += den[i] * phi_d[j];
        den = std::move(prod);
    }
    return poly_div_exact(std::move(num), den);
}

CycField::CycField(long long order) : order_(order) {
    assert(order >= 1);
    std::vector<Int> phi = cyclotomic_polynomial(order);
    degree_ = phi.size() - 1;
    modulus_.resize(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) modulus_[i] = Rat(phi[i]);
    // reduction table for x^k, degree <= k <= 2*degree-2
    power_table_.resize(2 * degree_ >= 1 ? 2 * degree_ - 1 : 1);
    for (std::size_t k = 0; k < power_table_.size(); ++k) {
        std::vector<Rat>& row = power_table_[k];
        row.assign(degree_, Rat(0));
        if (k < degree_) {
            row[k] = 1;
        } else {
            // x^k = x * x^{k-1} reduced
            const std::vector<Rat>& prev = power_table_[k - 1];
            std::vector<Rat> shifted(degree_ + 1, Rat(0));
            for (std::size_t i = 0; i < degree_; ++i) shifted[i + 1] = prev[i];
            Rat lead = shifted[degree_];
            for (std::size_t i = 0; i < degree_; ++i) row[i] = shifted[i] - lead * modulus_[i];
        }
    }
}

Cyc CycField::zero() const { return Cyc(this, std::vector<Rat>(degree_, Rat(0))); }

Cyc CycField::one() const { return rational(Rat(1)); }

Cyc CycField::rational(const Rat& r) const {
    std::vector<Rat> c(degree_, Rat(0));
    if (degree_ > 0) c[0] = r;
    return Cyc(this, std::move(c));
}

Cyc CycField::zeta_pow(long long e) const {
    e = mod_reduce(e, order_);
    // reduce x^e mod Phi by repeated use of the power table
    std::vector<Rat> acc(degree_, Rat(0));
    if (degree_ == 0) return Cyc(this, std::move(acc));
    acc[0] = 1;
    // multiply by x, e times (order_ is small; exactness over speed)
    for (long long t = 0; t < e; ++t) {
        std::vector<Rat> shifted(degree_ + 1, Rat(0));
        for (std::size_t i = 0; i < degree_; ++i) shifted[i + 1] = acc[i];
        Rat lead = shifted[degree_];
        for (std::size_t i = 0; i < degree_; ++i) acc[i] = shifted[i] - lead * modulus_[i];
    }
    return Cyc(this, std::move(acc));
}

bool Cyc::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational(const Rat& r) const {
    if (coeffs_.empty()) return r == 0;
    if (coeffs_[0] != r) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& rhs) const {
    assert(field_ == rhs.field_);
    std::vector<Rat> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-(const Cyc& rhs) const {
    assert(field_ == rhs.field_);
    std::vector<Rat> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (Rat& x : c) x = -x;
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator*(const Cyc& rhs) const {
    assert(field_ == rhs.field_);
    const std::size_t d = field_->degree_;
    std::vector<Rat> prod(2 * d >= 1 ? 2 * d - 1 : 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rat> out(d, Rat(0));
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const std::vector<Rat>& row = field_->power_table_[k];
        for (std::size_t i = 0; i < d; ++i) out[i] += prod[k] * row[i];
    }
    return Cyc(field_, std::move(out));
}

Cyc Cyc::operator*(const Rat& r) const {
    std::vector<Rat> c = coeffs_;
    for (Rat& x : c) x *= r;
    return Cyc(field_, std::move(c));
}

namespace {

using QPoly = std::vector<Rat>;  // constant term first, trimmed

QPoly qp_trim(QPoly v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

bool qp_is_zero(const QPoly& v) { return v.size() == 1 && v[0] == 0; }

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    QPoly p(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return qp_trim(std::move(p));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly p(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) p[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
    return qp_trim(std::move(p));
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    a = qp_trim(std::move(a));
    if (a.size() < b.size()) return {QPoly{Rat(0)}, a};
    QPoly q(a.size() - b.size() + 1, Rat(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    return {qp_trim(std::move(q)), qp_trim(std::move(a))};
}

}  // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    const std::size_t d = field_->degree_;
    // extended Euclid in Q[x]: s*Phi + t*this = gcd = nonzero constant
    QPoly r0 = qp_trim(field_->modulus_);
    QPoly r1 = qp_trim(coeffs_);
    QPoly t0 = {Rat(0)}, t1 = {Rat(1)};
    while (!qp_is_zero(r1)) {
        auto [q, rem] = qp_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // Phi_m is irreducible over Q, so the gcd is a unit
    assert(r0.size() == 1 && r0[0] != 0);
    std::vector<Rat> inv(d, Rat(0));
    for (std::size_t i = 0; i < t0.size() && i < d; ++i) inv[i] = t0[i] / r0[0];
    return Cyc(field_, std::move(inv));
}

bool Cyc::operator==(const Cyc& rhs) const { return coeffs_ == rhs.coeffs_; }

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i >= 1) {
            os << "*w";
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace greenring
