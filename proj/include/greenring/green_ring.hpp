#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenring/catalog.hpp"
#include "greenring/intmatrix.hpp"

namespace greenring {

class GreenRing;

// Sparse integer combination of basis labels. Elements remember the ring they
// belong to; arithmetic across different data throws DatumMismatch.
class RingElement {
public:
    RingElement() = default;
    RingElement(const GreenRing* ring, std::map<std::size_t, Int> coeffs);

    const GreenRing* ring() const { return ring_; }
    const std::map<std::size_t, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(std::size_t pos) const;

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& rhs) const;
    RingElement operator*(const Int& scalar) const;
    RingElement pow(unsigned long e) const;
    bool operator==(const RingElement& rhs) const;

    std::vector<Int> dense(std::size_t size) const;

private:
    friend class GreenRing;
    const GreenRing* ring_ = nullptr;
    std::map<std::size_t, Int> coeffs_;  // basis position -> nonzero coefficient
};

RingElement operator*(const Int& scalar, const RingElement& x);

// The Green ring r(H) of the pointed rank one Hopf algebra attached to a
// validated datum. Products of basis labels follow the Clebsch-Gordan rules;
// the structure-constant table is filled once at construction.
class GreenRing {
public:
    explicit GreenRing(const Datum& d);
    GreenRing(const GreenRing&) = delete;
    GreenRing& operator=(const GreenRing&) = delete;

    const Datum& datum() const { return datum_; }
    const Catalog& catalog() const { return catalog_; }
    std::size_t rank() const { return catalog_.size(); }

    RingElement zero() const { return RingElement(this, {}); }
    RingElement unit() const { return from_label(catalog_.unit()); }
    RingElement a() const { return from_label(catalog_.a_label()); }
    RingElement a_pow(long long t) const;
    RingElement from_label(const Label& l) const;
    RingElement basis_element(std::size_t pos) const;

    RingElement multiply(const RingElement& x, const RingElement& y) const;
    RingElement dualize(const RingElement& x) const;

    // delta of an almost split sequence ending at the label (or [Z]-[rad Z]
    // for projective Z). delta_unit() is 1 + a - M[2,0].
    RingElement delta(const Label& l) const;
    RingElement delta_unit() const;

    // ([X],[Y]) = dim Hom(X, Y*), evaluated as f(x*y) with f the coefficient
    // functional of modules with trivial top.
    Int bilinear_form(const RingElement& x, const RingElement& y) const;

    Int dimension(const RingElement& x) const;  // augmentation

    const std::vector<std::map<std::size_t, Int>>& structure_constants() const {
        return table_;
    }
    const std::map<std::size_t, Int>& basis_product(std::size_t p, std::size_t q) const {
        return table_[p * catalog_.size() + q];
    }

    std::string to_string(const RingElement& x) const;
    RingElement parse(const std::string& text) const;

    // rows = coordinate vectors of the given elements over the full basis
    IntMatrix coordinate_matrix(const std::vector<RingElement>& elems) const;

private:
    std::map<std::size_t, Int> multiply_labels(const Label& x, const Label& y) const;
    void check_same_ring(const RingElement& x, const RingElement& y) const;

    Datum datum_;
    Catalog catalog_;
    std::vector<std::map<std::size_t, Int>> table_;  // size() x size() products
};

}  // namespace greenring
