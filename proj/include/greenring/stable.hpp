#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenring/green_ring.hpp"

namespace greenring {

class StableRing;

// Element of the stable Green ring r(H)/P over the basis of non-projective
// labels M[j,i], i in Omega_0, 1 <= j <= n-1.
class StableElement {
public:
    StableElement() = default;
    StableElement(const StableRing* ring, std::map<std::size_t, Int> coeffs);

    const StableRing* ring() const { return ring_; }
    const std::map<std::size_t, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const StableElement& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    friend class StableRing;
    const StableRing* ring_ = nullptr;
    std::map<std::size_t, Int> coeffs_;
};

// Integer bivariate polynomial in (Y, Z); used for the Dickson family
// F_1 = 1, F_2 = Z, F_j = Z F_{j-1} - Y F_{j-2}.
class DicksonPoly {
public:
    static DicksonPoly dickson(long long j);  // throws NonPositiveIndex for j < 1

    const std::map<std::pair<long long, long long>, Int>& terms() const { return terms_; }
    long long z_degree() const;
    double evaluate(double y, double z) const;
    RingElement evaluate(const RingElement& y, const RingElement& z) const;
    std::string to_string() const;

    DicksonPoly() = default;

private:
    // (deg_Y, deg_Z) -> coefficient
    std::map<std::pair<long long, long long>, Int> terms_;
};

struct FusionCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first violation, when pass is false
};

struct FusionReport {
    std::vector<FusionCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct FPDimEntry {
    std::string label;
    double eigen = 0.0;
    double closed = 0.0;
    double abs_diff = 0.0;
};

class StableRing {
public:
    explicit StableRing(const GreenRing& ring);
    StableRing(const StableRing&) = delete;
    StableRing& operator=(const StableRing&) = delete;

    const GreenRing& green() const { return *ring_; }
    const Datum& datum() const { return ring_->datum(); }
    const std::vector<Label>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    std::size_t position(const Label& l) const;
    StableElement unit() const;
    StableElement from_label(const Label& l) const;

    StableElement project(const RingElement& x) const;
    RingElement lift(const StableElement& x) const;
    StableElement multiply(const StableElement& x, const StableElement& y) const;

    // Index involution (j,i) -> (j, tau^{1-j}(i*)) on the stable basis.
    Label dual_basis_label(const Label& l) const;

    FusionReport fusion_axioms_check() const;

    // Left-multiplication matrix of b: row q holds the coefficients of
    // b * basis[q] over the stable basis.
    std::vector<std::vector<Int>> mult_matrix(const Label& b) const;

    double fpdim_eigen(const Label& b) const;    // Perron eigenvalue
    double fpdim_closed(const Label& b) const;   // dim(V_i) F_j(1, 2cos(pi/n))

    std::vector<FPDimEntry> fpdim_table() const;

    std::string to_string(const StableElement& x) const;

private:
    const GreenRing* ring_;
    std::vector<Label> basis_;                 // non-projective labels in catalog order
    std::vector<std::size_t> ring_position_;   // stable pos -> catalog pos
};

}  // namespace greenring
