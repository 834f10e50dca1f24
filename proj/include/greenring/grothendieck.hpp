#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenring/green_ring.hpp"

namespace greenring {

class Grothendieck;

// Element of G_0(H) over the basis { [V_i] (i in Omega_0), P[[j]] }.
class G0Element {
public:
    G0Element() = default;
    G0Element(const Grothendieck* g0, std::map<std::size_t, Int> coeffs);

    const Grothendieck* context() const { return g0_; }
    const std::map<std::size_t, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    G0Element operator+(const G0Element& rhs) const;
    G0Element operator-(const G0Element& rhs) const;
    G0Element operator*(const Int& scalar) const;
    bool operator==(const G0Element& rhs) const { return coeffs_ == rhs.coeffs_; }

    std::vector<Int> dense(std::size_t size) const;

private:
    friend class Grothendieck;
    const Grothendieck* g0_ = nullptr;
    std::map<std::size_t, Int> coeffs_;
};

// Basis label of G_0(H): a simple module.
struct G0Label {
    enum class Kind { V, P };
    Kind kind = Kind::V;
    CharIdx idx = 0;  // character (V) or canonical orbit rep (P)

    friend auto operator<=>(const G0Label&, const G0Label&) = default;
};

struct CartanMatrix {
    IntMatrix entries;                    // rows: G_0 basis, cols: projective basis
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

// Elements of the character ring r(kG): integer combinations of characters.
using CharRingElement = std::map<CharIdx, Int>;
CharRingElement char_ring_multiply(const Datum& d, const CharRingElement& x,
                                   const CharRingElement& y);

// The Grothendieck ring G_0(H), the quotient map phi, the Cartan map and the
// embedding into the character ring of G. The G_0 basis is grouped by
// <tau>-orbits ([V_rep], [V_tau(rep)], ...) so the Cartan matrix is literally
// block diagonal.
class Grothendieck {
public:
    explicit Grothendieck(const GreenRing& ring);

    const GreenRing& ring() const { return *ring_; }
    const Datum& datum() const { return ring_->datum(); }
    const std::vector<G0Label>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    std::size_t position(const G0Label& l) const;
    const G0Label& label_at(std::size_t pos) const { return basis_[pos]; }
    std::string label_string(const G0Label& l) const;

    G0Element zero() const { return G0Element(this, {}); }
    G0Element unit() const { return from_label(G0Label{G0Label::Kind::V, 0}); }
    G0Element from_label(const G0Label& l) const;

    G0Element phi(const RingElement& x) const;
    G0Element g0_multiply(const G0Element& x, const G0Element& y) const;

    // Projective basis of the ideal P, in the orbit-grouped order matching
    // the Cartan matrix columns: M(n, tau^t(rep)) per orbit, then P labels.
    const std::vector<Label>& projective_basis() const { return proj_basis_; }
    CartanMatrix cartan_matrix() const;

    CharRingElement embed_into_rkG(const G0Element& x) const;

    std::string to_string(const G0Element& x) const;

private:
    std::map<std::size_t, Int> multiply_labels(const G0Label& x, const G0Label& y) const;

    const GreenRing* ring_;
    std::vector<G0Label> basis_;
    std::vector<Label> proj_basis_;
};

}  // namespace greenring
