#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "greenring/datum.hpp"

namespace greenring {

// Basis label of the Green ring: either M(k,i) with 1 <= k <= n and i in
// Omega_0, or P[j] with j the lex-least member of a <tau>-orbit in Omega_1.
struct Label {
    enum class Kind { M, P };
    Kind kind = Kind::M;
    long long k = 1;     // length; meaningful for M only
    CharIdx idx = 0;     // character index (M) or canonical orbit rep (P)

    friend auto operator<=>(const Label&, const Label&) = default;
};

// Enumerates the basis in the canonical order (all M(k,i) sorted by (i,k),
// then P labels sorted by representative) and provides label arithmetic.
class Catalog {
public:
    explicit Catalog(Datum d);

    const Datum& datum() const { return datum_; }
    const std::vector<Label>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }

    std::size_t position(const Label& l) const;   // index into basis()
    const Label& label_at(std::size_t pos) const { return basis_[pos]; }

    Label unit() const { return Label{Label::Kind::M, 1, 0}; }
    Label a_label() const;                         // class of V_{chi^{-1}}
    Label m_label(long long k, CharIdx i) const;   // validated M(k,i)
    Label p_label(CharIdx j) const;                // normalized P[[j]]

    long long dim(const Label& l) const;
    bool projective(const Label& l) const;
    Label dual_label(const Label& l) const;

    std::string to_string(const Label& l) const;
    Label parse(const std::string& text) const;

private:
    Datum datum_;
    std::vector<Label> basis_;
};

}  // namespace greenring
