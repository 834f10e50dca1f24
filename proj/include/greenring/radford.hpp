#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenring/grothendieck.hpp"
#include "greenring/stable.hpp"

namespace greenring {

// Monomial Y^y Z^z X_1^{x[0]} ... X_{m-1}^{x[m-2]}.
struct RMonomial {
    long long y = 0;
    long long z = 0;
    std::vector<long long> x;

    friend auto operator<=>(const RMonomial&, const RMonomial&) = default;
};

// Sparse integer polynomial in Y, Z and the X_j.
class RPoly {
public:
    RPoly() = default;
    explicit RPoly(std::size_t num_x) : num_x_(num_x) {}

    static RPoly constant(std::size_t num_x, const Int& c);
    static RPoly variable_y(std::size_t num_x, long long e = 1);
    static RPoly variable_z(std::size_t num_x, long long e = 1);
    static RPoly variable_x(std::size_t num_x, std::size_t j, long long e = 1);  // 1-based j

    std::size_t num_x() const { return num_x_; }
    const std::map<RMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RPoly operator+(const RPoly& rhs) const;
    RPoly operator-(const RPoly& rhs) const;
    RPoly operator*(const RPoly& rhs) const;
    RPoly operator*(const Int& c) const;
    bool operator==(const RPoly& rhs) const { return terms_ == rhs.terms_; }

    void add_term(const RMonomial& m, const Int& c);
    std::string to_string() const;

private:
    std::size_t num_x_ = 0;
    std::map<RMonomial, Int> terms_;
};

// The presentation Z[Y, Z, X_1..X_{m-1}] / I of the Green ring of the Radford
// Hopf algebra for parameters (m, n), together with normal-form rewriting
// onto the basis { Y^i Z^k : 0 <= i,k <= n-1 } u { X_j }.
class RadfordPresentation {
public:
    RadfordPresentation(long long m, long long n);

    long long m() const { return m_; }
    long long n() const { return n_; }
    std::vector<std::string> variable_names() const;
    const std::vector<RPoly>& relations() const { return relations_; }
    std::vector<std::string> relation_strings() const;

    // Basis monomials in a fixed order: Y^i Z^k sorted by (i,k), then X_j.
    const std::vector<RPoly>& basis_monomials() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }  // n^2 + m - 1

    RPoly normal_form(const RPoly& p) const;

    // Substitution Y -> a, Z -> M[2,0], X_j -> P[[j]].
    RingElement substitute(const GreenRing& ring, const RPoly& p) const;

private:
    RPoly reduce_pure(const RPoly& p) const;   // no X variables involved
    long long m_, n_;
    RPoly fn_;                                  // F_n(Y, Z) as an RPoly
    RPoly y_orbit_sum_;                         // 1 + Y + ... + Y^{n-1}
    std::vector<RPoly> relations_;
    std::vector<RPoly> basis_;
};

// The presentation Z[Y, X_1..X_{m-1}] / I_0 of the Grothendieck ring.
class RadfordG0Presentation {
public:
    RadfordG0Presentation(long long m, long long n);

    long long m() const { return m_; }
    long long n() const { return n_; }
    std::vector<std::string> variable_names() const;
    const std::vector<RPoly>& relations() const { return relations_; }
    std::vector<std::string> relation_strings() const;

    const std::vector<RPoly>& basis_monomials() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }  // n + m - 1

    RPoly normal_form(const RPoly& p) const;

    // Substitution Y -> [V_{tau(0)}], X_j -> P[[j]].
    G0Element substitute(const Grothendieck& g0, const RPoly& p) const;

private:
    long long m_, n_;
    std::vector<RPoly> relations_;
    std::vector<RPoly> basis_;
};

struct PresentationReport {
    long long m = 0, n = 0;
    std::size_t rank = 0, expected_rank = 0;
    bool relations_vanish = true;
    std::vector<std::string> nonvanishing_relations;
    bool surjective = false;                 // basis images span the full lattice
    std::vector<std::string> table_mismatches;
    bool radical_generator_matches = false;  // r(H) presentation only
    bool ok() const {
        return relations_vanish && rank == expected_rank && surjective &&
               table_mismatches.empty() && radical_generator_matches;
    }
};

PresentationReport verify_presentation(long long m, long long n);
PresentationReport verify_g0_presentation(long long m, long long n);

}  // namespace greenring
