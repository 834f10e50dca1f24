#pragma once

#include <string>
#include <vector>

#include "greenring/grothendieck.hpp"

namespace greenring {

// Integer lattice inside r(H), rows in HNF coordinates over the full basis.
struct Lattice {
    IntMatrix basis;

    std::size_t rank() const { return basis.rows(); }
    std::vector<RingElement> elements(const GreenRing& ring) const;
};

struct PrincipalGeneratorReport {
    bool matches = false;
    RingElement generator;        // (1 - a) * M[n,0]
    Lattice ideal;                // lattice spanned by generator * basis
    Lattice radical;
};

struct IdempotentSearchReport {
    int coeff_bound = 1;
    int max_support = 3;
    unsigned long long candidates_tested = 0;
    bool unit_found = false;                 // 1 shows up as the only support>=1 hit
    std::vector<std::string> nontrivial;     // idempotents other than 0 and 1
};

// Jacobson radical of r(H) as the kernel of the Cartan map restricted to the
// projective ideal.
Lattice radical_lattice(const Grothendieck& g0);

// Kernel of phi on all of r(H), as a lattice over the full basis.
Lattice phi_kernel_lattice(const Grothendieck& g0);

// Orthogonal complement of the projective ideal w.r.t. the bilinear form,
// computed independently of phi.
Lattice projective_orthogonal_lattice(const Grothendieck& g0);

// Lattice spanned by the projective basis labels.
Lattice projective_lattice(const Grothendieck& g0);

PrincipalGeneratorReport principal_generator_check(const Grothendieck& g0);

bool is_idempotent(const RingElement& x);

IdempotentSearchReport bounded_idempotent_search(const GreenRing& ring,
                                                 int coeff_bound = 1,
                                                 int max_support = 3);

}  // namespace greenring
