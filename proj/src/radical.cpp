#include "greenring/radical.hpp"

#include <cassert>

namespace greenring {

std::vector<RingElement> Lattice::elements(const GreenRing& ring) const {
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::map<std::size_t, Int> coeffs;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (basis.at(i, j) != 0) coeffs[j] = basis.at(i, j);
        out.emplace_back(&ring, std::move(coeffs));
    }
    return out;
}

namespace {

// rows: the given ring elements, cols: the G_0 basis.
IntMatrix phi_matrix(const Grothendieck& g0, const std::vector<RingElement>& elems) {
    IntMatrix m(elems.size(), g0.rank());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        G0Element image = g0.phi(elems[i]);
        for (const auto& [pos, c] : image.coeffs()) m.at(i, pos) = c;
    }
    return m;
}

// Lift kernel rows (coordinates over `elems`) back to full-basis coordinates.
Lattice lift_kernel(const Grothendieck& g0, const std::vector<RingElement>& elems,
                    const IntMatrix& kernel_rows) {
    const GreenRing& ring = g0.ring();
    IntMatrix coords = ring.coordinate_matrix(elems);
    IntMatrix lifted;
    for (std::size_t i = 0; i < kernel_rows.rows(); ++i) {
        std::vector<Int> v(ring.rank(), Int(0));
        for (std::size_t k = 0; k < elems.size(); ++k)
            for (std::size_t j = 0; j < ring.rank(); ++j)
                v[j] += kernel_rows.at(i, k) * coords.at(k, j);
        lifted.append_row(v);
    }
    if (lifted.rows() == 0) return Lattice{IntMatrix(0, ring.rank())};
    return Lattice{lifted.hnf()};
}

}  // namespace

Lattice radical_lattice(const Grothendieck& g0) {
    std::vector<RingElement> proj;
    for (const Label& l : g0.projective_basis()) proj.push_back(g0.ring().from_label(l));
    IntMatrix kernel = phi_matrix(g0, proj).left_kernel();
    return lift_kernel(g0, proj, kernel);
}

Lattice phi_kernel_lattice(const Grothendieck& g0) {
    std::vector<RingElement> all;
    for (std::size_t p = 0; p < g0.ring().rank(); ++p) all.push_back(g0.ring().basis_element(p));
    IntMatrix kernel = phi_matrix(g0, all).left_kernel();
    return lift_kernel(g0, all, kernel);
}

Lattice projective_orthogonal_lattice(const Grothendieck& g0) {
    const GreenRing& ring = g0.ring();
    const auto& proj = g0.projective_basis();
    // Gram matrix of the form between the full basis and the projectives.
    IntMatrix gram(ring.rank(), proj.size());
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < proj.size(); ++j)
            gram.at(i, j) = ring.bilinear_form(ring.basis_element(i), ring.from_label(proj[j]));
    IntMatrix kernel = gram.left_kernel();
    return Lattice{kernel.rows() == 0 ? IntMatrix(0, ring.rank()) : kernel.hnf()};
}

Lattice projective_lattice(const Grothendieck& g0) {
    const GreenRing& ring = g0.ring();
    IntMatrix m(g0.projective_basis().size(), ring.rank());
    for (std::size_t i = 0; i < g0.projective_basis().size(); ++i)
        m.at(i, ring.catalog().position(g0.projective_basis()[i])) = 1;
    return Lattice{m.hnf()};
}

PrincipalGeneratorReport principal_generator_check(const Grothendieck& g0) {
    const GreenRing& ring = g0.ring();
    PrincipalGeneratorReport report;
    report.generator =
        (ring.unit() - ring.a()) * ring.from_label(Label{Label::Kind::M, ring.datum().n(), 0});
    std::vector<RingElement> products;
    for (std::size_t p = 0; p < ring.rank(); ++p)
        products.push_back(report.generator * ring.basis_element(p));
    IntMatrix span = ring.coordinate_matrix(products);
    report.ideal = Lattice{span.hnf()};
    report.radical = radical_lattice(g0);
    report.matches = lattice_equal(report.ideal.basis, report.radical.basis);
    return report;
}

bool is_idempotent(const RingElement& x) {
    if (x.is_zero()) return true;
    return x * x == x;
}

IdempotentSearchReport bounded_idempotent_search(const GreenRing& ring, int coeff_bound,
                                                 int max_support) {
    IdempotentSearchReport report;
    report.coeff_bound = coeff_bound;
    report.max_support = max_support;
    const std::size_t B = ring.rank();
    const RingElement unit = ring.unit();

    std::vector<Int> coeff_values;
    for (int c = -coeff_bound; c <= coeff_bound; ++c)
        if (c != 0) coeff_values.push_back(c);

    std::vector<std::size_t> support;
    auto test_support = [&]() {
        const std::size_t s = support.size();
        std::vector<std::size_t> pick(s, 0);
        while (true) {
            std::map<std::size_t, Int> coeffs;
            for (std::size_t t = 0; t < s; ++t) coeffs[support[t]] = coeff_values[pick[t]];
            RingElement x(&ring, std::move(coeffs));
            ++report.candidates_tested;
            if (is_idempotent(x)) {
                if (x == unit)
                    report.unit_found = true;
                else
                    report.nontrivial.push_back(ring.to_string(x));
            }
            std::size_t t = 0;
            while (t < s && ++pick[t] == coeff_values.size()) pick[t++] = 0;
            if (t == s) break;
        }
    };

    // all supports of size 1..max_support
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!support.empty()) test_support();
        if (static_cast<int>(support.size()) == max_support) return;
        for (std::size_t i = start; i < B; ++i) {
            support.push_back(i);
            self(self, i + 1);
            support.pop_back();
        }
    };
    rec(rec, 0);
    return report;
}

}  // namespace greenring
