#include "greenring/stable.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace greenring {

StableElement::StableElement(const StableRing* ring, std::map<std::size_t, Int> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

DicksonPoly DicksonPoly::dickson(long long j) {
    if (j < 1) throw Error(ErrorKind::NonPositiveIndex, "Dickson index must be >= 1");
    DicksonPoly f1, f2;
    f1.terms_[{0, 0}] = 1;  // F_1 = 1
    if (j == 1) return f1;
    f2.terms_[{0, 1}] = 1;  // F_2 = Z
    if (j == 2) return f2;
    DicksonPoly prev = f1, cur = f2;
    for (long long t = 3; t <= j; ++t) {
        DicksonPoly next;
        for (const auto& [deg, c] : cur.terms_) next.terms_[{deg.first, deg.second + 1}] += c;
        for (const auto& [deg, c] : prev.terms_) next.terms_[{deg.first + 1, deg.second}] -= c;
        for (auto it = next.terms_.begin(); it != next.terms_.end();)
            it = (it->second == 0) ? next.terms_.erase(it) : std::next(it);
        prev = cur;
        cur = next;
    }
    return cur;
}

long long DicksonPoly::z_degree() const {
    long long d = 0;
    for (const auto& [deg, c] : terms_) d = std::max(d, deg.second);
    return d;
}

double DicksonPoly::evaluate(double y, double z) const {
    double total = 0.0;
    for (const auto& [deg, c] : terms_)
        total += c.convert_to<double>() * std::pow(y, static_cast<double>(deg.first)) *
                 std::pow(z, static_cast<double>(deg.second));
    return total;
}

RingElement DicksonPoly::evaluate(const RingElement& y, const RingElement& z) const {
    const GreenRing* ring = y.ring() ? y.ring() : z.ring();
    RingElement total = ring->zero();
    for (const auto& [deg, c] : terms_)
        total = total + y.pow(static_cast<unsigned long>(deg.first)) *
                            z.pow(static_cast<unsigned long>(deg.second)) * c;
    return total;
}

std::string DicksonPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest Z-degree first
    std::vector<std::pair<std::pair<long long, long long>, Int>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    for (const auto& [deg, c] : ts) {
        Int a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        if (deg.first > 0) mono += "Y" + (deg.first > 1 ? "^" + std::to_string(deg.first) : "");
        if (deg.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "Z" + (deg.second > 1 ? "^" + std::to_string(deg.second) : "");
        }
        if (a != 1 || mono.empty()) {
            os << a.str();
            if (!mono.empty()) os << '*';
        }
        os << mono;
        first = false;
    }
    return os.str();
}

StableRing::StableRing(const GreenRing& ring) : ring_(&ring) {
    const Catalog& cat = ring.catalog();
    for (std::size_t p = 0; p < cat.size(); ++p) {
        if (cat.projective(cat.label_at(p))) continue;
        basis_.push_back(cat.label_at(p));
        ring_position_.push_back(p);
    }
    if (basis_.empty())
        throw Error(ErrorKind::EmptyStableBasis, "stable basis is empty");
}

std::size_t StableRing::position(const Label& l) const {
    auto it = std::find(basis_.begin(), basis_.end(), l);
    if (it == basis_.end()) {
        if (l.kind == Label::Kind::M && (l.k < 1 || l.k >= datum().n()))
            throw Error(ErrorKind::IndexOutOfRange, "stable label length must be in 1..n-1");
        throw Error(ErrorKind::IndexOutOfRange, "label not in the stable basis");
    }
    return static_cast<std::size_t>(it - basis_.begin());
}

StableElement StableRing::unit() const { return from_label(ring_->catalog().unit()); }

StableElement StableRing::from_label(const Label& l) const {
    return StableElement(this, {{position(l), Int(1)}});
}

StableElement StableRing::project(const RingElement& x) const {
    const Catalog& cat = ring_->catalog();
    std::map<std::size_t, Int> out;
    for (const auto& [pos, c] : x.coeffs()) {
        const Label& l = cat.label_at(pos);
        if (cat.projective(l)) continue;
        out[position(l)] += c;
    }
    return StableElement(this, std::move(out));
}

RingElement StableRing::lift(const StableElement& x) const {
    std::map<std::size_t, Int> out;
    for (const auto& [pos, c] : x.coeffs()) out[ring_position_[pos]] = c;
    return RingElement(ring_, std::move(out));
}

StableElement StableRing::multiply(const StableElement& x, const StableElement& y) const {
    if ((x.ring() && x.ring() != this) || (y.ring() && y.ring() != this)) {
        if ((x.ring() && !(x.ring()->datum() == datum())) ||
            (y.ring() && !(y.ring()->datum() == datum())))
            throw Error(ErrorKind::DatumMismatch, "elements belong to different group data");
    }
    return project(lift(x) * lift(y));
}

Label StableRing::dual_basis_label(const Label& l) const {
    return ring_->catalog().dual_label(l);
}

FusionReport StableRing::fusion_axioms_check() const {
    FusionReport report;
    const std::size_t B = basis_.size();
    const GreenRing& ring = *ring_;

    // (1) structure constants are non-negative integers
    FusionCheck nonneg{"nonnegative_structure_constants", true, ""};
    std::vector<std::vector<StableElement>> products(B, std::vector<StableElement>(B));
    for (std::size_t p = 0; p < B && nonneg.pass; ++p)
        for (std::size_t q = 0; q < B; ++q) {
            products[p][q] = multiply(from_label(basis_[p]), from_label(basis_[q]));
            for (const auto& [pos, c] : products[p][q].coeffs())
                if (c < 0) {
                    nonneg.pass = false;
                    nonneg.witness = ring.catalog().to_string(basis_[p]) + " * " +
                                     ring.catalog().to_string(basis_[q]);
                    break;
                }
            if (!nonneg.pass) break;
        }
    if (nonneg.pass)
        for (std::size_t p = 0; p < B; ++p)
            for (std::size_t q = 0; q < B; ++q)
                if (!(products[p][q] == products[q][p])) {
                    nonneg.pass = false;
                    nonneg.witness = "commutativity failure";
                }
    report.checks.push_back(nonneg);

    // (2) the unit is a basis element
    FusionCheck unit_check{"unit_is_basis_element", true, ""};
    {
        StableElement one = unit();
        if (one.coeffs().size() != 1 || one.coeffs().begin()->second != 1) {
            unit_check.pass = false;
            unit_check.witness = to_string(one);
        }
        for (std::size_t q = 0; q < B && unit_check.pass; ++q) {
            if (!(multiply(one, from_label(basis_[q])) == from_label(basis_[q]))) {
                unit_check.pass = false;
                unit_check.witness = "unit law fails at " + ring.catalog().to_string(basis_[q]);
            }
        }
    }
    report.checks.push_back(unit_check);

    // (3) psi(x) = (delta_unit^*, x) is well defined on the quotient and
    //     psi(b_i b_j) = [i == j*]
    FusionCheck psi_check{"psi_duality_pairing", true, ""};
    {
        RingElement dstar = ring.dualize(ring.delta_unit());
        for (const Label& p : ring.catalog().basis()) {
            if (!ring.catalog().projective(p)) continue;
            if (ring.bilinear_form(dstar, ring.from_label(p)) != 0) {
                psi_check.pass = false;
                psi_check.witness = "psi not zero on " + ring.catalog().to_string(p);
                break;
            }
        }
        for (std::size_t p = 0; p < B && psi_check.pass; ++p)
            for (std::size_t q = 0; q < B; ++q) {
                Int value = ring.bilinear_form(dstar, lift(products[p][q]));
                Int expected = dual_basis_label(basis_[q]) == basis_[p] ? 1 : 0;
                if (value != expected) {
                    psi_check.pass = false;
                    psi_check.witness = ring.catalog().to_string(basis_[p]) + " * " +
                                        ring.catalog().to_string(basis_[q]);
                    break;
                }
            }
    }
    report.checks.push_back(psi_check);

    // (4) the index involution is an involutive ring morphism
    FusionCheck inv_check{"involution", true, ""};
    {
        for (std::size_t p = 0; p < B && inv_check.pass; ++p) {
            Label d = dual_basis_label(basis_[p]);
            if (std::find(basis_.begin(), basis_.end(), d) == basis_.end() ||
                !(dual_basis_label(d) == basis_[p])) {
                inv_check.pass = false;
                inv_check.witness = ring.catalog().to_string(basis_[p]);
            }
        }
        for (std::size_t p = 0; p < B && inv_check.pass; ++p)
            for (std::size_t q = 0; q < B; ++q) {
                StableElement lhs = project(ring.dualize(lift(products[p][q])));
                StableElement rhs = multiply(from_label(dual_basis_label(basis_[p])),
                                             from_label(dual_basis_label(basis_[q])));
                if (!(lhs == rhs)) {
                    inv_check.pass = false;
                    inv_check.witness = ring.catalog().to_string(basis_[p]) + " * " +
                                        ring.catalog().to_string(basis_[q]);
                    break;
                }
            }
    }
    report.checks.push_back(inv_check);

    // (5) transitivity: every b_j appears in some b_i * b_k
    FusionCheck trans_check{"transitivity", true, ""};
    for (std::size_t i = 0; i < B && trans_check.pass; ++i)
        for (std::size_t j = 0; j < B; ++j) {
            bool found = false;
            for (std::size_t k = 0; k < B && !found; ++k)
                for (const auto& [pos, c] : products[i][k].coeffs())
                    if (pos == j && c > 0) { found = true; break; }
            if (!found) {
                trans_check.pass = false;
                trans_check.witness = ring.catalog().to_string(basis_[i]) + " -> " +
                                      ring.catalog().to_string(basis_[j]);
                break;
            }
        }
    report.checks.push_back(trans_check);

    return report;
}

std::vector<std::vector<Int>> StableRing::mult_matrix(const Label& b) const {
    const std::size_t B = basis_.size();
    std::vector<std::vector<Int>> m(B, std::vector<Int>(B, Int(0)));
    StableElement eb = from_label(b);
    for (std::size_t q = 0; q < B; ++q) {
        StableElement prod = multiply(eb, from_label(basis_[q]));
        for (const auto& [pos, c] : prod.coeffs()) m[q][pos] = c;
    }
    return m;
}

double StableRing::fpdim_eigen(const Label& b) const {
    const std::size_t B = basis_.size();
    std::vector<std::vector<double>> n(B, std::vector<double>(B, 0.0));
    {
        auto m = mult_matrix(b);
        for (std::size_t i = 0; i < B; ++i)
            for (std::size_t j = 0; j < B; ++j) n[i][j] = m[i][j].convert_to<double>();
    }
    auto apply = [&](const std::vector<double>& v) {
        std::vector<double> w(B, 0.0);
        for (std::size_t i = 0; i < B; ++i)
            for (std::size_t j = 0; j < B; ++j) w[i] += n[i][j] * v[j];
        return w;
    };
    // Power iteration on N + I; the shift makes the Perron root strictly
    // dominant in modulus, and the all-ones start overlaps the Perron vector.
    std::vector<double> v(B, 1.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 1000000; ++iter) {
        std::vector<double> w = apply(v);
        for (std::size_t i = 0; i < B; ++i) w[i] += v[i];
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, std::fabs(x));
        assert(norm > 0.0);
        for (double& x : w) x /= norm;
        std::vector<double> nw = apply(w);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < B; ++i) {
            num += w[i] * nw[i];
            den += w[i] * w[i];
        }
        lambda = num / den;
        double residual = 0.0;
        for (std::size_t i = 0; i < B; ++i)
            residual = std::max(residual, std::fabs(nw[i] - lambda * w[i]));
        v = w;
        if (residual <= 1e-13 * (1.0 + std::fabs(lambda))) break;
    }
    return lambda;
}

double StableRing::fpdim_closed(const Label& b) const {
    if (b.kind != Label::Kind::M || b.k < 1 || b.k >= datum().n())
        throw Error(ErrorKind::IndexOutOfRange, "closed form needs M(j,i) with 1 <= j <= n-1");
    const double z = 2.0 * std::cos(M_PI / static_cast<double>(datum().n()));
    return DicksonPoly::dickson(b.k).evaluate(1.0, z);
}

std::vector<FPDimEntry> StableRing::fpdim_table() const {
    std::vector<FPDimEntry> table;
    for (const Label& b : basis_) {
        FPDimEntry e;
        e.label = ring_->catalog().to_string(b);
        e.eigen = fpdim_eigen(b);
        e.closed = fpdim_closed(b);
        e.abs_diff = std::fabs(e.eigen - e.closed);
        table.push_back(e);
    }
    return table;
}

std::string StableRing::to_string(const StableElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pos, c] : x.coeffs()) {
        Int a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a.str() << '*';
        os << ring_->catalog().to_string(basis_[pos]);
        first = false;
    }
    return os.str();
}

}  // namespace greenring
