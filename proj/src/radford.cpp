#include "greenring/radford.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace greenring {

RPoly RPoly::constant(std::size_t num_x, const Int& c) {
    RPoly p(num_x);
    p.add_term(RMonomial{0, 0, std::vector<long long>(num_x, 0)}, c);
    return p;
}

RPoly RPoly::variable_y(std::size_t num_x, long long e) {
    RPoly p(num_x);
    p.add_term(RMonomial{e, 0, std::vector<long long>(num_x, 0)}, 1);
    return p;
}

RPoly RPoly::variable_z(std::size_t num_x, long long e) {
    RPoly p(num_x);
    p.add_term(RMonomial{0, e, std::vector<long long>(num_x, 0)}, 1);
    return p;
}

RPoly RPoly::variable_x(std::size_t num_x, std::size_t j, long long e) {
    assert(j >= 1 && j <= num_x);
    RPoly p(num_x);
    RMonomial m{0, 0, std::vector<long long>(num_x, 0)};
    m.x[j - 1] = e;
    p.add_term(m, 1);
    return p;
}

void RPoly::add_term(const RMonomial& m, const Int& c) {
    assert(m.x.size() == num_x_);
    Int& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

RPoly RPoly::operator+(const RPoly& rhs) const {
    RPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

RPoly RPoly::operator-(const RPoly& rhs) const {
    RPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

RPoly RPoly::operator*(const RPoly& rhs) const {
    RPoly out(num_x_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            RMonomial m{ma.y + mb.y, ma.z + mb.z, ma.x};
            for (std::size_t j = 0; j < num_x_; ++j) m.x[j] += mb.x[j];
            out.add_term(m, ca * cb);
        }
    return out;
}

RPoly RPoly::operator*(const Int& c) const {
    RPoly out(num_x_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
}

std::string RPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        auto append = [&mono](const std::string& v, long long e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append("Y", m.y);
        append("Z", m.z);
        for (std::size_t j = 0; j < m.x.size(); ++j)
            append("X" + std::to_string(j + 1), m.x[j]);
        if (a != 1 || mono.empty()) {
            os << a.str();
            if (!mono.empty()) os << '*';
        }
        os << mono;
        first = false;
    }
    return os.str();
}

namespace {

// F_n(Y, Z) as an RPoly with the requested number of X slots.
RPoly dickson_rpoly(long long n, std::size_t num_x) {
    DicksonPoly f = DicksonPoly::dickson(n);
    RPoly out(num_x);
    for (const auto& [deg, c] : f.terms())
        out.add_term(RMonomial{deg.first, deg.second, std::vector<long long>(num_x, 0)}, c);
    return out;
}

RPoly y_power_sum(long long n, std::size_t num_x) {
    RPoly out(num_x);
    for (long long t = 0; t < n; ++t)
        out.add_term(RMonomial{t, 0, std::vector<long long>(num_x, 0)}, 1);
    return out;
}

}  // namespace

RadfordPresentation::RadfordPresentation(long long m, long long n) : m_(m), n_(n) {
    if (m < 2 || n < 2)
        throw Error(ErrorKind::InvalidParameters, "presentation needs m > 1 and n >= 2");
    const std::size_t nx = static_cast<std::size_t>(m - 1);
    fn_ = dickson_rpoly(n, nx);
    y_orbit_sum_ = y_power_sum(n, nx);

    const RPoly one = RPoly::constant(nx, 1);
    const RPoly Y = RPoly::variable_y(nx);
    const RPoly Z = RPoly::variable_z(nx);
    const RPoly X1 = RPoly::variable_x(nx, 1);

    relations_.push_back(RPoly::variable_y(nx, n) - one);                   // Y^n - 1
    relations_.push_back((one + Y - Z) * fn_);                              // (1+Y-Z) F_n
    relations_.push_back(Y * X1 - X1);                                      // Y X_1 - X_1
    relations_.push_back(Z * X1 - X1 * Int(2));                             // Z X_1 - 2 X_1
    for (long long j = 2; j <= m - 1; ++j)                                  // X_1^j - n^{j-1} X_j
        relations_.push_back(RPoly::variable_x(nx, 1, j) -
                             RPoly::variable_x(nx, static_cast<std::size_t>(j)) *
                                 int_pow(n, static_cast<unsigned long>(j - 1)));
    relations_.push_back(RPoly::variable_x(nx, 1, m) -                      // X_1^m - n^{m-2}(sum Y^t) F_n
                         y_orbit_sum_ * fn_ * int_pow(n, static_cast<unsigned long>(m - 2)));

    for (long long i = 0; i < n; ++i)
        for (long long k = 0; k < n; ++k) {
            RPoly p(nx);
            p.add_term(RMonomial{i, k, std::vector<long long>(nx, 0)}, 1);
            basis_.push_back(p);
        }
    for (long long j = 1; j <= m - 1; ++j)
        basis_.push_back(RPoly::variable_x(nx, static_cast<std::size_t>(j)));
}

std::vector<std::string> RadfordPresentation::variable_names() const {
    std::vector<std::string> names = {"Y", "Z"};
    for (long long j = 1; j <= m_ - 1; ++j) names.push_back("X" + std::to_string(j));
    return names;
}

std::vector<std::string> RadfordPresentation::relation_strings() const {
    std::vector<std::string> out;
    for (const RPoly& r : relations_) out.push_back(r.to_string());
    return out;
}

RPoly RadfordPresentation::reduce_pure(const RPoly& p) const {
    const std::size_t nx = static_cast<std::size_t>(m_ - 1);
    // Y exponents mod n first.
    RPoly cur(nx);
    for (const auto& [mo, c] : p.terms()) {
        assert(std::all_of(mo.x.begin(), mo.x.end(), [](long long e) { return e == 0; }));
        cur.add_term(RMonomial{mod_reduce(mo.y, n_), mo.z, mo.x}, c);
    }
    // Z^n -> (1+Y) F_n - Z*(F_n - Z^{n-1}), applied to the highest Z-degree.
    RPoly zn_replacement(nx);
    {
        const RPoly one = RPoly::constant(nx, 1);
        RPoly g = fn_;  // F_n minus its Z-leading term
        g.add_term(RMonomial{0, n_ - 1, std::vector<long long>(nx, 0)}, -1);
        zn_replacement = (one + RPoly::variable_y(nx)) * fn_ - RPoly::variable_z(nx) * g;
    }
    while (true) {
        const RMonomial* worst = nullptr;
        for (const auto& [mo, c] : cur.terms())
            if (mo.z >= n_ && (!worst || mo.z > worst->z)) worst = &mo;
        if (!worst) break;
        RMonomial mo = *worst;
        Int c = cur.terms().at(mo);
        cur.add_term(mo, -c);
        for (const auto& [rm, rc] : zn_replacement.terms()) {
            RMonomial t{mod_reduce(mo.y + rm.y, n_), mo.z - n_ + rm.z, mo.x};
            cur.add_term(t, c * rc);
        }
    }
    return cur;
}

RPoly RadfordPresentation::normal_form(const RPoly& p) const {
    const std::size_t nx = static_cast<std::size_t>(m_ - 1);
    assert(p.num_x() == nx);
    RPoly pure(nx);    // accumulated Y,Z part, reduced at the end
    RPoly xpart(nx);   // accumulated X_w terms, already in normal form
    for (const auto& [mo, c] : p.terms()) {
        long long weight = 0, count = 0;
        for (std::size_t j = 0; j < nx; ++j) {
            weight += static_cast<long long>(j + 1) * mo.x[j];
            count += mo.x[j];
        }
        if (count == 0) {
            pure.add_term(mo, c);
            continue;
        }
        // X monomial: Y acts trivially, Z doubles; the product collapses to a
        // power of X_1 with an n-denominator that the reduction repays.
        Int num = c * int_pow(2, static_cast<unsigned long>(mo.z));
        long long nexp = count - weight;  // running exponent of n (may be < 0)
        while (weight > m_) {
            weight -= m_;
            nexp += m_;
        }
        if (weight == m_) {
            assert(nexp + m_ - 2 >= 0);
            RPoly repl = y_orbit_sum_ * fn_ * (num * int_pow(n_, static_cast<unsigned long>(nexp + m_ - 2)));
            pure = pure + repl;
        } else {
            assert(nexp + weight - 1 >= 0);
            xpart = xpart +
                    RPoly::variable_x(nx, static_cast<std::size_t>(weight)) *
                        (num * int_pow(n_, static_cast<unsigned long>(nexp + weight - 1)));
        }
    }
    return reduce_pure(pure) + xpart;
}

RingElement RadfordPresentation::substitute(const GreenRing& ring, const RPoly& p) const {
    const RingElement a = ring.a();
    const RingElement z = ring.from_label(Label{Label::Kind::M, 2, 0});
    std::vector<RingElement> xs;
    for (long long j = 1; j <= m_ - 1; ++j)
        xs.push_back(ring.from_label(ring.catalog().p_label(j)));
    RingElement total = ring.zero();
    for (const auto& [mo, c] : p.terms()) {
        RingElement term = ring.a_pow(mo.y) * z.pow(static_cast<unsigned long>(mo.z));
        for (std::size_t j = 0; j < xs.size(); ++j)
            term = term * xs[j].pow(static_cast<unsigned long>(mo.x[j]));
        total = total + term * c;
    }
    return total;
}

RadfordG0Presentation::RadfordG0Presentation(long long m, long long n) : m_(m), n_(n) {
    if (m < 2 || n < 2)
        throw Error(ErrorKind::InvalidParameters, "presentation needs m > 1 and n >= 2");
    const std::size_t nx = static_cast<std::size_t>(m - 1);
    const RPoly one = RPoly::constant(nx, 1);
    const RPoly Y = RPoly::variable_y(nx);
    const RPoly X1 = RPoly::variable_x(nx, 1);

    relations_.push_back(RPoly::variable_y(nx, n) - one);  // Y^n - 1
    relations_.push_back(Y * X1 - X1);                     // Y X_1 - X_1
    for (long long j = 2; j <= m - 1; ++j)                 // X_1^j - n^{j-1} X_j
        relations_.push_back(RPoly::variable_x(nx, 1, j) -
                             RPoly::variable_x(nx, static_cast<std::size_t>(j)) *
                                 int_pow(n, static_cast<unsigned long>(j - 1)));
    relations_.push_back(RPoly::variable_x(nx, 1, m) -     // X_1^m - n^{m-1}(1 + Y + ... + Y^{n-1})
                         y_power_sum(n, nx) * int_pow(n, static_cast<unsigned long>(m - 1)));

    for (long long i = 0; i < n; ++i) {
        RPoly p(nx);
        p.add_term(RMonomial{i, 0, std::vector<long long>(nx, 0)}, 1);
        basis_.push_back(p);
    }
    for (long long j = 1; j <= m - 1; ++j)
        basis_.push_back(RPoly::variable_x(nx, static_cast<std::size_t>(j)));
}

std::vector<std::string> RadfordG0Presentation::variable_names() const {
    std::vector<std::string> names = {"Y"};
    for (long long j = 1; j <= m_ - 1; ++j) names.push_back("X" + std::to_string(j));
    return names;
}

std::vector<std::string> RadfordG0Presentation::relation_strings() const {
    std::vector<std::string> out;
    for (const RPoly& r : relations_) out.push_back(r.to_string());
    return out;
}

RPoly RadfordG0Presentation::normal_form(const RPoly& p) const {
    const std::size_t nx = static_cast<std::size_t>(m_ - 1);
    assert(p.num_x() == nx);
    RPoly out(nx);
    for (const auto& [mo, c] : p.terms()) {
        assert(mo.z == 0);
        long long weight = 0, count = 0;
        for (std::size_t j = 0; j < nx; ++j) {
            weight += static_cast<long long>(j + 1) * mo.x[j];
            count += mo.x[j];
        }
        if (count == 0) {
            out.add_term(RMonomial{mod_reduce(mo.y, n_), 0, mo.x}, c);
            continue;
        }
        Int num = c;
        long long nexp = count - weight;
        while (weight > m_) {
            weight -= m_;
            nexp += m_;
        }
        if (weight == m_) {
            assert(nexp + m_ - 1 >= 0);
            out = out + y_power_sum(n_, nx) *
                            (num * int_pow(n_, static_cast<unsigned long>(nexp + m_ - 1)));
        } else {
            assert(nexp + weight - 1 >= 0);
            out = out + RPoly::variable_x(nx, static_cast<std::size_t>(weight)) *
                            (num * int_pow(n_, static_cast<unsigned long>(nexp + weight - 1)));
        }
    }
    return out;
}

G0Element RadfordG0Presentation::substitute(const Grothendieck& g0, const RPoly& p) const {
    const Datum& d = g0.datum();
    G0Element total = g0.zero();
    for (const auto& [mo, c] : p.terms()) {
        G0Element term = g0.from_label(G0Label{G0Label::Kind::V, d.tau_pow(0, mo.y)});
        for (std::size_t j = 0; j < mo.x.size(); ++j) {
            G0Element xj = g0.from_label(G0Label{G0Label::Kind::P, d.orbit_rep(static_cast<CharIdx>(j + 1))});
            for (long long e = 0; e < mo.x[j]; ++e) term = g0.g0_multiply(term, xj);
        }
        total = total + term * c;
    }
    return total;
}

namespace {

IntMatrix image_lattice(const GreenRing& ring, const std::vector<RingElement>& images) {
    return ring.coordinate_matrix(images).hnf();
}

}  // namespace

PresentationReport verify_presentation(long long m, long long n) {
    Datum d = Datum::radford(m, n);
    GreenRing ring(d);
    RadfordPresentation pres(m, n);

    PresentationReport report;
    report.m = m;
    report.n = n;
    report.expected_rank = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(m) - 1;

    for (const RPoly& rel : pres.relations()) {
        if (!pres.substitute(ring, rel).is_zero()) {
            report.relations_vanish = false;
            report.nonvanishing_relations.push_back(rel.to_string());
        }
    }

    std::vector<RingElement> images;
    for (const RPoly& b : pres.basis_monomials()) images.push_back(pres.substitute(ring, b));
    IntMatrix lat = image_lattice(ring, images);
    report.rank = lat.rows();
    report.surjective = (lat == IntMatrix::identity(ring.rank()));

    for (const RPoly& u : pres.basis_monomials())
        for (const RPoly& v : pres.basis_monomials()) {
            RingElement lhs = pres.substitute(ring, pres.normal_form(u * v));
            RingElement rhs = pres.substitute(ring, u) * pres.substitute(ring, v);
            if (!(lhs == rhs))
                report.table_mismatches.push_back(u.to_string() + " * " + v.to_string());
        }

    {
        const std::size_t nx = static_cast<std::size_t>(m - 1);
        RPoly gen = (RPoly::constant(nx, 1) - RPoly::variable_y(nx)) * dickson_rpoly(n, nx);
        RingElement lhs = pres.substitute(ring, gen);
        RingElement rhs =
            (ring.unit() - ring.a()) * ring.from_label(Label{Label::Kind::M, n, 0});
        report.radical_generator_matches = (lhs == rhs);
    }
    return report;
}

PresentationReport verify_g0_presentation(long long m, long long n) {
    Datum d = Datum::radford(m, n);
    GreenRing ring(d);
    Grothendieck g0(ring);
    RadfordG0Presentation pres(m, n);

    PresentationReport report;
    report.m = m;
    report.n = n;
    report.expected_rank = static_cast<std::size_t>(n) + static_cast<std::size_t>(m) - 1;

    for (const RPoly& rel : pres.relations()) {
        if (!pres.substitute(g0, rel).is_zero()) {
            report.relations_vanish = false;
            report.nonvanishing_relations.push_back(rel.to_string());
        }
    }

    IntMatrix coords(pres.basis_monomials().size(), g0.rank());
    for (std::size_t i = 0; i < pres.basis_monomials().size(); ++i) {
        G0Element img = pres.substitute(g0, pres.basis_monomials()[i]);
        for (const auto& [pos, c] : img.coeffs()) coords.at(i, pos) = c;
    }
    IntMatrix lat = coords.hnf();
    report.rank = lat.rows();
    report.surjective = (lat == IntMatrix::identity(g0.rank()));

    for (const RPoly& u : pres.basis_monomials())
        for (const RPoly& v : pres.basis_monomials()) {
            G0Element lhs = pres.substitute(g0, pres.normal_form(u * v));
            G0Element rhs = g0.g0_multiply(pres.substitute(g0, u), pres.substitute(g0, v));
            if (!(lhs == rhs))
                report.table_mismatches.push_back(u.to_string() + " * " + v.to_string());
        }

    // no radical-generator clause at the G_0 level
    report.radical_generator_matches = true;
    return report;
}

}  // namespace greenring
