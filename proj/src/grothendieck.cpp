#include "greenring/grothendieck.hpp"

#include <algorithm>
#include <sstream>

namespace greenring {

G0Element::G0Element(const Grothendieck* g0, std::map<std::size_t, Int> coeffs)
    : g0_(g0), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

G0Element G0Element::operator+(const G0Element& rhs) const {
    std::map<std::size_t, Int> sum = coeffs_;
    for (const auto& [pos, c] : rhs.coeffs_) sum[pos] += c;
    return G0Element(g0_ ? g0_ : rhs.g0_, std::move(sum));
}

G0Element G0Element::operator-(const G0Element& rhs) const {
    std::map<std::size_t, Int> diff = coeffs_;
    for (const auto& [pos, c] : rhs.coeffs_) diff[pos] -= c;
    return G0Element(g0_ ? g0_ : rhs.g0_, std::move(diff));
}

G0Element G0Element::operator*(const Int& scalar) const {
    std::map<std::size_t, Int> out = coeffs_;
    for (auto& [pos, c] : out) c *= scalar;
    return G0Element(g0_, std::move(out));
}

std::vector<Int> G0Element::dense(std::size_t size) const {
    std::vector<Int> v(size, Int(0));
    for (const auto& [pos, c] : coeffs_) v[pos] = c;
    return v;
}

Grothendieck::Grothendieck(const GreenRing& ring) : ring_(&ring) {
    const Datum& d = ring.datum();
    for (const auto& orbit : d.orbit_table().orbits0) {
        for (CharIdx i : orbit) {
            basis_.push_back(G0Label{G0Label::Kind::V, i});
            proj_basis_.push_back(Label{Label::Kind::M, d.n(), i});
        }
    }
    for (CharIdx j : d.orbit_reps1()) {
        basis_.push_back(G0Label{G0Label::Kind::P, j});
        proj_basis_.push_back(Label{Label::Kind::P, 0, j});
    }
}

std::size_t Grothendieck::position(const G0Label& l) const {
    auto it = std::find(basis_.begin(), basis_.end(), l);
    if (it == basis_.end())
        throw Error(ErrorKind::MalformedTuple, "label not in G_0 basis");
    return static_cast<std::size_t>(it - basis_.begin());
}

std::string Grothendieck::label_string(const G0Label& l) const {
    std::ostringstream os;
    if (l.kind == G0Label::Kind::V)
        os << "V(" << datum().tuple_string(l.idx) << ')';
    else
        os << "P[" << datum().tuple_string(l.idx) << ']';
    return os.str();
}

G0Element Grothendieck::from_label(const G0Label& l) const {
    return G0Element(this, {{position(l), Int(1)}});
}

G0Element Grothendieck::phi(const RingElement& x) const {
    const Datum& d = datum();
    std::map<std::size_t, Int> out;
    for (const auto& [pos, c] : x.coeffs()) {
        const Label& l = ring_->catalog().label_at(pos);
        if (l.kind == Label::Kind::P) {
            out[position(G0Label{G0Label::Kind::P, l.idx})] += c;
        } else {
            // M[k,i] has composition factors V_{tau^t(i)}, t = 0..k-1
            for (long long t = 0; t < l.k; ++t)
                out[position(G0Label{G0Label::Kind::V, d.tau_pow(l.idx, t)})] += c;
        }
    }
    return G0Element(this, std::move(out));
}

std::map<std::size_t, Int> Grothendieck::multiply_labels(const G0Label& x,
                                                         const G0Label& y) const {
    const Datum& d = datum();
    std::map<std::size_t, Int> out;
    const CharIdx s = d.char_product(x.idx, y.idx);
    if (x.kind == G0Label::Kind::V && y.kind == G0Label::Kind::V) {
        out[position(G0Label{G0Label::Kind::V, s})] += 1;
    } else if (x.kind == G0Label::Kind::P && y.kind == G0Label::Kind::P) {
        if (d.in_omega0(s)) {
            for (long long t = 0; t < d.n(); ++t)
                out[position(G0Label{G0Label::Kind::V, d.tau_pow(s, t)})] += d.n();
        } else {
            out[position(G0Label{G0Label::Kind::P, d.orbit_rep(s)})] += d.n();
        }
    } else {
        out[position(G0Label{G0Label::Kind::P, d.orbit_rep(s)})] += 1;
    }
    return out;
}

G0Element Grothendieck::g0_multiply(const G0Element& x, const G0Element& y) const {
    if ((x.context() && x.context() != this && !(x.context()->datum() == datum())) ||
        (y.context() && y.context() != this && !(y.context()->datum() == datum())))
        throw Error(ErrorKind::DatumMismatch, "elements belong to different group data");
    std::map<std::size_t, Int> out;
    for (const auto& [p, a] : x.coeffs())
        for (const auto& [q, b] : y.coeffs()) {
            const Int ab = a * b;
            for (const auto& [pos, c] : multiply_labels(basis_[p], basis_[q]))
                out[pos] += ab * c;
        }
    return G0Element(this, std::move(out));
}

CartanMatrix Grothendieck::cartan_matrix() const {
    CartanMatrix cm;
    cm.entries = IntMatrix(basis_.size(), proj_basis_.size());
    for (std::size_t col = 0; col < proj_basis_.size(); ++col) {
        G0Element image = phi(ring_->from_label(proj_basis_[col]));
        for (const auto& [row, c] : image.coeffs()) cm.entries.at(row, col) = c;
    }
    for (const G0Label& l : basis_) cm.row_labels.push_back(label_string(l));
    for (const Label& l : proj_basis_) cm.col_labels.push_back(ring_->catalog().to_string(l));
    return cm;
}

CharRingElement Grothendieck::embed_into_rkG(const G0Element& x) const {
    const Datum& d = datum();
    CharRingElement out;
    for (const auto& [pos, c] : x.coeffs()) {
        const G0Label& l = basis_[pos];
        if (l.kind == G0Label::Kind::V) {
            out[l.idx] += c;
        } else {
            for (long long t = 0; t < d.n(); ++t) out[d.tau_pow(l.idx, t)] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

CharRingElement char_ring_multiply(const Datum& d, const CharRingElement& x,
                                   const CharRingElement& y) {
    CharRingElement out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out[d.char_product(i, j)] += a * b;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::string Grothendieck::to_string(const G0Element& x) const {
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
        os << label_string(basis_[pos]);
        first = false;
    }
    return os.str();
}

}  // namespace greenring
