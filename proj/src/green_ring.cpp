#include "greenring/green_ring.hpp"

#include <cassert>
#include <sstream>

namespace greenring {

RingElement::RingElement(const GreenRing* ring, std::map<std::size_t, Int> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

const Int& RingElement::coeff(std::size_t pos) const {
    static const Int zero = 0;
    auto it = coeffs_.find(pos);
    return it == coeffs_.end() ? zero : it->second;
}

namespace {

const GreenRing* common_ring(const RingElement& a, const RingElement& b) {
    if (a.ring() == nullptr) return b.ring();
    if (b.ring() == nullptr) return a.ring();
    if (a.ring() == b.ring()) return a.ring();
    if (a.ring()->datum() == b.ring()->datum()) return a.ring();
    throw Error(ErrorKind::DatumMismatch, "elements belong to different group data");
}

}  // namespace

RingElement RingElement::operator+(const RingElement& rhs) const {
    const GreenRing* ring = common_ring(*this, rhs);
    std::map<std::size_t, Int> sum = coeffs_;
    for (const auto& [pos, c] : rhs.coeffs_) sum[pos] += c;
    return RingElement(ring, std::move(sum));
}

RingElement RingElement::operator-(const RingElement& rhs) const {
    return *this + (-rhs);
}

RingElement RingElement::operator-() const {
    std::map<std::size_t, Int> neg = coeffs_;
    for (auto& [pos, c] : neg) c = -c;
    return RingElement(ring_, std::move(neg));
}

RingElement RingElement::operator*(const RingElement& rhs) const {
    const GreenRing* ring = common_ring(*this, rhs);
    if (ring == nullptr)
        throw Error(ErrorKind::DatumMismatch, "cannot multiply unattached zero elements");
    return ring->multiply(*this, rhs);
}

RingElement RingElement::operator*(const Int& scalar) const {
    std::map<std::size_t, Int> out = coeffs_;
    for (auto& [pos, c] : out) c *= scalar;
    return RingElement(ring_, std::move(out));
}

RingElement operator*(const Int& scalar, const RingElement& x) { return x * scalar; }

RingElement RingElement::pow(unsigned long e) const {
    if (ring_ == nullptr) throw Error(ErrorKind::DatumMismatch, "pow needs an attached element");
    RingElement acc = ring_->unit();
    for (unsigned long i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

bool RingElement::operator==(const RingElement& rhs) const {
    return coeffs_ == rhs.coeffs_;
}

std::vector<Int> RingElement::dense(std::size_t size) const {
    std::vector<Int> v(size, Int(0));
    for (const auto& [pos, c] : coeffs_) v[pos] = c;
    return v;
}

GreenRing::GreenRing(const Datum& d) : datum_(d), catalog_(datum_) {
    const std::size_t B = catalog_.size();
    table_.resize(B * B);
    for (std::size_t p = 0; p < B; ++p)
        for (std::size_t q = 0; q < B; ++q)
            table_[p * B + q] = multiply_labels(catalog_.label_at(p), catalog_.label_at(q));
}

std::map<std::size_t, Int> GreenRing::multiply_labels(const Label& x, const Label& y) const {
    const Datum& d = datum_;
    std::map<std::size_t, Int> out;
    auto add = [&](const Label& l, long long mult) {
        out[catalog_.position(l)] += mult;
    };
    if (x.kind == Label::Kind::M && y.kind == Label::Kind::M) {
        const long long k = x.k, l = y.k;
        const CharIdx s = d.char_product(x.idx, y.idx);
        const long long lo = std::min(k, l);
        if (k + l - 1 <= d.n()) {
            for (long long t = 0; t < lo; ++t)
                add(Label{Label::Kind::M, k + l - 1 - 2 * t, d.tau_pow(s, t)}, 1);
        } else {
            const long long r = k + l - 1 - d.n();
            for (long long t = 0; t <= r; ++t)
                add(Label{Label::Kind::M, d.n(), d.tau_pow(s, t)}, 1);
            for (long long t = r + 1; t < lo; ++t)
                add(Label{Label::Kind::M, k + l - 1 - 2 * t, d.tau_pow(s, t)}, 1);
        }
        return out;
    }
    if (x.kind == Label::Kind::M || y.kind == Label::Kind::M) {
        const Label& m = x.kind == Label::Kind::M ? x : y;
        const Label& p = x.kind == Label::Kind::M ? y : x;
        add(catalog_.p_label(d.char_product(m.idx, p.idx)), m.k);
        return out;
    }
    // P * P splits on whether g^n acts trivially on the product character.
    const CharIdx s = d.char_product(x.idx, y.idx);
    if (d.in_omega0(s)) {
        for (long long t = 0; t < d.n(); ++t)
            add(Label{Label::Kind::M, d.n(), d.tau_pow(s, t)}, 1);
    } else {
        add(catalog_.p_label(s), d.n());
    }
    return out;
}

RingElement GreenRing::from_label(const Label& l) const {
    return RingElement(this, {{catalog_.position(l), Int(1)}});
}

RingElement GreenRing::basis_element(std::size_t pos) const {
    return RingElement(this, {{pos, Int(1)}});
}

RingElement GreenRing::a_pow(long long t) const {
    long long e = mod_reduce(t, datum_.n());
    return from_label(Label{Label::Kind::M, 1, datum_.tau_pow(0, e)});
}

void GreenRing::check_same_ring(const RingElement& x, const RingElement& y) const {
    if ((x.ring() && x.ring() != this && !(x.ring()->datum() == datum_)) ||
        (y.ring() && y.ring() != this && !(y.ring()->datum() == datum_)))
        throw Error(ErrorKind::DatumMismatch, "elements belong to different group data");
}

RingElement GreenRing::multiply(const RingElement& x, const RingElement& y) const {
    check_same_ring(x, y);
    const std::size_t B = catalog_.size();
    std::map<std::size_t, Int> out;
    for (const auto& [p, a] : x.coeffs())
        for (const auto& [q, b] : y.coeffs()) {
            const Int ab = a * b;
            for (const auto& [pos, c] : table_[p * B + q]) out[pos] += ab * c;
        }
    return RingElement(this, std::move(out));
}

RingElement GreenRing::dualize(const RingElement& x) const {
    check_same_ring(x, x);
    std::map<std::size_t, Int> out;
    for (const auto& [pos, c] : x.coeffs())
        out[catalog_.position(catalog_.dual_label(catalog_.label_at(pos)))] += c;
    return RingElement(this, std::move(out));
}

RingElement GreenRing::delta_unit() const {
    return unit() + a() - from_label(Label{Label::Kind::M, 2, 0});
}

RingElement GreenRing::delta(const Label& l) const {
    if (l.kind == Label::Kind::P) return from_label(l);
    if (l.k == datum_.n()) {
        // projective M(n,i): [Z] - [rad Z], rad M(n,i) = M(n-1, tau(i))
        RingElement z = from_label(l);
        if (datum_.n() >= 2)
            z = z - from_label(Label{Label::Kind::M, datum_.n() - 1, datum_.tau(l.idx)});
        return z;
    }
    return delta_unit() * from_label(l);
}

Int GreenRing::bilinear_form(const RingElement& x, const RingElement& y) const {
    RingElement prod = multiply(x, y);
    // f picks the total multiplicity of labels M(k,0): modules with a map
    // onto the trivial module.
    Int total = 0;
    for (const auto& [pos, c] : prod.coeffs()) {
        const Label& l = catalog_.label_at(pos);
        if (l.kind == Label::Kind::M && l.idx == 0) total += c;
    }
    return total;
}

Int GreenRing::dimension(const RingElement& x) const {
    Int total = 0;
    for (const auto& [pos, c] : x.coeffs())
        total += c * catalog_.dim(catalog_.label_at(pos));
    return total;
}

std::string GreenRing::to_string(const RingElement& x) const {
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
        os << catalog_.to_string(catalog_.label_at(pos));
        first = false;
    }
    return os.str();
}

RingElement GreenRing::parse(const std::string& text) const {
    // grammar: term (('+'|'-') term)*, term = [int '*']? label | int
    // A bare integer means that multiple of the unit label.
    RingElement acc = zero();
    std::size_t i = 0;
    const std::string& s = text;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) {
            if (first) throw Error(ErrorKind::ParseError, "empty element");
            break;
        }
        Int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw Error(ErrorKind::ParseError, "expected '+' or '-' between terms");
        }
        skip_ws();
        Int coeff = 1;
        bool have_coeff = false;
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i > start) {
            coeff = Int(s.substr(start, i - start));
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        }
        if (i < s.size() && (s[i] == 'M' || s[i] == 'P')) {
            char open = s[i] == 'M' ? '(' : '[';
            char close = s[i] == 'M' ? ')' : ']';
            std::size_t lstart = i;
            ++i;
            if (i == s.size() || s[i] != open)
                throw Error(ErrorKind::ParseError, "malformed label in element");
            int depth = 0;
            for (; i < s.size(); ++i) {
                if (s[i] == open) ++depth;
                if (s[i] == close && --depth == 0) { ++i; break; }
            }
            if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced label brackets");
            Label l = catalog_.parse(s.substr(lstart, i - lstart));
            acc = acc + from_label(l) * (sign * coeff);
        } else if (have_coeff) {
            acc = acc + unit() * (sign * coeff);
        } else {
            throw Error(ErrorKind::ParseError, "expected label or integer in element");
        }
        first = false;
    }
    return acc;
}

IntMatrix GreenRing::coordinate_matrix(const std::vector<RingElement>& elems) const {
    IntMatrix m(elems.size(), catalog_.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& [pos, c] : elems[i].coeffs()) m.at(i, pos) = c;
    return m;
}

}  // namespace greenring
