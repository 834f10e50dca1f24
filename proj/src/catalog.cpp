#include "greenring/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace greenring {

Catalog::Catalog(Datum d) : datum_(std::move(d)) {
    basis_.reserve(static_cast<std::size_t>(datum_.n()) * datum_.omega0().size() +
                   datum_.orbit_reps1().size());
    for (CharIdx i : datum_.omega0())
        for (long long k = 1; k <= datum_.n(); ++k)
            basis_.push_back(Label{Label::Kind::M, k, i});
    for (CharIdx j : datum_.orbit_reps1()) basis_.push_back(Label{Label::Kind::P, 0, j});
}

std::size_t Catalog::position(const Label& l) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), l,
                               [](const Label& a, const Label& b) {
                                   if (a.kind != b.kind) return a.kind < b.kind;
                                   if (a.idx != b.idx) return a.idx < b.idx;
                                   return a.k < b.k;
                               });
    if (it == basis_.end() || !(*it == l))
        throw Error(ErrorKind::MalformedTuple, "label not in basis: " + to_string(l));
    return static_cast<std::size_t>(it - basis_.begin());
}

Label Catalog::a_label() const {
    return Label{Label::Kind::M, 1, datum_.tau(0)};
}

Label Catalog::m_label(long long k, CharIdx i) const {
    if (k < 1 || k > datum_.n())
        throw Error(ErrorKind::MalformedTuple, "M label length out of range");
    if (i < 0 || i >= datum_.num_chars() || !datum_.in_omega0(i))
        throw Error(ErrorKind::MalformedTuple, "M label character must lie in Omega_0");
    return Label{Label::Kind::M, k, i};
}

Label Catalog::p_label(CharIdx j) const {
    if (j < 0 || j >= datum_.num_chars() || datum_.in_omega0(j))
        throw Error(ErrorKind::MalformedTuple, "P label character must lie in Omega_1");
    return Label{Label::Kind::P, 0, datum_.orbit_rep(j)};
}

long long Catalog::dim(const Label& l) const {
    return l.kind == Label::Kind::M ? l.k : datum_.n();
}

bool Catalog::projective(const Label& l) const {
    return l.kind == Label::Kind::P || l.k == datum_.n();
}

Label Catalog::dual_label(const Label& l) const {
    if (l.kind == Label::Kind::M)
        return Label{Label::Kind::M, l.k, datum_.tau_pow(datum_.char_inverse(l.idx), 1 - l.k)};
    return p_label(datum_.char_inverse(l.idx));
}

std::string Catalog::to_string(const Label& l) const {
    std::ostringstream os;
    if (l.kind == Label::Kind::M)
        os << "M(" << l.k << ',' << datum_.tuple_string(l.idx) << ')';
    else
        os << "P[" << datum_.tuple_string(l.idx) << ']';
    return os.str();
}

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') {
            if (cur.empty()) throw Error(ErrorKind::ParseError, "empty tuple component");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
            cur += c;
        } else {
            throw Error(ErrorKind::ParseError, std::string("unexpected character '") + c + "'");
        }
    }
    if (cur.empty()) throw Error(ErrorKind::ParseError, "empty tuple component");
    out.push_back(std::stoll(cur));
    return out;
}

}  // namespace

Label Catalog::parse(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    try {
        if (s.size() >= 4 && s.rfind("M(", 0) == 0 && s.back() == ')') {
            std::vector<long long> v = parse_int_list(s.substr(2, s.size() - 3));
            if (v.size() != 1 + datum_.num_factors())
                throw Error(ErrorKind::ParseError, "M(k,i) needs k plus one entry per factor");
            return m_label(v[0], datum_.index_of({v.begin() + 1, v.end()}));
        }
        if (s.size() >= 4 && s.rfind("P[", 0) == 0 && s.back() == ']') {
            std::vector<long long> v = parse_int_list(s.substr(2, s.size() - 3));
            if (v.size() != datum_.num_factors())
                throw Error(ErrorKind::ParseError, "P[j] needs one entry per factor");
            return p_label(datum_.index_of(v));
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bad integer in label: " + text);
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::ParseError, "integer out of range in label: " + text);
    }
    throw Error(ErrorKind::ParseError, "unrecognized label: " + text);
}

}  // namespace greenring
