#include "greenring/datum.hpp"

#include <cassert>
#include <sstream>

#include "greenring/numeric.hpp"

namespace greenring {

namespace {

std::vector<long long> reduce_tuple(const std::vector<long long>& t,
                                    const std::vector<long long>& orders) {
    std::vector<long long> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = mod_reduce(t[i], orders[i]);
    return out;
}

}  // namespace

Datum Datum::validate(const GroupDatum& raw) {
    if (raw.cyclic_orders.empty())
        throw Error(ErrorKind::MalformedTuple, "cyclic_orders must be non-empty");
    for (long long d : raw.cyclic_orders)
        if (d < 1) throw Error(ErrorKind::MalformedTuple, "cyclic orders must be positive");
    if (raw.chi.size() != raw.cyclic_orders.size() || raw.g.size() != raw.cyclic_orders.size())
        throw Error(ErrorKind::MalformedTuple, "chi and g must match the number of cyclic factors");

    Datum d;
    d.raw_.cyclic_orders = raw.cyclic_orders;
    d.raw_.chi = reduce_tuple(raw.chi, raw.cyclic_orders);
    d.raw_.g = reduce_tuple(raw.g, raw.cyclic_orders);

    d.group_order_ = 1;
    d.exponent_ = 1;
    for (long long dt : raw.cyclic_orders) {
        d.group_order_ *= dt;
        d.exponent_ = lcm_ll(d.exponent_, dt);
    }

    // q = chi(g) = zeta_L^e; n = ord(q).
    long long e = 0;
    for (std::size_t t = 0; t < raw.cyclic_orders.size(); ++t) {
        long long dt = raw.cyclic_orders[t];
        e = mod_reduce(e + (d.exponent_ / dt) * d.raw_.chi[t] % d.exponent_ * d.raw_.g[t],
                       d.exponent_);
    }
    long long n = d.exponent_ / gcd_ll(d.exponent_, e);
    if (n < 2) throw Error(ErrorKind::DegenerateOrder, "chi(g) has order < 2");
    d.n_ = n;

    // chi^n must be trivial (so ord(chi) = n).
    for (std::size_t t = 0; t < raw.cyclic_orders.size(); ++t)
        if (mod_reduce(n * d.raw_.chi[t], raw.cyclic_orders[t]) != 0)
            throw Error(ErrorKind::CharacterOrder, "chi^n != 1: not a group datum");

    // Non-nilpotent: g^n != 1; then ord(g) = n*r with r > 1.
    long long ord_g = 1;
    for (std::size_t t = 0; t < raw.cyclic_orders.size(); ++t) {
        long long dt = raw.cyclic_orders[t];
        long long o = dt / gcd_ll(dt, d.raw_.g[t] == 0 ? dt : d.raw_.g[t]);
        ord_g = lcm_ll(ord_g, o);
    }
    d.g_pow_n_.resize(raw.cyclic_orders.size());
    bool gn_trivial = true;
    for (std::size_t t = 0; t < raw.cyclic_orders.size(); ++t) {
        d.g_pow_n_[t] = mod_reduce(n * d.raw_.g[t], raw.cyclic_orders[t]);
        if (d.g_pow_n_[t] != 0) gn_trivial = false;
    }
    if (gn_trivial)
        throw Error(ErrorKind::NilpotentType, "g^n = 1: the datum is of nilpotent type");
    assert(ord_g % n == 0);
    d.r_ = ord_g / n;
    assert(d.r_ > 1);

    d.build_characters();
    return d;
}

Datum Datum::radford(long long m, long long n) {
    if (m < 2 || n < 2)
        throw Error(ErrorKind::InvalidParameters, "Radford family needs m > 1 and n >= 2");
    GroupDatum raw;
    raw.cyclic_orders = {m * n};
    raw.chi = {mod_reduce(-m, m * n)};
    raw.g = {1};
    Datum d = validate(raw);
    assert(d.n() == n && d.r() == m);
    return d;
}

void Datum::build_characters() {
    const auto& orders = raw_.cyclic_orders;
    const std::size_t nf = orders.size();
    const long long N = group_order_;

    lambda_exp_.resize(static_cast<std::size_t>(N));
    for (CharIdx i = 0; i < N; ++i)
        lambda_exp_[static_cast<std::size_t>(i)] = char_value_exp(i, g_pow_n_);

    // tau(i) = i - chi componentwise.
    orbit_table_.tau.resize(static_cast<std::size_t>(N));
    for (CharIdx i = 0; i < N; ++i) {
        std::vector<long long> t = tuple_of(i);
        for (std::size_t k = 0; k < nf; ++k) t[k] = mod_reduce(t[k] - raw_.chi[k], orders[k]);
        orbit_table_.tau[static_cast<std::size_t>(i)] = index_of(t);
    }

    orbit_rep_.assign(static_cast<std::size_t>(N), -1);
    for (CharIdx i = 0; i < N; ++i) {
        if (orbit_rep_[static_cast<std::size_t>(i)] >= 0) continue;
        // ascending scan: the first unvisited member is the lex-least rep
        std::vector<CharIdx> orbit;
        CharIdx j = i;
        do {
            orbit.push_back(j);
            orbit_rep_[static_cast<std::size_t>(j)] = i;
            j = orbit_table_.tau[static_cast<std::size_t>(j)];
        } while (j != i);
        assert(static_cast<long long>(orbit.size()) == n_);
        if (lambda_exp_[static_cast<std::size_t>(i)] == 0) {
            orbit_table_.orbits0.push_back(orbit);
            orbit_reps0_.push_back(i);
        } else {
            orbit_table_.orbits1.push_back(orbit);
            orbit_reps1_.push_back(i);
        }
    }

    for (CharIdx i = 0; i < N; ++i)
        (lambda_exp_[static_cast<std::size_t>(i)] == 0 ? omega0_ : omega1_).push_back(i);
}

std::vector<long long> Datum::tuple_of(CharIdx i) const {
    const auto& orders = raw_.cyclic_orders;
    std::vector<long long> t(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
        t[k] = i % orders[k];
        i /= orders[k];
    }
    return t;
}

CharIdx Datum::index_of(const std::vector<long long>& tuple) const {
    const auto& orders = raw_.cyclic_orders;
    if (tuple.size() != orders.size())
        throw Error(ErrorKind::MalformedTuple, "character tuple has wrong arity");
    CharIdx i = 0;
    for (std::size_t k = 0; k < orders.size(); ++k)
        i = i * orders[k] + mod_reduce(tuple[k], orders[k]);
    return i;
}

CharIdx Datum::char_product(CharIdx i, CharIdx j) const {
    std::vector<long long> a = tuple_of(i), b = tuple_of(j);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return index_of(a);
}

CharIdx Datum::char_inverse(CharIdx i) const {
    std::vector<long long> a = tuple_of(i);
    for (long long& x : a) x = -x;
    return index_of(a);
}

long long Datum::lambda_exp(CharIdx i) const {
    return lambda_exp_[static_cast<std::size_t>(i)];
}

long long Datum::char_value_exp(CharIdx c, const std::vector<long long>& elem) const {
    const auto& orders = raw_.cyclic_orders;
    std::vector<long long> t = tuple_of(c);
    long long e = 0;
    for (std::size_t k = 0; k < orders.size(); ++k)
        e = mod_reduce(e + (exponent_ / orders[k]) * t[k] % exponent_ * elem[k], exponent_);
    return e;
}

long long Datum::chi_value_exp_on_generator(std::size_t t) const {
    return mod_reduce((exponent_ / raw_.cyclic_orders[t]) * raw_.chi[t], exponent_);
}

CharIdx Datum::tau_pow(CharIdx i, long long t) const {
    const auto& orders = raw_.cyclic_orders;
    std::vector<long long> a = tuple_of(i);
    for (std::size_t k = 0; k < orders.size(); ++k)
        a[k] = mod_reduce(a[k] - t % orders[k] * raw_.chi[k], orders[k]);
    return index_of(a);
}

std::string Datum::tuple_string(CharIdx i) const {
    std::ostringstream os;
    std::vector<long long> t = tuple_of(i);
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) os << ',';
        os << t[k];
    }
    return os.str();
}

Datum validate_datum(const GroupDatum& raw) { return Datum::validate(raw); }

OrbitTable build_orbit_table(const Datum& d) { return d.orbit_table(); }

CharIdx dual_character(const Datum& d, CharIdx i) { return d.char_inverse(i); }

}  // namespace greenring
