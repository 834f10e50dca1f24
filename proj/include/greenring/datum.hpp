#pragma once

#include <string>
#include <vector>

#include "greenring/error.hpp"

namespace greenring {

// Raw group datum (G, chi, g, 1) with G = prod Z/d_t given by cyclic_orders.
// chi and g are exponent tuples over the same factors: the character chi sends
// the t-th generator to the primitive d_t-th root of unity raised to chi[t].
struct GroupDatum {
    std::vector<long long> cyclic_orders;
    std::vector<long long> chi;
    std::vector<long long> g;
};

// Characters of an abelian group are indexed by their exponent tuples, packed
// into a flat mixed-radix integer with the first factor most significant, so
// flat-index order coincides with lexicographic tuple order.
using CharIdx = long long;

struct OrbitTable {
    std::vector<CharIdx> tau;                    // tau[i] = index of chi^{-1} * chi_i
    std::vector<std::vector<CharIdx>> orbits0;   // <tau>-orbits of Omega_0, each listed
    std::vector<std::vector<CharIdx>> orbits1;   // [rep, tau(rep), ...] from the lex-least rep
};

// Validated non-nilpotent datum with all derived character data. Immutable.
class Datum {
public:
    // Checks arity, reduces tuples, derives n = ord(chi(g)) and r = ord(g)/n,
    // and rejects nilpotent or otherwise malformed data.
    static Datum validate(const GroupDatum& raw);

    // The Radford datum: G cyclic of order m*n, chi(g) = omega^{-m}.
    static Datum radford(long long m, long long n);

    const GroupDatum& raw() const { return raw_; }
    bool operator==(const Datum& other) const { return raw_.cyclic_orders == other.raw_.cyclic_orders && raw_.chi == other.raw_.chi && raw_.g == other.raw_.g; }

    long long n() const { return n_; }
    long long r() const { return r_; }
    long long group_order() const { return group_order_; }
    long long exponent() const { return exponent_; }  // lcm of the cyclic orders
    std::size_t num_factors() const { return raw_.cyclic_orders.size(); }

    // --- characters ---
    long long num_chars() const { return group_order_; }
    std::vector<long long> tuple_of(CharIdx i) const;
    CharIdx index_of(const std::vector<long long>& tuple) const;
    CharIdx char_product(CharIdx i, CharIdx j) const;
    CharIdx char_inverse(CharIdx i) const;       // dual character i -> i*

    // Exponent e with chi_i(g^n) = zeta_L^e, L = exponent(). Zero iff i in Omega_0.
    long long lambda_exp(CharIdx i) const;
    bool in_omega0(CharIdx i) const { return lambda_exp(i) == 0; }

    // Value of character c on the group element given by tuple elem, as an
    // exponent of zeta_L.
    long long char_value_exp(CharIdx c, const std::vector<long long>& elem) const;
    long long chi_value_exp_on_generator(std::size_t t) const;  // chi(gen_t)

    // --- tau and orbits ---
    CharIdx tau(CharIdx i) const { return orbit_table_.tau[static_cast<std::size_t>(i)]; }
    CharIdx tau_pow(CharIdx i, long long t) const;
    CharIdx orbit_rep(CharIdx i) const { return orbit_rep_[static_cast<std::size_t>(i)]; }
    const OrbitTable& orbit_table() const { return orbit_table_; }

    const std::vector<CharIdx>& omega0() const { return omega0_; }
    const std::vector<CharIdx>& omega1() const { return omega1_; }
    const std::vector<CharIdx>& orbit_reps0() const { return orbit_reps0_; }
    const std::vector<CharIdx>& orbit_reps1() const { return orbit_reps1_; }

    std::string tuple_string(CharIdx i) const;   // comma-joined exponent tuple

private:
    Datum() = default;
    void build_characters();

    GroupDatum raw_;
    long long n_ = 0, r_ = 0;
    long long group_order_ = 0, exponent_ = 0;
    std::vector<long long> g_pow_n_;             // tuple of g^n
    OrbitTable orbit_table_;
    std::vector<CharIdx> orbit_rep_;             // per character: lex-least orbit member
    std::vector<long long> lambda_exp_;
    std::vector<CharIdx> omega0_, omega1_;
    std::vector<CharIdx> orbit_reps0_, orbit_reps1_;
};

Datum validate_datum(const GroupDatum& raw);
OrbitTable build_orbit_table(const Datum& d);
CharIdx dual_character(const Datum& d, CharIdx i);

}  // namespace greenring
