#pragma once
// Elementary number theory and subgroups of the unit groups (Z/dZ)^x.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mcg::numth {

using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prime(i64 n);
std::vector<i64> prime_factors(i64 n);  // sorted, distinct
std::vector<i64> divisors(i64 n);       // sorted ascending
i64 euler_phi(i64 n);
i64 lcm(i64 a, i64 b);
i64 ipow(i64 base, i64 e);  // exact, e >= 0

i64 vp(i64 n, i64 p);
// Largest power of p dividing n.
i64 ppart(i64 n, i64 p);
// Product of the p-parts of n over the primes in `primes`.
i64 part(i64 n, const std::vector<i64>& primes);
// n divided by part(n, primes).
i64 copart(i64 n, const std::vector<i64>& primes);

i64 mod(i64 x, i64 d);  // representative in [0,d)
i64 mulmod(i64 a, i64 b, i64 d);
i64 powmod(i64 base, i64 e, i64 d);  // e >= 0
i64 inverse_mod(i64 a, i64 d);        // throws unless gcd(a,d)=1
i64 mult_order(i64 x, i64 d);         // throws unless gcd(x,d)=1

// 1 + x + ... + x^(n-1), exact.
BigInt ese(i64 x, i64 n);
// The same sum reduced modulo d (d >= 1).
i64 ese_mod(i64 x, i64 n, i64 d);
// p-adic valuation of a nonzero big integer.
i64 vp_big(const BigInt& v, i64 p);

// Solves x = r_i mod m_i for pairwise coprime moduli; result in [0, prod m_i).
i64 crt(const std::vector<i64>& residues, const std::vector<i64>& moduli);

// Closed forms for v_p(R^m - 1), v_p(ese(R,m)) and the order of R modulo p^m.
struct PowerValuations {
    i64 vp_power_minus_one;
    i64 vp_ese;
    i64 order_mod_prime_power;
};
PowerValuations power_valuations(i64 R, i64 m, i64 p);

// Subgroup of (Z/dZ)^x stored as a sorted residue set. For d = 1 the unique
// residue is written as 1.
class UnitSubgroup {
public:
    UnitSubgroup() : UnitSubgroup(trivial(1)) {}

    static UnitSubgroup trivial(i64 d);
    static UnitSubgroup full(i64 d);
    static UnitSubgroup generated(i64 d, const std::vector<i64>& gens);
    // Validates closure; throws DomainError otherwise.
    static UnitSubgroup from_elements(i64 d, std::vector<i64> elements);

    i64 modulus() const { return d_; }
    const std::vector<i64>& elements() const { return elems_; }
    const std::optional<i64>& generator() const { return gen_; }
    i64 order() const { return static_cast<i64>(elems_.size()); }
    bool is_trivial() const { return elems_.size() == 1; }
    bool is_cyclic() const { return gen_.has_value(); }
    bool contains(i64 x) const;
    bool is_subgroup_of(const UnitSubgroup& other) const;

    bool operator==(const UnitSubgroup& o) const { return d_ == o.d_ && elems_ == o.elems_; }
    std::strong_ordering operator<=>(const UnitSubgroup& o) const {
        if (auto c = d_ <=> o.d_; c != 0) return c;
        return elems_ <=> o.elems_;
    }

private:
    UnitSubgroup(i64 d, std::vector<i64> elems);
    i64 d_;
    std::vector<i64> elems_;
    std::optional<i64> gen_;
};

// Canonical residue of x modulo d as stored in a UnitSubgroup.
i64 unit_residue(i64 x, i64 d);

UnitSubgroup cyclic_subgroup(i64 t, i64 d);
UnitSubgroup restrict(const UnitSubgroup& s, i64 q);
// Full preimage in (Z/dZ)^x of a subgroup of (Z/qZ)^x, q | d.
UnitSubgroup preimage(const UnitSubgroup& s, i64 d);
// Kernel of reduction (Z/dZ)^x -> (Z/qZ)^x.
UnitSubgroup restriction_kernel(i64 d, i64 q);
// Subgroup generated by two subgroups of the same modulus.
UnitSubgroup join(const UnitSubgroup& a, const UnitSubgroup& b);
UnitSubgroup intersect(const UnitSubgroup& a, const UnitSubgroup& b);
// <1+r>_d and <-1+r>_d for 4 | r | d (d a power of two), deduplicated and sorted.
std::vector<UnitSubgroup> u2k_cyclic_subgroups(i64 d);
// Every cyclic subgroup of (Z/dZ)^x, sorted.
std::vector<UnitSubgroup> all_cyclic_subgroups(i64 d);

}  // namespace mcg::numth
