#include "mcg/numth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace mcg::numth {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    if (n < 1) throw DomainError("prime_factors: n must be positive");
    std::vector<i64> out;
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<i64> divisors(i64 n) {
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<i64> small, large;
    for (i64 q = 1; q * q <= n; ++q) {
        if (n % q == 0) {
            small.push_back(q);
            if (q != n / q) large.push_back(n / q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 euler_phi(i64 n) {
    i64 out = n;
    for (i64 p : prime_factors(n)) out = out / p * (p - 1);
    return out;
}

i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 ipow(i64 base, i64 e) {
    if (e < 0) throw DomainError("ipow: negative exponent");
    i64 out = 1;
    for (i64 i = 0; i < e; ++i) out *= base;
    return out;
}

i64 vp(i64 n, i64 p) {
    if (n < 1) throw DomainError("vp: n must be positive");
    if (p < 2) throw DomainError("vp: p must be prime");
    i64 e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

i64 ppart(i64 n, i64 p) {
    i64 out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

i64 part(i64 n, const std::vector<i64>& primes) {
    if (n < 1) throw DomainError("part: n must be positive");
    i64 out = 1;
    for (i64 p : primes) out *= ppart(n, p);
    return out;
}

i64 copart(i64 n, const std::vector<i64>& primes) { return n / part(n, primes); }

i64 mod(i64 x, i64 d) {
    i64 r = x % d;
    return r < 0 ? r + d : r;
}

i64 mulmod(i64 a, i64 b, i64 d) {
    return static_cast<i64>((static_cast<__int128>(mod(a, d)) * mod(b, d)) % d);
}

i64 powmod(i64 base, i64 e, i64 d) {
    if (e < 0) throw DomainError("powmod: negative exponent");
    i64 result = 1 % d;
    i64 b = mod(base, d);
    while (e > 0) {
        if (e & 1) result = mulmod(result, b, d);
        b = mulmod(b, b, d);
        e >>= 1;
    }
    return result;
}

i64 inverse_mod(i64 a, i64 d) {
    if (d == 1) return 0;
    i64 old_r = mod(a, d), r = d, old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) throw DomainError("inverse_mod: " + std::to_string(a) + " not invertible mod " + std::to_string(d));
    return mod(old_s, d);
}

i64 mult_order(i64 x, i64 d) {
    if (d < 1) throw DomainError("mult_order: modulus must be positive");
    if (std::gcd(mod(x, d), d) != 1)
        throw DomainError("mult_order: " + std::to_string(x) + " not coprime to " + std::to_string(d));
    if (d == 1) return 1;
    // The order divides phi(d); strip prime factors while the power stays 1.
    i64 order = euler_phi(d);
    for (i64 p : prime_factors(order)) {
        while (order % p == 0 && powmod(x, order / p, d) == 1) order /= p;
    }
    return order;
}

BigInt ese(i64 x, i64 n) {
    if (x == 0) throw DomainError("ese: x must be nonzero");
    if (n < 1) throw DomainError("ese: n must be positive");
    if (x == 1) return BigInt(n);
    BigInt power = boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(n));
    return (power - 1) / (BigInt(x) - 1);
}

i64 ese_mod(i64 x, i64 n, i64 d) {
    if (n < 0) throw DomainError("ese_mod: negative length");
    // Doubling: S(2k) = S(k)(1 + x^k), S(k+1) = 1 + x S(k).
    i64 sum = 0, power = 1 % d;  // sum = S(len), power = x^len for the processed prefix
    i64 xm = mod(x, d);
    for (int bit = 62; bit >= 0; --bit) {
        sum = mulmod(sum, 1 + power, d);
        power = mulmod(power, power, d);
        if ((n >> bit) & 1) {
            sum = mod(1 + mulmod(xm, sum, d), d);
            power = mulmod(power, xm, d);
        }
    }
    return mod(sum, d);
}

i64 vp_big(const BigInt& v, i64 p) {
    if (v == 0) throw DomainError("vp_big: zero has no valuation");
    BigInt w = v < 0 ? BigInt(-v) : v;
    i64 e = 0;
    while (w % p == 0) {
        w /= p;
        ++e;
    }
    return e;
}

i64 crt(const std::vector<i64>& residues, const std::vector<i64>& moduli) {
    i64 x = 0, m = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        i64 mi = moduli[i];
        if (mi == 1) continue;
        if (std::gcd(m, mi) != 1) throw DomainError("crt: moduli not coprime");
        // x + m*k = r_i mod mi
        i64 k = mulmod(mod(residues[i] - x, mi), inverse_mod(m % mi, mi), mi);
        x += m * k;
        m *= mi;
        x = mod(x, m);
    }
    return x;
}

PowerValuations power_valuations(i64 R, i64 m, i64 p) {
    if (!is_prime(p)) throw DomainError("power_valuations: p must be prime");
    if (R <= 1 || m <= 0) throw DomainError("power_valuations: need R > 1 and m > 0");
    i64 v = vp(R - 1, p);
    if (v < 1) throw DomainError("power_valuations: need p | R-1");
    PowerValuations out{};
    i64 pm = 1;
    for (i64 i = 0; i < m; ++i) pm *= p;
    if (p != 2 || v >= 2) {
        out.vp_power_minus_one = v + vp(m, p);
        out.vp_ese = vp(m, p);
        i64 e = std::max<i64>(0, m - v);
        out.order_mod_prime_power = 1;
        for (i64 i = 0; i < e; ++i) out.order_mod_prime_power *= p;
        return out;
    }
    // p = 2 and v_2(R-1) = 1
    i64 w = vp(R + 1, 2);
    if (m % 2 == 0) {
        out.vp_power_minus_one = w + vp(m, 2);
        out.vp_ese = w + vp(m, 2) - 1;
    } else {
        out.vp_power_minus_one = 1;
        out.vp_ese = 0;
    }
    // Part (3) reads m as the exponent of the prime power modulus.
    if (m <= 1) {
        out.order_mod_prime_power = 1;
    } else {
        i64 e = std::max<i64>(1, m - w);
        out.order_mod_prime_power = i64{1} << e;
    }
    return out;
}

// ---------------------------------------------------------------------------
// UnitSubgroup

i64 unit_residue(i64 x, i64 d) {
    if (d < 1) throw DomainError("unit_residue: modulus must be positive");
    return d == 1 ? 1 : mod(x, d);
}

namespace {

bool coprime_unit(i64 x, i64 d) { return d == 1 || std::gcd(mod(x, d), d) == 1; }

i64 unit_mul(i64 a, i64 b, i64 d) { return d == 1 ? 1 : mulmod(a, b, d); }

std::vector<i64> closure(i64 d, const std::vector<i64>& gens) {
    std::set<i64> seen{unit_residue(1, d)};
    std::vector<i64> frontier{unit_residue(1, d)};
    std::vector<i64> g;
    for (i64 x : gens) {
        if (!coprime_unit(x, d)) throw DomainError("unit subgroup generator not coprime to modulus");
        g.push_back(unit_residue(x, d));
    }
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 e : frontier)
            for (i64 x : g) {
                i64 y = unit_mul(e, x, d);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

UnitSubgroup::UnitSubgroup(i64 d, std::vector<i64> elems) : d_(d), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    const i64 size = static_cast<i64>(elems_.size());
    for (i64 x : elems_) {
        if (d_ == 1 || mult_order(x, d_) == size) {
            gen_ = x;
            break;
        }
    }
}

UnitSubgroup UnitSubgroup::trivial(i64 d) { return UnitSubgroup(d, {unit_residue(1, d)}); }

UnitSubgroup UnitSubgroup::full(i64 d) {
    std::vector<i64> el;
    if (d == 1) {
        el.push_back(1);
    } else {
        for (i64 x = 1; x < d; ++x)
            if (std::gcd(x, d) == 1) el.push_back(x);
    }
    return UnitSubgroup(d, std::move(el));
}

UnitSubgroup UnitSubgroup::generated(i64 d, const std::vector<i64>& gens) {
    if (d < 1) throw DomainError("unit subgroup modulus must be positive");
    return UnitSubgroup(d, closure(d, gens));
}

UnitSubgroup UnitSubgroup::from_elements(i64 d, std::vector<i64> elements) {
    std::set<i64> s;
    for (i64 x : elements) {
        if (!coprime_unit(x, d)) throw DomainError("from_elements: residue not coprime to modulus");
        s.insert(unit_residue(x, d));
    }
    if (!s.count(unit_residue(1, d))) throw DomainError("from_elements: identity missing");
    for (i64 x : s)
        for (i64 y : s)
            if (!s.count(unit_mul(x, y, d))) throw DomainError("from_elements: not closed");
    return UnitSubgroup(d, {s.begin(), s.end()});
}

bool UnitSubgroup::contains(i64 x) const {
    if (!coprime_unit(x, d_)) return false;
    return std::binary_search(elems_.begin(), elems_.end(), unit_residue(x, d_));
}

bool UnitSubgroup::is_subgroup_of(const UnitSubgroup& other) const {
    if (d_ != other.d_) return false;
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

UnitSubgroup cyclic_subgroup(i64 t, i64 d) {
    if (!coprime_unit(t, d)) throw DomainError("cyclic_subgroup: generator not coprime to modulus");
    return UnitSubgroup::generated(d, {t});
}

UnitSubgroup restrict(const UnitSubgroup& s, i64 q) {
    if (q < 1 || s.modulus() % q != 0) throw DomainError("restrict: target modulus must divide source modulus");
    std::vector<i64> gens;
    if (s.generator()) {
        gens.push_back(*s.generator());
    } else {
        gens = s.elements();
    }
    return UnitSubgroup::generated(q, gens);
}

UnitSubgroup preimage(const UnitSubgroup& s, i64 d) {
    const i64 q = s.modulus();
    if (d % q != 0) throw DomainError("preimage: modulus must be a multiple");
    std::vector<i64> el;
    if (d == 1) return UnitSubgroup::trivial(1);
    for (i64 x = 1; x < d; ++x)
        if (std::gcd(x, d) == 1 && s.contains(x)) el.push_back(x);
    return UnitSubgroup::from_elements(d, el);
}

UnitSubgroup restriction_kernel(i64 d, i64 q) { return preimage(UnitSubgroup::trivial(q), d); }

UnitSubgroup join(const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.modulus() != b.modulus()) throw DomainError("join: moduli differ");
    std::vector<i64> gens = a.elements();
    gens.insert(gens.end(), b.elements().begin(), b.elements().end());
    return UnitSubgroup::generated(a.modulus(), gens);
}

UnitSubgroup intersect(const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.modulus() != b.modulus()) throw DomainError("intersect: moduli differ");
    std::vector<i64> el;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(el));
    return UnitSubgroup::from_elements(a.modulus(), el);
}

std::vector<UnitSubgroup> u2k_cyclic_subgroups(i64 d) {
    if (d < 1 || (d & (d - 1)) != 0) throw DomainError("u2k_cyclic_subgroups: modulus must be a power of two");
    std::set<UnitSubgroup> out;
    if (d <= 2) {
        out.insert(UnitSubgroup::trivial(d));
    } else {
        for (i64 r = 4; r <= d; r *= 2) {
            out.insert(cyclic_subgroup(1 + r, d));
            out.insert(cyclic_subgroup(-1 + r, d));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<UnitSubgroup> all_cyclic_subgroups(i64 d) {
    std::set<UnitSubgroup> out;
    const UnitSubgroup units = UnitSubgroup::full(d);
    for (i64 x : units.elements()) out.insert(cyclic_subgroup(x, d));
    return {out.begin(), out.end()};
}

}  // namespace mcg::numth
