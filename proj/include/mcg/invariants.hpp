#pragma once
// The classification tuple MCINV(G) = (m, n, s, Delta) of a finite metacyclic
// group, its derived invariants, tuple validation and group reconstruction.

#include "mcg/group.hpp"
#include "mcg/numth.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcg::invariants {

using group::GroupPtr;
using group::Presentation;
using group::Subgroup;
using numth::i64;
using numth::UnitSubgroup;

// s is the divisor-of-m value [G:B]; s = m means b^n = 1.
struct MCInv {
    i64 m = 1, n = 1, s = 1;
    UnitSubgroup delta;  // cyclic, over m'

    i64 m_prime() const { return delta.modulus(); }
    i64 delta_gen() const { return delta.generator().value_or(1); }
    bool operator==(const MCInv& o) const = default;
    std::strong_ordering operator<=>(const MCInv& o) const;
    std::string to_string() const;
};

struct DerivedInv {
    i64 r = 1;
    int eps = 1;
    i64 k = 1;
    i64 m_prime = 1;
    std::vector<i64> pi, pi_prime;
    UnitSubgroup R;  // T_G(G'_{pi'}) over m_{pi'}
};

// r, eps, k of a subgroup of U_m.
struct Rek {
    i64 r = 1;
    int eps = 1;
    i64 k = 1;
    bool operator==(const Rek&) const = default;
};

struct Factorization {
    Subgroup a_sub, b_sub;
    int a = 0, b = 0;  // chosen generators (smallest of full order)
    i64 m = 1, n = 1, s = 1;
    UnitSubgroup t_sub;
    Rek rek;
};

struct Classification {
    MCInv inv;
    DerivedInv derived;
    Factorization fact;
};

// Conjugation exponents on the smallest generator of a normal cyclic A, over |A|.
UnitSubgroup t_subgroup(const Subgroup& a);
// Exponent e with gen^e = x, for x in the cyclic subgroup generated by gen.
i64 discrete_log(const Subgroup& a, int gen, int x);
// Exponent x with (gen)^h = gen^x inside a cyclic normal subgroup.
i64 conjugation_exponent(const Subgroup& a, int gen, int h);

// r is the largest divisor of `modulus` acting trivially off 2 and by +-1 on the 2-part;
// k is |Res_{m_nu}(T)| with m_nu the part of m over primes of m outside pi(r).
Rek rek_from(const UnitSubgroup& t, i64 m);
Rek rek_of(const Subgroup& a);

// Every factorization attaining the lexicographic minimum of (|A|, r(A), [G:B]),
// ordered by (A elements, B elements).
std::vector<Factorization> minimal_factorizations(const GroupPtr& g);
Factorization minimal_factorization(const GroupPtr& g);

struct PiSets {
    std::vector<i64> pi, pi_prime;
};
PiSets pi_sets(const GroupPtr& g);

i64 m_prime_of(i64 m, i64 n, i64 s, i64 r, int eps, i64 k, const std::vector<i64>& pi_prime);

// With check_all set, Delta is recomputed from every minimal factorization and
// a mismatch throws std::logic_error.
Classification mcinv(const GroupPtr& g, bool check_all = false);

struct TupleCheck {
    bool valid = false;
    std::vector<std::string> violations;
    Rek rek;
    std::vector<i64> pi_prime;
};
TupleCheck validate_tuple(i64 m, i64 n, i64 s, const UnitSubgroup& delta);
inline TupleCheck validate_tuple(const MCInv& t) { return validate_tuple(t.m, t.n, t.s, t.delta); }

// Candidate tuples (s | m, m' | m, Delta cyclic in U_{m'}, |Delta| | n) with m*n <= max_order.
std::vector<MCInv> candidate_tuples(i64 max_order);
std::vector<MCInv> valid_tuples(i64 max_order);

// Presentation (m, n, s mod m, gamma) realizing a valid tuple.
Presentation construct_group(const MCInv& t);

bool isomorphic(const GroupPtr& g, const GroupPtr& h);

// Re-presents H as <c, d> with c generating a normal cyclic subgroup.
Presentation presentation_of(const Subgroup& h);

struct ClauseResult {
    std::string name;
    bool holds;
};
struct SylowReport {
    i64 p = 0;
    i64 mu = 0, nu = 0, sigma = 0, rho = 0;
    int e = 1;
    std::vector<ClauseResult> clauses;
    bool all_hold() const;
};
// Throws DomainError unless p is in pi_G.
SylowReport sylow_mcinv_consistency(const GroupPtr& g, i64 p);
SylowReport sylow_mcinv_consistency(const GroupPtr& g, const Classification& c, i64 p);

}  // namespace mcg::invariants
