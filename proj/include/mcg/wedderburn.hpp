#pragma once
// Wedderburn decomposition of QG for metacyclic G via strong Shoda pairs.
// Centers are abelian number fields Q_d^T, kept in a canonical (conductor, fixer) form.

#include "mcg/group.hpp"
#include "mcg/numth.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcg::wedderburn {

using group::GroupPtr;
using group::Subgroup;
using numth::i64;
using numth::UnitSubgroup;

// The field fixed by `fixer` inside Q(zeta_conductor); conductor is minimal.
struct FixedField {
    i64 conductor = 1;
    UnitSubgroup fixer;

    i64 degree() const { return numth::euler_phi(conductor) / fixer.order(); }
    bool operator==(const FixedField&) const = default;
    std::strong_ordering operator<=>(const FixedField& o) const;
    std::string to_string() const;
};

FixedField fixed_field(i64 d, const UnitSubgroup& t);
// Order of the torsion subgroup of F^x.
i64 roots_of_unity_order(const FixedField& f);

struct ShodaPair {
    Subgroup l, k;
};

// Matrix algebra over the cyclic algebra (Q_conductor / center, sigma_action_gen, zeta^twist).
struct ComponentDescriptor {
    i64 matrix_size = 1;
    i64 conductor = 1;
    i64 action_gen = 1;
    i64 twist = 0;
    FixedField center;
    i64 total_degree = 1;
    i64 q_dimension = 1;

    bool operator==(const ComponentDescriptor&) const = default;
    std::strong_ordering operator<=>(const ComponentDescriptor& o) const;
    std::string to_string() const;
};

// The maximal abelian subgroup <a, b^j> containing G', j the order of t modulo m.
Subgroup abelian_anchor(const GroupPtr& g);

// SS1 and SS2, checked directly.
bool satisfies_ss1_ss2(const Subgroup& l, const Subgroup& k);

// One pair per conjugacy class of K; every pair satisfies SS1 and SS2.
std::vector<ShodaPair> strong_shoda_pairs(const GroupPtr& g);

inline constexpr int kIdempotentCheckBound = 128;
struct IdempotentReport {
    bool epsilon_idempotent = false;
    bool ss3 = false;
    bool e_idempotent = false;
    bool e_central = false;
    bool kernel_is_core = false;
    // e(G,L,K) = e_num / e_den, indexed by element id.
    std::vector<i64> e_num;
    i64 e_den = 1;
    bool all() const { return epsilon_idempotent && ss3 && e_idempotent && e_central && kernel_is_core; }
};
// Exact rational computation of epsilon(L,K) and e(G,L,K) in QG. Throws past the size bound.
IdempotentReport idempotent_report(const GroupPtr& g, const Subgroup& l, const Subgroup& k);
inline bool idempotent_check(const GroupPtr& g, const Subgroup& l, const Subgroup& k) {
    return idempotent_report(g, l, k).all();
}

// Throws DomainError when (L,K) fails SS1 or SS2.
ComponentDescriptor component_of(const GroupPtr& g, const Subgroup& l, const Subgroup& k);

std::vector<ComponentDescriptor> decomposition(const GroupPtr& g);

// Multiplicity of Q(zeta_d) in QA for A the product of cyclic groups of the given orders.
std::map<i64, i64> perlis_walker(const std::vector<i64>& cyclic_orders);
// Same multiset with Q(zeta_d), d = 2 mod 4, merged into Q(zeta_{d/2}).
std::map<i64, i64> canonical_conductors(const std::map<i64, i64>& pw);
// Elementary divisors of G/G'.
std::vector<i64> abelianization(const GroupPtr& g);
// Conductor multiset of the components with total degree 1.
std::map<i64, i64> commutative_part(const std::vector<ComponentDescriptor>& decomp);

using Fingerprint = std::vector<std::pair<i64, FixedField>>;
Fingerprint fingerprint(const std::vector<ComponentDescriptor>& decomp);

enum class AlgebraComparison { Different, Equal, Unknown };
std::string to_string(AlgebraComparison c);
AlgebraComparison compare_decompositions(const std::vector<ComponentDescriptor>& x,
                                         const std::vector<ComponentDescriptor>& y);
AlgebraComparison compare_algebras(const GroupPtr& g, const GroupPtr& h);

}  // namespace mcg::wedderburn
