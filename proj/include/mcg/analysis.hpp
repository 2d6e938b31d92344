#pragma once
// Verification harness for the Wedderburn-component arguments that recover
// MCINV(G) from QG. Every check is a within-group identity: a quantity read
// off decomposition(G) against one computed from the group structure.

#include "mcg/group.hpp"
#include "mcg/invariants.hpp"
#include "mcg/wedderburn.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mcg::analysis {

using group::GroupPtr;
using group::Subgroup;
using numth::i64;
using numth::UnitSubgroup;
using wedderburn::ComponentDescriptor;
using wedderburn::FixedField;
using Rational = boost::rational<i64>;

// G with a minimal metacyclic factorization G = <a><b> and its invariants.
struct Context {
    GroupPtr g;
    invariants::Classification cls;
    int a = 0, b = 0;
    i64 m_pi_prime = 1;

    i64 m() const { return cls.inv.m; }
    i64 n() const { return cls.inv.n; }
    i64 s() const { return cls.inv.s; }
    i64 r() const { return cls.derived.r; }
    i64 k() const { return cls.derived.k; }
    int eps() const { return cls.derived.eps; }
    const std::vector<i64>& pi() const { return cls.derived.pi; }
    const std::vector<i64>& pi_prime() const { return cls.derived.pi_prime; }
};
Context make_context(const GroupPtr& g);

// The S-part x^e of x, with e = 1 mod |x|_S and e = 0 mod |x|_S'.
int element_part(const group::Group& g, int x, const std::vector<i64>& primes);
// The S'-part.
int element_copart(const group::Group& g, int x, const std::vector<i64>& primes);

// F intersected with Q(zeta_d), as a canonical fixed field.
FixedField intersect_cyclotomic(const FixedField& f, i64 d);
// Q(zeta_d)^T for T given over d.
inline FixedField cyclotomic_fixed(i64 d, const UnitSubgroup& t) { return wedderburn::fixed_field(d, t); }
inline FixedField cyclotomic(i64 d) { return wedderburn::fixed_field(d, UnitSubgroup::trivial(d)); }

enum class FilterKind { A1A2, B, C, D, E, F };
std::string to_string(FilterKind k);

// A predicate on components. Unset fields impose nothing.
struct ComponentFilter {
    FilterKind kind = FilterKind::A1A2;
    std::optional<i64> degree;             // total degree
    std::optional<i64> center_inside;      // center contained in Q(zeta_d)
    bool degree_is_relative = false;       // also [Q(zeta_center_inside) : center] = degree
    std::optional<i64> torsion_exactly;    // |roots of unity of the center|
    std::vector<i64> torsion_avoids;       // no root of unity of these orders
    std::vector<std::pair<i64, FixedField>> intersections;  // center meets Q(zeta_d) in the given field
};

ComponentFilter filter_a1a2(i64 m_pi_prime);
bool passes(const ComponentDescriptor& c, const ComponentFilter& f);
std::vector<ComponentDescriptor> filter_components(const std::vector<ComponentDescriptor>& decomp,
                                                   const ComponentFilter& f);

// Galois group of Q(zeta_{m_pi'}) over the center of a maximal-degree A1+A2
// component of largest field degree. Throws DomainError when no component passes A1+A2.
UnitSubgroup recover_R(const std::vector<ComponentDescriptor>& decomp, i64 m_pi_prime);
// Largest degree among A1+A2 components (0 when there is none).
i64 max_a1a2_degree(const std::vector<ComponentDescriptor>& decomp, i64 m_pi_prime);
// 2k when eps = -1, k is odd and a_2^2 is not in <b^4>; k otherwise.
i64 max_degree_branch(const Context& ctx);

// Components of degree k whose center has no root of unity of odd prime order in pi.
i64 count_B(const Context& ctx, const std::vector<ComponentDescriptor>& decomp);

struct RegimeB {
    bool applies = false;
    bool h_type = false;  // eps = -1, m_2 = r_2 = 4, n_2 = 2^nu
    i64 nu = 0;
    std::string reason;
};
// MCINV(G_2) = (4, 2^nu, 2, <3>_4) with nu >= 2, k_2 = s_2 = 2, plus one of the two shapes.
RegimeB regime_B(const Context& ctx);

struct NEBreakdown {
    i64 d = 0, d1 = 0, h = 0;
    i64 value = 0;    // d h + d1, or d (h - 1) + d1 for H
    i64 refined = 0;  // the same count with G-classes of whole subgroups K = K_pi' x K_2
    bool h_type = false;
};
std::optional<NEBreakdown> formula_NE(const Context& ctx);

// Standing assumptions U1-U3 for p in pi, read literally.
struct RegimeU {
    bool holds = false;
    std::string reason;
    i64 mu = 0, nu = 0, sigma = 0, rho = 0;
    int e = 1;
    i64 l = 1;  // lcm(k, p^(mu-rho))
};
RegimeU regime_U(const Context& ctx, i64 p);

struct UVT {
    i64 v = 1, u = 1, t = 1;
    int g = 0, h = 0;  // L_p = <g> x <h>, |g| = u, |h| = v
    Subgroup l_p;
    bool structure_ok = false;  // the direct product decomposition and G'_p <= <g> were verified
};
// Throws DomainError outside U1-U3.
UVT uvt_of(const Context& ctx, i64 p);
// <a, b^(y/t)> for i = 2 and y > t, G otherwise.
Subgroup predicted_normalizer(const Context& ctx, const UVT& uvt, const group::CocyclicTriple& triple);

// Components with degree l = lcm(k, p^(mu-rho)), no roots of unity of prime order
// in pi \ {p,2}, and none of order 4 when p is odd.
i64 count_C(const Context& ctx, const std::vector<ComponentDescriptor>& decomp, i64 p);

struct NGTerm {
    i64 d = 1;
    i64 k_d1 = 0, k_d2 = 0;
    Rational m_d, n_d;                // by summation over the cocyclic subgroups of L_p
    Rational m_closed, n_closed;      // from the piecewise closed forms
};
struct NGBreakdown {
    i64 o = 1;
    UVT uvt;
    std::vector<NGTerm> terms;
    Rational value;
    bool normalizers_ok = true;    // predicted_normalizer agrees with group::normalizer
    bool closed_forms_agree = true;
    std::vector<std::string> findings;
};
// Empty outside U1-U3.
std::optional<NGBreakdown> formula_NG(const Context& ctx, i64 p);

// Which variant of the Delta argument applies to p.
enum class WitnessCase { NotApplicable, SpLarge, SpSmall, TwoInverting };
std::string to_string(WitnessCase c);

struct WitnessReport {
    WitnessCase which = WitnessCase::NotApplicable;
    i64 p = 0;
    i64 degree_target = 0;   // c, k or c
    i64 field_modulus = 0;   // m_pi' s_p or m_pi' m'_p
    Subgroup l, k0;
    bool k0_normal = false;
    bool ss1_ss2 = false;
    std::optional<bool> ss3;  // checked up to the idempotent size bound
    std::optional<ComponentDescriptor> component;
    bool degree_ok = false;
    bool center_inside = false;
    bool relative_degree_ok = false;
    bool meets_pi_prime = false;  // center cap Q(zeta_{m_pi'}) = Q(zeta_{m_pi'})^R
    bool meets_p_part = false;    // the p-part intersection of the case
    std::string note;
    bool all() const;
};
WitnessReport delta_witness(const Context& ctx, i64 p);

struct SharedInvariantsReport {
    bool applicable = false;  // MCINV(G) = MCINV(H)
    std::vector<invariants::ClauseResult> clauses;
    bool all_hold() const;
};
SharedInvariantsReport shared_invariants_check(const GroupPtr& g, const GroupPtr& h);

}  // namespace mcg::analysis
