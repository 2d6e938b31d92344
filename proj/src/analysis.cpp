#include "mcg/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg::analysis {

using group::Group;
using numth::DomainError;
using numth::ipow;
using numth::ppart;
using numth::vp;

Context make_context(const GroupPtr& g) {
    Context ctx;
    ctx.g = g;
    ctx.cls = invariants::mcinv(g);
    ctx.a = ctx.cls.fact.a;
    ctx.b = ctx.cls.fact.b;
    ctx.m_pi_prime = numth::part(ctx.cls.inv.m, ctx.cls.derived.pi_prime);
    return ctx;
}

int element_part(const Group& g, int x, const std::vector<i64>& primes) {
    const i64 o = g.element_order(x);
    const i64 os = numth::part(o, primes);
    if (os == o) return x;
    if (os == 1) return g.identity();
    return g.pow(x, numth::crt({1, 0}, {os, o / os}));
}

int element_copart(const Group& g, int x, const std::vector<i64>& primes) {
    return g.mul(x, g.inv(element_part(g, x, primes)));
}

FixedField intersect_cyclotomic(const FixedField& f, i64 d) {
    const i64 big = std::lcm(f.conductor, d);
    const UnitSubgroup lifted = numth::preimage(f.fixer, big);
    return wedderburn::fixed_field(big, numth::join(lifted, numth::restriction_kernel(big, d)));
}

std::string to_string(FilterKind k) {
    switch (k) {
        case FilterKind::A1A2: return "A1A2";
        case FilterKind::B: return "B";
        case FilterKind::C: return "C";
        case FilterKind::D: return "D";
        case FilterKind::E: return "E";
        case FilterKind::F: return "F";
    }
    return "?";
}

ComponentFilter filter_a1a2(i64 m_pi_prime) {
    ComponentFilter f;
    f.kind = FilterKind::A1A2;
    f.center_inside = m_pi_prime;
    f.torsion_exactly = 2;
    return f;
}

bool passes(const ComponentDescriptor& c, const ComponentFilter& f) {
    if (f.degree && c.total_degree != *f.degree) return false;
    if (f.center_inside) {
        if (*f.center_inside % c.center.conductor != 0) return false;
        if (f.degree_is_relative && f.degree &&
            numth::euler_phi(*f.center_inside) != *f.degree * c.center.degree())
            return false;
    }
    const i64 torsion = wedderburn::roots_of_unity_order(c.center);
    if (f.torsion_exactly && torsion != *f.torsion_exactly) return false;
    for (i64 q : f.torsion_avoids)
        if (torsion % q == 0) return false;
    for (const auto& [d, field] : f.intersections)
        if (intersect_cyclotomic(c.center, d) != field) return false;
    return true;
}

std::vector<ComponentDescriptor> filter_components(const std::vector<ComponentDescriptor>& decomp,
                                                   const ComponentFilter& f) {
    std::vector<ComponentDescriptor> out;
    std::copy_if(decomp.begin(), decomp.end(), std::back_inserter(out),
                 [&](const ComponentDescriptor& c) { return passes(c, f); });
    return out;
}

i64 max_a1a2_degree(const std::vector<ComponentDescriptor>& decomp, i64 m_pi_prime) {
    i64 best = 0;
    for (const auto& c : filter_components(decomp, filter_a1a2(m_pi_prime))) best = std::max(best, c.total_degree);
    return best;
}

UnitSubgroup recover_R(const std::vector<ComponentDescriptor>& decomp, i64 m_pi_prime) {
    const auto passing = filter_components(decomp, filter_a1a2(m_pi_prime));
    if (passing.empty()) throw DomainError("recover_R: no component satisfies A1 and A2");
    const ComponentDescriptor* best = nullptr;
    for (const auto& c : passing) {
        if (!best || c.total_degree > best->total_degree ||
            (c.total_degree == best->total_degree && c.center.degree() > best->center.degree()))
            best = &c;
    }
    return numth::preimage(best->center.fixer, m_pi_prime);
}

i64 max_degree_branch(const Context& ctx) {
    const Group& g = *ctx.g;
    const i64 k = ctx.k();
    if (ctx.eps() != -1 || k % 2 == 0) return k;
    const int a2 = element_part(g, ctx.a, {2});
    const auto b4 = group::subgroup_generated(ctx.g, std::vector<int>{g.pow(ctx.b, 4)});
    return b4.contains(g.pow(a2, 2)) ? k : 2 * k;
}

namespace {

std::vector<i64> odd_primes(const std::vector<i64>& primes) {
    std::vector<i64> out;
    for (i64 q : primes)
        if (q != 2) out.push_back(q);
    return out;
}

std::vector<i64> without(const std::vector<i64>& primes, i64 p) {
    std::vector<i64> out;
    for (i64 q : primes)
        if (q != p) out.push_back(q);
    return out;
}

// The elements of a nilpotent subgroup whose order involves only the given primes.
Subgroup hall_part(const Subgroup& l, const std::vector<i64>& primes) {
    const Group& g = l.group();
    std::vector<int> elems;
    for (int x : l.elements()) {
        const i64 o = g.element_order(x);
        if (numth::part(o, primes) == o) elems.push_back(x);
    }
    Subgroup h = group::subgroup_generated(l.owner(), elems);
    if (h.order() != static_cast<int>(elems.size()))
        throw std::logic_error("hall_part: subgroup is not nilpotent");
    return h;
}

Subgroup over_a(const Context& ctx, i64 j) {
    return group::subgroup_generated(ctx.g, std::vector<int>{ctx.a, ctx.g->pow(ctx.b, j)});
}

// The generator x of <a_p> with b_p^(n_p) = x^(s_p).
int normalized_a_part(const Context& ctx, i64 p) {
    const Group& g = *ctx.g;
    const int a_p = element_part(g, ctx.a, {p});
    const int target = g.pow(element_part(g, ctx.b, {p}), ppart(ctx.n(), p));
    const i64 m_p = ppart(ctx.m(), p), s_p = ppart(ctx.s(), p);
    for (i64 w = 1; w < std::max<i64>(m_p, 2); ++w) {
        if (w % p == 0) continue;
        const int x = g.pow(a_p, w);
        if (g.pow(x, s_p) == target) return x;
    }
    throw std::logic_error("normalized_a_part: b_p^(n_p) is not a power of a_p^(s_p)");
}

}  // namespace

i64 count_B(const Context& ctx, const std::vector<ComponentDescriptor>& decomp) {
    ComponentFilter f;
    f.kind = FilterKind::B;
    f.degree = ctx.k();
    f.torsion_avoids = odd_primes(ctx.pi());
    return static_cast<i64>(filter_components(decomp, f).size());
}

RegimeB regime_B(const Context& ctx) {
    RegimeB rb;
    const auto& pi = ctx.pi();
    if (std::find(pi.begin(), pi.end(), 2) == pi.end()) {
        rb.reason = "2 not in pi";
        return rb;
    }
    const auto rep = invariants::sylow_mcinv_consistency(ctx.g, ctx.cls, 2);
    if (!(rep.mu == 2 && rep.sigma == 1 && rep.rho == 2 && rep.e == -1 && rep.nu >= 2)) {
        rb.reason = "MCINV(G_2) is not (4, 2^nu, 2, <3>_4) with nu >= 2";
        return rb;
    }
    const i64 m2 = ppart(ctx.m(), 2), n2 = ppart(ctx.n(), 2), s2 = ppart(ctx.s(), 2);
    const i64 r2 = ppart(ctx.r(), 2), k2 = ppart(ctx.k(), 2);
    if (k2 != 2 || s2 != 2) {
        rb.reason = "k_2 or s_2 differs from 2";
        return rb;
    }
    const i64 two_nu = ipow(2, rep.nu);
    rb.nu = rep.nu;
    if (ctx.eps() == 1 && m2 == 2 * two_nu && n2 == 2 && r2 == two_nu) {
        rb.applies = true;
    } else if (ctx.eps() == -1 && m2 == 4 && r2 == 4 && n2 == two_nu) {
        rb.applies = true;
        rb.h_type = true;
    } else {
        rb.reason = "(m_2, n_2, r_2, eps) matches neither shape";
    }
    return rb;
}

std::optional<NEBreakdown> formula_NE(const Context& ctx) {
    const RegimeB rb = regime_B(ctx);
    if (!rb.applies) return std::nullopt;
    const Group& g = *ctx.g;
    const i64 k = ctx.k();
    const int a_pp = element_part(g, ctx.a, ctx.pi_prime());
    const Subgroup l_pp = group::subgroup_generated(
        ctx.g, std::vector<int>{a_pp, element_part(g, g.pow(ctx.b, k), ctx.pi_prime())});

    std::map<i64, int> comm_of;  // prime q | k -> [b^(k/q), a_pi']
    for (i64 q : numth::prime_factors(k)) comm_of[q] = g.comm(g.pow(ctx.b, k / q), a_pp);

    // For H: the two non-normal cocyclic subgroups of L_2, swapped by conjugation in G.
    std::optional<Subgroup> swapped_a, swapped_b;
    if (rb.h_type) {
        const int a2 = element_part(g, ctx.a, {2});
        const int b2 = g.pow(element_part(g, ctx.b, {2}), ipow(2, rb.nu - 1));
        swapped_a = group::subgroup_generated(ctx.g, std::vector<int>{g.mul(g.inv(a2), b2)});
        swapped_b = group::subgroup_generated(ctx.g, std::vector<int>{g.mul(a2, b2)});
    }
    // 1 if N_G(P) swaps them (one class of K), 2 otherwise.
    auto pair_classes = [&](const Subgroup& p) -> i64 {
        const Subgroup nrm = group::normalizer(p);
        for (int x : nrm.elements())
            if (group::conjugate_subgroup(*swapped_a, x) == *swapped_b) return 1;
        return 2;
    };

    NEBreakdown out;
    out.h_type = rb.h_type;
    out.h = rb.h_type ? 2 * (rb.nu + 1) : rb.nu + 2;
    for (const auto& cls : group::subgroup_conjugacy_classes(group::cocyclic_subgroups(l_pp))) {
        const Subgroup& p = cls.front();
        bool odd_ok = true;
        for (const auto& [q, c] : comm_of)
            if (q != 2 && p.contains(c)) odd_ok = false;
        if (!odd_ok) continue;
        const bool first = !p.contains(comm_of.at(2));
        if (first)
            ++out.d;
        else
            ++out.d1;
        if (!rb.h_type)
            out.refined += first ? out.h : 1;
        else
            out.refined += (first ? out.h - 2 : 0) + pair_classes(p);
    }
    out.value = rb.h_type ? out.d * (out.h - 1) + out.d1 : out.d * out.h + out.d1;
    return out;
}

RegimeU regime_U(const Context& ctx, i64 p) {
    RegimeU ru;
    const auto& pi = ctx.pi();
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) {
        ru.reason = "p not in pi";
        return ru;
    }
    const auto rep = invariants::sylow_mcinv_consistency(ctx.g, ctx.cls, p);
    ru.mu = rep.mu;
    ru.nu = rep.nu;
    ru.sigma = rep.sigma;
    ru.rho = rep.rho;
    ru.e = rep.e;
    if (rep.rho > rep.mu) {
        ru.reason = "rho > mu";
        return ru;
    }
    ru.l = std::lcm(ctx.k(), ipow(p, rep.mu - rep.rho));
    const i64 n_p = ppart(ctx.n(), p), s_p = ppart(ctx.s(), p), k_p = ppart(ctx.k(), p);
    const i64 l_p = ppart(ru.l, p), p_nu = ipow(p, rep.nu), p_rho = ipow(p, rep.rho);

    if (!(rep.e == 1 && ctx.eps() == 1)) {
        ru.reason = "U1: e = eps = 1 fails";
        return ru;
    }
    if (!(k_p > 1 && 0 < rep.mu && rep.mu <= 2 * rep.rho && 1 <= rep.rho && rep.rho == rep.sigma &&
          rep.rho < rep.nu && l_p < p_nu && s_p == p_rho && std::max(l_p, p_rho) <= n_p)) {
        ru.reason = "U2 fails";
        return ru;
    }
    if (!(n_p == p_nu || n_p < std::min(p_nu, p_rho * k_p))) {
        ru.reason = "U3 fails";
        return ru;
    }
    ru.holds = true;
    return ru;
}

UVT uvt_of(const Context& ctx, i64 p) {
    const RegimeU ru = regime_U(ctx, p);
    if (!ru.holds) throw DomainError("uvt_of: " + ru.reason);
    const Group& g = *ctx.g;
    const i64 n_p = ppart(ctx.n(), p), l_p = ppart(ru.l, p);
    const i64 p_rho = ipow(p, ru.rho);

    UVT out;
    out.v = std::min(n_p / l_p, p_rho);
    const i64 sylow_order = ipow(p, ru.mu + ru.nu);
    out.u = sylow_order / (out.v * l_p);
    out.t = ipow(p, ru.nu + 2 * ru.rho) / (out.v * out.v * l_p);

    const int a_p = normalized_a_part(ctx, p);
    const int b_p = element_part(g, ctx.b, {p});
    if (n_p <= l_p * p_rho) {
        out.g = a_p;
        out.h = g.mul(g.pow(b_p, l_p), g.inv(g.pow(a_p, l_p * p_rho / n_p)));
    } else {
        out.g = g.pow(b_p, l_p);
        out.h = g.mul(g.pow(b_p, ipow(p, ru.nu - ru.rho)), g.inv(a_p));
    }
    out.l_p = hall_part(over_a(ctx, ru.l), {p});

    const Subgroup gen_g = group::subgroup_generated(ctx.g, std::vector<int>{out.g});
    const Subgroup gen_h = group::subgroup_generated(ctx.g, std::vector<int>{out.h});
    const Subgroup derived_p = hall_part(group::derived_subgroup(ctx.g), {p});
    out.structure_ok = g.element_order(out.g) == out.u && g.element_order(out.h) == out.v &&
                       out.l_p.order() == out.u * out.v && out.l_p.order() * l_p == sylow_order &&
                       group::intersect(gen_g, gen_h).order() == 1 &&
                       group::join(gen_g, gen_h) == out.l_p && derived_p.is_subgroup_of(gen_g);
    return out;
}

Subgroup predicted_normalizer(const Context& ctx, const UVT& uvt, const group::CocyclicTriple& triple) {
    if (triple.i == 2 && triple.y > uvt.t) return over_a(ctx, triple.y / uvt.t);
    return group::whole(ctx.g);
}

i64 count_C(const Context& ctx, const std::vector<ComponentDescriptor>& decomp, i64 p) {
    const RegimeU ru = regime_U(ctx, p);
    ComponentFilter f;
    f.kind = FilterKind::C;
    f.degree = ru.l;
    for (i64 q : ctx.pi())
        if (q != p && q != 2) f.torsion_avoids.push_back(q);
    if (p != 2) f.torsion_avoids.push_back(4);
    return static_cast<i64>(filter_components(decomp, f).size());
}

namespace {

i64 log_p(i64 x, i64 p) { return vp(x, p); }

// Power of p as a rational, exponent possibly negative.
Rational p_power(i64 p, i64 e) { return e >= 0 ? Rational(ipow(p, e)) : Rational(1, ipow(p, -e)); }

// The printed piecewise values of f_d(v) + h_d(v) and g_d(v).
std::pair<Rational, Rational> closed_forms(i64 p, const RegimeU& ru, const UVT& uvt, i64 k_p, i64 d) {
    const i64 v = uvt.v, u = uvt.u, t = uvt.t;
    const i64 d_p = ppart(d, p), d_pp = d / d_p;
    const i64 l_p = ppart(ru.l, p);
    const i64 mu = ru.mu, nu = ru.nu, rho = ru.rho;
    Rational f, h;
    if (t * d_p < u) {
        f = Rational(v) * (Rational(p + 2, p - 1) + nu + 2 * rho - log_p(v * v * v * l_p, p));
        h = Rational(l_p * v * v) * p_power(p, -(mu + nu)) * (1 + log_p(d_p, p)) -
            (Rational(2) + d_p * p_power(p, 2 * rho - mu)) / Rational(p - 1);
    } else if (t <= u) {
        f = Rational(v) * (Rational(p + 1, p - 1) + mu + nu - log_p(v * v * l_p, p));
        h = -2;
    } else {
        f = Rational(v) * (Rational(p + 1, p - 1) + nu + 2 * rho - log_p(v * v * v * l_p, p));
        h = 0;
    }
    Rational g = 0;
    const Rational u_over_t(u, t);
    if (k_p <= ipow(p, nu - rho) && Rational(d_p) >= u_over_t)
        g = Rational(v, d);
    else if (k_p <= ipow(p, nu - rho) && Rational(d_p) > u_over_t)
        g = p_power(p, 2 * rho - mu) / Rational(d_pp);
    return {(f + h) / Rational(d), g};
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

}  // namespace

std::optional<NGBreakdown> formula_NG(const Context& ctx, i64 p) {
    const RegimeU ru = regime_U(ctx, p);
    if (!ru.holds) return std::nullopt;
    const Group& g = *ctx.g;
    NGBreakdown out;
    out.uvt = uvt_of(ctx, p);
    if (!out.uvt.structure_ok) {
        out.findings.push_back("L_p is not <g> x <h> with |g| = u, |h| = v and G'_p <= <g>");
        return out;
    }
    const i64 l = ru.l;
    const Subgroup l_full = over_a(ctx, l);
    const Subgroup l_pp = hall_part(l_full, ctx.pi_prime());
    const int a_pp = element_part(g, ctx.a, ctx.pi_prime());
    const int a_p = element_part(g, ctx.a, {p});
    const int b_p = element_part(g, ctx.b, {p});

    // Cocyclic subgroups of L_pi' sorted by the index of their normalizer.
    std::map<i64, NGTerm> by_d;
    for (i64 d : numth::divisors(l)) by_d[d].d = d;
    const int comm_p = g.comm(g.pow(ctx.b, l / p), a_pp);
    for (const auto& pp : group::cocyclic_subgroups(l_pp)) {
        bool ok = true;
        for (i64 q : numth::prime_factors(l))
            if (q != p && pp.contains(g.comm(g.pow(ctx.b, l / q), a_pp))) ok = false;
        if (!ok) continue;
        const Subgroup nrm = group::normalizer(pp);
        const i64 d = group::index(group::whole(ctx.g), nrm);
        if (l % d != 0 || nrm != over_a(ctx, d)) {
            out.findings.push_back("normalizer of a cocyclic subgroup of L_pi' is not <a, b^d> with d | l");
            out.normalizers_ok = false;
            continue;
        }
        if (pp.contains(comm_p))
            ++by_d[d].k_d2;
        else
            ++by_d[d].k_d1;
    }

    // Orbit weights of the cocyclic subgroups of L_p.
    const int comm_lp = g.comm(g.pow(b_p, l / p), a_p);
    struct Weighted {
        i64 index;
        bool avoids;
    };
    std::vector<Weighted> triples;
    for (const auto& tr : group::cocyclic_triples(out.uvt.l_p, out.uvt.g, out.uvt.h, p)) {
        const Subgroup predicted = predicted_normalizer(ctx, out.uvt, tr);
        if (predicted != group::normalizer(tr.k)) {
            out.normalizers_ok = false;
            out.findings.push_back("normalizer of K_(" + std::to_string(tr.i) + "," + std::to_string(tr.y) + "," +
                                   std::to_string(tr.x) + ") differs from the predicted one");
        }
        triples.push_back({group::index(group::whole(ctx.g), predicted), !tr.k.contains(comm_lp)});
    }

    if (p != 2) {
        const Subgroup l_2 = hall_part(l_full, {2});
        out.o = 0;
        for (const auto& s : g.subgroups())
            if (s.is_subgroup_of(l_2) && l_2.order() <= 2 * s.order()) ++out.o;
    }

    const i64 k_p = ppart(ctx.k(), p);
    Rational total = 0;
    for (auto& [d, term] : by_d) {
        for (const auto& w : triples) {
            const Rational weight(1, std::lcm(d, w.index));
            term.m_d += weight;
            if (w.avoids) term.n_d += weight;
        }
        std::tie(term.m_closed, term.n_closed) = closed_forms(p, ru, out.uvt, k_p, d);
        total += Rational(term.k_d1) * term.m_d + Rational(term.k_d2) * term.n_d;
        if (term.m_closed != term.m_d || term.n_closed != term.n_d) {
            out.closed_forms_agree = false;
            out.findings.push_back("d=" + std::to_string(d) + ": M(d) " + rational_str(term.m_d) + " vs closed form " +
                                   rational_str(term.m_closed) + ", N(d) " + rational_str(term.n_d) +
                                   " vs closed form " + rational_str(term.n_closed));
        }
        out.terms.push_back(term);
    }
    out.value = Rational(out.o) * total;
    return out;
}

std::string to_string(WitnessCase c) {
    switch (c) {
        case WitnessCase::NotApplicable: return "not applicable";
        case WitnessCase::SpLarge: return "s_p >= m'_p";
        case WitnessCase::SpSmall: return "s_p < m'_p";
        case WitnessCase::TwoInverting: return "p = 2, eps = -1";
    }
    return "?";
}

bool WitnessReport::all() const {
    return which != WitnessCase::NotApplicable && k0_normal && ss1_ss2 && ss3.value_or(true) && component &&
           degree_ok && center_inside && relative_degree_ok && meets_pi_prime && meets_p_part;
}

WitnessReport delta_witness(const Context& ctx, i64 p) {
    WitnessReport rep;
    rep.p = p;
    const auto& pi = ctx.pi();
    const i64 r_p = ppart(ctx.r(), p);
    const i64 mp_p = ppart(ctx.cls.derived.m_prime, p);
    if (std::find(pi.begin(), pi.end(), p) == pi.end() || r_p == 1 || mp_p <= r_p) {
        rep.note = "requires p in pi with m'_p > r_p > 1";
        return rep;
    }
    const Group& g = *ctx.g;
    const i64 k = ctx.k(), m_pp = ctx.m_pi_prime;
    const i64 m_p = ppart(ctx.m(), p), n_p = ppart(ctx.n(), p), s_p = ppart(ctx.s(), p), k_p = ppart(k, p);
    const int a_rest = element_part(g, ctx.a, without(pi, p));
    const int a_p = normalized_a_part(ctx, p);
    const int b_pc = element_copart(g, ctx.b, {p});
    const Subgroup a_sub = group::subgroup_generated(ctx.g, std::vector<int>{ctx.a});

    FixedField p_target;
    i64 p_modulus = 1;
    std::vector<int> k0_gens{a_rest};
    if (p == 2 && ctx.eps() == -1) {
        rep.which = WitnessCase::TwoInverting;
        const i64 c = std::lcm(k, mp_p / r_p);
        rep.degree_target = c;
        rep.field_modulus = m_pp * mp_p;
        rep.l = over_a(ctx, c);
        const int b2c = g.pow(element_part(g, ctx.b, {2}), c);
        k0_gens.push_back(a_sub.contains(b2c) ? g.pow(b_pc, c) : g.pow(ctx.b, c));
        p_modulus = mp_p;
        p_target = cyclotomic_fixed(mp_p, numth::cyclic_subgroup(numth::mod(r_p - 1, mp_p), mp_p));
    } else if (s_p >= mp_p) {
        rep.which = WitnessCase::SpLarge;
        const i64 c = std::lcm(k, s_p / r_p);
        rep.degree_target = c;
        rep.field_modulus = m_pp * s_p;
        rep.l = over_a(ctx, c);
        k0_gens.push_back(g.pow(ctx.b, c));
        p_modulus = s_p;
        p_target = cyclotomic(r_p);
    } else {
        rep.which = WitnessCase::SpSmall;
        rep.degree_target = k;
        rep.field_modulus = m_pp * mp_p;
        rep.l = over_a(ctx, k);
        p_modulus = mp_p;
        p_target = cyclotomic(r_p);
        const i64 quot = n_p / k_p;    // |b_p^k <a>|
        const i64 modulus = m_p / s_p;
        if ((s_p * k_p) % n_p != 0) {
            rep.note = "s_p k_p / n_p is not an integer";
            return rep;
        }
        const i64 ese = numth::ese_mod(1 + r_p, quot, quot * modulus);
        if (ese % quot != 0) {
            rep.note = "v_p(Ese(1+r_p, n_p/k_p)) < v_p(n_p/k_p)";
            return rep;
        }
        const i64 z = ese / quot;
        const i64 y = numth::mod(z * numth::inverse_mod(numth::mod(k / k_p, modulus), modulus), modulus);
        const i64 e1 = s_p * k_p / n_p;
        k0_gens.push_back(g.pow(a_p, r_p * e1));
        k0_gens.push_back(g.mul(g.pow(ctx.b, -y * k), g.pow(a_p, e1)));
        k0_gens.push_back(g.pow(b_pc, k));
    }
    rep.k0 = group::subgroup_generated(ctx.g, k0_gens);
    rep.k0_normal = group::is_normal(rep.k0);
    rep.ss1_ss2 = wedderburn::satisfies_ss1_ss2(rep.l, rep.k0);
    if (!rep.ss1_ss2) return rep;
    if (g.order() <= wedderburn::kIdempotentCheckBound)
        rep.ss3 = wedderburn::idempotent_report(ctx.g, rep.l, rep.k0).all();
    rep.component = wedderburn::component_of(ctx.g, rep.l, rep.k0);
    const FixedField& center = rep.component->center;
    rep.degree_ok = rep.component->total_degree == rep.degree_target;
    rep.center_inside = rep.field_modulus % center.conductor == 0;
    rep.relative_degree_ok = numth::euler_phi(rep.field_modulus) == rep.degree_target * center.degree();
    rep.meets_pi_prime = intersect_cyclotomic(center, m_pp) == cyclotomic_fixed(m_pp, ctx.cls.derived.R);
    rep.meets_p_part = intersect_cyclotomic(center, p_modulus) == p_target;
    return rep;
}

bool SharedInvariantsReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.holds; });
}

SharedInvariantsReport shared_invariants_check(const GroupPtr& g, const GroupPtr& h) {
    SharedInvariantsReport rep;
    const auto cg = invariants::mcinv(g), ch = invariants::mcinv(h);
    if (cg.inv != ch.inv) return rep;
    rep.applicable = true;
    auto add = [&](const std::string& name, bool holds) { rep.clauses.push_back({name, holds}); };
    const auto ab_g = wedderburn::abelianization(g), ab_h = wedderburn::abelianization(h);
    add("G/G' = H/H'", ab_g == ab_h);
    add("commutative components match Perlis-Walker",
        wedderburn::commutative_part(wedderburn::decomposition(g)) ==
                wedderburn::canonical_conductors(wedderburn::perlis_walker(ab_h)) &&
            wedderburn::commutative_part(wedderburn::decomposition(h)) ==
                wedderburn::canonical_conductors(wedderburn::perlis_walker(ab_g)));
    add("pi_G = pi_H", cg.derived.pi == ch.derived.pi);
    add("pi'_G = pi'_H", cg.derived.pi_prime == ch.derived.pi_prime);
    add("m_pi' agree", numth::part(cg.inv.m, cg.derived.pi_prime) == numth::part(ch.inv.m, ch.derived.pi_prime));
    add("n_pi' agree", numth::part(cg.inv.n, cg.derived.pi_prime) == numth::part(ch.inv.n, ch.derived.pi_prime));
    for (i64 p : numth::prime_factors(g->order())) {
        auto sylow_inv = [p](const GroupPtr& x) {
            return invariants::mcinv(group::Group::make(invariants::presentation_of(group::sylow(x, p)))).inv;
        };
        add("Sylow " + std::to_string(p) + "-subgroups isomorphic", sylow_inv(g) == sylow_inv(h));
    }
    return rep;
}

}  // namespace mcg::analysis
