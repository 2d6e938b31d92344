#include "mcg/wedderburn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mcg::wedderburn {

using group::Group;
using numth::DomainError;

std::strong_ordering FixedField::operator<=>(const FixedField& o) const {
    if (auto c = conductor <=> o.conductor; c != 0) return c;
    return fixer <=> o.fixer;
}

std::string FixedField::to_string() const {
    if (conductor == 1) return "Q";
    std::ostringstream os;
    os << "Q(zeta_" << conductor << ")";
    if (!fixer.is_trivial()) {
        os << "^<";
        if (fixer.generator()) {
            os << *fixer.generator();
        } else {
            for (std::size_t i = 0; i < fixer.elements().size(); ++i)
                os << (i ? "," : "") << fixer.elements()[i];
        }
        os << ">";
    }
    return os.str();
}

FixedField fixed_field(i64 d, const UnitSubgroup& t) {
    if (t.modulus() != d) throw DomainError("fixed_field: subgroup modulus differs from d");
    for (i64 d0 : numth::divisors(d)) {
        if (numth::restriction_kernel(d, d0).is_subgroup_of(t)) return {d0, numth::restrict(t, d0)};
    }
    return {d, t};
}

i64 roots_of_unity_order(const FixedField& f) {
    i64 best = 1;
    for (i64 e : numth::divisors(f.conductor))
        if (numth::restrict(f.fixer, e).is_trivial()) best = std::max(best, e);
    return std::lcm<i64>(2, best);
}

std::strong_ordering ComponentDescriptor::operator<=>(const ComponentDescriptor& o) const {
    auto key = [](const ComponentDescriptor& c) {
        return std::tuple(c.q_dimension, c.total_degree, c.conductor, c.action_gen, c.twist, c.matrix_size);
    };
    if (auto c = key(*this) <=> key(o); c != 0) return c;
    return center <=> o.center;
}

std::string ComponentDescriptor::to_string() const {
    std::ostringstream os;
    os << "M_" << matrix_size << "(Q_" << conductor << ", x=" << action_gen << ", y=" << twist
       << ") center " << center.to_string() << " degree " << total_degree << " dim " << q_dimension;
    return os.str();
}

Subgroup abelian_anchor(const GroupPtr& g) {
    const i64 j = g->m() == 1 ? 1 : numth::mult_order(g->t(), g->m());
    return group::subgroup_generated(g, std::vector<int>{g->gen_a(), g->pow(g->gen_b(), j)});
}

namespace {

// Exponent x in [0, q) with h = u^x modulo K, where uK generates L/K of order q.
std::optional<i64> log_mod(const Subgroup& k, int u, i64 q, int h) {
    const Group& g = k.group();
    const int hinv = g.inv(h);
    int cur = g.identity();
    for (i64 x = 0; x < q; ++x) {
        if (k.contains(g.mul(hinv, cur))) return x;
        cur = g.mul(cur, u);
    }
    return std::nullopt;
}

struct PairData {
    Subgroup n;
    i64 q;
    int u;
};

std::optional<PairData> ss1_ss2_data(const Subgroup& l, const Subgroup& k) {
    if (!k.is_subgroup_of(l) || !group::is_normal_in(k, l)) return std::nullopt;
    const Subgroup n = group::normalizer(k);
    if (!l.is_subgroup_of(n) || !group::is_normal_in(l, n)) return std::nullopt;
    auto cq = group::cyclic_quotient(l, k);
    if (!cq) return std::nullopt;
    const Group& g = l.group();
    for (int x : n.elements())
        if (!l.contains(x) && k.contains(g.comm(cq->generator, x))) return std::nullopt;
    return PairData{n, cq->order, cq->generator};
}

}  // namespace

bool satisfies_ss1_ss2(const Subgroup& l, const Subgroup& k) { return ss1_ss2_data(l, k).has_value(); }

std::vector<ShodaPair> strong_shoda_pairs(const GroupPtr& g) {
    const Subgroup anchor = abelian_anchor(g);
    const i64 ja = static_cast<i64>(g->order()) / anchor.order();
    auto over_a = [&](i64 j) {
        return group::subgroup_generated(g, std::vector<int>{g->gen_a(), g->pow(g->gen_b(), j)});
    };
    std::vector<ShodaPair> out;
    for (i64 j : numth::divisors(ja)) {
        const Subgroup l = over_a(j);
        const Subgroup ld = group::derived_of(l);
        std::vector<Subgroup> larger_derived;
        for (i64 q : numth::prime_factors(j)) larger_derived.push_back(group::derived_of(over_a(j / q)));

        std::vector<Subgroup> ks;
        for (const auto& k : g->subgroups()) {
            if (!k.is_subgroup_of(l) || !ld.is_subgroup_of(k)) continue;
            if (std::any_of(larger_derived.begin(), larger_derived.end(),
                            [&](const Subgroup& d) { return d.is_subgroup_of(k); }))
                continue;
            if (group::cyclic_quotient(l, k)) ks.push_back(k);
        }
        for (const auto& cls : group::subgroup_conjugacy_classes(ks)) {
            if (!satisfies_ss1_ss2(l, cls.front()))
                throw std::logic_error("strong_shoda_pairs: SS1/SS2 failed for " + g->presentation().to_string());
            out.push_back({l, cls.front()});
        }
    }
    return out;
}

namespace {

// Element of QG as num / den over group ids.
struct GroupRingElem {
    std::vector<i64> num;
    i64 den = 1;

    void normalize() {
        i64 gcd = den;
        for (i64 c : num) gcd = std::gcd(gcd, c);
        if (gcd > 1) {
            for (i64& c : num) c /= gcd;
            den /= gcd;
        }
    }
    bool is_zero() const {
        return std::all_of(num.begin(), num.end(), [](i64 c) { return c == 0; });
    }
    bool operator==(const GroupRingElem&) const = default;
};

GroupRingElem hat(const Subgroup& h) {
    GroupRingElem e{std::vector<i64>(h.group().order(), 0), h.order()};
    for (int x : h.elements()) e.num[x] = 1;
    e.normalize();
    return e;
}

GroupRingElem combine(const GroupRingElem& x, const GroupRingElem& y, i64 sign) {
    GroupRingElem out{std::vector<i64>(x.num.size()), x.den * y.den};
    for (std::size_t i = 0; i < x.num.size(); ++i) out.num[i] = x.num[i] * y.den + sign * y.num[i] * x.den;
    out.normalize();
    return out;
}

GroupRingElem multiply(const Group& g, const GroupRingElem& x, const GroupRingElem& y) {
    std::vector<__int128> acc(x.num.size(), 0);
    std::vector<int> ysupp;
    for (std::size_t h = 0; h < y.num.size(); ++h)
        if (y.num[h] != 0) ysupp.push_back(static_cast<int>(h));
    for (std::size_t a = 0; a < x.num.size(); ++a) {
        if (x.num[a] == 0) continue;
        for (int h : ysupp) acc[g.mul(static_cast<int>(a), h)] += static_cast<__int128>(x.num[a]) * y.num[h];
    }
    __int128 den = static_cast<__int128>(x.den) * y.den;
    __int128 gcd = den;
    for (auto c : acc) {
        __int128 a = c < 0 ? -c : c, b = gcd;
        while (b != 0) {
            __int128 r = a % b;
            a = b;
            b = r;
        }
        gcd = a;
    }
    GroupRingElem out{std::vector<i64>(acc.size()), static_cast<i64>(den / gcd)};
    for (std::size_t i = 0; i < acc.size(); ++i) out.num[i] = static_cast<i64>(acc[i] / gcd);
    return out;
}

// x^c = c^-1 x c.
GroupRingElem conjugate(const Group& g, const GroupRingElem& x, int c) {
    GroupRingElem out{std::vector<i64>(x.num.size(), 0), x.den};
    for (std::size_t h = 0; h < x.num.size(); ++h)
        if (x.num[h] != 0) out.num[g.conj(static_cast<int>(h), c)] = x.num[h];
    return out;
}

}  // namespace

IdempotentReport idempotent_report(const GroupPtr& g, const Subgroup& l, const Subgroup& k) {
    if (g->order() > kIdempotentCheckBound) throw DomainError("idempotent_report: group too large");
    if (!k.is_subgroup_of(l) || !group::is_normal_in(k, l)) throw DomainError("idempotent_report: K not normal in L");
    const Group& grp = *g;
    IdempotentReport rep;

    GroupRingElem eps = hat(l);
    if (k.order() != l.order()) {
        auto cq = group::cyclic_quotient(l, k);
        if (!cq) throw DomainError("idempotent_report: L/K not cyclic");
        eps = hat(k);
        const GroupRingElem khat = hat(k);
        for (i64 p : numth::prime_factors(cq->order)) {
            std::vector<int> gens = k.gens();
            gens.push_back(grp.pow(cq->generator, cq->order / p));
            const Subgroup d = group::subgroup_generated(g, gens);
            eps = multiply(grp, eps, combine(khat, hat(d), -1));
        }
    }
    rep.epsilon_idempotent = multiply(grp, eps, eps) == eps;

    std::vector<GroupRingElem> orbit;
    rep.ss3 = true;
    for (int x = 0; x < grp.order(); ++x) {
        GroupRingElem c = conjugate(grp, eps, x);
        if (c == eps) continue;
        if (!multiply(grp, c, eps).is_zero()) rep.ss3 = false;
        if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(std::move(c));
    }
    GroupRingElem e = eps;
    for (const auto& c : orbit) e = combine(e, c, 1);

    rep.e_idempotent = multiply(grp, e, e) == e;
    rep.e_central = conjugate(grp, e, grp.gen_a()) == e && conjugate(grp, e, grp.gen_b()) == e;

    std::vector<int> stab;
    for (int x = 0; x < grp.order(); ++x) {
        GroupRingElem shifted{std::vector<i64>(e.num.size(), 0), e.den};
        for (std::size_t h = 0; h < e.num.size(); ++h) shifted.num[grp.mul(x, static_cast<int>(h))] = e.num[h];
        if (shifted == e) stab.push_back(x);
    }
    rep.kernel_is_core = stab == group::core(k).elements();
    rep.e_num = std::move(e.num);
    rep.e_den = e.den;
    return rep;
}

ComponentDescriptor component_of(const GroupPtr& g, const Subgroup& l, const Subgroup& k) {
    auto data = ss1_ss2_data(l, k);
    if (!data) throw DomainError("component_of: (L,K) fails SS1 or SS2");
    const Group& grp = *g;
    const i64 q = data->q;
    const i64 nl = group::index(data->n, l);

    int w = grp.identity();
    for (int x : data->n.elements())
        if (group::coset_order(l, x) == nl) {
            w = x;
            break;
        }
    if (group::coset_order(l, w) != nl) throw DomainError("component_of: N/L is not cyclic");

    ComponentDescriptor c;
    c.matrix_size = group::index(group::whole(g), data->n);
    c.conductor = q;
    c.total_degree = group::index(group::whole(g), l);
    if (q == 1) {
        c.action_gen = 1;
        c.twist = 0;
    } else {
        c.action_gen = *log_mod(k, data->u, q, grp.conj(data->u, w));
        c.twist = *log_mod(k, data->u, q, grp.pow(w, nl));
    }
    c.center = fixed_field(q, numth::cyclic_subgroup(c.action_gen, q));
    c.q_dimension = c.total_degree * c.total_degree * c.center.degree();
    return c;
}

std::vector<ComponentDescriptor> decomposition(const GroupPtr& g) {
    std::vector<ComponentDescriptor> out;
    for (const auto& p : strong_shoda_pairs(g)) out.push_back(component_of(g, p.l, p.k));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<i64, i64> perlis_walker(const std::vector<i64>& cyclic_orders) {
    i64 exponent = 1;
    for (i64 o : cyclic_orders) exponent = numth::lcm(exponent, o);
    std::map<i64, i64> exact;
    for (i64 d : numth::divisors(exponent)) {
        i64 dividing = 1;
        for (i64 o : cyclic_orders) dividing *= std::gcd(d, o);
        for (const auto& [e, cnt] : exact)
            if (d % e == 0) dividing -= cnt;
        exact[d] = dividing;
    }
    std::map<i64, i64> out;
    for (const auto& [d, cnt] : exact)
        if (cnt > 0) out[d] = cnt / numth::euler_phi(d);
    return out;
}

std::map<i64, i64> canonical_conductors(const std::map<i64, i64>& pw) {
    std::map<i64, i64> out;
    for (const auto& [d, mult] : pw) out[d % 4 == 2 ? d / 2 : d] += mult;
    return out;
}

std::vector<i64> abelianization(const GroupPtr& g) {
    const Subgroup gd = group::derived_subgroup(g);
    const i64 qorder = g->order() / gd.order();
    std::vector<i64> out;
    for (i64 p : numth::prime_factors(qorder)) {
        // levels[k] = log_p #{x in G/G' : x^(p^k) = 1}
        std::vector<int> levels{0};
        for (i64 pk = p; levels.back() < numth::vp(qorder, p); pk *= p) {
            i64 cnt = 0;
            for (int x = 0; x < g->order(); ++x)
                if (gd.contains(g->pow(x, pk))) ++cnt;
            levels.push_back(numth::vp(cnt / gd.order(), p));
        }
        // levels[k] - levels[k-1] counts cyclic factors of order at least p^k.
        const int top = static_cast<int>(levels.size()) - 1;
        for (int e = top; e >= 1; --e) {
            const int at_least = levels[e] - levels[e - 1];
            const int above = e == top ? 0 : levels[e + 1] - levels[e];
            for (int c = 0; c < at_least - above; ++c) out.push_back(numth::ipow(p, e));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<i64, i64> commutative_part(const std::vector<ComponentDescriptor>& decomp) {
    std::map<i64, i64> out;
    for (const auto& c : decomp)
        if (c.total_degree == 1) ++out[c.center.conductor];
    return out;
}

Fingerprint fingerprint(const std::vector<ComponentDescriptor>& decomp) {
    Fingerprint out;
    for (const auto& c : decomp) out.emplace_back(c.total_degree, c.center);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(AlgebraComparison c) {
    switch (c) {
        case AlgebraComparison::Different: return "DIFFERENT";
        case AlgebraComparison::Equal: return "EQUAL";
        case AlgebraComparison::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

AlgebraComparison compare_decompositions(const std::vector<ComponentDescriptor>& x,
                                         const std::vector<ComponentDescriptor>& y) {
    if (fingerprint(x) != fingerprint(y)) return AlgebraComparison::Different;
    auto xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return xs == ys ? AlgebraComparison::Equal : AlgebraComparison::Unknown;
}

AlgebraComparison compare_algebras(const GroupPtr& g, const GroupPtr& h) {
    return compare_decompositions(decomposition(g), decomposition(h));
}

}  // namespace mcg::wedderburn
