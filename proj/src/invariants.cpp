#include "mcg/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcg::invariants {

using group::Group;
using numth::DomainError;
using numth::ppart;
using numth::vp;

std::strong_ordering MCInv::operator<=>(const MCInv& o) const {
    if (auto c = m * n <=> o.m * o.n; c != 0) return c;
    if (auto c = m <=> o.m; c != 0) return c;
    if (auto c = n <=> o.n; c != 0) return c;
    if (auto c = s <=> o.s; c != 0) return c;
    if (auto c = delta_gen() <=> o.delta_gen(); c != 0) return c;
    return delta <=> o.delta;
}

std::string MCInv::to_string() const {
    std::ostringstream os;
    os << "(" << m << "," << n << "," << s << ",<" << delta_gen() << ">_" << m_prime() << ")";
    return os.str();
}

i64 discrete_log(const Subgroup& a, int gen, int x) {
    const Group& g = a.group();
    int cur = 0;
    for (i64 e = 0; e < a.order(); ++e) {
        if (cur == x) return e;
        cur = g.mul(cur, gen);
    }
    throw DomainError("discrete_log: element outside the cyclic subgroup");
}

i64 conjugation_exponent(const Subgroup& a, int gen, int h) {
    return discrete_log(a, gen, a.group().conj(gen, h));
}

namespace {

int smallest_generator(const Subgroup& a) {
    const auto& ord = a.group().orders();
    for (int x : a.elements())
        if (ord[x] == a.order()) return x;
    throw DomainError("subgroup is not cyclic");
}

}  // namespace

UnitSubgroup t_subgroup(const Subgroup& a) {
    if (!group::is_normal(a)) throw DomainError("t_subgroup: A is not normal");
    const int gen = smallest_generator(a);
    const Group& g = a.group();
    const i64 m = a.order();
    std::vector<i64> exps;
    for (int h : {g.gen_a(), g.gen_b()}) exps.push_back(numth::unit_residue(conjugation_exponent(a, gen, h), m));
    return UnitSubgroup::generated(m, exps);
}

Rek rek_from(const UnitSubgroup& t, i64 m) {
    const i64 d = t.modulus();
    Rek out;
    for (i64 p : numth::prime_factors(d)) {
        i64 best = 1;
        for (i64 q = p; d % q == 0; q *= p) {
            const UnitSubgroup res = numth::restrict(t, q);
            const bool ok = p == 2 ? res.is_subgroup_of(numth::cyclic_subgroup(-1, q)) : res.is_trivial();
            if (ok) best = q;
        }
        out.r *= best;
    }
    const i64 r2 = ppart(out.r, 2);
    out.eps = numth::restrict(t, r2).is_trivial() ? 1 : -1;
    std::vector<i64> nu;
    for (i64 p : numth::prime_factors(m))
        if (out.r % p != 0) nu.push_back(p);
    const i64 m_nu = std::gcd(numth::part(m, nu), d);
    out.k = numth::restrict(t, m_nu).order();
    return out;
}

Rek rek_of(const Subgroup& a) { return rek_from(t_subgroup(a), a.order()); }

std::vector<Factorization> minimal_factorizations(const GroupPtr& g) {
    const int size = g->order();
    // Cyclic subgroups with their smallest generators, in order of first generator.
    struct Cyc {
        Subgroup sub;
        int gen;
    };
    std::vector<Cyc> cyclic;
    std::set<std::vector<std::uint64_t>> seen;
    for (int x = 0; x < size; ++x) {
        Subgroup c = group::subgroup_generated(g, std::vector<int>{x});
        if (seen.insert(c.bits()).second) cyclic.push_back({std::move(c), x});
    }

    auto meet = [](const Subgroup& u, const Subgroup& v) {
        int cnt = 0;
        for (std::size_t w = 0; w < u.bits().size(); ++w) cnt += __builtin_popcountll(u.bits()[w] & v.bits()[w]);
        return cnt;
    };

    struct Cand {
        std::tuple<i64, i64, i64> key;
        std::size_t ai, bi;
    };
    std::vector<Cand> cands;
    std::map<std::size_t, std::pair<UnitSubgroup, Rek>> rek_cache;
    for (std::size_t ai = 0; ai < cyclic.size(); ++ai) {
        const Subgroup& a = cyclic[ai].sub;
        if (!group::is_normal(a)) continue;
        for (std::size_t bi = 0; bi < cyclic.size(); ++bi) {
            const Subgroup& b = cyclic[bi].sub;
            if (static_cast<i64>(a.order()) * b.order() != static_cast<i64>(size) * meet(a, b)) continue;
            auto it = rek_cache.find(ai);
            if (it == rek_cache.end()) {
                UnitSubgroup t = t_subgroup(a);
                Rek rk = rek_from(t, a.order());
                it = rek_cache.emplace(ai, std::make_pair(t, rk)).first;
            }
            cands.push_back({{a.order(), it->second.second.r, size / b.order()}, ai, bi});
        }
    }
    if (cands.empty()) throw DomainError("minimal_factorizations: no metacyclic factorization");
    auto best = std::min_element(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.key < y.key; })->key;
    std::vector<Factorization> out;
    for (const auto& c : cands) {
        if (c.key != best) continue;
        Factorization f;
        f.a_sub = cyclic[c.ai].sub;
        f.b_sub = cyclic[c.bi].sub;
        f.a = cyclic[c.ai].gen;
        f.b = cyclic[c.bi].gen;
        f.m = f.a_sub.order();
        f.n = size / f.m;
        f.s = size / f.b_sub.order();
        f.t_sub = rek_cache.at(c.ai).first;
        f.rek = rek_cache.at(c.ai).second;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Factorization& x, const Factorization& y) {
        if (x.a_sub != y.a_sub) return x.a_sub < y.a_sub;
        return x.b_sub < y.b_sub;
    });
    return out;
}

Factorization minimal_factorization(const GroupPtr& g) { return minimal_factorizations(g).front(); }

PiSets pi_sets(const GroupPtr& g) {
    PiSets out;
    for (i64 p : numth::prime_factors(g->order())) {
        if (group::normal_hall_complement(g, p))
            out.pi.push_back(p);
        else
            out.pi_prime.push_back(p);
    }
    return out;
}

i64 m_prime_of(i64 m, i64 n, i64 s, i64 r, int eps, i64 k, const std::vector<i64>& pi_prime) {
    i64 out = numth::part(m, pi_prime);
    for (i64 p : numth::prime_factors(r)) {
        const i64 mp = ppart(m, p), np = ppart(n, p), sp = ppart(s, p), rp = ppart(r, p), kp = ppart(k, p);
        i64 val;
        if (p != 2 || eps == 1) {
            i64 inner = std::max(rp, sp);
            const i64 num = rp * sp * kp;
            if (num % np == 0) inner = std::max(inner, num / np);
            val = std::min({mp, kp * rp, inner});
        } else if (kp <= 2 || mp <= 2 * rp) {
            val = rp;
        } else if (4 <= kp && kp < np && 4 * rp <= mp && (sp == np * rp || (2 * sp == mp && mp < np * rp))) {
            val = mp / 2;
        } else {
            val = mp;
        }
        out *= val;
    }
    return out;
}

namespace {

MCInv tuple_from(const Factorization& f, const std::vector<i64>& pi_prime, i64* m_prime_out) {
    const i64 mp = m_prime_of(f.m, f.n, f.s, f.rek.r, f.rek.eps, f.rek.k, pi_prime);
    if (m_prime_out) *m_prime_out = mp;
    return MCInv{f.m, f.n, f.s, numth::restrict(f.t_sub, mp)};
}

}  // namespace

Classification mcinv(const GroupPtr& g, bool check_all) {
    auto facts = minimal_factorizations(g);
    Classification out;
    out.fact = facts.front();
    PiSets ps = pi_sets(g);
    i64 mp = 1;
    out.inv = tuple_from(out.fact, ps.pi_prime, &mp);
    if (check_all) {
        for (const auto& f : facts) {
            if (tuple_from(f, ps.pi_prime, nullptr) != out.inv)
                throw std::logic_error("mcinv: tuple depends on the minimal factorization for " +
                                       g->presentation().to_string());
        }
    }
    DerivedInv& d = out.derived;
    d.r = out.fact.rek.r;
    d.eps = out.fact.rek.eps;
    d.k = out.fact.rek.k;
    d.m_prime = mp;
    d.pi = ps.pi;
    d.pi_prime = ps.pi_prime;

    Subgroup gd = group::derived_subgroup(g);
    const int gd_gen = smallest_generator(gd);
    const i64 part = numth::part(gd.order(), ps.pi_prime);
    Subgroup gd_pi = group::subgroup_generated(g, std::vector<int>{g->pow(gd_gen, gd.order() / part)});
    d.R = t_subgroup(gd_pi);
    return out;
}

TupleCheck validate_tuple(i64 m, i64 n, i64 s, const UnitSubgroup& delta) {
    if (!delta.is_cyclic()) throw DomainError("validate_tuple: Delta must be cyclic");
    TupleCheck out;
    auto fail = [&](const std::string& why) { out.violations.push_back(why); };
    const i64 mp = delta.modulus();
    if (m < 1 || n < 1 || s < 1) {
        fail("m, n, s must be positive");
        return out;
    }
    if (m % mp != 0) {
        fail("m' must divide m");
        return out;
    }
    out.rek = rek_from(delta, m);
    const Rek& rk = out.rek;
    for (i64 p : numth::prime_factors(m))
        if (rk.r % p != 0) out.pi_prime.push_back(p);

    if (m % s != 0) fail("s divides m");
    if (n % delta.order() != 0) fail("|Delta| divides n");
    const i64 m_pi = numth::part(m, out.pi_prime);
    if (numth::part(s, out.pi_prime) != m_pi || numth::part(mp, out.pi_prime) != m_pi)
        fail("m_pi' = s_pi' = m'_pi'");

    // U_4 = <-1>_4, so a realized r has 4 | r whenever 4 | m.
    if (m % 4 == 0 && ppart(rk.r, 2) == 2) fail("r_2 >= 4 when 4 | m");
    const i64 expected = m_prime_of(m, n, s, rk.r, rk.eps, rk.k, out.pi_prime);
    for (i64 p : numth::prime_factors(rk.r))
        if (ppart(mp, p) != ppart(expected, p)) fail("m'_" + std::to_string(p) + " formula");

    if (rk.eps == -1) {
        const i64 m2 = ppart(m, 2), n2 = ppart(n, 2), s2 = ppart(s, 2), r2 = ppart(rk.r, 2), k2 = ppart(rk.k, 2);
        if (m2 / r2 > n2) fail("m_2/r_2 <= n_2");
        if (m2 > 2 * s2) fail("m_2 <= 2 s_2");
        if (s2 == n2 * r2) fail("s_2 != n_2 r_2");
        if (n % 4 == 0 && m % 8 == 0 && k2 < n2 && r2 > s2) fail("r_2 <= s_2");
    }
    for (i64 p : numth::prime_factors(rk.r)) {
        if (p == 2 && rk.eps == -1) continue;
        const i64 mpp = ppart(m, p), np = ppart(n, p), sp = ppart(s, p), rp = ppart(rk.r, p), kp = ppart(rk.k, p);
        if (!(mpp / rp <= sp && sp <= np)) fail("m_p/r_p <= s_p <= n_p at p=" + std::to_string(p));
        if (rp > sp && !(np < sp * kp)) fail("n_p < s_p k_p at p=" + std::to_string(p));
    }
    out.valid = out.violations.empty();
    return out;
}

std::vector<MCInv> candidate_tuples(i64 max_order) {
    std::vector<MCInv> out;
    std::map<i64, std::vector<UnitSubgroup>> cyc_cache;
    for (i64 m = 1; m <= max_order; ++m) {
        const auto mdivs = numth::divisors(m);
        for (i64 mp : mdivs) {
            if (!cyc_cache.count(mp)) cyc_cache[mp] = numth::all_cyclic_subgroups(mp);
        }
        for (i64 n = 1; m * n <= max_order; ++n)
            for (i64 s : mdivs)
                for (i64 mp : mdivs)
                    for (const auto& d : cyc_cache[mp])
                        if (n % d.order() == 0) out.push_back({m, n, s, d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MCInv> valid_tuples(i64 max_order) {
    std::vector<MCInv> out;
    for (auto& t : candidate_tuples(max_order))
        if (validate_tuple(t).valid) out.push_back(std::move(t));
    return out;
}

Presentation construct_group(const MCInv& t) {
    TupleCheck chk = validate_tuple(t);
    if (!chk.valid) throw DomainError("construct_group: invalid tuple " + t.to_string());
    const Rek& rk = chk.rek;
    const i64 m = t.m, mp = t.m_prime();
    const i64 delta_order = t.delta.order();
    const i64 delta_gen = t.delta.generator().value_or(1);
    const auto primes = numth::prime_factors(m);

    for (i64 u = 1; u <= delta_order; ++u) {
        if (std::gcd(u, delta_order) != 1) continue;
        const i64 x = numth::powmod(delta_gen, u, mp);
        std::vector<i64> residues, moduli;
        bool ok = true;
        for (i64 p : primes) {
            const i64 mpart = ppart(m, p);
            const i64 mprime_part = ppart(mp, p);
            if (rk.r % p != 0) {
                residues.push_back(x % mpart);
                moduli.push_back(mpart);
                continue;
            }
            const i64 lead = (p == 2 && rk.eps == -1) ? -1 : 1;
            const UnitSubgroup target = numth::cyclic_subgroup(lead + ppart(rk.r, p), mpart);
            std::optional<i64> pick;
            for (i64 c : target.elements()) {
                if (numth::mult_order(c, mpart) != target.order()) continue;
                if (numth::mod(c - x, mprime_part) != 0) continue;
                pick = c;
                break;
            }
            if (!pick) {
                ok = false;
                break;
            }
            residues.push_back(*pick);
            moduli.push_back(mpart);
        }
        if (!ok) continue;
        const i64 gamma = numth::unit_residue(numth::crt(residues, moduli), m);
        if (numth::powmod(gamma, t.n, m) != 1 % m) continue;
        if (numth::mulmod(t.s % m, numth::mod(gamma - 1, m), m) != 0) continue;
        if (numth::restrict(numth::cyclic_subgroup(gamma, m), mp) != t.delta) continue;
        return Presentation{m, t.n, t.s % m, gamma};
    }
    throw std::logic_error("construct_group: no automorphism found for " + t.to_string());
}

bool isomorphic(const GroupPtr& g, const GroupPtr& h) {
    if (g->order() != h->order()) return false;
    return mcinv(g).inv == mcinv(h).inv;
}

Presentation presentation_of(const Subgroup& h) {
    const GroupPtr& g = h.owner();
    std::vector<std::pair<Subgroup, int>> cyclic;
    std::set<std::vector<int>> seen;
    for (int x : h.elements()) {
        Subgroup c = group::subgroup_generated(g, std::vector<int>{x});
        if (seen.insert(c.elements()).second) cyclic.push_back({std::move(c), x});
    }
    std::sort(cyclic.begin(), cyclic.end(),
              [](const auto& u, const auto& v) { return u.first.order() > v.first.order(); });
    for (const auto& [c, cgen] : cyclic) {
        if (!group::is_normal_in(c, h)) continue;
        for (const auto& [d, dgen] : cyclic) {
            if (static_cast<i64>(c.order()) * d.order() != static_cast<i64>(h.order()) * group::intersect(c, d).order())
                continue;
            const i64 mm = c.order();
            const i64 nn = h.order() / mm;
            const i64 ss = discrete_log(c, cgen, g->pow(dgen, nn));
            const i64 tt = conjugation_exponent(c, cgen, dgen);
            return Presentation{mm, nn, ss, numth::unit_residue(tt, mm)};
        }
    }
    throw DomainError("presentation_of: subgroup is not metacyclic");
}

bool SylowReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.holds; });
}

SylowReport sylow_mcinv_consistency(const GroupPtr& g, i64 p) { return sylow_mcinv_consistency(g, mcinv(g), p); }

SylowReport sylow_mcinv_consistency(const GroupPtr& g, const Classification& c, i64 p) {
    if (std::find(c.derived.pi.begin(), c.derived.pi.end(), p) == c.derived.pi.end())
        throw DomainError("sylow_mcinv_consistency: p not in pi_G");
    Subgroup syl = group::sylow(g, p);
    GroupPtr gp = Group::make(presentation_of(syl));
    Classification cp = mcinv(gp);

    SylowReport rep;
    rep.p = p;
    rep.mu = vp(cp.inv.m, p);
    rep.nu = vp(cp.inv.n, p);
    rep.sigma = vp(cp.inv.s, p);
    rep.rho = vp(cp.derived.r, p);
    rep.e = cp.derived.eps;
    const i64 mu = rep.mu, nu = rep.nu, sigma = rep.sigma, rho = rep.rho;
    const int e = rep.e;
    auto pw = [p](i64 k) {
        i64 v = 1;
        for (i64 i = 0; i < k; ++i) v *= p;
        return v;
    };
    auto add = [&](const std::string& name, bool holds) { rep.clauses.push_back({name, holds}); };

    add("T(<c>) = <e+p^rho>", cp.fact.t_sub == numth::cyclic_subgroup(e + pw(rho), pw(mu)));
    add("rho=0 => mu=0", rho != 0 || mu == 0);
    add("p=2, rho=1 => mu=1", !(p == 2 && rho == 1) || mu == 1);
    add("e=1 => rho<=sigma<=mu<=rho+sigma, sigma<=nu",
        e != 1 || (rho <= sigma && sigma <= mu && mu <= rho + sigma && sigma <= nu));
    add("e=-1 => p=2<=rho<=mu, nu>=1, mu-1<=sigma<=mu<=rho+nu!=sigma",
        e != -1 || (p == 2 && 2 <= rho && rho <= mu && nu >= 1 && mu - 1 <= sigma && sigma <= mu &&
                    mu <= rho + nu && rho + nu != sigma));
    add("e=-1, nu>=2, mu>=3 => rho<=sigma", !(e == -1 && nu >= 2 && mu >= 3) || rho <= sigma);

    const i64 m_p = ppart(c.inv.m, p), n_p = ppart(c.inv.n, p), s_p = ppart(c.inv.s, p);
    const i64 r_p = ppart(c.derived.r, p), k_p = ppart(c.derived.k, p);
    const int eps = c.derived.eps;
    i64 exponent = 1;
    for (int x : syl.elements()) exponent = std::max(exponent, g->element_order(x));

    add("m_p n_p = p^(mu+nu)", m_p * n_p == pw(mu + nu));
    add("p^mu | m_p", m_p % pw(mu) == 0);
    add("s_p = p^sigma", s_p == pw(sigma));
    add("p^mu = m_p <=> p^nu = n_p", (pw(mu) == m_p) == (pw(nu) == n_p));
    add("p^mu = m_p => p^rho = r_p", pw(mu) != m_p || pw(rho) == r_p);
    if (p != 2 || e == 1) {
        add("p=2 => eps=1", p != 2 || eps == 1);
        add("m_p/r_p = p^(mu-rho)", m_p == r_p * pw(mu - rho));
        add("exp(G_p) = m_p n_p/s_p = p^(mu+nu-sigma)",
            exponent * s_p == m_p * n_p && exponent == pw(mu + nu - sigma));
        add("m_p != p^mu => k_p>1, mu!=0, rho=sigma, k_p s_p > n_p",
            m_p == pw(mu) || (k_p > 1 && mu != 0 && rho == sigma && k_p * s_p > n_p));
    }
    if (p == 2 && e == -1) {
        add("eps=-1 <=> m_2 = 2^mu", (eps == -1) == (m_p == pw(mu)));
        add("eps=1 => 2=n_2=k_2<2^nu, sigma=1, mu=2, m_2=2^(nu+1), r_2=2^nu",
            eps != 1 || (n_p == 2 && k_p == 2 && 2 < pw(nu) && sigma == 1 && mu == 2 && m_p == pw(nu + 1) &&
                         r_p == pw(nu)));
    }
    return rep;
}

}  // namespace mcg::invariants
