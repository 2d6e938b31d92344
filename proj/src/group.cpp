#include "mcg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mcg::group {

using numth::DomainError;

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "(" << m << "," << n << "," << s << "," << t << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Group

Group::Group(const Presentation& p) : pres_(p), size_(static_cast<int>(p.m * p.n)) {
    tinv_ = p.m == 1 ? 0 : numth::inverse_mod(p.t, p.m);
    tinv_pow_.resize(p.n);
    t_pow_.resize(p.n);
    i64 x = 1 % p.m, y = 1 % p.m;
    for (i64 j = 0; j < p.n; ++j) {
        tinv_pow_[j] = x;
        t_pow_[j] = y;
        x = numth::mulmod(x, tinv_, p.m);
        y = numth::mulmod(y, p.t, p.m);
    }
}

GroupPtr Group::make(i64 m, i64 n, i64 s, i64 t) {
    if (m < 1 || n < 1) throw DomainError("presentation: m and n must be positive");
    if (m * n > (i64{1} << 24)) throw DomainError("presentation: order too large");
    if (std::gcd(numth::mod(t, m), m) != 1 && m != 1)
        throw DomainError("presentation: gcd(t, m) != 1");
    if (numth::powmod(t, n, m) != 1 % m) throw DomainError("presentation: t^n != 1 (mod m)");
    if (numth::mulmod(s, numth::mod(t - 1, m), m) != 0)
        throw DomainError("presentation: s(t-1) != 0 (mod m)");
    Presentation p{m, n, numth::mod(s, m), numth::unit_residue(t, m)};
    auto g = std::shared_ptr<Group>(new Group(p));
    // Associativity spot check on a fixed spread of triples.
    const int sz = g->size_;
    for (int k = 0; k < 16; ++k) {
        int x = static_cast<int>((7919LL * k + 13) % sz);
        int y = static_cast<int>((104729LL * k + 5) % sz);
        int z = static_cast<int>((1299709LL * k + 1) % sz);
        if (g->mul(g->mul(x, y), z) != g->mul(x, g->mul(y, z)))
            throw DomainError("presentation: multiplication not associative");
    }
    return g;
}

int Group::id(const Element& e) const {
    return static_cast<int>(numth::mod(e.i, pres_.m) * pres_.n + numth::mod(e.j, pres_.n));
}

int Group::mul(int g, int h) const {
    const i64 n = pres_.n, m = pres_.m;
    i64 i1 = g / n, j1 = g % n, i2 = h / n, j2 = h % n;
    i64 i = i1 + i2 * tinv_pow_[j1] % m;
    i64 j = j1 + j2;
    if (j >= n) {
        j -= n;
        i += pres_.s;
    }
    return static_cast<int>((i % m) * n + j);
}

int Group::inv(int g) const {
    // (a^i b^j)^-1 = b^-j a^-i
    const i64 n = pres_.n, m = pres_.m;
    i64 i = g / n, j = g % n;
    int binv = id({0, 0});
    if (j != 0) {
        // b^-j = a^-s b^(n-j)
        binv = id({numth::mod(-pres_.s, m), n - j});
    }
    return mul(binv, id({numth::mod(-i, m), 0}));
}

int Group::pow(int g, i64 k) const {
    if (k < 0) return pow(inv(g), -k);
    const i64 n = pres_.n, m = pres_.m;
    i64 i = g / n, j = g % n;
    // a^i b^j = b^j a^(i t^j), so the k-th power is b^(jk) a^(i t^j ese(t^j, k)).
    i64 x = t_pow_[j];
    i64 e = numth::mulmod(numth::mulmod(i, x, m), numth::ese_mod(x, k, m), m);
    i64 big_j = j * k;
    i64 q = big_j / n, r = big_j % n;
    i64 exp_a = numth::mod(numth::mulmod(q % m, pres_.s, m) + numth::mulmod(e, tinv_pow_[r], m), m);
    return static_cast<int>(exp_a * n + r);
}

const std::vector<i64>& Group::orders() const {
    std::call_once(orders_once_, [this] {
        orders_.assign(size_, 0);
        const auto divs = numth::divisors(size_);
        for (int g = 0; g < size_; ++g) {
            for (i64 d : divs) {
                if (pow(g, d) == 0) {
                    orders_[g] = d;
                    break;
                }
            }
        }
    });
    return orders_;
}

const std::vector<Subgroup>& Group::subgroups() const {
    std::call_once(subgroups_once_, [this] {
        if (size_ > kSubgroupLatticeBound) throw DomainError("enumerate_subgroups: group order exceeds bound");
        GroupPtr self = shared_from_this();
        const i64 m = pres_.m, n = pres_.n;
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<Subgroup> out;
        const int b = gen_b();
        for (i64 d : numth::divisors(m)) {
            int ad = pow(gen_a(), d);
            for (i64 f : numth::divisors(n)) {
                int bf = pow(b, f);
                const int target = static_cast<int>((m / d) * (n / f));
                for (i64 e = 0; e < d; ++e) {
                    int second = mul(id({e, 0}), bf);
                    auto h = closure_bounded(self, {ad, second}, target);
                    if (!h || h->order() != target) continue;
                    if (seen.insert(h->bits()).second) out.push_back(std::move(*h));
                }
            }
        }
        std::sort(out.begin(), out.end());
        // Non-owning: an owning pointer here would keep the group alive through its own cache.
        const GroupPtr weak_self(GroupPtr{}, self.get());
        for (auto& h : out) h.owner_ = weak_self;
        subgroups_ = std::move(out);
    });
    return subgroups_;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr g, std::vector<int> elems, std::vector<int> gens)
    : owner_(std::move(g)), elems_(std::move(elems)), gens_(std::move(gens)) {
    bits_.assign((owner_->order() + 63) / 64, 0);
    for (int e : elems_) bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
    std::sort(elems_.begin(), elems_.end());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

std::optional<Subgroup> closure_bounded(const GroupPtr& g, const std::vector<int>& gens, int max_order) {
    std::vector<std::uint64_t> bits((g->order() + 63) / 64, 0);
    std::vector<int> elems{0};
    bits[0] = 1;
    std::vector<int> useful;
    for (int x : gens)
        if (x != 0) useful.push_back(x);
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        const int e = elems[idx];
        for (int x : useful) {
            int y = g->mul(e, x);
            if (!((bits[y >> 6] >> (y & 63)) & 1u)) {
                bits[y >> 6] |= std::uint64_t{1} << (y & 63);
                elems.push_back(y);
                if (static_cast<int>(elems.size()) > max_order) return std::nullopt;
            }
        }
    }
    std::vector<int> gs(gens.begin(), gens.end());
    return Subgroup(g, std::move(elems), std::move(gs));
}

Subgroup Subgroup::generated(const GroupPtr& g, const std::vector<int>& gens) {
    return *closure_bounded(g, gens, g->order());
}

Subgroup Subgroup::from_elements(const GroupPtr& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    // Greedy generating set: largest element order first.
    std::vector<int> by_order = elems;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int x, int y) { return g->element_order(x) > g->element_order(y); });
    std::vector<int> gens;
    Subgroup cur = generated(g, {});
    for (int x : by_order) {
        if (cur.order() == static_cast<int>(elems.size())) break;
        if (cur.contains(x)) continue;
        gens.push_back(x);
        cur = generated(g, gens);
    }
    return Subgroup(g, std::move(elems), std::move(gens));
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) { return Subgroup::generated(g, gens); }

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
    std::vector<int> ids;
    for (const auto& e : gens) ids.push_back(g->id(e));
    return Subgroup::generated(g, ids);
}

Subgroup whole(const GroupPtr& g) { return Subgroup::generated(g, {g->gen_a(), g->gen_b()}); }
Subgroup trivial(const GroupPtr& g) { return Subgroup::generated(g, {}); }
const std::vector<Subgroup>& enumerate_subgroups(const GroupPtr& g) { return g->subgroups(); }

Subgroup join(const Subgroup& h, const Subgroup& k) {
    std::vector<int> gens = h.gens();
    gens.insert(gens.end(), k.gens().begin(), k.gens().end());
    return Subgroup::generated(h.owner(), gens);
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
    std::vector<int> el;
    for (int x : h.elements())
        if (k.contains(x)) el.push_back(x);
    return Subgroup::from_elements(h.owner(), std::move(el));
}

i64 index(const Subgroup& big, const Subgroup& small) { return big.order() / small.order(); }

bool is_abelian(const Subgroup& h) {
    const Group& g = h.group();
    for (int x : h.gens())
        for (int y : h.gens())
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

bool is_cyclic(const Subgroup& h) {
    const auto& ord = h.group().orders();
    for (int x : h.elements())
        if (ord[x] == h.order()) return true;
    return false;
}

bool is_normal_in(const Subgroup& k, const Subgroup& l) {
    const Group& g = k.group();
    for (int x : k.gens())
        for (int y : l.gens())
            if (!k.contains(g.conj(x, y))) return false;
    return true;
}

bool is_normal(const Subgroup& h) { return is_normal_in(h, whole(h.owner())); }

Subgroup normalizer(const Subgroup& h) {
    const Group& g = h.group();
    std::vector<int> el;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y : h.gens())
            if (!h.contains(g.conj(y, x))) {
                ok = false;
                break;
            }
        if (ok) el.push_back(x);
    }
    return Subgroup::from_elements(h.owner(), std::move(el));
}

Subgroup conjugate_subgroup(const Subgroup& h, int x) {
    const Group& g = h.group();
    std::vector<int> gens;
    for (int y : h.gens()) gens.push_back(g.conj(y, x));
    return Subgroup::generated(h.owner(), gens);
}

Subgroup core(const Subgroup& h) {
    const Group& g = h.group();
    Subgroup c = h;
    // c shrinks to {y in c : y^a, y^b in c} until stable.
    for (;;) {
        Subgroup next = intersect(intersect(c, conjugate_subgroup(c, g.inv(g.gen_a()))),
                                  conjugate_subgroup(c, g.inv(g.gen_b())));
        if (next.order() == c.order()) return c;
        c = std::move(next);
    }
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& xs) {
    std::vector<int> el;
    for (int y = 0; y < g->order(); ++y) {
        bool ok = true;
        for (int x : xs)
            if (g->mul(x, y) != g->mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) el.push_back(y);
    }
    return Subgroup::from_elements(g, std::move(el));
}

Subgroup center(const GroupPtr& g) { return centralizer(g, {g->gen_a(), g->gen_b()}); }

Subgroup derived_subgroup(const GroupPtr& g) {
    return Subgroup::generated(g, {g->id({g->t() - 1, 0})});
}

Subgroup derived_of(const Subgroup& h) {
    const GroupPtr& g = h.owner();
    std::vector<int> gens;
    for (int x : h.gens())
        for (int y : h.gens())
            if (x < y) gens.push_back(g->comm(x, y));
    Subgroup c = Subgroup::generated(g, gens);
    for (;;) {
        std::vector<int> extra;
        for (int x : c.gens())
            for (int y : h.gens()) {
                int z = g->conj(x, y);
                if (!c.contains(z)) extra.push_back(z);
            }
        if (extra.empty()) return c;
        std::vector<int> all = c.gens();
        all.insert(all.end(), extra.begin(), extra.end());
        c = Subgroup::generated(g, all);
    }
}

std::optional<Subgroup> hall(const GroupPtr& g, const std::vector<i64>& primes) {
    const i64 target = numth::part(g->order(), primes);
    for (const auto& h : g->subgroups())
        if (h.order() == target) return h;
    return std::nullopt;
}

std::optional<Subgroup> normal_hall_complement(const GroupPtr& g, i64 p) {
    const auto& ord = g->orders();
    const i64 target = g->order() / numth::ppart(g->order(), p);
    std::vector<int> el;
    for (int x = 0; x < g->order(); ++x)
        if (ord[x] % p != 0) el.push_back(x);
    if (static_cast<i64>(el.size()) != target) return std::nullopt;
    Subgroup h = Subgroup::generated(g, el);
    if (h.order() != target) return std::nullopt;
    return Subgroup::from_elements(g, h.elements());
}

Subgroup sylow(const GroupPtr& g, i64 p) {
    const auto& ord = g->orders();
    const i64 target = numth::ppart(g->order(), p);
    Subgroup cur = trivial(g);
    std::vector<int> gens;
    for (int x = 0; x < g->order() && cur.order() < target; ++x) {
        if (cur.contains(x) || numth::ppart(ord[x], p) != ord[x]) continue;
        std::vector<int> trial = gens;
        trial.push_back(x);
        auto h = closure_bounded(g, trial, static_cast<int>(target));
        if (!h || numth::ppart(h->order(), p) != h->order()) continue;
        gens = std::move(trial);
        cur = std::move(*h);
    }
    return Subgroup::from_elements(g, cur.elements());
}

i64 coset_order(const Subgroup& k, int x) {
    const Group& g = k.group();
    int y = x;
    i64 e = 1;
    while (!k.contains(y)) {
        y = g.mul(y, x);
        ++e;
    }
    return e;
}

std::optional<CyclicQuotient> cyclic_quotient(const Subgroup& l, const Subgroup& k) {
    if (!k.is_subgroup_of(l) || !is_normal_in(k, l)) throw DomainError("cyclic_quotient: K not normal in L");
    const i64 q = index(l, k);
    for (int u : l.elements())
        if (coset_order(k, u) == q) return CyclicQuotient{q, u};
    return std::nullopt;
}

std::vector<CocyclicTriple> cocyclic_triples(const Subgroup& l, int g, int h, i64 p) {
    const GroupPtr& grp = l.owner();
    if (!is_abelian(l)) throw DomainError("cocyclic_triples: L not abelian");
    const i64 og = grp->element_order(g), oh = grp->element_order(h);
    if (!numth::is_prime(p) || numth::ppart(og, p) != og || numth::ppart(oh, p) != oh)
        throw DomainError("cocyclic_triples: generators must have p-power order");
    if (og < oh) throw DomainError("cocyclic_triples: need |g| >= |h|");
    if (!l.contains(g) || !l.contains(h) || og * oh != l.order() ||
        subgroup_generated(grp, std::vector<int>{g, h}).order() != l.order())
        throw DomainError("cocyclic_triples: L is not <g> x <h>");

    std::vector<CocyclicTriple> out;
    for (i64 y : numth::divisors(oh))
        for (i64 x = 1; x <= y; ++x) {
            int gen1 = grp->mul(g, grp->pow(h, x));
            out.push_back({1, y, x, subgroup_generated(grp, std::vector<int>{gen1, grp->pow(h, y)})});
        }
    for (i64 y : numth::divisors(og)) {
        if (y % p != 0) continue;
        for (i64 x = p; x <= y; x += p) {
            if ((oh * x) % y != 0) continue;
            int gen1 = grp->mul(grp->pow(g, x), h);
            out.push_back({2, y, x, subgroup_generated(grp, std::vector<int>{gen1, grp->pow(g, y)})});
        }
    }
    return out;
}

std::vector<Subgroup> cocyclic_subgroups(const Subgroup& l) {
    std::vector<Subgroup> out;
    for (const auto& k : l.group().subgroups()) {
        if (!k.is_subgroup_of(l) || !is_normal_in(k, l)) continue;
        if (cyclic_quotient(l, k)) out.push_back(k);
    }
    return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(const std::vector<Subgroup>& subs) {
    std::vector<std::vector<Subgroup>> classes;
    std::set<std::vector<int>> assigned;
    std::vector<Subgroup> sorted = subs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& h : sorted) {
        if (assigned.count(h.elements())) continue;
        const Group& g = h.group();
        std::vector<Subgroup> orbit{h};
        std::set<std::vector<int>> in_orbit{h.elements()};
        for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
            for (int x : {g.gen_a(), g.gen_b()}) {
                Subgroup c = conjugate_subgroup(orbit[idx], x);
                if (in_orbit.insert(c.elements()).second) orbit.push_back(c);
            }
        }
        std::vector<Subgroup> members;
        for (const auto& s : sorted)
            if (in_orbit.count(s.elements())) {
                members.push_back(s);
                assigned.insert(s.elements());
            }
        classes.push_back(std::move(members));
    }
    return classes;
}

bool brute_force_isomorphic(const GroupPtr& g, const GroupPtr& h, int bound) {
    if (g->order() != h->order()) return false;
    if (g->order() > bound) throw DomainError("brute_force_isomorphic: order exceeds bound");
    std::vector<i64> hist_g = g->orders(), hist_h = h->orders();
    std::sort(hist_g.begin(), hist_g.end());
    std::sort(hist_h.begin(), hist_h.end());
    if (hist_g != hist_h) return false;

    const auto& p = g->presentation();
    const i64 order_a = g->element_order(g->gen_a());
    const i64 order_b = g->element_order(g->gen_b());
    const auto& hord = h->orders();
    for (int x = 0; x < h->order(); ++x) {
        if (hord[x] != order_a) continue;
        const int xs = h->pow(x, p.s);
        const int xt = h->pow(x, p.t);
        for (int y = 0; y < h->order(); ++y) {
            if (hord[y] != order_b) continue;
            if (h->pow(y, p.n) != xs || h->conj(x, y) != xt) continue;
            if (subgroup_generated(h, std::vector<int>{x, y}).order() == h->order()) return true;
        }
    }
    return false;
}

std::vector<Presentation> all_presentations(i64 max_order) {
    std::vector<Presentation> out;
    for (i64 m = 1; m <= max_order; ++m)
        for (i64 n = 1; m * n <= max_order; ++n) {
            std::vector<i64> ts;
            if (m == 1) {
                ts.push_back(1);
            } else {
                for (i64 t = 1; t < m; ++t)
                    if (std::gcd(t, m) == 1 && numth::powmod(t, n, m) == 1) ts.push_back(t);
            }
            for (i64 t : ts)
                for (i64 s = 0; s < m; ++s)
                    if (numth::mulmod(s, numth::mod(t - 1, m), m) == 0) out.push_back({m, n, s, t});
        }
    return out;
}

}  // namespace mcg::group
