#include "doctest.h"
#include "mcg/group.hpp"

#include <array>
#include <map>
#include <numeric>
#include <set>

using namespace mcg::group;
using mcg::numth::DomainError;

namespace {

// Unit quaternions as (sign, basis) with basis 0=1, 1=i, 2=j, 3=k.
using Quat = std::pair<int, int>;
Quat qmul(Quat x, Quat y) {
    static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {x.first * y.first * sign[x.second][y.second], table[x.second][y.second]};
}
Quat qpow(Quat x, i64 k) {
    Quat r{1, 0};
    for (i64 e = 0; e < k; ++e) r = qmul(r, x);
    return r;
}

// Symmetries of a square as permutations of vertices 0..3.
using Perm = std::array<int, 4>;
Perm pmul(const Perm& x, const Perm& y) {  // apply x then y
    Perm r{};
    for (int v = 0; v < 4; ++v) r[v] = y[x[v]];
    return r;
}
Perm ppow(const Perm& x, i64 k) {
    Perm r{0, 1, 2, 3};
    for (i64 e = 0; e < k; ++e) r = pmul(r, x);
    return r;
}

// Every subgroup, by joining cyclic subgroups until stable.
std::set<std::vector<int>> naive_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> all;
    for (int x = 0; x < g->order(); ++x) all.insert(subgroup_generated(g, std::vector<int>{x}).elements());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(all.begin(), all.end());
        for (std::size_t u = 0; u < cur.size(); ++u)
            for (std::size_t v = u + 1; v < cur.size(); ++v) {
                std::vector<int> gens = cur[u];
                gens.insert(gens.end(), cur[v].begin(), cur[v].end());
                if (all.insert(subgroup_generated(g, gens).elements()).second) grew = true;
            }
    }
    return all;
}

}  // namespace

TEST_CASE("presentations are validated") {
    CHECK_NOTHROW(Group::make(4, 2, 2, 3));
    CHECK_THROWS_AS(Group::make(4, 2, 1, 3), DomainError);  // s(t-1) != 0
    CHECK_THROWS_AS(Group::make(7, 2, 0, 2), DomainError);  // t^n != 1
    CHECK_THROWS_AS(Group::make(4, 2, 0, 2), DomainError);  // gcd(t,m) != 1
    auto c6 = Group::make(6, 1, 0, 1);
    CHECK(c6->order() == 6);
    auto triv = Group::make(1, 1, 0, 1);
    CHECK(triv->order() == 1);
    CHECK(triv->t() == 1);
}

TEST_CASE("quaternion and dihedral presentations match concrete models") {
    auto q8 = Group::make(4, 2, 2, 3);
    const Quat qi{1, 1}, qj{1, 2};
    auto to_quat = [&](int g) {
        Element e = q8->element(g);
        return qmul(qpow(qi, e.i), qpow(qj, e.j));
    };
    std::set<Quat> image;
    for (int x = 0; x < 8; ++x) {
        image.insert(to_quat(x));
        for (int y = 0; y < 8; ++y) CHECK(to_quat(q8->mul(x, y)) == qmul(to_quat(x), to_quat(y)));
    }
    CHECK(image.size() == 8);

    auto d8 = Group::make(4, 2, 0, 3);
    const Perm rot{1, 2, 3, 0}, refl{0, 3, 2, 1};
    auto to_perm = [&](int g) {
        Element e = d8->element(g);
        return pmul(ppow(rot, e.i), ppow(refl, e.j));
    };
    std::set<Perm> pimage;
    for (int x = 0; x < 8; ++x) {
        pimage.insert(to_perm(x));
        for (int y = 0; y < 8; ++y) CHECK(to_perm(d8->mul(x, y)) == pmul(to_perm(x), to_perm(y)));
    }
    CHECK(pimage.size() == 8);
}

TEST_CASE("element arithmetic examples") {
    auto q8 = Group::make(4, 2, 2, 3);
    CHECK(q8->mul(Element{0, 1}, Element{1, 0}) == Element{3, 1});
    CHECK(q8->mul(Element{0, 1}, Element{0, 1}) == Element{2, 0});
    CHECK(q8->pow(Element{3, 1}, 2) == Element{2, 0});
    CHECK(q8->pow(Element{3, 1}, 0) == Element{0, 0});
    CHECK(q8->element_order(Element{1, 0}) == 4);
    CHECK(q8->element_order(Element{0, 0}) == 1);
    CHECK(q8->element(q8->comm(q8->gen_a(), q8->gen_b())) == Element{2, 0});
    auto c6 = Group::make(6, 1, 0, 1);
    CHECK(c6->pow(Element{1, 0}, 7) == Element{1, 0});
    auto s3 = Group::make(3, 2, 0, 2);
    CHECK(s3->element(s3->conj(s3->gen_a(), s3->gen_b())) == Element{2, 0});
    for (int x = 0; x < 8; ++x) CHECK(q8->mul(x, q8->identity()) == x);
}

TEST_CASE("group axioms on every presentation of order at most 48") {
    int groups = 0;
    for (const auto& p : all_presentations(48)) {
        auto g = Group::make(p);
        ++groups;
        const int sz = g->order();
        bool assoc = true, inverse = true;
        for (int x = 0; x < sz && assoc; ++x) {
            if (g->mul(x, g->inv(x)) != 0 || g->mul(g->inv(x), x) != 0 || g->mul(0, x) != x) inverse = false;
            for (int y = 0; y < sz && assoc; ++y) {
                const int xy = g->mul(x, y);
                for (int z = 0; z < sz; ++z)
                    if (g->mul(xy, z) != g->mul(x, g->mul(y, z))) {
                        assoc = false;
                        break;
                    }
            }
        }
        CHECK_MESSAGE(assoc, p.to_string());
        CHECK_MESSAGE(inverse, p.to_string());
    }
    CHECK(groups > 0);
}

TEST_CASE("closed-form powers agree with repeated products") {
    auto pres = all_presentations(64);
    // Deterministic spread of 20 presentations.
    for (std::size_t k = 0; k < 20; ++k) {
        const auto& p = pres[(k * 7919) % pres.size()];
        auto g = Group::make(p);
        for (int x = 0; x < g->order(); ++x) {
            int acc = 0;
            for (i64 e = 0; e <= 2 * g->order(); ++e) {
                CHECK(g->pow(x, e) == acc);
                acc = g->mul(acc, x);
            }
            CHECK(g->mul(g->pow(x, -3), g->pow(x, 3)) == 0);
        }
    }
}

TEST_CASE("subgroup lattice") {
    auto q8 = Group::make(4, 2, 2, 3);
    auto c6 = Group::make(6, 1, 0, 1);
    auto s3 = Group::make(3, 2, 0, 2);
    CHECK(enumerate_subgroups(q8).size() == 6);
    CHECK(enumerate_subgroups(c6).size() == 4);
    CHECK(enumerate_subgroups(s3).size() == 6);

    CHECK(subgroup_generated(q8, std::vector<Element>{{1, 0}}).elements() ==
          std::vector<int>{q8->id({0, 0}), q8->id({1, 0}), q8->id({2, 0}), q8->id({3, 0})});
    CHECK(subgroup_generated(q8, std::vector<Element>{{1, 0}, {0, 1}}).order() == 8);
    CHECK(subgroup_generated(s3, std::vector<Element>{{0, 1}}).order() == 2);

    for (const auto& p : all_presentations(24)) {
        auto g = Group::make(p);
        std::set<std::vector<int>> listed;
        for (const auto& h : enumerate_subgroups(g)) listed.insert(h.elements());
        CHECK_MESSAGE(listed.size() == enumerate_subgroups(g).size(), p.to_string());
        CHECK_MESSAGE(listed == naive_subgroups(g), p.to_string());
    }
}

TEST_CASE("normal structure") {
    auto s3 = Group::make(3, 2, 0, 2);
    CHECK(derived_subgroup(s3).order() == 3);
    auto hall3 = hall(s3, {3});
    REQUIRE(hall3);
    CHECK(is_normal(*hall3));
    auto hall2 = hall(s3, {2});
    REQUIRE(hall2);
    CHECK(hall2->order() == 2);
    CHECK_FALSE(is_normal(*hall2));
    CHECK(normal_hall_complement(s3, 2).has_value());   // C3 is a normal 2'-Hall
    CHECK_FALSE(normal_hall_complement(s3, 3).has_value());

    auto q8 = Group::make(4, 2, 2, 3);
    CHECK(center(q8).elements() == std::vector<int>{q8->id({0, 0}), q8->id({2, 0})});
    for (const auto& h : enumerate_subgroups(q8)) CHECK(is_normal(h));

    auto ab = Group::make(4, 2, 0, 1);
    CHECK(derived_subgroup(ab).order() == 1);

    for (const auto& p : all_presentations(48)) {
        auto g = Group::make(p);
        auto d = derived_subgroup(g);
        CHECK_MESSAGE(d == derived_of(whole(g)), p.to_string());
        std::vector<int> comms;
        for (int x = 0; x < g->order(); ++x)
            for (int y = 0; y < g->order(); ++y) comms.push_back(g->comm(x, y));
        CHECK_MESSAGE(d == subgroup_generated(g, comms), p.to_string());

        for (const auto& h : enumerate_subgroups(g)) {
            auto nh = normalizer(h);
            CHECK(h.is_subgroup_of(nh));
            CHECK(is_normal_in(h, nh));
            auto c = core(h);
            CHECK(is_normal(c));
            CHECK(c.is_subgroup_of(h));
            // The core contains every normal subgroup of G lying in h.
            for (const auto& k : enumerate_subgroups(g))
                if (k.is_subgroup_of(h) && is_normal(k)) CHECK(k.is_subgroup_of(c));
        }
        for (i64 q : mcg::numth::prime_factors(g->order())) {
            auto syl = sylow(g, q);
            CHECK(syl.order() == mcg::numth::ppart(g->order(), q));
        }
    }
}

TEST_CASE("cyclic quotients") {
    auto q8 = Group::make(4, 2, 2, 3);
    auto a = subgroup_generated(q8, std::vector<Element>{{1, 0}});
    auto cq = cyclic_quotient(a, trivial(q8));
    REQUIRE(cq);
    CHECK(cq->order == 4);
    CHECK(q8->element(cq->generator) == Element{1, 0});

    auto d8 = Group::make(4, 2, 0, 3);
    auto klein = subgroup_generated(d8, std::vector<Element>{{2, 0}, {0, 1}});
    CHECK(klein.order() == 4);
    CHECK_FALSE(cyclic_quotient(klein, trivial(d8)).has_value());
    auto same = cyclic_quotient(klein, klein);
    REQUIRE(same);
    CHECK(same->order == 1);
    auto s3 = Group::make(3, 2, 0, 2);
    CHECK_THROWS_AS(cyclic_quotient(whole(s3), subgroup_generated(s3, std::vector<Element>{{0, 1}})), DomainError);
}

TEST_CASE("cocyclic triples of C4 x C2") {
    auto l = Group::make(4, 2, 0, 1);
    auto big = whole(l);
    auto triples = cocyclic_triples(big, l->gen_a(), l->gen_b(), 2);
    std::set<std::tuple<int, i64, i64>> got;
    for (const auto& t : triples) got.insert({t.i, t.y, t.x});
    std::set<std::tuple<int, i64, i64>> expected{{1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 2, 2}, {2, 4, 2}, {2, 4, 4}};
    CHECK(got == expected);
    CHECK(cocyclic_subgroups(big).size() == 6);
    for (const auto& t : triples) {
        if (t.i == 1 && t.y == 2 && t.x == 1) {
            auto ga = subgroup_generated(l, std::vector<int>{l->gen_a()});
            CHECK(intersect(ga, t.k) == subgroup_generated(l, std::vector<Element>{{2, 0}}));
        }
    }
}

TEST_CASE("cocyclic triples biject onto cocyclic subgroups") {
    for (i64 p : {2, 3}) {
        for (int alpha = 0; alpha <= 6; ++alpha)
            for (int beta = 0; beta <= alpha && alpha + beta <= 6; ++beta) {
                i64 og = 1, oh = 1;
                for (int e = 0; e < alpha; ++e) og *= p;
                for (int e = 0; e < beta; ++e) oh *= p;
                auto l = Group::make(og, oh, 0, 1);
                auto big = whole(l);
                const int g = l->gen_a(), h = l->gen_b();
                auto triples = cocyclic_triples(big, g, h, p);
                std::set<std::vector<int>> images;
                auto gg = subgroup_generated(l, std::vector<int>{g});
                auto hh = subgroup_generated(l, std::vector<int>{h});
                for (const auto& t : triples) {
                    images.insert(t.k.elements());
                    CHECK(index(big, t.k) == t.y);
                    const i64 xp = mcg::numth::ppart(t.x, p);
                    if (t.i == 1) {
                        CHECK(intersect(gg, t.k) == subgroup_generated(l, std::vector<int>{l->pow(g, t.y / xp)}));
                        CHECK(intersect(hh, t.k) == subgroup_generated(l, std::vector<int>{l->pow(h, t.y)}));
                    } else {
                        CHECK(intersect(gg, t.k) == subgroup_generated(l, std::vector<int>{l->pow(g, t.y)}));
                        CHECK(intersect(hh, t.k) == subgroup_generated(l, std::vector<int>{l->pow(h, t.y / xp)}));
                    }
                }
                CHECK(images.size() == triples.size());
                std::set<std::vector<int>> brute;
                for (const auto& k : cocyclic_subgroups(big)) brute.insert(k.elements());
                CHECK(images == brute);
            }
    }
}

TEST_CASE("conjugacy classes of subgroups") {
    auto s3 = Group::make(3, 2, 0, 2);
    auto classes = subgroup_conjugacy_classes(enumerate_subgroups(s3));
    CHECK(classes.size() == 4);
    int order_two_classes = 0;
    for (const auto& c : classes)
        if (c.front().order() == 2) {
            ++order_two_classes;
            CHECK(c.size() == 3);
        }
    CHECK(order_two_classes == 1);
    auto q8 = Group::make(4, 2, 2, 3);
    auto qc = subgroup_conjugacy_classes(enumerate_subgroups(q8));
    CHECK(qc.size() == 6);
    for (const auto& c : qc) CHECK(c.size() == 1);
}

TEST_CASE("brute-force isomorphism") {
    auto q8 = Group::make(4, 2, 2, 3);
    auto d8 = Group::make(4, 2, 0, 3);
    CHECK_FALSE(brute_force_isomorphic(q8, d8));
    CHECK(brute_force_isomorphic(q8, q8));
    CHECK(brute_force_isomorphic(Group::make(9, 3, 0, 4), Group::make(9, 3, 3, 4)));
    // Relabelled presentations of the same group.
    CHECK(brute_force_isomorphic(Group::make(3, 2, 0, 2), Group::make(6, 1, 0, 1)) == false);
    CHECK(brute_force_isomorphic(Group::make(2, 2, 1, 1), Group::make(4, 1, 0, 1)));
    CHECK_THROWS_AS(brute_force_isomorphic(Group::make(128, 1, 0, 1), Group::make(128, 1, 0, 1)), DomainError);
}
