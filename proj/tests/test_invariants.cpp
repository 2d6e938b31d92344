#include "doctest.h"
#include "mcg/invariants.hpp"

#include <set>

using namespace mcg::invariants;
using mcg::group::Element;
using mcg::group::Group;
using mcg::numth::cyclic_subgroup;
using mcg::numth::DomainError;

namespace {

GroupPtr q8() { return Group::make(4, 2, 2, 3); }
GroupPtr d8() { return Group::make(4, 2, 0, 3); }
GroupPtr s3() { return Group::make(3, 2, 0, 2); }
GroupPtr modular16() { return Group::make(8, 2, 0, 5); }

Subgroup a_sub(const GroupPtr& g) { return mcg::group::subgroup_generated(g, std::vector<int>{g->gen_a()}); }

}  // namespace

TEST_CASE("conjugation action on a normal cyclic subgroup") {
    CHECK(t_subgroup(a_sub(q8())) == cyclic_subgroup(3, 4));
    CHECK(t_subgroup(a_sub(s3())) == cyclic_subgroup(2, 3));
    auto ab = Group::make(6, 2, 0, 1);
    CHECK(t_subgroup(a_sub(ab)).is_trivial());
    auto b = mcg::group::subgroup_generated(s3(), std::vector<Element>{{0, 1}});
    CHECK_THROWS_AS(t_subgroup(b), DomainError);
}

TEST_CASE("r, eps, k") {
    CHECK(rek_of(a_sub(q8())) == Rek{4, -1, 1});
    CHECK(rek_of(a_sub(s3())) == Rek{1, 1, 2});
    auto c12 = Group::make(12, 1, 0, 1);
    CHECK(rek_of(a_sub(c12)) == Rek{12, 1, 1});
}

TEST_CASE("minimal factorizations") {
    auto c6 = minimal_factorization(Group::make(6, 1, 0, 1));
    CHECK(c6.m == 1);
    CHECK(c6.n == 6);
    CHECK(c6.s == 1);
    auto fq = minimal_factorization(q8());
    CHECK(fq.m == 4);
    CHECK(fq.n == 2);
    CHECK(fq.s == 2);
    auto fs = minimal_factorization(s3());
    CHECK(fs.m == 3);
    CHECK(fs.n == 2);
    CHECK(fs.s == 3);
}

TEST_CASE("pi sets") {
    auto ps = pi_sets(s3());
    CHECK(ps.pi == std::vector<i64>{2});
    CHECK(ps.pi_prime == std::vector<i64>{3});
    auto nil = pi_sets(Group::make(12, 2, 0, 1));
    CHECK(nil.pi == std::vector<i64>{2, 3});
    CHECK(nil.pi_prime.empty());
    auto p27 = pi_sets(Group::make(9, 3, 0, 4));
    CHECK(p27.pi == std::vector<i64>{3});
}

TEST_CASE("m' formula") {
    CHECK(m_prime_of(4, 2, 2, 4, -1, 1, {}) == 4);
    CHECK(m_prime_of(3, 2, 3, 1, 1, 2, {3}) == 3);
    CHECK(m_prime_of(8, 2, 8, 4, 1, 1, {}) == 4);
}

TEST_CASE("mcinv examples") {
    auto cq = mcinv(q8());
    CHECK(cq.inv == MCInv{4, 2, 2, cyclic_subgroup(3, 4)});
    auto cs = mcinv(s3());
    CHECK(cs.inv == MCInv{3, 2, 3, cyclic_subgroup(2, 3)});
    CHECK(cs.derived.R == cyclic_subgroup(2, 3));
    for (i64 n : {1, 2, 5, 12}) {
        auto cn = mcinv(Group::make(n, 1, 0, 1));
        CHECK(cn.inv == MCInv{1, n, 1, mcg::numth::UnitSubgroup::trivial(1)});
    }
    auto cd = mcinv(d8());
    CHECK(cd.inv == MCInv{4, 2, 4, cyclic_subgroup(3, 4)});
    // A = <a^2 b> is normal cyclic of order 4 and meets <a> in order 2, so |A| = 4 is minimal.
    auto cm = mcinv(modular16());
    CHECK(cm.inv == MCInv{4, 4, 2, cyclic_subgroup(3, 4)});
    CHECK(cm.derived.r == 4);
    CHECK(cm.derived.eps == -1);
}

TEST_CASE("tuple validation") {
    CHECK(validate_tuple(4, 2, 2, cyclic_subgroup(3, 4)).valid);
    // (4,2,4,<3>_4): r=4, eps=-1, k=1; every clause holds, realized by D8.
    CHECK(validate_tuple(4, 2, 4, cyclic_subgroup(3, 4)).valid);
    for (i64 n : {1, 3, 8}) CHECK(validate_tuple(1, n, 1, mcg::numth::UnitSubgroup::trivial(1)).valid);
    // s_2 = n_2 r_2 is excluded.
    auto bad = validate_tuple(4, 2, 8, cyclic_subgroup(3, 4));
    CHECK_FALSE(bad.valid);
    CHECK_THROWS_AS(validate_tuple(8, 2, 8, mcg::numth::UnitSubgroup::full(8)), DomainError);
}

TEST_CASE("group construction from tuples") {
    CHECK(construct_group(MCInv{4, 2, 2, cyclic_subgroup(3, 4)}) == Presentation{4, 2, 2, 3});
    CHECK(construct_group(MCInv{1, 7, 1, mcg::numth::UnitSubgroup::trivial(1)}) == Presentation{1, 7, 0, 1});
    CHECK(construct_group(MCInv{3, 2, 3, cyclic_subgroup(2, 3)}) == Presentation{3, 2, 0, 2});
    CHECK_THROWS_AS(construct_group(MCInv{4, 2, 8, cyclic_subgroup(3, 4)}), DomainError);
}

TEST_CASE("isomorphism via invariants") {
    CHECK_FALSE(isomorphic(q8(), d8()));
    CHECK(isomorphic(q8(), q8()));
    CHECK(isomorphic(Group::make(9, 3, 0, 4), Group::make(9, 3, 3, 4)));
}

TEST_CASE("structural properties over small presentations") {
    for (const auto& p : mcg::group::all_presentations(48)) {
        auto g = Group::make(p);
        Classification c;
        REQUIRE_NOTHROW(c = mcinv(g, true));
        CHECK(c.inv.m * c.inv.n == g->order());
        CHECK(validate_tuple(c.inv).valid);
        // pi' coincides with the primes of m outside pi(r).
        std::vector<i64> expected;
        for (i64 q : mcg::numth::prime_factors(c.inv.m))
            if (c.derived.r % q != 0) expected.push_back(q);
        CHECK_MESSAGE(c.derived.pi_prime == expected, p.to_string());
        // G'_{pi'} = <a_{pi'}> for the chosen minimal factorization.
        const i64 m_pi = mcg::numth::part(c.inv.m, c.derived.pi_prime);
        auto a_pi = mcg::group::subgroup_generated(g, std::vector<int>{g->pow(c.fact.a, c.inv.m / m_pi)});
        auto gd = mcg::group::derived_subgroup(g);
        CHECK(a_pi.order() == m_pi);
        CHECK(a_pi.is_subgroup_of(gd));
        CHECK(mcg::numth::part(gd.order(), c.derived.pi_prime) == m_pi);
        CHECK(c.derived.k == c.derived.R.order());
        // Reconstruction reproduces the tuple.
        CHECK_MESSAGE(mcinv(Group::make(construct_group(c.inv))).inv == c.inv, p.to_string());
    }
}

TEST_CASE("presentation of a subgroup") {
    auto g = Group::make(12, 4, 6, 5);
    auto h = mcg::group::sylow(g, 2);
    auto pres = presentation_of(h);
    CHECK(pres.m * pres.n == h.order());
    CHECK(mcg::group::brute_force_isomorphic(Group::make(pres),
                                             Group::make(presentation_of(mcg::group::whole(Group::make(pres))))));
}

TEST_CASE("Sylow consistency") {
    auto rs = sylow_mcinv_consistency(s3(), 2);
    CHECK(rs.all_hold());
    CHECK_THROWS_AS(sylow_mcinv_consistency(s3(), 3), DomainError);
    auto rm = sylow_mcinv_consistency(modular16(), 2);
    CHECK(rm.all_hold());
    CHECK(rm.mu == 2);
    CHECK(rm.nu == 2);
    for (const auto& p : mcg::group::all_presentations(40)) {
        auto g = Group::make(p);
        auto c = mcinv(g);
        for (i64 q : c.derived.pi) {
            auto rep = sylow_mcinv_consistency(g, c, q);
            for (const auto& cl : rep.clauses) CHECK_MESSAGE(cl.holds, (p.to_string() + " p=" + std::to_string(q) + " " + cl.name));
            if (c.derived.pi_prime.empty()) {
                CHECK(mcg::numth::ppart(c.inv.m, q) == mcg::numth::ipow(q, rep.mu));
                CHECK(mcg::numth::ppart(c.inv.n, q) == mcg::numth::ipow(q, rep.nu));
            }
        }
    }
}
