#pragma once
// Finite metacyclic groups given by <a,b | a^m = 1, b^n = a^s, a^b = a^t>,
// with elements in normal form a^i b^j and g^h = h^-1 g h.

#include "mcg/numth.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mcg::group {

using numth::i64;

struct Presentation {
    i64 m = 1, n = 1, s = 0, t = 1;
    auto operator<=>(const Presentation&) const = default;
    std::string to_string() const;
};

struct Element {
    i64 i = 0, j = 0;
    auto operator<=>(const Element&) const = default;
};

class Group;
class Subgroup;
using GroupPtr = std::shared_ptr<const Group>;

// Default ceiling for whole-lattice operations.
inline constexpr i64 kSubgroupLatticeBound = 4096;

class Group : public std::enable_shared_from_this<Group> {
public:
    // Rejects inconsistent parameters, naming the violated congruence.
    static GroupPtr make(i64 m, i64 n, i64 s, i64 t);
    static GroupPtr make(const Presentation& p) { return make(p.m, p.n, p.s, p.t); }

    const Presentation& presentation() const { return pres_; }
    i64 m() const { return pres_.m; }
    i64 n() const { return pres_.n; }
    i64 s() const { return pres_.s; }
    i64 t() const { return pres_.t; }
    int order() const { return size_; }

    // Element ids enumerate normal forms: id = i*n + j.
    int id(const Element& e) const;
    Element element(int id) const { return {id / pres_.n, id % pres_.n}; }
    int identity() const { return 0; }
    int gen_a() const { return id({1 % pres_.m, 0}); }
    int gen_b() const { return id({0, 1 % pres_.n}); }

    int mul(int g, int h) const;
    Element mul(const Element& g, const Element& h) const { return element(mul(id(g), id(h))); }
    int inv(int g) const;
    int pow(int g, i64 k) const;
    Element pow(const Element& g, i64 k) const { return element(pow(id(g), k)); }
    i64 element_order(int g) const { return orders()[g]; }
    i64 element_order(const Element& g) const { return element_order(id(g)); }
    int conj(int g, int h) const { return mul(inv(h), mul(g, h)); }  // g^h
    int comm(int g, int h) const { return mul(inv(g), conj(g, h)); }  // g^-1 g^h

    const std::vector<i64>& orders() const;
    // Every subgroup, sorted by element list. Throws past kSubgroupLatticeBound.
    // The entries do not own the group and must not outlive it.
    const std::vector<Subgroup>& subgroups() const;

private:
    explicit Group(const Presentation& p);
    Presentation pres_;
    int size_;
    i64 tinv_;
    std::vector<i64> tinv_pow_;  // tinv^j mod m for 0 <= j < n
    std::vector<i64> t_pow_;     // t^j mod m for 0 <= j < n

    mutable std::once_flag orders_once_;
    mutable std::vector<i64> orders_;
    mutable std::once_flag subgroups_once_;
    mutable std::vector<Subgroup> subgroups_;
};

class Subgroup {
public:
    Subgroup() = default;

    const GroupPtr& owner() const { return owner_; }
    const Group& group() const { return *owner_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    const std::vector<int>& gens() const { return gens_; }
    bool contains(int g) const { return (bits_[g >> 6] >> (g & 63)) & 1u; }
    bool is_subgroup_of(const Subgroup& other) const;
    const std::vector<std::uint64_t>& bits() const { return bits_; }

    bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
    std::strong_ordering operator<=>(const Subgroup& o) const { return elems_ <=> o.elems_; }

    // Closure of gens.
    static Subgroup generated(const GroupPtr& g, const std::vector<int>& gens);
    // Assumes elems is a subgroup; picks a small generating set.
    static Subgroup from_elements(const GroupPtr& g, std::vector<int> elems);

private:
    Subgroup(GroupPtr g, std::vector<int> elems, std::vector<int> gens);
    GroupPtr owner_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> elems_;
    std::vector<int> gens_;
    friend class Group;
    friend std::optional<Subgroup> closure_bounded(const GroupPtr&, const std::vector<int>&, int);
};

// Closure of gens, or nothing once it exceeds max_order elements.
std::optional<Subgroup> closure_bounded(const GroupPtr& g, const std::vector<int>& gens, int max_order);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);
Subgroup whole(const GroupPtr& g);
Subgroup trivial(const GroupPtr& g);
const std::vector<Subgroup>& enumerate_subgroups(const GroupPtr& g);

Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
i64 index(const Subgroup& big, const Subgroup& small);

bool is_abelian(const Subgroup& h);
bool is_cyclic(const Subgroup& h);
bool is_normal(const Subgroup& h);                      // in the whole group
bool is_normal_in(const Subgroup& k, const Subgroup& l);  // k normal in l, k <= l
Subgroup normalizer(const Subgroup& h);
Subgroup core(const Subgroup& h);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& xs);
Subgroup center(const GroupPtr& g);
// G' = <a^(t-1)> for the presentation.
Subgroup derived_subgroup(const GroupPtr& g);
// Derived subgroup of an arbitrary subgroup, by commutator normal closure.
Subgroup derived_of(const Subgroup& h);
std::optional<Subgroup> hall(const GroupPtr& g, const std::vector<i64>& primes);
// The normal Hall p'-subgroup, when one exists.
std::optional<Subgroup> normal_hall_complement(const GroupPtr& g, i64 p);
Subgroup sylow(const GroupPtr& g, i64 p);

struct CyclicQuotient {
    i64 order;
    int generator;  // smallest u in L with L = <u, K>
};
// L/K when cyclic. Throws unless K is normal in L.
std::optional<CyclicQuotient> cyclic_quotient(const Subgroup& l, const Subgroup& k);
// Order of gK in L/K for K normal in L.
i64 coset_order(const Subgroup& k, int g);

struct CocyclicTriple {
    int i;
    i64 y, x;
    Subgroup k;
};
// The parametrized cocyclic subgroups of an abelian p-group L = <g> x <h>, |g| >= |h|.
std::vector<CocyclicTriple> cocyclic_triples(const Subgroup& l, int g, int h, i64 p);
// Every normal subgroup of L with cyclic quotient, by enumeration.
std::vector<Subgroup> cocyclic_subgroups(const Subgroup& l);

Subgroup conjugate_subgroup(const Subgroup& h, int g);
// Orbits under conjugation by the whole group; classes and members sorted.
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(const std::vector<Subgroup>& subs);

inline constexpr int kIsomorphismSearchBound = 96;
// Exhaustive search for images of (a,b) satisfying the defining relations.
bool brute_force_isomorphic(const GroupPtr& g, const GroupPtr& h, int bound = kIsomorphismSearchBound);

// Every consistent presentation with m*n <= max_order (s in [0,m), t in [1,m)).
std::vector<Presentation> all_presentations(i64 max_order);

}  // namespace mcg::group
