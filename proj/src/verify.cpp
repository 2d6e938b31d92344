#include "mcg/verify.hpp"

#include "mcg/analysis.hpp"
#include "mcg/wedderburn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mcg::verify {

using group::Group;
using group::GroupPtr;
using invariants::MCInv;

namespace {

const std::vector<std::pair<Check, std::string>> kNames = {
    {Check::RoundTrip, "roundtrip"},   {Check::Realizability, "realizability"}, {Check::IsoOracle, "iso-oracle"},
    {Check::Dimension, "dimension"},   {Check::PerlisWalker, "perlis-walker"},  {Check::RecoverR, "recoverR"},
    {Check::DeGpAG, "degpag"},         {Check::CountB, "countB"},               {Check::CountC, "countC"},
    {Check::Delta, "delta"},
};

bool per_order(Check c) { return c == Check::Realizability || c == Check::IsoOracle; }

bool wants(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

std::string str(const numth::UnitSubgroup& u) {
    std::ostringstream os;
    if (u.generator())
        os << "<" << *u.generator() << ">_" << u.modulus();
    else {
        os << "{";
        for (std::size_t i = 0; i < u.elements().size(); ++i) os << (i ? "," : "") << u.elements()[i];
        os << "}_" << u.modulus();
    }
    return os.str();
}

std::string str(const std::map<i64, i64>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : ",") << k << ":" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string str(const analysis::Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

Outcome make(Check c, std::string subject, bool pass, std::string lhs, std::string rhs) {
    Outcome o;
    o.check = c;
    o.subject = std::move(subject);
    o.pass = pass;
    o.lhs = std::move(lhs);
    o.rhs = std::move(rhs);
    return o;
}

std::vector<group::Presentation> presentations_of_order(i64 order) {
    std::vector<group::Presentation> out;
    for (const auto& p : group::all_presentations(order))
        if (p.m * p.n == order) out.push_back(p);
    return out;
}

void realizability(i64 order, std::vector<Outcome>& out) {
    std::set<MCInv> realized;
    for (const auto& p : presentations_of_order(order)) realized.insert(invariants::mcinv(Group::make(p)).inv);
    std::set<MCInv> candidates;
    for (const auto& t : invariants::candidate_tuples(order)) {
        if (t.m * t.n != order) continue;
        candidates.insert(t);
        const bool valid = invariants::validate_tuple(t).valid;
        const bool seen = realized.count(t) > 0;
        out.push_back(make(Check::Realizability, t.to_string(), valid == seen, valid ? "valid" : "invalid",
                           seen ? "realized" : "not realized"));
    }
    for (const auto& t : realized)
        if (!candidates.count(t))
            out.push_back(make(Check::Realizability, t.to_string(), false, "not a candidate", "realized"));
}

// Isomorphism is an equivalence relation, so comparing every presentation with its
// class representative and the representatives with each other decides every pair.
void iso_oracle(i64 order, std::vector<Outcome>& out) {
    std::map<MCInv, std::vector<GroupPtr>> classes;
    for (const auto& p : presentations_of_order(order)) {
        auto g = Group::make(p);
        classes[invariants::mcinv(g).inv].push_back(g);
    }
    std::vector<std::pair<MCInv, GroupPtr>> reps;
    for (const auto& [inv, members] : classes) {
        reps.emplace_back(inv, members.front());
        for (std::size_t i = 1; i < members.size(); ++i) {
            const bool iso = group::brute_force_isomorphic(members.front(), members[i]);
            out.push_back(make(Check::IsoOracle,
                               members[i]->presentation().to_string() + " ~ " +
                                   members.front()->presentation().to_string(),
                               iso, iso ? "isomorphic" : "not isomorphic", "equal MCINV " + inv.to_string()));
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const bool iso = group::brute_force_isomorphic(reps[i].second, reps[j].second);
            out.push_back(make(Check::IsoOracle, reps[i].first.to_string() + " vs " + reps[j].first.to_string(), !iso,
                               iso ? "isomorphic" : "not isomorphic", "distinct MCINV"));
        }
}

// Lazily shared data for the group-wise checks of one tuple.
struct GroupData {
    MCInv tuple;
    GroupPtr g;
    std::optional<analysis::Context> ctx_;
    std::optional<std::vector<wedderburn::ComponentDescriptor>> decomp_;

    const analysis::Context& ctx() {
        if (!ctx_) ctx_ = analysis::make_context(g);
        return *ctx_;
    }
    const std::vector<wedderburn::ComponentDescriptor>& decomp() {
        if (!decomp_) decomp_ = wedderburn::decomposition(g);
        return *decomp_;
    }
};

numth::UnitSubgroup action_on_derived_pi_prime(const analysis::Context& ctx) {
    const Group& g = *ctx.g;
    const auto derived = group::derived_subgroup(ctx.g);
    int gen = 0;
    for (int x : derived.elements())
        if (g.element_order(x) == derived.order()) gen = x;
    const int part = analysis::element_part(g, gen, ctx.pi_prime());
    return invariants::t_subgroup(group::subgroup_generated(ctx.g, std::vector<int>{part}));
}

void group_checks(GroupData& d, const std::vector<Check>& checks, std::vector<Outcome>& out) {
    const std::string subj = d.tuple.to_string();
    for (Check c : checks) {
        switch (c) {
            case Check::RoundTrip: {
                const MCInv got = invariants::mcinv(d.g).inv;
                out.push_back(make(c, subj, got == d.tuple, got.to_string(), d.tuple.to_string()));
                break;
            }
            case Check::Dimension: {
                i64 dim = 0;
                for (const auto& comp : d.decomp())
                    dim += comp.total_degree * comp.total_degree * comp.center.degree();
                out.push_back(make(c, subj, dim == d.g->order(), std::to_string(dim), std::to_string(d.g->order())));
                break;
            }
            case Check::PerlisWalker: {
                const auto lhs = wedderburn::commutative_part(d.decomp());
                const auto rhs = wedderburn::canonical_conductors(
                    wedderburn::perlis_walker(wedderburn::abelianization(d.g)));
                out.push_back(make(c, subj, lhs == rhs, str(lhs), str(rhs)));
                break;
            }
            case Check::RecoverR: {
                const auto& ctx = d.ctx();
                const auto got = analysis::recover_R(d.decomp(), ctx.m_pi_prime);
                const auto want = action_on_derived_pi_prime(ctx);
                out.push_back(make(c, subj + " R", got == want, str(got), str(want)));
                const i64 deg = analysis::max_a1a2_degree(d.decomp(), ctx.m_pi_prime);
                const i64 branch = analysis::max_degree_branch(ctx);
                out.push_back(make(c, subj + " max degree", deg == branch, std::to_string(deg), std::to_string(branch)));
                break;
            }
            case Check::DeGpAG: {
                const auto& ctx = d.ctx();
                for (i64 p : ctx.pi()) {
                    const auto rep = invariants::sylow_mcinv_consistency(d.g, ctx.cls, p);
                    std::string failed;
                    for (const auto& cl : rep.clauses)
                        if (!cl.holds) failed += (failed.empty() ? "" : "; ") + cl.name;
                    out.push_back(make(c, subj + " p=" + std::to_string(p), rep.all_hold(),
                                       failed.empty() ? "all clauses hold" : failed, "all clauses hold"));
                }
                break;
            }
            case Check::CountB: {
                const auto& ctx = d.ctx();
                const auto ne = analysis::formula_NE(ctx);
                if (!ne) break;
                const i64 count = analysis::count_B(ctx, d.decomp());
                Outcome o = make(c, subj, count == ne->value, std::to_string(count), std::to_string(ne->value));
                o.note = "d=" + std::to_string(ne->d) + " d1=" + std::to_string(ne->d1) + " h=" + std::to_string(ne->h) +
                         " refined=" + std::to_string(ne->refined);
                out.push_back(std::move(o));
                break;
            }
            case Check::CountC: {
                const auto& ctx = d.ctx();
                for (i64 p : ctx.pi()) {
                    const auto ng = analysis::formula_NG(ctx, p);
                    if (!ng) continue;
                    const i64 count = analysis::count_C(ctx, d.decomp(), p);
                    const bool ok = ng->uvt.structure_ok && ng->normalizers_ok && ng->value == analysis::Rational(count);
                    Outcome o = make(c, subj + " p=" + std::to_string(p), ok, std::to_string(count), str(ng->value));
                    o.flagged = !ng->closed_forms_agree;
                    for (const auto& f : ng->findings) o.note += (o.note.empty() ? "" : "; ") + f;
                    out.push_back(std::move(o));
                }
                break;
            }
            case Check::Delta: {
                const auto& ctx = d.ctx();
                for (i64 p : ctx.pi()) {
                    const i64 r_p = numth::ppart(ctx.r(), p), mp_p = numth::ppart(ctx.cls.derived.m_prime, p);
                    if (mp_p <= r_p) continue;
                    const auto w = analysis::delta_witness(ctx, p);
                    std::string failed;
                    auto need = [&failed](bool ok, const char* what) {
                        if (!ok) failed += (failed.empty() ? "" : ", ") + std::string(what);
                    };
                    need(w.which != analysis::WitnessCase::NotApplicable, "not applicable");
                    need(w.k0_normal, "K0 normal");
                    need(w.ss1_ss2, "SS1/SS2");
                    need(!w.ss3 || *w.ss3, "SS3");
                    need(w.degree_ok, "degree");
                    need(w.center_inside, "center conductor");
                    need(w.relative_degree_ok, "relative degree");
                    need(w.meets_pi_prime, "pi' intersection");
                    need(w.meets_p_part, "p-part intersection");
                    Outcome o = make(c, subj + " p=" + std::to_string(p), w.all(),
                                     failed.empty() ? "all conditions hold" : failed, "all conditions hold");
                    o.note = analysis::to_string(w.which) + (w.note.empty() ? "" : "; " + w.note);
                    out.push_back(std::move(o));
                }
                break;
            }
            case Check::Realizability:
            case Check::IsoOracle: break;
        }
    }
}

}  // namespace

std::string to_string(Check c) {
    for (const auto& [k, name] : kNames)
        if (k == c) return name;
    return "?";
}

std::optional<Check> parse_check(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> all = [] {
        std::vector<Check> v;
        for (const auto& kn : kNames) v.push_back(kn.first);
        return v;
    }();
    return all;
}

std::vector<WorkItem> work_items(const std::vector<Check>& checks, i64 max_order) {
    std::vector<WorkItem> items;
    if (std::any_of(checks.begin(), checks.end(), per_order))
        for (i64 n = 1; n <= max_order; ++n) items.push_back({std::nullopt, n});
    if (std::any_of(checks.begin(), checks.end(), [](Check c) { return !per_order(c); })) {
        auto tuples = invariants::valid_tuples(max_order);
        std::stable_sort(tuples.begin(), tuples.end(),
                         [](const MCInv& x, const MCInv& y) { return x.m * x.n < y.m * y.n; });
        for (const auto& t : tuples) items.push_back({t, t.m * t.n});
    }
    return items;
}

std::vector<Outcome> run_item(const WorkItem& item, const std::vector<Check>& checks) {
    std::vector<Outcome> out;
    if (!item.tuple) {
        if (wants(checks, Check::Realizability)) realizability(item.order, out);
        if (wants(checks, Check::IsoOracle)) iso_oracle(item.order, out);
        return out;
    }
    GroupData d{*item.tuple, Group::make(invariants::construct_group(*item.tuple)), std::nullopt, std::nullopt};
    group_checks(d, checks, out);
    return out;
}

std::vector<Summary> summarize(const std::vector<Check>& checks, const std::vector<Outcome>& outcomes) {
    std::vector<Summary> out;
    for (Check c : checks) {
        Summary s;
        s.check = c;
        for (const auto& o : outcomes) {
            if (o.check != c) continue;
            ++s.instances;
            if (o.pass)
                ++s.passed;
            else
                s.failures.push_back(o);
            if (o.flagged) {
                ++s.flagged;
                s.flags.push_back(o);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Summary> run(const std::vector<Check>& checks, i64 max_order) {
    std::vector<Outcome> all;
    for (const auto& item : work_items(checks, max_order)) {
        auto part = run_item(item, checks);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return summarize(checks, all);
}

}  // namespace mcg::verify
