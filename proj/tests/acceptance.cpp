// One line per acceptance criterion: PASS/FAIL, the criterion, counts and timing.
// Failing and flagged instances are listed under their criterion.

#include "mcg/verify.hpp"
#include "mcg/wedderburn.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using mcg::numth::i64;
using mcg::verify::Check;
using mcg::verify::Summary;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
    std::vector<std::string> listing;
};

std::string outcome_line(const mcg::verify::Outcome& o) {
    std::string line = "    " + mcg::verify::to_string(o.check) + " " + o.subject + ": " + o.lhs + " vs " + o.rhs;
    if (!o.note.empty()) line += " (" + o.note + ")";
    return line;
}

// Runs the checks to the bound; passes when every instance passes.
Verdict from_checks(const std::vector<Check>& checks, i64 bound) {
    Verdict v;
    std::ostringstream os;
    for (const Summary& s : mcg::verify::run(checks, bound)) {
        v.pass = v.pass && s.pass();
        os << (os.tellp() > 0 ? ", " : "") << mcg::verify::to_string(s.check) << " " << s.passed << "/" << s.instances;
        if (s.flagged) os << " (" << s.flagged << " flagged)";
        for (const auto& o : s.failures) v.listing.push_back("  FAIL" + outcome_line(o).substr(2));
        for (const auto& o : s.flags) v.listing.push_back("  FLAG" + outcome_line(o).substr(2));
    }
    v.detail = os.str();
    return v;
}

Verdict golden() {
    using mcg::group::Group;
    using mcg::wedderburn::decomposition;
    Verdict v;
    auto expect = [&v](bool ok, const std::string& what) {
        if (!ok) {
            v.pass = false;
            v.listing.push_back("  FAIL " + what);
        }
    };
    auto count = [](const auto& d, auto pred) { return std::count_if(d.begin(), d.end(), pred); };
    auto is_q = [](const auto& c) { return c.total_degree == 1 && c.center.conductor == 1; };

    const auto s3 = decomposition(Group::make(3, 2, 0, 2));
    // M_2(Q) appears as the split cyclic algebra (Q(zeta_3)/Q, x -> x^2, 1).
    expect(s3.size() == 3 && count(s3, is_q) == 2 &&
               count(s3, [](const auto& c) {
                   return c.total_degree == 2 && c.center.conductor == 1 && c.twist == 0;
               }) == 1,
           "QS3 = Q^2 + M_2(Q)");

    const auto q8 = decomposition(Group::make(4, 2, 2, 3));
    expect(q8.size() == 5 && count(q8, is_q) == 4 &&
               count(q8, [](const auto& c) {
                   return c.conductor == 4 && c.twist == 2 && c.center.conductor == 1 && c.total_degree == 2;
               }) == 1,
           "QQ8 = Q^4 + (conductor 4, twist 2) over Q");

    const auto d8 = decomposition(Group::make(4, 2, 0, 3));
    expect(d8.size() == 5 && count(d8, is_q) == 4 &&
               count(d8, [](const auto& c) { return c.conductor == 4 && c.twist == 0; }) == 1,
           "QD8 = Q^4 + (conductor 4, twist 0)");

    const auto z3 = mcg::wedderburn::fixed_field(3, mcg::numth::UnitSubgroup::trivial(3));
    const auto g27 = decomposition(Group::make(9, 3, 0, 4));
    expect(g27.size() == 6 && count(g27, is_q) == 1 &&
               count(g27, [&](const auto& c) { return c.total_degree == 1 && c.center == z3; }) == 4 &&
               count(g27, [&](const auto& c) { return c.total_degree == 3 && c.center == z3; }) == 1,
           "Q[(9,3,0,4)] = Q + 4 Q(zeta_3) + (degree 3 over Q(zeta_3))");

    const auto verdict = mcg::wedderburn::compare_algebras(Group::make(4, 2, 2, 3), Group::make(4, 2, 0, 3));
    expect(verdict == mcg::wedderburn::AlgebraComparison::Unknown,
           "comparator(Q8, D8) = UNKNOWN, got " + mcg::wedderburn::to_string(verdict));
    v.detail = "QS3, QQ8, QD8, Q[(9,3,0,4)], comparator(Q8,D8) = UNKNOWN";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "classification round-trip, m*n <= 200", [] { return from_checks({Check::RoundTrip}, 200); }},
        {2, "isomorphism iff equal MCINV, m*n <= 64", [] { return from_checks({Check::IsoOracle}, 64); }},
        {3, "realizability, m*n <= 128", [] { return from_checks({Check::Realizability}, 128); }},
        {4, "Wedderburn dimension identity, |G| <= 256", [] { return from_checks({Check::Dimension}, 256); }},
        {5, "Perlis-Walker slice, |G| <= 256", [] { return from_checks({Check::PerlisWalker}, 256); }},
        {6, "golden decompositions", golden},
        {7, "R and maximal degree from QG, |G| <= 256", [] { return from_checks({Check::RecoverR}, 256); }},
        {8, "Sylow MCINV consistency, |G| <= 256", [] { return from_checks({Check::DeGpAG}, 256); }},
        {9, "component counts: count_C = formula_NG and count_B = formula_NE, |G| <= 512",
         [] { return from_checks({Check::CountC, Check::CountB}, 512); }},
        {10, "Delta witnesses, |G| <= 512", [] { return from_checks({Check::Delta}, 512); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Verdict v = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && v.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << v.detail
                  << "] " << timing << "\n";
        for (const auto& line : v.listing) std::cout << line << "\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
