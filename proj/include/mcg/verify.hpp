#pragma once
// Batch verification over all metacyclic groups up to an order bound. The work
// is split into independent items so callers can evaluate them in parallel;
// results are merged back in item order.

#include "mcg/invariants.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcg::verify {

using numth::i64;

enum class Check {
    RoundTrip,       // mcinv(construct_group(T)) = T
    Realizability,   // validate_tuple(T) iff T is the MCINV of some presentation
    IsoOracle,       // brute-force isomorphism iff equal MCINV
    Dimension,       // sum of component dimensions = |G|
    PerlisWalker,    // commutative components = Perlis-Walker of G/G'
    RecoverR,        // R read off QG, and the maximal A1+A2 degree
    DeGpAG,          // Sylow MCINV consistency for p in pi
    CountB,          // count_B = formula_NE in its regime
    CountC,          // count_C = formula_NG under U1-U3
    Delta,           // delta_witness for p in pi with m'_p > r_p
};

std::string to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
const std::vector<Check>& all_checks();

// One instance of a check. A flagged instance passes but carries a finding.
struct Outcome {
    Check check;
    std::string subject;
    bool pass = true;
    bool flagged = false;
    std::string lhs, rhs;
    std::string note;
};

// Either one valid tuple (group-wise checks) or one order (checks over all presentations of that order).
struct WorkItem {
    std::optional<invariants::MCInv> tuple;
    i64 order = 0;
};

// Items in canonical order: per-order items by order, then tuples by (order, tuple).
std::vector<WorkItem> work_items(const std::vector<Check>& checks, i64 max_order);
// Outcomes of the requested checks that range over this item, in check order.
std::vector<Outcome> run_item(const WorkItem& item, const std::vector<Check>& checks);

struct Summary {
    Check check;
    i64 instances = 0, passed = 0, flagged = 0;
    std::vector<Outcome> failures;  // every failing instance
    std::vector<Outcome> flags;     // every flagged instance
    bool pass() const { return passed == instances; }
};
std::vector<Summary> summarize(const std::vector<Check>& checks, const std::vector<Outcome>& outcomes);

// Sequential convenience wrapper.
std::vector<Summary> run(const std::vector<Check>& checks, i64 max_order);

}  // namespace mcg::verify
