// Command-line front end: enumerate, mcinv, construct, wedderburn, isoq, verify.
// Data goes to stdout, progress to stderr. Output is independent of --jobs.

#include "mcg/analysis.hpp"
#include "mcg/invariants.hpp"
#include "mcg/verify.hpp"
#include "mcg/wedderburn.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using mcg::group::Group;
using mcg::group::GroupPtr;
using mcg::group::Presentation;
using mcg::invariants::MCInv;
using mcg::numth::i64;

namespace {

constexpr i64 kMaxEnumerateOrder = 4096;

enum class Format { Table, Json, Csv };

// Applies fn to every item on `jobs` threads; results keep item order.
template <class Item, class Fn>
auto parallel_map(const std::vector<Item>& items, int jobs, Fn fn, const std::string& label) {
    using Result = decltype(fn(items.front()));
    std::vector<Result> results(items.size());
    std::atomic<std::size_t> next{0}, done{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < items.size();) {
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
            const std::size_t d = ++done;
            if (items.size() >= 20 && d % (items.size() / 10) == 0)
                std::cerr << label << ": " << d << "/" << items.size() << "\n";
        }
    };
    std::vector<std::thread> pool;
    const int width = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    for (int t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

json to_json(const MCInv& t) {
    return {{"m", t.m}, {"n", t.n}, {"s", t.s}, {"m_prime", t.m_prime()}, {"delta_gen", t.delta_gen()}};
}

json to_json(const Presentation& p) { return {{"m", p.m}, {"n", p.n}, {"s", p.s}, {"t", p.t}}; }

json to_json(const mcg::numth::UnitSubgroup& u) {
    if (u.generator()) return *u.generator();
    return u.elements();
}

json to_json(const mcg::wedderburn::ComponentDescriptor& c) {
    return {{"matrix_size", c.matrix_size},
            {"conductor", c.conductor},
            {"x", c.action_gen},
            {"y", c.twist},
            {"center", {{"conductor", c.center.conductor}, {"fixer_gen", to_json(c.center.fixer)}}},
            {"degree", c.total_degree},
            {"dim", c.q_dimension}};
}

std::string join(const std::vector<i64>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string subgroup_str(const mcg::numth::UnitSubgroup& u) {
    if (u.generator()) return "<" + std::to_string(*u.generator()) + ">_" + std::to_string(u.modulus());
    return "{" + join(u.elements()) + "}_" + std::to_string(u.modulus());
}

Presentation presentation_arg(const std::vector<i64>& v, std::size_t at = 0) {
    return {v.at(at), v.at(at + 1), v.at(at + 2), v.at(at + 3)};
}

// Integers print as JSON numbers, an absent value as null, anything else as a string.
json scalar(const std::string& s) {
    if (s.empty()) return nullptr;
    if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos && s != "-") {
        try {
            return std::stoll(s);
        } catch (...) {
        }
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_enumerate(i64 max_order, Format fmt, int jobs) {
    if (max_order < 1 || max_order > kMaxEnumerateOrder)
        throw mcg::numth::DomainError("enumerate: max order must be in [1, " + std::to_string(kMaxEnumerateOrder) + "]");
    auto tuples = mcg::invariants::valid_tuples(max_order);
    std::stable_sort(tuples.begin(), tuples.end(), [](const MCInv& x, const MCInv& y) {
        return std::make_tuple(x.m * x.n, x.m, x.n, x.s, x.delta_gen()) <
               std::make_tuple(y.m * y.n, y.m, y.n, y.s, y.delta_gen());
    });
    const auto pres = parallel_map(
        tuples, jobs, [](const MCInv& t) { return mcg::invariants::construct_group(t); }, "enumerate");
    if (fmt == Format::Json) {
        json arr = json::array();
        for (std::size_t i = 0; i < tuples.size(); ++i)
            arr.push_back({{"order", tuples[i].m * tuples[i].n},
                           {"presentation", to_json(pres[i])},
                           {"mcinv", to_json(tuples[i])}});
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "order,m,n,s,m_prime,delta_gen,p_m,p_n,p_s,p_t\n";
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const auto& t = tuples[i];
            const auto& p = pres[i];
            std::cout << t.m * t.n << "," << t.m << "," << t.n << "," << t.s << "," << t.m_prime() << ","
                      << t.delta_gen() << "," << p.m << "," << p.n << "," << p.s << "," << p.t << "\n";
        }
    } else {
        std::cout << std::left << std::setw(7) << "order" << std::setw(22) << "MCINV"
                  << "presentation (m,n,s,t)\n";
        for (std::size_t i = 0; i < tuples.size(); ++i)
            std::cout << std::setw(7) << tuples[i].m * tuples[i].n << std::setw(22) << tuples[i].to_string()
                      << pres[i].to_string() << "\n";
    }
    return 0;
}

int cmd_mcinv(const Presentation& p, Format fmt) {
    const auto c = mcg::invariants::mcinv(Group::make(p));
    const auto& d = c.derived;
    if (fmt == Format::Json) {
        json out = to_json(c.inv);
        out["r"] = d.r;
        out["eps"] = d.eps;
        out["k"] = d.k;
        out["pi"] = d.pi;
        out["pi_prime"] = d.pi_prime;
        out["R"] = {{"modulus", d.R.modulus()}, {"gen", to_json(d.R)}};
        std::cout << out.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "m,n,s,m_prime,delta_gen,r,eps,k\n"
                  << c.inv.m << "," << c.inv.n << "," << c.inv.s << "," << c.inv.m_prime() << "," << c.inv.delta_gen()
                  << "," << d.r << "," << d.eps << "," << d.k << "\n";
    } else {
        std::cout << "presentation " << p.to_string() << "\n"
                  << "MCINV        " << c.inv.to_string() << "\n"
                  << "r, eps, k    " << d.r << ", " << d.eps << ", " << d.k << "\n"
                  << "pi, pi'      {" << join(d.pi) << "}, {" << join(d.pi_prime) << "}\n"
                  << "R            " << subgroup_str(d.R) << "\n";
    }
    return 0;
}

int cmd_construct(const std::vector<i64>& v, Format fmt) {
    const MCInv t{v[0], v[1], v[2], mcg::numth::cyclic_subgroup(v[3], v[4])};
    const auto check = mcg::invariants::validate_tuple(t);
    if (!check.valid) {
        std::cerr << "construct: " << t.to_string() << " is not an MCINV:\n";
        for (const auto& why : check.violations) std::cerr << "  " << why << "\n";
        return 2;
    }
    const auto p = mcg::invariants::construct_group(t);
    if (fmt == Format::Json)
        std::cout << json{{"mcinv", to_json(t)}, {"presentation", to_json(p)}}.dump(2) << "\n";
    else if (fmt == Format::Csv)
        std::cout << "m,n,s,t\n" << p.m << "," << p.n << "," << p.s << "," << p.t << "\n";
    else
        std::cout << t.to_string() << " -> " << p.to_string() << "\n";
    return 0;
}

int cmd_wedderburn(const Presentation& p, Format fmt) {
    const auto decomp = mcg::wedderburn::decomposition(Group::make(p));
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& c : decomp) arr.push_back(to_json(c));
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "matrix_size,conductor,x,y,center_conductor,center_fixer,degree,dim\n";
        for (const auto& c : decomp)
            std::cout << c.matrix_size << "," << c.conductor << "," << c.action_gen << "," << c.twist << ","
                      << c.center.conductor << "," << csv_field(subgroup_str(c.center.fixer)) << ","
                      << c.total_degree << "," << c.q_dimension << "\n";
    } else {
        std::cout << decomp.size() << " components of QG for " << p.to_string() << "\n";
        for (const auto& c : decomp) std::cout << "  " << c.to_string() << "\n";
    }
    return 0;
}

int cmd_isoq(const Presentation& p1, const Presentation& p2, Format fmt) {
    const auto g = Group::make(p1), h = Group::make(p2);
    const auto ig = mcg::invariants::mcinv(g).inv, ih = mcg::invariants::mcinv(h).inv;
    const bool iso = ig == ih;
    const auto alg = mcg::wedderburn::compare_algebras(g, h);
    if (fmt == Format::Json) {
        std::cout << json{{"groups", iso ? "isomorphic" : "non-isomorphic"},
                          {"mcinv", {to_json(ig), to_json(ih)}},
                          {"algebras_comparator", mcg::wedderburn::to_string(alg)}}
                         .dump(2)
                  << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "groups,algebras_comparator\n"
                  << (iso ? "isomorphic" : "non-isomorphic") << "," << mcg::wedderburn::to_string(alg) << "\n";
    } else {
        std::cout << "groups:                  " << (iso ? "isomorphic" : "non-isomorphic") << " (MCINV "
                  << ig.to_string() << " vs " << ih.to_string() << ")\n"
                  << "algebras (conservative): " << mcg::wedderburn::to_string(alg) << "\n";
    }
    return 0;
}

struct Record {
    mcg::verify::Outcome outcome;
    std::string status;  // pass, fail or n/a
};

int cmd_verify(i64 max_order, const std::vector<mcg::verify::Check>& checks, Format fmt, int jobs) {
    using mcg::verify::Check;
    const auto items = mcg::verify::work_items(checks, max_order);
    const auto per_item = parallel_map(
        items, jobs, [&checks](const mcg::verify::WorkItem& it) { return mcg::verify::run_item(it, checks); },
        "verify");

    std::vector<Record> records;
    std::vector<mcg::verify::Outcome> outcomes;
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (Check c : checks) {
            bool any = false;
            for (const auto& o : per_item[i]) {
                if (o.check != c) continue;
                any = true;
                records.push_back({o, o.pass ? "pass" : "fail"});
                outcomes.push_back(o);
            }
            const bool group_check = c != Check::Realizability && c != Check::IsoOracle;
            if (!any && items[i].tuple && group_check) {
                mcg::verify::Outcome na;
                na.check = c;
                na.subject = items[i].tuple->to_string();
                records.push_back({na, "n/a"});
            }
        }
    }
    const auto summaries = mcg::verify::summarize(checks, outcomes);
    const bool all_pass = std::all_of(summaries.begin(), summaries.end(), [](const auto& s) { return s.pass(); });

    if (fmt == Format::Json) {
        json results = json::array();
        for (const auto& r : records) {
            json j = {{"check", mcg::verify::to_string(r.outcome.check)},
                      {"subject", r.outcome.subject},
                      {"status", r.status},
                      {"lhs", scalar(r.outcome.lhs)},
                      {"rhs", scalar(r.outcome.rhs)}};
            if (r.outcome.flagged) j["flagged"] = true;
            if (!r.outcome.note.empty()) j["note"] = r.outcome.note;
            results.push_back(std::move(j));
        }
        json summary = json::array();
        for (const auto& s : summaries)
            summary.push_back({{"check", mcg::verify::to_string(s.check)},
                               {"status", s.pass() ? "pass" : "fail"},
                               {"passed", s.passed},
                               {"instances", s.instances},
                               {"flagged", s.flagged}});
        std::cout << json{{"max_order", max_order}, {"results", results}, {"summary", summary}}.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "check,subject,status,lhs,rhs,flagged,note\n";
        for (const auto& r : records)
            std::cout << mcg::verify::to_string(r.outcome.check) << "," << csv_field(r.outcome.subject) << ","
                      << r.status << "," << csv_field(r.outcome.lhs) << "," << csv_field(r.outcome.rhs) << ","
                      << (r.outcome.flagged ? 1 : 0) << "," << csv_field(r.outcome.note) << "\n";
    } else {
        std::cout << std::left << std::setw(15) << "check" << std::setw(8) << "status" << std::setw(12) << "passed"
                  << "flagged\n";
        for (const auto& s : summaries)
            std::cout << std::setw(15) << mcg::verify::to_string(s.check) << std::setw(8)
                      << (s.pass() ? "pass" : "FAIL") << std::setw(12)
                      << (std::to_string(s.passed) + "/" + std::to_string(s.instances)) << s.flagged << "\n";
        for (const auto& s : summaries)
            for (const auto& o : s.failures)
                std::cout << "FAIL " << mcg::verify::to_string(o.check) << " " << o.subject << ": " << o.lhs
                          << " vs " << o.rhs << (o.note.empty() ? "" : " (" + o.note + ")") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite metacyclic groups: MCINV classification and rational group algebras"};
    app.require_subcommand(1);

    std::string format = "table";
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    i64 max_order = 64;
    std::vector<i64> args;
    std::string checks_arg;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "One presentation per metacyclic group up to an order bound");
    enumerate->add_option("--max-order", max_order, "Largest group order")->required();
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(enumerate);

    auto* mcinv = app.add_subcommand("mcinv", "MCINV of <a,b | a^m, b^n = a^s, a^b = a^t>");
    mcinv->add_option("presentation", args, "Presentation parameters m n s t")->expected(4)->required();
    add_format(mcinv);

    auto* construct = app.add_subcommand("construct", "Presentation realizing an MCINV tuple");
    construct->add_option("tuple", args, "Tuple (m, n, s, <delta_gen>_m_prime)")
        ->expected(5)
        ->required();
    add_format(construct);

    auto* wedderburn = app.add_subcommand("wedderburn", "Wedderburn decomposition of QG");
    wedderburn->add_option("presentation", args, "Presentation parameters m n s t")->expected(4)->required();
    add_format(wedderburn);

    auto* isoq = app.add_subcommand("isoq", "Compare two groups and their rational group algebras");
    isoq->add_option("params", args, "Two presentations: m n s t m' n' s' t'")->expected(8)->required();
    add_format(isoq);

    auto* verify = app.add_subcommand("verify", "Run verification checks over all groups up to an order bound");
    verify->add_option("--max-order", max_order, "Largest group order")->required();
    verify->add_option("--checks", checks_arg, "Comma-separated checks (default: all)");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(verify);

    CLI11_PARSE(app, argc, argv);
    const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;

    try {
        if (enumerate->parsed()) return cmd_enumerate(max_order, fmt, jobs);
        if (mcinv->parsed()) return cmd_mcinv(presentation_arg(args), fmt);
        if (construct->parsed()) return cmd_construct(args, fmt);
        if (wedderburn->parsed()) return cmd_wedderburn(presentation_arg(args), fmt);
        if (isoq->parsed()) return cmd_isoq(presentation_arg(args), presentation_arg(args, 4), fmt);
        if (verify->parsed()) {
            if (max_order < 1) throw mcg::numth::DomainError("verify: max order must be positive");
            std::vector<mcg::verify::Check> checks;
            if (checks_arg.empty()) {
                checks = mcg::verify::all_checks();
            } else {
                std::stringstream ss(checks_arg);
                for (std::string name; std::getline(ss, name, ',');) {
                    const auto c = mcg::verify::parse_check(name);
                    if (!c) throw mcg::numth::DomainError("verify: unknown check '" + name + "'");
                    checks.push_back(*c);
                }
            }
            return cmd_verify(max_order, checks, fmt, jobs);
        }
    } catch (const mcg::numth::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
