#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "aq15/bounds.hpp"
#include "aq15/casegen.hpp"
#include "aq15/completion.hpp"
#include "aq15/cyclic15.hpp"
#include "aq15/projgeom.hpp"

using namespace aq;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

bool g_machine = false;

void report(const std::string& key, const std::string& value) {
    if (g_machine)
        std::cout << key << "=" << value << "\n";
    else
        std::cout << key << ": " << value << "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot write " + path);
}

int cmd_cyclic(bool emit) {
    AdditiveCode c = build_cyclic_code();
    CyclicReport r = verify_cyclic_properties(c);
    report("n", "15");
    report("dim2", "9");
    report("codewords", std::to_string(c.num_codewords()));
    report("min_distance", std::to_string(r.min_distance));
    report("strength", std::to_string(r.strength));
    report("shift_closed", r.shift_closed ? "yes" : "no");
    DualDistance dd = dual_distance(c);
    report("dual_distance", std::to_string(dd.distance));
    if (emit) std::cout << format_code(c);
    return kOk;
}

int cmd_enumerate(int case_id, int subcase, const std::string& out_path) {
    CaseFrame f = make_frame(case_id, subcase);
    auto sols = enumerate_solutions(f);
    report("case", std::to_string(case_id) + "." + std::to_string(subcase));
    report("solutions", std::to_string(sols.size()));
    report("orbits", std::to_string(orbit_count(f, sols)));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << format_solutions(f, sols);
        report("written", out_path);
    }
    return kOk;
}

int cmd_validate(const std::string& path) {
    SolutionFile sf = parse_solutions_file(path);
    int valid = 0;
    for (auto& [c, s, idx, sol] : sf.solutions) {
        CaseFrame f = make_frame(c, s);
        auto bad = validate_solution(f, sol);
        if (bad.empty()) {
            ++valid;
        } else {
            for (const auto& v : bad)
                report("violation", std::to_string(c) + "." + std::to_string(s) + "#" +
                                        std::to_string(idx) + " " + v);
        }
    }
    report("valid", std::to_string(valid) + "/" + std::to_string(sf.solutions.size()));
    return valid == int(sf.solutions.size()) ? kOk : kPropertyFailed;
}

struct CompleteArgs {
    int case_id = 1;
    int subcase = 0;
    int solution = 1;
    int shard_depth = 0;
    int shard = -1;  // -1 = all shards at the given depth
    uint64_t budget = 0;
    std::string strategy = "line";
    int jobs = 1;
    std::string checkpoint_path;
    bool resume = false;
    bool exhaustive = false;
};

int run_one(const CompletionInstance& inst, const CompleteArgs& a) {
    Strategy strat = parse_strategy(a.strategy);
    std::vector<SearchShard> shards;
    if (a.shard_depth > 0)
        shards = make_shards(inst, a.shard_depth, strat);
    else
        shards = make_shards(inst, 0, strat);
    if (a.shard >= 0) {
        if (a.shard >= int(shards.size())) {
            std::cerr << "shard index out of range (have " << shards.size() << ")\n";
            return kUsage;
        }
        shards = {shards[size_t(a.shard)]};
    }
    report("shards", std::to_string(shards.size()));

    std::vector<SearchOutcome> outs(shards.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1)) {
            SearchOptions opt;
            opt.strategy = strat;
            opt.node_budget = a.budget;
            opt.shard = shards[i];
            if (a.resume && !a.checkpoint_path.empty()) {
                std::ifstream in(a.checkpoint_path);
                std::stringstream ss;
                ss << in.rdbuf();
                opt.resume = Checkpoint::parse(ss.str(), plan_slots(inst, strat));
            }
            outs[i] = search(inst, opt);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < a.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SearchOutcome total = merge(outs);
    report("nodes", std::to_string(total.stats.nodes));
    report("prunes_weight", std::to_string(total.stats.prunes_weight));
    report("prunes_strength", std::to_string(total.stats.prunes_strength));
    report("max_depth", std::to_string(total.stats.max_depth));
    report("nine_row_prefix_code", total.nine_row_prefix_code ? "yes" : "no");
    switch (total.verdict) {
        case SearchVerdict::Found:
            report("verdict", "found");
            for (const BitMatrix& m : total.found) std::cout << format_code({inst.n, m});
            return kPropertyFailed;  // a completion would contradict the theorem
        case SearchVerdict::NoneFound:
            report("verdict", "none-found");
            return kOk;
        case SearchVerdict::BudgetExhausted:
            report("verdict", "budget-exhausted");
            for (const auto& o : outs)
                if (o.checkpoint && !a.checkpoint_path.empty()) {
                    write_atomic(a.checkpoint_path,
                                 o.checkpoint->serialize(plan_slots(inst, strat)));
                    report("checkpoint", a.checkpoint_path);
                    break;
                }
            return kBudget;
    }
    return kOk;
}

int cmd_complete(const CompleteArgs& a) {
    if (a.exhaustive) {
        int rc = kOk;
        for (auto [c, s] : all_frame_ids()) {
            CaseFrame f = make_frame(c, s);
            auto sols = enumerate_solutions(f);
            for (size_t k = 0; k < sols.size(); ++k) {
                report("instance", std::to_string(c) + "." + std::to_string(s) + "#" +
                                       std::to_string(k + 1));
                CompleteArgs one = a;
                one.exhaustive = false;
                int r = run_one(build_instance(f, sols[k]), one);
                rc = std::max(rc, r);
            }
        }
        return rc;
    }
    CaseFrame f = make_frame(a.case_id, a.subcase);
    auto sols = enumerate_solutions(f);
    if (a.solution < 1 || a.solution > int(sols.size())) {
        std::cerr << "solution index out of range (have " << sols.size() << ")\n";
        return kUsage;
    }
    CompletionInstance inst = build_instance(f, sols[size_t(a.solution - 1)]);
    report("free_bits", std::to_string(inst.free_bits()));
    report("instance_provenance", inst.provenance);
    return run_one(inst, a);
}

int cmd_verify_paper() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    check("averaging-bound-chain-45-27",
          averaging_bounds(45, 27, 10) == std::vector<int>{27, 18, 13, 10, 8});
    check("griesmer-binary-39-8-18", griesmer_min_length(8, 18, 2) == 40);
    check("griesmer-binary-36-5-18", griesmer_min_length(5, 18, 2) == 37);
    check("nonexistence-13-4-9",
          quaternary_nonexistence(13, 8, 9).verdict == Verdict::Nonexistent);
    check("nonexistence-12-2.5-9",
          quaternary_nonexistence(12, 5, 9).verdict == Verdict::Nonexistent);
    check("nonexistence-15-10-5",
          quaternary_nonexistence(15, 20, 5).verdict == Verdict::Nonexistent);
    check("table-consistency", table_consistency().empty());

    AdditiveCode cyc = build_cyclic_code();
    CyclicReport cr{};
    bool cyc_ok = true;
    try {
        cr = verify_cyclic_properties(cyc);
    } catch (const PropertyFailedError&) {
        cyc_ok = false;
    }
    check("cyclic-code-distance-9", cyc_ok && cr.min_distance == 9);
    check("cyclic-code-strength-3", cyc_ok && cr.strength == 3);
    check("cyclic-code-shift-closed", cyc_ok && cr.shift_closed);
    check("cyclic-dual-distance-4", dual_distance(cyc).distance == 4);

    auto fano = fano_profile_oracle();
    bool fano_ok = fano.size() == 1 && fano_low_points_collinear(*fano.begin(), 4);
    check("fano-profile-unique-collinear", fano_ok);

    bool frames_ok = true;
    for (auto [c, s] : all_frame_ids())
        if (!structural_checks(make_frame(c, s)).empty()) frames_ok = false;
    check("frame-structural-predicates", frames_ok);

    auto count = [](int c, int s) { return enumerate_solutions(make_frame(c, s)).size(); };
    check("case1-solution-count-12", count(1, 0) == 12);
    check("case2-solution-counts-12-40-101",
          count(2, 1) == 12 && count(2, 2) == 40 && count(2, 3) == 101);
    check("case3-solution-counts-43-70", count(3, 1) == 43 && count(3, 2) == 70);
    check("case1-alternate-g0-empty",
          enumerate_solutions_pinned(make_frame(1), PGLine(8, 4)).empty());

    bool fixture_ok = true;
    try {
        SolutionFile sf = parse_solutions_file(std::string(AQ15_DATA_DIR) + "/fig12.sol");
        CaseFrame f1 = make_frame(1);
        if (sf.solutions.size() != 12) fixture_ok = false;
        for (auto& [c, s, idx, sol] : sf.solutions)
            if (!validate_solution(f1, sol).empty()) fixture_ok = false;
    } catch (const std::exception&) {
        fixture_ok = false;
    }
    check("reference-fixture-validates", fixture_ok);

    std::cout << (failures == 0 ? "ALL CHECKS PASSED\n"
                                : std::to_string(failures) + " CHECKS FAILED\n");
    return failures == 0 ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive quaternary [15,5,9] nonexistence toolkit"};
    app.require_subcommand(1);
    app.add_flag("--machine", g_machine, "line-oriented key=value output");

    auto* cyclic = app.add_subcommand("cyclic", "build and verify the cyclic [15,4.5,9] code");
    bool emit = false;
    cyclic->add_flag("--emit", emit, "print the generator matrix");

    auto* bounds = app.add_subcommand("bounds", "bound and table computations");
    bounds->require_subcommand(1);
    auto* griesmer = bounds->add_subcommand("griesmer", "Griesmer minimal length");
    int gdim = 1, gd = 1, gq = 2;
    griesmer->add_option("--dim", gdim, "dimension")->required();
    griesmer->add_option("--d", gd, "minimum distance")->required();
    griesmer->add_option("--q", gq, "field size");
    auto* nonex = bounds->add_subcommand("nonexistence", "additive quaternary nonexistence");
    int nn = 0, ndim2 = 0, nd = 0;
    nonex->add_option("--n", nn, "length")->required();
    nonex->add_option("--dim2", ndim2, "binary dimension")->required();
    nonex->add_option("--d", nd, "minimum distance")->required();
    auto* tcheck = bounds->add_subcommand("table-check", "table propagation consistency");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate case solutions");
    int ecase = 1, esub = 0;
    std::string eout;
    enumerate->add_option("--case", ecase, "case id")->required();
    enumerate->add_option("--subcase", esub, "subcase id");
    enumerate->add_option("--out", eout, "write solutions to this file");

    auto* validate = app.add_subcommand("validate", "validate a solution file");
    std::string vpath;
    validate->add_option("--solutions", vpath, "solution file")->required();

    auto* complete = app.add_subcommand("complete", "completion search");
    CompleteArgs ca;
    complete->add_option("--case", ca.case_id, "case id");
    complete->add_option("--subcase", ca.subcase, "subcase id");
    complete->add_option("--solution", ca.solution, "1-based solution index");
    complete->add_option("--shard-depth", ca.shard_depth, "shard at this decision depth");
    complete->add_option("--shard", ca.shard, "run only this shard index");
    complete->add_option("--budget", ca.budget, "node budget per shard (0 = unlimited)");
    complete->add_option("--strategy", ca.strategy, "line or row")
        ->check(CLI::IsMember({"line", "row"}));
    complete->add_option("--jobs", ca.jobs, "concurrent shard workers");
    complete->add_option("--checkpoint", ca.checkpoint_path, "checkpoint file");
    complete->add_flag("--resume", ca.resume, "resume from the checkpoint file");
    complete->add_flag("--exhaustive", ca.exhaustive,
                       "run every frame and solution (long mode)");

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (cyclic->parsed()) return cmd_cyclic(emit);
        if (bounds->parsed()) {
            if (griesmer->parsed()) {
                std::cout << griesmer_min_length(gdim, gd, gq) << "\n";
                return kOk;
            }
            if (nonex->parsed()) {
                auto v = quaternary_nonexistence(nn, ndim2, nd);
                report("verdict", v.verdict == Verdict::Nonexistent ? "nonexistent"
                                  : v.verdict == Verdict::Exists    ? "exists"
                                                                    : "unknown");
                if (!v.reason.empty()) report("reason", v.reason);
                return kOk;
            }
            if (tcheck->parsed()) {
                auto bad = table_consistency();
                for (const auto& b : bad) report("violation", b);
                report("violations", std::to_string(bad.size()));
                return bad.empty() ? kOk : kPropertyFailed;
            }
        }
        if (enumerate->parsed()) return cmd_enumerate(ecase, esub, eout);
        if (validate->parsed()) return cmd_validate(vpath);
        if (complete->parsed()) return cmd_complete(ca);
        if (verify->parsed()) return cmd_verify_paper();
    } catch (const PropertyFailedError& e) {
        std::cerr << "property failed: " << e.what() << "\n";
        return kPropertyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
