#include "doctest.h"

#include <random>
#include <set>

#include "aq15/casegen.hpp"
#include "aq15/completion.hpp"
#include "aq15/cyclic15.hpp"

using namespace aq;

namespace {

const std::string kFixture = std::string(AQ15_DATA_DIR) + "/fig12.sol";

CompletionInstance random_instance(std::mt19937& rng, int max_free_bits = 12) {
    CompletionInstance inst;
    inst.rows = 3 + int(rng() % 3);
    inst.n = 4 + int(rng() % 3);
    inst.min_dist = 2 + int(rng() % (inst.n - 1));
    inst.strength3_prune = false;
    inst.fixed = BitMatrix(inst.rows, 2 * inst.n);
    std::uniform_int_distribution<uint64_t> dist(0, BitVector::mask(2 * inst.n));
    for (int r = 0; r < inst.rows; ++r) inst.fixed.row(r) = dist(rng);

    int nbits = 4 + int(rng() % (max_free_bits - 3));
    std::set<std::pair<int, int>> chosen;
    while (int(chosen.size()) < nbits)
        chosen.insert({int(rng() % inst.rows), int(rng() % (2 * inst.n))});
    std::vector<Cell> cells;
    for (auto [r, c] : chosen) {
        cells.push_back({r, c});
        inst.fixed.set(r, c, false);
    }
    // split into 1-3 slots
    int nslots = 1 + int(rng() % 3);
    inst.slots.assign(nslots, {});
    for (size_t i = 0; i < cells.size(); ++i)
        inst.slots[i % nslots].push_back(cells[i]);
    std::erase_if(inst.slots, [](const auto& s) { return s.empty(); });
    inst.dup_group.assign(inst.slots.size(), -1);
    return inst;
}

size_t run_count(const CompletionInstance& inst, Strategy strat, bool prune) {
    SearchOptions opt;
    opt.strategy = strat;
    opt.prune = prune;
    SearchOutcome out = search(inst, opt);
    if (out.found.empty())
        CHECK(out.verdict == SearchVerdict::NoneFound);
    else
        CHECK(out.verdict == SearchVerdict::Found);
    return out.found.size();
}

}  // namespace

TEST_CASE("search equals brute force on oracle instances") {
    std::mt19937 rng(20240915);
    for (int trial = 0; trial < 25; ++trial) {
        CompletionInstance inst = random_instance(rng);
        size_t expected = brute_force_completions(inst).size();
        CHECK(run_count(inst, Strategy::LineMajor, true) == expected);
        CHECK(run_count(inst, Strategy::LineMajor, false) == expected);
        CHECK(run_count(inst, Strategy::RowMajor, true) == expected);
        CHECK(run_count(inst, Strategy::RowMajor, false) == expected);
    }
}

TEST_CASE("found matrices are verified completions") {
    std::mt19937 rng(77);
    int with_solutions = 0;
    while (with_solutions < 5) {
        CompletionInstance inst = random_instance(rng);
        SearchOutcome out = search(inst, {});
        if (out.found.empty()) continue;
        ++with_solutions;
        for (const BitMatrix& m : out.found) {
            CHECK(rank(m) == inst.rows);
            AdditiveCode c(inst.n, m);
            CHECK(min_distance(c) >= inst.min_dist);
        }
    }
}

TEST_CASE("sharding partitions the search") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        CompletionInstance inst = random_instance(rng);
        size_t expected = brute_force_completions(inst).size();
        for (Strategy strat : {Strategy::LineMajor, Strategy::RowMajor}) {
            for (int depth = 0; depth <= 2; ++depth) {
                auto shards = make_shards(inst, depth, strat);
                if (depth == 0) CHECK(shards.size() == 1);
                std::vector<SearchOutcome> outs;
                for (const auto& sh : shards) {
                    SearchOptions opt;
                    opt.strategy = strat;
                    opt.shard = sh;
                    outs.push_back(search(inst, opt));
                }
                SearchOutcome merged = merge(outs);
                CHECK(merged.found.size() == expected);
                CHECK((merged.verdict == SearchVerdict::Found) == (expected > 0));
            }
        }
    }
}

TEST_CASE("merge rejects outcomes of different instances") {
    std::mt19937 rng(5);
    CompletionInstance a = random_instance(rng);
    CompletionInstance b = random_instance(rng);
    SearchOutcome oa = search(a, {});
    SearchOutcome ob = search(b, {});
    if (oa.instance_hash != ob.instance_hash)
        CHECK_THROWS_AS(merge({oa, ob}), MixedInstanceError);
    SearchOutcome same = merge({oa, oa});
    CHECK(same.stats.nodes == 2 * oa.stats.nodes);
}

TEST_CASE("stale shards are rejected") {
    std::mt19937 rng(6);
    CompletionInstance a = random_instance(rng);
    auto shards = make_shards(a, 1, Strategy::LineMajor);
    REQUIRE_FALSE(shards.empty());
    SearchShard sh = shards[0];
    sh.instance_hash ^= 1;
    SearchOptions opt;
    opt.shard = sh;
    CHECK_THROWS_AS(search(a, opt), MixedInstanceError);
}

TEST_CASE("search is deterministic") {
    std::mt19937 rng(99);
    CompletionInstance inst = random_instance(rng);
    SearchOutcome a = search(inst, {});
    SearchOutcome b = search(inst, {});
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.prunes_weight == b.stats.prunes_weight);
    CHECK(a.found.size() == b.found.size());
}

TEST_CASE("budget checkpointing resumes without repeating subtrees") {
    std::mt19937 rng(31415);
    int tested = 0;
    while (tested < 6) {
        CompletionInstance inst = random_instance(rng);
        SearchOutcome full = search(inst, {});
        if (full.stats.nodes < 50) continue;
        ++tested;
        for (Strategy strat : {Strategy::LineMajor, Strategy::RowMajor}) {
            SearchOptions base;
            base.strategy = strat;
            SearchOutcome ref = search(inst, base);

            SearchOptions opt = base;
            opt.node_budget = 17;
            size_t found = 0;
            int rounds = 0;
            SearchOutcome out = search(inst, opt);
            found += out.found.size();
            while (out.verdict == SearchVerdict::BudgetExhausted) {
                REQUIRE(out.checkpoint.has_value());
                ++rounds;
                REQUIRE(rounds < 10000);
                // round trip the checkpoint through its text form
                auto slots = plan_slots(inst, strat);
                Checkpoint ck =
                    Checkpoint::parse(out.checkpoint->serialize(slots), slots);
                CHECK(ck.instance_hash == out.checkpoint->instance_hash);
                CHECK(ck.path.size() == out.checkpoint->path.size());
                SearchOptions next = base;
                next.node_budget = out.stats.nodes + 17;
                next.resume = ck;
                out = search(inst, next);
                found += out.found.size();
            }
            // the other strategy may finish within one budget on the same
            // instance, so only require a resume when the budget must bind
            if (ref.stats.nodes > 17) CHECK(rounds > 0);
            // cumulative node count equals the single uninterrupted run
            CHECK(out.stats.nodes == ref.stats.nodes);
            CHECK(found == ref.found.size());
        }
    }
}

TEST_CASE("checkpoints from another instance or strategy are rejected") {
    std::mt19937 rng(7);
    CompletionInstance inst = random_instance(rng);
    SearchOptions opt;
    opt.node_budget = 3;
    SearchOutcome out = search(inst, opt);
    if (out.verdict != SearchVerdict::BudgetExhausted) return;
    SearchOptions wrong;
    wrong.strategy = Strategy::RowMajor;
    wrong.resume = out.checkpoint;
    CHECK_THROWS(search(inst, wrong));
}

TEST_CASE("fully fixed contradictory instance prunes at the root") {
    CompletionInstance inst;
    inst.rows = 2;
    inst.n = 4;
    inst.min_dist = 3;
    inst.fixed = BitMatrix(2, 8);
    inst.fixed.row(0) = 0b00000001;  // weight-1 codeword, d target 3
    inst.fixed.row(1) = 0b01010101;
    SearchOutcome out = search(inst, {});
    CHECK(out.verdict == SearchVerdict::NoneFound);
    CHECK(out.stats.nodes == 0);
}

TEST_CASE("instance hash is content sensitive") {
    std::mt19937 rng(12);
    CompletionInstance a = random_instance(rng);
    CompletionInstance b = a;
    CHECK(a.content_hash() == b.content_hash());
    b.min_dist += 1;
    CHECK(a.content_hash() != b.content_hash());
    b = a;
    b.fixed.set(0, 0, !b.fixed.get(0, 0));
    CHECK(a.content_hash() != b.content_hash());
}

TEST_CASE("normalized case-1 instance has 113 free bits") {
    CaseFrame f = make_frame(1);
    SolutionFile sf = parse_solutions_file(kFixture);
    REQUIRE_FALSE(sf.solutions.empty());
    const HLineSystem& sol = std::get<3>(sf.solutions[0]);
    CompletionInstance inst = build_instance(f, sol);
    CHECK(inst.rows == 10);
    CHECK(inst.n == 15);
    CHECK(inst.min_dist == 9);
    CHECK(inst.strength3_prune);
    CHECK(inst.free_bits() == 113);
    CHECK(inst.slots.size() == 10);  // L4 + 9 line pairs (2 zeroed away)
    CHECK(inst.provenance.find("normalized") != std::string::npos);
    // L1..L3 unit pairs on the top rows
    for (int i = 0; i < 6; ++i)
        for (int r = 0; r < 10; ++r) CHECK(inst.fixed.get(r, i) == (r == i));
    // bottom rows carry the lifted solution lines; top-left block of L4
    CHECK(inst.fixed.get(0, 6));
    CHECK(inst.fixed.get(2, 6));
    CHECK(inst.fixed.get(4, 6));
    // P0 = 1000 lifts to row 6 of L4's right column
    CHECK(inst.fixed.get(6, 7));
    CHECK_FALSE(inst.fixed.get(7, 7));
    // duplicate lines share a duplicate group
    for (size_t i = 0; i + 1 < inst.slots.size(); ++i)
        if (inst.dup_group[i] >= 0 && inst.dup_group[i] == inst.dup_group[i + 1]) {
            // identical fixed bottom columns
            const Cell& ci = inst.slots[i][0];
            const Cell& cj = inst.slots[i + 1][0];
            for (int r = 6; r < 10; ++r) {
                CHECK(inst.fixed.get(r, ci.col) == inst.fixed.get(r, cj.col));
                CHECK(inst.fixed.get(r, ci.col + 1) == inst.fixed.get(r, cj.col + 1));
            }
        }
    CHECK(build_instance(f, sol).content_hash() == inst.content_hash());
}

TEST_CASE("all twelve fixture instances build") {
    CaseFrame f = make_frame(1);
    SolutionFile sf = parse_solutions_file(kFixture);
    for (auto& [c, s, idx, sol] : sf.solutions) {
        CompletionInstance inst = build_instance(f, sol);
        CHECK(inst.free_bits() == 113);
    }
}

TEST_CASE("planted cyclic instance is recovered") {
    CompletionInstance inst = plant_cyclic_instance(13);
    CHECK(inst.rows == 9);
    CHECK_FALSE(inst.strength3_prune);
    CHECK(inst.slots.size() == 2);
    SearchOptions opt;
    opt.stop_after_first = true;
    SearchOutcome out = search(inst, opt);
    REQUIRE(out.verdict == SearchVerdict::Found);
    AdditiveCode c(15, out.found[0]);
    CHECK(min_distance(c) == 9);
}
