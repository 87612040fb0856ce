#pragma once

// Exhaustive completion search over the free top-block entries of a
// normalized generator matrix: depth-first, weight-pruned, shardable and
// checkpointable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aq15/addcode.hpp"
#include "aq15/casegen.hpp"
#include "aq15/gf2.hpp"

namespace aq {

struct NoFullRankPairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MixedInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

enum class Strategy { LineMajor, RowMajor };
std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct CompletionInstance;
// Decision slots in the order a given strategy assigns them: line-major
// keeps the instance slots, row-major regroups the free cells by row.
std::vector<std::vector<Cell>> plan_slots(const CompletionInstance& inst, Strategy strategy);

// A partially fixed r x 2n generator matrix. Cells not covered by any
// slot hold the values in `fixed`; slots list the free cells in decision
// order (line-major grouping).
struct CompletionInstance {
    int rows = 0;
    int n = 0;
    int min_dist = 0;
    BitMatrix fixed;                       // rows x 2n, free cells zero
    std::vector<std::vector<Cell>> slots;  // decision slots, in order
    std::vector<int> dup_group;            // per slot: -1 or group id; slots of one
                                           // group carry equal fixed column pairs and
                                           // are forced into nondecreasing value order
    bool strength3_prune = false;          // sound only for the [15,5,9] target
    std::string provenance;

    int free_bits() const;
    uint64_t content_hash() const;
};

// Normal form for one frame + solution: L1..L3 unit pairs, L4 left column
// fixed, first slot pair with invertible bottom 4x4 top-zeroed, top entry
// of L4's right column pinned to zero. If no slot pair has an invertible
// bottom block the zeroing step is skipped (recorded in provenance).
CompletionInstance build_instance(const CaseFrame& f, const HLineSystem& s);

// Acceptance-scale planted instance: the cyclic [15,4.5,9] generator with
// its bottom rows and the first `pinned_pairs` coordinate pairs fixed and
// all remaining top-row cells freed. The default leaves five pairs (50
// bits) free, which recovers in seconds; each additional freed pair
// multiplies the search by roughly an order of magnitude.
CompletionInstance plant_cyclic_instance(int pinned_pairs = 10);

struct SearchShard {
    uint64_t instance_hash = 0;
    Strategy strategy = Strategy::LineMajor;
    std::vector<uint32_t> prefix;  // values of the first prefix.size() slots
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t prunes_weight = 0;
    uint64_t prunes_strength = 0;
    int max_depth = 0;

    SearchStats& operator+=(const SearchStats& o);
};

struct Checkpoint {
    uint64_t instance_hash = 0;
    Strategy strategy = Strategy::LineMajor;
    struct Entry {
        int slot = 0;
        uint32_t value = 0;  // currently applied value
        uint32_t next = 0;   // next value to try at this level
    };
    std::vector<Entry> path;
    SearchStats stats;  // accumulated over all runs so far

    std::string serialize(const std::vector<std::vector<Cell>>& slots) const;
    static Checkpoint parse(const std::string& text, const std::vector<std::vector<Cell>>& slots);
};

enum class SearchVerdict { NoneFound, Found, BudgetExhausted };

struct SearchOutcome {
    uint64_t instance_hash = 0;
    SearchVerdict verdict = SearchVerdict::NoneFound;
    std::vector<BitMatrix> found;  // verified generator matrices
    SearchStats stats;
    bool nine_row_prefix_code = false;  // row-major: an (r-1)-row prefix was a
                                        // [n,(r-1)/2,d] code
    std::optional<Checkpoint> checkpoint;
};

struct SearchOptions {
    Strategy strategy = Strategy::LineMajor;
    uint64_t node_budget = 0;  // 0 = unlimited
    bool stop_after_first = false;
    bool prune = true;  // weight/strength pruning (leaf validation always runs)
    std::optional<SearchShard> shard;
    std::optional<Checkpoint> resume;
};

SearchOutcome search(const CompletionInstance& inst, const SearchOptions& opt = {});

// One shard per surviving prefix of the first `depth` decision slots.
std::vector<SearchShard> make_shards(const CompletionInstance& inst, int depth,
                                     Strategy strategy = Strategy::LineMajor);

SearchOutcome merge(const std::vector<SearchOutcome>& outcomes);

// Brute-force reference: enumerates every free-cell assignment and counts
// the ones whose matrix generates a code of full rank and distance >= d.
// Intended for instances with at most ~16 free bits.
std::vector<BitMatrix> brute_force_completions(const CompletionInstance& inst);

}  // namespace aq
