#include "aq15/completion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "aq15/cyclic15.hpp"

namespace aq {

std::string strategy_name(Strategy s) {
    return s == Strategy::LineMajor ? "line" : "row";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "line") return Strategy::LineMajor;
    if (name == "row") return Strategy::RowMajor;
    throw std::invalid_argument("unknown strategy: " + name);
}

int CompletionInstance::free_bits() const {
    int b = 0;
    for (const auto& s : slots) b += static_cast<int>(s.size());
    return b;
}

namespace {

uint64_t fnv1a(uint64_t h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

uint64_t CompletionInstance::content_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, rows);
    h = fnv1a(h, n);
    h = fnv1a(h, min_dist);
    h = fnv1a(h, strength3_prune);
    for (int r = 0; r < fixed.nrows(); ++r) h = fnv1a(h, fixed.row(r));
    for (size_t s = 0; s < slots.size(); ++s) {
        h = fnv1a(h, slots[s].size());
        h = fnv1a(h, uint64_t(int64_t(dup_group.empty() ? -1 : dup_group[s])));
        for (const Cell& c : slots[s]) h = fnv1a(h, (uint64_t(c.row) << 32) | uint32_t(c.col));
    }
    return h;
}

std::vector<std::vector<Cell>> plan_slots(const CompletionInstance& inst, Strategy strategy) {
    if (strategy == Strategy::LineMajor) return inst.slots;
    // Row-major: regroup every free cell by row.
    std::vector<std::vector<Cell>> by_row(inst.rows);
    for (const auto& s : inst.slots)
        for (const Cell& c : s) by_row[c.row].push_back(c);
    std::vector<std::vector<Cell>> out;
    for (auto& cells : by_row) {
        if (cells.empty()) continue;
        std::sort(cells.begin(), cells.end());
        out.push_back(std::move(cells));
    }
    return out;
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    prunes_weight += o.prunes_weight;
    prunes_strength += o.prunes_strength;
    max_depth = std::max(max_depth, o.max_depth);
    return *this;
}

namespace {

std::string value_bits(uint32_t v, int width) {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if ((v >> i) & 1) s[i] = '1';
    return s;
}

uint32_t parse_bits(const std::string& s) {
    uint32_t v = 0;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v |= uint32_t(1) << i;
    return v;
}

}  // namespace

std::string Checkpoint::serialize(const std::vector<std::vector<Cell>>& slots) const {
    std::ostringstream out;
    out << "ckpt " << instance_hash << " " << strategy_name(strategy) << "\n";
    for (const auto& e : path) {
        int width = static_cast<int>(slots[e.slot].size());
        out << "slot " << e.slot << " value " << value_bits(e.value, width) << " next ";
        // frontier entries (last) and exhausted levels both end the line
        if (&e == &path.back() || e.next >= (uint32_t(1) << width))
            out << "end";
        else
            out << value_bits(e.next, width);
        out << "\n";
    }
    out << "nodes " << stats.nodes << " prunes_weight " << stats.prunes_weight
        << " prunes_strength " << stats.prunes_strength << " maxdepth " << stats.max_depth
        << "\n";
    return out.str();
}

Checkpoint Checkpoint::parse(const std::string& text, const std::vector<std::vector<Cell>>&) {
    Checkpoint ck;
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "ckpt") throw std::invalid_argument("bad checkpoint header");
    std::string strat;
    if (!(in >> ck.instance_hash >> strat)) throw std::invalid_argument("bad checkpoint header");
    ck.strategy = parse_strategy(strat);
    while (in >> tok) {
        if (tok == "slot") {
            Entry e;
            std::string value_s, next_s, kw;
            if (!(in >> e.slot >> kw >> value_s >> kw >> next_s))
                throw std::invalid_argument("bad checkpoint entry");
            e.value = parse_bits(value_s);
            e.next = (next_s == "end") ? UINT32_MAX : parse_bits(next_s);
            ck.path.push_back(e);
        } else if (tok == "nodes") {
            std::string kw;
            in >> ck.stats.nodes >> kw >> ck.stats.prunes_weight >> kw >>
                ck.stats.prunes_strength >> kw >> ck.stats.max_depth;
        } else {
            throw std::invalid_argument("unexpected checkpoint token: " + tok);
        }
    }
    return ck;
}

namespace {

// Incremental GF(2) rank accumulator.
struct Echelon {
    std::vector<uint32_t> rows;
    bool insert(uint32_t v) {
        for (uint32_t r : rows) v = std::min(v, v ^ r);
        if (v == 0) return false;
        rows.push_back(v);
        return true;
    }
};

class Engine {
public:
    Engine(const CompletionInstance& inst, const SearchOptions& opt)
        : inst_(inst), opt_(opt), slots_(plan_slots(inst, opt.strategy)), mat_(inst.fixed) {
        if (opt_.strategy == Strategy::LineMajor) {
            dup_ = inst.dup_group;
            if (dup_.size() != slots_.size()) dup_.assign(slots_.size(), -1);
        } else {
            dup_.assign(slots_.size(), -1);
        }
        hash_ = fnv1a(inst.content_hash(), opt_.strategy == Strategy::LineMajor ? 1 : 2);
        build_completion_plan();
        init_root();
    }

    uint64_t effective_hash() const { return hash_; }

    SearchOutcome run() {
        outcome_.instance_hash = hash_;
        if (root_pruned_) {
            outcome_.verdict = SearchVerdict::NoneFound;
            return outcome_;
        }
        if (slots_.empty()) {
            record_solution();
            outcome_.verdict = outcome_.found.empty() ? SearchVerdict::NoneFound
                                                      : SearchVerdict::Found;
            return outcome_;
        }
        if (opt_.resume) {
            restore(*opt_.resume);
        } else {
            push_level(0);
        }
        loop();
        if (outcome_.verdict != SearchVerdict::BudgetExhausted)
            outcome_.verdict = outcome_.found.empty() ? SearchVerdict::NoneFound
                                                      : SearchVerdict::Found;
        return outcome_;
    }

    // Surviving value prefixes of the first `depth` slots.
    std::vector<std::vector<uint32_t>> prefixes(int depth) {
        std::vector<std::vector<uint32_t>> out;
        std::vector<uint32_t> cur;
        prefix_dfs(0, depth, cur, out);
        return out;
    }

private:
    struct Frame {
        int slot;
        uint32_t value = 0;
        uint32_t next = 0;
        bool applied = false;
    };

    const CompletionInstance& inst_;
    SearchOptions opt_;
    std::vector<std::vector<Cell>> slots_;
    std::vector<int> dup_;
    BitMatrix mat_;
    uint64_t hash_ = 0;

    // which coordinates (line-major) or rows (row-major) complete at each
    // slot; index slots_.size() holds the ones complete from the start
    std::vector<std::vector<int>> completes_;
    std::vector<uint8_t> weight_;          // line-major counters per message
    int completed_ = 0;                    // line-major: complete coordinates
    uint32_t row_mask_ = 0;                // row-major: complete rows
    std::vector<std::pair<uint32_t, uint32_t>> lines_;  // line-major placed columns

    std::vector<Frame> stack_;
    SearchOutcome outcome_;
    bool root_pruned_ = false;
    bool abort_ = false;

    int num_messages() const { return (1 << inst_.rows) - 1; }

    void build_completion_plan() {
        completes_.assign(slots_.size() + 1, {});
        if (opt_.strategy == Strategy::LineMajor) {
            std::vector<int> last(inst_.n, -1);
            for (size_t s = 0; s < slots_.size(); ++s)
                for (const Cell& c : slots_[s]) last[c.col / 2] = std::max(last[c.col / 2], int(s));
            for (int coord = 0; coord < inst_.n; ++coord) {
                if (last[coord] < 0)
                    completes_.back().push_back(coord);
                else
                    completes_[last[coord]].push_back(coord);
            }
        } else {
            std::vector<int> last(inst_.rows, -1);
            for (size_t s = 0; s < slots_.size(); ++s)
                for (const Cell& c : slots_[s]) last[c.row] = std::max(last[c.row], int(s));
            for (int r = 0; r < inst_.rows; ++r) {
                if (last[r] < 0)
                    completes_.back().push_back(r);
                else
                    completes_[last[r]].push_back(r);
            }
        }
    }

    uint32_t column(int col) const {
        uint32_t v = 0;
        for (int r = 0; r < inst_.rows; ++r) v |= uint32_t(mat_.get(r, col)) << r;
        return v;
    }

    void init_root() {
        if (opt_.strategy == Strategy::LineMajor) {
            weight_.assign(size_t(1) << inst_.rows, 0);
            for (int coord : completes_.back()) add_coordinate(coord, +1);
            if (opt_.prune && check_weight_prune()) root_pruned_ = true;
        } else {
            for (int r : completes_.back()) row_mask_ |= uint32_t(1) << r;
            if (opt_.prune && check_new_rows(row_mask_, 0)) root_pruned_ = true;
        }
    }

    void add_coordinate(int coord, int sign) {
        uint32_t a = column(2 * coord);
        uint32_t b = column(2 * coord + 1);
        const int mm = num_messages();
        for (int m = 1; m <= mm; ++m) {
            int nz = parity64(m & a) | parity64(m & b);
            weight_[m] = uint8_t(int(weight_[m]) + sign * nz);
        }
        if (sign > 0) {
            ++completed_;
            lines_.emplace_back(a, b);
        } else {
            --completed_;
            lines_.pop_back();
        }
    }

    bool check_weight_prune() {
        const int remaining = inst_.n - completed_;
        const int mm = num_messages();
        for (int m = 1; m <= mm; ++m)
            if (weight_[m] + remaining < inst_.min_dist) return true;
        return false;
    }

    // strength-3 pruning: every triple of placed lines must span dim 6
    bool strength_violated() {
        if (!inst_.strength3_prune) return false;
        const auto& [a, b] = lines_.back();
        if (a == 0 || b == 0 || a == b) return true;
        const size_t k = lines_.size() - 1;
        for (size_t i = 0; i + 1 < k; ++i)
            for (size_t j = i + 1; j < k; ++j) {
                Echelon e;
                if (!e.insert(lines_[i].first) || !e.insert(lines_[i].second) ||
                    !e.insert(lines_[j].first) || !e.insert(lines_[j].second) ||
                    !e.insert(a) || !e.insert(b))
                    return true;
            }
        return false;
    }

    // Row-major: every message supported on completed rows has a fully
    // determined codeword; true if one of the new ones is too light.
    bool check_new_rows(uint32_t new_rows, uint32_t old_mask) {
        const int mm = num_messages();
        for (int m = 1; m <= mm; ++m) {
            if ((m & ~(old_mask | new_rows)) != 0) continue;
            if ((m & new_rows) == 0) continue;
            uint64_t word = 0;
            for (int r = 0; r < inst_.rows; ++r)
                if ((m >> r) & 1) word ^= mat_.row(r);
            if (quaternary_weight(word, inst_.n) < inst_.min_dist) return true;
        }
        return false;
    }

    void set_cells(int slot, uint32_t value) {
        const auto& cells = slots_[slot];
        for (size_t i = 0; i < cells.size(); ++i)
            mat_.set(cells[i].row, cells[i].col, (value >> i) & 1);
    }

    // Applies the value and updates incremental state; returns false when
    // the subtree is pruned (state stays applied either way).
    bool apply(int depth, uint32_t value) {
        Frame& f = stack_[depth];
        set_cells(f.slot, value);
        f.value = value;
        f.applied = true;
        bool ok = true;
        if (opt_.strategy == Strategy::LineMajor) {
            for (int coord : completes_[f.slot]) add_coordinate(coord, +1);
            if (opt_.prune) {
                if (check_weight_prune()) {
                    ++outcome_.stats.prunes_weight;
                    ok = false;
                } else if (inst_.strength3_prune &&
                           new_lines_violate(completes_[f.slot].size())) {
                    ++outcome_.stats.prunes_strength;
                    ok = false;
                }
            }
        } else {
            uint32_t new_rows = 0;
            for (int r : completes_[f.slot]) new_rows |= uint32_t(1) << r;
            if (opt_.prune && check_new_rows(new_rows, row_mask_)) {
                ++outcome_.stats.prunes_weight;
                ok = false;
            }
            row_mask_ |= new_rows;
        }
        return ok;
    }

    bool new_lines_violate(size_t new_count) {
        // check triples that involve at least one of the last new_count lines
        const size_t total = lines_.size();
        const size_t first_new = total - new_count;
        for (size_t c = first_new; c < total; ++c) {
            const auto& [a, b] = lines_[c];
            if (a == 0 || b == 0 || a == b) return true;
            for (size_t i = 0; i + 1 <= c; ++i)
                for (size_t j = i + 1; j <= c; ++j) {
                    if (j == c) continue;
                    Echelon e;
                    if (!e.insert(lines_[i].first) || !e.insert(lines_[i].second) ||
                        !e.insert(lines_[j].first) || !e.insert(lines_[j].second) ||
                        !e.insert(a) || !e.insert(b))
                        return true;
                }
        }
        return false;
    }

    void undo(int depth) {
        Frame& f = stack_[depth];
        if (!f.applied) return;
        if (opt_.strategy == Strategy::LineMajor) {
            for (size_t i = completes_[f.slot].size(); i > 0; --i)
                add_coordinate(completes_[f.slot][i - 1], -1);
        } else {
            for (int r : completes_[f.slot]) row_mask_ &= ~(uint32_t(1) << r);
        }
        set_cells(f.slot, 0);
        f.applied = false;
    }

    uint32_t slot_limit(int depth) const { return uint32_t(1) << slots_[stack_[depth].slot].size(); }

    uint32_t start_value(int depth) const {
        if (opt_.shard && depth < int(opt_.shard->prefix.size())) return opt_.shard->prefix[depth];
        int g = dup_[stack_[depth].slot];
        if (g >= 0 && depth > 0 && dup_[stack_[depth - 1].slot] == g)
            return stack_[depth - 1].value;
        return 0;
    }

    bool fixed_level(int depth) const {
        return opt_.shard && depth < int(opt_.shard->prefix.size());
    }

    void push_level(int depth) {
        Frame f;
        f.slot = depth;
        stack_.push_back(f);
        stack_[depth].next = start_value(depth);
        outcome_.stats.max_depth = std::max(outcome_.stats.max_depth, depth);
        if (opt_.strategy == Strategy::RowMajor && depth == int(slots_.size()) - 1 &&
            !slots_.empty() && popcount64(row_mask_) == inst_.rows - 1)
            outcome_.nine_row_prefix_code = true;
    }

    void restore(const Checkpoint& ck) {
        if (ck.instance_hash != hash_)
            throw std::invalid_argument("checkpoint does not match instance/strategy");
        outcome_.stats = ck.stats;
        for (size_t i = 0; i < ck.path.size(); ++i) {
            push_level(int(i));
            Frame& f = stack_[i];
            if (i + 1 < ck.path.size()) {
                // applied level: replay without counting a node
                apply(int(i), ck.path[i].value);
                f.next = std::min(ck.path[i].next, slot_limit(int(i)));
            } else {
                f.next = ck.path[i].value;  // frontier: first value still to try
            }
        }
    }

    void take_checkpoint(int depth) {
        Checkpoint ck;
        ck.instance_hash = hash_;
        ck.strategy = opt_.strategy;
        ck.stats = outcome_.stats;
        for (int i = 0; i < depth; ++i)
            ck.path.push_back({stack_[i].slot, stack_[i].value, stack_[i].next});
        ck.path.push_back({stack_[depth].slot, stack_[depth].next, 0});
        outcome_.checkpoint = ck;
        outcome_.verdict = SearchVerdict::BudgetExhausted;
    }

    void record_solution() {
        // Leaf validation independent of the pruning flags.
        bool valid;
        if (opt_.strategy == Strategy::LineMajor) {
            valid = !check_weight_prune();  // remaining == 0: all weights >= d
        } else {
            valid = true;
            const int mm = num_messages();
            for (int m = 1; m <= mm && valid; ++m) {
                uint64_t word = 0;
                for (int r = 0; r < inst_.rows; ++r)
                    if ((m >> r) & 1) word ^= mat_.row(r);
                if (quaternary_weight(word, inst_.n) < inst_.min_dist) valid = false;
            }
        }
        if (!valid) return;
        // Independent re-check through the code machinery.
        AdditiveCode code(inst_.n, mat_);
        if (min_distance(code) < inst_.min_dist)
            throw std::logic_error("leaf validation disagreement");
        outcome_.found.push_back(mat_);
        if (opt_.stop_after_first) abort_ = true;
    }

    void loop() {
        while (!stack_.empty() && !abort_) {
            int depth = int(stack_.size()) - 1;
            Frame& f = stack_[depth];
            undo(depth);
            uint32_t limit = slot_limit(depth);
            if (fixed_level(depth) && f.next > opt_.shard->prefix[depth])
                limit = 0;  // single-value level exhausted
            if (f.next >= limit) {
                stack_.pop_back();
                continue;
            }
            if (opt_.node_budget && outcome_.stats.nodes >= opt_.node_budget) {
                take_checkpoint(depth);
                return;
            }
            uint32_t v = f.next;
            f.next = v + 1;
            ++outcome_.stats.nodes;
            if (!apply(depth, v)) continue;
            if (depth + 1 == int(slots_.size())) {
                record_solution();
                continue;
            }
            push_level(depth + 1);
        }
        // unwind any remaining applied frames
        while (!stack_.empty()) {
            undo(int(stack_.size()) - 1);
            stack_.pop_back();
        }
    }

    void prefix_dfs(int depth, int target, std::vector<uint32_t>& cur,
                    std::vector<std::vector<uint32_t>>& out) {
        if (depth == target || depth == int(slots_.size())) {
            out.push_back(cur);
            return;
        }
        stack_.push_back({depth, 0, 0, false});
        uint32_t limit = uint32_t(1) << slots_[depth].size();
        uint32_t start = 0;
        int g = dup_[depth];
        if (g >= 0 && depth > 0 && dup_[depth - 1] == g) start = cur[depth - 1];
        for (uint32_t v = start; v < limit; ++v) {
            bool ok = apply(depth, v);
            if (ok) {
                cur.push_back(v);
                prefix_dfs(depth + 1, target, cur, out);
                cur.pop_back();
            }
            undo(depth);
        }
        stack_.pop_back();
    }
};

}  // namespace

SearchOutcome search(const CompletionInstance& inst, const SearchOptions& opt) {
    Engine engine(inst, opt);
    if (opt.shard && opt.shard->instance_hash != engine.effective_hash())
        throw MixedInstanceError("shard does not match instance");
    return engine.run();
}

std::vector<SearchShard> make_shards(const CompletionInstance& inst, int depth,
                                     Strategy strategy) {
    SearchOptions opt;
    opt.strategy = strategy;
    Engine engine(inst, opt);
    std::vector<SearchShard> shards;
    for (auto& prefix : engine.prefixes(depth))
        shards.push_back({engine.effective_hash(), strategy, std::move(prefix)});
    return shards;
}

SearchOutcome merge(const std::vector<SearchOutcome>& outcomes) {
    SearchOutcome total;
    if (outcomes.empty()) return total;
    total.instance_hash = outcomes.front().instance_hash;
    total.verdict = SearchVerdict::NoneFound;
    for (const auto& o : outcomes) {
        if (o.instance_hash != total.instance_hash)
            throw MixedInstanceError("merging outcomes from different instances");
        total.stats += o.stats;
        total.found.insert(total.found.end(), o.found.begin(), o.found.end());
        total.nine_row_prefix_code = total.nine_row_prefix_code || o.nine_row_prefix_code;
        if (o.verdict == SearchVerdict::BudgetExhausted &&
            total.verdict != SearchVerdict::Found)
            total.verdict = SearchVerdict::BudgetExhausted;
    }
    if (!total.found.empty()) total.verdict = SearchVerdict::Found;
    return total;
}

std::vector<BitMatrix> brute_force_completions(const CompletionInstance& inst) {
    std::vector<Cell> cells;
    for (const auto& s : inst.slots) cells.insert(cells.end(), s.begin(), s.end());
    if (cells.size() > 24) throw std::invalid_argument("instance too large for brute force");
    std::vector<BitMatrix> found;
    const uint64_t count = uint64_t(1) << cells.size();
    const int mm = (1 << inst.rows) - 1;
    for (uint64_t v = 0; v < count; ++v) {
        BitMatrix m = inst.fixed;
        for (size_t i = 0; i < cells.size(); ++i)
            m.set(cells[i].row, cells[i].col, (v >> i) & 1);
        bool ok = true;
        for (int msg = 1; msg <= mm && ok; ++msg) {
            uint64_t word = 0;
            for (int r = 0; r < inst.rows; ++r)
                if ((msg >> r) & 1) word ^= m.row(r);
            if (quaternary_weight(word, inst.n) < inst.min_dist) ok = false;
        }
        if (ok) found.push_back(m);
    }
    return found;
}

namespace {

// Ten-bit lift of a PG(3,2) point into the bottom four rows (6..9),
// bit 3 of the point = row 6.
void set_bottom(BitMatrix& m, int col, uint32_t point) {
    for (int b = 0; b < 4; ++b) m.set(6 + (3 - b), col, (point >> b) & 1);
}

}  // namespace

CompletionInstance build_instance(const CaseFrame& f, const HLineSystem& s) {
    if (auto bad = validate_solution(f, s); !bad.empty())
        throw std::invalid_argument("solution does not satisfy the frame: " + bad.front());

    auto slot_lines = s.slots();  // 11 lines, canonical order
    const int nslots = static_cast<int>(slot_lines.size());

    CompletionInstance inst;
    inst.rows = 10;
    inst.n = 15;
    inst.min_dist = 9;
    inst.strength3_prune = true;
    inst.fixed = BitMatrix(10, 30);

    // L1..L3: unit pairs on the top six rows.
    for (int i = 0; i < 6; ++i) inst.fixed.set(i, i, true);
    // L4 left column = v1 + v3 + v5; right column lifts P0.
    inst.fixed.set(0, 6, true);
    inst.fixed.set(2, 6, true);
    inst.fixed.set(4, 6, true);
    set_bottom(inst.fixed, 7, f.p0);
    // Bottom blocks of the solution lines, canonical representative pairs.
    for (int j = 0; j < nslots; ++j) {
        set_bottom(inst.fixed, 8 + 2 * j, slot_lines[j].rep_a());
        set_bottom(inst.fixed, 9 + 2 * j, slot_lines[j].rep_b());
    }

    // First slot pair with an invertible bottom 4x4 block gets its top
    // halves zeroed (the reference normal form).
    int zi = -1, zj = -1;
    for (int i = 0; i < nslots && zi < 0; ++i)
        for (int j = i + 1; j < nslots && zi < 0; ++j) {
            Echelon e;
            if (e.insert(slot_lines[i].rep_a()) && e.insert(slot_lines[i].rep_b()) &&
                e.insert(slot_lines[j].rep_a()) && e.insert(slot_lines[j].rep_b())) {
                zi = i;
                zj = j;
            }
        }

    // Decision order: L4's free column first, then slot pairs by
    // descending h-multiplicity, ties in canonical line order.
    std::vector<int> order;
    for (int j = 0; j < nslots; ++j)
        if (j != zi && j != zj) order.push_back(j);
    std::vector<int> mult(nslots, 0);
    for (int j = 0; j < nslots; ++j)
        for (int k = 0; k < nslots; ++k)
            if (slot_lines[k] == slot_lines[j]) ++mult[j];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (mult[a] != mult[b]) return mult[a] > mult[b];
        return slot_lines[a] < slot_lines[b];
    });

    // L4 right column, rows 1..5 (row 0 pinned to zero).
    std::vector<Cell> l4;
    for (int r = 1; r < 6; ++r) l4.push_back({r, 7});
    inst.slots.push_back(std::move(l4));
    inst.dup_group.push_back(-1);

    int next_group = 0;
    std::map<PGLine, int> group_of;
    for (int j : order) {
        std::vector<Cell> cells;
        for (int r = 0; r < 6; ++r) cells.push_back({r, 8 + 2 * j});
        for (int r = 0; r < 6; ++r) cells.push_back({r, 9 + 2 * j});
        inst.slots.push_back(std::move(cells));
        if (mult[j] >= 2) {
            auto [it, inserted] = group_of.try_emplace(slot_lines[j], next_group);
            if (inserted) ++next_group;
            inst.dup_group.push_back(it->second);
        } else {
            inst.dup_group.push_back(-1);
        }
    }

    if (zi >= 0)
        inst.provenance = "normalized: zeroed slot pair (" + std::to_string(zi) + "," +
                          std::to_string(zj) + ")";
    else
        inst.provenance = "no-full-rank-pair: normalization skipped";
    return inst;
}

CompletionInstance plant_cyclic_instance(int pinned_pairs) {
    AdditiveCode cyc = build_cyclic_code();
    CompletionInstance inst;
    inst.rows = 9;
    inst.n = 15;
    inst.min_dist = 9;
    inst.strength3_prune = false;
    inst.fixed = rref(cyc.gen).reduced;
    inst.provenance = "planted-cyclic";
    for (int c = pinned_pairs; c < 15; ++c) {
        std::vector<Cell> cells;
        for (int r = 0; r < 5; ++r) cells.push_back({r, 2 * c});
        for (int r = 0; r < 5; ++r) cells.push_back({r, 2 * c + 1});
        // free cells read as zero in `fixed`
        for (const Cell& cell : cells) inst.fixed.set(cell.row, cell.col, false);
        inst.slots.push_back(std::move(cells));
        inst.dup_group.push_back(-1);
    }
    return inst;
}

}  // namespace aq
