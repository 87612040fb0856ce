#pragma once

// Griesmer bound, concatenation-based nonexistence arguments, and the
// table of optimal additive quaternary code parameters for n <= 15.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aq {

struct MissingEntryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optimal minimum distance for one (length, dimension) pair; open cases
// are kept as ranges.
struct TableEntry {
    int n = 0;
    int dim2 = 0;  // binary dimension, twice the (possibly half-integral) k
    int d_lo = 0;
    int d_hi = 0;  // == d_lo when the value is settled
};

class OptTable {
public:
    void add(TableEntry e);
    std::optional<TableEntry> lookup(int n, int dim2) const;
    TableEntry at(int n, int dim2) const;  // throws MissingEntryError
    const std::map<std::pair<int, int>, TableEntry>& entries() const { return entries_; }

    // Lines of "dim2 n d" or "dim2 n lo-hi"; '#' comments.
    static OptTable parse(const std::string& text);
    static OptTable load(const std::string& path);
    static const OptTable& shipped();

private:
    std::map<std::pair<int, int>, TableEntry> entries_;  // key (dim2, n)
};

// Griesmer: minimal length of a q-ary linear code of the given dimension
// and minimum distance, sum of ceil(d / q^i).
long long griesmer_min_length(int dim, int d, int q);

enum class Verdict { Exists, Nonexistent, Unknown };

struct NonexistenceVerdict {
    int n, dim2, d;
    Verdict verdict = Verdict::Unknown;
    std::string reason;  // griesmer-concat | table-fact | shorten-chain
};

// Tests whether an additive quaternary (n, dim2, d) code can exist, via
// the binary concatenation map (n,dim2,d) -> (3n,dim2,2d) against the
// Griesmer bound, direct table facts, and shortening chains into the
// table.
NonexistenceVerdict quaternary_nonexistence(int n, int dim2, int d,
                                            const OptTable& table = OptTable::shipped());

// Propagation consistency of a table: puncturing, shortening, padding and
// subcode monotonicity between adjacent entries. Returns human-readable
// violations (empty for the shipped table).
std::vector<std::string> table_consistency(const OptTable& table = OptTable::shipped());

}  // namespace aq
