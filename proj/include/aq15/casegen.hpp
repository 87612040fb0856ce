#pragma once

// Case analysis in PG(3,2): pinned weight frames, the h-weight constraint
// systems on the 35 lines, structural predicates, and exhaustive
// enumeration of the 11-line solutions.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aq15/projgeom.hpp"

namespace aq {

struct UnknownCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralTargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Static geometry of PG(3,2): points are 1..15 (bit 3 = first coordinate
// y1, bit 0 = y4), planes are indexed by their nonzero normal vectors.
namespace pg32 {
constexpr int kNumPoints = 15;
constexpr int kNumLines = 35;
constexpr int kNumPlanes = 15;

// Parses a 4-character string like "0110" (y1..y4 left to right).
uint32_t point(const std::string& s);
std::string point_name(uint32_t p);

bool point_on_plane(uint32_t p, uint32_t normal);

// Canonically ordered list of the 35 lines.
const std::vector<PGLine>& lines();
int line_index(const PGLine& l);
// The three planes containing each line.
const std::array<uint32_t, 3>& planes_of_line(int line_idx);
}  // namespace pg32

// One pinned case or subcase: a weight function on the 15 points, the
// special point P0, and case-specific pins.
struct CaseFrame {
    int case_id = 0;
    int subcase_id = 0;  // 0 where the case has no subcases
    std::array<int, 16> weight{};  // indexed by point, entries in {1,2,3}
    uint32_t p0 = 0;
    // Case 1 only: the candidate lines for the unique h-weight-1 line
    // through P0; enumeration pins it to each in turn.
    std::vector<PGLine> g0_candidates;
    // Case 1 only: required weight of the h-weight-1 line through P0
    // (0 = unconstrained). With the pin at 7 the second candidate line
    // (weight 8) admits no solution.
    int g0_line_weight = 0;

    int m1 = 0, m2 = 0, m3 = 0;
    int point_weight_sum() const;
    int plane_weight(uint32_t normal) const;
    int line_weight(const PGLine& l) const;
};

CaseFrame make_frame(int case_id, int subcase_id = 0);
const std::vector<std::pair<int, int>>& all_frame_ids();

// Per-point and per-plane targets of the h-weight equations.
struct HTargets {
    std::array<int, 16> point_target{};  // sum of h over lines through P
    std::array<int, 16> plane_target{};  // sum of h over lines inside E
    int total = 11;
};
HTargets hweight_targets(const CaseFrame& f);

// Structural predicates on the frame's weight function; returns the
// violated ones (empty for all shipped frames).
std::vector<std::string> structural_checks(const CaseFrame& f);

// An h-function on the 35 canonical lines summing to 11.
struct HLineSystem {
    std::array<uint8_t, pg32::kNumLines> h{};

    int total() const;
    // The 11 line slots, repeated lines expanded, in canonical order.
    std::vector<PGLine> slots() const;
    auto operator<=>(const HLineSystem&) const = default;
};

// Residual symmetry of the pinned frame, as point permutations: the full
// weight/P0 stabilizer when no g0 pin is present; with a pinned g0 the
// group generated by the transvection whose axis is the 15-plane through
// P0 and whose center is the low-weight point of the pinned line.
std::vector<std::array<uint32_t, 16>> reduction_group(const CaseFrame& f);

// Lexicographically least image of s under the frame's reduction group.
HLineSystem canonical_solution(const CaseFrame& f, const HLineSystem& s);

// All solutions of the frame's constraint system with the case-specific
// pins applied, reduced to canonical representatives modulo the frame's
// residual symmetry, deterministically ordered. The counts reproduce the
// published per-case solution counts.
std::vector<HLineSystem> enumerate_solutions(const CaseFrame& f);

// As above but with the Case-1 h-1 line through P0 pinned to exactly the
// given line (used for the zero-count complement check).
std::vector<HLineSystem> enumerate_solutions_pinned(const CaseFrame& f, const PGLine& g0);

// Checks every equation against the solution; returns violated equations.
std::vector<std::string> validate_solution(const CaseFrame& f, const HLineSystem& s);

// Solution file format: per solution a header line
//   solution <case> <subcase> <index>
// followed by 11 lines "slot <name> <colA> <colB>" with 4-bit columns,
// most significant bit first (row y1).
std::string format_solutions(const CaseFrame& f, const std::vector<HLineSystem>& sols);
// Parses solutions; frame ids in the file are returned alongside.
struct SolutionFile {
    std::vector<std::tuple<int, int, int, HLineSystem>> solutions;  // case, subcase, index
};
SolutionFile parse_solutions(std::istream& in);
SolutionFile parse_solutions_file(const std::string& path);

// Stabilizer of the frame's weight function inside GL(4,2), as point
// permutations; used to report orbit counts next to raw counts.
std::vector<std::array<uint32_t, 16>> frame_stabilizer(const CaseFrame& f);
int orbit_count(const CaseFrame& f, const std::vector<HLineSystem>& sols);

}  // namespace aq
