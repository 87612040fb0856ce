#include "aq15/casegen.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace aq {

namespace pg32 {

uint32_t point(const std::string& s) {
    if (s.size() != 4 || s.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("bad point string: " + s);
    uint32_t p = 0;
    for (int i = 0; i < 4; ++i)
        if (s[i] == '1') p |= 1u << (3 - i);
    if (p == 0) throw std::invalid_argument("zero is not a point");
    return p;
}

std::string point_name(uint32_t p) {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
        if ((p >> (3 - i)) & 1) s[i] = '1';
    return s;
}

bool point_on_plane(uint32_t p, uint32_t normal) { return parity64(p & normal) == 0; }

const std::vector<PGLine>& lines() {
    static const std::vector<PGLine> all = [] {
        std::vector<PGLine> out;
        for (uint32_t a = 1; a <= 15; ++a)
            for (uint32_t b = a + 1; b <= 15; ++b) {
                if ((a ^ b) < b) continue;  // canonical pair only
                out.emplace_back(a, b);
            }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return all;
}

int line_index(const PGLine& l) {
    const auto& all = lines();
    auto it = std::lower_bound(all.begin(), all.end(), l);
    if (it == all.end() || !(*it == l)) throw std::invalid_argument("not a PG(3,2) line");
    return static_cast<int>(it - all.begin());
}

const std::array<uint32_t, 3>& planes_of_line(int line_idx) {
    static const std::vector<std::array<uint32_t, 3>> table = [] {
        std::vector<std::array<uint32_t, 3>> out(kNumLines);
        for (int li = 0; li < kNumLines; ++li) {
            const PGLine& l = lines()[li];
            int cnt = 0;
            for (uint32_t e = 1; e <= 15; ++e)
                if (point_on_plane(l.pts[0], e) && point_on_plane(l.pts[1], e))
                    out[li][cnt++] = e;
        }
        return out;
    }();
    return table[line_idx];
}

}  // namespace pg32

int CaseFrame::point_weight_sum() const {
    int s = 0;
    for (uint32_t p = 1; p <= 15; ++p) s += weight[p];
    return s;
}

int CaseFrame::plane_weight(uint32_t normal) const {
    int s = 0;
    for (uint32_t p = 1; p <= 15; ++p)
        if (pg32::point_on_plane(p, normal)) s += weight[p];
    return s;
}

int CaseFrame::line_weight(const PGLine& l) const {
    return weight[l.pts[0]] + weight[l.pts[1]] + weight[l.pts[2]];
}

const std::vector<std::pair<int, int>>& all_frame_ids() {
    static const std::vector<std::pair<int, int>> ids = {
        {1, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    return ids;
}

CaseFrame make_frame(int case_id, int subcase_id) {
    using pg32::point;
    CaseFrame f;
    f.case_id = case_id;
    f.subcase_id = subcase_id;

    if (case_id == 1 && subcase_id == 0) {
        // Weight-11 plane E0 = (y1 = 0): three weight-1 points on a line,
        // four weight-2 points forming a quadrangle, all affine points
        // weight 3.
        for (uint32_t p = 1; p <= 15; ++p) f.weight[p] = (p & 8) ? 3 : 2;
        for (uint32_t p : {point("0110"), point("0101"), point("0011")}) f.weight[p] = 1;
        f.p0 = point("1000");
        f.g0_candidates = {PGLine(f.p0, point("0100")), PGLine(f.p0, point("0110"))};
        f.g0_line_weight = 7;  // the h-1 line through P0 lies in the 15-plane
    } else if (case_id == 2 && subcase_id >= 1 && subcase_id <= 3) {
        // Weight-13 plane E0 = (y1 = 0) with a unique weight-1 point;
        // off the plane two weight-2 points and six weight-3 points.
        for (uint32_t p = 1; p <= 15; ++p) f.weight[p] = (p & 8) ? 3 : 2;
        f.weight[point("0100")] = 1;
        f.weight[point("1000")] = 2;
        f.weight[point("1100")] = 2;
        switch (subcase_id) {
            case 1: f.p0 = point("1000"); break;
            case 2: f.p0 = point("0010"); break;
            case 3: f.p0 = point("1010"); break;
        }
    } else if (case_id == 3 && (subcase_id == 1 || subcase_id == 2)) {
        // The non-affine 5-cap (coordinate frame) carries weight 3, all
        // other points weight 2.
        for (uint32_t p = 1; p <= 15; ++p) f.weight[p] = 2;
        for (uint32_t p : {point("1000"), point("0100"), point("0010"), point("0001"),
                           point("1111")})
            f.weight[p] = 3;
        f.p0 = (subcase_id == 1) ? point("1100") : point("1000");
    } else {
        throw UnknownCaseError("unknown case (" + std::to_string(case_id) + "," +
                               std::to_string(subcase_id) + ")");
    }

    for (uint32_t p = 1; p <= 15; ++p) {
        if (f.weight[p] == 1) ++f.m1;
        if (f.weight[p] == 2) ++f.m2;
        if (f.weight[p] == 3) ++f.m3;
    }
    return f;
}

HTargets hweight_targets(const CaseFrame& f) {
    HTargets t;
    for (uint32_t p = 1; p <= 15; ++p)
        t.point_target[p] = (p == f.p0) ? f.weight[p] - 2 : f.weight[p];
    if (t.point_target[f.p0] < 0)
        throw NonIntegralTargetError("P0 has weight < 2");
    for (uint32_t e = 1; e <= 15; ++e) {
        int base = pg32::point_on_plane(f.p0, e) ? 13 : 11;
        int num = f.plane_weight(e) - base;
        if (num < 0 || num % 2 != 0)
            throw NonIntegralTargetError("plane " + pg32::point_name(e) +
                                         " has non-integral h target");
        t.plane_target[e] = num / 2;
    }
    return t;
}

std::vector<std::string> structural_checks(const CaseFrame& f) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(s); };

    for (uint32_t p = 1; p <= 15; ++p)
        if (f.weight[p] < 1 || f.weight[p] > 3)
            fail("point " + pg32::point_name(p) + " has weight outside {1,2,3}");
    if (f.point_weight_sum() != 35) fail("point weights do not sum to 35");

    for (const auto& l : pg32::lines())
        if (f.line_weight(l) > 8)
            fail("line through " + pg32::point_name(l.pts[0]) + " has weight > 8");

    std::array<int, 16> pw{};
    for (uint32_t e = 1; e <= 15; ++e) {
        pw[e] = f.plane_weight(e);
        if (pw[e] % 2 == 0 || pw[e] < 11 || pw[e] > 17)
            fail("plane " + pg32::point_name(e) + " weight " + std::to_string(pw[e]) +
                 " not odd in [11,17]");
    }

    // each 8-line lies in three 17-planes
    for (int li = 0; li < pg32::kNumLines; ++li) {
        if (f.line_weight(pg32::lines()[li]) != 8) continue;
        int seventeen = 0;
        for (uint32_t e : pg32::planes_of_line(li))
            if (pw[e] == 17) ++seventeen;
        if (seventeen != 3) fail("an 8-line is not in three 17-planes");
    }

    // 17-planes: 3 or 4 weight-3 points, no weight-0 point
    for (uint32_t e = 1; e <= 15; ++e) {
        if (pw[e] != 17) continue;
        int w3 = 0, w0 = 0;
        for (uint32_t p = 1; p <= 15; ++p)
            if (pg32::point_on_plane(p, e)) {
                if (f.weight[p] == 3) ++w3;
                if (f.weight[p] == 0) ++w0;
            }
        if (w3 != 3 && w3 != 4) fail("a 17-plane has " + std::to_string(w3) + " weight-3 points");
        if (w0 != 0) fail("a 17-plane contains a weight-0 point");
    }

    // weight-3 points: one 15-plane, six 17-planes, three 7-lines, four 8-lines
    for (uint32_t p = 1; p <= 15; ++p) {
        if (f.weight[p] != 3) continue;
        int p15 = 0, p17 = 0, l7 = 0, l8 = 0;
        for (uint32_t e = 1; e <= 15; ++e)
            if (pg32::point_on_plane(p, e)) {
                if (pw[e] == 15) ++p15;
                if (pw[e] == 17) ++p17;
            }
        for (const auto& l : pg32::lines())
            if (l.contains(p)) {
                int lw = f.line_weight(l);
                if (lw == 7) ++l7;
                if (lw == 8) ++l8;
            }
        if (p15 != 1 || p17 != 6)
            fail("weight-3 point " + pg32::point_name(p) + " plane profile is not (15:1, 17:6)");
        if (l7 != 3 || l8 != 4)
            fail("weight-3 point " + pg32::point_name(p) + " line profile is not (7:3, 8:4)");
    }
    return bad;
}

int HLineSystem::total() const {
    int t = 0;
    for (uint8_t v : h) t += v;
    return t;
}

std::vector<PGLine> HLineSystem::slots() const {
    std::vector<PGLine> out;
    for (int li = 0; li < pg32::kNumLines; ++li)
        for (int j = 0; j < h[li]; ++j) out.push_back(pg32::lines()[li]);
    return out;
}

namespace {

struct Enumerator {
    const CaseFrame& frame;
    HTargets targets;
    // -1: unconstrained; otherwise the exact value forced on that line.
    std::array<int, pg32::kNumLines> forced;
    std::array<int, 16> rp{};  // residual point targets
    std::array<int, 16> re{};  // residual plane targets
    std::array<int, 16> last_line_of_point{};
    std::array<int, 16> last_line_of_plane{};
    HLineSystem current{};
    std::vector<HLineSystem> found;

    explicit Enumerator(const CaseFrame& f) : frame(f), targets(hweight_targets(f)) {
        forced.fill(-1);
        for (uint32_t p = 1; p <= 15; ++p) rp[p] = targets.point_target[p];
        for (uint32_t e = 1; e <= 15; ++e) re[e] = targets.plane_target[e];
        for (int li = 0; li < pg32::kNumLines; ++li) {
            for (uint32_t p : pg32::lines()[li].pts) last_line_of_point[p] = li;
            for (uint32_t e : pg32::planes_of_line(li)) last_line_of_plane[e] = li;
        }
        // Frame pin: the single h-positive line through P0 must have the
        // required line weight, so all other lines through P0 are zero.
        if (f.g0_line_weight > 0 && f.weight[f.p0] == 3) {
            for (int li = 0; li < pg32::kNumLines; ++li) {
                const PGLine& l = pg32::lines()[li];
                if (l.contains(f.p0) && f.line_weight(l) != f.g0_line_weight) forced[li] = 0;
            }
        }
    }

    void run() { dfs(0); }

    void dfs(int li) {
        if (li == pg32::kNumLines) {
            bool done = true;
            for (uint32_t p = 1; p <= 15 && done; ++p)
                if (rp[p] != 0 || re[p] != 0) done = false;
            if (done) found.push_back(current);
            return;
        }
        const PGLine& l = pg32::lines()[li];
        const auto& pl = pg32::planes_of_line(li);
        int hi = std::min({rp[l.pts[0]], rp[l.pts[1]], rp[l.pts[2]], re[pl[0]], re[pl[1]], re[pl[2]]});
        int lo = 0;
        if (forced[li] >= 0) {
            if (forced[li] > hi) return;
            lo = hi = forced[li];
        }
        for (int v = lo; v <= hi; ++v) {
            current.h[li] = static_cast<uint8_t>(v);
            for (uint32_t p : l.pts) rp[p] -= v;
            for (uint32_t e : pl) re[e] -= v;
            bool ok = true;
            for (uint32_t p : l.pts)
                if (last_line_of_point[p] == li && rp[p] != 0) ok = false;
            for (uint32_t e : pl)
                if (last_line_of_plane[e] == li && re[e] != 0) ok = false;
            if (ok) dfs(li + 1);
            for (uint32_t p : l.pts) rp[p] += v;
            for (uint32_t e : pl) re[e] += v;
        }
        current.h[li] = 0;
    }
};

}  // namespace

namespace {

HLineSystem apply_perm(const HLineSystem& s, const std::array<uint32_t, 16>& perm) {
    HLineSystem img{};
    for (int li = 0; li < pg32::kNumLines; ++li) {
        if (!s.h[li]) continue;
        const PGLine& l = pg32::lines()[li];
        PGLine ml(perm[l.pts[0]], perm[l.pts[1]]);
        img.h[pg32::line_index(ml)] += s.h[li];
    }
    return img;
}

std::vector<HLineSystem> reduce_canonical(const CaseFrame& f, const std::vector<HLineSystem>& raw) {
    auto group = reduction_group(f);
    std::set<HLineSystem> canon;
    for (const auto& s : raw) {
        HLineSystem best = s;
        for (const auto& perm : group) best = std::min(best, apply_perm(s, perm));
        canon.insert(best);
    }
    return {canon.begin(), canon.end()};
}

}  // namespace

std::vector<std::array<uint32_t, 16>> reduction_group(const CaseFrame& f) {
    if (f.g0_candidates.empty()) return frame_stabilizer(f);
    // With a pinned g0 the surviving symmetry is the transvection whose
    // axis is the (unique) 15-plane through P0 and whose center is the
    // low-weight point of the pinned line; it fixes the pin but not the
    // rest of the frame stabilizer's orbit structure.
    uint32_t axis = 0;
    for (uint32_t e = 1; e <= 15; ++e)
        if (pg32::point_on_plane(f.p0, e) && f.plane_weight(e) == 15) axis = e;
    uint32_t center = 0;
    for (const auto& g : f.g0_candidates) {
        if (f.line_weight(g) != f.g0_line_weight) continue;
        for (uint32_t p : g.pts)
            if (center == 0 || f.weight[p] < f.weight[center]) center = p;
    }
    std::array<uint32_t, 16> id{}, tau{};
    for (uint32_t p = 1; p <= 15; ++p) {
        id[p] = p;
        tau[p] = pg32::point_on_plane(p, axis) ? p : (p ^ center);
    }
    if (axis == 0 || center == 0) return {id};
    return {id, tau};
}

HLineSystem canonical_solution(const CaseFrame& f, const HLineSystem& s) {
    HLineSystem best = s;
    for (const auto& perm : reduction_group(f)) best = std::min(best, apply_perm(s, perm));
    return best;
}

std::vector<HLineSystem> enumerate_solutions_pinned(const CaseFrame& f, const PGLine& g0) {
    Enumerator en(f);
    int idx = pg32::line_index(g0);
    if (en.forced[idx] == 0) return {};  // pin contradicts the frame's line-weight pin
    en.forced[idx] = 1;
    en.run();
    return reduce_canonical(f, en.found);
}

std::vector<HLineSystem> enumerate_solutions(const CaseFrame& f) {
    std::vector<HLineSystem> all;
    if (f.g0_candidates.empty()) {
        Enumerator en(f);
        en.run();
        all = std::move(en.found);
    } else {
        for (const auto& g0 : f.g0_candidates) {
            Enumerator en(f);
            int idx = pg32::line_index(g0);
            if (en.forced[idx] == 0) continue;
            en.forced[idx] = 1;
            en.run();
            all.insert(all.end(), en.found.begin(), en.found.end());
        }
    }
    return reduce_canonical(f, all);
}

std::vector<std::string> validate_solution(const CaseFrame& f, const HLineSystem& s) {
    std::vector<std::string> bad;
    HTargets t = hweight_targets(f);
    if (s.total() != 11) bad.push_back("h-weights sum to " + std::to_string(s.total()) + ", not 11");
    for (uint32_t p = 1; p <= 15; ++p) {
        int sum = 0;
        for (int li = 0; li < pg32::kNumLines; ++li)
            if (pg32::lines()[li].contains(p)) sum += s.h[li];
        if (sum != t.point_target[p])
            bad.push_back("point " + pg32::point_name(p) + ": h-sum " + std::to_string(sum) +
                          " != " + std::to_string(t.point_target[p]));
    }
    for (uint32_t e = 1; e <= 15; ++e) {
        int sum = 0;
        for (int li = 0; li < pg32::kNumLines; ++li)
            if (std::ranges::count(pg32::planes_of_line(li), e)) sum += s.h[li];
        if (sum != t.plane_target[e])
            bad.push_back("plane " + pg32::point_name(e) + ": h-sum " + std::to_string(sum) +
                          " != " + std::to_string(t.plane_target[e]));
    }
    return bad;
}

std::string format_solutions(const CaseFrame& f, const std::vector<HLineSystem>& sols) {
    std::ostringstream out;
    for (size_t idx = 0; idx < sols.size(); ++idx) {
        out << "solution " << f.case_id << " " << f.subcase_id << " " << idx + 1 << "\n";
        auto slots = sols[idx].slots();
        static const char* names[11] = {"L5", "L6", "R1", "R2", "R3", "R4", "R5", "R6",
                                        "R7", "R8", "R9"};
        for (size_t s = 0; s < slots.size(); ++s) {
            out << "slot " << (s < 11 ? names[s] : "X") << " "
                << pg32::point_name(slots[s].rep_a()) << " "
                << pg32::point_name(slots[s].rep_b()) << "\n";
        }
    }
    return out.str();
}

SolutionFile parse_solutions(std::istream& in) {
    SolutionFile sf;
    std::string line;
    int cur_case = 0, cur_sub = 0, cur_idx = 0;
    bool open = false;
    HLineSystem cur{};
    int slots_seen = 0;
    auto flush = [&]() {
        if (!open) return;
        if (slots_seen != 11)
            throw std::invalid_argument("solution block with " + std::to_string(slots_seen) +
                                        " slots");
        sf.solutions.emplace_back(cur_case, cur_sub, cur_idx, cur);
        cur = HLineSystem{};
        slots_seen = 0;
        open = false;
    };
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "solution") {
            flush();
            if (!(ls >> cur_case >> cur_sub >> cur_idx))
                throw std::invalid_argument("bad solution header: " + line);
            open = true;
        } else if (tok == "slot") {
            std::string name, a, b;
            if (!open || !(ls >> name >> a >> b))
                throw std::invalid_argument("bad slot line: " + line);
            PGLine l(pg32::point(a), pg32::point(b));
            ++cur.h[pg32::line_index(l)];
            ++slots_seen;
        } else {
            throw std::invalid_argument("unexpected token: " + tok);
        }
    }
    flush();
    return sf;
}

SolutionFile parse_solutions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file: " + path);
    return parse_solutions(in);
}

std::vector<std::array<uint32_t, 16>> frame_stabilizer(const CaseFrame& f) {
    std::vector<std::array<uint32_t, 16>> stab;
    for (uint32_t a = 1; a <= 15; ++a)
        for (uint32_t b = 1; b <= 15; ++b) {
            if (b == a) continue;
            for (uint32_t c = 1; c <= 15; ++c) {
                if (c == a || c == b || c == (a ^ b)) continue;
                uint32_t s3 = a ^ b ^ c;
                for (uint32_t d = 1; d <= 15; ++d) {
                    if (d == a || d == b || d == c || d == (a ^ b) || d == (a ^ c) ||
                        d == (b ^ c) || d == s3)
                        continue;
                    std::array<uint32_t, 16> perm{};
                    bool ok = true;
                    for (uint32_t v = 1; v <= 15 && ok; ++v) {
                        uint32_t img = 0;
                        if (v & 8) img ^= a;
                        if (v & 4) img ^= b;
                        if (v & 2) img ^= c;
                        if (v & 1) img ^= d;
                        perm[v] = img;
                        if (f.weight[img] != f.weight[v]) ok = false;
                    }
                    if (ok && perm[f.p0] == f.p0) stab.push_back(perm);
                }
            }
        }
    return stab;
}

int orbit_count(const CaseFrame& f, const std::vector<HLineSystem>& sols) {
    auto stab = frame_stabilizer(f);
    std::set<HLineSystem> canon;
    for (const auto& s : sols) {
        HLineSystem best = s;
        for (const auto& perm : stab) best = std::min(best, apply_perm(s, perm));
        canon.insert(best);
    }
    return static_cast<int>(canon.size());
}

}  // namespace aq
