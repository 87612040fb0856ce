// Compares the serial and the OpenMP-parallel minimum distance kernels on
// random additive codes of growing dimension.

#include <chrono>
#include <cstdio>
#include <random>

#include "aq15/addcode.hpp"

using namespace aq;
using Clock = std::chrono::steady_clock;

namespace {

AdditiveCode random_code(std::mt19937& rng, int n, int dim2) {
    std::uniform_int_distribution<uint64_t> dist(0, BitVector::mask(2 * n));
    while (true) {
        BitMatrix g(dim2, 2 * n);
        for (int i = 0; i < dim2; ++i) g.row(i) = dist(rng);
        if (rank(g) == dim2) return AdditiveCode(n, g);
    }
}

double time_ms(int (*f)(const AdditiveCode&), const AdditiveCode& c, int reps, int& out) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) out = f(c);
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::mt19937 rng(1);
    std::printf("%6s %6s %6s %12s %12s %8s\n", "n", "dim2", "d", "serial(ms)",
                "parallel(ms)", "speedup");
    for (int dim2 : {10, 14, 18, 20, 22, 24}) {
        AdditiveCode c = random_code(rng, 20, dim2);
        int reps = dim2 <= 18 ? 20 : 3;
        int ds = 0, dp = 0;
        double ts = time_ms(&min_distance_serial, c, reps, ds);
        double tp = time_ms(&min_distance, c, reps, dp);
        if (ds != dp) {
            std::printf("MISMATCH at dim2=%d: serial %d vs parallel %d\n", dim2, ds, dp);
            return 1;
        }
        std::printf("%6d %6d %6d %12.3f %12.3f %7.2fx\n", c.n, dim2, ds, ts, tp, ts / tp);
    }
    return 0;
}
