// Serial reference kernels against their OpenMP counterparts.
// Usage: binsum_bench [repeats]

#include "binsum/energy.hpp"
#include "binsum/exec.hpp"
#include "binsum/inequality.hpp"
#include "binsum/rng.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace binsum;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                agree ? "same" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d, best of %d\n", worker_count(), repeats);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    {
        Xoshiro256 rng(1, 0);
        const auto a = HypercubeSubset::random(10, rng);
        EnergyOptions serial;
        serial.exec = Exec::Serial;
        ExactInt es;
        ExactInt ep;
        const double ts = best_of(repeats, [&] { es = energy(a, 3, serial); });
        const double tp = best_of(repeats, [&] { ep = energy(a, 3); });
        row("energy tally d=10 k=3", ts, tp, es == ep);
    }
    {
        VerifyOptions serial;
        serial.exec = Exec::Serial;
        ExhaustiveSummary ss;
        ExhaustiveSummary sp;
        const double ts = best_of(repeats, [&] { ss = exhaustive_verify(4, 2, serial); });
        const double tp = best_of(repeats, [&] { sp = exhaustive_verify(4, 2); });
        row("exhaustive sweep d=4 k=2", ts, tp, ss.witnesses == sp.witnesses && ss.counts.total() == sp.counts.total());
    }
    {
        VerifyOptions serial;
        serial.exec = Exec::Serial;
        const GridSpec grid = GridSpec::closed(0, 1, 2001);
        std::vector<VerificationReport> rs;
        std::vector<VerificationReport> rp;
        const double ts = best_of(repeats, [&] { rs = verify_main_inequality(50, grid, serial); });
        const double tp = best_of(repeats, [&] { rp = verify_main_inequality(50, grid); });
        bool agree = rs.size() == rp.size();
        for (std::size_t i = 0; agree && i < rs.size(); ++i) {
            agree = rs[i].verdict == rp[i].verdict && rs[i].margin->lower_string(30) == rp[i].margin->lower_string(30);
        }
        row("grid sweep k=50, 2001 points", ts, tp, agree);
    }
    return 0;
}
