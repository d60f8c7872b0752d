// Benchmark: serial reference vs the OpenMP kernels on representative
// workloads. Build and run manually:
//   cmake --build build --target bench_parallel && ./build/bench_parallel
#include <chrono>
#include <cstdio>

#include "mc/enumerate.hpp"
#include "mc/parallel.hpp"
#include "mc/trace.hpp"

using namespace mc;

namespace {

template <class F>
double time_it(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3f s %9.3f s   x%.2f\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("%-34s %11s %11s   %s\n", "workload", "serial", "openmp", "speedup");

    {
        double s, p;
        {
            par::mode() = par::Mode::Serial;
            s = time_it([] { count_pairs(Value(rat(13, 9)), 4000); });
        }
        {
            par::mode() = par::Mode::OpenMP;
            p = time_it([] { count_pairs(Value(rat(13, 9)), 4000); });
        }
        row("coprime pairs (m = 4000)", s, p);
    }
    {
        double s, p;
        {
            par::mode() = par::Mode::Serial;
            s = time_it([] { for (int m = 2; m <= 9; ++m) verify_identities(m); });
        }
        {
            par::mode() = par::Mode::OpenMP;
            p = time_it([] { for (int m = 2; m <= 9; ++m) verify_identities(m); });
        }
        row("identity catalog (m = 2..9)", s, p);
    }
    {
        double s, p;
        {
            par::mode() = par::Mode::Serial;
            s = time_it([] { enum_I(26); });
        }
        {
            par::mode() = par::Mode::OpenMP;
            p = time_it([] { enum_I(26); });
        }
        row("family-I inversions (m = 26)", s, p);
    }
    {
        double s, p;
        Rational width = pow_rat(rat(1, 10), 6);
        {
            par::mode() = par::Mode::Serial;
            s = time_it([&] { trace_gamma(5, 64, width); });
        }
        {
            par::mode() = par::Mode::OpenMP;
            p = time_it([&] { trace_gamma(5, 64, width); });
        }
        row("branch tracing (m = 5, 64 pts)", s, p);
    }
    return 0;
}
