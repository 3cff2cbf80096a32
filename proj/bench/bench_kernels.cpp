// Times the OpenMP lattice kernels against their serial references on
// larger-than-test inputs and prints a small table. Build and run:
//   cmake --build build --target bench_kernels && ./build/bench/bench_kernels
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "valvol/lattice_kernels.hpp"
#include "valvol/monomial_ideal.hpp"

using namespace valvol;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = clock_type::now();
    f();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::mt19937_64 rng(9001);
        std::vector<Exponents> gens;
        for (int g = 0; g < 60; ++g) {
            Exponents e(3);
            for (auto& x : e) x = static_cast<Exponent>(rng() % 40);
            gens.push_back(e);
        }
        for (int i = 0; i < 3; ++i) {
            Exponents e(3, 0);
            e[static_cast<std::size_t>(i)] = 45;
            gens.push_back(e);
        }
        MonomialIdeal I = MonomialIdeal::from_generators(3, std::move(gens));
        Exponents box = *I.pure_power_bounds();
        std::int64_t a = 0, b = 0;
        double ts = time_ms([&] { a = staircase_box_count_serial(I, box); });
        double tp = time_ms([&] { b = staircase_box_count(I, box); });
        row("staircase_box_count (n=3)", ts, tp, a == b);
    }

    {
        std::vector<Value> w{Value(1), Value::generator(RefinableReal::pi())};
        Value bound(1500);
        std::int64_t a = 0, b = 0;
        double ts = time_ms([&] { a = weighted_count_below_serial(w, bound); });
        double tp = time_ms([&] { b = weighted_count_below(w, bound); });
        row("weighted_count_below (1,pi)", ts, tp, a == b);
    }

    {
        std::vector<Value> w{Value(1), Value::generator(RefinableReal::sqrt2()), Value(2)};
        Value bound(60);
        std::vector<Exponents> a, b;
        double ts = time_ms([&] { a = weighted_min_gens_serial(w, bound); });
        double tp = time_ms([&] { b = weighted_min_gens(w, bound); });
        row("weighted_min_gens (1,sqrt2,2)", ts, tp, a == b);
    }

    return 0;
}
