// Benchmark comparing the serial reference kernels against the OpenMP
// kernels on a few exact computations. Results must match field for field;
// the table reports wall time and speedup.
//
//   ./pebble_bench [reps]

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pebble/exact.hpp"
#include "pebble/families.hpp"

using namespace pebble;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const PricedGraph& g, int t, ExecutionPolicy policy, int reps,
              std::int64_t& value_out)
{
    ExactOptions opts;
    opts.policy = policy;
    auto begin = clock_type::now();
    for (int r = 0; r < reps; ++r) {
        auto result = pebbling_number(g, t, opts);
        value_out = result.value;
    }
    auto end = clock_type::now();
    return std::chrono::duration<double, std::milli>(end - begin).count() / reps;
}

} // namespace

int main(int argc, char** argv)
{
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1)
        reps = 1;

#ifdef _OPENMP
    std::printf("threads: %d, reps: %d\n", omp_get_max_threads(), reps);
#else
    std::printf("threads: 1 (no OpenMP), reps: %d\n", reps);
#endif

    struct Instance {
        std::string name;
        PricedGraph graph;
        int t;
    };
    std::vector<Instance> instances;
    instances.push_back({"path n=5, t=2", make_path(5), 2});
    instances.push_back({"path n=5, t=3", make_path(5), 3});
    instances.push_back({"complete n=5, t=4", make_complete(5), 4});
    instances.push_back({"star leaves=4, t=3", make_star(4), 3});
    instances.push_back({"cycle n=5, t=3", make_cycle(5), 3});

    std::printf("%-22s %10s %12s %12s %9s\n", "instance", "value", "serial ms",
                "parallel ms", "speedup");
    bool mismatch = false;
    for (const auto& inst : instances) {
        std::int64_t serial_value = 0, parallel_value = 0;
        double serial_ms =
            run_ms(inst.graph, inst.t, ExecutionPolicy::serial, reps, serial_value);
        double parallel_ms = run_ms(inst.graph, inst.t, ExecutionPolicy::parallel,
                                    reps, parallel_value);
        if (serial_value != parallel_value)
            mismatch = true;
        std::printf("%-22s %10lld %12.2f %12.2f %8.2fx%s\n", inst.name.c_str(),
                    static_cast<long long>(serial_value), serial_ms, parallel_ms,
                    serial_ms / parallel_ms,
                    serial_value == parallel_value ? "" : "  MISMATCH");
    }
    if (mismatch) {
        std::printf("serial/parallel mismatch detected\n");
        return 1;
    }
    return 0;
}
