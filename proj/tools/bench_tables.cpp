// Times coefficient-table construction with the OpenMP kernels against the
// same build run serially, checks the outputs match, and optionally times
// the naive per-entry reference as well. Each timed build gets a fresh
// expansion cache so nothing is warm.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spst/transitions.hpp"

using namespace spst;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int cap = 6;
    bool include_reference = false;
    std::vector<TableKind> kinds = {TableKind::SToM, TableKind::MToS, TableKind::A, TableKind::B};
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cap" && i + 1 < argc) {
            cap = std::atoi(argv[++i]);
        } else if (arg == "--reference") {
            include_reference = true;
        } else {
            std::fprintf(stderr, "usage: %s [--cap N] [--reference]\n", argv[0]);
            return 2;
        }
    }
    if (cap < 1 || cap > 12) {
        std::fprintf(stderr, "cap must be in [1, 12]\n");
        return 2;
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("cap %d, %d thread(s)\n", cap, threads);
    std::printf("%-6s %12s %12s %9s%s\n", "table", "serial (s)", "omp (s)", "speedup",
                include_reference ? "   reference (s)" : "");

    bool all_equal = true;
    for (TableKind kind : kinds) {
        ExpansionCache serial_cache;
        auto start = std::chrono::steady_clock::now();
        CoeffMatrix serial = build_table(kind, cap, {.parallel = false, .cache = &serial_cache});
        double serial_time = seconds_since(start);

        ExpansionCache parallel_cache;
        start = std::chrono::steady_clock::now();
        CoeffMatrix parallel = build_table(kind, cap, {.parallel = true, .cache = &parallel_cache});
        double parallel_time = seconds_since(start);

        if (!(serial == parallel)) {
            std::printf("%-6s MISMATCH between serial and parallel builds\n",
                        table_kind_name(kind).c_str());
            all_equal = false;
            continue;
        }

        double reference_time = 0;
        if (include_reference) {
            start = std::chrono::steady_clock::now();
            CoeffMatrix reference = build_table_reference(kind, cap);
            reference_time = seconds_since(start);
            if (!(reference == parallel)) {
                std::printf("%-6s MISMATCH between reference and parallel builds\n",
                            table_kind_name(kind).c_str());
                all_equal = false;
                continue;
            }
        }

        if (include_reference)
            std::printf("%-6s %12.4f %12.4f %8.2fx %15.4f\n", table_kind_name(kind).c_str(),
                        serial_time, parallel_time, serial_time / parallel_time, reference_time);
        else
            std::printf("%-6s %12.4f %12.4f %8.2fx\n", table_kind_name(kind).c_str(), serial_time,
                        parallel_time, serial_time / parallel_time);
    }
    return all_equal ? 0 : 1;
}
