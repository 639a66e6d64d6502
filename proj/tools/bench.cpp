// Benchmark of the OpenMP kernels against their serial reference
// implementations.  Both paths must produce identical output; the serial
// path is the one the test suite trusts.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "coxaff/affine.hpp"
#include "coxaff/coxeter.hpp"
#include "coxaff/pointarray.hpp"

using namespace coxaff;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

struct Run {
    const char* name;
    double serial_s = 0, parallel_s = 0;
    bool match = false;
};

void report(const Run& r) {
    std::printf("%-28s serial %8.3fs   omp %8.3fs   speedup %5.2fx   %s\n", r.name,
                r.serial_s, r.parallel_s,
                r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0,
                r.match ? "outputs identical" : "OUTPUT MISMATCH");
}

Run bench_closure(GroupId g) {
    Run r{"group closure"};
    static std::string names[] = {"closure H2", "closure H3", "closure H4"};
    r.name = names[static_cast<int>(g)].c_str();
    double t0 = now();
    auto serial = generate_group(g, Exec::serial);
    r.serial_s = now() - t0;
    t0 = now();
    auto parallel = generate_group(g, Exec::parallel);
    r.parallel_s = now() - t0;
    r.match = serial.size() == parallel.size();
    for (std::size_t i = 0; r.match && i < serial.size(); ++i)
        r.match = serial[i] == parallel[i];
    return r;
}

Run bench_solve(long bound) {
    Run r{"solve xy = 7-4t"};
    Golden target = Golden(7) - Golden(4) * Golden::tau();
    double t0 = now();
    auto serial = solve_constraint(target, bound, Exec::serial);
    r.serial_s = now() - t0;
    t0 = now();
    auto parallel = solve_constraint(target, bound, Exec::parallel);
    r.parallel_s = now() - t0;
    r.match = serial.size() == parallel.size();
    for (std::size_t i = 0; r.match && i < serial.size(); ++i) {
        r.match = serial[i].base.same_integers(parallel[i].base) &&
                  serial[i].members.size() == parallel[i].members.size();
    }
    return r;
}

Run bench_arrays() {
    Run r{"icosidodecahedron arrays"};
    std::vector<Golden> coeffs;
    for (long k = -2; k <= 2; ++k) coeffs.push_back(tau_pow(k));
    coeffs.push_back(Golden(Rational(23, 17)));
    double t0 = now();
    auto serial = h3_cardinality_scan(Axis::twofold, coeffs, Exec::serial);
    r.serial_s = now() - t0;
    t0 = now();
    auto parallel = h3_cardinality_scan(Axis::twofold, coeffs, Exec::parallel);
    r.parallel_s = now() - t0;
    r.match = serial.size() == parallel.size();
    for (std::size_t i = 0; r.match && i < serial.size(); ++i)
        r.match = serial[i].cardinality == parallel[i].cardinality;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    long solve_bound = 220;
    bool do_h4 = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--solve-bound") == 0 && i + 1 < argc)
            solve_bound = std::atol(argv[++i]);
        else if (std::strcmp(argv[i], "--skip-h4") == 0)
            do_h4 = false;
#ifdef _OPENMP
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            omp_set_num_threads(std::atoi(argv[++i]));
#endif
    }
#ifdef _OPENMP
    std::printf("OpenMP, max %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n");
#endif
    report(bench_closure(GroupId::H3));
    if (do_h4) report(bench_closure(GroupId::H4));
    report(bench_solve(solve_bound));
    report(bench_arrays());
    return 0;
}
