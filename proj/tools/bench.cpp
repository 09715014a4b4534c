// Throughput comparison between the serial reference implementation and the
// OpenMP batch path, on the two hot workloads: hermitian grid sampling and
// full theorem-audit sweeps.

#include "coep/batch.hpp"
#include "coep/classification.hpp"
#include "coep/hermitian.hpp"
#include "coep/pseudoinverse.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool audit_one(std::size_t i) {
    const int n = 4 + int(i % 3) * 2;
    coep::CMat a = (i % 2 == 0) ? coep::gen_coep_non_hermitian(n, 1000 + i)
                                : coep::gen_random(n, 1000 + i);
    auto [a_dag, cert] = coep::mp_inverse_euclidean(a);
    auto audit = coep::audit_thm7(a, a_dag, {1.3, -0.4}, {0.7, 0.9});
    return audit.all_agree();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t audits = argc > 1 ? std::size_t(std::atoll(argv[1])) : 60;
    std::size_t grids = argc > 2 ? std::size_t(std::atoll(argv[2])) : 200;

    std::cout << "workload: " << audits << " nine-way audits, " << grids
              << " hermitian grid evaluations\n";

    {
        auto t0 = Clock::now();
        auto serial = coep::run_serial(audits, audit_one);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        auto parallel = coep::run_parallel(audits, audit_one);
        double tp = seconds_since(t0);

        bool same = serial == parallel;
        std::cout << "audit batch   serial " << ts << " s, parallel " << tp
                  << " s, speedup " << ts / tp << "x, results identical: "
                  << (same ? "yes" : "NO") << "\n";
        if (!same) return 1;
    }

    {
        coep::CMat a = coep::gen_random(8, 7);
        coep::CMat p = a * coep::mp_inverse_euclidean(a).first;
        auto norm = coep::NormSpec::l1();

        auto t0 = Clock::now();
        double ds = 0;
        for (std::size_t i = 0; i < grids; ++i)
            ds = coep::detail::grid_defect_serial(p, norm);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        double dp = 0;
        for (std::size_t i = 0; i < grids; ++i)
            dp = coep::detail::grid_defect_parallel(p, norm);
        double tp = seconds_since(t0);

        bool same = ds == dp;
        std::cout << "hermitian grid serial " << ts << " s, parallel " << tp
                  << " s, speedup " << ts / tp << "x, results identical: "
                  << (same ? "yes" : "NO") << "\n";
        if (!same) return 1;
    }
    return 0;
}
