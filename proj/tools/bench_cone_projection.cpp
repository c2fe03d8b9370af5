// Compares the serial and OpenMP paths of the cone-sum projection on
// random Gram matrices of growing size.
#include <chrono>
#include <cstdio>
#include <random>

#include "exclusion/incoherence.hpp"

using namespace exclusion;

namespace {

Gram random_gram(std::mt19937_64& rng, int d, int k) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix v(d, k);
    for (int c = 0; c < k; ++c) {
        double n2 = 0.0;
        for (int r = 0; r < d; ++r) {
            v(r, c) = cplx{g(rng), g(rng)};
            n2 += std::norm(v(r, c));
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (int r = 0; r < d; ++r) v(r, c) *= inv;
    }
    Gram out{(v.dagger() * v).hermitized()};
    for (int i = 0; i < k; ++i) out.m(i, i) = 1.0;
    return out;
}

double time_run(const Gram& g, int iters, ExecPolicy policy) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConeSumProjection p = project_onto_cone_sum(g, iters, 0.0, policy);
    const auto t1 = std::chrono::steady_clock::now();
    (void)p;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    std::mt19937_64 rng(2024);
    const int iters = 60;
    std::printf("%6s %6s %12s %12s %8s\n", "k", "d", "serial[ms]", "openmp[ms]", "speedup");
    for (int k : {8, 16, 24, 32, 48}) {
        const Gram g = random_gram(rng, k, k);
        // warm-up, then timed runs
        time_run(g, 5, ExecPolicy::Serial);
        const double serial = time_run(g, iters, ExecPolicy::Serial);
        const double parallel = time_run(g, iters, ExecPolicy::Parallel);
        std::printf("%6d %6d %12.2f %12.2f %8.2fx\n", k, k, serial, parallel, serial / parallel);
    }
    return 0;
}
