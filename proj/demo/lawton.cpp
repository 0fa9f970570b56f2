// Trace coordinates on the rank-two SL(3,C) character variety: numeric
// spot-check of tau^2 - P tau + Q = 0 plus the exact reference battery.
#include <cstdio>
#include <random>

#include "orbidim/lawton.hpp"

using namespace orbidim::lawton;

int main() {
    std::mt19937_64 rng(2718);
    auto A = random_unimodular(rng);
    auto B = random_unimodular(rng);
    auto c = trace_coords(A, B);
    std::printf("random unimodular pair:\n");
    std::printf("  x = tr A       = %+.6f%+.6fi\n", c.x.real(), c.x.imag());
    std::printf("  z = tr AB      = %+.6f%+.6fi\n", c.z.real(), c.z.imag());
    std::printf("  tau = tr [A,B] = %+.6f%+.6fi\n", c.tau.real(), c.tau.imag());
    std::printf("  residual |tau^2 - P tau + Q| (relative) = %.3e\n", lawton_residual(c));
    std::printf("  Cayley-Hamilton residual of A           = %.3e\n",
                cayley_hamilton_residual(A));

    double worst = 0;
    for (int i = 0; i < 2000; ++i)
        worst = std::max(worst, lawton_residual(random_unimodular(rng), random_unimodular(rng)));
    std::printf("  worst residual over 2000 pairs          = %.3e\n\n", worst);

    std::printf("exact reference points:\n");
    int failed = 0;
    for (const auto& check : verify_reference_points()) {
        std::printf("  [%s] %s\n", check.pass ? "ok" : "FAIL", check.name.c_str());
        if (!check.pass) {
            std::printf("         %s\n", check.detail.c_str());
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
