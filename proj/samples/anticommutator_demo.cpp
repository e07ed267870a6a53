// Prints ‖fg‖, ‖fg + gf‖ and ‖fg‖ + ‖fg‖² for a few random pairs.
#include <cstdio>

#include "projnorm/projnorm.hpp"

int main() {
    using namespace projnorm;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto pair = projections::random_pair(6, 2, 3, seed);
        const auto report = verify::check_theorem(pair, verify::kDefaultTol);
        std::printf("seed %llu  |fg| = %.15f  |fg+gf| = %.15f  |fg|+|fg|^2 = %.15f\n",
                    static_cast<unsigned long long>(seed), report.quantity("norm_fg"),
                    report.quantity("norm_anti"), report.quantity("predicted"));
    }
}
