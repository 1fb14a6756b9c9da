// Solve one grid exactly, print the witness, and check it against the oracle.
#include <cstdlib>
#include <iostream>

#include "bdom/bdom.hpp"

int main(int argc, char** argv) {
    using namespace bdom;
    const int m = argc > 1 ? std::atoi(argv[1]) : 4;
    const int n = argc > 2 ? std::atoi(argv[2]) : 5;
    const BroadcastParams params(2, 2);
    const GridDims dims(m, n);

    const auto sol = solve(dims, params);
    std::cout << to_string(params) << " on " << m << "x" << n << ": gamma = " << sol.gamma << " (peak "
              << sol.peak_states << " states)\n";
    std::cout << render_ascii(dims, sol.witness, reception_from(dims, params.t, sol.witness)) << "\n";

    if (m * n <= 25) {
        const auto brute = brute_min(dims, params);
        std::cout << "oracle agrees: " << (brute.gamma == sol.gamma ? "yes" : "no") << "\n";
    }
    std::cout << to_json(TowerSetDocument{params, dims, sol.witness}).dump() << "\n";
}
