// Lattice upper bound for a (2,2) grid: per-class sizes, corner savings, and
// how far the result sits from the exact value.
#include <cstdlib>
#include <iostream>

#include "bdom/bdom.hpp"

int main(int argc, char** argv) {
    using namespace bdom;
    const int m = argc > 1 ? std::atoi(argv[1]) : 9;
    const int n = argc > 2 ? std::atoi(argv[2]) : 12;
    const BroadcastParams params(2, 2);
    const GridDims dims(m, n);

    const auto c = construct_bound_set(params, dims);
    for (std::size_t i = 0; i < c.class_sizes.size(); ++i)
        std::cout << "class " << i << ": " << c.class_sizes[i] << "\n";
    std::cout << "chosen class " << c.residue << ", halo " << c.halo_size << ", clamped " << c.clamped_size << "\n";
    for (const auto& s : c.corners) std::cout << "  " << s.corner << " saves " << s.saving() << "\n";

    const long bound = bound_formula(params, dims);
    const int gamma = solve(dims, params).gamma;
    std::cout << "size " << c.towers.size() << ", formula " << bound << ", gamma " << gamma << "\n";
    std::cout << render_ascii(dims, c.towers, reception_from(dims, params.t, c.towers)) << "\n";
}
