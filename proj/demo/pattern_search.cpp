// Column patterns on 3-row grids: which short patterns can sit inside a
// dominating set, and what the optimal sets look like column by column.
#include <iostream>

#include "bdom/bdom.hpp"

int main() {
    using namespace bdom;
    const BroadcastParams params(2, 2);

    for (const char* p : {"1-1-1", "2-1-0", "1-2-1", "2-1-1-1", "2-1-2-1"}) {
        const auto found = mps_search(3, params, Pattern::parse(p));
        std::cout << p << ": " << found.size() << (found.size() == 1 ? " placement\n" : " placements\n");
    }

    const auto rep = refute_smaller_patterns(3, params, Pattern::parse("2-1-1"));
    std::cout << "smaller than 2-1-1:";
    for (const auto& v : rep.verdicts)
        if (v.survivors) std::cout << " " << v.pattern.str();
    std::cout << (rep.minimal ? " (minimal)\n" : " survive\n");

    for (int n = 3; n <= 12; ++n) {
        const auto sol = solve({3, n}, params);
        std::cout << "3x" << n << "  " << sol.gamma << "  " << column_pattern({3, n}, sol.witness).str() << "\n";
    }
}
