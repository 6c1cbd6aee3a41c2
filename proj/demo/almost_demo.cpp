// Builds a few small rings and prints their radicals and almost Armendariz verdicts.

#include <iostream>

#include "ringlab/dsl.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/report.hpp"

int main() {
    using namespace ringlab;
    for (const char* text : {"Z/4", "T(2, Z/2)", "M(2, Z/2)"}) {
        const RingRef r = evaluate(text);
        const RingAnalysis a = analyze(r);
        std::cout << text << "  P(R) = " << labels_text(*r, a.prime_radical.members) << "\n";
        std::cout << verdict_text(*r, check_almost_armendariz(a, 1)) << "\n";
    }
}
