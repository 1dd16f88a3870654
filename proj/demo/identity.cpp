// Builds the bilinear identity for a partition, checks it, and solves the
// recurrence for a rectangle from single-column seeds.

#include <iostream>

#include "hschur/hschur.hpp"

using namespace hschur;

int main(int argc, char **argv)
{
    const Partition lam = argc > 1 ? Partition::parse(argv[1]) : Partition{3, 2, 1};
    const int k = argc > 2 ? std::stoi(argv[2]) : (corner_count(lam) + 1) / 2;

    const auto id = main_identity(lam, k);
    std::cout << report::to_text(id);
    const auto chk = verify_identity(id, Mode::Specialized);
    std::cout << (chk.ok ? "holds" : "FAILS") << " in the h-ring\n\n";

    const auto q = quantum_identity(lam, k);
    std::cout << report::to_text(q);
    std::cout << (verify_identity(q, Mode::Formal).ok ? "holds" : "FAILS") << " in the t-ring\n\n";

    Evolver ev{SingleColumnSeeds{}};
    const Partition square{3, 3, 3};
    std::cout << "s[" << square.str() << "] has " << ev.evolve(square).size() << " terms after " << ev.steps()
              << " recurrence steps\n";
    return chk.ok ? 0 : 1;
}
