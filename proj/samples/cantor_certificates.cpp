// Certifies the simplest base-3 Cantor-set rationals 0.0...02...2 as
// non-free and prints each relator.

#include <iostream>

#include "halfrel/halfrel.hpp"

int main() {
    using namespace halfrel;
    for (long s = 1; s <= 3; ++s) {
        for (long t = s; t <= 4; ++t) {
            auto m = geom_block(3, s, t);
            auto cert = certify_half_relation(m.tuple, m.q);
            std::cout << "q = " << m.q << "  tuple " << m.tuple.str() << "\n  relator: " << cert.relator
                      << "\n  identity at q: " << (cert.identity_verified ? "yes" : "no") << '\n';
        }
    }
}
