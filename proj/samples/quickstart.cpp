// Classify a triangle, build its excircles and decide whether an Apollonius
// circle exists, then cross-check the verdict against the constructive solver.

#include "taxi/apollonius.hpp"
#include "taxi/excircles.hpp"
#include "taxi/inscription.hpp"
#include "taxi/io.hpp"

#include <iostream>

int main() {
    using namespace taxi;
    const Triangle t = io::parse_triangle("0,0 5,1 3,4");

    const auto cls = classify_triangle(t);
    std::cout << "inscribed: " << cls.inscribed << ", completely inscribed angles: " << cls.completely_count << "\n";

    std::vector<Excircle> es;
    for (Side s : kAllSides) {
        if (auto e = construct_excircle(t, s)) {
            std::cout << "excircle " << name_of(s) << ": center " << e->circle.center() << " radius "
                      << e->circle.radius() << "\n";
            es.push_back(*e);
        }
    }

    const auto d = exists_closed_form(t);
    std::cout << "Apollonius circle exists: " << d.exists << " (" << name_of(d.rule) << ")\n";
    if (es.size() == 3) {
        const auto found = construct_apollonius(es[0], es[1], es[2]);
        for (const auto& a : found)
            std::cout << "  center " << a.circle.center() << " radius " << a.circle.radius() << "\n";
        if (found.empty() == d.exists) return 2;
    }
    return 0;
}
