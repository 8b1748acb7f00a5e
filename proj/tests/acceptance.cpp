// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <iostream>
#include <string>

#include "shrubs/checks.hpp"

using namespace shrubs;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string suite;
    checks::Config config;
};

} // namespace

int main()
{
    std::cout << std::unitbuf;
    const checks::Config base{};
    checks::Config six = base;
    six.max_n = 6;

    const Criterion criteria[] = {
        {1, "connected shrubs on 5 vertices up to isomorphism = 30", "connected-five", base},
        {2, "generator enumeration = brute force, n = 1..5", "enumeration", base},
        {3, "operad axioms, exhaustive and 1000 random triples", "operad", base},
        {4, "decompose/evaluate round trip n <= 6 and relations", "presentation", six},
        {5, "order-sum map is a morphism; compatible orders n <= 5", "zinbiel", base},
        {6, "mould image = closed fraction n <= 5; reduced n <= 6", "mould", base},
        {7, "six-vertex fraction: rebuild, two ram classes, reproduce", "six-vertex-fraction", base},
        {8, "fraction map injective, round trip, search inverse", "injectivity", base},
        {9, "anticyclic action closed; group laws on 500 pairs", "closure", base},
        {10, "orbit invariants constant n <= 5", "orbits", base},
        {11, "forest action agrees; |C(n+1)| = 2(n+1)^(n-1)", "forests", base},
        {12, "shrub counts = series-parallel poset counts", "series-parallel", base},
        {13, "deformed generators: associativity and relation", "deformation", base},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        checks::Result r;
        try {
            r = checks::run(c.suite, c.config);
        } catch (const std::exception& e) {
            r.suite = c.suite;
            r.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.number == 1 && seconds >= 60.0)
            r.fail("took " + std::to_string(seconds) + " s, limit 60 s");
        const bool ok = r.passed();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.title << " (" << r.cases << " cases, "
                  << std::to_string(seconds).substr(0, std::to_string(seconds).find('.') + 3) << " s)"
                  << (r.note.empty() ? "" : "; " + r.note) << "\n";
        for (const auto& f : r.failures)
            std::cout << "    " << f << "\n";
        if (r.failure_count > r.failures.size())
            std::cout << "    ... " << r.failure_count - r.failures.size() << " more\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
