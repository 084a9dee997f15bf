#include "partlab/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> only(argv + 1, argv + argc);
    auto results = partlab::run_acceptance(only, 1, [](const partlab::criterion_result& r) {
        std::cout << partlab::format_result(r) << '\n';
        for (const auto& n : r.notes)
            std::cout << "     " << n << '\n';
        std::cout.flush();
    });
    int failed = 0;
    for (const auto& r : results)
        failed += !r.pass;
    std::cout << results.size() - std::size_t(failed) << "/" << results.size() << " criteria passed\n";
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
