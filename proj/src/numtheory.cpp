#include "partlab/numtheory.hpp"

#include "partlab/errors.hpp"

#include <string>

namespace partlab {

std::int64_t sigma0(std::int64_t n)
{
    if (n < 0)
        throw domain_error("sigma0 of a negative number");
    if (n == 0)
        return 0;
    std::int64_t count = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (n > 1)
        count *= 2;
    return count;
}

int v2(std::int64_t n)
{
    if (n <= 0)
        throw domain_error("v2 needs a positive argument, got " + std::to_string(n));
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    return e;
}

std::vector<pentagonal_term> pentagonal_terms(std::int64_t limit)
{
    std::vector<pentagonal_term> out;
    for (std::int64_t j = 1; j * (3 * j - 1) / 2 <= limit; ++j)
        out.push_back({j, j * (3 * j + 1) / 2, j * (3 * j - 1) / 2, j % 2 ? -1 : 1});
    return out;
}

ab_sets sets_ab(std::int64_t r)
{
    if (r < 0)
        throw domain_error("sets_ab needs r >= 0");
    ab_sets s;
    for (std::int64_t j = 1; 2 * j * (3 * j - 1) <= r; ++j) {
        std::int64_t ea = 2 * j * (3 * j + 1);
        std::int64_t eb = 2 * j * (3 * j - 1);
        if (ea <= r && (r - ea) % 4 == 0)
            s.a.push_back(j);
        if ((r - eb) % 4 == 0)
            s.b.push_back(j);
    }
    return s;
}

std::int64_t gamma_term(std::int64_t n)
{
    if (n <= 0 || n % 4 != 0)
        throw domain_error("gamma needs a positive multiple of 4, got " + std::to_string(n));
    auto sets = sets_ab(n);
    std::int64_t g = sigma0(n / 4);
    for (auto j : sets.a)
        g += (j % 2 ? -1 : 1) * sigma0((n - 2 * j * (3 * j + 1)) / 4);
    for (auto j : sets.b)
        g += (j % 2 ? -1 : 1) * sigma0((n - 2 * j * (3 * j - 1)) / 4);
    return g;
}

} // namespace partlab
