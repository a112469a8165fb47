#include "brauer/numbers.hpp"

#include <cmath>
#include <cstdlib>

#include "brauer/common.hpp"

namespace brauer {

namespace {

void require_positive(std::int64_t n) {
    if (n < 1)
        throw PreconditionError("expected a positive integer, got " + std::to_string(n));
}

} // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n);
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

std::int64_t tau(std::int64_t n) {
    return static_cast<std::int64_t>(divisors(n).size());
}

std::int64_t sigma(std::int64_t n) {
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n))
        sum = checked_add(sum, d);
    return sum;
}

std::int64_t totient(std::int64_t n) {
    require_positive(n);
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::optional<std::int64_t> integer_occurrence(std::int64_t m) {
    if (m == 0)
        return std::nullopt;
    return tau(std::llabs(m));
}

} // namespace brauer
