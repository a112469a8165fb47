#ifndef BRAUER_NUMBERS_HPP
#define BRAUER_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace brauer {

// Arithmetic functions used by the cyclic-group identity checks.
// All take n >= 1 and throw PreconditionError otherwise.

std::vector<std::int64_t> divisors(std::int64_t n);  // ascending
std::int64_t tau(std::int64_t n);                    // number of divisors
std::int64_t sigma(std::int64_t n);                  // sum of divisors
std::int64_t totient(std::int64_t n);                // Euler phi
bool is_prime(std::int64_t n);

// Subgroup-occurrence of m in the additive group of all integers:
// tau(|m|) for m != 0; no finite value for m == 0 (returns nullopt).
std::optional<std::int64_t> integer_occurrence(std::int64_t m);

} // namespace brauer

#endif // BRAUER_NUMBERS_HPP
