#ifndef BAMA_MODMATH_HPP
#define BAMA_MODMATH_HPP

#include <cstdint>
#include <utility>

#include "bama/errors.hpp"

// Euclidean division helpers. The C++ '%' operator takes the sign of the
// dividend; everything here instead keeps remainders in [0, n), which is the
// convention the run extraction and its congruence checks are built on.

namespace bama {

struct DivMod {
    std::int64_t quotient;
    std::int64_t remainder;
    bool operator==(const DivMod&) const = default;
};

// p = quotient * n + remainder with 0 <= remainder < n. Requires n > 0.
constexpr DivMod divmod_euclid(std::int64_t p, std::int64_t n) {
    if (n <= 0)
        throw invalid_modulus("divmod_euclid: modulus must be positive");
    std::int64_t q = p / n;
    std::int64_t r = p % n;
    if (r < 0) {
        r += n;
        --q;
    }
    return DivMod{q, r};
}

// Always-nonnegative remainder of p mod n. Requires n > 0.
constexpr std::int64_t mod_residue(std::int64_t p, std::int64_t n) {
    return divmod_euclid(p, n).remainder;
}

// a and b fall in the same residue class mod n.
constexpr bool congruent(std::int64_t a, std::int64_t b, std::int64_t n) {
    return mod_residue(a, n) == mod_residue(b, n);
}

} // namespace bama

#endif // BAMA_MODMATH_HPP
