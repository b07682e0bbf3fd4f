#pragma once

#include <cstdint>
#include <string>

namespace tracecodes::cyclo {

/// The four normalized representations used by the N = 3 and N = 4 period polynomials.
enum class DiophantineKind {
    CubicFourR,     ///< 4r = c^2 + 27d^2, c = 1 (mod 3), gcd(c, p) = 1 when p = 1 (mod 3)
    QuarticR,       ///< r = u^2 + 4v^2, u = 1 (mod 4), gcd(u, p) = 1 when p = 1 (mod 4)
    CubicFourRoot,  ///< 4n = c1^2 + 27d1^2, c1 = 1 (mod 3), gcd(c1, p) = 1
    QuarticRoot,    ///< n = u1^2 + 4v1^2, u1 = 1 (mod 4), gcd(u1, p) = 1
};

std::string to_string(DiophantineKind kind);

struct DiophantineSolution {
    DiophantineKind kind;
    std::uint64_t target;  ///< n in the defining equation (r, or the prime power for the root kinds)
    std::int64_t first;    ///< c, u, c1 or u1: uniquely determined
    std::int64_t second;   ///< |d|, |v|, |d1| or |v1|
    bool second_sign_free; ///< both signs of `second` satisfy the constraints (second != 0)

    bool satisfies_equation() const;
};

/// Exhaustive search with the second component in [0, ceil(sqrt(target))].
/// Throws ArithmeticError when no normalized solution exists or when the normalized first
/// component is not unique.
DiophantineSolution solve_diophantine(DiophantineKind kind, std::uint64_t p, std::uint64_t target);

}  // namespace tracecodes::cyclo
