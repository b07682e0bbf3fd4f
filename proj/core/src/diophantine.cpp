#include "tracecodes/diophantine.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "tracecodes/errors.hpp"

namespace tracecodes::cyclo {

namespace {

struct Shape {
    std::int64_t scale;   // left side is scale * target
    std::int64_t weight;  // coefficient of second^2
    std::int64_t modulus; // first = 1 (mod modulus)
    bool coprime;         // gcd(first, p) = 1 required
};

Shape shape_of(DiophantineKind kind, std::uint64_t p) {
    switch (kind) {
        case DiophantineKind::CubicFourR: return {4, 27, 3, p % 3 == 1};
        case DiophantineKind::QuarticR: return {1, 4, 4, p % 4 == 1};
        case DiophantineKind::CubicFourRoot: return {4, 27, 3, true};
        case DiophantineKind::QuarticRoot: return {1, 4, 4, true};
    }
    throw InvalidArgument("unknown Diophantine kind");
}

std::int64_t isqrt(std::int64_t n) {
    auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::int64_t mod_positive(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

std::string to_string(DiophantineKind kind) {
    switch (kind) {
        case DiophantineKind::CubicFourR: return "4r=c^2+27d^2";
        case DiophantineKind::QuarticR: return "r=u^2+4v^2";
        case DiophantineKind::CubicFourRoot: return "4n=c1^2+27d1^2";
        case DiophantineKind::QuarticRoot: return "n=u1^2+4v1^2";
    }
    return "unknown";
}

bool DiophantineSolution::satisfies_equation() const {
    const auto s = shape_of(kind, 2);  // scale and weight do not depend on p
    return s.scale * static_cast<std::int64_t>(target) == first * first + s.weight * second * second;
}

DiophantineSolution solve_diophantine(DiophantineKind kind, std::uint64_t p, std::uint64_t target) {
    if (target == 0) throw InvalidArgument("Diophantine target must be positive");
    const Shape s = shape_of(kind, p);
    const std::int64_t lhs = s.scale * static_cast<std::int64_t>(target);
    const std::int64_t bound = isqrt(static_cast<std::int64_t>(target)) + 1;

    std::set<std::int64_t> firsts;
    std::int64_t second = -1;
    for (std::int64_t b = 0; b <= bound; ++b) {
        const std::int64_t rem = lhs - s.weight * b * b;
        if (rem < 0) break;
        const std::int64_t a = isqrt(rem);
        if (a * a != rem) continue;
        for (std::int64_t cand : {a, -a}) {
            if (mod_positive(cand, s.modulus) != 1) continue;
            if (s.coprime && std::gcd(cand, static_cast<std::int64_t>(p)) != 1) continue;
            firsts.insert(cand);
            second = b;
        }
    }
    if (firsts.empty())
        throw ArithmeticError("no normalized solution of " + to_string(kind) + " for n = " + std::to_string(target) +
                              ", p = " + std::to_string(p));
    if (firsts.size() > 1)
        throw ArithmeticError("normalized solution of " + to_string(kind) + " for n = " + std::to_string(target) +
                              " is not unique");
    return {kind, target, *firsts.begin(), second, second != 0};
}

}  // namespace tracecodes::cyclo
