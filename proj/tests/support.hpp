#pragma once

#include <random>
#include <vector>

#include "gtrel/gtrel.hpp"

namespace gtrel::testing {

inline Rational R(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

inline Weight W(std::initializer_list<Rational> xs) { return Weight(xs); }

// Random rational with small numerator and denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, long span = 4, long max_den = 6) {
    std::uniform_int_distribution<long> den(1, max_den), num(-span * max_den, span * max_den);
    long d = den(rng);
    return R(num(rng), d);
}

inline Rational random_nonintegral(std::mt19937_64& rng, long span = 4) {
    while (true) {
        Rational r = random_rational(rng, span, 7);
        if (!r.is_integer())
            return r;
    }
}

// Depth-first path search, independent of the Floyd-Warshall closure.
inline bool path_exists(const RelationSet& c, Position a, Position b, const std::vector<Position>& banned = {}) {
    std::vector<Position> stack;
    std::vector<Position> seen;
    for (auto& r : c)
        if (r.from == a)
            stack.push_back(r.to);
    while (!stack.empty()) {
        Position p = stack.back();
        stack.pop_back();
        if (p == b)
            return true;
        if (std::find(banned.begin(), banned.end(), p) != banned.end() ||
            std::find(seen.begin(), seen.end(), p) != seen.end())
            continue;
        seen.push_back(p);
        for (auto& r : c)
            if (r.from == p)
                stack.push_back(r.to);
    }
    return false;
}

inline RelationSet random_relation_set(std::mt19937_64& rng, int n, double density) {
    RelationSet c(n);
    std::bernoulli_distribution keep(density);
    for (auto& a : all_positions(n))
        for (auto& b : all_positions(n))
            if (relation_kind(n, a, b) && keep(rng))
                c.insert(a, b);
    return c;
}

} // namespace gtrel::testing
