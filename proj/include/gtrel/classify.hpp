#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtrel/tableau.hpp"

namespace gtrel {

struct HWCase {
    enum class Tag { CaseA, CaseB, NotRelation } tag = Tag::NotRelation;
    int i = 0;
    int j = 0;

    static HWCase a() { return {Tag::CaseA, 0, 0}; }
    static HWCase b(int i, int j) { return {Tag::CaseB, i, j}; }
    static HWCase none() { return {Tag::NotRelation, 0, 0}; }

    bool is_relation() const { return tag != Tag::NotRelation; }
    friend bool operator==(const HWCase&, const HWCase&) = default;

    std::string str() const {
        switch (tag) {
        case Tag::CaseA: return "CaseA";
        case Tag::CaseB: return "CaseB(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Tag::NotRelation: return "NotRelation";
        }
        return "";
    }
};

// Conditions (i)-(iii) of the second highest-weight family for the pair (i, j).
inline bool satisfies_case_b(const Weight& lambda, int i, int j) {
    const int n = static_cast<int>(lambda.size());
    if (!(1 <= i && i <= j && j < n))
        return false;
    for (int k = j + 1; k <= n; ++k)
        if (!in_z_gt0(pairing(lambda, k, k)))
            return false;
    for (int r = 1; r <= n; ++r)
        for (int s = r; s <= n; ++s) {
            if (r == i && s >= j)
                continue;
            if (in_z_leq0(pairing(lambda, r, s)))
                return false;
        }
    return in_z_leq0(pairing(lambda, i, n));
}

inline bool satisfies_case_a(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    for (int r = 1; r <= n; ++r)
        for (int s = r; s < n; ++s)
            if (in_z_leq0(pairing(lambda, r, s)))
                return false;
    return true;
}

inline HWCase hw_relation_case(const Weight& lambda) {
    if (satisfies_case_a(lambda))
        return HWCase::a();
    const int n = static_cast<int>(lambda.size());
    std::vector<HWCase> found;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (satisfies_case_b(lambda, i, j))
                found.push_back(HWCase::b(i, j));
    return found.size() == 1 ? found.front() : HWCase::none();
}

struct BoundedCase {
    char tag = 'a';  // one of a, b, c, d, e
    int i = 0;       // index for d and e

    friend bool operator==(const BoundedCase&, const BoundedCase&) = default;
    std::string str() const { return i ? std::string(1, tag) + "(" + std::to_string(i) + ")" : std::string(1, tag); }
};

inline std::optional<BoundedCase> bounded_case(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    auto p = [&](int r, int s) { return pairing(lambda, r, s); };
    auto others_positive = [&](std::initializer_list<int> skip) {
        for (int k = 1; k <= n; ++k) {
            if (std::find(skip.begin(), skip.end(), k) != skip.end())
                continue;
            if (!in_z_gt0(p(k, k)))
                return false;
        }
        return true;
    };
    if (!in_z_gt0(p(n, n)) && others_positive({n}))
        return BoundedCase{'a', 0};
    if (!p(1, 1).is_integer() && others_positive({1}))
        return BoundedCase{'b', 0};
    if (n >= 2 && in_z_lt0(p(1, 1)) && in_z_leq0(p(1, n)) && others_positive({1}))
        return BoundedCase{'c', 0};
    std::vector<int> d_hits, e_hits;
    for (int i = 2; i <= n - 1; ++i)
        if (in_z_lt0(p(i, i)) && in_z_gt0(p(i - 1, i)) && in_z_leq0(p(i, n)) && others_positive({i}))
            d_hits.push_back(i);
    if (d_hits.size() == 1)
        return BoundedCase{'d', d_hits.front()};
    for (int i = 1; i <= n - 1; ++i)
        if (!p(i, i).is_integer() && !p(i + 1, i + 1).is_integer() && in_z_gt0(p(i, i + 1)) &&
            others_positive({i, i + 1}))
            e_hits.push_back(i);
    if (e_hits.size() == 1)
        return BoundedCase{'e', e_hits.front()};
    return std::nullopt;
}

inline bool verma_simple_relation(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    for (int r = 1; r <= n; ++r)
        for (int s = r; s <= n; ++s) {
            Rational v = pairing(lambda, r, s);
            if (s == n ? in_z_gt0(v) : v.is_integer())
                return false;
        }
    return true;
}

inline bool family_is_simple(const std::vector<Rational>& u) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if ((u[i] - u[i + 1]).is_integer())
            return false;
    return true;
}

struct Sl2InducedParams {
    Rational gamma;
    Weight mu;
};

struct Sl2Branch {
    Weight lambda;
    Rational x;
    HWCase hw_case;
    bool experimental = false;  // integral gamma
};

inline std::vector<Sl2Branch> resolve_sl2_induced(const Sl2InducedParams& params) {
    const Weight& mu = params.mu;
    if (mu.size() < 2)
        throw Error(ErrorCode::ValidationError, "mu needs at least two coordinates");
    auto root = rational_sqrt(params.gamma);
    if (!root)
        throw Error(ErrorCode::NonSquareGamma, params.gamma.str() + " is not the square of a rational");
    const Rational mu1p = mu[0] + Rational(1);
    std::vector<Rational> signs = {*root};
    if (!root->is_zero())
        signs.push_back(-*root);
    // gamma = (mu_1 - 2k + 1)^2 means some branch forces x = k integral.
    for (auto& r : signs)
        if (((mu1p - r) / Rational(2)).is_integer())
            throw Error(ErrorCode::DegenerateDense,
                        "gamma " + params.gamma.str() + " lies on the excluded lattice for mu_1 = " + mu[0].str());
    std::vector<Sl2Branch> out;
    for (auto& r : signs) {
        if (in_class(r, DiffClass::ZGeq0))
            continue;
        Weight lambda = mu;
        lambda[0] = r - Rational(1);
        Rational x = (mu[0] - lambda[0]) / Rational(2);
        lambda[1] = mu[1] + x;
        if (x.is_integer() || (x - mu1p).is_integer())
            continue;
        out.push_back({lambda, x, hw_relation_case(lambda), params.gamma.is_integer()});
    }
    return out;
}

} // namespace gtrel
