#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "gtrel/localization.hpp"

namespace gtrel {

struct Level {
    int n = 2;
    long p = 0;
    long q = 1;

    Rational k() const { return Rational(p, q) - Rational(n + 1); }

    static Level make(int n, long p, long q) {
        if (n < 2)
            throw Error(ErrorCode::ValidationError, "need n >= 2");
        if (q < 1 || p < n + 1 || std::gcd(p, q) != 1)
            throw Error(ErrorCode::ValidationError, "need coprime p >= n+1 and q >= 1");
        return {n, p, q};
    }
};

inline std::optional<Level> admissible_level(int n, const Rational& k) {
    Rational pq = k + Rational(n + 1);
    if (pq.sign() <= 0 || !pq.num().fits_slong_p() || !pq.den().fits_slong_p())
        return std::nullopt;
    long p = pq.num().get_si(), q = pq.den().get_si();
    if (p < n + 1)
        return std::nullopt;
    return Level{n, p, q};
}

struct MinOrbitWeight {
    std::vector<long> lambda_bar;
    long a = 1;

    Weight realized(const Level& lvl) const {
        Weight w(lambda_bar.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = Rational(lambda_bar[i]);
        w[0] -= Rational(a * lvl.p, lvl.q);
        return w;
    }
};

// Lazy enumeration of (lambda_bar, a): lambda_bar in lexicographic order, a innermost.
class MinOrbitReps {
public:
    explicit MinOrbitReps(Level lvl) : lvl_(lvl), cur_{std::vector<long>(lvl.n, 0), 1} {
        done_ = lvl_.q < 2 || lvl_.p - lvl_.n < 1;
    }

    std::optional<MinOrbitWeight> next() {
        if (done_)
            return std::nullopt;
        MinOrbitWeight out = cur_;
        advance();
        return out;
    }

    std::vector<MinOrbitWeight> all() {
        std::vector<MinOrbitWeight> out;
        while (auto r = next())
            out.push_back(*r);
        return out;
    }

private:
    void advance() {
        if (++cur_.a <= lvl_.q - 1)
            return;
        cur_.a = 1;
        const long cap = lvl_.p - lvl_.n - 1;  // max coordinate sum
        auto& v = cur_.lambda_bar;
        long sum = std::accumulate(v.begin(), v.end(), 0L);
        // Odometer on the last coordinate first, carrying left when the sum cap is hit.
        for (int i = lvl_.n - 1; i >= 0; --i) {
            if (sum < cap) {
                ++v[i];
                return;
            }
            sum -= v[i];
            v[i] = 0;
        }
        done_ = true;
    }

    Level lvl_;
    MinOrbitWeight cur_;
    bool done_ = false;
};

inline Weight simple_dot(int k, Weight lambda) {
    const int n = static_cast<int>(lambda.size());
    if (k < 1 || k > n)
        throw Error(ErrorCode::ValidationError, "reflection index out of range");
    Rational lk = lambda[k - 1];
    lambda[k - 1] = -lk - Rational(2);
    if (k > 1)
        lambda[k - 2] += lk + Rational(1);
    if (k < n)
        lambda[k] += lk + Rational(1);
    return lambda;
}

// word = [k1, ..., kr] means s_{k1} ... s_{kr}, applied right to left.
inline Weight dot_action(const std::vector<int>& word, Weight lambda) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        lambda = simple_dot(*it, std::move(lambda));
    return lambda;
}

struct OrbitEntry {
    Weight weight;
    HWCase hw_case;
};

// Lambda_1 and its images s_k ... s_1 . Lambda_1 for k = 1..n.
inline std::vector<OrbitEntry> hw_orbit_list(const Level& lvl, const MinOrbitWeight& rep) {
    std::vector<OrbitEntry> out;
    Weight w = rep.realized(lvl);
    out.push_back({w, hw_relation_case(w)});
    for (int k = 1; k <= lvl.n; ++k) {
        w = simple_dot(k, w);
        out.push_back({w, hw_relation_case(w)});
    }
    return out;
}

inline bool sl2_dense_admissible(const Level& lvl, long lambda, long a, const Rational& x) {
    if (lambda < 0 || lambda > lvl.p - 2 || a < 1 || a > lvl.q - 1)
        return false;
    return !x.is_integer() && !(x - Rational(a * lvl.p, lvl.q)).is_integer();
}

struct InducedModule {
    GTModule module;
    Rational gamma;
    Weight mu;
};

inline InducedModule build_sl2_induced_minimal(const Level& lvl, const MinOrbitWeight& rep, const Weight& branch,
                                               const Rational& x) {
    auto orbit = hw_orbit_list(lvl, rep);
    if (std::none_of(orbit.begin(), orbit.end(), [&](const OrbitEntry& e) { return e.weight == branch; }))
        throw Error(ErrorCode::PreconditionViolated, weight_str(branch) + " is not in the orbit list");
    Rational p1 = pairing(branch, 1, 1);
    if (p1.is_integer())
        throw Error(ErrorCode::BranchNotLocalizable, "alpha_1 pairing " + p1.str() + " is integral");
    if (x.is_integer() || (x + p1).is_integer())
        throw Error(ErrorCode::BadTwist, "twist " + x.str() + " is outside the admissible set");
    GTModule m = twist_e21(hw_module(branch), x);
    Weight mu = branch;
    mu[0] += Rational(2) * x;
    mu[1] -= x;
    return {std::move(m), p1 * p1, std::move(mu)};
}

} // namespace gtrel
