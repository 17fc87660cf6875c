#pragma once

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "gtrel/action.hpp"

namespace gtrel {

struct LocalizationSpec {
    std::vector<int> targets;  // m values of the root vectors E_{m1}
    std::optional<Rational> x;
};

inline bool e21_injective(const RelationSet& c) {
    return !c.contains({1, 1}, {2, 1}) && !c.contains({1, 1}, {2, 2});
}

inline bool e21_surjective(const RelationSet& c) {
    return !c.contains({2, 1}, {1, 1}) && !c.contains({2, 2}, {1, 1});
}

inline GTModule localize_e21(const GTModule& m) {
    if (!e21_injective(m.relations()))
        throw Error(ErrorCode::NotInjective, "E21 has a kernel: an arrow leaves (1,1)");
    RelationSet d = m.relations();
    d.erase({2, 1}, {1, 1});
    d.erase({2, 2}, {1, 1});
    return GTModule::create(m.seed(), d, m.sigma(), m.normalization());
}

// Twisted localization realized on the shifted seed T(v + x delta^{11}).
inline GTModule twist_e21(const GTModule& m, const Rational& x) {
    GTModule loc = localize_e21(m);
    Tableau seed = loc.seed();
    seed.at(1, 1) += x;
    return GTModule::create(seed, loc.relations(), loc.sigma(), loc.normalization());
}

// Generator action on T(w)^x written out entry by entry, for the localized module `loc`
// (standard flag). Terms leaving the basis of `loc` are dropped.
inline GTVector twisted_action_direct(const GTModule& loc, const Rational& x, const Generator& g,
                                      const GTVector& v) {
    if (!loc.identity_flag())
        throw Error(ErrorCode::UnsupportedGenerator, "direct twisted formulas assume the standard flag");
    if (g.kind == Generator::Kind::E)
        throw Error(ErrorCode::UnsupportedGenerator, g.str() + " is not a Chevalley generator");
    return detail::linear(v, [&](const ShiftVector& z) {
        Tableau w = loc.tableau_at(z);
        GTVector out;
        auto put = [&](int row, int col, int step, const Rational& coef) {
            ShiftVector t = z;
            t.at(row, col) += step;
            if (loc.contains(t))
                out.add(t, coef);
        };
        const Rational w11 = w.at(1, 1) + x;
        if (g.kind == Generator::Kind::H) {
            int k = g.i;
            Rational s_k = k == 1 ? w11 : w.row_sum(k);
            Rational s_up = w.row_sum(k + 1);
            Rational s_down = k == 2 ? w11 : (k == 1 ? Rational(0) : w.row_sum(k - 1));
            out.add(z, Rational(2) * s_k - s_up - s_down - Rational(1));
            return out;
        }
        if (g.kind == Generator::Kind::ERaise) {
            int k = g.i;
            if (k == 1) {
                put(1, 1, +1, -(w11 - w.at(2, 1)) * (w11 - w.at(2, 2)));
                return out;
            }
            for (int i = 1; i <= k; ++i) {
                ShiftVector t = z;
                t.at(k, i) += 1;
                if (!loc.contains(t))
                    continue;
                Rational num(1);
                for (int j = 1; j <= k + 1; ++j)
                    num *= w.at(k, i) - w.at(k + 1, j);
                out.add(t, -num / detail::row_denominator(w, k, i));
            }
            return out;
        }
        int k = g.j;  // E_{k+1,k}
        if (k == 1) {
            put(1, 1, -1, Rational(1));
        } else if (k == 2) {
            Rational d = detail::nonzero_denominator(w.at(2, 1) - w.at(2, 2), 2, 1);
            put(2, 1, -1, (w.at(2, 1) - w11) / d);
            put(2, 2, -1, (w.at(2, 2) - w11) / (-d));
        } else {
            for (int i = 1; i <= k; ++i) {
                ShiftVector t = z;
                t.at(k, i) -= 1;
                if (!loc.contains(t))
                    continue;
                Rational num(1);
                for (int j = 1; j <= k - 1; ++j)
                    num *= w.at(k, i) - w.at(k - 1, j);
                out.add(t, num / detail::row_denominator(w, k, i));
            }
        }
        return out;
    });
}

// Simple top of the localization: reinstates the removed arrow at (1,1) in the opposite direction.
inline GTModule quotient_top(const GTModule& loc, const GTModule& sub) {
    if (loc.seed() != sub.seed() || loc.n() != sub.n())
        throw Error(ErrorCode::IncompatiblePair, "modules do not share a seed");
    if (!sub.relations().includes(loc.relations()))
        throw Error(ErrorCode::IncompatiblePair, "submodule relations do not contain the localized ones");
    std::vector<Relation> removed;
    for (auto& r : sub.relations())
        if (!loc.relations().contains(r))
            removed.push_back(r);
    if (removed.size() != 1 || removed.front().to != Position{1, 1})
        throw Error(ErrorCode::IncompatiblePair,
                    "expected exactly one removed arrow into (1,1), found " + std::to_string(removed.size()));
    RelationSet c1 = loc.relations();
    c1.insert({1, 1}, removed.front().from);
    Tableau seed = loc.seed();
    seed.at(1, 1) += Rational(1);
    try {
        return GTModule::create(seed, c1, loc.sigma(), loc.normalization());
    } catch (const Error& e) {
        throw Error(ErrorCode::IncompatiblePair, std::string("quotient data is not admissible: ") + e.what());
    }
}

// Seed entries (i, j), j >= 2, are constant down columns and the relations contain Q.
inline bool has_family_shape(const GTModule& m) {
    const Tableau& t = m.seed();
    for (int j = 2; j <= m.n() + 1; ++j)
        for (int i = j + 1; i <= m.n() + 1; ++i)
            if (t.at(i, j) != t.at(j, j))
                return false;
    return m.relations().includes(q_relations(m.n()));
}

namespace detail {

inline void require_family(const GTModule& m, int mm) {
    if (mm < 2 || mm > m.n() + 1)
        throw Error(ErrorCode::ValidationError, "m must lie in [2, n+1]");
    if (!has_family_shape(m))
        throw Error(ErrorCode::WrongShape, "seed is not column-constant beyond column 1 or relations miss Q");
}

} // namespace detail

inline bool em1_injective(const GTModule& m, int mm) {
    detail::require_family(m, mm);
    return !m.relations().contains({mm - 1, 1}, {mm, 1});
}

inline bool em1_surjective(const GTModule& m, int mm) {
    detail::require_family(m, mm);
    return !m.relations().contains({mm, 1}, {mm - 1, 1});
}

inline GTModule localize_family(const GTModule& m, LocalizationSpec spec) {
    if (spec.targets.empty())
        throw Error(ErrorCode::ValidationError, "no localization targets");
    std::sort(spec.targets.begin(), spec.targets.end());
    if (std::adjacent_find(spec.targets.begin(), spec.targets.end()) != spec.targets.end())
        throw Error(ErrorCode::ValidationError, "duplicate localization target");
    if (spec.targets == std::vector<int>{2} && !has_family_shape(m)) {
        return spec.x ? twist_e21(m, *spec.x) : localize_e21(m);
    }
    if (spec.x && spec.targets != std::vector<int>{2})
        throw Error(ErrorCode::PreconditionViolated, "twisting is only realized for the single target 2");
    RelationSet d = m.relations();
    for (int mm : spec.targets) {
        if (!em1_injective(m, mm))
            throw Error(ErrorCode::NotInjective, "E_" + std::to_string(mm) + "1 has a kernel");
        if (em1_surjective(m, mm))
            throw Error(ErrorCode::PreconditionViolated, "E_" + std::to_string(mm) + "1 is already bijective");
        d.erase({mm, 1}, {mm - 1, 1});
    }
    Tableau seed = m.seed();
    if (spec.x)
        seed.at(1, 1) += *spec.x;
    return GTModule::create(seed, d, m.sigma(), m.normalization());
}

// Simple top of a single-target localization: arrow (m-1,1) -> (m,1) with seed raised at (m-1,1).
inline GTModule family_quotient(const GTModule& loc, int mm) {
    if (mm < 2 || mm > loc.n() + 1)
        throw Error(ErrorCode::ValidationError, "m must lie in [2, n+1]");
    RelationSet d = loc.relations();
    if (d.contains({mm, 1}, {mm - 1, 1}))
        throw Error(ErrorCode::IncompatiblePair, "module is not localized at E_" + std::to_string(mm) + "1");
    d.insert({mm - 1, 1}, {mm, 1});
    Tableau seed = loc.seed();
    seed.at(mm - 1, 1) += Rational(1);
    return GTModule::create(seed, d, loc.sigma(), loc.normalization());
}

inline GTModule permute_flag(const GTModule& m, const Permutation& tau) {
    if (!is_permutation_of(tau, m.n() + 1))
        throw Error(ErrorCode::ValidationError, "flag change is not a permutation of 1..n+1");
    return GTModule::create(m.seed(), m.relations(), compose(m.sigma(), tau), m.normalization(), false);
}

// Shortest permutation (in adjacent transpositions) sending alpha_1 to the root e_r - e_{s+1}.
inline Permutation root_flag(int n, int r, int s) {
    if (!(1 <= r && r <= s && s <= n))
        throw Error(ErrorCode::ValidationError, "need 1 <= r <= s <= n");
    Permutation start = identity_permutation(n + 1);
    std::deque<Permutation> queue{start};
    std::set<Permutation> seen{start};
    while (!queue.empty()) {
        Permutation p = queue.front();
        queue.pop_front();
        if (p[0] == r && p[1] == s + 1)
            return p;
        for (int k = 0; k < n; ++k) {
            Permutation q = p;
            std::swap(q[k], q[k + 1]);
            if (seen.insert(q).second)
                queue.push_back(q);
        }
    }
    throw Error(ErrorCode::ValidationError, "root not reachable");  // unreachable for valid input
}

// Basis vector inside the box that E_{m1} sends to zero, if any.
inline std::optional<ShiftVector> kernel_scan(const GTModule& m, int mm, int box) {
    std::optional<ShiftVector> hit;
    Generator g = Generator::e(mm, 1);
    for (auto& z : basis_in_box(m, box)) {
        if (act(m, g, GTVector::basis(z)).is_zero()) {
            hit = z;
            break;
        }
    }
    return hit;
}

// Basis vector inside the box that no basis vector maps onto with nonzero coefficient under E_{m1}.
// Preimages are searched among all tuples that lower one entry in each of rows 1..m-1.
inline std::optional<ShiftVector> coverage_scan(const GTModule& m, int mm, int box) {
    Generator g = Generator::e(mm, 1);
    for (auto& y : basis_in_box(m, box)) {
        bool covered = false;
        std::vector<int> idx(mm, 1);
        while (!covered) {
            ShiftVector pre = y;
            for (int s = 1; s < mm; ++s)
                pre.at(s, idx[s]) += 1;
            if (m.contains(pre) && !act(m, g, GTVector::basis(pre)).coeff(y).is_zero())
                covered = true;
            int s = mm - 1;
            while (s >= 1 && idx[s] == s) {
                idx[s] = 1;
                --s;
            }
            if (s < 1)
                break;
            ++idx[s];
        }
        if (!covered)
            return y;
    }
    return std::nullopt;
}

} // namespace gtrel
