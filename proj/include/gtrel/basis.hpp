#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <vector>

#include "gtrel/relations.hpp"

namespace gtrel {

// Basis membership for B_C(T(seed)) reduced to integer inequalities on the shift.
class BasisTest {
public:
    BasisTest() = default;
    BasisTest(const RelationSet& c, const Tableau& seed) : n_(c.n()) {
        if (seed.n() != c.n())
            throw Error(ErrorCode::ValidationError, "tableau and relation set disagree on n");
        for (auto& r : c) {
            if (!satisfies(seed, r))
                throw Error(ErrorCode::SeedViolatesRelations, "seed violates " + r.str());
            Constraint k;
            k.a = r.from.row <= n_ ? flat_index(r.from) : -1;
            k.b = r.to.row <= n_ ? flat_index(r.to) : -1;
            k.d = (seed.at(r.from) - seed.at(r.to)).to_long();
            k.strict = r.kind == RelationKind::RMinus ? 1 : 0;
            cons_.push_back(k);
        }
    }

    int n() const { return n_; }

    bool contains(const ShiftVector& z) const {
        for (auto& k : cons_)
            if (k.d + value(z, k.a) - value(z, k.b) < k.strict)
                return false;
        return true;
    }

    // w_a - w_b = d + z_a - z_b >= strict, with index -1 meaning the fixed top row.
    struct Constraint {
        int a = -1;
        int b = -1;
        long d = 0;
        int strict = 0;
    };
    const std::vector<Constraint>& constraints() const { return cons_; }

private:
    static long value(const ShiftVector& z, int idx) { return idx < 0 ? 0 : z.flat(idx); }

    int n_ = 0;
    std::vector<Constraint> cons_;
};

inline bool in_basis(const RelationSet& c, const Tableau& seed, const ShiftVector& z) {
    return BasisTest(c, seed).contains(z);
}

// Calls f on every basis shift with all |z_ki| <= box, optionally with prescribed row sums.
inline void for_each_in_box(const BasisTest& basis, int box, const std::optional<std::vector<long>>& row_sums,
                            const std::function<void(const ShiftVector&)>& f) {
    const int n = basis.n();
    // Assignment order: row n down to row 1; constraints fire once both ends are set.
    std::vector<int> order;
    for (int k = n; k >= 1; --k)
        for (int i = 1; i <= k; ++i)
            order.push_back(flat_index(k, i));
    std::vector<int> step_of(triangle_size(n), 0);
    for (int s = 0; s < static_cast<int>(order.size()); ++s)
        step_of[order[s]] = s;
    std::vector<std::vector<BasisTest::Constraint>> ready(order.size());
    for (auto& k : basis.constraints()) {
        int s = std::max(k.a < 0 ? -1 : step_of[k.a], k.b < 0 ? -1 : step_of[k.b]);
        if (s >= 0)
            ready[s].push_back(k);
    }
    ShiftVector z(n);
    std::function<void(int, long)> rec = [&](int s, long partial) {
        if (s == static_cast<int>(order.size())) {
            f(z);
            return;
        }
        Position p = position_of(order[s]);
        bool last_in_row = p.col == p.row;
        long lo = -box, hi = box;
        if (row_sums) {
            long target = (*row_sums)[p.row - 1];
            long rest = p.row - p.col;  // entries still to assign in this row
            if (last_in_row) {
                lo = hi = target - partial;
                if (lo < -box || lo > box)
                    return;
            } else {
                lo = std::max(lo, target - partial - rest * box);
                hi = std::min(hi, target - partial + rest * box);
            }
        }
        for (long v = lo; v <= hi; ++v) {
            z.flat(order[s]) = static_cast<int>(v);
            bool ok = true;
            for (auto& k : ready[s]) {
                long za = k.a < 0 ? 0 : z.flat(k.a), zb = k.b < 0 ? 0 : z.flat(k.b);
                if (k.d + za - zb < k.strict) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                rec(s + 1, last_in_row ? 0 : partial + v);
        }
        z.flat(order[s]) = 0;
    };
    rec(0, 0);
}

// Row sums of a shift that moves weight_of(seed) to w; nullopt if w is not reachable.
inline std::optional<std::vector<long>> row_sums_for_weight(const Tableau& seed, const Weight& w) {
    const int n = seed.n();
    Weight base = weight_of(seed);
    std::vector<Rational> delta(n);
    for (int k = 0; k < n; ++k) {
        delta[k] = w[k] - base[k];
        if (!delta[k].is_integer())
            return std::nullopt;
    }
    // Solve the tridiagonal Cartan system 2s_k - s_{k-1} - s_{k+1} = delta_k.
    std::vector<Rational> c(n), d(n), s(n);
    for (int k = 0; k < n; ++k) {
        Rational diag = 2, off = -1;
        if (k == 0) {
            c[k] = off / diag;
            d[k] = delta[k] / diag;
        } else {
            Rational m = diag - off * c[k - 1];
            c[k] = off / m;
            d[k] = (delta[k] - off * d[k - 1]) / m;
        }
    }
    for (int k = n - 1; k >= 0; --k)
        s[k] = d[k] - (k + 1 < n ? c[k] * s[k + 1] : Rational(0));
    std::vector<long> out(n);
    for (int k = 0; k < n; ++k) {
        if (!s[k].is_integer())
            return std::nullopt;
        out[k] = s[k].to_long();
    }
    return out;
}

namespace detail {

constexpr long kUnbounded = LONG_MAX / 4;

// Interval propagation over the relation inequalities and fixed row sums.
// Returns per-entry [lo, hi]; infinite ends stay at +-kUnbounded.
inline std::optional<std::vector<std::pair<long, long>>> shift_bounds(const BasisTest& basis,
                                                                     const std::vector<long>& row_sums) {
    const int n = basis.n();
    const int m = triangle_size(n);
    std::vector<long> lo(m, -kUnbounded), hi(m, kUnbounded);
    auto get_lo = [&](int idx) { return idx < 0 ? 0L : lo[idx]; };
    auto get_hi = [&](int idx) { return idx < 0 ? 0L : hi[idx]; };
    auto finite = [](long v) { return v > -kUnbounded && v < kUnbounded; };
    for (int round = 0; round < 64 * (m + 2); ++round) {
        bool changed = false;
        for (auto& k : basis.constraints()) {
            // z_a - z_b >= strict - d
            long need = k.strict - k.d;
            if (k.b >= 0 && finite(get_hi(k.a))) {
                long cand = get_hi(k.a) - need;
                if (cand < hi[k.b]) { hi[k.b] = cand; changed = true; }
            }
            if (k.a >= 0 && finite(get_lo(k.b))) {
                long cand = get_lo(k.b) + need;
                if (cand > lo[k.a]) { lo[k.a] = cand; changed = true; }
            }
        }
        for (int r = 1; r <= n; ++r) {
            for (int i = 1; i <= r; ++i) {
                long sum_hi = 0, sum_lo = 0;
                bool hi_ok = true, lo_ok = true;
                for (int j = 1; j <= r; ++j) {
                    if (j == i)
                        continue;
                    int idx = flat_index(r, j);
                    if (finite(hi[idx])) sum_hi += hi[idx]; else hi_ok = false;
                    if (finite(lo[idx])) sum_lo += lo[idx]; else lo_ok = false;
                }
                int idx = flat_index(r, i);
                long s = row_sums[r - 1];
                if (hi_ok && s - sum_hi > lo[idx]) { lo[idx] = s - sum_hi; changed = true; }
                if (lo_ok && s - sum_lo < hi[idx]) { hi[idx] = s - sum_lo; changed = true; }
            }
        }
        for (int i = 0; i < m; ++i)
            if (lo[i] > hi[i])
                return std::nullopt;
        if (!changed)
            break;
    }
    std::vector<std::pair<long, long>> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = {lo[i], hi[i]};
    return out;
}

} // namespace detail

struct WeightSpace {
    std::vector<ShiftVector> shifts;
    bool complete = false;
};

inline WeightSpace enumerate_weight_space(const RelationSet& c, const Tableau& seed, const Weight& w, int box) {
    BasisTest basis(c, seed);
    WeightSpace out;
    auto sums = row_sums_for_weight(seed, w);
    if (!sums) {
        out.complete = true;
        return out;
    }
    for_each_in_box(basis, box, sums, [&](const ShiftVector& z) { out.shifts.push_back(z); });
    auto bounds = detail::shift_bounds(basis, *sums);
    if (!bounds) {
        out.complete = true;  // provably empty
    } else {
        out.complete = std::all_of(bounds->begin(), bounds->end(),
                                   [box](auto& b) { return b.first >= -box && b.second <= box; });
    }
    return out;
}

} // namespace gtrel
