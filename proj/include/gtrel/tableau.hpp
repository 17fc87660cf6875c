#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gtrel/rational.hpp"

namespace gtrel {

// Tableau position (row, col), 1 <= col <= row <= n+1.
struct Position {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Position&, const Position&) = default;

    std::string str() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }
};

inline int flat_index(int row, int col) { return row * (row - 1) / 2 + col - 1; }
inline int flat_index(Position p) { return flat_index(p.row, p.col); }
inline int triangle_size(int rows) { return rows * (rows + 1) / 2; }

inline Position position_of(int idx) {
    int row = 1;
    while (triangle_size(row) <= idx)
        ++row;
    return {row, idx - triangle_size(row - 1) + 1};
}

inline std::vector<Position> all_positions(int n) {
    std::vector<Position> out;
    for (int r = 1; r <= n + 1; ++r)
        for (int c = 1; c <= r; ++c)
            out.push_back({r, c});
    return out;
}

class Tableau {
public:
    Tableau() = default;
    explicit Tableau(int n) : n_(n), e_(triangle_size(n + 1)) {
        if (n < 1)
            throw Error(ErrorCode::ValidationError, "tableau height must be at least 2");
    }

    static Tableau from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.size() < 2)
            throw Error(ErrorCode::ValidationError, "tableau needs at least two rows");
        Tableau t(static_cast<int>(rows.size()) - 1);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].size() != k + 1)
                throw Error(ErrorCode::ValidationError,
                            "row " + std::to_string(k + 1) + " must have " + std::to_string(k + 1) + " entries");
            for (std::size_t i = 0; i < rows[k].size(); ++i)
                t.at(static_cast<int>(k) + 1, static_cast<int>(i) + 1) = rows[k][i];
        }
        return t;
    }

    int n() const { return n_; }

    const Rational& at(int row, int col) const { return e_[flat_index(row, col)]; }
    Rational& at(int row, int col) { return e_[flat_index(row, col)]; }
    const Rational& at(Position p) const { return at(p.row, p.col); }
    Rational& at(Position p) { return at(p.row, p.col); }
    const Rational& flat(int idx) const { return e_[idx]; }

    std::vector<Rational> row(int k) const {
        return std::vector<Rational>(e_.begin() + triangle_size(k - 1), e_.begin() + triangle_size(k));
    }

    Rational row_sum(int k) const {
        Rational s;
        if (k < 1 || k > n_ + 1)
            return s;
        for (int i = 1; i <= k; ++i)
            s += at(k, i);
        return s;
    }

    std::vector<std::vector<Rational>> rows() const {
        std::vector<std::vector<Rational>> out;
        for (int k = 1; k <= n_ + 1; ++k)
            out.push_back(row(k));
        return out;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Integer shift on rows 1..n; the top row is never shifted.
class ShiftVector {
public:
    ShiftVector() = default;
    explicit ShiftVector(int n) : n_(n), z_(triangle_size(n), 0) {}

    static ShiftVector delta(int n, int row, int col) {
        ShiftVector z(n);
        z.at(row, col) = 1;
        return z;
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(z_.size()); }

    int at(int row, int col) const { return row > n_ ? 0 : z_[flat_index(row, col)]; }
    int& at(int row, int col) {
        if (row > n_)
            throw Error(ErrorCode::ValidationError, "the top row cannot be shifted");
        return z_[flat_index(row, col)];
    }
    int flat(int idx) const { return idx < size() ? z_[idx] : 0; }
    int& flat(int idx) { return z_[idx]; }

    int row_sum(int k) const {
        int s = 0;
        for (int i = 1; k <= n_ && i <= k; ++i)
            s += at(k, i);
        return s;
    }

    int max_abs() const {
        int m = 0;
        for (int v : z_)
            m = std::max(m, v < 0 ? -v : v);
        return m;
    }

    ShiftVector& operator+=(const ShiftVector& o) {
        for (std::size_t i = 0; i < z_.size(); ++i)
            z_[i] += o.z_[i];
        return *this;
    }
    ShiftVector& operator-=(const ShiftVector& o) {
        for (std::size_t i = 0; i < z_.size(); ++i)
            z_[i] -= o.z_[i];
        return *this;
    }
    friend ShiftVector operator+(ShiftVector a, const ShiftVector& b) { return a += b; }
    friend ShiftVector operator-(ShiftVector a, const ShiftVector& b) { return a -= b; }
    friend ShiftVector operator-(ShiftVector a) {
        for (auto& v : a.z_)
            v = -v;
        return a;
    }

    const std::vector<int>& data() const { return z_; }

    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
    friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;

    std::string str() const {
        std::string s = "[";
        for (int k = 1; k <= n_; ++k) {
            s += (k > 1 ? ",[" : "[");
            for (int i = 1; i <= k; ++i)
                s += (i > 1 ? "," : "") + std::to_string(at(k, i));
            s += "]";
        }
        return s + "]";
    }

private:
    int n_ = 0;
    std::vector<int> z_;
};

inline Tableau apply_shift(const Tableau& t, const ShiftVector& z) {
    Tableau out = t;
    for (int k = 1; k <= t.n(); ++k)
        for (int i = 1; i <= k; ++i)
            if (int d = z.at(k, i))
                out.at(k, i) += Rational(d);
    return out;
}

// H-eigenvalue coordinates: coords[k-1] is the eigenvalue of H_k.
using Weight = std::vector<Rational>;

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + w[i].str();
    return s + ")";
}

inline Weight weight_of(const Tableau& t) {
    const int n = t.n();
    Weight w(n);
    for (int k = 1; k <= n; ++k)
        w[k - 1] = Rational(2) * t.row_sum(k) - t.row_sum(k - 1) - t.row_sum(k + 1) - Rational(1);
    return w;
}

// Eigenvalue of E_aa up to a constant common to all a; differences give H-values.
inline Rational diagonal_value(const Tableau& t, int a) {
    return t.row_sum(a) - t.row_sum(a - 1) + Rational(a - 1);
}

// Weight increment of a shift, determined by its row sums.
inline std::vector<long> weight_increment(const ShiftVector& z) {
    const int n = z.n();
    std::vector<long> d(n);
    for (int k = 1; k <= n; ++k)
        d[k - 1] = 2L * z.row_sum(k) - (k > 1 ? z.row_sum(k - 1) : 0) - (k < n ? z.row_sum(k + 1) : 0);
    return d;
}

// <lambda + rho, alpha_{r,s}^vee> for the positive root alpha_r + ... + alpha_s.
inline Rational pairing(const Weight& lambda, int r, int s) {
    Rational p;
    for (int k = r; k <= s; ++k)
        p += lambda[k - 1] + Rational(1);
    return p;
}

enum class Normalization { BinomialSum, RankSum };

inline const char* normalization_name(Normalization z) {
    return z == Normalization::BinomialSum ? "binomial" : "rank";
}

// Prescribed sum of the top row.
inline Rational top_row_sum(int n, Normalization norm) {
    if (norm == Normalization::BinomialSum)
        return Rational(-(n + 1) * n / 2);
    return Rational(-(n + 1));
}

} // namespace gtrel
