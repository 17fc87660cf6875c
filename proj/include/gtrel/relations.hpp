#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gtrel/tableau.hpp"

namespace gtrel {

enum class RelationKind { RPlus, RMinus, RZero };

inline std::optional<RelationKind> relation_kind(int n, Position from, Position to) {
    auto valid = [n](Position p) { return p.row >= 1 && p.row <= n + 1 && p.col >= 1 && p.col <= p.row; };
    if (!valid(from) || !valid(to))
        return std::nullopt;
    if (from.row == to.row + 1 && from.row >= 2)
        return RelationKind::RPlus;
    if (to.row == from.row + 1 && from.row <= n)
        return RelationKind::RMinus;
    if (from.row == n + 1 && to.row == n + 1 && from.col != to.col)
        return RelationKind::RZero;
    return std::nullopt;
}

struct Relation {
    Position from;
    Position to;
    RelationKind kind = RelationKind::RPlus;

    friend bool operator==(const Relation& a, const Relation& b) { return a.from == b.from && a.to == b.to; }
    friend auto operator<=>(const Relation& a, const Relation& b) {
        if (auto c = a.from <=> b.from; c != 0)
            return c;
        return a.to <=> b.to;
    }

    std::string str() const { return "(" + from.str() + ";" + to.str() + ")"; }
};

// True when the entries of t satisfy the inequality attached to r.
inline bool satisfies(const Tableau& t, const Relation& r) {
    Rational d = t.at(r.from) - t.at(r.to);
    return r.kind == RelationKind::RMinus ? in_z_gt0(d) : in_class(d, DiffClass::ZGeq0);
}

class RelationSet {
public:
    RelationSet() = default;
    explicit RelationSet(int n) : n_(n) {
        if (n < 1)
            throw Error(ErrorCode::ValidationError, "n must be at least 1");
    }
    RelationSet(int n, std::initializer_list<std::pair<Position, Position>> arrows) : RelationSet(n) {
        for (auto& [a, b] : arrows)
            insert(a, b);
    }

    int n() const { return n_; }
    std::size_t size() const { return rels_.size(); }
    bool empty() const { return rels_.empty(); }
    const std::set<Relation>& relations() const { return rels_; }
    auto begin() const { return rels_.begin(); }
    auto end() const { return rels_.end(); }

    bool insert(Position from, Position to) {
        auto kind = relation_kind(n_, from, to);
        if (!kind)
            throw Error(ErrorCode::ValidationError, "not a relation for n=" + std::to_string(n_) + ": (" +
                                                        from.str() + ";" + to.str() + ")");
        return rels_.insert({from, to, *kind}).second;
    }
    bool insert(const Relation& r) { return insert(r.from, r.to); }

    bool erase(Position from, Position to) { return rels_.erase({from, to, RelationKind::RPlus}) > 0; }

    bool contains(Position from, Position to) const {
        return rels_.count({from, to, RelationKind::RPlus}) > 0;
    }
    bool contains(const Relation& r) const { return rels_.count(r) > 0; }

    bool includes(const RelationSet& other) const {
        return std::includes(rels_.begin(), rels_.end(), other.rels_.begin(), other.rels_.end());
    }

    friend bool operator==(const RelationSet& a, const RelationSet& b) { return a.n_ == b.n_ && a.rels_ == b.rels_; }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (auto& r : rels_) {
            s += (first ? "" : ", ") + r.str();
            first = false;
        }
        return s + "}";
    }

private:
    int n_ = 1;
    std::set<Relation> rels_;
};

namespace detail {

using Matrix = std::vector<std::vector<char>>;

inline int vertex_count(int n) { return triangle_size(n + 1); }

// reach[a][b] = there is a directed path of length >= 1 from a to b.
inline Matrix reachability(const RelationSet& c, const Relation* skip = nullptr) {
    const int v = vertex_count(c.n());
    Matrix reach(v, std::vector<char>(v, 0));
    for (auto& r : c)
        if (!skip || !(r == *skip))
            reach[flat_index(r.from)][flat_index(r.to)] = 1;
    for (int k = 0; k < v; ++k)
        for (int i = 0; i < v; ++i)
            if (reach[i][k])
                for (int j = 0; j < v; ++j)
                    if (reach[k][j])
                        reach[i][j] = 1;
    return reach;
}

inline std::vector<int> component_ids(const RelationSet& c) {
    const int v = vertex_count(c.n());
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& r : c)
        parent[find(flat_index(r.from))] = find(flat_index(r.to));
    std::vector<int> id(v);
    for (int i = 0; i < v; ++i)
        id[i] = find(i);
    return id;
}

} // namespace detail

inline std::vector<std::vector<Position>> undirected_components(const RelationSet& c) {
    auto id = detail::component_ids(c);
    std::map<int, std::vector<Position>> groups;
    for (int i = 0; i < static_cast<int>(id.size()); ++i)
        groups[id[i]].push_back(position_of(i));
    std::vector<std::vector<Position>> out;
    for (auto& [_, g] : groups)
        out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<Position, Position>> adjoining_pairs(const RelationSet& c) {
    auto reach = detail::reachability(c);
    std::vector<std::pair<Position, Position>> out;
    for (int k = 1; k <= c.n() + 1; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                int a = flat_index(k, i), b = flat_index(k, j);
                if (!reach[a][b])
                    continue;
                bool through = false;
                for (int t = i + 1; t < j && !through; ++t) {
                    int m = flat_index(k, t);
                    through = reach[a][m] && reach[m][b];
                }
                if (!through)
                    out.push_back({{k, i}, {k, j}});
            }
    return out;
}

// Drops transitively redundant arrows, scanning in the set's order.
inline RelationSet reduce(const RelationSet& c) {
    RelationSet out = c;
    for (auto& r : c.relations()) {
        auto reach = detail::reachability(out, &r);
        if (reach[flat_index(r.from)][flat_index(r.to)])
            out.erase(r.from, r.to);
    }
    return out;
}

struct StructureReport {
    bool reduced = true;
    bool forward_ordered = true;
    bool cross_free = true;

    bool blocking_ok() const { return forward_ordered && cross_free; }
};

inline StructureReport check_structure(const RelationSet& c) {
    StructureReport rep;
    for (auto& r : c) {
        auto reach = detail::reachability(c, &r);
        if (reach[flat_index(r.from)][flat_index(r.to)]) {
            rep.reduced = false;
            break;
        }
    }
    // Same-row paths must run left to right; row n+1 is fixed and exempt.
    auto reach = detail::reachability(c);
    for (int k = 1; k <= c.n() && rep.forward_ordered; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= i; ++j)
                if (reach[flat_index(k, i)][flat_index(k, j)])
                    rep.forward_ordered = false;
    // Crossing arrows between adjacent rows, judged on the reduced graph. Arrows into or out of
    // the fixed row n+1 only bound row n and are exempt, as in the ordering check.
    RelationSet red = reduce(c);
    std::vector<std::pair<Position, Position>> links;  // (upper-row end, lower-row end)
    for (auto& r : red) {
        if (r.kind == RelationKind::RZero || r.from.row == c.n() + 1 || r.to.row == c.n() + 1)
            continue;
        Position lo = r.from.row < r.to.row ? r.from : r.to;
        Position hi = r.from.row < r.to.row ? r.to : r.from;
        links.push_back({lo, hi});
    }
    for (auto& [a1, b1] : links)
        for (auto& [a2, b2] : links)
            if (a1.row == a2.row && a1.col < a2.col && b2.col < b1.col)
                rep.cross_free = false;
    return rep;
}

inline bool has_diamond(const RelationSet& c, Position a, Position b) {
    const int k = a.row;
    const int n = c.n();
    if (k + 1 <= n + 1 && k >= 2) {
        for (int p = 1; p <= k + 1; ++p) {
            if (!c.contains(a, {k + 1, p}) || !c.contains({k + 1, p}, b))
                continue;
            for (int q = 1; q <= k - 1; ++q)
                if (c.contains(a, {k - 1, q}) && c.contains({k - 1, q}, b))
                    return true;
        }
    }
    for (int s = 1; s <= k + 1; ++s) {
        if (!c.contains(a, {k + 1, s}))
            continue;
        for (int t = s + 1; t <= k + 1; ++t)
            if (c.contains({k + 1, t}, b))
                return true;
    }
    return false;
}

// Pairs in rows 1..n that admit neither diamond pattern.
inline std::vector<std::pair<Position, Position>> diamond_failures(const RelationSet& c) {
    std::vector<std::pair<Position, Position>> bad;
    for (auto& [a, b] : adjoining_pairs(c))
        if (a.row <= c.n() && !has_diamond(c, a, b))
            bad.push_back({a, b});
    return bad;
}

inline bool is_admissible(const RelationSet& c) {
    auto rep = check_structure(c);
    if (!rep.blocking_ok())
        throw Error(ErrorCode::StructureViolation,
                    std::string(rep.forward_ordered ? "" : "same-row path runs right to left; ") +
                        (rep.cross_free ? "" : "crossing arrows between adjacent rows"));
    return diamond_failures(c).empty();
}

inline RelationSet satisfied_relations(const Tableau& t) {
    const int n = t.n();
    RelationSet out(n);
    auto pos = all_positions(n);
    for (auto& a : pos)
        for (auto& b : pos)
            if (auto kind = relation_kind(n, a, b); kind && satisfies(t, {a, b, *kind}))
                out.insert(a, b);
    return out;
}

inline bool satisfies_all(const Tableau& t, const RelationSet& c) {
    return std::all_of(c.begin(), c.end(), [&](const Relation& r) { return satisfies(t, r); });
}

inline bool is_realization(const RelationSet& c, const Tableau& t) {
    if (t.n() != c.n() || !satisfies_all(t, c))
        return false;
    auto id = detail::component_ids(c);
    for (int k = 1; k <= c.n(); ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                bool integral = (t.at(k, i) - t.at(k, j)).is_integer();
                bool same = id[flat_index(k, i)] == id[flat_index(k, j)];
                if (integral != same)
                    return false;
            }
    return true;
}

inline bool is_noncritical_for(const RelationSet& c, const Tableau& t) {
    if (!is_realization(c, t))
        throw Error(ErrorCode::NotARealization, "tableau is not a realization of " + c.str());
    auto id = detail::component_ids(c);
    for (int k = 1; k <= c.n(); ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                if (id[flat_index(k, i)] == id[flat_index(k, j)] && t.at(k, i) == t.at(k, j))
                    return false;
    return true;
}

// Membership of a relation in the transitive closure of c.
inline bool implied_by(const RelationSet& c, const Relation& r) {
    auto reach = detail::reachability(c);
    return reach[flat_index(r.from)][flat_index(r.to)];
}

} // namespace gtrel
