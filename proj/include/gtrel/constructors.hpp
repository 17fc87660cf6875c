#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "gtrel/classify.hpp"
#include "gtrel/relations.hpp"

namespace gtrel {

struct TableauData {
    Tableau tableau;
    RelationSet relations;
};

// Checks realization, noncriticality, structure and the diamond condition;
// throws `code` with the first failure.
inline void validate_relation_data(const RelationSet& c, const Tableau& t, ErrorCode code) {
    if (!satisfies_all(t, c))
        throw Error(code, "tableau does not satisfy its relation set");
    if (!is_realization(c, t))
        throw Error(code, "integrality pattern of the tableau does not match the components");
    if (!is_noncritical_for(c, t))
        throw Error(code, "equal entries inside one component");
    auto rep = check_structure(c);
    if (!rep.blocking_ok())
        throw Error(code, "relation graph violates the ordering or crossing conditions");
    auto bad = diamond_failures(c);
    if (!bad.empty())
        throw Error(code, "adjoining pair " + bad.front().first.str() + "," + bad.front().second.str() +
                              " has no diamond");
}

// Solves v_a - v_b = d over a spanning tree of {1..n+1} with prescribed total.
inline std::vector<Rational> solve_top_row(int n, const std::vector<std::tuple<int, int, Rational>>& eqs,
                                           const Rational& total) {
    std::vector<std::optional<Rational>> v(n + 2);
    v[1] = Rational(0);
    for (bool progress = true; progress;) {
        progress = false;
        for (auto& [a, b, d] : eqs) {
            if (v[a] && !v[b]) { v[b] = *v[a] - d; progress = true; }
            else if (v[b] && !v[a]) { v[a] = *v[b] + d; progress = true; }
        }
    }
    Rational sum;
    for (int s = 1; s <= n + 1; ++s) {
        if (!v[s])
            throw Error(ErrorCode::ValidationError, "top-row equations do not determine v_" + std::to_string(s));
        sum += *v[s];
    }
    Rational shift = (total - sum) / Rational(n + 1);
    std::vector<Rational> out(n + 2);
    for (int s = 1; s <= n + 1; ++s)
        out[s] = *v[s] + shift;
    return out;
}

inline std::vector<Rational> chain_top_row(const Weight& lambda, Normalization norm) {
    const int n = static_cast<int>(lambda.size());
    std::vector<std::tuple<int, int, Rational>> eqs;
    for (int s = 1; s <= n; ++s)
        eqs.emplace_back(s, s + 1, pairing(lambda, s, s));
    return solve_top_row(n, eqs, top_row_sum(n, norm));
}

// Column-constant tableau with the maximal satisfied relation set.
inline TableauData hw_tableau_case_a(const Weight& lambda, Normalization norm = Normalization::BinomialSum) {
    const int n = static_cast<int>(lambda.size());
    if (n < 1)
        throw Error(ErrorCode::ValidationError, "empty weight");
    auto v = chain_top_row(lambda, norm);
    Tableau t(n);
    for (int r = 1; r <= n + 1; ++r)
        for (int s = 1; s <= r; ++s)
            t.at(r, s) = v[s];
    RelationSet c = satisfied_relations(t);
    validate_relation_data(c, t, ErrorCode::NotCaseA);
    return {t, c};
}

inline TableauData hw_tableau_case_b(const Weight& lambda, int i, int j,
                                     Normalization norm = Normalization::BinomialSum) {
    const int n = static_cast<int>(lambda.size());
    if (!(1 <= i && i <= j && j < n))
        throw Error(ErrorCode::NotCaseB, "need 1 <= i <= j < n");
    auto v = chain_top_row(lambda, norm);
    Tableau t(n);
    for (int r = 1; r <= n + 1; ++r)
        for (int s = 1; s <= r; ++s) {
            if (s < i || (i <= r && r <= j))
                t.at(r, s) = v[s];
            else if (s < r + i - j)
                t.at(r, s) = v[s + j - i + 1];
            else
                t.at(r, s) = v[s - r + j];
        }
    RelationSet c = satisfied_relations(t);
    validate_relation_data(c, t, ErrorCode::NotCaseB);
    return {t, c};
}

inline RelationSet q_relations(int n) {
    RelationSet q(n);
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= i; ++j) {
            q.insert({i + 1, j}, {i, j});
            q.insert({i, j}, {i + 1, j + 1});
        }
    return q;
}

// Column 1 carries u, columns j >= 2 carry v_{j-1}; m selects the column-1 chain variant
// (m = 1 chains the whole first column).
inline TableauData family_tableau(const std::vector<Rational>& u, const std::vector<Rational>& v,
                                  std::optional<int> m = std::nullopt) {
    const int n = static_cast<int>(v.size());
    if (n < 1 || static_cast<int>(u.size()) != n + 1)
        throw Error(ErrorCode::PreconditionViolated, "need |u| = |v| + 1 >= 2");
    for (int i = 1; i <= n; ++i)
        if ((u[i - 1] - v[0]).is_integer())
            throw Error(ErrorCode::PreconditionViolated, "u_" + std::to_string(i) + " - v_1 is an integer");
    for (int j = 1; j < n; ++j)
        if (!in_z_gt0(v[j - 1] - v[j]))
            throw Error(ErrorCode::PreconditionViolated,
                        "v_" + std::to_string(j) + " - v_" + std::to_string(j + 1) + " is not a positive integer");
    Tableau t(n);
    for (int r = 1; r <= n + 1; ++r) {
        t.at(r, 1) = u[r - 1];
        for (int s = 2; s <= r; ++s)
            t.at(r, s) = v[s - 2];
    }
    RelationSet c = q_relations(n);
    if (m) {
        if (*m < 1 || *m > n)
            throw Error(ErrorCode::PreconditionViolated, "m must lie in [1, n]");
        for (int i = *m + 1; i <= n + 1; ++i)
            if (u[i - 1] != u[*m - 1])
                throw Error(ErrorCode::PreconditionViolated, "u_" + std::to_string(i) + " differs from u_m");
        for (int i = 1; i < *m; ++i)
            if ((u[i - 1] - u[i]).is_integer())
                throw Error(ErrorCode::PreconditionViolated,
                            "u_" + std::to_string(i) + " - u_" + std::to_string(i + 1) + " is an integer");
        for (int i = *m; i <= n; ++i)
            c.insert({i + 1, 1}, {i, 1});
    }
    validate_relation_data(c, t, ErrorCode::PreconditionViolated);
    return {t, c};
}

// Flag permutation (3, ..., i+1, 1, 2, i+2, ..., n+1) under which the lem-key seed is highest weight.
inline std::vector<int> lem_key_flag(int n, int i) {
    std::vector<int> sigma;
    for (int a = 3; a <= i + 1; ++a)
        sigma.push_back(a);
    sigma.push_back(1);
    sigma.push_back(2);
    for (int a = i + 2; a <= n + 1; ++a)
        sigma.push_back(a);
    return sigma;
}

inline TableauData lem_key_tableau(const Weight& lambda, int i, Normalization norm = Normalization::BinomialSum) {
    const int n = static_cast<int>(lambda.size());
    if (i < 2 || i > n)
        throw Error(ErrorCode::PreconditionViolated, "need 2 <= i <= n");
    auto bc = bounded_case(lambda);
    if (!bc || (bc->tag != 'a' && bc->tag != 'e'))
        throw Error(ErrorCode::PreconditionViolated, "weight is in neither bounded family a nor e");
    auto p = [&](int k) { return pairing(lambda, k, k); };
    // Entries of the v_1 and v_2 strands differ by p(i); they lie in different components, and the
    // v_1 strand is joined to v_3 through p(i-1).
    if (p(i).is_integer() || !p(i - 1).is_integer())
        throw Error(ErrorCode::PreconditionViolated,
                    "tableau is a realization only when p(" + std::to_string(i) + ") is non-integral and p(" +
                        std::to_string(i - 1) + ") is integral");
    std::vector<std::tuple<int, int, Rational>> eqs;
    eqs.emplace_back(1, 2, p(i));
    eqs.emplace_back(1, i + 1, -p(i - 1));
    if (i + 2 <= n + 1)
        eqs.emplace_back(2, i + 2, p(i + 1));
    for (int k = 1; k <= i - 2; ++k)
        eqs.emplace_back(k + 2, k + 3, p(k));
    for (int k = i + 2; k <= n; ++k)
        eqs.emplace_back(k, k + 1, p(k));
    auto v = solve_top_row(n, eqs, top_row_sum(n, norm));
    Tableau t(n);
    for (int r = 1; r <= n + 1; ++r)
        for (int s = 1; s <= r; ++s) {
            Rational& e = t.at(r, s);
            if (r == 1 && s == 1)
                e = v[1] + Rational(i - 1);
            else if (1 < r && r <= i && s == r - 1)
                e = v[1] + Rational(i + 1 - r);
            else if (r > i && s == i)
                e = v[1];
            else if (1 < r && r <= i && s == r)
                e = v[2] + Rational(i + 1 - r);
            else if (r > i && s == r)
                e = v[2];
            else if (s == 1)
                e = v[3];
            else if (s < i)
                e = v[s + 2];
            else
                e = v[s + 1];
        }
    RelationSet c(n);
    c.insert({2, 1}, {1, 1});
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s < r; ++s) {
            c.insert({r + 1, s}, {r, s});
            c.insert({r, s}, {r + 1, s + 1});
        }
    for (int r = i + 1; r <= n; ++r)
        c.insert({r + 1, r + 1}, {r, r});
    for (int r = 2; r <= i; ++r)
        c.insert({r, r}, {r + 1, r + 1});
    validate_relation_data(c, t, ErrorCode::PreconditionViolated);
    return {t, c};
}

} // namespace gtrel
