// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "gtrel/gtrel.hpp"

using namespace gtrel;

namespace {

Rational R(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure messages of a criterion.
struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 8)
            failures.push_back(what);
        else if (!ok)
            failures.push_back("");
    }
};

GTModule hw_family(int n) {
    std::vector<Rational> u(n + 1, R(1, 3)), v;
    for (int j = n - 1; j >= 0; --j)
        v.push_back(R(j));
    return GTModule::create(family_tableau(u, v, 1));
}

GTModule q_family() {
    return GTModule::create(family_tableau({R(1, 3), R(1, 2), R(1, 7), R(1, 5)}, {R(3), R(1), R(0)}));
}

GTModule cm_family() {
    return GTModule::create(family_tableau({R(1, 3), R(1, 2), R(1, 7), R(1, 7)}, {R(3), R(1), R(0)}, 3));
}

GTModule lambda1() { return hw_module({R(-3, 2), R(0)}); }

// 1. Axiom suite over the constructor catalog.
Outcome axiom_suite() {
    Outcome out;
    std::vector<std::pair<std::string, std::function<GTModule()>>> catalog = {
        {"hw a sl2 (1/2)", [] { return hw_module({R(1, 2)}); }},
        {"hw a sl3 (-3/2,0)", [] { return lambda1(); }},
        {"hw a sl4 (1/3,-5/2,2)", [] { return hw_module({R(1, 3), R(-5, 2), R(2)}); }},
        {"hw b sl3 (-2,0)", [] { return hw_module({R(-2), R(0)}); }},
        {"hw b sl4 (-1/2,-4,1)", [] { return hw_module({R(-1, 2), R(-4), R(1)}); }},
        {"verma sl3 (-2/3,-3)", [] { return hw_module({R(-2, 3), R(-3)}); }},
        {"verma sl4 (1/5,1/7,-1/3)", [] { return hw_module({R(1, 5), R(1, 7), R(-1, 3)}); }},
        {"Q family sl4", q_family},
        {"C^3 family sl4", cm_family},
        {"lem-key sl3 i=2", [] { return GTModule::create(lem_key_tableau({R(1), R(-1, 2)}, 2), lem_key_flag(2, 2)); }},
        {"lem-key sl4 i=3",
         [] { return GTModule::create(lem_key_tableau({R(1), R(2), R(-1, 2)}, 3), lem_key_flag(3, 3)); }},
        {"localized E21 sl3", [] { return localize_e21(lambda1()); }},
        {"localized E31 sl4 family", [] { return localize_family(hw_family(3), {{3}, std::nullopt}); }},
        {"twisted sl3 x=1/3", [] { return twist_e21(lambda1(), R(1, 3)); }},
        {"twisted sl4 x=-1/6", [] { return twist_e21(hw_module({R(1, 3), R(-5, 2), R(2)}), R(-1, 6)); }},
        {"quotient top sl3", [] { return quotient_top(localize_e21(lambda1()), lambda1()); }},
        {"family quotient sl4 m=4",
         [] { return family_quotient(localize_family(hw_family(3), {{4}, std::nullopt}), 4); }},
        {"flag-permuted sl4",
         [] { return permute_flag(hw_module({R(1, 3), R(-5, 2), R(2)}), root_flag(3, 2, 3)); }},
        {"flag-permuted twist sl3", [] { return permute_flag(twist_e21(lambda1(), R(5, 2)), root_flag(2, 2, 2)); }},
    };
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    double slowest = 0;
    std::size_t samples = 0;
    for (auto& [name, make] : catalog) {
        auto t0 = Clock::now();
        try {
            GTModule m = make();
            AxiomReport rep = verify_axioms(m, 3, 200, 11, jobs);
            double dt = seconds_since(t0);
            slowest = std::max(slowest, dt);
            samples += rep.samples;
            out.expect(rep.failures.empty(), name + ": " + std::to_string(rep.failures.size()) + " failures");
            out.expect(rep.samples >= 200, name + ": too few samples");
            out.expect(dt < 60, name + ": " + std::to_string(dt) + " s");
        } catch (const Error& e) {
            out.expect(false, name + ": " + e.what());
        }
    }
    std::ostringstream s;
    s << catalog.size() << " modules, " << samples << " samples, slowest " << slowest << " s";
    out.summary = s.str();
    return out;
}

// 2. Closed E_m1 formula against nested commutators.
Outcome em1_oracle() {
    Outcome out;
    std::vector<std::pair<std::string, GTModule>> mods = {
        {"hw a sl4", hw_module({R(1, 3), R(-5, 2), R(2)})},
        {"hw b sl4", hw_module({R(-1, 2), R(-4), R(1)})},
        {"Q family", q_family()},
        {"twisted sl4", twist_e21(hw_module({R(1, 3), R(-5, 2), R(2)}), R(1, 3))},
    };
    std::mt19937_64 rng(23);
    for (auto& [name, m] : mods) {
        auto pool = basis_in_box(m, 3);
        for (int it = 0; it < 100; ++it) {
            auto v = GTVector::basis(pool[rng() % pool.size()]);
            for (int mm : {3, 4})
                out.expect(act_em1(m, mm, v) == act_ladder(m, mm, 1, v), name + ": E_" + std::to_string(mm) + "1");
        }
    }
    out.summary = std::to_string(mods.size()) + " modules x 100 shifts x m in {3,4}";
    return out;
}

// 3. Injectivity and surjectivity predicates against kernel and coverage scans.
Outcome predicate_scans() {
    Outcome out;
    // E21 on general relation sets.
    std::vector<std::pair<std::string, GTModule>> e21 = {
        {"L(-3/2,0)", lambda1()},
        {"D L(-3/2,0)", localize_e21(lambda1())},
        {"top of D L", quotient_top(localize_e21(lambda1()), lambda1())},
        {"L(-2,0)", hw_module({R(-2), R(0)})},
        {"verma (-2/3,-3)", hw_module({R(-2, 3), R(-3)})},
    };
    std::size_t configs = 0;
    for (auto& [name, m] : e21) {
        ++configs;
        out.expect(e21_injective(m.relations()) == !kernel_scan(m, 2, 3).has_value(), name + ": injectivity");
        out.expect(e21_surjective(m.relations()) == !coverage_scan(m, 2, 3).has_value(), name + ": surjectivity");
    }
    // E_m1 on the column family.
    auto hw = hw_family(3);
    std::vector<std::pair<std::string, GTModule>> fam = {
        {"hw family", hw},
        {"localized at 2", localize_family(hw, {{2}, std::nullopt})},
        {"localized at 3", localize_family(hw, {{3}, std::nullopt})},
        {"localized at 2,3,4", localize_family(hw, {{2, 3, 4}, std::nullopt})},
        {"C^3", cm_family()},
        {"Q", q_family()},
        {"quotient m=3", family_quotient(localize_family(hw, {{3}, std::nullopt}), 3)},
    };
    for (auto& [name, m] : fam) {
        ++configs;
        for (int mm = 2; mm <= 4; ++mm) {
            std::string tag = name + " m=" + std::to_string(mm);
            out.expect(em1_injective(m, mm) == !kernel_scan(m, mm, 3).has_value(), tag + ": injectivity");
            out.expect(em1_surjective(m, mm) == !coverage_scan(m, mm, 3).has_value(), tag + ": surjectivity");
        }
    }
    out.summary = std::to_string(configs) + " configurations at box 3";
    return out;
}

// 4. Direct twisted formulas against the action on the shifted seed.
Outcome twisted_consistency() {
    Outcome out;
    std::vector<GTModule> mods = {lambda1(), hw_module({R(1, 3), R(-5, 2), R(2)}), hw_family(3)};
    std::mt19937_64 rng(41);
    std::size_t samples = 0;
    for (auto& m : mods) {
        auto loc = localize_e21(m);
        auto pool = basis_in_box(loc, 3);
        for (auto x : {R(1, 3), R(-1, 6), R(5, 2)}) {
            auto tw = twist_e21(m, x);
            for (int it = 0; it < 100; ++it, ++samples) {
                auto v = GTVector::basis(pool[rng() % pool.size()]);
                for (int k = 1; k <= m.n(); ++k)
                    for (auto g : {Generator::raise(k), Generator::lower(k), Generator::h(k)})
                        out.expect(twisted_action_direct(loc, x, g, v) == act(tw, g, v),
                                   g.str() + " x=" + x.str() + " n=" + std::to_string(m.n()));
            }
        }
    }
    out.summary = std::to_string(samples) + " samples, generators up to n=3";
    return out;
}

std::size_t max_multiplicity(const GTModule& m, int box) {
    std::size_t best = 0;
    for (auto& [w, c] : weight_multiplicities(m, box))
        best = std::max(best, c);
    return best;
}

// 5. sl3 minimal orbit at (3,2) and (5,2).
Outcome sl3_minimal_orbit() {
    Outcome out;
    Level l32 = Level::make(2, 3, 2);
    auto reps = MinOrbitReps(l32).all();
    out.expect(reps.size() == 1 && reps[0].realized(l32) == Weight{R(-3, 2), R(0)}, "(3,2) reps");
    if (!reps.empty()) {
        auto orbit = hw_orbit_list(l32, reps[0]);
        std::vector<Weight> expect = {{R(-3, 2), R(0)}, {R(-1, 2), R(-1, 2)}, {R(0), R(-3, 2)}};
        out.expect(orbit.size() == 3, "(3,2) orbit size");
        for (std::size_t i = 0; i < orbit.size() && i < 3; ++i) {
            out.expect(orbit[i].weight == expect[i], "(3,2) orbit weight " + weight_str(orbit[i].weight));
            auto m = hw_module(orbit[i].weight);
            out.expect(max_multiplicity(m, 4) <= 1, "(3,2) multiplicity " + weight_str(orbit[i].weight));
        }
        auto m = hw_module(orbit[0].weight);
        auto cas = casimir_alpha1(m, GTVector::basis(m.origin()));
        out.expect(cas == R(1, 4) * GTVector::basis(m.origin()), "Casimir on L(Lambda_1)");
    }
    Level l52 = Level::make(2, 5, 2);
    auto reps52 = MinOrbitReps(l52).all();
    out.expect(reps52.size() == 6, "(5,2) has " + std::to_string(reps52.size()) + " reps");
    std::size_t built = 0;
    for (auto& rep : reps52) {
        Rational apq = R(rep.a * l52.p, l52.q);
        Rational l1 = R(rep.lambda_bar[0]), l2 = R(rep.lambda_bar[1]);
        auto orbit = hw_orbit_list(l52, rep);
        std::vector<Weight> expect = {
            {l1 - apq, l2}, {apq - l1 - R(2), l1 + l2 - apq + R(1)}, {l2, -l1 - l2 + apq - R(3)}};
        out.expect(orbit.size() == 3, "(5,2) orbit size");
        for (std::size_t i = 0; i < orbit.size() && i < 3; ++i) {
            out.expect(orbit[i].weight == expect[i], "(5,2) orbit weight " + weight_str(orbit[i].weight));
            auto m = hw_module(orbit[i].weight);
            ++built;
            out.expect(max_multiplicity(m, 4) <= static_cast<std::size_t>(rep.lambda_bar[1] + 1),
                       "(5,2) multiplicity " + weight_str(orbit[i].weight));
        }
    }
    out.summary = std::to_string(3 + built) + " modules at box 4, Casimir 1/4";
    return out;
}

// 6. sl4 multiplicity bound at (3,5,2), lambda_bar = (0,0,1).
Outcome sl4_bound() {
    Outcome out;
    auto t0 = Clock::now();
    Level lvl = Level::make(3, 5, 2);
    MinOrbitWeight rep{{0, 0, 1}, 1};
    std::size_t worst = 0;
    for (auto& e : hw_orbit_list(lvl, rep)) {
        auto m = hw_module(e.weight);
        std::size_t mu = max_multiplicity(m, 3);
        worst = std::max(worst, mu);
        out.expect(mu <= 3, weight_str(e.weight) + ": multiplicity " + std::to_string(mu));
    }
    double dt = seconds_since(t0);
    out.expect(dt < 300, "runtime " + std::to_string(dt) + " s");
    out.summary = "4 orbit modules, max multiplicity " + std::to_string(worst) + ", " + std::to_string(dt) + " s";
    return out;
}

// 7. sl2-induced round trip.
Outcome sl2_round_trip() {
    Outcome out;
    Level lvl = Level::make(2, 3, 2);
    auto rep = MinOrbitReps(lvl).all().front();
    auto ind = build_sl2_induced_minimal(lvl, rep, {R(-3, 2), R(0)}, R(1, 3));
    out.expect(ind.gamma == R(1, 4), "gamma " + ind.gamma.str());
    out.expect(ind.mu == Weight{R(-5, 6), R(-1, 3)}, "mu " + weight_str(ind.mu));
    const GTModule& m = ind.module;
    out.expect(module_weight(m, m.origin()) == ind.mu, "seed weight");
    out.expect(casimir_alpha1(m, GTVector::basis(m.origin())).coeff(m.origin()) == ind.gamma, "seed Casimir");
    auto branches = resolve_sl2_induced({ind.gamma, ind.mu});
    out.expect(branches.size() == 2, "branch count");
    bool found = false;
    for (auto& b : branches)
        found = found || (b.lambda == Weight{R(-3, 2), R(0)} && b.x == R(1, 3));
    out.expect(found, "branch (-3/2,0), x=1/3");
    out.expect(e21_injective(m.relations()) && e21_surjective(m.relations()), "E21 predicates");
    out.expect(!kernel_scan(m, 2, 3), "E21 kernel in box 3");
    out.expect(!coverage_scan(m, 2, 3), "E21 cokernel in box 3");
    out.summary = "gamma " + ind.gamma.str() + ", mu " + weight_str(ind.mu) + ", " +
                  std::to_string(branches.size()) + " branches";
    return out;
}

// Random weight generators, each producing its intended case by construction. They draw the
// shifted pairings p_k = <lambda + rho, alpha_k^vee> and convert at the end.
struct WeightMaker {
    std::mt19937_64 rng{101};

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    int pick_n(int lo = 2) { return static_cast<int>(uniform(lo, 3)); }
    Rational any() { return R(uniform(-30, 30), uniform(1, 6)); }
    Rational nonintegral() {
        while (true)
            if (Rational r = any(); !r.is_integer())
                return r;
    }
    Rational pos_int() { return R(uniform(1, 4)); }
    Rational nonpos_int() { return R(-uniform(0, 4)); }
    // Integer plus a fixed fraction 1/den; sums of fewer than den such terms stay non-integral.
    Rational with_fraction(long den) { return R(uniform(-4, 4)) + R(1, den); }

    static Weight from_pairings(Weight p) {
        for (auto& c : p)
            c -= Rational(1);
        return p;
    }

    // Every partial sum p(r,s), s < n, is non-integral or a positive integer.
    Weight case_a() {
        int n = pick_n(1);
        Weight p(n);
        for (int k = 0; k + 1 < n; ++k)
            p[k] = uniform(0, 1) ? pos_int() : with_fraction(7);
        p[n - 1] = any();
        return from_pairings(p);
    }

    // Case b for a random (i, j): positive integers beyond j, p(i,n) a nonpositive integer,
    // different fixed fractions before i and strictly between i and j.
    std::pair<Weight, HWCase> case_b() {
        int n = pick_n();
        int i = static_cast<int>(uniform(1, n - 1)), j = static_cast<int>(uniform(i, n - 1));
        Weight p(n);
        for (int k = 1; k < i; ++k)
            p[k - 1] = with_fraction(7);
        for (int k = i + 1; k <= j; ++k)
            p[k - 1] = with_fraction(11);
        for (int k = j + 1; k <= n; ++k)
            p[k - 1] = pos_int();
        Rational rest(0);
        for (int k = i + 1; k <= n; ++k)
            rest += p[k - 1];
        p[i - 1] = nonpos_int() - rest;
        return {from_pairings(p), HWCase::b(i, j)};
    }

    std::pair<Weight, BoundedCase> bounded(char tag) {
        int n = tag == 'd' ? 3 : pick_n();
        Weight p(n);
        for (auto& c : p)
            c = pos_int();
        int i = 0;
        switch (tag) {
        case 'a':
            p[n - 1] = uniform(0, 1) ? nonintegral() : nonpos_int();
            break;
        case 'b':
            p[0] = nonintegral();
            break;
        case 'c': {
            // p(1,1) negative and p(1,n) nonpositive.
            Rational rest(0);
            for (int k = 2; k <= n; ++k)
                rest += p[k - 1];
            p[0] = -rest - R(uniform(0, 3));
            break;
        }
        case 'd':
            // p(2,2) negative, p(1,2) positive, p(2,3) nonpositive.
            i = 2;
            p[1] = nonpos_int() - p[2];
            p[0] = -p[1] + pos_int();
            break;
        case 'e': {
            i = static_cast<int>(uniform(1, n - 1));
            Rational f = nonintegral();
            p[i - 1] = f;
            p[i] = pos_int() - f;
            break;
        }
        }
        return {from_pairings(p), BoundedCase{tag, i}};
    }

    // Two separate obstructions, or one with the only candidate pair ruled out.
    Weight not_relation() {
        int n = pick_n();
        Weight p(n);
        if (n == 2) {
            p[0] = nonpos_int();
            p[1] = nonintegral();
        } else {
            p[0] = nonpos_int();
            p[1] = nonpos_int();
            p[2] = any();
        }
        return from_pairings(p);
    }
};

// Constructor success plus highest-weight detection for a weight the classifier accepts.
bool builds_with_highest_weight(const Weight& w, std::string& why) {
    try {
        GTModule m = hw_module(w);
        auto hw = is_highest_weight_vector(m, GTVector::basis(m.origin()));
        if (!hw || *hw != w) {
            why = "seed is not highest weight";
            return false;
        }
        if (!verify_axioms(m, 1, 6, 3).failures.empty()) {
            why = "axiom failure";
            return false;
        }
        return true;
    } catch (const Error& e) {
        why = e.what();
        return false;
    }
}

// 8. Classification round trips.
Outcome classification() {
    Outcome out;
    WeightMaker gen;
    const int per_case = 50;
    auto round_trip = [&](const Weight& w, const std::string& label) {
        std::string why;
        out.expect(builds_with_highest_weight(w, why), label + " " + weight_str(w) + ": " + why);
    };
    for (int t = 0; t < per_case; ++t) {
        Weight w = gen.case_a();
        out.expect(hw_relation_case(w) == HWCase::a(), "case a verdict " + weight_str(w));
        round_trip(w, "case a");
    }
    for (int t = 0; t < per_case; ++t) {
        auto [w, c] = gen.case_b();
        out.expect(hw_relation_case(w) == c, c.str() + " verdict " + weight_str(w) + " got " + hw_relation_case(w).str());
        round_trip(w, c.str());
    }
    for (char tag : {'a', 'b', 'c', 'd', 'e'}) {
        for (int t = 0; t < per_case; ++t) {
            auto [w, c] = gen.bounded(tag);
            auto got = bounded_case(w);
            out.expect(got && *got == c, "bounded " + c.str() + " verdict " + weight_str(w));
            out.expect(hw_relation_case(w).is_relation(), "bounded " + c.str() + " not relation " + weight_str(w));
            round_trip(w, "bounded " + c.str());
            if (tag == 'a' || tag == 'e') {
                // Under the other Borel the lem-key tableau realizes L for exactly one index.
                int n = static_cast<int>(w.size());
                int key = tag == 'e' ? c.i : n;
                bool realizable = !pairing(w, key, key).is_integer() && key >= 2;
                for (int i = 2; i <= n; ++i) {
                    std::string label = "lem-key " + weight_str(w) + " i=" + std::to_string(i);
                    try {
                        GTModule m = GTModule::create(lem_key_tableau(w, i), lem_key_flag(n, i));
                        auto hw = is_highest_weight_vector(m, GTVector::basis(m.origin()));
                        out.expect(realizable && i == key && hw && *hw == w, label + " built");
                    } catch (const Error& e) {
                        out.expect(e.code() == ErrorCode::PreconditionViolated && !(realizable && i == key),
                                   label + ": " + e.what());
                    }
                }
            }
        }
    }
    for (int t = 0; t < per_case; ++t) {
        Weight w = gen.not_relation();
        out.expect(hw_relation_case(w) == HWCase::none(), "NotRelation verdict " + weight_str(w));
        bool threw = false;
        try {
            hw_module(w);
        } catch (const Error& e) {
            threw = e.code() == ErrorCode::NotRelation;
        }
        out.expect(threw, "constructor accepted " + weight_str(w));
    }
    out.summary = std::to_string(8 * per_case) + " weights";
    return out;
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axiom suite", axiom_suite},
        {"E_m1 closed formula vs ladder", em1_oracle},
        {"localization predicates vs scans", predicate_scans},
        {"twisted localization formulas", twisted_consistency},
        {"sl3 minimal orbit", sl3_minimal_orbit},
        {"sl4 multiplicity bound", sl4_bound},
        {"sl2-induced round trip", sl2_round_trip},
        {"classification round trips", classification},
    };
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("uncaught: ") + e.what());
        }
        bool ok = o.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << c + 1 << " " << criteria[c].first << ": " << o.summary << " ("
                  << o.checks << " checks, " << seconds_since(t0) << " s)\n";
        for (auto& f : o.failures)
            if (!f.empty())
                std::cout << "    " << f << "\n";
        if (o.failures.size() > 8)
            std::cout << "    ... " << o.failures.size() - 8 << " more\n";
        std::cout.flush();
    }
    return failed ? 1 : 0;
}
