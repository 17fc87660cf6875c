#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gtrel/gtrel.hpp"

using namespace gtrel;

namespace {

Json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorCode::ParseError, "cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (auto& r : parse_weight(text)) {
        if (!r.is_integer())
            throw Error(ErrorCode::ParseError, "expected integers in '" + text + "'");
        out.push_back(static_cast<int>(r.to_long()));
    }
    return out;
}

Weight parse_sized_weight(const std::string& text, int n) {
    Weight w = parse_weight(text);
    if (n > 0 && static_cast<int>(w.size()) != n)
        throw Error(ErrorCode::ValidationError, "expected " + std::to_string(n) + " coordinates");
    return w;
}

struct Options {
    std::string module_path;
    std::string lambda, u, v, mu, gamma, k, x, gen, vector_path, targets, spec_path, weight, kind = "hw";
    std::string norm = "binomial";
    int n = 0, i = 0, j = 0, m = 0, box = 3, branch = 0, jobs = 1;
    long p = 0, q = 0;
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    bool list_hw = false, induce = false;
};

Json run_build(const Options& o) {
    Normalization norm = normalization_from_name(o.norm);
    Weight lambda = o.lambda.empty() ? Weight{} : parse_sized_weight(o.lambda, o.n);
    if (o.kind == "hw")
        return to_json(hw_module(lambda, norm));
    if (o.kind == "case-a")
        return to_json(GTModule::create(hw_tableau_case_a(lambda, norm), {}, norm));
    if (o.kind == "case-b")
        return to_json(GTModule::create(hw_tableau_case_b(lambda, o.i, o.j, norm), {}, norm));
    if (o.kind == "lem-key") {
        int n = static_cast<int>(lambda.size());
        return to_json(GTModule::create(lem_key_tableau(lambda, o.i, norm), lem_key_flag(n, o.i), norm));
    }
    if (o.kind == "family") {
        std::optional<int> m = o.m ? std::optional<int>(o.m) : std::nullopt;
        return to_json(GTModule::create(family_tableau(parse_weight(o.u), parse_weight(o.v), m)));
    }
    throw Error(ErrorCode::ValidationError, "unknown --kind '" + o.kind + "'");
}

Json run_classify(const Options& o) {
    Weight lambda = parse_sized_weight(o.lambda, o.n);
    HWCase c = hw_relation_case(lambda);
    Json out = to_json(c);
    out["lambda"] = to_json(lambda);
    auto bc = bounded_case(lambda);
    out["bounded"] = bc ? Json(bc->str()) : Json(nullptr);
    out["verma_simple"] = verma_simple_relation(lambda);
    if (c.is_relation())
        out["module"] = to_json(hw_module(lambda, normalization_from_name(o.norm)));
    return out;
}

Json run_resolve(const Options& o) {
    Json out = Json::array();
    for (auto& b : resolve_sl2_induced({Rational::parse(o.gamma), parse_weight(o.mu)})) {
        Json e = {{"lambda", to_json(b.lambda)}, {"x", b.x.str()}, {"experimental", b.experimental}};
        e["hw_case"] = to_json(b.hw_case);
        out.push_back(e);
    }
    return out;
}

Json run_minimal_orbit(const Options& o) {
    Level lvl = Level::make(o.n, o.p, o.q);
    Json out = {{"n", lvl.n}, {"p", lvl.p}, {"q", lvl.q}, {"k", lvl.k().str()}};
    Json reps = Json::array();
    std::vector<MinOrbitWeight> all = MinOrbitReps(lvl).all();
    for (auto& r : all) {
        Json e = {{"lambda_bar", r.lambda_bar}, {"a", r.a}, {"weight", to_json(r.realized(lvl))}};
        if (o.list_hw) {
            Json hw = Json::array();
            for (auto& entry : hw_orbit_list(lvl, r))
                hw.push_back({{"weight", to_json(entry.weight)}, {"hw_case", to_json(entry.hw_case)}});
            e["hw"] = hw;
        }
        reps.push_back(e);
    }
    out["reps"] = reps;
    if (o.induce) {
        if (all.empty())
            throw Error(ErrorCode::ValidationError, "no representatives at this level");
        auto orbit = hw_orbit_list(lvl, all.front());
        if (o.branch < 0 || o.branch >= static_cast<int>(orbit.size()))
            throw Error(ErrorCode::ValidationError, "--branch must index the orbit list of the first rep");
        auto ind = build_sl2_induced_minimal(lvl, all.front(), orbit[o.branch].weight, Rational::parse(o.x));
        out["induced"] = {{"module", to_json(ind.module)}, {"gamma", ind.gamma.str()}, {"mu", to_json(ind.mu)}};
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relation Gelfand-Tsetlin modules over sl(n+1)"};
    app.require_subcommand(1);
    Options o;

    auto* adm = app.add_subcommand("admissible", "admissible level data for k");
    adm->add_option("--n", o.n)->required();
    adm->add_option("--k", o.k)->required();

    auto* build = app.add_subcommand("build", "construct a module");
    build->add_option("--kind", o.kind, "hw, case-a, case-b, lem-key or family");
    build->add_option("--n", o.n);
    build->add_option("--lambda", o.lambda);
    build->add_option("--i", o.i);
    build->add_option("--j", o.j);
    build->add_option("--u", o.u);
    build->add_option("--v", o.v);
    build->add_option("--m", o.m);
    build->add_option("--normalization", o.norm);

    auto* act_cmd = app.add_subcommand("act", "apply a generator");
    act_cmd->add_option("--module", o.module_path)->required();
    act_cmd->add_option("--gen", o.gen, "E,i,j or H,k")->required();
    act_cmd->add_option("--vector", o.vector_path, "vector JSON; defaults to the seed");

    auto* verify = app.add_subcommand("verify", "sample the sl(n+1) relations");
    verify->add_option("--module", o.module_path)->required();
    verify->add_option("--box", o.box);
    verify->add_option("--samples", o.samples);
    verify->add_option("--seed", o.seed);
    verify->add_option("--jobs", o.jobs);

    auto* mults = app.add_subcommand("mults", "weight multiplicities inside a box");
    mults->add_option("--module", o.module_path)->required();
    mults->add_option("--box", o.box);
    mults->add_option("--weight", o.weight, "single weight in module coordinates");

    auto* cls = app.add_subcommand("classify-hw", "classify a highest weight");
    cls->add_option("--n", o.n);
    cls->add_option("--lambda", o.lambda)->required();
    cls->add_option("--normalization", o.norm);

    auto* res = app.add_subcommand("resolve-sl2", "branches of an sl2-induced module");
    res->add_option("--gamma", o.gamma)->required();
    res->add_option("--mu", o.mu)->required();

    auto* loc = app.add_subcommand("localize", "localize at E_{m1} targets");
    loc->add_option("--module", o.module_path)->required();
    loc->add_option("--targets", o.targets);
    loc->add_option("--x", o.x);
    loc->add_option("--spec", o.spec_path, "LocalizationSpec JSON");

    auto* tw = app.add_subcommand("twist", "twisted localization at E21");
    tw->add_option("--module", o.module_path)->required();
    tw->add_option("--x", o.x)->required();

    auto* mo = app.add_subcommand("minimal-orbit", "minimal orbit representatives");
    mo->add_option("--n", o.n)->required();
    mo->add_option("--p", o.p)->required();
    mo->add_option("--q", o.q)->required();
    mo->add_flag("--list-hw", o.list_hw);
    mo->add_flag("--induce", o.induce);
    mo->add_option("--branch", o.branch);
    mo->add_option("--x", o.x);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", "ParseError"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        Json out;
        if (*adm) {
            auto lvl = admissible_level(o.n, Rational::parse(o.k));
            out = lvl ? Json{{"p", lvl->p}, {"q", lvl->q}} : Json{{"admissible", false}};
        } else if (*build) {
            out = run_build(o);
        } else if (*act_cmd) {
            GTModule m = module_from_json(read_json_file(o.module_path));
            GTVector v = o.vector_path.empty() ? GTVector::basis(m.origin())
                                               : vector_from_json(m.n(), read_json_file(o.vector_path));
            require_supported(m, v);
            out = to_json(act(m, Generator::parse(o.gen, m.n()), v));
        } else if (*verify) {
            GTModule m = module_from_json(read_json_file(o.module_path));
            out = to_json(verify_axioms(m, o.box, o.samples, o.seed, static_cast<unsigned>(std::max(1, o.jobs))));
        } else if (*mults) {
            GTModule m = module_from_json(read_json_file(o.module_path));
            if (!o.weight.empty()) {
                auto mu = weight_multiplicity(m, parse_sized_weight(o.weight, m.n()), o.box);
                out = {{"count", mu.count}, {"complete", mu.complete}};
            } else {
                out = Json::array();
                for (auto& [w, c] : weight_multiplicities(m, o.box))
                    out.push_back({{"weight", to_json(w)}, {"count", c}});
            }
        } else if (*cls) {
            out = run_classify(o);
        } else if (*res) {
            out = run_resolve(o);
        } else if (*loc) {
            GTModule m = module_from_json(read_json_file(o.module_path));
            LocalizationSpec spec;
            if (!o.spec_path.empty())
                spec = localization_spec_from_json(read_json_file(o.spec_path));
            else
                spec.targets = parse_int_list(o.targets);
            if (!o.x.empty())
                spec.x = Rational::parse(o.x);
            out = to_json(localize_family(m, spec));
        } else if (*tw) {
            GTModule m = module_from_json(read_json_file(o.module_path));
            out = to_json(twist_e21(m, Rational::parse(o.x)));
        } else if (*mo) {
            out = run_minimal_orbit(o);
        }
        std::cout << out.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cout << Json{{"error", code_name(e.code())}, {"detail", e.detail()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
