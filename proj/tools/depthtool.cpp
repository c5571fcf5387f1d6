#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "depth/json_io.hpp"
#include "depth/tensor_lab.hpp"

using namespace depth;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::size_t max_group_order = PermGroup::kDefaultOrderCap;
    std::size_t max_tensor_budget = kDefaultTensorBudget;
    std::optional<unsigned long> prime_override;
    std::string emit_dot;
    std::string from_report;
};

PipelineConfig pipeline_config(const GlobalOpts& g) {
    PipelineConfig cfg;
    cfg.group_order_cap = g.max_group_order;
    cfg.tensor_budget = g.max_tensor_budget;
    cfg.prime_override = g.prime_override;
    return cfg;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void maybe_emit_dot(const GlobalOpts& opts, const DepthReport& rep) {
    if (opts.emit_dot.empty()) return;
    const IntMatrix* m = nullptr;
    for (const char* name : {"M", "M_D", "T"}) {
        auto it = rep.matrices.find(name);
        if (it != rep.matrices.end()) {
            m = &it->second;
            break;
        }
    }
    if (!m) throw std::runtime_error("--emit-dot: report carries no matrix to draw");
    std::ofstream out(opts.emit_dot);
    if (!out) throw std::runtime_error("cannot write " + opts.emit_dot);
    out << bratteli_dot(*m);
}

void print_report(const GlobalOpts& opts, const DepthReport& rep, const Json& input) {
    maybe_emit_dot(opts, rep);
    if (opts.format == "md") {
        std::cout << report_to_markdown(rep);
        return;
    }
    Json j = report_to_json(rep);
    j["input"] = input;
    std::cout << dump_stable(j);
}

// scenario dispatch shared by the direct flags and --from-report
DepthReport run_depth_input(const Json& input, const GlobalOpts& opts) {
    PipelineConfig cfg = pipeline_config(opts);
    std::string kind = input.at("kind").get<std::string>();
    if (kind == "matrix") return scenario_matrix(matrix_from_json(input.at("matrix")), cfg);
    if (kind == "sym") return scenario_sym_pair(input.at("n").get<std::size_t>(), cfg);
    if (kind == "pair") {
        PermGroup g = group_from_json(input.at("group"), cfg.group_order_cap);
        PermGroup h(g.degree(), generators_from_json(input.at("subgroup"), g.degree()),
                    cfg.group_order_cap);
        return scenario_group_pair(g, h, input.at("label").get<std::string>(), cfg);
    }
    if (kind == "heisenberg")
        return scenario_heisenberg(group_from_json(input.at("group"), cfg.group_order_cap),
                                   input.at("label").get<std::string>(), cfg);
    if (kind == "drinfeld")
        return scenario_drinfeld(group_from_json(input.at("group"), cfg.group_order_cap),
                                 input.at("label").get<std::string>(), cfg);
    if (kind == "gensmash") {
        PermGroup g = group_from_json(input.at("group"), cfg.group_order_cap);
        PermGroup h(g.degree(), generators_from_json(input.at("subgroup"), g.degree()),
                    cfg.group_order_cap);
        return scenario_gen_smash(g, h, input.at("label").get<std::string>(), cfg);
    }
    throw std::runtime_error("unknown depth input kind: " + kind);
}

Json subgroup_json(const PermGroup& h) { return group_to_json(h).at("generators"); }

int run_verify_theta(const std::string& scenario, std::size_t n, const GlobalOpts& opts) {
    ThetaReport rep;
    if (scenario == "flip") {
        AlgData a = group_algebra(named_group("C2")).alg;
        AlgData b = group_algebra(named_group("C3")).alg;
        rep = theta_check(a, b, factorization_algebra(a, b, flip_map(a.dim, b.dim)), n,
                          opts.max_tensor_budget);
    } else if (scenario == "heisenberg_c2") {
        HopfData h = group_algebra(named_group("C2"));
        rep = theta_check(h.alg, dual_hopf(h).alg, heisenberg_double(h), n, opts.max_tensor_budget);
    } else if (scenario == "smash_c2") {
        // the same smash product assembled through the generic measuring-action path
        HopfData h = group_algebra(named_group("C2"));
        HopfData hd = dual_hopf(h);
        std::size_t d = 2;
        ModuleAlgebraAction act;
        act.dim_h = d;
        act.dim_a = d;
        act.matrix = RatMatrix(d, d * d);
        for (std::size_t ia = 0; ia < d; ++ia)
            for (std::size_t jj = 0; jj < d; ++jj)
                for (std::size_t k = 0; k < d; ++k)
                    if (h.c(ia, jj, k) != 0)
                        act.matrix.at(jj, k * d + ia) += h.c(ia, jj, k);
        rep = theta_check(h.alg, hd.alg, smash_product(h.alg, hd, act), n, opts.max_tensor_budget);
    } else if (scenario == "gensmash_c2_s3") {
        PermGroup s3 = named_group("S3");
        PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
        HopfData hs3 = group_algebra(s3);
        QuotientModuleCoalgebra q =
            quotient_module_coalgebra(hs3, group_algebra(c2), group_algebra_embedding(c2, s3));
        FactorizationAlgebra x = generalized_smash(q, hs3);
        AlgData a = AlgData::zero(q.dim);
        for (std::size_t i = 0; i < q.dim; ++i)
            for (std::size_t j = 0; j < q.dim; ++j)
                for (std::size_t k = 0; k < q.dim; ++k)
                    a.m(i, j, k) = q.comult[(k * q.dim + j) * q.dim + i];
        a.unit = q.counit;
        rep = theta_check(a, hs3.alg, x, n, opts.max_tensor_budget);
    } else {
        throw std::runtime_error(
            "unknown theta scenario (expected flip, heisenberg_c2, smash_c2, gensmash_c2_s3)");
    }
    Json j{{"theta_ok", rep.ok()},
           {"n", rep.n},
           {"dims", Json{{"quotient", rep.quotient_dim}, {"target", rep.target_dim}}},
           {"well_defined", rep.well_defined},
           {"mutually_inverse", rep.mutually_inverse},
           {"bilinear", rep.bilinear},
           {"input", Json{{"command", "verify.theta"}, {"scenario", scenario}, {"n", n}}}};
    if (opts.format == "md") {
        std::cout << "# theta check: " << scenario << ", n = " << n << "\n\n- ok: "
                  << (rep.ok() ? "yes" : "no") << "\n- dims: " << rep.quotient_dim << " = "
                  << rep.target_dim << "\n";
    } else {
        std::cout << dump_stable(j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subalgebra-depth calculator for finite-dimensional extensions"};
    app.require_subcommand(1);
    GlobalOpts opts;
    unsigned long prime_raw = 0;
    app.add_option("--format", opts.format, "output format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    app.add_option("--max-group-order", opts.max_group_order, "enumeration cap for groups");
    app.add_option("--max-tensor-budget", opts.max_tensor_budget, "ambient dimension cap");
    auto* popt = app.add_option("--prime-override", prime_raw, "Dixon prime to use");
    app.add_option("--emit-dot", opts.emit_dot, "write the Bratteli graph to this path");
    app.add_option("--from-report", opts.from_report, "re-run the input embedded in a report");

    auto* depth_cmd = app.add_subcommand("depth", "depth invariants of an extension");
    depth_cmd->require_subcommand(0, 1);
    depth_cmd->fallthrough();
    std::string matrix_file, group_spec, subgroup_spec;
    std::size_t sym_n = 0;

    auto* mtx = depth_cmd->add_subcommand("matrix", "depths of an induction matrix file");
    mtx->add_option("file", matrix_file, "matrix JSON file");
    auto* pair = depth_cmd->add_subcommand("pair", "depths of a group pair kH ⊆ kG");
    pair->add_option("--group", group_spec, "ambient group (name or JSON)");
    pair->add_option("--subgroup", subgroup_spec, "subgroup generators (JSON cycles)");
    auto* sym = depth_cmd->add_subcommand("sym", "depths of CS_n ⊆ CS_{n+1} via Young branching");
    sym->add_option("n", sym_n, "symmetric group index");
    auto* heis = depth_cmd->add_subcommand("heisenberg", "depths of H* ⊆ H#H* for H = kG");
    heis->add_option("--group", group_spec, "group (name or JSON)");
    auto* drin = depth_cmd->add_subcommand("drinfeld", "depths of kG ⊆ D(kG)");
    drin->add_option("--group", group_spec, "group (name or JSON)");
    auto* gsm = depth_cmd->add_subcommand("gensmash", "depths of kG ⊆ Q^{*op}#kG");
    gsm->add_option("--group", group_spec, "ambient group");
    gsm->add_option("--subgroup", subgroup_spec, "Hopf subalgebra subgroup generators");
    for (auto* sc : {mtx, pair, sym, heis, drin, gsm}) sc->fallthrough();

    auto* module_cmd = app.add_subcommand("moduledepth", "module depth of a character");
    module_cmd->fallthrough();
    std::string md_group, md_character, md_cosets;
    module_cmd->add_option("--group", md_group, "group (name or JSON)");
    module_cmd->add_option("--character", md_character, "per-class integer values, JSON array");
    module_cmd->add_option("--cosets", md_cosets, "subgroup generators: use the coset character");

    auto* verify_cmd = app.add_subcommand("verify", "machine verification reports");
    verify_cmd->require_subcommand(0, 1);
    verify_cmd->fallthrough();
    std::string hopf_file, theta_scenario;
    std::size_t theta_n = 1;
    auto* vh = verify_cmd->add_subcommand("hopf", "verify all Hopf axioms of a structure file");
    vh->add_option("file", hopf_file, "HopfData JSON file");
    auto* vt = verify_cmd->add_subcommand("theta", "verify the tensor-power isomorphism");
    vt->add_option("--scenario", theta_scenario, "flip | heisenberg_c2 | smash_c2 | gensmash_c2_s3");
    vt->add_option("--n", theta_n, "tensor power");
    vh->fallthrough();
    vt->fallthrough();

    auto* audit_cmd = app.add_subcommand("audit", "run the claims audit battery");
    audit_cmd->fallthrough();
    std::string battery = "default";
    audit_cmd->add_option("--battery", battery, "battery name");

    auto* table_cmd = app.add_subcommand("table", "exact character table of a group");
    table_cmd->fallthrough();
    std::string table_group;
    table_cmd->add_option("--group", table_group, "group (name or JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (popt->count() > 0) opts.prime_override = prime_raw;

    try {
        PipelineConfig cfg = pipeline_config(opts);

        if (!opts.from_report.empty()) {
            Json report = load_json_file(opts.from_report);
            Json input = report.at("input");
            std::string command = input.at("command").get<std::string>();
            if (command == "depth") {
                DepthReport rep = run_depth_input(input, opts);
                print_report(opts, rep, input);
                return 0;
            }
            if (command == "table") {
                CharacterTable t =
                    CharacterTable::dixon(group_from_json(input.at("group"), cfg.group_order_cap),
                                          opts.prime_override);
                Json j = table_to_json(t);
                j["input"] = input;
                std::cout << dump_stable(j);
                return 0;
            }
            if (command == "verify.theta")
                return run_verify_theta(input.at("scenario").get<std::string>(),
                                        input.at("n").get<std::size_t>(), opts);
            if (command == "verify.hopf") {
                HopfData h = hopf_from_json(load_json_file(input.at("file").get<std::string>()));
                AxiomReport rep = verify_hopf(h);
                Json j{{"ok", rep.ok},
                       {"failed_axiom", rep.failed_axiom},
                       {"witness", rep.witness},
                       {"input", input}};
                std::cout << dump_stable(j);
                return 0;
            }
            if (command == "moduledepth") {
                PermGroup g = group_from_json(input.at("group"), cfg.group_order_cap);
                CharacterTable t = CharacterTable::dixon(g, opts.prime_override);
                ClassFunction w;
                if (input.contains("cosets")) {
                    PermGroup h(g.degree(), generators_from_json(input.at("cosets"), g.degree()),
                                cfg.group_order_cap);
                    w = quotient_module_character(t, h);
                } else {
                    std::vector<BigInt> per_class;
                    for (const auto& v : input.at("character")) per_class.push_back(int_from_json(v));
                    w = t.class_function_from_integers(per_class);
                }
                ModuleDepthResult r = module_depth(t, w);
                Json chain = Json::array();
                for (const auto& s : r.chain)
                    chain.push_back(std::vector<std::size_t>(s.begin(), s.end()));
                std::cout << dump_stable(Json{{"module_depth", r.depth},
                                              {"stabilization", r.stabilization},
                                              {"chain", std::move(chain)},
                                              {"input", input}});
                return 0;
            }
            if (command == "audit") {
                std::string b = input.at("battery").get<std::string>();
                if (b != "default") throw std::runtime_error("unknown battery: " + b);
                auto reports = claims_audit_default(cfg);
                Json arr = Json::array();
                std::size_t pass = 0, fail = 0;
                for (const auto& r : reports) {
                    arr.push_back(report_to_json(r));
                    for (const auto& c : r.claims) (c.pass ? ++pass : ++fail);
                }
                std::cout << dump_stable(Json{
                    {"battery", b},
                    {"reports", std::move(arr)},
                    {"summary", Json{{"claims_pass", pass}, {"claims_fail", fail}}},
                    {"input", input}});
                return 0;
            }
            throw std::runtime_error("--from-report: unsupported embedded command " + command);
        }

        if (depth_cmd->parsed()) {
            Json input{{"command", "depth"}};
            if (mtx->parsed()) {
                input["kind"] = "matrix";
                input["matrix"] = load_json_file(matrix_file);
            } else if (sym->parsed()) {
                input["kind"] = "sym";
                input["n"] = sym_n;
            } else if (pair->parsed() || gsm->parsed()) {
                PermGroup g = group_from_spec(group_spec, cfg.group_order_cap);
                PermGroup h(g.degree(),
                            generators_from_json(Json::parse(subgroup_spec), g.degree()),
                            cfg.group_order_cap);
                input["kind"] = pair->parsed() ? "pair" : "gensmash";
                input["group"] = group_to_json(g);
                input["subgroup"] = subgroup_json(h);
                input["label"] = group_spec + " pair";
            } else if (heis->parsed() || drin->parsed()) {
                PermGroup g = group_from_spec(group_spec, cfg.group_order_cap);
                input["kind"] = heis->parsed() ? "heisenberg" : "drinfeld";
                input["group"] = group_to_json(g);
                input["label"] = group_spec;
            } else {
                throw CLI::CallForHelp();
            }
            DepthReport rep = run_depth_input(input, opts);
            print_report(opts, rep, input);
            return 0;
        }

        if (module_cmd->parsed()) {
            PermGroup g = group_from_spec(md_group, cfg.group_order_cap);
            CharacterTable t = CharacterTable::dixon(g, opts.prime_override);
            ClassFunction w;
            Json input{{"command", "moduledepth"}, {"group", group_to_json(g)}};
            if (!md_cosets.empty()) {
                PermGroup h(g.degree(), generators_from_json(Json::parse(md_cosets), g.degree()),
                            cfg.group_order_cap);
                w = quotient_module_character(t, h);
                input["cosets"] = subgroup_json(h);
            } else if (!md_character.empty()) {
                Json vals = Json::parse(md_character);
                std::vector<BigInt> per_class;
                for (const auto& v : vals) per_class.push_back(int_from_json(v));
                w = t.class_function_from_integers(per_class);
                input["character"] = vals;
            } else {
                throw std::runtime_error("moduledepth: need --character or --cosets");
            }
            ModuleDepthResult r = module_depth(t, w);
            Json chain = Json::array();
            for (const auto& s : r.chain) chain.push_back(std::vector<std::size_t>(s.begin(), s.end()));
            Json j{{"module_depth", r.depth},
                   {"stabilization", r.stabilization},
                   {"chain", std::move(chain)},
                   {"input", input}};
            std::cout << (opts.format == "md"
                              ? "module depth " + std::to_string(r.depth) + "\n"
                              : dump_stable(j));
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (vh->parsed()) {
                HopfData h = hopf_from_json(load_json_file(hopf_file));
                AxiomReport rep = verify_hopf(h);
                Json j{{"ok", rep.ok},
                       {"failed_axiom", rep.failed_axiom},
                       {"witness", rep.witness},
                       {"input", Json{{"command", "verify.hopf"}, {"file", hopf_file}}}};
                std::cout << (opts.format == "md" ? rep.describe() + "\n" : dump_stable(j));
                return 0;
            }
            if (vt->parsed()) return run_verify_theta(theta_scenario, theta_n, opts);
            throw CLI::CallForHelp();
        }

        if (audit_cmd->parsed()) {
            if (battery != "default") throw std::runtime_error("unknown battery: " + battery);
            auto reports = claims_audit_default(cfg);
            if (opts.format == "md") {
                for (const auto& r : reports) std::cout << report_to_markdown(r) << "\n";
                return 0;
            }
            Json arr = Json::array();
            std::size_t pass = 0, fail = 0;
            for (const auto& r : reports) {
                arr.push_back(report_to_json(r));
                for (const auto& c : r.claims) (c.pass ? ++pass : ++fail);
            }
            Json j{{"battery", battery},
                   {"reports", std::move(arr)},
                   {"summary", Json{{"claims_pass", pass}, {"claims_fail", fail}}},
                   {"input", Json{{"command", "audit"}, {"battery", battery}}}};
            std::cout << dump_stable(j);
            return 0;
        }

        if (table_cmd->parsed()) {
            PermGroup g = group_from_spec(table_group, cfg.group_order_cap);
            CharacterTable t = CharacterTable::dixon(g, opts.prime_override);
            Json j = table_to_json(t);
            j["input"] = Json{{"command", "table"}, {"group", group_to_json(g)}};
            std::cout << dump_stable(j);
            return 0;
        }

        throw CLI::CallForHelp();
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
