// Command-line surface for the hyperdual library: generate zoo models,
// dualize, contract, marginalize, condition, compute entropies, analyze
// structure, and evaluate MPS expectation values. All primary output is a
// single JSON document on stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 success, 1 domain error, 2 I/O or format error.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "hyperdual/hyperdual.hpp"

namespace {

using hyperdual::io::json;
using Real = hyperdual::io::Real;
using Complex = hyperdual::io::Complex;

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw hyperdual::format_error("cannot open input file: " + path);
    return json::parse(in);
}

void write_output(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw hyperdual::format_error("cannot open output file: " + out_path);
        out << text;
    }
}

template <class T>
json wrap_tensor(const hyperdual::LabeledTensor<T>& t) {
    json doc = hyperdual::io::tensor_to_json(t);
    doc["format"] = hyperdual::io::kFormat;
    doc["kind"] = "tensor";
    doc["field"] = hyperdual::io::field_name<T>();
    return doc;
}

json scalar_doc(Real v) {
    return json{{"format", hyperdual::io::kFormat}, {"kind", "scalar"}, {"field", "real"}, {"value", v}};
}

json scalar_doc(Complex v) {
    return json{{"format", hyperdual::io::kFormat},
                {"kind", "scalar"},
                {"field", "complex"},
                {"value", json::array({v.real(), v.imag()})}};
}

struct ZooArgs {
    std::string family;
    int sites = 4, phys = 2, bond = 2;
    int rows = 2, cols = 2, card = 2;
    std::vector<int> dims, weights, sizes;
    std::string fill = "auto"; // ones | random | auto (random iff seed given)
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string field = "real";
    std::string out;
};

template <class T>
json build_zoo_model(const ZooArgs& a) {
    using namespace hyperdual;
    zoo::FillSpec fill = zoo::FillSpec::ones();
    bool random = a.fill == "random" || (a.fill == "auto" && a.seed_given);
    if (random) fill = zoo::FillSpec::random(a.seed);
    if (a.family == "mps") return io::model_to_json(zoo::mps<T>(a.sites, a.phys, a.bond, fill));
    if (a.family == "tucker") {
        std::vector<int> w = a.weights.empty() ? a.dims : a.weights;
        return io::model_to_json(zoo::tucker<T>(a.dims, w, fill));
    }
    if (a.family == "cp") return io::model_to_json(zoo::cp<T>(a.dims, a.bond, fill));
    if (a.family == "no3way") {
        std::vector<int> s = a.sizes.empty() ? std::vector<int>{a.card, a.card, a.card} : a.sizes;
        return io::model_to_json(zoo::no_three_way<T>(s, fill));
    }
    if (a.family == "ising") return io::model_to_json(zoo::ising_grid<T>(a.rows, a.cols, a.card, fill));
    if (a.family == "peps") return io::model_to_json(zoo::peps_grid<T>(a.rows, a.cols, a.phys, a.bond, fill));
    throw hyperdual::domain_error("unknown zoo family: " + a.family);
}

json run_zoo(const ZooArgs& a) {
    if (a.field == "complex") return build_zoo_model<Complex>(a);
    if (a.field == "real") return build_zoo_model<Real>(a);
    throw hyperdual::domain_error("unknown field: " + a.field);
}

json run_dualize(const json& in) {
    using namespace hyperdual;
    auto model = io::model_from_json(in);
    return std::visit(
        [](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, GraphicalModel<Real>> || std::is_same_v<M, GraphicalModel<Complex>>)
                return io::model_to_json(gm_to_tn(m));
            else
                return io::model_to_json(tn_to_gm(m));
        },
        model);
}

template <class T>
json contract_one(const hyperdual::TensorHypernetwork<T>& tn, const std::string& plan_path) {
    using namespace hyperdual;
    if (!plan_path.empty()) {
        GraphicalModel<T> gm = tn_to_gm(tn);
        JunctionDiagnostics diag;
        std::vector<int> dangling = tn.dangling_edges();
        build_tree_for(gm, {}, dangling, &diag);
        ContractionPlan plan = plan_from_junction_tree(tn);
        auto [state, cost] = execute_plan(tn, plan);
        json steps = json::array();
        for (std::size_t i = 0; i < plan.steps.size(); ++i) {
            const auto& s = plan.steps[i];
            json step{{"op", s.kind == PlanStep::Kind::SumEdge ? "sum" : "merge"}};
            if (s.kind == PlanStep::Kind::SumEdge)
                step["edge"] = s.edge;
            else
                step["tensors"] = json::array({s.a, s.b});
            step["mults"] = cost.per_step[i].first;
            step["adds"] = cost.per_step[i].second;
            steps.push_back(std::move(step));
        }
        json tree_edges = json::array();
        for (const auto& [nodes, sep] : diag.tree_edges)
            tree_edges.push_back(json{{"nodes", json::array({nodes.first, nodes.second})}, {"separator", sep}});
        json plan_doc{{"format", io::kFormat},
                      {"kind", "plan"},
                      {"elimination_order", diag.elimination_order.order},
                      {"fill_edges", diag.fill_edges},
                      {"cliques", diag.cliques},
                      {"tree_edges", std::move(tree_edges)},
                      {"steps", std::move(steps)},
                      {"cost",
                       json{{"mults", cost.mults},
                            {"adds", cost.adds},
                            {"peak_entries", cost.peak_entries}}}};
        write_output(plan_doc, plan_path);
        return wrap_tensor(state);
    }
    return wrap_tensor(contract(tn));
}

json run_contract(const json& in, const std::string& plan_path) {
    using namespace hyperdual;
    auto model = io::model_from_json(in);
    if (auto* tn = std::get_if<TensorHypernetwork<Real>>(&model)) return contract_one(*tn, plan_path);
    if (auto* tn = std::get_if<TensorHypernetwork<Complex>>(&model)) return contract_one(*tn, plan_path);
    throw domain_error("contract: input must be a tensor hypernetwork (kind \"tn\")");
}

template <class F>
json with_gm(const json& in, F&& fn) {
    using namespace hyperdual;
    auto model = io::model_from_json(in);
    if (auto* gm = std::get_if<GraphicalModel<Real>>(&model)) return fn(*gm);
    if (auto* gm = std::get_if<GraphicalModel<Complex>>(&model)) return fn(*gm);
    throw domain_error("this command requires a graphical model (kind \"gm\")");
}

json analyze_hypergraph(const hyperdual::Hypergraph& h) {
    using namespace hyperdual;
    json report{{"vertices", h.vertex_count},
                {"hyperedges", h.edge_count()},
                {"two_uniform", is_k_uniform(h, 2)},
                {"two_regular", is_k_regular(h, 2)},
                {"at_most_two_regular", is_at_most_k_regular(h, 2)},
                {"berge_acyclic", is_berge_acyclic(h)},
                {"helly", has_helly_property(h)},
                {"connected_components", connected_components(simplicial_complex(h))},
                {"treewidth_estimate", treewidth_estimate(two_section(h))}};
    try {
        report["euler_characteristic"] = euler_characteristic(simplicial_complex(h));
    } catch (const size_error&) {
        report["euler_characteristic"] = nullptr;
    }
    return report;
}

json run_analyze(const json& in) {
    using namespace hyperdual;
    auto model = io::model_from_json(in);
    Hypergraph h = std::visit(
        [](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, GraphicalModel<Real>> || std::is_same_v<M, GraphicalModel<Complex>>)
                return m.h;
            else
                return m.g;
        },
        model);
    json report = analyze_hypergraph(h);
    report["dual"] = analyze_hypergraph(dual(h));
    report["format"] = io::kFormat;
    report["kind"] = "report";
    return report;
}

template <class T>
std::vector<hyperdual::zoo::OperatorBlock<T>> blocks_from_json(const json& j) {
    if (j.value("kind", "") != "blocks") throw hyperdual::format_error("expected a blocks document");
    std::vector<hyperdual::zoo::OperatorBlock<T>> blocks;
    for (const auto& b : j.at("blocks")) {
        hyperdual::zoo::OperatorBlock<T> block;
        block.size = b.at("size").get<int>();
        for (const auto& v : b.at("data")) {
            if constexpr (std::is_same_v<T, Complex>)
                block.data.emplace_back(v[0].get<double>(), v[1].get<double>());
            else
                block.data.push_back(v.get<double>());
        }
        if (block.data.size() != static_cast<std::size_t>(block.size) * block.size)
            throw hyperdual::format_error("block data length does not match size");
        blocks.push_back(std::move(block));
    }
    return blocks;
}

json run_expect(const json& psi_doc, const json& blocks_doc) {
    using namespace hyperdual;
    auto model = io::model_from_json(psi_doc);
    if (auto* tn = std::get_if<TensorHypernetwork<Real>>(&model))
        return scalar_doc(expectation_value(*tn, blocks_from_json<Real>(blocks_doc)));
    if (auto* tn = std::get_if<TensorHypernetwork<Complex>>(&model))
        return scalar_doc(expectation_value(*tn, blocks_from_json<Complex>(blocks_doc)));
    throw domain_error("expect: psi must be a tensor hypernetwork (kind \"tn\")");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"duality toolkit for graphical models and tensor hypernetworks"};
    app.require_subcommand(1);

    ZooArgs zoo_args;
    auto* zoo_cmd = app.add_subcommand("zoo", "generate a named model");
    zoo_cmd->add_option("family", zoo_args.family, "mps|tucker|cp|no3way|ising|peps")->required();
    zoo_cmd->add_option("--sites", zoo_args.sites, "number of MPS sites");
    zoo_cmd->add_option("--phys", zoo_args.phys, "physical (dangling) edge size");
    zoo_cmd->add_option("--bond", zoo_args.bond, "bond edge size / CP rank");
    zoo_cmd->add_option("--rows", zoo_args.rows, "grid rows");
    zoo_cmd->add_option("--cols", zoo_args.cols, "grid columns");
    zoo_cmd->add_option("--card", zoo_args.card, "variable cardinality");
    zoo_cmd->add_option("--dims", zoo_args.dims, "mode sizes (tucker, cp)");
    zoo_cmd->add_option("--weights", zoo_args.weights, "core weights (tucker)");
    zoo_cmd->add_option("--sizes", zoo_args.sizes, "three variable sizes (no3way)");
    zoo_cmd->add_option("--fill", zoo_args.fill, "ones|random (default: random iff --seed given)");
    auto* seed_opt = zoo_cmd->add_option("--seed", zoo_args.seed, "fill seed");
    zoo_cmd->add_option("--field", zoo_args.field, "real|complex");
    zoo_cmd->add_option("--out", zoo_args.out, "output path (default stdout)");

    std::string in_path, plan_path, out_path;
    auto* dualize_cmd = app.add_subcommand("dualize", "swap a model with its dual");
    dualize_cmd->add_option("input", in_path, "model JSON path or -")->required();
    dualize_cmd->add_option("--out", out_path, "output path");

    auto* contract_cmd = app.add_subcommand("contract", "contract a tensor hypernetwork");
    contract_cmd->add_option("input", in_path, "model JSON path or -")->required();
    contract_cmd->add_option("--plan", plan_path, "also write the contraction plan and cost here");
    contract_cmd->add_option("--out", out_path, "output path");

    std::vector<int> vars;
    bool normalized = false;
    auto* marg_cmd = app.add_subcommand("marginalize", "marginal of a variable set");
    marg_cmd->add_option("input", in_path)->required();
    marg_cmd->add_option("--vars", vars, "variables to keep")->required();
    marg_cmd->add_flag("--normalized", normalized, "divide by the partition function");
    marg_cmd->add_option("--out", out_path, "output path");

    int cond_var = 0;
    std::vector<int> keep;
    auto* cond_cmd = app.add_subcommand("condition", "restrict a variable to an index subset");
    cond_cmd->add_option("input", in_path)->required();
    cond_cmd->add_option("--var", cond_var, "variable to condition")->required();
    cond_cmd->add_option("--keep", keep, "indices to keep")->required();
    cond_cmd->add_option("--out", out_path, "output path");

    auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of a normalized marginal");
    entropy_cmd->add_option("input", in_path)->required();
    entropy_cmd->add_option("--vars", vars, "variables of the marginal")->required();
    entropy_cmd->add_option("--out", out_path, "output path");

    auto* analyze_cmd = app.add_subcommand("analyze", "structural report for a model and its dual");
    analyze_cmd->add_option("input", in_path)->required();
    analyze_cmd->add_option("--out", out_path, "output path");

    std::string blocks_path;
    auto* expect_cmd = app.add_subcommand("expect", "MPS expectation value <psi|A|psi>");
    expect_cmd->add_option("psi", in_path, "MPS model JSON")->required();
    expect_cmd->add_option("blocks", blocks_path, "operator blocks JSON")->required();
    expect_cmd->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        json result;
        if (zoo_cmd->parsed()) {
            zoo_args.seed_given = seed_opt->count() > 0;
            result = run_zoo(zoo_args);
            out_path = zoo_args.out;
        } else if (dualize_cmd->parsed()) {
            result = run_dualize(read_json(in_path));
        } else if (contract_cmd->parsed()) {
            result = run_contract(read_json(in_path), plan_path);
        } else if (marg_cmd->parsed()) {
            std::sort(vars.begin(), vars.end());
            result = with_gm(read_json(in_path), [&](const auto& gm) {
                return wrap_tensor(hyperdual::marginal_set(gm, vars, normalized));
            });
        } else if (cond_cmd->parsed()) {
            std::sort(keep.begin(), keep.end());
            result = with_gm(read_json(in_path), [&](const auto& gm) {
                return hyperdual::io::model_to_json(hyperdual::condition(gm, cond_var, keep));
            });
        } else if (entropy_cmd->parsed()) {
            std::sort(vars.begin(), vars.end());
            auto model = hyperdual::io::model_from_json(read_json(in_path));
            auto* gm = std::get_if<hyperdual::GraphicalModel<Real>>(&model);
            if (!gm) throw hyperdual::domain_error("entropy: input must be a real-field graphical model");
            auto marg = hyperdual::marginal_set(*gm, vars, /*normalized=*/true);
            result = json{{"format", hyperdual::io::kFormat},
                          {"kind", "entropy"},
                          {"vars", vars},
                          {"value", hyperdual::shannon_entropy(marg)}};
        } else if (analyze_cmd->parsed()) {
            result = run_analyze(read_json(in_path));
        } else if (expect_cmd->parsed()) {
            result = run_expect(read_json(in_path), read_json(blocks_path));
        }
        write_output(result, out_path);
        return 0;
    } catch (const hyperdual::format_error& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const hyperdual::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
