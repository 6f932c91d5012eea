// Command-line front end: exact checks of the matrix-tree constraint on
// subtour-LP points.
//
// Exit codes: 0 all checks satisfied, 1 a mathematical check failed,
// 2 input or usage error, 3 a configured cap was exceeded.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mtt/connectivity.hpp"
#include "mtt/errors.hpp"
#include "mtt/graph.hpp"
#include "mtt/subtour_lp.hpp"
#include "mtt/tree_weight.hpp"
#include "mtt/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

void render_text(const nlohmann::json& j, const std::string& prefix, std::ostream& os)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, os);
        return;
    }
    if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
        return;
    }
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const nlohmann::json& j, const std::string& format)
{
    if (format == "text")
        render_text(j, "", std::cout);
    else
        std::cout << j.dump(2) << '\n';
}

mtt::Integer parse_scale(const std::string& text)
{
    const mtt::Rational r = mtt::Rational::parse(text);
    if (!r.is_integer() || r.sign() <= 0) throw mtt::InputError("--max-scale must be a positive integer");
    return r.numerator();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the matrix-tree constraint on subtour LP points"};
    app.require_subcommand(1);

    std::string format = "json";
    std::size_t enum_cap = mtt::kDefaultEnumerationCap;
    std::string max_scale = std::to_string(mtt::kDefaultExpansionCap);
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    // check-mtt
    auto* check = app.add_subcommand("check-mtt", "Evaluate det(L(X)_{-i}) >= n for a graph file");
    std::string check_input;
    bool check_oracle = false;
    bool check_expand = false;
    bool check_cut_only = false;
    std::size_t minor_index = 1;
    check->add_option("--input", check_input, "Graph file")->required();
    check->add_flag("--oracle", check_oracle, "Cross-check with deletion-contraction enumeration");
    check->add_flag("--expand", check_expand, "Reproduce the LCM multigraph expansion chain");
    check->add_option("--minor-index", minor_index, "Deleted row/column (1-based)");
    check->add_flag("--cut-only", check_cut_only, "Require only cut constraints, not degree equalities");
    check->add_option("--enum-cap", enum_cap, "Maximum nonzero edges for enumeration");
    check->add_option("--max-scale", max_scale, "Maximum expansion scale R");
    add_format(check);

    // solve-subtour
    auto* solve = app.add_subcommand("solve-subtour", "Solve the subtour LP by cutting planes");
    int solve_n = 0;
    std::string costs_file;
    std::uint64_t solve_seed = 0;
    std::size_t cut_cap = mtt::kDefaultCutCap;
    solve->add_option("--n", solve_n, "Vertex count")->required();
    auto* costs_opt = solve->add_option("--costs", costs_file, "Instance file");
    auto* seed_opt = solve->add_option("--seed", solve_seed, "Random instance seed");
    costs_opt->excludes(seed_opt);
    solve->add_option("--cut-cap", cut_cap, "Maximum number of subtour cuts");
    add_format(solve);

    // tree-weight
    auto* tree = app.add_subcommand("tree-weight", "Aggregate spanning-tree weight");
    std::string tree_input;
    std::string method = "kirchhoff";
    tree->add_option("--input", tree_input, "Graph file")->required();
    tree->add_option("--method", method, "kirchhoff|enumerate|both")
        ->check(CLI::IsMember({"kirchhoff", "enumerate", "both"}));
    tree->add_option("--enum-cap", enum_cap, "Maximum nonzero edges for enumeration");
    add_format(tree);

    // min-cut
    auto* mincut = app.add_subcommand("min-cut", "Global minimum weight cut");
    std::string mincut_input;
    mincut->add_option("--input", mincut_input, "Graph file")->required();
    add_format(mincut);

    // expand
    auto* expand = app.add_subcommand("expand", "Scale by the LCM of denominators into a multigraph");
    std::string expand_input;
    expand->add_option("--input", expand_input, "Graph file")->required();
    expand->add_option("--max-scale", max_scale, "Maximum expansion scale R");
    add_format(expand);

    // trials
    auto* trials = app.add_subcommand("trials", "Check sampled extreme points of random instances");
    int trials_n = 0;
    std::size_t trials_count = 0;
    std::uint64_t trials_seed = 0;
    bool trials_oracle = false;
    bool trials_records = false;
    unsigned threads = 0;
    trials->add_option("--n", trials_n, "Vertex count")->required();
    trials->add_option("--trials", trials_count, "Number of trials")->required();
    trials->add_option("--seed", trials_seed, "Master seed")->required();
    trials->add_flag("--oracle", trials_oracle, "Cross-check with enumeration when within the cap");
    trials->add_flag("--records", trials_records, "Include per-trial records");
    trials->add_option("--enum-cap", enum_cap, "Maximum nonzero edges for enumeration");
    trials->add_option("--cut-cap", cut_cap, "Maximum number of subtour cuts per solve");
    trials->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    add_format(trials);

    // combine
    auto* combine = app.add_subcommand("combine", "Check a convex combination of two feasible points");
    std::string combine_a;
    std::string combine_b;
    std::string combine_t;
    combine->add_option("--a", combine_a, "First graph file")->required();
    combine->add_option("--b", combine_b, "Second graph file")->required();
    combine->add_option("--t", combine_t, "Weight on the first point, as p/q")->required();
    add_format(combine);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (check->parsed()) {
            mtt::CheckOptions opts;
            opts.use_oracle = check_oracle;
            opts.expand = check_expand;
            opts.cut_only = check_cut_only;
            opts.minor_index = minor_index;
            opts.enumeration_cap = enum_cap;
            opts.max_scale = parse_scale(max_scale);
            const auto report = mtt::check_mtt_constraint(mtt::read_graph_file(check_input), opts);
            emit(mtt::report_to_json(report), format);
            return report.consistent() ? kOk : kCheckFailed;
        }
        if (solve->parsed()) {
            if (!*costs_opt && !*seed_opt) throw mtt::InputError("solve-subtour needs --costs or --seed");
            const mtt::CostVector costs =
                *costs_opt ? mtt::read_costs_file(costs_file) : mtt::random_instance(solve_n, solve_seed);
            if (costs.n != solve_n) throw mtt::InputError("--n does not match the instance file");
            const auto sol = mtt::solve_subtour_lp(costs, cut_cap);
            const mtt::WeightedGraph g = mtt::point_to_graph(costs.n, sol.point.x);
            nlohmann::json j = mtt::graph_to_json(g);
            j["objective"] = sol.point.objective_value.str();
            j["cuts_added"] = sol.cuts_added;
            nlohmann::json sides = nlohmann::json::array();
            for (const auto& c : sol.cuts) sides.push_back(c.members());
            j["cut_sides"] = std::move(sides);
            const bool feasible = mtt::check_subtour_feasible(g).feasible();
            j["feasible"] = feasible;
            emit(j, format);
            return feasible ? kOk : kCheckFailed;
        }
        if (tree->parsed()) {
            const mtt::WeightedGraph g = mtt::read_graph_file(tree_input);
            nlohmann::json j{{"n", g.n()}};
            bool ok = true;
            if (method != "enumerate") j["kirchhoff"] = mtt::tree_weight_kirchhoff(g).str();
            if (method != "kirchhoff") j["enumerate"] = mtt::tree_weight_enumerate(g, enum_cap).str();
            if (method == "both") {
                ok = j["kirchhoff"] == j["enumerate"];
                j["match"] = ok;
            }
            emit(j, format);
            return ok ? kOk : kCheckFailed;
        }
        if (mincut->parsed()) {
            const mtt::WeightedGraph g = mtt::read_graph_file(mincut_input);
            const auto cut = mtt::global_min_cut(g);
            emit({{"n", g.n()}, {"value", cut.value.str()}, {"side", cut.side.members()}}, format);
            return kOk;
        }
        if (expand->parsed()) {
            const mtt::WeightedGraph g = mtt::read_graph_file(expand_input);
            const auto ex = mtt::expand_to_multigraph(g, parse_scale(max_scale));
            nlohmann::json mult = nlohmann::json::array();
            for (const auto& [e, c] : ex.multigraph.multiplicities())
                mult.push_back({{"u", e.first}, {"v", e.second}, {"copies", c.get_str()}});
            const mtt::Integer count = mtt::count_trees_multigraph(ex.multigraph);
            const bool identity = mtt::Rational(count) ==
                                  mtt::Rational(mtt::pow(ex.scale, static_cast<unsigned>(g.n() - 1))) *
                                      mtt::tree_weight_kirchhoff(g);
            nlohmann::json j{{"n", g.n()},
                             {"scale", ex.scale.get_str()},
                             {"multiplicities", std::move(mult)},
                             {"tree_count", count.get_str()},
                             {"scaling_identity", identity}};
            if (g.n() >= 2) j["edge_connectivity"] = mtt::edge_connectivity(ex.multigraph).get_str();
            emit(j, format);
            return identity ? kOk : kCheckFailed;
        }
        if (trials->parsed()) {
            mtt::TrialOptions opts;
            opts.use_oracle = trials_oracle;
            opts.cut_cap = cut_cap;
            opts.enumeration_cap = enum_cap;
            opts.threads = threads;
            const auto summary = mtt::run_trials(trials_n, trials_count, trials_seed, opts);
            emit(mtt::trials_to_json(summary, trials_records), format);
            return summary.failures() == 0 ? kOk : kCheckFailed;
        }
        if (combine->parsed()) {
            const auto report = mtt::check_convex_combination(mtt::read_graph_file(combine_a),
                                                              mtt::read_graph_file(combine_b),
                                                              mtt::Rational::parse(combine_t));
            emit(mtt::combination_to_json(report), format);
            return report.consistent() ? kOk : kCheckFailed;
        }
    } catch (const mtt::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const mtt::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
