#include "mtt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mtt/errors.hpp"
#include "mtt/matrix.hpp"

namespace mtt {

std::string to_string(CheckMode mode) { return mode == CheckMode::CutOnly ? "cut-only" : "degree-feasible"; }

CheckMode check_mode_from_string(const std::string& text)
{
    if (text == "cut-only") return CheckMode::CutOnly;
    if (text == "degree-feasible") return CheckMode::DegreeFeasible;
    throw ParseError("unknown check mode '" + text + "'");
}

bool VerificationReport::consistent() const
{
    if (hypothesis_holds && !satisfied) return false;
    if (oracle && !oracle->matches) return false;
    if (laplacian_is_2i_minus_x && !*laplacian_is_2i_minus_x) return false;
    if (expansion) {
        if (!expansion->scaling_identity) return false;
        if (cut_ok && (!expansion->connectivity_ok || !expansion->bound_ok)) return false;
    }
    return true;
}

VerificationReport check_mtt_constraint(const WeightedGraph& g, const CheckOptions& options)
{
    if (g.n() < 3) throw InputError("check_mtt_constraint needs n >= 3");

    VerificationReport r;
    r.n = g.n();
    r.edge_count = g.edge_count();
    r.total_weight = g.total_weight();
    r.mode = options.cut_only ? CheckMode::CutOnly : CheckMode::DegreeFeasible;
    r.minor_index = options.minor_index;

    const FeasibilityReport feas = check_subtour_feasible(g);
    r.degree_ok = feas.degree_ok;
    r.bounds_ok = feas.bounds_ok;
    r.min_cut_value = feas.min_cut.value;
    r.min_cut_side = feas.min_cut.side.members();
    r.cut_ok = feas.cut_ok;
    r.hypothesis_holds = options.cut_only ? (feas.bounds_hold() && feas.cut_ok) : feas.feasible();

    const RationalMatrix lap = laplacian(g);
    if (!options.cut_only && feas.degrees_hold()) {
        RationalMatrix two_i_minus_x = Rational(2) * RationalMatrix::identity(lap.order());
        two_i_minus_x -= adjacency_matrix(g);
        r.laplacian_is_2i_minus_x = lap == two_i_minus_x;
    }

    r.mtt_lhs = determinant(delete_row_col(lap, options.minor_index));
    r.threshold = g.n();
    r.satisfied = r.mtt_lhs >= Rational(r.threshold);
    r.tight = r.mtt_lhs == Rational(r.threshold);

    if (options.use_oracle) {
        OracleSection o;
        o.enumeration = tree_weight_enumerate(g, options.enumeration_cap);
        o.matches = o.enumeration == r.mtt_lhs;
        r.oracle = o;
    }

    if (options.expand) {
        const ExpansionResult ex = expand_to_multigraph(g, options.max_scale);
        ExpansionSection s;
        s.scale = ex.scale;
        s.multigraph_edges = ex.multigraph.edge_total();
        s.tree_count = count_trees_multigraph(ex.multigraph);
        s.edge_connectivity = edge_connectivity(ex.multigraph);
        const Integer k = 2 * ex.scale;
        s.bound = ok_thomassen_bound(g.n(), k);
        // The minor of L(X_{-1}) is used here regardless of --minor-index.
        const Rational lhs_first = options.minor_index == 1 ? r.mtt_lhs : tree_weight_kirchhoff(g, 1);
        s.scaling_identity = Rational(s.tree_count) == Rational(pow(ex.scale, static_cast<unsigned>(g.n() - 1))) * lhs_first;
        s.connectivity_ok = s.edge_connectivity >= k;
        s.bound_ok = Rational(s.tree_count) >= s.bound;
        r.expansion = s;
    }
    return r;
}

namespace {

nlohmann::json bools(const std::vector<bool>& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (bool b : v) a.push_back(b);
    return a;
}

std::vector<bool> bools_from(const nlohmann::json& a)
{
    std::vector<bool> v;
    for (const auto& b : a) v.push_back(b.get<bool>());
    return v;
}

Rational rational_from(const nlohmann::json& j) { return Rational::parse(j.get<std::string>()); }
Integer integer_from(const nlohmann::json& j) { return Rational::parse(j.get<std::string>()).numerator(); }

}  // namespace

nlohmann::json report_to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["input"] = {{"n", r.n}, {"edges", r.edge_count}, {"total_weight", r.total_weight.str()}};
    j["mode"] = to_string(r.mode);
    j["minor_index"] = r.minor_index;
    j["feasibility"] = {
        {"degree_ok", bools(r.degree_ok)},
        {"bounds_ok", bools(r.bounds_ok)},
        {"min_cut", {{"value", r.min_cut_value.str()}, {"side", r.min_cut_side}}},
        {"cut_ok", r.cut_ok},
        {"hypothesis_holds", r.hypothesis_holds},
    };
    j["laplacian_is_2i_minus_x"] =
        r.laplacian_is_2i_minus_x ? nlohmann::json(*r.laplacian_is_2i_minus_x) : nlohmann::json(nullptr);
    j["mtt_lhs"] = r.mtt_lhs.str();
    j["threshold"] = r.threshold;
    j["satisfied"] = r.satisfied;
    j["tight"] = r.tight;
    j["consistent"] = r.consistent();
    if (r.oracle) j["oracle"] = {{"enumeration", r.oracle->enumeration.str()}, {"matches", r.oracle->matches}};
    if (r.expansion) {
        const auto& e = *r.expansion;
        j["expansion"] = {
            {"scale", e.scale.get_str()},
            {"multigraph_edges", e.multigraph_edges.get_str()},
            {"tree_count", e.tree_count.get_str()},
            {"edge_connectivity", e.edge_connectivity.get_str()},
            {"bound", e.bound.str()},
            {"scaling_identity", e.scaling_identity},
            {"connectivity_ok", e.connectivity_ok},
            {"bound_ok", e.bound_ok},
        };
    }
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    try {
        VerificationReport r;
        r.n = j.at("input").at("n").get<int>();
        r.edge_count = j.at("input").at("edges").get<std::size_t>();
        r.total_weight = rational_from(j.at("input").at("total_weight"));
        r.mode = check_mode_from_string(j.at("mode").get<std::string>());
        r.minor_index = j.at("minor_index").get<std::size_t>();
        const auto& f = j.at("feasibility");
        r.degree_ok = bools_from(f.at("degree_ok"));
        r.bounds_ok = bools_from(f.at("bounds_ok"));
        r.min_cut_value = rational_from(f.at("min_cut").at("value"));
        r.min_cut_side = f.at("min_cut").at("side").get<std::vector<Vertex>>();
        r.cut_ok = f.at("cut_ok").get<bool>();
        r.hypothesis_holds = f.at("hypothesis_holds").get<bool>();
        if (!j.at("laplacian_is_2i_minus_x").is_null()) r.laplacian_is_2i_minus_x = j.at("laplacian_is_2i_minus_x").get<bool>();
        r.mtt_lhs = rational_from(j.at("mtt_lhs"));
        r.threshold = j.at("threshold").get<int>();
        r.satisfied = j.at("satisfied").get<bool>();
        r.tight = j.at("tight").get<bool>();
        if (j.contains("oracle"))
            r.oracle = OracleSection{rational_from(j.at("oracle").at("enumeration")), j.at("oracle").at("matches").get<bool>()};
        if (j.contains("expansion")) {
            const auto& e = j.at("expansion");
            ExpansionSection s;
            s.scale = integer_from(e.at("scale"));
            s.multigraph_edges = integer_from(e.at("multigraph_edges"));
            s.tree_count = integer_from(e.at("tree_count"));
            s.edge_connectivity = integer_from(e.at("edge_connectivity"));
            s.bound = rational_from(e.at("bound"));
            s.scaling_identity = e.at("scaling_identity").get<bool>();
            s.connectivity_ok = e.at("connectivity_ok").get<bool>();
            s.bound_ok = e.at("bound_ok").get<bool>();
            r.expansion = s;
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("verification report: ") + e.what());
    }
}

CombinationReport check_convex_combination(const WeightedGraph& a, const WeightedGraph& b, const Rational& t)
{
    if (a.n() != b.n()) throw InputError("combine: vertex counts differ");
    if (t.sign() < 0 || t > Rational(1)) throw InputError("combine: t = " + t.str() + " outside [0, 1]");
    if (a.n() < 3) throw InputError("combine needs n >= 3");
    if (!check_subtour_feasible(a).feasible()) throw InputError("combine: first point is not subtour-feasible");
    if (!check_subtour_feasible(b).feasible()) throw InputError("combine: second point is not subtour-feasible");

    CombinationReport r;
    r.n = a.n();
    r.t = t;
    const RationalMatrix la = delete_row_col(laplacian(a), 1);
    const RationalMatrix lb = delete_row_col(laplacian(b), 1);
    r.det_a = determinant(la);
    r.det_b = determinant(lb);
    r.det_combination = determinant(t * la + (Rational(1) - t) * lb);
    r.satisfied = r.det_combination >= Rational(r.n);
    if (t == Rational(Integer(1), Integer(2))) {
        r.squared_midpoint = r.det_combination * r.det_combination;
        r.log_concavity = *r.squared_midpoint >= r.det_a * r.det_b;
    }
    return r;
}

nlohmann::json combination_to_json(const CombinationReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["t"] = r.t.str();
    j["det_a"] = r.det_a.str();
    j["det_b"] = r.det_b.str();
    j["det_combination"] = r.det_combination.str();
    j["threshold"] = r.n;
    j["satisfied"] = r.satisfied;
    if (r.log_concavity) {
        j["log_concavity"] = {{"squared_midpoint", r.squared_midpoint->str()},
                              {"product", (r.det_a * r.det_b).str()},
                              {"holds", *r.log_concavity}};
    }
    return j;
}

std::size_t TrialsSummary::failures() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const TrialRecord& t) {
        return !t.feasible || !t.satisfied || (t.oracle_match && !*t.oracle_match);
    }));
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index)
{
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

namespace {

TrialRecord run_one(int n, std::size_t index, std::uint64_t master, const TrialOptions& options)
{
    TrialRecord rec;
    rec.index = index;
    rec.seed = trial_seed(master, index);
    const SubtourSolution sol = solve_subtour_lp(random_instance(n, rec.seed), options.cut_cap);
    rec.objective = sol.point.objective_value;
    rec.cuts = sol.cuts_added;
    const WeightedGraph g = point_to_graph(n, sol.point.x);
    CheckOptions check;
    check.use_oracle = options.use_oracle && g.edge_count() <= options.enumeration_cap;
    check.enumeration_cap = options.enumeration_cap;
    const VerificationReport report = check_mtt_constraint(g, check);
    rec.mtt_lhs = report.mtt_lhs;
    rec.feasible = report.hypothesis_holds;
    rec.satisfied = report.satisfied;
    rec.tight = report.tight;
    if (report.oracle) rec.oracle_match = report.oracle->matches;
    return rec;
}

}  // namespace

TrialsSummary run_trials(int n, std::size_t trials, std::uint64_t seed, const TrialOptions& options)
{
    if (n < 3) throw InputError("trials need n >= 3");
    if (trials < 1) throw InputError("trials need at least one trial");

    TrialsSummary s;
    s.n = n;
    s.trials = trials;
    s.seed = seed;
    s.records.resize(trials);

    unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < trials; i = next++) {
            try {
                s.records[i] = run_one(n, i, seed, options);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = trials;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Rational> values;
    for (const auto& rec : s.records) {
        s.satisfied += rec.satisfied ? 1 : 0;
        s.tight += rec.tight ? 1 : 0;
        if (rec.oracle_match) {
            ++s.oracle_checked;
            s.oracle_matched += *rec.oracle_match ? 1 : 0;
        }
        values.push_back(rec.mtt_lhs);
    }
    std::sort(values.begin(), values.end());
    s.min_lhs = values.front();
    s.median_lhs = values[(values.size() - 1) / 2];
    return s;
}

nlohmann::json trials_to_json(const TrialsSummary& s, bool include_records)
{
    nlohmann::json j;
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["satisfied"] = s.satisfied;
    j["failures"] = s.failures();
    j["tight"] = s.tight;
    j["oracle_checked"] = s.oracle_checked;
    j["oracle_matched"] = s.oracle_matched;
    j["min_mtt_lhs"] = s.min_lhs.str();
    j["median_mtt_lhs"] = s.median_lhs.str();
    if (include_records) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : s.records) {
            nlohmann::json item{{"index", r.index},       {"seed", r.seed},         {"objective", r.objective.str()},
                                {"cuts", r.cuts},         {"mtt_lhs", r.mtt_lhs.str()}, {"feasible", r.feasible},
                                {"satisfied", r.satisfied}, {"tight", r.tight}};
            item["oracle_match"] = r.oracle_match ? nlohmann::json(*r.oracle_match) : nlohmann::json(nullptr);
            list.push_back(std::move(item));
        }
        j["records"] = std::move(list);
    }
    return j;
}

}  // namespace mtt
