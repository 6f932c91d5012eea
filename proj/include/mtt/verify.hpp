#ifndef MTT_VERIFY_HPP
#define MTT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mtt/connectivity.hpp"
#include "mtt/graph.hpp"
#include "mtt/rational.hpp"
#include "mtt/subtour_lp.hpp"
#include "mtt/tree_weight.hpp"

namespace mtt {

/// Which hypothesis the check is run under: the full subtour LP, or only
/// the cut constraints (degrees may differ from 2, so L(X) need not be 2I - X).
enum class CheckMode { DegreeFeasible, CutOnly };

std::string to_string(CheckMode mode);
CheckMode check_mode_from_string(const std::string& text);

struct CheckOptions {
    bool use_oracle = false;
    bool expand = false;
    bool cut_only = false;
    std::size_t minor_index = 1;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    Integer max_scale = Integer(kDefaultExpansionCap);
};

struct ExpansionSection {
    Integer scale;                 ///< R
    Integer multigraph_edges;      ///< total number of copies
    Integer tree_count;            ///< spanning trees of the multigraph
    Integer edge_connectivity;     ///< of the multigraph
    Rational bound;                ///< n (2R / 2)^(n-1)
    bool scaling_identity = false; ///< tree_count == R^(n-1) * mtt_lhs
    bool connectivity_ok = false;  ///< edge_connectivity >= 2R
    bool bound_ok = false;         ///< tree_count >= bound

    friend bool operator==(const ExpansionSection&, const ExpansionSection&) = default;
};

struct OracleSection {
    Rational enumeration;
    bool matches = false;

    friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct VerificationReport {
    int n = 0;
    std::size_t edge_count = 0;
    Rational total_weight;
    CheckMode mode = CheckMode::DegreeFeasible;
    std::size_t minor_index = 1;

    std::vector<bool> degree_ok;
    std::vector<bool> bounds_ok;
    Rational min_cut_value;
    std::vector<Vertex> min_cut_side;
    bool cut_ok = false;
    bool hypothesis_holds = false;  ///< full feasibility, or cut-only feasibility in CutOnly mode

    /// Present when every weighted degree is 2: whether L(X) == 2I - X entrywise.
    std::optional<bool> laplacian_is_2i_minus_x;

    Rational mtt_lhs;  ///< det(L(X)_{-i})
    int threshold = 0;
    bool satisfied = false;  ///< mtt_lhs >= n
    bool tight = false;      ///< mtt_lhs == n

    std::optional<OracleSection> oracle;
    std::optional<ExpansionSection> expansion;

    /// True unless some check that the theory guarantees has failed: the
    /// constraint under a holding hypothesis, the oracle, the 2I - X identity,
    /// or any link of the expansion chain.
    [[nodiscard]] bool consistent() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Builds L(X) from the edge weights (never assuming 2I - X) and evaluates
/// det(L(X)_{-i}) >= n. Throws InputError for n < 3 and lets CapExceeded
/// from the oracle or the expansion propagate.
VerificationReport check_mtt_constraint(const WeightedGraph& g, const CheckOptions& options = {});

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

struct CombinationReport {
    int n = 0;
    Rational t;
    Rational det_a;
    Rational det_b;
    Rational det_combination;  ///< det((t L(A) + (1-t) L(B))_{-1})
    bool satisfied = false;    ///< det_combination >= n
    /// At t = 1/2: det(mid)^2 >= det_a * det_b.
    std::optional<bool> log_concavity;
    std::optional<Rational> squared_midpoint;

    [[nodiscard]] bool consistent() const { return satisfied && log_concavity.value_or(true); }
};

/// Throws InputError when either input is not subtour-feasible, the vertex
/// counts differ, or t is outside [0, 1].
CombinationReport check_convex_combination(const WeightedGraph& a, const WeightedGraph& b, const Rational& t);
nlohmann::json combination_to_json(const CombinationReport& report);

struct TrialOptions {
    bool use_oracle = false;
    std::size_t cut_cap = kDefaultCutCap;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

struct TrialRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    Rational objective;
    std::size_t cuts = 0;
    Rational mtt_lhs;
    bool feasible = false;
    bool satisfied = false;
    bool tight = false;
    std::optional<bool> oracle_match;  ///< absent when the support exceeds the enumeration cap
};

struct TrialsSummary {
    int n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> records;  ///< by trial index
    std::size_t satisfied = 0;
    std::size_t tight = 0;
    std::size_t oracle_checked = 0;
    std::size_t oracle_matched = 0;
    Rational min_lhs;
    Rational median_lhs;  ///< lower median

    [[nodiscard]] std::size_t failures() const;
};

/// Seed of trial `index` under master seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Samples extreme points with random costs and checks each. Output is
/// independent of the thread count.
TrialsSummary run_trials(int n, std::size_t trials, std::uint64_t seed, const TrialOptions& options = {});
nlohmann::json trials_to_json(const TrialsSummary& summary, bool include_records);

}  // namespace mtt

#endif  // MTT_VERIFY_HPP
