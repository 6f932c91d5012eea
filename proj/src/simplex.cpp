#include <optional>

#include "mtt/errors.hpp"
#include "mtt/subtour_lp.hpp"

namespace mtt {

std::size_t LpModel::add_variable(const Rational& cost, const Rational& lower, std::optional<Rational> upper)
{
    objective.push_back(cost);
    bounds.push_back({lower, std::move(upper)});
    for (auto& row : constraints) row.coefficients.emplace_back();
    return objective.size() - 1;
}

void LpModel::add_constraint(std::vector<Rational> coefficients, Relation relation, const Rational& rhs)
{
    if (coefficients.size() != variable_count()) throw InputError("constraint length does not match variable count");
    constraints.push_back({std::move(coefficients), relation, rhs});
}

namespace {

// Dense bounded-variable tableau. Columns are structurals, then one slack per
// inequality row, then one artificial per row. Every nonbasic column sits at
// a finite bound; `value` holds the current value of every column.
class Tableau {
public:
    explicit Tableau(const LpModel& model);

    void run_phase(const std::vector<Rational>& cost);
    [[nodiscard]] Rational artificial_sum() const;
    void fix_artificials();
    [[nodiscard]] ExtremePoint extract(const LpModel& model) const;

private:
    [[nodiscard]] bool is_fixed(std::size_t j) const { return upper_[j] && *upper_[j] == lower_[j]; }
    void pivot(std::size_t row, std::size_t col);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t structurals_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> lower_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<Rational> value_;
    std::vector<std::size_t> basis_;    // column basic in each row
    std::vector<std::ptrdiff_t> row_of_;  // row of a basic column, -1 if nonbasic
};

Tableau::Tableau(const LpModel& model)
{
    structurals_ = model.variable_count();
    rows_ = model.constraints.size();
    if (model.bounds.size() != structurals_) throw InputError("bounds length does not match variable count");

    std::size_t slacks = 0;
    for (const auto& c : model.constraints) {
        if (c.coefficients.size() != structurals_) throw InputError("constraint length does not match variable count");
        if (c.relation != Relation::Equal) ++slacks;
    }
    first_artificial_ = structurals_ + slacks;
    cols_ = first_artificial_ + rows_;

    lower_.assign(cols_, Rational(0));
    upper_.assign(cols_, std::nullopt);
    for (std::size_t j = 0; j < structurals_; ++j) {
        lower_[j] = model.bounds[j].lower;
        upper_[j] = model.bounds[j].upper;
        if (upper_[j] && *upper_[j] < lower_[j]) throw InfeasibleModel("variable " + std::to_string(j) + " has empty bounds");
    }
    value_ = lower_;

    t_.assign(rows_, std::vector<Rational>(cols_));
    basis_.resize(rows_);
    row_of_.assign(cols_, -1);
    std::size_t slack = structurals_;
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& c = model.constraints[i];
        auto& row = t_[i];
        for (std::size_t j = 0; j < structurals_; ++j) row[j] = c.coefficients[j];
        if (c.relation == Relation::GreaterEqual) row[slack++] = Rational(-1);
        if (c.relation == Relation::LessEqual) row[slack++] = Rational(1);

        Rational residual = c.rhs;
        for (std::size_t j = 0; j < first_artificial_; ++j)
            if (!row[j].is_zero()) residual -= row[j] * value_[j];
        if (residual.sign() < 0) {
            for (auto& a : row) a = -a;
            residual = -residual;
        }
        const std::size_t art = first_artificial_ + i;
        row[art] = Rational(1);
        value_[art] = residual;
        basis_[i] = art;
        row_of_[art] = static_cast<std::ptrdiff_t>(i);
    }
}

void Tableau::pivot(std::size_t row, std::size_t col)
{
    auto& pr = t_[row];
    const Rational inv = Rational(1) / pr[col];
    for (auto& a : pr)
        if (!a.is_zero()) a *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || t_[i][col].is_zero()) continue;
        const Rational f = t_[i][col];
        auto& r = t_[i];
        for (std::size_t j = 0; j < cols_; ++j)
            if (!pr[j].is_zero()) r[j] -= f * pr[j];
    }
    row_of_[basis_[row]] = -1;
    basis_[row] = col;
    row_of_[col] = static_cast<std::ptrdiff_t>(row);
}

void Tableau::run_phase(const std::vector<Rational>& cost)
{
    for (;;) {
        // Bland: the lowest-index improving column enters.
        std::size_t enter = cols_;
        int direction = 0;
        for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
            if (row_of_[j] >= 0 || is_fixed(j)) continue;
            Rational reduced = cost[j];
            for (std::size_t i = 0; i < rows_; ++i)
                if (!t_[i][j].is_zero() && !cost[basis_[i]].is_zero()) reduced -= cost[basis_[i]] * t_[i][j];
            const bool at_lower = value_[j] == lower_[j];
            if (reduced.sign() < 0 && at_lower) {
                enter = j;
                direction = 1;
            } else if (reduced.sign() > 0 && !at_lower) {
                enter = j;
                direction = -1;
            }
        }
        if (enter == cols_) return;

        // Ratio test; ties go to the lowest-index leaving column.
        std::optional<Rational> step;
        std::size_t leave_row = rows_;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& a = t_[i][enter];
            if (a.is_zero()) continue;
            const std::size_t b = basis_[i];
            // d(value_b) / d(step) = -direction * a
            const bool decreasing = (a.sign() > 0) == (direction > 0);
            std::optional<Rational> limit;
            if (decreasing)
                limit = (value_[b] - lower_[b]) / abs(a);
            else if (upper_[b])
                limit = (*upper_[b] - value_[b]) / abs(a);
            if (!limit) continue;
            if (!step || *limit < *step || (*limit == *step && b < basis_[leave_row])) {
                step = *limit;
                leave_row = i;
            }
        }
        const bool can_flip = upper_[enter].has_value();
        if (can_flip) {
            const Rational span = *upper_[enter] - lower_[enter];
            if (!step || span <= *step) {
                step = span;
                leave_row = rows_;
            }
        }
        if (!step) throw UnboundedModel("objective is unbounded below");

        const Rational delta = direction > 0 ? *step : -*step;
        value_[enter] += delta;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!t_[i][enter].is_zero()) value_[basis_[i]] -= t_[i][enter] * delta;

        if (leave_row == rows_) {
            value_[enter] = direction > 0 ? *upper_[enter] : lower_[enter];
            continue;
        }
        const std::size_t leaving = basis_[leave_row];
        const bool decreasing = (t_[leave_row][enter].sign() > 0) == (direction > 0);
        value_[leaving] = decreasing ? lower_[leaving] : *upper_[leaving];
        pivot(leave_row, enter);
    }
}

Rational Tableau::artificial_sum() const
{
    Rational s;
    for (std::size_t j = first_artificial_; j < cols_; ++j) s += value_[j];
    return s;
}

void Tableau::fix_artificials()
{
    for (std::size_t j = first_artificial_; j < cols_; ++j) upper_[j] = Rational(0);
}

ExtremePoint Tableau::extract(const LpModel& model) const
{
    ExtremePoint p;
    p.x.assign(value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>(structurals_));
    for (std::size_t j = 0; j < structurals_; ++j) {
        p.objective_value += model.objective[j] * p.x[j];
        if (row_of_[j] >= 0) p.basic_variables.push_back(j);
    }
    return p;
}

}  // namespace

ExtremePoint simplex_solve(const LpModel& model)
{
    Tableau tableau(model);

    const std::size_t slacks = [&] {
        std::size_t s = 0;
        for (const auto& c : model.constraints) s += c.relation != Relation::Equal ? 1 : 0;
        return s;
    }();
    const std::size_t first_artificial = model.variable_count() + slacks;
    const std::size_t cols = first_artificial + model.constraints.size();

    std::vector<Rational> phase_one(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase_one[j] = Rational(1);
    tableau.run_phase(phase_one);
    if (const Rational infeasibility = tableau.artificial_sum(); infeasibility.sign() > 0)
        throw InfeasibleModel("phase 1 optimum is " + infeasibility.str() + " > 0");
    tableau.fix_artificials();

    std::vector<Rational> phase_two(cols);
    for (std::size_t j = 0; j < model.variable_count(); ++j) phase_two[j] = model.objective[j];
    tableau.run_phase(phase_two);
    return tableau.extract(model);
}

}  // namespace mtt
