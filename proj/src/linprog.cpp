#include "suboplex/linprog.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>

namespace suboplex {

namespace {

// Phase-one simplex on the standard-form tableau.  Variables are split into
// nonnegative parts, every row is normalized to b >= 0 and given an
// artificial variable; feasibility holds iff the artificial objective
// reaches zero.  Bland's rule guards against cycling.
class PhaseOneSimplex {
public:
    PhaseOneSimplex(const std::vector<LinearConstraint>& cons, int num_vars)
        : nvars_(2 * num_vars), rows_(cons.size()) {
        // columns: x+ (num_vars), x- (num_vars), slacks (one per inequality), artificials
        int num_slacks = 0;
        for (const auto& c : cons)
            if (c.rel != Rel::Eq) ++num_slacks;
        slack0_ = nvars_;
        art0_ = nvars_ + num_slacks;
        cols_ = art0_ + static_cast<int>(rows_);
        tab_.assign(rows_, std::vector<Rat>(static_cast<std::size_t>(cols_) + 1, Rat(0)));
        basis_.assign(rows_, -1);
        int slack = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& c = cons[r];
            if (static_cast<int>(c.coeffs.size()) != num_vars)
                throw shape_error("solve_feasibility: constraint arity mismatch");
            Rat sign = 1;
            // normalize to  a.x (rel) b  with b >= 0
            Rat b = c.rhs;
            Rel rel = c.rel;
            if (b < 0) {
                sign = -1;
                b = -b;
                if (rel == Rel::Ge) rel = Rel::Le;
                else if (rel == Rel::Le) rel = Rel::Ge;
            }
            auto& row = tab_[r];
            for (int j = 0; j < num_vars; ++j) {
                row[static_cast<std::size_t>(j)] = sign * c.coeffs[static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(num_vars + j)] = -sign * c.coeffs[static_cast<std::size_t>(j)];
            }
            if (rel == Rel::Ge) row[static_cast<std::size_t>(slack0_ + slack++)] = -1;
            else if (rel == Rel::Le) row[static_cast<std::size_t>(slack0_ + slack++)] = 1;
            row[static_cast<std::size_t>(art0_) + r] = 1;
            row[static_cast<std::size_t>(cols_)] = b;
            basis_[r] = art0_ + static_cast<int>(r);
        }
        // objective: minimize sum of artificials, expressed over the basis
        obj_.assign(static_cast<std::size_t>(cols_) + 1, Rat(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(cols_); ++j)
                obj_[j] += tab_[r][j];
        for (std::size_t r = 0; r < rows_; ++r)
            obj_[static_cast<std::size_t>(art0_) + r] = 0;
    }

    std::optional<std::vector<Rat>> run(int num_vars) {
        while (true) {
            int pivot_col = -1;
            for (int j = 0; j < art0_; ++j) // artificials never re-enter
                if (obj_[static_cast<std::size_t>(j)] > 0) { pivot_col = j; break; } // Bland
            if (pivot_col < 0) break;
            int pivot_row = -1;
            Rat best;
            for (std::size_t r = 0; r < rows_; ++r) {
                const Rat& a = tab_[r][static_cast<std::size_t>(pivot_col)];
                if (a <= 0) continue;
                Rat ratio = tab_[r][static_cast<std::size_t>(cols_)] / a;
                if (pivot_row < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[static_cast<std::size_t>(pivot_row)])) {
                    pivot_row = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (pivot_row < 0) break; // unbounded objective direction; cannot happen for phase one
            pivot(static_cast<std::size_t>(pivot_row), pivot_col);
        }
        // feasible iff all artificials evaluate to zero
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] >= art0_ && tab_[r][static_cast<std::size_t>(cols_)] != 0)
                return std::nullopt;
        std::vector<Rat> x(static_cast<std::size_t>(num_vars), Rat(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            int v = basis_[r];
            if (v < nvars_) {
                const Rat& val = tab_[r][static_cast<std::size_t>(cols_)];
                if (v < nvars_ / 2) x[static_cast<std::size_t>(v)] += val;
                else x[static_cast<std::size_t>(v - nvars_ / 2)] -= val;
            }
        }
        return x;
    }

private:
    void pivot(std::size_t pr, int pc) {
        auto& prow = tab_[pr];
        Rat inv = prow[static_cast<std::size_t>(pc)];
        for (auto& v : prow) v /= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            Rat factor = tab_[r][static_cast<std::size_t>(pc)];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < prow.size(); ++j) tab_[r][j] -= factor * prow[j];
        }
        Rat of = obj_[static_cast<std::size_t>(pc)];
        if (of != 0)
            for (std::size_t j = 0; j < prow.size(); ++j) obj_[j] -= of * prow[j];
        basis_[pr] = pc;
    }

    int nvars_;
    std::size_t rows_;
    int cols_ = 0, slack0_ = 0, art0_ = 0;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> obj_;
    std::vector<int> basis_;
};

} // namespace

std::optional<std::vector<Rat>> solve_feasibility(const std::vector<LinearConstraint>& constraints,
                                                  int num_vars) {
    if (constraints.empty()) return std::vector<Rat>(static_cast<std::size_t>(num_vars), Rat(0));
    PhaseOneSimplex simplex(constraints, num_vars);
    auto x = simplex.run(num_vars);
    if (x) {
        // sanity: the witness must satisfy every constraint exactly
        for (const auto& c : constraints) {
            Rat lhs = 0;
            for (int j = 0; j < num_vars; ++j) lhs += c.coeffs[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
            bool ok = c.rel == Rel::Eq ? lhs == c.rhs : (c.rel == Rel::Ge ? lhs >= c.rhs : lhs <= c.rhs);
            if (!ok) throw discrepancy_error("solve_feasibility: simplex produced an invalid witness");
        }
    }
    return x;
}

bool is_feasible(const std::vector<LinearConstraint>& constraints, int num_vars) {
    return solve_feasibility(constraints, num_vars).has_value();
}

} // namespace suboplex
