#pragma once

#include <string>
#include <vector>

#include "lpiso/dyadic.hpp"
#include "lpiso/interval.hpp"

namespace lpiso {

// Rational step function on [0,1] with dyadic breakpoints
// 0 = t_0 < ... < t_m = 1 and one value per piece [t_i, t_{i+1}).
// Canonical form: adjacent pieces never share a value, so a.e.-equality
// of rational points is plain representational equality.
class StepFunction {
public:
    // The zero function: one piece [0,1] with value 0.
    StepFunction();

    StepFunction(std::vector<Dyadic> breakpoints, std::vector<Rational> values);

    // Indicator of the dyadic interval [a, b].
    static StepFunction indicator(const Dyadic& a, const Dyadic& b);

    static StepFunction constant(const Rational& v);

    std::size_t piece_count() const { return values_.size(); }
    const std::vector<Dyadic>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const { return values_.size() == 1 && values_[0] == 0; }

    Dyadic piece_length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

    // Total length of the (finitely many) pieces where the value is nonzero.
    Dyadic support_measure() const;

    StepFunction add(const StepFunction& o) const;
    StepFunction sub(const StepFunction& o) const;
    StepFunction scale(const Rational& c) const;
    StepFunction abs() const;

    // Supports intersect in measure zero (shared endpoints do not count).
    bool disjoint_from(const StepFunction& o) const;

    // Agrees with g on every piece where this function is nonzero.
    bool agrees_on_support(const StepFunction& g) const;

    // Refine both partitions to a common breakpoint grid; returns the grid
    // plus aligned value lists.
    static void align(const StepFunction& f, const StepFunction& g,
                      std::vector<Dyadic>& grid,
                      std::vector<Rational>& fv, std::vector<Rational>& gv);

    // Finest dyadic level appearing among the breakpoints (0 for [0,1]).
    std::int64_t breakpoint_level() const;

    // Values on the full dyadic grid of 2^level equal pieces; requires
    // breakpoint_level() <= level.
    std::vector<Rational> values_on_grid(std::int64_t level) const;

    static StepFunction from_grid(std::int64_t level, const std::vector<Rational>& cell_values);

    // Sum of |value|^p * piece length for integer p, as an exact rational.
    Rational power_sum_exact(unsigned p) const;

    // Enclosure of the same sum for p = a/b, width <= 2^-k.
    DyadicInterval power_sum(const Exponent& p, std::int64_t k) const;

    bool operator==(const StepFunction& o) const {
        return breakpoints_ == o.breakpoints_ && values_ == o.values_;
    }

    std::string to_literal() const;

private:
    void canonicalize();

    std::vector<Dyadic> breakpoints_;
    std::vector<Rational> values_;
};

} // namespace lpiso
