#include "lpiso/step_function.hpp"

#include <algorithm>

namespace lpiso {

StepFunction::StepFunction() : breakpoints_{Dyadic::zero(), Dyadic::one()}, values_{Rational(0)} {}

StepFunction::StepFunction(std::vector<Dyadic> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size() + 1 || values_.empty())
        raise(ErrorCode::BadInput, "step function needs m+1 breakpoints for m pieces");
    if (!(breakpoints_.front() == Dyadic::zero()) || !(breakpoints_.back() == Dyadic::one()))
        raise(ErrorCode::BadInput, "step function must cover [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            raise(ErrorCode::BadInput, "step function breakpoints must increase");
    canonicalize();
}

StepFunction StepFunction::indicator(const Dyadic& a, const Dyadic& b) {
    if (a.sign() < 0 || b > Dyadic::one() || !(a < b))
        raise(ErrorCode::BadInput, "indicator needs 0 <= a < b <= 1");
    std::vector<Dyadic> bp;
    std::vector<Rational> vals;
    bp.push_back(Dyadic::zero());
    if (a > Dyadic::zero()) {
        bp.push_back(a);
        vals.push_back(Rational(0));
    }
    vals.push_back(Rational(1));
    if (b < Dyadic::one()) {
        bp.push_back(b);
        vals.push_back(Rational(0));
    }
    bp.push_back(Dyadic::one());
    return StepFunction(std::move(bp), std::move(vals));
}

StepFunction StepFunction::constant(const Rational& v) {
    return StepFunction({Dyadic::zero(), Dyadic::one()}, {v});
}

void StepFunction::canonicalize() {
    std::vector<Dyadic> bp{breakpoints_.front()};
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!vals.empty() && vals.back() == values_[i]) {
            bp.back() = breakpoints_[i + 1];
            continue;
        }
        vals.push_back(values_[i]);
        bp.push_back(breakpoints_[i + 1]);
    }
    breakpoints_ = std::move(bp);
    values_ = std::move(vals);
}

Dyadic StepFunction::support_measure() const {
    Dyadic total = Dyadic::zero();
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != 0) total = total + piece_length(i);
    return total;
}

void StepFunction::align(const StepFunction& f, const StepFunction& g,
                         std::vector<Dyadic>& grid,
                         std::vector<Rational>& fv, std::vector<Rational>& gv) {
    grid.clear();
    std::merge(f.breakpoints_.begin(), f.breakpoints_.end(),
               g.breakpoints_.begin(), g.breakpoints_.end(), std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    fv.clear();
    gv.clear();
    std::size_t fi = 0, gi = 0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        while (f.breakpoints_[fi + 1] <= grid[i]) ++fi;
        while (g.breakpoints_[gi + 1] <= grid[i]) ++gi;
        fv.push_back(f.values_[fi]);
        gv.push_back(g.values_[gi]);
    }
}

StepFunction StepFunction::add(const StepFunction& o) const {
    std::vector<Dyadic> grid;
    std::vector<Rational> a, b;
    align(*this, o, grid, a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return StepFunction(std::move(grid), std::move(a));
}

StepFunction StepFunction::sub(const StepFunction& o) const {
    std::vector<Dyadic> grid;
    std::vector<Rational> a, b;
    align(*this, o, grid, a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return StepFunction(std::move(grid), std::move(a));
}

StepFunction StepFunction::scale(const Rational& c) const {
    std::vector<Rational> vals = values_;
    for (auto& v : vals) v *= c;
    return StepFunction(breakpoints_, std::move(vals));
}

StepFunction StepFunction::abs() const {
    std::vector<Rational> vals = values_;
    for (auto& v : vals) v = rat_abs(v);
    return StepFunction(breakpoints_, std::move(vals));
}

bool StepFunction::disjoint_from(const StepFunction& o) const {
    std::vector<Dyadic> grid;
    std::vector<Rational> a, b;
    align(*this, o, grid, a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

bool StepFunction::agrees_on_support(const StepFunction& g) const {
    std::vector<Dyadic> grid;
    std::vector<Rational> a, b;
    align(*this, g, grid, a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && a[i] != b[i]) return false;
    return true;
}

std::int64_t StepFunction::breakpoint_level() const {
    std::int64_t level = 0;
    for (const auto& t : breakpoints_)
        if (t.exp() < 0) level = std::max(level, -t.exp());
    return level;
}

std::vector<Rational> StepFunction::values_on_grid(std::int64_t level) const {
    if (breakpoint_level() > level)
        raise(ErrorCode::BadInput, "grid coarser than step function breakpoints");
    std::vector<Rational> cells;
    cells.reserve(static_cast<std::size_t>(1) << level);
    std::size_t piece = 0;
    for (BigInt j = 0; j < (BigInt(1) << static_cast<unsigned>(level)); ++j) {
        Dyadic left(j, -level);
        while (breakpoints_[piece + 1] <= left) ++piece;
        cells.push_back(values_[piece]);
    }
    return cells;
}

StepFunction StepFunction::from_grid(std::int64_t level, const std::vector<Rational>& cell_values) {
    if (cell_values.size() != (static_cast<std::size_t>(1) << level))
        raise(ErrorCode::BadInput, "grid value count must be 2^level");
    std::vector<Dyadic> bp;
    for (std::size_t j = 0; j <= cell_values.size(); ++j) bp.emplace_back(BigInt(j), -level);
    return StepFunction(std::move(bp), cell_values);
}

Rational StepFunction::power_sum_exact(unsigned p) const {
    Rational total(0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) continue;
        total += rat_pow(rat_abs(values_[i]), p) * piece_length(i);
    }
    return total;
}

DyadicInterval StepFunction::power_sum(const Exponent& p, std::int64_t k) const {
    if (p.is_integer()) return DyadicInterval::enclose(power_sum_exact(p.a()), k);
    // Piece lengths total 1, so per-piece enclosures at 2^-k keep the summed
    // width within 2^-k after length scaling.
    DyadicInterval total = DyadicInterval::point(0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) continue;
        DyadicInterval term = pow_of_rational(rat_abs(values_[i]), p.a(), p.b(), k);
        total = interval_add(total, interval_scale(term, piece_length(i)));
    }
    return total;
}

std::string StepFunction::to_literal() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        s += to_string(breakpoints_[i].to_rational());
        s += " ";
        s += to_string(values_[i]);
        s += " ";
    }
    s += "1}";
    return s;
}

} // namespace lpiso
