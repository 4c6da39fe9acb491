#pragma once

#include <array>

#include "lpiso/presentation.hpp"

namespace lpiso {

// Partial pair (f,g) of tables N x N -> N over rational-point indices,
// approximating an isometric isomorphism and its inverse.
class IsometryTable {
public:
    void set_f(const PointIndex& m, std::int64_t n, const PointIndex& v) { f_[{m, n}] = v; }
    void set_g(const PointIndex& m, std::int64_t n, const PointIndex& v) { g_[{m, n}] = v; }
    void erase_f(const PointIndex& m, std::int64_t n) { f_.erase({m, n}); }
    void erase_g(const PointIndex& m, std::int64_t n) { g_.erase({m, n}); }

    std::optional<PointIndex> f(const PointIndex& m, std::int64_t n) const { return lookup(f_, m, n); }
    std::optional<PointIndex> g(const PointIndex& m, std::int64_t n) const { return lookup(g_, m, n); }

    PointIndex f_req(const PointIndex& m, std::int64_t n) const { return require(f_, m, n, 'f'); }
    PointIndex g_req(const PointIndex& m, std::int64_t n) const { return require(g_, m, n, 'g'); }

    const std::map<std::pair<PointIndex, std::int64_t>, PointIndex>& f_entries() const { return f_; }
    const std::map<std::pair<PointIndex, std::int64_t>, PointIndex>& g_entries() const { return g_; }

    // Identity grid over the given rows, columns 0..max_n.
    static IsometryTable identity(const std::vector<PointIndex>& rows, std::int64_t max_n);

    bool operator==(const IsometryTable& o) const { return f_ == o.f_ && g_ == o.g_; }

private:
    static std::optional<PointIndex> lookup(
        const std::map<std::pair<PointIndex, std::int64_t>, PointIndex>& t, const PointIndex& m,
        std::int64_t n) {
        auto it = t.find({m, n});
        if (it == t.end()) return std::nullopt;
        return it->second;
    }
    static PointIndex require(const std::map<std::pair<PointIndex, std::int64_t>, PointIndex>& t,
                              const PointIndex& m, std::int64_t n, char which) {
        auto v = lookup(t, m, n);
        if (!v) raise(ErrorCode::GridTooSmall,
                      std::string(1, which) + "(" + m.str() + "," + std::to_string(n) + ") missing");
        return *v;
    }

    std::map<std::pair<PointIndex, std::int64_t>, PointIndex> f_, g_;
};

// Computable maps realizing terms: x_{zeta_T(i,j)} = T(x_i, x_j) exactly
// under the frozen enumeration, and zeta_0(j) = 0 hits the constant.
struct TermMaps {
    const Presentation* source = nullptr;
    const Presentation* target = nullptr;

    PointIndex add_source(const PointIndex& i, const PointIndex& j) const {
        return source->term_add(i, j);
    }
    PointIndex add_target(const PointIndex& i, const PointIndex& j) const {
        return target->term_add(i, j);
    }
    PointIndex scale_source(const Rational& s, const PointIndex& i) const {
        return source->term_scale(s, i);
    }
    PointIndex scale_target(const Rational& s, const PointIndex& i) const {
        return target->term_scale(s, i);
    }
    PointIndex const_zero(const PointIndex&) const { return PointIndex(0); }
};

enum class CondStatus { HoldsCertified, ViolatedCertified, Inconclusive };

const char* cond_status_name(CondStatus s);

struct ConditionWitness {
    std::string instance;
    DyadicInterval lhs;
    Rational threshold;
};

struct ConditionVerdict {
    std::array<CondStatus, 6> status{};
    std::array<std::optional<ConditionWitness>, 6> witness{};
    std::array<std::size_t, 6> inconclusive_count{};

    bool any_violation() const {
        for (auto s : status)
            if (s == CondStatus::ViolatedCertified) return true;
        return false;
    }
    bool all_hold() const {
        for (auto s : status)
            if (s != CondStatus::HoldsCertified) return false;
        return true;
    }
};

// Evaluates every instance of the six membership conditions with all
// quantified indices <= depth, using metric enclosures at precision k.  A
// condition is violated-certified only when an enclosure lower bound exceeds
// its threshold; inconclusive enclosures never refute.  Missing table
// entries raise GridTooSmall.
ConditionVerdict check_conditions(const IsometryTable& table, const Presentation& P0,
                                  const Presentation& P1, const TermMaps& tm, std::int64_t depth,
                                  std::int64_t k);

struct SearchResult {
    std::vector<IsometryTable> survivors;
    std::array<std::size_t, 6> prune_counts{};
    std::size_t explored = 0;
    bool budget_exhausted = false;
};

// Bounded depth-first enumeration of table prefixes over indices <= depth,
// pruning on certified violations.  Deterministic: variables in row-major
// order (f before g), candidate values ascending, capped by `value_bound`
// and a norm-ball filter on Banach presentations.
SearchResult search_tables(const Presentation& P0, const Presentation& P1, const TermMaps& tm,
                           std::int64_t depth, std::int64_t k, std::size_t budget,
                           std::int64_t value_bound);

// Phi(x_m) = lim_n x_{f(m,n)}: the column at n = k approximates the limit
// within 2^-k by the strong Cauchy condition.
std::pair<PointIndex, Rational> limit_map_from_table(const IsometryTable& table,
                                                     const Presentation& P1, const PointIndex& m,
                                                     std::int64_t k);

// Row indices a table must cover so that check_conditions at this depth
// finds every entry: the plain indices plus the term-map images.
std::vector<PointIndex> required_rows(const Presentation& P0, const TermMaps& tm,
                                      std::int64_t depth);

} // namespace lpiso
