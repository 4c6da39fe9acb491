#include "lpiso/r_class.hpp"

#include <algorithm>
#include <set>

namespace lpiso {

IsometryTable IsometryTable::identity(const std::vector<PointIndex>& rows, std::int64_t max_n) {
    IsometryTable t;
    for (const auto& m : rows)
        for (std::int64_t n = 0; n <= max_n; ++n) {
            t.set_f(m, n, m);
            t.set_g(m, n, m);
        }
    return t;
}

const char* cond_status_name(CondStatus s) {
    switch (s) {
        case CondStatus::HoldsCertified: return "holds-certified";
        case CondStatus::ViolatedCertified: return "violated-certified";
        case CondStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

Rational pow2(std::int64_t e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(1, BigInt(1) << (-e));
}

DyadicInterval interval_max(const DyadicInterval& a, const DyadicInterval& b) {
    DyadicInterval r(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()), 0);
    r.refresh_level();
    return r;
}

// Shared instance walker for the six conditions.  Updates per-condition
// verdicts; missing table entries either raise GridTooSmall or skip the
// instance, depending on the mode.  Metric enclosures are memoized.
class ConditionEvaluator {
public:
    ConditionEvaluator(const IsometryTable& table, const Presentation& P0, const Presentation& P1,
                       const TermMaps& tm, std::int64_t depth, std::int64_t k, bool skip_missing)
        : table_(table), P0_(P0), P1_(P1), tm_(tm), depth_(depth), k_(k), skip_missing_(skip_missing) {}

    ConditionVerdict run() {
        verdict_ = ConditionVerdict{};
        for (auto& s : verdict_.status) s = CondStatus::HoldsCertified;
        condition1();
        condition2();
        condition3();
        if (P0_.kind() == Presentation::Kind::Banach && P1_.kind() == Presentation::Kind::Banach) {
            condition4();
            condition5();
            condition6();
        }
        return verdict_;
    }

private:
    std::optional<PointIndex> f(const PointIndex& m, std::int64_t n) {
        auto v = table_.f(m, n);
        if (!v && !skip_missing_) table_.f_req(m, n);
        return v;
    }
    std::optional<PointIndex> g(const PointIndex& m, std::int64_t n) {
        auto v = table_.g(m, n);
        if (!v && !skip_missing_) table_.g_req(m, n);
        return v;
    }

    const DyadicInterval& d0(const PointIndex& i, const PointIndex& j) {
        return cached(cache0_, P0_, i, j);
    }
    const DyadicInterval& d1(const PointIndex& i, const PointIndex& j) {
        return cached(cache1_, P1_, i, j);
    }
    const DyadicInterval& cached(std::map<std::pair<PointIndex, PointIndex>, DyadicInterval>& cache,
                                 const Presentation& pres, const PointIndex& i, const PointIndex& j) {
        auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, pres.eval_metric(key.first, key.second, k_)).first;
        return it->second;
    }

    void judge(std::size_t cond, const DyadicInterval& lhs, const Rational& threshold,
               const std::string& instance) {
        if (lhs.certainly_gt(threshold)) {
            if (verdict_.status[cond] != CondStatus::ViolatedCertified) {
                verdict_.status[cond] = CondStatus::ViolatedCertified;
                verdict_.witness[cond] = ConditionWitness{instance, lhs, threshold};
            }
        } else if (!lhs.certainly_le(threshold)) {
            if (verdict_.status[cond] == CondStatus::HoldsCertified)
                verdict_.status[cond] = CondStatus::Inconclusive;
            ++verdict_.inconclusive_count[cond];
        }
    }

    // (1) consecutive columns are strongly Cauchy.
    void condition1() {
        for (std::int64_t m = 0; m <= depth_; ++m)
            for (std::int64_t n = 0; n + 1 <= depth_; ++n) {
                auto fa = f(m, n), fb = f(m, n + 1);
                auto ga = g(m, n), gb = g(m, n + 1);
                if (!fa || !fb || !ga || !gb) continue;
                auto lhs = interval_max(d1(*fa, *fb), d0(*ga, *gb));
                judge(0, lhs, pow2(-(n + 1)),
                      "m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
    }

    // (2) distances are preserved within column tolerances.
    void condition2() {
        for (std::int64_t m = 0; m <= depth_; ++m)
            for (std::int64_t mp = 0; mp <= depth_; ++mp)
                for (std::int64_t n = 0; n <= depth_; ++n)
                    for (std::int64_t np = 0; np <= depth_; ++np) {
                        auto fa = f(m, n), fb = f(mp, np);
                        if (!fa || !fb) continue;
                        auto lhs = interval_abs(interval_sub(d0(m, mp), d1(*fa, *fb)));
                        judge(1, lhs, pow2(-n) + pow2(-np),
                              "m=" + std::to_string(m) + " m'=" + std::to_string(mp) +
                                  " n=" + std::to_string(n) + " n'=" + std::to_string(np));
                    }
    }

    // (3) f and g are approximate inverses.
    void condition3() {
        for (std::int64_t m = 0; m <= depth_; ++m)
            for (std::int64_t n = 0; n <= depth_; ++n)
                for (std::int64_t np = 0; np <= depth_; ++np) {
                    auto fm = f(m, n);
                    auto gm = g(m, n);
                    if (!fm || !gm) continue;
                    auto back = g(*fm, np);
                    auto forth = f(*gm, np);
                    if (!back || !forth) continue;
                    auto lhs = interval_max(d0(m, *back), d1(m, *forth));
                    judge(2, lhs, pow2(-n) + pow2(-np),
                          "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                              " n'=" + std::to_string(np));
                }
    }

    std::set<Rational> term_scalars() const {
        std::set<Rational> scalars;
        for (std::int64_t t = 0; t <= depth_; ++t) {
            Term term = decode_term(PointIndex(t));
            for (const auto& [i, c] : term.coeffs()) scalars.insert(c);
        }
        return scalars;
    }

    // (4) operations are preserved.  The threshold shrinks as m grows, so
    // per tuple only the largest admissible m decides all smaller ones.
    void condition4() {
        Signature sig = Signature::banach();
        for (std::int64_t j1 = 0; j1 <= depth_; ++j1)
            for (std::int64_t j2 = 0; j2 <= depth_; ++j2) {
                PointIndex row = tm_.add_source(PointIndex(j1), PointIndex(j2));
                for (std::int64_t kk = 0; kk <= depth_; ++kk)
                    for (std::int64_t k1 = 0; k1 <= depth_; ++k1)
                        for (std::int64_t k2 = 0; k2 <= depth_; ++k2) {
                            std::int64_t m = std::min({k1, k2, depth_});
                            auto lhsrow = f(row, kk);
                            auto a = f(PointIndex(j1), k1), b = f(PointIndex(j2), k2);
                            if (!lhsrow || !a || !b) continue;
                            PointIndex rhs = tm_.add_target(*a, *b);
                            judge(3, d1(*lhsrow, rhs), pow2(-(kk + 1)) + pow2(-m),
                                  "+ j1=" + std::to_string(j1) + " j2=" + std::to_string(j2) +
                                      " k=" + std::to_string(kk) + " k1=" + std::to_string(k1) +
                                      " k2=" + std::to_string(k2) + " m=" + std::to_string(m));
                        }
            }
        for (const Rational& s : term_scalars()) {
            std::int64_t shift = sig.modulus(Signature::scalar_symbol(s), 0);
            for (std::int64_t j = 0; j <= depth_; ++j) {
                PointIndex row = tm_.scale_source(s, PointIndex(j));
                for (std::int64_t kk = 0; kk <= depth_; ++kk)
                    for (std::int64_t k1 = 0; k1 <= depth_; ++k1) {
                        std::int64_t m = std::min(depth_, k1 + 1 - shift);
                        if (m < 0) continue;
                        auto lhsrow = f(row, kk);
                        auto a = f(PointIndex(j), k1);
                        if (!lhsrow || !a) continue;
                        PointIndex rhs = tm_.scale_target(s, *a);
                        judge(3, d1(*lhsrow, rhs), pow2(-(kk + 1)) + pow2(-m),
                              "*" + to_string(s) + " j=" + std::to_string(j) +
                                  " k=" + std::to_string(kk) + " k1=" + std::to_string(k1) +
                                  " m=" + std::to_string(m));
                    }
            }
        }
    }

    // (5) the norm functional is preserved.
    void condition5() {
        for (std::int64_t j = 0; j <= depth_; ++j)
            for (std::int64_t k1 = 0; k1 <= depth_; ++k1) {
                std::int64_t m = std::min(depth_, k1 + 1);
                auto a = f(PointIndex(j), k1);
                if (!a) continue;
                auto lhs = interval_abs(interval_sub(P0_.eval_functional("norm", PointIndex(j), k_),
                                                     P1_.eval_functional("norm", *a, k_)));
                judge(4, lhs, pow2(-m),
                      "j=" + std::to_string(j) + " k1=" + std::to_string(k1) + " m=" + std::to_string(m));
            }
    }

    // (6) the constant is preserved; the threshold shrinks as j grows.
    void condition6() {
        for (std::int64_t kk = 0; kk <= depth_; ++kk) {
            std::int64_t j = depth_;
            auto a = f(tm_.const_zero(PointIndex(j)), kk);
            if (!a) continue;
            judge(5, d1(PointIndex(0), *a), pow2(1 - j) + pow2(-(kk + 1)),
                  "j=" + std::to_string(j) + " k=" + std::to_string(kk));
        }
    }

    const IsometryTable& table_;
    const Presentation& P0_;
    const Presentation& P1_;
    const TermMaps& tm_;
    std::int64_t depth_;
    std::int64_t k_;
    bool skip_missing_;
    ConditionVerdict verdict_;
    std::map<std::pair<PointIndex, PointIndex>, DyadicInterval> cache0_, cache1_;
};

} // namespace

ConditionVerdict check_conditions(const IsometryTable& table, const Presentation& P0,
                                  const Presentation& P1, const TermMaps& tm, std::int64_t depth,
                                  std::int64_t k) {
    return ConditionEvaluator(table, P0, P1, tm, depth, k, false).run();
}

namespace {

struct Variable {
    bool is_f;
    std::int64_t m, n;
};

// Candidate images for row m: indices whose norm enclosure is not certifiably
// outside the condition-(2) slack around the source norm.
std::vector<PointIndex> candidate_values(const Presentation& source, const Presentation& target,
                                         std::int64_t m, std::int64_t n, std::int64_t depth,
                                         std::int64_t k, std::int64_t value_bound) {
    std::vector<PointIndex> out;
    if (target.kind() == Presentation::Kind::FiniteMetric) {
        std::int64_t count = static_cast<std::int64_t>(target.point_cardinality());
        for (std::int64_t v = 0; v < std::min(count, value_bound); ++v) out.emplace_back(v);
        return out;
    }
    Rational slack = Rational(1, BigInt(1) << n) + Rational(8, BigInt(1) << depth);
    auto source_norm = source.eval_functional("norm", PointIndex(m), k);
    for (std::int64_t v = 0; v < value_bound; ++v) {
        auto target_norm = target.eval_functional("norm", PointIndex(v), k);
        auto gap = interval_abs(interval_sub(source_norm, target_norm));
        if (gap.certainly_gt(slack)) continue;
        out.emplace_back(v);
    }
    return out;
}

} // namespace

SearchResult search_tables(const Presentation& P0, const Presentation& P1, const TermMaps& tm,
                           std::int64_t depth, std::int64_t k, std::size_t budget,
                           std::int64_t value_bound) {
    SearchResult result;
    std::vector<Variable> vars;
    for (std::int64_t m = 0; m <= depth; ++m)
        for (std::int64_t n = 0; n <= depth; ++n) {
            vars.push_back({true, m, n});
            vars.push_back({false, m, n});
        }

    // Candidate lists are precomputed per variable; deterministic ascending
    // order gives lexicographic extensions.
    std::vector<std::vector<PointIndex>> candidates;
    candidates.reserve(vars.size());
    for (const auto& var : vars)
        candidates.push_back(var.is_f ? candidate_values(P0, P1, var.m, var.n, depth, k, value_bound)
                                      : candidate_values(P1, P0, var.m, var.n, depth, k, value_bound));

    IsometryTable table;
    bool stop = false;

    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (stop) return;
        if (idx == vars.size()) {
            result.survivors.push_back(table);
            return;
        }
        const Variable& var = vars[idx];
        for (const auto& v : candidates[idx]) {
            if (result.explored >= budget) {
                result.budget_exhausted = true;
                stop = true;
                return;
            }
            ++result.explored;
            if (var.is_f) table.set_f(PointIndex(var.m), var.n, v);
            else table.set_g(PointIndex(var.m), var.n, v);

            auto verdict = ConditionEvaluator(table, P0, P1, tm, depth, k, true).run();
            bool pruned = false;
            for (std::size_t c = 0; c < 6; ++c) {
                if (verdict.status[c] == CondStatus::ViolatedCertified) {
                    ++result.prune_counts[c];
                    pruned = true;
                    break;
                }
            }
            if (!pruned) self(self, idx + 1);
            if (stop) break;
        }
        if (var.is_f) table.erase_f(PointIndex(var.m), var.n);
        else table.erase_g(PointIndex(var.m), var.n);
    };
    dfs(dfs, 0);
    return result;
}

std::pair<PointIndex, Rational> limit_map_from_table(const IsometryTable& table,
                                                     const Presentation& P1, const PointIndex& m,
                                                     std::int64_t k) {
    (void)P1;
    return {table.f_req(m, k), Rational(1, BigInt(1) << k)};
}

std::vector<PointIndex> required_rows(const Presentation& P0, const TermMaps& tm,
                                      std::int64_t depth) {
    std::set<PointIndex> rows;
    for (std::int64_t m = 0; m <= depth; ++m) rows.emplace(m);
    if (P0.kind() == Presentation::Kind::Banach) {
        std::set<Rational> scalars;
        for (std::int64_t t = 0; t <= depth; ++t) {
            Term term = decode_term(PointIndex(t));
            for (const auto& [i, c] : term.coeffs()) scalars.insert(c);
        }
        for (std::int64_t j1 = 0; j1 <= depth; ++j1) {
            for (std::int64_t j2 = 0; j2 <= depth; ++j2)
                rows.insert(tm.add_source(PointIndex(j1), PointIndex(j2)));
            for (const Rational& s : scalars) rows.insert(tm.scale_source(s, PointIndex(j1)));
        }
    }
    return std::vector<PointIndex>(rows.begin(), rows.end());
}

} // namespace lpiso
