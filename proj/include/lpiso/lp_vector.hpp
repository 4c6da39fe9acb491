#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lpiso/step_function.hpp"

namespace lpiso {

enum class SpaceTag { LpN, Lp, Lp01, LpNSum, LpSum };

const char* space_tag_name(SpaceTag t);
std::optional<SpaceTag> parse_space_tag(const std::string& name);

inline bool has_atomic_part(SpaceTag t) { return t != SpaceTag::Lp01; }
inline bool has_continuous_part(SpaceTag t) {
    return t == SpaceTag::Lp01 || t == SpaceTag::LpNSum || t == SpaceTag::LpSum;
}
inline bool has_dimension_cap(SpaceTag t) { return t == SpaceTag::LpN || t == SpaceTag::LpNSum; }

// Finitely supported rational sequence, canonical (no stored zeros).
class SeqVector {
public:
    SeqVector() = default;

    static SeqVector unit(std::uint32_t i) { return SeqVector().with(i, Rational(1)); }

    SeqVector with(std::uint32_t i, const Rational& c) const {
        SeqVector r = *this;
        if (c == 0) r.coeffs_.erase(i); else r.coeffs_[i] = c;
        return r;
    }

    const std::map<std::uint32_t, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::uint32_t> max_index() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }
    Rational at(std::uint32_t i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    SeqVector add(const SeqVector& o) const;
    SeqVector sub(const SeqVector& o) const;
    SeqVector scale(const Rational& c) const;

    bool disjoint_from(const SeqVector& o) const;

    Rational power_sum_exact(unsigned p) const;
    DyadicInterval power_sum(const Exponent& p, std::int64_t k) const;

    bool operator==(const SeqVector& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<std::uint32_t, Rational> coeffs_;
};

// Rational point of lp_n, lp, Lp[0,1], or an Lp-sum: exact atomic part plus
// exact step-function part, tagged with the space it lives in.
class LpVector {
public:
    LpVector(SpaceTag tag, Exponent p, SeqVector atomic, StepFunction continuous,
             std::optional<std::uint32_t> dim = std::nullopt);

    static LpVector zero(SpaceTag tag, const Exponent& p, std::optional<std::uint32_t> dim = std::nullopt);
    static LpVector basis(SpaceTag tag, const Exponent& p, std::uint32_t i,
                          std::optional<std::uint32_t> dim = std::nullopt);
    static LpVector step(SpaceTag tag, const Exponent& p, StepFunction f,
                         std::optional<std::uint32_t> dim = std::nullopt);

    SpaceTag tag() const { return tag_; }
    const Exponent& exponent() const { return p_; }
    std::optional<std::uint32_t> dimension() const { return dim_; }
    const SeqVector& atomic() const { return atomic_; }
    const StepFunction& continuous() const { return continuous_; }

    bool is_zero() const { return atomic_.is_zero() && continuous_.is_zero(); }

    LpVector add(const LpVector& o) const;
    LpVector sub(const LpVector& o) const;
    LpVector scale(const Rational& c) const;

    // Exact ||v||_p^p for integer p.
    Rational norm_power_exact() const;

    // Enclosure of ||v||_p^p of width <= 2^-k.
    DyadicInterval norm_power(std::int64_t k) const;

    // Enclosure of ||v||_p of width <= 2^-k.
    DyadicInterval norm(std::int64_t k) const;

    // Exact norm when the vector is a single atom (|coefficient|); used for
    // atom witnesses, whose norms are exact for every p.
    std::optional<Rational> exact_atom_norm() const;

    // True when the vector is c*e_i with a zero continuous part.
    std::optional<std::uint32_t> single_atom_index() const;

    bool operator==(const LpVector& o) const;

    std::string to_literal() const;

    void require_compatible(const LpVector& o) const;

private:
    SpaceTag tag_;
    Exponent p_;
    std::optional<std::uint32_t> dim_;
    SeqVector atomic_;
    StepFunction continuous_;
};

// f and g have a.e.-disjoint supports (f * g = 0).
bool disjointly_supported(const LpVector& f, const LpVector& g);

// f is a component of g: g - f and f are disjointly supported.
bool is_component(const LpVector& f, const LpVector& g);

// Second characterization, cross-checked in tests: f = g * 1_A, i.e. f agrees
// with g wherever f is nonzero.
bool is_component_by_restriction(const LpVector& f, const LpVector& g);

// Pair (u, v) in the Lp-sum of u's and v's spaces.
LpVector lp_sum_embed(const LpVector& atomic_part, const LpVector& continuous_part);

} // namespace lpiso
