#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lpiso/scramble.hpp"
#include "lpiso/signature.hpp"
#include "lpiso/term.hpp"

namespace lpiso {

// A presentation: a signature instance plus an indexed generator sequence
// with evaluators for the metric and functionals at requested precision.
//
// Two concrete families are shipped.  Banach presentations decode every term
// index into an exact LpVector (rational combinations of the generators), so
// the metric evaluator is the certified norm of an exact difference vector.
// Finite metric presentations carry an exact rational distance table; the
// rational-point sequence cycles through the points (x_i = p_{i mod count}).
//
// For finite-dimensional Banach tags the generator sequence is padded with
// the zero vector beyond the dimension cap, which keeps the term enumeration
// total without changing the generated subspace.
class Presentation {
public:
    enum class Kind { Banach, FiniteMetric };

    static Presentation standard(SpaceTag tag, const Exponent& p,
                                 std::optional<std::uint32_t> dim = std::nullopt);
    static Presentation scrambled(SpaceTag tag, const Exponent& p,
                                  std::optional<std::uint32_t> dim, const Scramble& hidden);
    static Presentation finite_metric(std::vector<std::vector<Rational>> distances);

    Kind kind() const { return kind_; }
    const Signature& signature() const { return signature_; }

    // Banach data.
    SpaceTag tag() const;
    const Exponent& exponent() const;
    std::optional<std::uint32_t> dimension() const { return dim_; }
    const std::optional<Scramble>& scramble() const { return scramble_; }
    LpVector generator(std::uint32_t i) const;
    LpVector decode(const PointIndex& index) const;

    // Finite-metric data.
    std::size_t point_cardinality() const;
    const std::vector<std::vector<Rational>>& distance_table() const;

    // d(x_i, x_j) as an enclosure of width <= 2^-k; identical for (i,j) and
    // (j,i).
    DyadicInterval eval_metric(const PointIndex& i, const PointIndex& j, std::int64_t k) const;

    // Functional evaluation; the Banach signature has the single functional
    // "norm".
    DyadicInterval eval_functional(const std::string& symbol, const PointIndex& i,
                                   std::int64_t k) const;

    // First `bound` rational points in the frozen enumeration.
    std::vector<std::string> enumerate_rational_points(std::size_t bound) const;
    std::string describe_point(const PointIndex& index) const;

    // Syntax-level operations on term indices (Banach only); the decoded
    // value of the result is exactly the operation applied to the decoded
    // operands.
    PointIndex term_add(const PointIndex& i, const PointIndex& j) const;
    PointIndex term_scale(const Rational& s, const PointIndex& i) const;
    PointIndex index_of_term(const Term& term) const;

private:
    Presentation() : signature_(Signature::bare_metric()), p_(Rational(1)) {}

    void require_banach() const;

    Kind kind_ = Kind::FiniteMetric;
    Signature signature_;
    SpaceTag tag_ = SpaceTag::Lp;
    Exponent p_;
    std::optional<std::uint32_t> dim_;
    std::optional<Scramble> scramble_;
    std::vector<std::vector<Rational>> distances_;

    // Invisible memoization of term decoding; results are call-order
    // independent.  Copies share the cache.
    struct DecodeCache {
        std::mutex mutex;
        std::map<PointIndex, LpVector> map;
    };
    std::shared_ptr<DecodeCache> cache_ = std::make_shared<DecodeCache>();
};

// Modulus spot-check report: certified violations plus inconclusive samples.
struct ModulusViolation {
    std::int64_t k;
    std::string description;
    DyadicInterval output_distance;
};

struct ModulusReport {
    std::size_t samples_checked = 0;
    std::size_t inconclusive = 0;
    std::vector<ModulusViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Samples rational tuples at certified distance <= 2^-delta(k) and checks the
// output distance against 2^-k with enclosures.  `delta` overrides the
// signature's modulus so deliberately wrong moduli can be probed.
ModulusReport check_modulus(const Presentation& pres, const std::string& symbol,
                            const std::function<std::int64_t(std::int64_t)>& delta,
                            std::size_t samples, std::int64_t k_max);

} // namespace lpiso
