#pragma once

#include "lpiso/chains.hpp"

namespace lpiso {

struct ProjectionResult {
    LpVector value;
    Rational error_bound;
};

// Projection of a tree label onto the continuous part: phi(nu) minus every
// atom-certified chain limit that is a component of phi(nu).  Raises
// UnknownChainLimit when nu's own chain is still unresolved at this depth.
ProjectionResult recover_projection(const VectorTree& tree, const ChainPartition& partition,
                                    const std::vector<ChainLimit>& limits, const NodeAddress& nu,
                                    std::int64_t k);

// The assembled map T(sum alpha_k e_k, f) = sum alpha_k/||g_k|| g_k + T_1(f),
// with atom images taken from the chain limits in chain order and T_1 read
// off the dyadic correspondence of the bisection branch.
class SynthesizedIsometry {
public:
    struct AtomImage {
        std::uint32_t chain_id;
        LpVector witness;
        Rational norm;  // exact: witnesses are single atoms
        Term term;
    };

    SpaceTag tag() const { return tag_; }
    const Exponent& exponent() const { return p_; }
    std::int64_t precision() const { return precision_; }
    std::int64_t grid_level() const { return grid_level_; }
    const std::vector<AtomImage>& atom_images() const { return atom_images_; }
    const std::map<std::uint64_t, std::pair<LpVector, Term>>& piece_images() const {
        return piece_images_;
    }

    // Exact image of a standard-presentation vector; requires the continuous
    // part to live on the synthesized grid.
    LpVector apply(const LpVector& v) const;

    // Image as a term over the target presentation's generators.
    Term image_term(const LpVector& v) const;
    PointIndex image_index(const PointIndex& standard_index) const;

private:
    friend SynthesizedIsometry synthesize_isometry(const Presentation&, std::int64_t, std::int64_t);

    SpaceTag tag_ = SpaceTag::Lp;
    Exponent p_{Rational(1)};
    std::optional<std::uint32_t> dim_;
    std::int64_t precision_ = 0;
    std::int64_t grid_level_ = 0;
    std::vector<AtomImage> atom_images_;
    std::map<std::uint64_t, std::pair<LpVector, Term>> piece_images_;
};

// Builds the disintegration of the target presentation, partitions it,
// extracts the atom witnesses and pairs the continuous parts.  Requires a
// sequence-space or sum tag with p != 2.
SynthesizedIsometry synthesize_isometry(const Presentation& target, std::int64_t depth,
                                        std::int64_t k);

enum class CheckVerdict { Pass, Violated, Inconclusive };

const char* check_verdict_name(CheckVerdict v);

struct VerificationCheck {
    std::string description;
    DyadicInterval discrepancy;
    CheckVerdict verdict;
};

struct VerificationReport {
    std::int64_t precision = 0;
    std::size_t points = 0;
    std::vector<VerificationCheck> checks;
    CheckVerdict verdict = CheckVerdict::Pass;
    std::optional<std::size_t> first_violation;

    bool passed() const { return verdict == CheckVerdict::Pass; }
};

// Certifies |d(x_i,x_j) - d(y_{F(i)}, y_{F(j)})| <= 4*2^-k on the first N
// rational points, plus sampled operation/functional/constant clauses.
VerificationReport verify_isometry(const std::vector<PointIndex>& table, const Presentation& source,
                                   const Presentation& target, std::size_t points, std::int64_t k);

enum class StageVerdict { In, Out, Unknown };

const char* stage_verdict_name(StageVerdict v);

// Stage-bounded evaluators for the two index sets of the classification
// argument: A1 = { <n,k> : ||g_n||_p >= 2^-k } and
// A2 = { <nu,M,k> : ||sum_{n>=M} chi_{C_n}(nu) g_n||_p <= 2^-k }.
// A stage-s verdict only uses tree levels <= s; "out" verdicts never retract
// as the stage grows.
StageVerdict evaluate_A1(const std::vector<ChainLimit>& limits, std::uint32_t n, std::int64_t k,
                         std::int64_t stage);

StageVerdict evaluate_A2(const VectorTree& tree, const ChainPartition& partition,
                         const std::vector<ChainLimit>& limits, const NodeAddress& nu,
                         std::uint32_t M, std::int64_t k, std::int64_t stage);

// Batch evaluation snapshot at a fixed stage.
class StageSetEvaluator {
public:
    StageSetEvaluator(const VectorTree& tree, const ChainPartition& partition,
                      std::vector<ChainLimit> limits, std::int64_t stage)
        : tree_(tree), partition_(partition), limits_(std::move(limits)), stage_(stage) {}

    std::int64_t stage() const { return stage_; }
    StageVerdict a1(std::uint32_t n, std::int64_t k) const {
        return evaluate_A1(limits_, n, k, stage_);
    }
    StageVerdict a2(const NodeAddress& nu, std::uint32_t M, std::int64_t k) const {
        return evaluate_A2(tree_, partition_, limits_, nu, M, k, stage_);
    }

private:
    const VectorTree& tree_;
    const ChainPartition& partition_;
    std::vector<ChainLimit> limits_;
    std::int64_t stage_;
};

} // namespace lpiso
