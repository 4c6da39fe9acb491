#pragma once

#include "lpiso/vector_tree.hpp"

namespace lpiso {

// One partition step: the chosen almost-norm-maximizing child and the
// sibling enclosures backing the certificate, kept for replay.
struct ChildCertificate {
    NodeAddress parent;
    NodeAddress chosen;
    DyadicInterval chosen_power;
    std::vector<std::pair<NodeAddress, DyadicInterval>> sibling_powers;

    // Every sibling satisfies ||phi(nu'')||^p <= ||phi(nu')||^p + 2^-|nu'|
    // with certified bounds.
    bool holds() const;
};

struct ChainPartition {
    std::vector<std::vector<NodeAddress>> chains;  // each ordered by prefix
    std::map<NodeAddress, std::uint32_t> assignment;
    std::vector<ChildCertificate> certificates;
    bool strict_mode = false;
    std::vector<std::string> strict_failures;  // strengthened child condition misses

    std::size_t chain_count() const { return chains.size(); }
};

// Greedy breadth-first partition into almost norm-maximizing chains.
// Sibling p-th power norms are certified to width 2^-(d+2) at child depth d;
// the maximal midpoint wins, ties broken by lowest child index.  `strict`
// additionally checks the strengthened child condition
// ||phi(mu)||^p < ||phi(nu')||^p + (1/2)||phi(nu)||^p for every child mu.
ChainPartition partition_chains(const VectorTree& tree, const DisintegrationReport& validation,
                                bool strict = false);

enum class AtomVerdict { ZeroCertified, AtomCertified, UnknownAtDepth };

const char* atom_verdict_name(AtomVerdict v);

struct ChainLimit {
    std::uint32_t chain_id = 0;
    Exponent exponent{Rational(1)};
    // Enclosures of ||phi(nu)||_p^p along the chain, with node depths.
    std::vector<std::pair<NodeAddress, DyadicInterval>> power_bounds;
    AtomVerdict verdict = AtomVerdict::UnknownAtDepth;
    std::optional<LpVector> witness;
    Rational witness_error = Rational(0);
    // Certified upper bound on ||g||_p derived from the power bounds.
    Dyadic norm_upper_bound;

    // Stage view: upper bound on ||g||_p^p using nodes of depth <= stage.
    std::optional<Dyadic> power_upper_at_stage(std::int64_t stage) const;
};

// Limit data for one chain: the limit g is the component-order infimum of
// the chain labels, so every label's p-th power norm upper-bounds ||g||_p^p.
// Atom-certified when the chain ends at a genuine single-atom leaf (then the
// witness is exact); zero-certified at precision k when the bounds push
// ||g||_p below 2^-k.
ChainLimit chain_limit(const VectorTree& tree, const ChainPartition& partition,
                       std::uint32_t chain_id, std::int64_t k);

std::vector<ChainLimit> all_chain_limits(const VectorTree& tree, const ChainPartition& partition,
                                         std::int64_t k);

} // namespace lpiso
