#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpiso/presentation.hpp"

namespace lpiso {

// Tree addresses: child index sequences, lexicographically ordered.
using NodeAddress = std::vector<std::uint32_t>;

std::string address_to_string(const NodeAddress& a);
std::optional<NodeAddress> parse_address(const std::string& text);

// Injective labeled tree: a finite prefix-closed subset of N^<N truncated at
// a depth budget, with an LpVector at each node.  Trees built over a
// presentation also carry the term syntax behind every label.
class VectorTree {
public:
    VectorTree(SpaceTag tag, Exponent p, std::optional<std::uint32_t> dim, std::int64_t depth_budget);

    void add_node(const NodeAddress& addr, LpVector label, std::optional<Term> term = std::nullopt);

    SpaceTag tag() const { return tag_; }
    const Exponent& exponent() const { return p_; }
    std::optional<std::uint32_t> dimension() const { return dim_; }
    std::int64_t depth_budget() const { return depth_budget_; }

    std::size_t size() const { return labels_.size(); }
    bool contains(const NodeAddress& addr) const { return labels_.count(addr) > 0; }
    const LpVector& label(const NodeAddress& addr) const;
    std::optional<Term> term(const NodeAddress& addr) const;

    const std::map<NodeAddress, LpVector>& nodes() const { return labels_; }
    std::vector<NodeAddress> children(const NodeAddress& addr) const;
    bool is_leaf(const NodeAddress& addr) const { return children(addr).empty(); }

    // All addresses ordered by (depth, address); deterministic.
    std::vector<NodeAddress> bfs_order() const;

private:
    SpaceTag tag_;
    Exponent p_;
    std::optional<std::uint32_t> dim_;
    std::int64_t depth_budget_;
    std::map<NodeAddress, LpVector> labels_;
    std::map<NodeAddress, Term> terms_;
    std::set<std::string> label_literals_;  // injectivity guard
};

// Atomic fan width used for the infinite sequence spaces at a finite depth
// budget: max(1, 2D) coordinates, so depth 8 reaches the first 16
// distinguished points.
std::uint32_t fan_width(std::int64_t depth_budget);

// The shipped disintegration shapes, built over an arbitrary (Banach)
// presentation: basis fan for sequence spaces, dyadic bisection for Lp[0,1],
// and the fan-plus-bisection combination for the sum spaces.  Labels are the
// presentation's decoded terms, so a scrambled presentation yields the image
// of the standard tree under the hidden isometry.
VectorTree presentation_disintegration(const Presentation& pres, std::int64_t depth_budget);

// Same shapes over the standard presentation.
VectorTree standard_disintegration(SpaceTag tag, const Exponent& p, std::int64_t depth_budget,
                                   std::optional<std::uint32_t> dim = std::nullopt);

enum class DensityVerdict { CertifiedAtDepth, Violated, Inconclusive };

struct DisintegrationReport {
    bool nonvanishing = false;
    bool separating = false;
    bool summative = false;
    DensityVerdict density = DensityVerdict::Inconclusive;
    std::int64_t depth_budget = 0;
    std::int64_t density_tolerance_log2 = 0;
    std::size_t probes_checked = 0;
    std::vector<std::string> notes;

    bool all_pass() const {
        return nonvanishing && separating && summative && density == DensityVerdict::CertifiedAtDepth;
    }
};

// Nonvanishing, separating and summative are decided exactly; linear density
// is probed: each probe is approximated inside the span of the labels and the
// residual norm is certified against the tolerance 2^-tolerance_log2.
DisintegrationReport validate_disintegration(const VectorTree& tree, std::int64_t k,
                                             std::int64_t tolerance_log2,
                                             const std::vector<LpVector>& probes);

std::string format_report(const DisintegrationReport& report);

} // namespace lpiso
