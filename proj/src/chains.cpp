#include "lpiso/chains.hpp"

#include <algorithm>

namespace lpiso {

bool ChildCertificate::holds() const {
    std::int64_t d = static_cast<std::int64_t>(chosen.size());
    Rational slack = Rational(1) / (BigInt(1) << d);
    Rational chosen_lower = chosen_power.lo().to_rational();
    for (const auto& [addr, power] : sibling_powers)
        if (power.hi().to_rational() > chosen_lower + slack) return false;
    return true;
}

ChainPartition partition_chains(const VectorTree& tree, const DisintegrationReport& validation,
                                bool strict) {
    if (!validation.separating || !validation.summative)
        raise(ErrorCode::ValidationMissing,
              "partition requires a tree validated separating and summative");

    ChainPartition part;
    part.strict_mode = strict;
    part.assignment[{}] = 0;
    part.chains.push_back({NodeAddress{}});

    for (const auto& addr : tree.bfs_order()) {
        auto kids = tree.children(addr);
        if (kids.empty()) continue;
        std::int64_t d = static_cast<std::int64_t>(addr.size()) + 1;

        ChildCertificate cert;
        cert.parent = addr;
        std::vector<DyadicInterval> powers;
        powers.reserve(kids.size());
        for (const auto& kid : kids) powers.push_back(tree.label(kid).norm_power(d + 2));

        std::size_t best = 0;
        for (std::size_t i = 1; i < kids.size(); ++i)
            if (powers[i].midpoint() > powers[best].midpoint()) best = i;

        cert.chosen = kids[best];
        cert.chosen_power = powers[best];
        for (std::size_t i = 0; i < kids.size(); ++i)
            if (i != best) cert.sibling_powers.emplace_back(kids[i], powers[i]);
        if (!cert.holds())
            raise(ErrorCode::PrecisionExhausted, "almost-norm-maximizing certificate failed at " +
                                                     address_to_string(addr));

        if (strict) {
            // ||phi(mu)||^p < ||phi(nu')||^p + (1/2) ||phi(nu)||^p for all mu.
            DyadicInterval parent_power = tree.label(addr).norm_power(d + 2);
            Rational budget = cert.chosen_power.lo().to_rational() +
                              parent_power.lo().to_rational() / 2;
            for (std::size_t i = 0; i < kids.size(); ++i)
                if (!(powers[i].hi().to_rational() < budget))
                    part.strict_failures.push_back("child condition not certified at " +
                                                   address_to_string(kids[i]));
        }

        std::uint32_t parent_chain = part.assignment.at(addr);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i == best) {
                part.assignment[kids[i]] = parent_chain;
                part.chains[parent_chain].push_back(kids[i]);
            } else {
                std::uint32_t fresh = static_cast<std::uint32_t>(part.chains.size());
                part.assignment[kids[i]] = fresh;
                part.chains.push_back({kids[i]});
            }
        }
        part.certificates.push_back(std::move(cert));
    }
    return part;
}

const char* atom_verdict_name(AtomVerdict v) {
    switch (v) {
        case AtomVerdict::ZeroCertified: return "zero-certified";
        case AtomVerdict::AtomCertified: return "atom-certified";
        case AtomVerdict::UnknownAtDepth: return "unknown-at-depth";
    }
    return "?";
}

std::optional<Dyadic> ChainLimit::power_upper_at_stage(std::int64_t stage) const {
    std::optional<Dyadic> best;
    for (const auto& [addr, power] : power_bounds) {
        if (static_cast<std::int64_t>(addr.size()) > stage) continue;
        if (!best || power.hi() < *best) best = power.hi();
    }
    return best;
}

ChainLimit chain_limit(const VectorTree& tree, const ChainPartition& partition,
                       std::uint32_t chain_id, std::int64_t k) {
    if (chain_id >= partition.chains.size()) raise(ErrorCode::BadInput, "chain id out of range");
    ChainLimit limit;
    limit.chain_id = chain_id;
    limit.exponent = tree.exponent();
    const auto& chain = partition.chains[chain_id];
    for (const auto& addr : chain)
        limit.power_bounds.emplace_back(addr, tree.label(addr).norm_power(k + 2));

    const NodeAddress& last = chain.back();
    const LpVector& final_label = tree.label(last);

    Dyadic min_power_upper = limit.power_bounds.front().second.hi();
    for (const auto& [addr, power] : limit.power_bounds)
        min_power_upper = std::min(min_power_upper, power.hi());
    DyadicInterval power_box(Dyadic::zero(), min_power_upper, 0);
    power_box.refresh_level();
    limit.norm_upper_bound = root_p(power_box, tree.exponent(), k + 2).hi();

    if (tree.is_leaf(last) && final_label.single_atom_index()) {
        // Genuine atom leaf: the chain is finite and its component-order
        // infimum is the final label itself.
        limit.verdict = AtomVerdict::AtomCertified;
        limit.witness = final_label;
        limit.witness_error = Rational(0);
    } else if (limit.norm_upper_bound.to_rational() <= Rational(1, BigInt(1) << k)) {
        limit.verdict = AtomVerdict::ZeroCertified;
        limit.witness = LpVector::zero(tree.tag(), tree.exponent(), tree.dimension());
        limit.witness_error = limit.norm_upper_bound.to_rational();
    } else {
        limit.verdict = AtomVerdict::UnknownAtDepth;
        limit.witness.reset();
        limit.witness_error = limit.norm_upper_bound.to_rational();
    }
    return limit;
}

std::vector<ChainLimit> all_chain_limits(const VectorTree& tree, const ChainPartition& partition,
                                         std::int64_t k) {
    std::vector<ChainLimit> limits;
    limits.reserve(partition.chains.size());
    for (std::uint32_t c = 0; c < partition.chains.size(); ++c)
        limits.push_back(chain_limit(tree, partition, c, k));
    return limits;
}

} // namespace lpiso
