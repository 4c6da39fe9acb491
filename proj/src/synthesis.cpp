#include "lpiso/synthesis.hpp"

#include <algorithm>

namespace lpiso {

ProjectionResult recover_projection(const VectorTree& tree, const ChainPartition& partition,
                                    const std::vector<ChainLimit>& limits, const NodeAddress& nu,
                                    std::int64_t k) {
    const LpVector& label = tree.label(nu);
    auto it = partition.assignment.find(nu);
    if (it == partition.assignment.end()) raise(ErrorCode::BadInput, "node not in partition");
    if (it->second >= limits.size() || limits[it->second].verdict == AtomVerdict::UnknownAtDepth)
        raise(ErrorCode::UnknownChainLimit,
              "chain of " + address_to_string(nu) + " unresolved; deepen the tree");

    // g_j <= phi(nu) in the component order exactly when the chain limit sits
    // below this label; subtracting those witnesses strips the atomic part.
    ProjectionResult out{label, Rational(0)};
    for (const auto& lim : limits) {
        if (lim.verdict != AtomVerdict::AtomCertified) continue;
        if (is_component(*lim.witness, out.value)) {
            out.value = out.value.sub(*lim.witness);
            out.error_bound += lim.witness_error;
        }
    }
    out.error_bound += Rational(1, BigInt(1) << k);
    return out;
}

LpVector SynthesizedIsometry::apply(const LpVector& v) const {
    LpVector image = LpVector::zero(tag_, p_, dim_);
    for (const auto& [i, c] : v.atomic().coeffs()) {
        if (i >= atom_images_.size())
            raise(ErrorCode::PrecisionExhausted,
                  "coordinate " + std::to_string(i) + " beyond the synthesized atoms");
        const AtomImage& img = atom_images_[i];
        image = image.add(img.witness.scale(c / img.norm));
    }
    if (!v.continuous().is_zero()) {
        std::int64_t level = v.continuous().breakpoint_level();
        if (level > grid_level_)
            raise(ErrorCode::PrecisionExhausted, "continuous part finer than the synthesized grid");
        auto cells = v.continuous().values_on_grid(level);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j] == 0) continue;
            std::uint64_t m = dyadic_interval_index(level, j);
            image = image.add(piece_images_.at(m).first.scale(cells[j]));
        }
    }
    return image;
}

Term SynthesizedIsometry::image_term(const LpVector& v) const {
    Term term;
    for (const auto& [i, c] : v.atomic().coeffs()) {
        if (i >= atom_images_.size())
            raise(ErrorCode::PrecisionExhausted,
                  "coordinate " + std::to_string(i) + " beyond the synthesized atoms");
        const AtomImage& img = atom_images_[i];
        term = term.add(img.term.scale(c / img.norm));
    }
    if (!v.continuous().is_zero()) {
        std::int64_t level = v.continuous().breakpoint_level();
        if (level > grid_level_)
            raise(ErrorCode::PrecisionExhausted, "continuous part finer than the synthesized grid");
        auto cells = v.continuous().values_on_grid(level);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j] == 0) continue;
            std::uint64_t m = dyadic_interval_index(level, j);
            term = term.add(piece_images_.at(m).second.scale(cells[j]));
        }
    }
    return term;
}

PointIndex SynthesizedIsometry::image_index(const PointIndex& standard_index) const {
    LpVector v = Presentation::standard(tag_, p_, dim_).decode(standard_index);
    return encode_term(image_term(v));
}

SynthesizedIsometry synthesize_isometry(const Presentation& target, std::int64_t depth,
                                        std::int64_t k) {
    if (target.kind() != Presentation::Kind::Banach)
        raise(ErrorCode::UnsupportedSpace, "synthesis needs a Banach presentation");
    if (target.tag() == SpaceTag::Lp01)
        raise(ErrorCode::UnsupportedSpace, "synthesis targets sequence or sum spaces");
    if (target.exponent().value() == 2)
        raise(ErrorCode::UnsupportedSpace, "p = 2 does not determine support structure");
    if (depth < 1) raise(ErrorCode::BadInput, "synthesis needs depth >= 1");

    VectorTree tree = presentation_disintegration(target, depth);
    auto report = validate_disintegration(tree, k, k, {});
    if (!report.separating || !report.summative)
        raise(ErrorCode::PrecisionExhausted, "target tree failed exact validation");
    auto partition = partition_chains(tree, report);
    auto limits = all_chain_limits(tree, partition, k);

    bool sum_space = has_continuous_part(target.tag());
    std::uint32_t expected = has_dimension_cap(target.tag()) ? *target.dimension() : fan_width(depth);

    SynthesizedIsometry synth;
    synth.tag_ = target.tag();
    synth.p_ = target.exponent();
    synth.dim_ = target.dimension();
    synth.precision_ = k;
    synth.grid_level_ = sum_space ? depth - 1 : 0;

    for (const auto& lim : limits) {
        if (lim.verdict != AtomVerdict::AtomCertified) continue;
        const NodeAddress& leaf = partition.chains[lim.chain_id].back();
        auto term = tree.term(leaf);
        if (!term) raise(ErrorCode::PrecisionExhausted, "atom witness carries no term syntax");
        auto norm = lim.witness->exact_atom_norm();
        SynthesizedIsometry::AtomImage img{lim.chain_id, *lim.witness, *norm, *term};
        synth.atom_images_.push_back(std::move(img));
    }
    std::sort(synth.atom_images_.begin(), synth.atom_images_.end(),
              [](const auto& a, const auto& b) { return a.chain_id < b.chain_id; });
    if (synth.atom_images_.size() != expected)
        raise(ErrorCode::AtomCountMismatch,
              "found " + std::to_string(synth.atom_images_.size()) + " atoms, expected " +
                  std::to_string(expected));

    if (sum_space) {
        // Bisection branch sits under child index `expected`; its labels are
        // exactly the images of the dyadic pieces.
        NodeAddress cont{expected};
        if (!tree.contains(cont)) raise(ErrorCode::PrecisionExhausted, "continuous branch missing");
        for (const auto& [addr, label] : tree.nodes()) {
            if (addr.size() < 1 || addr[0] != expected) continue;
            std::uint64_t j = 0;
            for (std::size_t d = 1; d < addr.size(); ++d) j = (j << 1) | addr[d];
            std::uint64_t m = dyadic_interval_index(static_cast<std::int64_t>(addr.size()) - 1, j);
            auto term = tree.term(addr);
            if (!term) raise(ErrorCode::PrecisionExhausted, "piece image carries no term syntax");
            synth.piece_images_.emplace(m, std::make_pair(label, *term));
        }
    }
    return synth;
}

const char* check_verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Pass: return "pass";
        case CheckVerdict::Violated: return "violated";
        case CheckVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

CheckVerdict classify(const DyadicInterval& discrepancy, const Rational& tolerance) {
    if (discrepancy.certainly_le(tolerance)) return CheckVerdict::Pass;
    if (discrepancy.certainly_gt(tolerance)) return CheckVerdict::Violated;
    return CheckVerdict::Inconclusive;
}

} // namespace

VerificationReport verify_isometry(const std::vector<PointIndex>& table, const Presentation& source,
                                   const Presentation& target, std::size_t points, std::int64_t k) {
    if (table.size() < points) raise(ErrorCode::GridTooSmall, "table shorter than requested points");
    VerificationReport report;
    report.precision = k;
    report.points = points;
    Rational tolerance = Rational(4) / (BigInt(1) << k);
    std::int64_t work = k + 2;

    auto record = [&](std::string desc, const DyadicInterval& disc) {
        CheckVerdict v = classify(disc, tolerance);
        if (v == CheckVerdict::Violated && !report.first_violation)
            report.first_violation = report.checks.size();
        report.checks.push_back({std::move(desc), disc, v});
    };

    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t j = i + 1; j < points; ++j) {
            auto d0 = source.eval_metric(PointIndex(i), PointIndex(j), work);
            auto d1 = target.eval_metric(table[i], table[j], work);
            record("d(x" + std::to_string(i) + ",x" + std::to_string(j) + ") vs image",
                   interval_abs(interval_sub(d0, d1)));
        }
    }

    bool banach = source.kind() == Presentation::Kind::Banach &&
                  target.kind() == Presentation::Kind::Banach;
    if (banach) {
        std::size_t cap = std::min<std::size_t>(points, 8);
        for (std::size_t i = 0; i < cap; ++i) {
            // Functional clause: the norm is preserved.
            auto ni = source.eval_functional("norm", PointIndex(i), work);
            auto nf = target.eval_functional("norm", table[i], work);
            record("norm(x" + std::to_string(i) + ")", interval_abs(interval_sub(ni, nf)));
            for (std::size_t j = 0; j < cap; ++j) {
                PointIndex sum = source.term_add(PointIndex(i), PointIndex(j));
                if (sum >= PointIndex(points)) continue;
                PointIndex mapped = target.term_add(table[i], table[j]);
                auto disc = target.eval_metric(table[static_cast<std::size_t>(sum)], mapped, work);
                record("F(x" + std::to_string(i) + "+x" + std::to_string(j) + ")", disc);
            }
            for (const Rational& s : {Rational(-1), Rational(2)}) {
                PointIndex scaled = source.term_scale(s, PointIndex(i));
                if (scaled >= PointIndex(points)) continue;
                PointIndex mapped = target.term_scale(s, table[i]);
                auto disc = target.eval_metric(table[static_cast<std::size_t>(scaled)], mapped, work);
                record("F(" + to_string(s) + "*x" + std::to_string(i) + ")", disc);
            }
        }
        // Constant clause: zero maps near zero.
        auto disc = target.eval_metric(table[0], PointIndex(0), work);
        record("F(0) vs 0", disc);
    }

    report.verdict = CheckVerdict::Pass;
    for (const auto& check : report.checks) {
        if (check.verdict == CheckVerdict::Violated) {
            report.verdict = CheckVerdict::Violated;
            break;
        }
        if (check.verdict == CheckVerdict::Inconclusive) report.verdict = CheckVerdict::Inconclusive;
    }
    return report;
}

const char* stage_verdict_name(StageVerdict v) {
    switch (v) {
        case StageVerdict::In: return "in";
        case StageVerdict::Out: return "out";
        case StageVerdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// ||g||_p < 2^-k given an upper bound u on ||g||_p^p: u < 2^-kp, exactly.
bool power_below(const Dyadic& u, const Exponent& p, std::int64_t k, bool strict) {
    Rational lhs = rat_pow(u.to_rational(), p.b());
    Rational rhs = Rational(1, BigInt(1) << static_cast<unsigned>(k * p.a()));
    return strict ? lhs < rhs : lhs <= rhs;
}

// Atom witness data visible at this stage, if any.
const ChainLimit* atom_at_stage(const ChainLimit& lim, const ChainPartition& partition,
                                std::int64_t stage) {
    if (lim.verdict != AtomVerdict::AtomCertified) return nullptr;
    const NodeAddress& leaf = partition.chains[lim.chain_id].back();
    if (static_cast<std::int64_t>(leaf.size()) > stage) return nullptr;
    return &lim;
}

} // namespace

StageVerdict evaluate_A1(const std::vector<ChainLimit>& limits, std::uint32_t n, std::int64_t k,
                         std::int64_t stage) {
    if (n >= limits.size()) raise(ErrorCode::BadInput, "no such chain");
    const ChainLimit& lim = limits[n];
    Rational threshold = Rational(1, BigInt(1) << k);

    if (lim.verdict == AtomVerdict::AtomCertified) {
        const NodeAddress& leaf_depth_probe = lim.power_bounds.back().first;
        if (static_cast<std::int64_t>(leaf_depth_probe.size()) <= stage) {
            Rational norm = *lim.witness->exact_atom_norm();
            return norm >= threshold ? StageVerdict::In : StageVerdict::Out;
        }
    }
    if (auto u = lim.power_upper_at_stage(stage)) {
        // ||g||^p <= u; out once u^(1/p) drops strictly below 2^-k.
        if (power_below(*u, lim.exponent, k, true)) return StageVerdict::Out;
    }
    return StageVerdict::Unknown;
}

StageVerdict evaluate_A2(const VectorTree& tree, const ChainPartition& partition,
                         const std::vector<ChainLimit>& limits, const NodeAddress& nu,
                         std::uint32_t M, std::int64_t k, std::int64_t stage) {
    auto it = partition.assignment.find(nu);
    if (it == partition.assignment.end()) raise(ErrorCode::BadInput, "node not in partition");
    std::uint32_t m = it->second;
    // The partition property collapses the sum to at most one term.
    if (m < M) return StageVerdict::In;
    const ChainLimit& lim = limits[m];
    Rational threshold = Rational(1, BigInt(1) << k);

    if (const ChainLimit* atom = atom_at_stage(lim, partition, stage)) {
        Rational norm = *atom->witness->exact_atom_norm();
        return norm <= threshold ? StageVerdict::In : StageVerdict::Out;
    }
    if (auto u = lim.power_upper_at_stage(stage)) {
        if (power_below(*u, tree.exponent(), k, false)) return StageVerdict::In;
    }
    return StageVerdict::Unknown;
}

} // namespace lpiso
