#include "lpiso/vector_tree.hpp"

#include <algorithm>

namespace lpiso {

std::string address_to_string(const NodeAddress& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

std::optional<NodeAddress> parse_address(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
    NodeAddress addr;
    std::string body = text.substr(1, text.size() - 2);
    if (body.empty()) return addr;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            addr.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return addr;
}

VectorTree::VectorTree(SpaceTag tag, Exponent p, std::optional<std::uint32_t> dim,
                       std::int64_t depth_budget)
    : tag_(tag), p_(std::move(p)), dim_(dim), depth_budget_(depth_budget) {
    if (depth_budget < 0) raise(ErrorCode::BadInput, "depth budget must be nonnegative");
}

void VectorTree::add_node(const NodeAddress& addr, LpVector label, std::optional<Term> term) {
    if (static_cast<std::int64_t>(addr.size()) > depth_budget_)
        raise(ErrorCode::BadInput, "node beyond depth budget");
    if (!addr.empty()) {
        NodeAddress parent(addr.begin(), addr.end() - 1);
        if (!labels_.count(parent)) raise(ErrorCode::BadInput, "parent missing: tree must stay prefix-closed");
    }
    if (labels_.count(addr)) raise(ErrorCode::BadInput, "duplicate node " + address_to_string(addr));
    std::string lit = label.to_literal();
    if (!label_literals_.insert(lit).second)
        raise(ErrorCode::BadInput, "label map must be injective; repeated " + lit);
    if (term) terms_.emplace(addr, *term);
    labels_.emplace(addr, std::move(label));
}

const LpVector& VectorTree::label(const NodeAddress& addr) const {
    auto it = labels_.find(addr);
    if (it == labels_.end()) raise(ErrorCode::BadInput, "no node " + address_to_string(addr));
    return it->second;
}

std::optional<Term> VectorTree::term(const NodeAddress& addr) const {
    auto it = terms_.find(addr);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

std::vector<NodeAddress> VectorTree::children(const NodeAddress& addr) const {
    std::vector<NodeAddress> out;
    NodeAddress probe = addr;
    probe.push_back(0);
    for (auto it = labels_.lower_bound(probe); it != labels_.end(); ++it) {
        const NodeAddress& cand = it->first;
        if (cand.size() < addr.size() || !std::equal(addr.begin(), addr.end(), cand.begin())) break;
        if (cand.size() == addr.size() + 1) out.push_back(cand);
    }
    return out;
}

std::vector<NodeAddress> VectorTree::bfs_order() const {
    std::vector<NodeAddress> order;
    order.reserve(labels_.size());
    for (const auto& [addr, label] : labels_) order.push_back(addr);
    std::stable_sort(order.begin(), order.end(), [](const NodeAddress& a, const NodeAddress& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return order;
}

std::uint32_t fan_width(std::int64_t depth_budget) {
    return static_cast<std::uint32_t>(std::max<std::int64_t>(1, 2 * depth_budget));
}

namespace {

Term unit_term(std::uint32_t g) { return Term().with(g, Rational(1)); }

// Level-order index of the dyadic piece at bisection address bits.
std::uint64_t piece_index(const NodeAddress& bits) {
    std::uint64_t j = 0;
    for (std::uint32_t b : bits) j = (j << 1) | b;
    return dyadic_interval_index(static_cast<std::int64_t>(bits.size()), j);
}

void add_term_node(VectorTree& tree, const Presentation& pres, const NodeAddress& addr,
                   const Term& term) {
    LpVector v = LpVector::zero(pres.tag(), pres.exponent(), pres.dimension());
    for (const auto& [i, c] : term.coeffs()) v = v.add(pres.generator(i).scale(c));
    tree.add_node(addr, std::move(v), term);
}

// Bisection subtree under `base`: node for bit string sigma carries the
// generator term of 1_{D(sigma)}, continuous-slot indexed for sum spaces.
void build_bisection(VectorTree& tree, const Presentation& pres, const NodeAddress& base,
                     bool sum_space, std::int64_t remaining) {
    struct Item {
        NodeAddress bits;
    };
    std::vector<Item> frontier{{NodeAddress{}}};
    for (std::int64_t level = 1; level <= remaining; ++level) {
        std::vector<Item> next;
        for (const auto& item : frontier) {
            for (std::uint32_t b = 0; b < 2; ++b) {
                NodeAddress bits = item.bits;
                bits.push_back(b);
                NodeAddress addr = base;
                addr.insert(addr.end(), bits.begin(), bits.end());
                std::uint64_t m = piece_index(bits);
                std::uint32_t g = sum_space ? static_cast<std::uint32_t>(2 * m + 1)
                                            : static_cast<std::uint32_t>(m);
                add_term_node(tree, pres, addr, unit_term(g));
                next.push_back({bits});
            }
        }
        frontier = std::move(next);
    }
}

} // namespace

VectorTree presentation_disintegration(const Presentation& pres, std::int64_t depth_budget) {
    if (pres.kind() != Presentation::Kind::Banach)
        raise(ErrorCode::UnsupportedSpace, "disintegrations are built over Banach presentations");
    SpaceTag tag = pres.tag();
    VectorTree tree(tag, pres.exponent(), pres.dimension(), depth_budget);

    switch (tag) {
        case SpaceTag::Lp01: {
            add_term_node(tree, pres, {}, unit_term(0));
            build_bisection(tree, pres, {}, false, depth_budget);
            break;
        }
        case SpaceTag::LpN:
        case SpaceTag::Lp: {
            std::uint32_t width = tag == SpaceTag::LpN ? *pres.dimension() : fan_width(depth_budget);
            Term root;
            for (std::uint32_t i = 0; i < width; ++i) root = root.add(unit_term(i));
            add_term_node(tree, pres, {}, root);
            if (width > 1 && depth_budget >= 1)
                for (std::uint32_t i = 0; i < width; ++i) add_term_node(tree, pres, {i}, unit_term(i));
            break;
        }
        case SpaceTag::LpNSum:
        case SpaceTag::LpSum: {
            std::uint32_t width = tag == SpaceTag::LpNSum ? *pres.dimension() : fan_width(depth_budget);
            Term root = unit_term(1);  // (0, 1_[0,1])
            for (std::uint32_t i = 0; i < width; ++i) root = root.add(unit_term(2 * i));
            add_term_node(tree, pres, {}, root);
            if (depth_budget >= 1) {
                for (std::uint32_t i = 0; i < width; ++i) add_term_node(tree, pres, {i}, unit_term(2 * i));
                add_term_node(tree, pres, {width}, unit_term(1));
                build_bisection(tree, pres, {width}, true, depth_budget - 1);
            }
            break;
        }
    }
    return tree;
}

VectorTree standard_disintegration(SpaceTag tag, const Exponent& p, std::int64_t depth_budget,
                                   std::optional<std::uint32_t> dim) {
    return presentation_disintegration(Presentation::standard(tag, p, dim), depth_budget);
}

namespace {

bool is_prefix(const NodeAddress& a, const NodeAddress& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Certified lower bound on ||probe - s||_p^p over the span s of the labels:
// unreachable atomic coordinates plus value splits inside grid cells, both of
// which every span member must miss.
DyadicInterval span_distance_power_lower(const LpVector& probe,
                                         const std::set<std::uint32_t>& reachable,
                                         std::int64_t grid_level, std::int64_t k) {
    const Exponent& p = probe.exponent();
    DyadicInterval total = DyadicInterval::point(0);
    for (const auto& [i, c] : probe.atomic().coeffs())
        if (!reachable.count(i))
            total = interval_add(total, pow_of_rational(rat_abs(c), p.a(), p.b(), k));
    if (!probe.continuous().is_zero()) {
        std::int64_t fine = std::max(grid_level, probe.continuous().breakpoint_level());
        auto cells = probe.continuous().values_on_grid(fine);
        std::size_t group = static_cast<std::size_t>(1) << (fine - grid_level);
        for (std::size_t start = 0; start < cells.size(); start += group) {
            Rational vmin = cells[start], vmax = cells[start];
            for (std::size_t j = 1; j < group; ++j) {
                vmin = std::min(vmin, cells[start + j]);
                vmax = std::max(vmax, cells[start + j]);
            }
            if (vmin == vmax) continue;
            // Any constant a on the cell pays at least
            // 2^-fine * (|vmin - a|^p + |vmax - a|^p) >= 2^-fine * 2 ((vmax-vmin)/2)^p.
            DyadicInterval gap = pow_of_rational((vmax - vmin) / 2, p.a(), p.b(), k);
            total = interval_add(total, interval_scale(gap, Dyadic(BigInt(2), -fine)));
        }
    }
    return total;
}

} // namespace

DisintegrationReport validate_disintegration(const VectorTree& tree, std::int64_t k,
                                             std::int64_t tolerance_log2,
                                             const std::vector<LpVector>& probes) {
    DisintegrationReport report;
    report.depth_budget = tree.depth_budget();
    report.density_tolerance_log2 = tolerance_log2;
    if (tree.tag() == SpaceTag::Lp || tree.tag() == SpaceTag::LpSum)
        report.notes.push_back("infinite atomic branching capped at " +
                               std::to_string(fan_width(tree.depth_budget())) + " children");
    auto order = tree.bfs_order();
    if (order.empty()) raise(ErrorCode::BadInput, "empty tree");

    report.nonvanishing = true;
    for (const auto& addr : order) {
        if (tree.label(addr).is_zero()) {
            report.nonvanishing = false;
            report.notes.push_back("zero label at " + address_to_string(addr));
        }
    }

    report.separating = true;
    for (std::size_t x = 0; x < order.size() && report.separating; ++x) {
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            if (is_prefix(order[x], order[y]) || is_prefix(order[y], order[x])) continue;
            if (!disjointly_supported(tree.label(order[x]), tree.label(order[y]))) {
                report.separating = false;
                report.notes.push_back("incomparable nodes " + address_to_string(order[x]) + ", " +
                                       address_to_string(order[y]) + " share support");
                break;
            }
        }
    }

    report.summative = true;
    for (const auto& addr : order) {
        auto kids = tree.children(addr);
        if (kids.empty()) continue;
        LpVector sum = LpVector::zero(tree.tag(), tree.exponent(), tree.dimension());
        for (const auto& kid : kids) sum = sum.add(tree.label(kid));
        if (!(sum == tree.label(addr))) {
            report.summative = false;
            report.notes.push_back("node " + address_to_string(addr) + " is not the sum of its children");
        }
    }

    // Span data for the density check.
    std::set<std::uint32_t> reachable;
    std::int64_t grid_level = 0;
    for (const auto& [addr, label] : tree.nodes()) {
        for (const auto& [i, c] : label.atomic().coeffs()) reachable.insert(i);
        grid_level = std::max(grid_level, label.continuous().breakpoint_level());
    }

    Rational tol = Rational(1) / (BigInt(1) << tolerance_log2);
    const Exponent& p = tree.exponent();
    DyadicInterval tol_power = pow_of_rational(tol, p.a(), p.b(), k);
    bool any_inconclusive = false, any_violated = false;
    for (const auto& probe : probes) {
        ++report.probes_checked;
        // Best in-span approximant: drop unreachable coordinates, average the
        // continuous part over the grid cells.
        SeqVector atoms;
        for (const auto& [i, c] : probe.atomic().coeffs())
            if (reachable.count(i)) atoms = atoms.with(i, c);
        StepFunction cont;
        if (!probe.continuous().is_zero()) {
            std::int64_t fine = std::max(grid_level, probe.continuous().breakpoint_level());
            auto cells = probe.continuous().values_on_grid(fine);
            std::size_t group = static_cast<std::size_t>(1) << (fine - grid_level);
            std::vector<Rational> avg;
            for (std::size_t start = 0; start < cells.size(); start += group) {
                Rational s(0);
                for (std::size_t j = 0; j < group; ++j) s += cells[start + j];
                avg.push_back(s / BigInt(group));
            }
            cont = StepFunction::from_grid(grid_level, avg);
        }
        LpVector approx(tree.tag(), p, atoms, cont, tree.dimension());
        DyadicInterval residual = probe.sub(approx).norm(std::max(k, tolerance_log2 + 4));
        if (residual.certainly_le(tol)) continue;
        DyadicInterval lower = span_distance_power_lower(probe, reachable, grid_level, k);
        if (lower.lo().to_rational() > tol_power.hi().to_rational()) {
            any_violated = true;
            report.notes.push_back("probe " + probe.to_literal() + " is certifiably outside the span");
        } else {
            any_inconclusive = true;
            report.notes.push_back("probe " + probe.to_literal() + " inconclusive at this depth");
        }
    }
    report.density = any_violated ? DensityVerdict::Violated
                                  : (any_inconclusive ? DensityVerdict::Inconclusive
                                                      : DensityVerdict::CertifiedAtDepth);
    return report;
}

std::string format_report(const DisintegrationReport& report) {
    auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
    std::string density;
    switch (report.density) {
        case DensityVerdict::CertifiedAtDepth: density = "certified-at-depth"; break;
        case DensityVerdict::Violated: density = "violated"; break;
        case DensityVerdict::Inconclusive: density = "inconclusive"; break;
    }
    std::string s;
    s += "depth-budget " + std::to_string(report.depth_budget) + "\n";
    s += "nonvanishing " + std::string(flag(report.nonvanishing)) + "\n";
    s += "separating " + std::string(flag(report.separating)) + "\n";
    s += "summative " + std::string(flag(report.summative)) + "\n";
    s += "linearly-dense " + density + " (tolerance 2^-" +
         std::to_string(report.density_tolerance_log2) + ", probes " +
         std::to_string(report.probes_checked) + ")\n";
    for (const auto& note : report.notes) s += "note: " + note + "\n";
    return s;
}

} // namespace lpiso
