#include "lpiso/lp_vector.hpp"

namespace lpiso {

const char* space_tag_name(SpaceTag t) {
    switch (t) {
        case SpaceTag::LpN: return "lp_n";
        case SpaceTag::Lp: return "lp";
        case SpaceTag::Lp01: return "Lp01";
        case SpaceTag::LpNSum: return "lpn_sum";
        case SpaceTag::LpSum: return "lp_sum";
    }
    return "?";
}

std::optional<SpaceTag> parse_space_tag(const std::string& name) {
    if (name == "lp_n") return SpaceTag::LpN;
    if (name == "lp") return SpaceTag::Lp;
    if (name == "Lp01") return SpaceTag::Lp01;
    if (name == "lpn_sum") return SpaceTag::LpNSum;
    if (name == "lp_sum") return SpaceTag::LpSum;
    return std::nullopt;
}

SeqVector SeqVector::add(const SeqVector& o) const {
    SeqVector r = *this;
    for (const auto& [i, c] : o.coeffs_) {
        auto it = r.coeffs_.find(i);
        if (it == r.coeffs_.end()) {
            r.coeffs_[i] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

SeqVector SeqVector::sub(const SeqVector& o) const { return add(o.scale(Rational(-1))); }

SeqVector SeqVector::scale(const Rational& c) const {
    SeqVector r;
    if (c == 0) return r;
    for (const auto& [i, v] : coeffs_) r.coeffs_[i] = v * c;
    return r;
}

bool SeqVector::disjoint_from(const SeqVector& o) const {
    for (const auto& [i, c] : coeffs_)
        if (o.coeffs_.count(i)) return false;
    return true;
}

Rational SeqVector::power_sum_exact(unsigned p) const {
    Rational total(0);
    for (const auto& [i, c] : coeffs_) total += rat_pow(rat_abs(c), p);
    return total;
}

DyadicInterval SeqVector::power_sum(const Exponent& p, std::int64_t k) const {
    if (p.is_integer()) return DyadicInterval::enclose(power_sum_exact(p.a()), k);
    // n terms at width 2^-(k + ceil(log2 n)) sum to width <= 2^-k.
    std::int64_t budget = k;
    std::size_t n = coeffs_.size();
    while (n > 1) {
        ++budget;
        n >>= 1;
    }
    DyadicInterval total = DyadicInterval::point(0);
    for (const auto& [i, c] : coeffs_)
        total = interval_add(total, pow_of_rational(rat_abs(c), p.a(), p.b(), budget));
    return total;
}

LpVector::LpVector(SpaceTag tag, Exponent p, SeqVector atomic, StepFunction continuous,
                   std::optional<std::uint32_t> dim)
    : tag_(tag), p_(std::move(p)), dim_(dim), atomic_(std::move(atomic)), continuous_(std::move(continuous)) {
    if (!has_atomic_part(tag_) && !atomic_.is_zero())
        raise(ErrorCode::SpaceMismatch, "atomic part not allowed in Lp01");
    if (!has_continuous_part(tag_) && !continuous_.is_zero())
        raise(ErrorCode::SpaceMismatch, "continuous part not allowed in a sequence space");
    if (has_dimension_cap(tag_)) {
        if (!dim_) raise(ErrorCode::BadInput, "finite-dimensional tag needs a dimension");
        if (auto m = atomic_.max_index(); m && *m >= *dim_)
            raise(ErrorCode::SpaceMismatch, "coordinate beyond dimension cap");
    } else {
        dim_.reset();
    }
}

LpVector LpVector::zero(SpaceTag tag, const Exponent& p, std::optional<std::uint32_t> dim) {
    return LpVector(tag, p, SeqVector(), StepFunction(), dim);
}

LpVector LpVector::basis(SpaceTag tag, const Exponent& p, std::uint32_t i, std::optional<std::uint32_t> dim) {
    return LpVector(tag, p, SeqVector::unit(i), StepFunction(), dim);
}

LpVector LpVector::step(SpaceTag tag, const Exponent& p, StepFunction f, std::optional<std::uint32_t> dim) {
    return LpVector(tag, p, SeqVector(), std::move(f), dim);
}

void LpVector::require_compatible(const LpVector& o) const {
    if (tag_ != o.tag_ || !(p_ == o.p_) || dim_ != o.dim_)
        raise(ErrorCode::SpaceMismatch,
              std::string(space_tag_name(tag_)) + " vs " + space_tag_name(o.tag_));
}

LpVector LpVector::add(const LpVector& o) const {
    require_compatible(o);
    return LpVector(tag_, p_, atomic_.add(o.atomic_), continuous_.add(o.continuous_), dim_);
}

LpVector LpVector::sub(const LpVector& o) const {
    require_compatible(o);
    return LpVector(tag_, p_, atomic_.sub(o.atomic_), continuous_.sub(o.continuous_), dim_);
}

LpVector LpVector::scale(const Rational& c) const {
    return LpVector(tag_, p_, atomic_.scale(c), continuous_.scale(c), dim_);
}

Rational LpVector::norm_power_exact() const {
    if (!p_.is_integer()) raise(ErrorCode::BadInput, "exact norm power needs integer p");
    return atomic_.power_sum_exact(p_.a()) + continuous_.power_sum_exact(p_.a());
}

DyadicInterval LpVector::norm_power(std::int64_t k) const {
    if (p_.is_integer()) return DyadicInterval::enclose(norm_power_exact(), k);
    return interval_add(atomic_.power_sum(p_, k + 1), continuous_.power_sum(p_, k + 1));
}

DyadicInterval LpVector::norm(std::int64_t k) const {
    if (auto exact = exact_atom_norm())
        return DyadicInterval::enclose(*exact, k);
    // root_p expands near 0, so deepen the working scale until the enclosure
    // of (||v||^p)^(1/p) is narrow enough.
    for (std::int64_t scale = k + 2;; scale *= 2) {
        DyadicInterval power = norm_power(scale);
        DyadicInterval r = root_p(power, p_, scale);
        if (r.width_at_most(k)) return r;
    }
}

std::optional<Rational> LpVector::exact_atom_norm() const {
    if (is_zero()) return Rational(0);
    if (!continuous_.is_zero()) return std::nullopt;
    if (atomic_.coeffs().size() != 1) return std::nullopt;
    return rat_abs(atomic_.coeffs().begin()->second);
}

std::optional<std::uint32_t> LpVector::single_atom_index() const {
    if (!continuous_.is_zero() || atomic_.coeffs().size() != 1) return std::nullopt;
    return atomic_.coeffs().begin()->first;
}

bool LpVector::operator==(const LpVector& o) const {
    return tag_ == o.tag_ && p_ == o.p_ && dim_ == o.dim_ && atomic_ == o.atomic_ &&
           continuous_ == o.continuous_;
}

std::string LpVector::to_literal() const {
    std::string atom = "[";
    bool first = true;
    for (const auto& [i, c] : atomic_.coeffs()) {
        if (!first) atom += ",";
        atom += std::to_string(i) + ":" + to_string(c);
        first = false;
    }
    atom += "]";
    if (!has_continuous_part(tag_)) return atom;
    if (!has_atomic_part(tag_)) return continuous_.to_literal();
    return "(" + atom + ", " + continuous_.to_literal() + ")";
}

bool disjointly_supported(const LpVector& f, const LpVector& g) {
    f.require_compatible(g);
    return f.atomic().disjoint_from(g.atomic()) && f.continuous().disjoint_from(g.continuous());
}

bool is_component(const LpVector& f, const LpVector& g) {
    return disjointly_supported(g.sub(f), f);
}

bool is_component_by_restriction(const LpVector& f, const LpVector& g) {
    f.require_compatible(g);
    for (const auto& [i, c] : f.atomic().coeffs())
        if (g.atomic().at(i) != c) return false;
    return f.continuous().agrees_on_support(g.continuous());
}

LpVector lp_sum_embed(const LpVector& atomic_part, const LpVector& continuous_part) {
    if (atomic_part.tag() != SpaceTag::LpN && atomic_part.tag() != SpaceTag::Lp)
        raise(ErrorCode::SpaceMismatch, "first operand must be a sequence-space vector");
    if (continuous_part.tag() != SpaceTag::Lp01)
        raise(ErrorCode::SpaceMismatch, "second operand must be an Lp01 vector");
    if (!(atomic_part.exponent() == continuous_part.exponent()))
        raise(ErrorCode::SpaceMismatch, "exponents differ");
    SpaceTag sum = atomic_part.tag() == SpaceTag::LpN ? SpaceTag::LpNSum : SpaceTag::LpSum;
    return LpVector(sum, atomic_part.exponent(), atomic_part.atomic(), continuous_part.continuous(),
                    atomic_part.dimension());
}

} // namespace lpiso
