#include "lpiso/presentation.hpp"

#include <algorithm>

namespace lpiso {

namespace {

LpVector standard_generator(SpaceTag tag, const Exponent& p, std::optional<std::uint32_t> dim,
                            std::uint32_t i) {
    auto basis_or_zero = [&](std::uint32_t j) {
        if (dim && j >= *dim) return LpVector::zero(tag, p, dim);
        return LpVector::basis(tag, p, j, dim);
    };
    switch (tag) {
        case SpaceTag::LpN:
        case SpaceTag::Lp:
            return basis_or_zero(i);
        case SpaceTag::Lp01: {
            auto [a, b] = dyadic_interval_at(i);
            return LpVector::step(tag, p, StepFunction::indicator(a, b));
        }
        case SpaceTag::LpNSum:
        case SpaceTag::LpSum: {
            if (i % 2 == 0) return basis_or_zero(i / 2);
            auto [a, b] = dyadic_interval_at(i / 2);
            return LpVector(tag, p, SeqVector(), StepFunction::indicator(a, b), dim);
        }
    }
    raise(ErrorCode::UnsupportedSpace, "unknown tag");
}

} // namespace

Presentation Presentation::standard(SpaceTag tag, const Exponent& p,
                                    std::optional<std::uint32_t> dim) {
    if (has_dimension_cap(tag) && !dim)
        raise(ErrorCode::BadInput, "finite-dimensional tag needs a dimension");
    Presentation pres;
    pres.kind_ = Kind::Banach;
    pres.signature_ = Signature::banach();
    pres.tag_ = tag;
    pres.p_ = p;
    pres.dim_ = has_dimension_cap(tag) ? dim : std::nullopt;
    return pres;
}

Presentation Presentation::scrambled(SpaceTag tag, const Exponent& p,
                                     std::optional<std::uint32_t> dim, const Scramble& hidden) {
    hidden.validate();
    Presentation pres = standard(tag, p, dim);
    pres.scramble_ = hidden;
    return pres;
}

Presentation Presentation::finite_metric(std::vector<std::vector<Rational>> distances) {
    std::size_t n = distances.size();
    if (n == 0) raise(ErrorCode::BadInput, "empty distance table");
    for (std::size_t i = 0; i < n; ++i) {
        if (distances[i].size() != n) raise(ErrorCode::BadInput, "distance table must be square");
        if (distances[i][i] != 0) raise(ErrorCode::BadInput, "d(i,i) must be 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (distances[i][j] != distances[j][i]) raise(ErrorCode::BadInput, "distance table must be symmetric");
            if (i != j && distances[i][j] <= 0) raise(ErrorCode::BadInput, "off-diagonal distances must be positive");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (distances[i][j] > distances[i][l] + distances[l][j])
                    raise(ErrorCode::BadInput, "triangle inequality fails");
    Presentation pres;
    pres.kind_ = Kind::FiniteMetric;
    pres.signature_ = Signature::bare_metric();
    pres.distances_ = std::move(distances);
    return pres;
}

void Presentation::require_banach() const {
    if (kind_ != Kind::Banach) raise(ErrorCode::BadInput, "operation needs a Banach presentation");
}

SpaceTag Presentation::tag() const {
    require_banach();
    return tag_;
}

const Exponent& Presentation::exponent() const {
    require_banach();
    return p_;
}

LpVector Presentation::generator(std::uint32_t i) const {
    require_banach();
    LpVector g = standard_generator(tag_, p_, dim_, i);
    if (scramble_) g = scramble_->apply(g);
    return g;
}

LpVector Presentation::decode(const PointIndex& index) const {
    require_banach();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->map.find(index);
        if (it != cache_->map.end()) return it->second;
    }
    Term term = decode_term(index);
    LpVector v = LpVector::zero(tag_, p_, dim_);
    for (const auto& [i, c] : term.coeffs()) v = v.add(generator(i).scale(c));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->map.emplace(index, v);
    return v;
}

std::size_t Presentation::point_cardinality() const {
    if (kind_ != Kind::FiniteMetric) raise(ErrorCode::BadInput, "not a finite metric presentation");
    return distances_.size();
}

const std::vector<std::vector<Rational>>& Presentation::distance_table() const {
    if (kind_ != Kind::FiniteMetric) raise(ErrorCode::BadInput, "not a finite metric presentation");
    return distances_;
}

DyadicInterval Presentation::eval_metric(const PointIndex& i, const PointIndex& j,
                                         std::int64_t k) const {
    if (i < 0 || j < 0) raise(ErrorCode::BadInput, "negative rational-point index");
    if (kind_ == Kind::FiniteMetric) {
        std::size_t n = distances_.size();
        std::size_t a = static_cast<std::size_t>(i % n), b = static_cast<std::size_t>(j % n);
        return DyadicInterval::enclose(distances_[a][b], k);
    }
    if (i == j) return DyadicInterval::point(0);
    // Norm of the exact difference; symmetric by construction since the
    // power sums only see absolute values.
    return decode(i).sub(decode(j)).norm(k);
}

DyadicInterval Presentation::eval_functional(const std::string& symbol, const PointIndex& i,
                                             std::int64_t k) const {
    require_banach();
    if (symbol != "norm") raise(ErrorCode::BadInput, "unknown functional " + symbol);
    return decode(i).norm(k);
}

std::vector<std::string> Presentation::enumerate_rational_points(std::size_t bound) const {
    std::vector<std::string> out;
    out.reserve(bound);
    for (std::size_t t = 0; t < bound; ++t) out.push_back(describe_point(PointIndex(t)));
    return out;
}

std::string Presentation::describe_point(const PointIndex& index) const {
    if (kind_ == Kind::FiniteMetric)
        return "p" + PointIndex(index % distances_.size()).str();
    return render_term(decode_term(index));
}

PointIndex Presentation::term_add(const PointIndex& i, const PointIndex& j) const {
    require_banach();
    return encode_term(decode_term(i).add(decode_term(j)));
}

PointIndex Presentation::term_scale(const Rational& s, const PointIndex& i) const {
    require_banach();
    return encode_term(decode_term(i).scale(s));
}

PointIndex Presentation::index_of_term(const Term& term) const {
    require_banach();
    return encode_term(term);
}

ModulusReport check_modulus(const Presentation& pres, const std::string& symbol,
                            const std::function<std::int64_t(std::int64_t)>& delta,
                            std::size_t samples, std::int64_t k_max) {
    if (pres.kind() != Presentation::Kind::Banach)
        raise(ErrorCode::BadInput, "modulus checks need a Banach presentation");
    ModulusReport report;
    auto scalar = Signature::scalar_of_symbol(symbol);
    if (symbol != "+" && symbol != "norm" && !scalar)
        raise(ErrorCode::BadInput, "symbol not interpreted: " + symbol);

    // Unit-norm probe direction: a basis atom when the space has one, else
    // the full indicator; either way the probe norm is exactly |c|.
    const Exponent& p = pres.exponent();
    LpVector unit = has_atomic_part(pres.tag())
                        ? (has_dimension_cap(pres.tag()) ? LpVector::basis(pres.tag(), p, 0, pres.dimension())
                                                         : LpVector::basis(pres.tag(), p, 0))
                        : LpVector::step(pres.tag(), p, StepFunction::indicator(Dyadic::zero(), Dyadic::one()));
    if (pres.scramble()) unit = pres.scramble()->apply(unit);

    for (std::size_t s = 0; s < samples; ++s) {
        std::int64_t k = 1 + static_cast<std::int64_t>(s % static_cast<std::size_t>(k_max));
        std::int64_t d = delta(k);
        // |c| = (3/4) * 2^-delta(k): certified input distance <= 2^-delta(k).
        Rational c = Rational(3, 4) / (BigInt(1) << d);
        if (s % 2) c = -c;
        LpVector probe = unit.scale(c);

        PointIndex base = PointIndex(s % 8);
        LpVector x = pres.decode(base);
        std::int64_t work = k + 6;
        DyadicInterval out = DyadicInterval::point(0);
        std::string desc;
        if (symbol == "+") {
            LpVector y = pres.decode(PointIndex((s + 3) % 8));
            LpVector probe2 = unit.scale(c / 2);
            // d(x+y, (x+probe)+(y+probe2)) = ||probe+probe2||.
            out = x.add(y).sub(x.add(probe).add(y.add(probe2))).norm(work);
            desc = "+ at k=" + std::to_string(k);
        } else if (scalar) {
            out = x.scale(*scalar).sub(x.add(probe).scale(*scalar)).norm(work);
            desc = symbol + " at k=" + std::to_string(k);
        } else {
            DyadicInterval nx = x.norm(work);
            DyadicInterval ny = x.add(probe).norm(work);
            out = interval_abs(interval_sub(nx, ny));
            desc = "norm at k=" + std::to_string(k);
        }
        ++report.samples_checked;
        Rational threshold = Rational(1) / (BigInt(1) << k);
        if (out.certainly_ge(threshold)) {
            report.violations.push_back({k, desc, out});
        } else if (!out.certainly_lt(threshold)) {
            ++report.inconclusive;
        }
    }
    return report;
}

} // namespace lpiso
