#include "lpiso/term.hpp"

#include <vector>

namespace lpiso {

PointIndex pair_code(const PointIndex& x, const PointIndex& y) {
    PointIndex s = x + y;
    return s * (s + 1) / 2 + y;
}

std::pair<PointIndex, PointIndex> unpair_code(const PointIndex& z) {
    PointIndex disc = 8 * z + 1;
    PointIndex w = (boost::multiprecision::sqrt(disc) - 1) / 2;
    PointIndex t = w * (w + 1) / 2;
    PointIndex y = z - t;
    return {w - y, y};
}

namespace {

// Calkin-Wilf walk: binary digits of m+1 below the leading bit select
// left (a, a+b) / right (a+b, b) moves from the root 1/1.
Rational calkin_wilf(const PointIndex& m) {
    PointIndex n = m + 1;
    std::vector<bool> bits;
    for (PointIndex v = n; v > 1; v >>= 1) bits.push_back((v & 1) != 0);
    BigInt a = 1, b = 1;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        if (*it) a += b; else b += a;
    }
    return Rational(a, b);
}

PointIndex calkin_wilf_index(const Rational& q) {
    BigInt a = num(q), b = den(q);
    std::vector<bool> bits;
    while (!(a == 1 && b == 1)) {
        if (a > b) {
            bits.push_back(true);
            a -= b;
        } else {
            bits.push_back(false);
            b -= a;
        }
    }
    PointIndex n = 1;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) n = (n << 1) | (*it ? 1 : 0);
    return n - 1;
}

} // namespace

Rational coefficient_at(const PointIndex& code) {
    Rational q = calkin_wilf(code >> 1);
    return (code & 1) != 0 ? -q : q;
}

PointIndex coefficient_code(const Rational& value) {
    if (value == 0) raise(ErrorCode::BadInput, "zero has no coefficient code");
    PointIndex m = calkin_wilf_index(rat_abs(value)) << 1;
    return value < 0 ? m + 1 : m;
}

Term decode_term(const PointIndex& index) {
    if (index < 0) raise(ErrorCode::BadInput, "negative term index");
    Term term;
    PointIndex rest = index;
    BigInt next_index = 0;
    bool first = true;
    while (rest > 0) {
        auto [entry, tail] = unpair_code(rest - 1);
        auto [gap, coeff] = unpair_code(entry);
        BigInt idx = first ? gap : next_index + gap;
        if (idx > 0x7fffffff) raise(ErrorCode::BadInput, "generator index out of range");
        term = term.with(static_cast<std::uint32_t>(idx), coefficient_at(coeff));
        next_index = idx + 1;
        first = false;
        rest = tail;
    }
    return term;
}

PointIndex encode_term(const Term& term) {
    // Build listcode from the last entry backwards.
    std::vector<std::pair<std::uint32_t, Rational>> entries(term.coeffs().begin(), term.coeffs().end());
    PointIndex code = 0;
    for (std::size_t i = entries.size(); i-- > 0;) {
        BigInt gap = i == 0 ? BigInt(entries[i].first)
                            : BigInt(entries[i].first) - entries[i - 1].first - 1;
        PointIndex entry = pair_code(gap, coefficient_code(entries[i].second));
        code = pair_code(entry, code) + 1;
    }
    return code;
}

std::string render_term(const Term& term) {
    if (term.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : term.coeffs()) {
        if (!s.empty()) s += " + ";
        if (c == 1) {
        } else if (c == -1) {
            s += "-";
        } else {
            s += to_string(c) + " ";
        }
        s += "g" + std::to_string(i);
    }
    return s;
}

std::pair<Dyadic, Dyadic> dyadic_interval_at(std::uint64_t n) {
    std::int64_t level = 0;
    while ((std::uint64_t(1) << (level + 1)) <= n + 1) ++level;
    std::uint64_t j = n + 1 - (std::uint64_t(1) << level);
    return {Dyadic(BigInt(j), -level), Dyadic(BigInt(j + 1), -level)};
}

std::uint64_t dyadic_interval_index(std::int64_t level, std::uint64_t j) {
    return (std::uint64_t(1) << level) - 1 + j;
}

} // namespace lpiso
