#include "lpiso/signature.hpp"

namespace lpiso {

Signature Signature::banach() {
    Signature s;
    s.name_ = "banach";
    s.operations_ = {{"+", 2}, {"*<s>", 1}};
    s.functionals_ = {{"norm", 1}};
    s.constants_ = {"0"};
    return s;
}

Signature Signature::bare_metric() {
    Signature s;
    s.name_ = "metric";
    return s;
}

bool Signature::has_symbol(const std::string& symbol) const {
    if (name_ == "banach") {
        if (symbol == "+" || symbol == "norm" || symbol == "0") return true;
        return scalar_of_symbol(symbol).has_value();
    }
    return false;
}

std::int64_t Signature::modulus(const std::string& symbol, std::int64_t k) const {
    if (!has_symbol(symbol) || symbol == "0")
        raise(ErrorCode::BadInput, "no modulus for symbol " + symbol);
    if (symbol == "+") return k + 1;
    if (symbol == "norm") return k;
    return k + ceil_log2_abs(*scalar_of_symbol(symbol));
}

std::string Signature::scalar_symbol(const Rational& s) { return "*" + to_string(s); }

std::optional<Rational> Signature::scalar_of_symbol(const std::string& symbol) {
    if (symbol.size() < 2 || symbol[0] != '*') return std::nullopt;
    return parse_rational(symbol.substr(1));
}

} // namespace lpiso
