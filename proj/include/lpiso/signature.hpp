#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpiso/rational.hpp"

namespace lpiso {

struct SymbolDecl {
    std::string name;
    unsigned arity;
};

// Metric signature: operation/functional/constant symbols with arities and a
// modulus-of-continuity table.  Two instances are shipped: the Banach
// signature and the bare metric signature (no symbols).
class Signature {
public:
    static Signature banach();
    static Signature bare_metric();

    const std::string& name() const { return name_; }
    const std::vector<SymbolDecl>& operations() const { return operations_; }
    const std::vector<SymbolDecl>& functionals() const { return functionals_; }
    const std::vector<std::string>& constants() const { return constants_; }

    bool has_symbol(const std::string& symbol) const;

    // Modulus Delta_phi(k); total on operation and functional symbols.
    //   Delta_+(k) = k+1, Delta_{*s}(k) = k + max(0, ceil(log2 |s|)),
    //   Delta_norm(k) = k.
    std::int64_t modulus(const std::string& symbol, std::int64_t k) const;

    // Scalar-multiplication symbols are the family "*<rational>".
    static std::string scalar_symbol(const Rational& s);
    static std::optional<Rational> scalar_of_symbol(const std::string& symbol);

private:
    std::string name_;
    std::vector<SymbolDecl> operations_;
    std::vector<SymbolDecl> functionals_;
    std::vector<std::string> constants_;
};

} // namespace lpiso
