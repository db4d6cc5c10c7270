#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cylwig/symbol.hpp"

namespace cylwig {

enum class Trig { None, Cos, Sin };

/// One parsed term: coefficient * p^p_power * trig(mode * t).
struct SymbolTerm {
    cd coefficient{1.0, 0.0};
    int p_power = 0;
    Trig trig = Trig::None;
    int mode = 0;  // >= 1 when trig != None
};

/// Normalized term list (like terms merged, zero terms dropped, canonical
/// order: descending p power, cos before sin, ascending mode).
struct SymbolExpression {
    std::vector<SymbolTerm> terms;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

/// Grammar:
///   expr  := term (('+'|'-') term)*
///   term  := [coef '*']? ['p' ['^' int]]? ['*']? [('cos'|'sin') '(' int? 't' ')']?
///   coef  := float | '(' float ',' float ')'
/// Whitespace-insensitive. sin(0t) is rejected.
SymbolExpression parse_symbol(std::string_view text);

std::string print_symbol(const SymbolExpression& expr);

PhaseSpaceSymbol to_phase_space_symbol(const SymbolExpression& expr);

/// Inverse of to_phase_space_symbol for symbols with the hermitian pairing
/// P_{-k} = conj(P_k) failing or holding alike: every Fourier pair (k, -k)
/// is rewritten as cos/sin terms with complex coefficients.
SymbolExpression from_phase_space_symbol(const PhaseSpaceSymbol& symbol, double drop_tol = 0.0);

}  // namespace cylwig
