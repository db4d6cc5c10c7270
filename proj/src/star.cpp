#include "cylwig/star.hpp"

#include <cmath>

namespace cylwig {

PhaseSpaceSymbol star(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar) {
    PhaseSpaceSymbol out;
    for (const auto& [k, pk] : a.terms())
        for (const auto& [l, ql] : b.terms()) {
            const Polynomial shifted_p = pk.shifted(0.5 * hbar * l);
            const Polynomial shifted_q = ql.shifted(-0.5 * hbar * k);
            out.add_term(k + l, shifted_p * shifted_q);
        }
    return out;
}

PhaseSpaceSymbol star_commutator(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar) {
    return star(a, b, hbar) - star(b, a, hbar);
}

PhaseSpaceSymbol star_anticommutator(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, double hbar) {
    return star(a, b, hbar) + star(b, a, hbar);
}

std::vector<PhaseSpaceSymbol> hbar_expansion(const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b, int order) {
    if (order < 0) throw ParameterError("expansion order must be >= 0");
    std::vector<PhaseSpaceSymbol> out(order + 1);
    for (const auto& [k, pk] : a.terms())
        for (const auto& [l, ql] : b.terms()) {
            // P(p + h l/2) Q(p - h k/2) = sum_{r} h^r sum_{i+j=r}
            //   (l/2)^i (-k/2)^j P^{(i)} Q^{(j)} / (i! j!)
            std::vector<Polynomial> dp{pk}, dq{ql};
            for (int r = 1; r <= order; ++r) {
                dp.push_back(dp.back().derivative());
                dq.push_back(dq.back().derivative());
            }
            double fact_i = 1.0;
            for (int i = 0; i <= order; ++i) {
                if (i > 0) fact_i *= i;
                if (dp[i].is_zero()) continue;
                double fact_j = 1.0;
                for (int j = 0; i + j <= order; ++j) {
                    if (j > 0) fact_j *= j;
                    if (dq[j].is_zero()) continue;
                    const double ci = std::pow(0.5 * l, i) / fact_i;
                    const double cj = std::pow(-0.5 * k, j) / fact_j;
                    out[i + j].add_term(k + l, (dp[i] * dq[j]).scaled(ci * cj));
                }
            }
        }
    return out;
}

}  // namespace cylwig
