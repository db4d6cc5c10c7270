#include "cylwig/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace cylwig {

Polynomial Polynomial::monomial(int degree, cd v) {
    if (degree < 0) throw ParameterError("monomial degree must be >= 0");
    std::vector<cd> c(degree + 1, cd{0.0, 0.0});
    c[degree] = v;
    return Polynomial(std::move(c));
}

cd Polynomial::eval(cd p) const {
    cd acc = 0.0;
    for (int j = static_cast<int>(c_.size()) - 1; j >= 0; --j) acc = acc * p + c_[j];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<cd> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(cd a) const {
    if (a == cd{0.0, 0.0} || is_zero()) return *this;
    // Horner in (p + a); exact when a and the coefficients are dyadic.
    std::vector<cd> acc;
    for (int j = static_cast<int>(c_.size()) - 1; j >= 0; --j) {
        std::vector<cd> next(acc.size() + 1, cd{0.0, 0.0});
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * a;
        }
        if (next.empty()) next.push_back(0.0);
        next[0] += c_[j];
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

Polynomial Polynomial::conjugated() const {
    std::vector<cd> c(c_);
    for (auto& v : c) v = std::conj(v);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<cd> c(std::max(c_.size(), o.c_.size()), cd{0.0, 0.0});
    for (std::size_t j = 0; j < c_.size(); ++j) c[j] += c_[j];
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[j] += o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<cd> c(c_.size() + o.c_.size() - 1, cd{0.0, 0.0});
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(cd v) const {
    std::vector<cd> c(c_);
    for (auto& x : c) x *= v;
    return Polynomial(std::move(c));
}

void Polynomial::trim(double tol) {
    while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
}

PhaseSpaceSymbol PhaseSpaceSymbol::p_power(int j, cd a) {
    PhaseSpaceSymbol s;
    s.add_term(0, Polynomial::monomial(j, a));
    return s;
}

PhaseSpaceSymbol PhaseSpaceSymbol::cos_term(int k, int j, cd a) {
    if (k < 0) throw ParameterError("mode must be >= 0");
    PhaseSpaceSymbol s;
    if (k == 0) {
        s.add_term(0, Polynomial::monomial(j, a));
    } else {
        s.add_term(k, Polynomial::monomial(j, 0.5 * a));
        s.add_term(-k, Polynomial::monomial(j, 0.5 * a));
    }
    return s;
}

PhaseSpaceSymbol PhaseSpaceSymbol::sin_term(int k, int j, cd a) {
    if (k < 1) throw ParameterError("sin mode must be >= 1");
    PhaseSpaceSymbol s;
    s.add_term(k, Polynomial::monomial(j, a * cd{0.0, -0.5}));
    s.add_term(-k, Polynomial::monomial(j, a * cd{0.0, 0.5}));
    return s;
}

void PhaseSpaceSymbol::add_term(int k, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial PhaseSpaceSymbol::term(int k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Polynomial{} : it->second;
}

int PhaseSpaceSymbol::max_mode() const {
    int m = 0;
    for (const auto& [k, p] : terms_) m = std::max(m, std::abs(k));
    return m;
}

int PhaseSpaceSymbol::max_degree() const {
    int d = 0;
    for (const auto& [k, p] : terms_) d = std::max(d, p.degree());
    return d;
}

cd PhaseSpaceSymbol::eval(double theta, double p) const {
    cd acc = 0.0;
    for (const auto& [k, poly] : terms_) acc += std::polar(1.0, k * theta) * poly.eval(p);
    return acc;
}

bool PhaseSpaceSymbol::is_real_valued(double tol) const {
    for (const auto& [k, poly] : terms_) {
        const Polynomial mirror = term(-k);
        const Polynomial diff = mirror - poly.conjugated();
        for (const cd& c : diff.coeffs())
            if (std::abs(c) > tol) return false;
    }
    return true;
}

PhaseSpaceSymbol PhaseSpaceSymbol::operator+(const PhaseSpaceSymbol& o) const {
    PhaseSpaceSymbol out(*this);
    for (const auto& [k, p] : o.terms_) out.add_term(k, p);
    return out;
}

PhaseSpaceSymbol PhaseSpaceSymbol::operator-(const PhaseSpaceSymbol& o) const { return *this + o.scaled(-1.0); }

PhaseSpaceSymbol PhaseSpaceSymbol::scaled(cd v) const {
    PhaseSpaceSymbol out;
    if (v == cd{0.0, 0.0}) return out;
    for (const auto& [k, p] : terms_) out.terms_.emplace(k, p.scaled(v));
    return out;
}

PhaseSpaceSymbol PhaseSpaceSymbol::pointwise_product(const PhaseSpaceSymbol& o) const {
    PhaseSpaceSymbol out;
    for (const auto& [k1, p1] : terms_)
        for (const auto& [k2, p2] : o.terms_) out.add_term(k1 + k2, p1 * p2);
    return out;
}

PhaseSpaceSymbol PhaseSpaceSymbol::conjugated() const {
    PhaseSpaceSymbol out;
    for (const auto& [k, p] : terms_) out.add_term(-k, p.conjugated());
    return out;
}

void PhaseSpaceSymbol::prune(double tol) {
    std::map<int, Polynomial> kept;
    for (auto& [k, p] : terms_) {
        std::vector<cd> c(p.coeffs());
        for (auto& v : c)
            if (std::abs(v) <= tol) v = 0.0;
        Polynomial q(std::move(c));
        q.trim(tol);
        if (!q.is_zero()) kept.emplace(k, std::move(q));
    }
    terms_ = std::move(kept);
}

double PhaseSpaceSymbol::max_coeff_distance(const PhaseSpaceSymbol& o) const {
    double d = 0.0;
    auto scan = [&](const PhaseSpaceSymbol& a, const PhaseSpaceSymbol& b) {
        for (const auto& [k, p] : a.terms_) {
            const Polynomial q = b.term(k);
            const int deg = std::max(p.degree(), q.degree());
            for (int j = 0; j <= deg; ++j) d = std::max(d, std::abs(p.coeff(j) - q.coeff(j)));
        }
    };
    scan(*this, o);
    scan(o, *this);
    return d;
}

}  // namespace cylwig
