#include "cylwig/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cylwig/kernel.hpp"
#include "cylwig/parallel.hpp"
#include "cylwig/simd.hpp"
#include "cylwig/sinc.hpp"

namespace cylwig {

ShiftedSincField ShiftedSincField::from_pair(const WaveFunction& psi2, const WaveFunction& psi1) {
    ShiftedSincField field;
    const double norm = 1.0 / kTwoPi;
    for (int m = -psi2.n_max(); m <= psi2.n_max(); ++m) {
        const cd cm = std::conj(psi2.coeff(m));
        if (cm == cd{0.0, 0.0}) continue;
        for (int n = -psi1.n_max(); n <= psi1.n_max(); ++n) {
            const cd cn = psi1.coeff(n);
            if (cn == cd{0.0, 0.0}) continue;
            field.add_term(n - m, m + n, cm * cn * norm);
        }
    }
    field.compress();
    return field;
}

ShiftedSincField ShiftedSincField::from_wavefunction(const WaveFunction& psi) {
    return from_pair(psi, psi);
}

void ShiftedSincField::add_term(int k, int s2, cd f) {
    if (f == cd{0.0, 0.0}) return;
    entries_.push_back({k, s2, f});
}

void ShiftedSincField::compress(double tol) {
    std::sort(entries_.begin(), entries_.end(), [](const FieldEntry& a, const FieldEntry& b) {
        return a.s2 != b.s2 ? a.s2 < b.s2 : a.k < b.k;
    });
    std::vector<FieldEntry> merged;
    merged.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().k == e.k && merged.back().s2 == e.s2)
            merged.back().f += e.f;
        else
            merged.push_back(e);
    }
    entries_.clear();
    for (const auto& e : merged)
        if (std::abs(e.f) > tol) entries_.push_back(e);
}

ShiftedSincField& ShiftedSincField::add_scaled(const ShiftedSincField& other, cd factor) {
    for (const auto& e : other.entries_) add_term(e.k, e.s2, factor * e.f);
    compress();
    return *this;
}

ShiftedSincField ShiftedSincField::scaled(cd factor) const {
    ShiftedSincField out(*this);
    for (auto& e : out.entries_) e.f *= factor;
    return out;
}

ShiftedSincField ShiftedSincField::theta_derivative() const {
    ShiftedSincField out;
    for (const auto& e : entries_)
        if (e.k != 0) out.add_term(e.k, e.s2, cd{0.0, static_cast<double>(e.k)} * e.f);
    out.compress();
    return out;
}

ShiftedSincField ShiftedSincField::shifted_pbar(int ds2) const {
    ShiftedSincField out(*this);
    for (auto& e : out.entries_) e.s2 -= ds2;
    return out;
}

bool ShiftedSincField::is_real_field(double tol) const {
    std::map<std::pair<int, int>, cd> lookup;
    for (const auto& e : entries_) lookup[{e.k, e.s2}] = e.f;
    for (const auto& e : entries_) {
        const auto it = lookup.find({-e.k, e.s2});
        const cd mirror = it == lookup.end() ? cd{0.0, 0.0} : it->second;
        if (std::abs(mirror - std::conj(e.f)) > tol) return false;
    }
    return true;
}

namespace {

// Distinct sinc centers with their angular coefficients, plus the k range.
struct Grouped {
    std::vector<int> s2;                          // distinct centers
    std::vector<std::vector<std::pair<int, cd>>> mode_lists;
    int k_min = 0, k_max = 0;
};

Grouped group_by_center(const std::vector<FieldEntry>& entries) {
    Grouped g;
    for (const auto& e : entries) {
        if (g.s2.empty() || g.s2.back() != e.s2) {
            g.s2.push_back(e.s2);
            g.mode_lists.emplace_back();
        }
        g.mode_lists.back().push_back({e.k, e.f});
        g.k_min = std::min(g.k_min, e.k);
        g.k_max = std::max(g.k_max, e.k);
    }
    return g;
}

// e^{i k theta} for k in [k_min, k_max], indexed by k - k_min.
std::vector<cd> phase_table(double theta, int k_min, int k_max) {
    std::vector<cd> ph(k_max - k_min + 1);
    const cd w = std::polar(1.0, theta);
    cd cur = std::polar(1.0, k_min * theta);
    for (int k = k_min; k <= k_max; ++k) {
        ph[k - k_min] = cur;
        cur *= w;
    }
    return ph;
}

}  // namespace

cd ShiftedSincField::evaluate(double theta, double pbar) const {
    cd acc = 0.0;
    int cur_k = 0;
    cd phase = 1.0;
    bool have_phase = false;
    for (const auto& e : entries_) {
        if (!have_phase || e.k != cur_k) {
            cur_k = e.k;
            phase = std::polar(1.0, cur_k * theta);
            have_phase = true;
        }
        acc += e.f * phase * sincpi(pbar - 0.5 * e.s2);
    }
    return acc;
}

cd ShiftedSincField::evaluate_dpbar(double theta, double pbar, int order) const {
    if (order == 0) return evaluate(theta, pbar);
    cd acc = 0.0;
    const double scale = std::pow(kPi, order);
    for (const auto& e : entries_) {
        const double u = kPi * (pbar - 0.5 * e.s2);
        acc += e.f * std::polar(1.0, e.k * theta) * scale * detail::sinc_deriv_any(u, order);
    }
    return acc;
}

cd ShiftedSincField::evaluate_sin(double theta, double pbar) const {
    cd acc = 0.0;
    for (const auto& e : entries_) acc += e.f * std::polar(1.0, e.k * theta) * sinpi(pbar - 0.5 * e.s2);
    return acc;
}

cd ShiftedSincField::evaluate_sin_flow(double theta, double pbar) const {
    cd acc = 0.0;
    for (const auto& e : entries_) {
        const double s = 0.5 * e.s2;
        acc += e.f * std::polar(1.0, e.k * theta) * ((pbar + s) * sinpi(pbar - s));
    }
    return acc;
}

std::vector<cd> ShiftedSincField::evaluate_grid(const PhaseSpaceGrid& g) const {
    const std::size_t np = g.pbar.size();
    std::vector<cd> out(g.size(), cd{0.0, 0.0});
    if (entries_.empty()) return out;

    const Grouped groups = group_by_center(entries_);
    std::vector<double> sp(np), cp(np);
    for (std::size_t j = 0; j < np; ++j) {
        sp[j] = sinpi(g.pbar[j]);
        cp[j] = cospi(g.pbar[j]);
    }
    const auto& kern = simd::active();

    parallel_for(g.theta.size(), [&](std::size_t row) {
        const auto phases = phase_table(g.theta[row], groups.k_min, groups.k_max);
        std::vector<double> out_re(np, 0.0), out_im(np, 0.0);
        for (std::size_t gi = 0; gi < groups.s2.size(); ++gi) {
            cd h = 0.0;
            for (const auto& [k, f] : groups.mode_lists[gi]) h += f * phases[k - groups.k_min];
            if (h == cd{0.0, 0.0}) continue;
            kern.accum_sinc(groups.s2[gi], simd::lattice_trig(groups.s2[gi]), g.pbar.data(), sp.data(), cp.data(),
                            h.real(), h.imag(), out_re.data(), out_im.data(), np);
        }
        for (std::size_t j = 0; j < np; ++j) out[row * np + j] = cd{out_re[j], out_im[j]};
    });
    return out;
}

std::vector<cd> ShiftedSincField::evaluate_grid_dpbar(const PhaseSpaceGrid& g, int order) const {
    if (order == 0) return evaluate_grid(g);
    const std::size_t np = g.pbar.size();
    std::vector<cd> out(g.size(), cd{0.0, 0.0});
    if (entries_.empty()) return out;

    const Grouped groups = group_by_center(entries_);

    if (order == 1) {
        std::vector<double> sp(np), cp(np);
        for (std::size_t j = 0; j < np; ++j) {
            sp[j] = sinpi(g.pbar[j]);
            cp[j] = cospi(g.pbar[j]);
        }
        const auto& kern = simd::active();
        parallel_for(g.theta.size(), [&](std::size_t row) {
            const auto phases = phase_table(g.theta[row], groups.k_min, groups.k_max);
            std::vector<double> out_re(np, 0.0), out_im(np, 0.0);
            for (std::size_t gi = 0; gi < groups.s2.size(); ++gi) {
                cd h = 0.0;
                for (const auto& [k, f] : groups.mode_lists[gi]) h += f * phases[k - groups.k_min];
                h *= kPi;  // d/dpbar brings one factor pi
                if (h == cd{0.0, 0.0}) continue;
                kern.accum_sinc_deriv(groups.s2[gi], simd::lattice_trig(groups.s2[gi]), g.pbar.data(), sp.data(),
                                      cp.data(), h.real(), h.imag(), out_re.data(), out_im.data(), np);
            }
            for (std::size_t j = 0; j < np; ++j) out[row * np + j] = cd{out_re[j], out_im[j]};
        });
        return out;
    }

    const double scale = std::pow(kPi, order);
    parallel_for(g.theta.size(), [&](std::size_t row) {
        const auto phases = phase_table(g.theta[row], groups.k_min, groups.k_max);
        for (std::size_t gi = 0; gi < groups.s2.size(); ++gi) {
            cd h = 0.0;
            for (const auto& [k, f] : groups.mode_lists[gi]) h += f * phases[k - groups.k_min];
            if (h == cd{0.0, 0.0}) continue;
            const double s = 0.5 * groups.s2[gi];
            for (std::size_t j = 0; j < np; ++j)
                out[row * np + j] += h * (scale * detail::sinc_deriv_any(kPi * (g.pbar[j] - s), order));
        }
    });
    return out;
}

namespace {

template <typename Weight>
std::vector<cd> grid_walk(const std::vector<FieldEntry>& entries, const PhaseSpaceGrid& g, Weight weight) {
    const std::size_t np = g.pbar.size();
    std::vector<cd> out(g.theta.size() * np, cd{0.0, 0.0});
    if (entries.empty()) return out;
    const Grouped groups = group_by_center(entries);
    std::vector<double> sp(np), cp(np);
    for (std::size_t j = 0; j < np; ++j) {
        sp[j] = sinpi(g.pbar[j]);
        cp[j] = cospi(g.pbar[j]);
    }
    parallel_for(g.theta.size(), [&](std::size_t row) {
        const auto phases = phase_table(g.theta[row], groups.k_min, groups.k_max);
        for (std::size_t gi = 0; gi < groups.s2.size(); ++gi) {
            cd h = 0.0;
            for (const auto& [k, f] : groups.mode_lists[gi]) h += f * phases[k - groups.k_min];
            if (h == cd{0.0, 0.0}) continue;
            const int s2 = groups.s2[gi];
            const auto t = simd::lattice_trig(s2);
            const double s = 0.5 * s2;
            for (std::size_t j = 0; j < np; ++j) {
                const double sin_u = t.a_ss * sp[j] + t.a_sc * cp[j];
                out[row * np + j] += h * weight(g.pbar[j], s, sin_u);
            }
        }
    });
    return out;
}

}  // namespace

std::vector<cd> ShiftedSincField::evaluate_grid_sin(const PhaseSpaceGrid& g) const {
    return grid_walk(entries_, g, [](double, double, double sin_u) { return sin_u; });
}

std::vector<cd> ShiftedSincField::evaluate_grid_sin_flow(const PhaseSpaceGrid& g) const {
    return grid_walk(entries_, g, [](double pbar, double s, double sin_u) { return (pbar + s) * sin_u; });
}

cd ShiftedSincField::integral() const {
    cd acc = 0.0;
    for (const auto& e : entries_)
        if (e.k == 0) acc += e.f;
    return kTwoPi * acc;
}

cd ShiftedSincField::overlap_integral(const ShiftedSincField& f, const ShiftedSincField& g) {
    std::map<int, std::vector<std::pair<int, cd>>> g_by_mode;
    for (const auto& e : g.entries_) g_by_mode[e.k].push_back({e.s2, e.f});
    cd acc = 0.0;
    for (const auto& e : f.entries_) {
        const auto it = g_by_mode.find(-e.k);
        if (it == g_by_mode.end()) continue;
        for (const auto& [s2, gf] : it->second) acc += e.f * gf * sincpi(0.5 * (e.s2 - s2));
    }
    return kTwoPi * acc;
}

}  // namespace cylwig
