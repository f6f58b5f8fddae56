#include "spst/plethysm.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "spst/characters.hpp"

namespace spst {

namespace {

// p_n[g] for g in the power basis: every part of every index scaled by n,
// the empty index (the constant term) untouched.
SymFunc power_substitute(const SymFunc& g, int n, int cap) {
    SymFunc out(Basis::Power, cap);
    for (const auto& [alpha, c] : g.terms()) {
        if (alpha.size() * n > cap && !alpha.empty()) continue;
        out.add_term(alpha.empty() ? alpha : stretch(alpha, n), c);
    }
    return out;
}

SymFunc truncated_product(const SymFunc& f, const SymFunc& g, int cap) {
    SymFunc out(Basis::Power, cap);
    for (const auto& [rho, a] : f.terms()) {
        if (rho.size() > cap) continue;
        for (const auto& [sigma, b] : g.terms()) {
            if (rho.size() + sigma.size() > cap) continue;
            out.add_term(concat(rho, sigma), a * b);
        }
    }
    return out;
}

}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    int cap = std::min(f.cap(), g.cap());
    SymFunc fp = to_power(f);
    SymFunc gp = to_power(g);
    SymFunc out(Basis::Power, cap);
    for (const auto& [rho, c] : fp.terms()) {
        SymFunc term = SymFunc::constant(c, cap);
        for (int part : rho.parts()) {
            term = truncated_product(term, power_substitute(gp, part, cap), cap);
            if (term.is_zero()) break;
        }
        for (const auto& [sigma, value] : term.terms()) out.add_term(sigma, value);
    }
    return out;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int sign = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

namespace {

std::mutex g_lyndon_mutex;
std::map<int, SymFunc> g_lyndon;  // full L_m, cap m

}  // namespace

SymFunc lyndon(int m, int cap) {
    if (m < 1) throw std::invalid_argument("lyndon: m must be >= 1");
    if (cap < m) return SymFunc::zero(Basis::Power, cap);
    std::lock_guard<std::mutex> lock(g_lyndon_mutex);
    auto it = g_lyndon.find(m);
    if (it == g_lyndon.end()) {
        SymFunc full(Basis::Power, m);
        for (int d = 1; d <= m; ++d) {
            if (m % d) continue;
            int mu = moebius(d);
            if (mu == 0) continue;
            std::vector<int> parts(static_cast<std::size_t>(m / d), d);
            full.add_term(Partition(std::move(parts)), mpq_class(mu, m));
        }
        it = g_lyndon.emplace(m, std::move(full)).first;
    }
    SymFunc out(Basis::Power, cap);
    for (const auto& [rho, c] : it->second.terms()) out.add_term(rho, c);
    return out;
}

SymFunc series(SeriesKind kind, int cap) {
    if (cap < 0) throw std::invalid_argument("series: cap must be nonnegative");
    SymFunc out(Basis::Power, cap);
    switch (kind) {
        case SeriesKind::HWithOne:
        case SeriesKind::HPositive: {
            // sum over n of h_n = sum over all rho of p_rho / z_rho
            int low = kind == SeriesKind::HWithOne ? 0 : 1;
            for (int n = low; n <= cap; ++n)
                for (const Partition& rho : partitions_of(n))
                    out.add_term(rho, mpq_class(1) / mpq_class(z_order(rho)));
            break;
        }
        case SeriesKind::OnePlusH1:
        case SeriesKind::MinusOnePlusH1: {
            out.add_term(Partition{}, kind == SeriesKind::OnePlusH1 ? 1 : -1);
            if (cap >= 1) out.add_term(Partition{1}, 1);
            break;
        }
        case SeriesKind::Lyndon: {
            for (int m = 1; m <= cap; ++m) {
                SymFunc lm = lyndon(m, cap);
                for (const auto& [rho, c] : lm.terms()) out.add_term(rho, c);
            }
            break;
        }
    }
    return out;
}

}  // namespace spst
