#ifndef SPST_PLETHYSM_HPP
#define SPST_PLETHYSM_HPP

#include "spst/symfunc.hpp"

namespace spst {

// The named series the transition formulas plug into plethysms, truncated at
// an explicit cap.
enum class SeriesKind {
    HWithOne,       // 1 + h_1 + h_2 + ...
    HPositive,      // h_1 + h_2 + ...
    OnePlusH1,      // 1 + h_1
    MinusOnePlusH1, // -1 + h_1
    Lyndon,         // L_1 + L_2 + L_3 + ...
};

/// f[g] truncated at min(f.cap, g.cap), returned in the power basis.
///
/// Computed by the power-sum rule: p_n[g] rescales every part of g's
/// power-sum expansion by n and fixes the constant term; this extends
/// linearly and multiplicatively over the power-sum monomials of f. The
/// inner g may be inhomogeneous with a constant term and negative
/// coefficients. Every stored degree of f contributes, so when f is itself
/// a truncated series and g has a constant term, the result is only the
/// truncation's image (the transition formulas never hit this case: their
/// outer arguments are single Schur functions).
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Number-theoretic Moebius function, by trial factorization.
int moebius(int n);

// Lyndon symmetric function L_m = (1/m) sum_{d|m} mu(d) p_d^{m/d} in the
// power basis. Zero when cap < m. Memoized per m.
SymFunc lyndon(int m, int cap);

SymFunc series(SeriesKind kind, int cap);

}  // namespace spst

#endif
