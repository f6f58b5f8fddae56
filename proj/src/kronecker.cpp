#include "spst/kronecker.hpp"

#include <algorithm>

#include "spst/characters.hpp"
#include "spst/errors.hpp"
#include "spst/symfunc.hpp"

namespace spst {

mpz_class stable_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           ExpansionCache& cache) {
    int cap = alpha.size() + beta.size();
    if (gamma.size() > cap) return 0;

    StableSpechtExpansion a;
    a.cap = cap;
    a.terms[alpha] = 1;
    StableSpechtExpansion b;
    b.cap = cap;
    b.terms[beta] = 1;

    SymFunc product =
        multiply(stable_specht_to_schur(a, cache), stable_specht_to_schur(b, cache));
    StableSpechtExpansion expansion = schur_to_stable_specht(product, cache);
    auto it = expansion.terms.find(gamma);
    return it == expansion.terms.end() ? mpz_class(0) : it->second;
}

OracleResult stable_kronecker_oracle(const Partition& alpha, const Partition& beta,
                                     const Partition& gamma) {
    int start = std::max({alpha.part(0) + alpha.size(), beta.part(0) + beta.size(),
                          gamma.part(0) + gamma.size()});
    mpz_class previous;
    bool have_previous = false;
    for (int t = start; t <= kMaxSymmetricGroupSize; ++t) {
        mpz_class value = kronecker_finite(alpha, beta, gamma, t);
        if (have_previous && value == previous) return {value, t};
        previous = value;
        have_previous = true;
    }
    throw OracleBudgetError(
        "stable_kronecker_oracle: no two consecutive agreements up to t = " +
        std::to_string(kMaxSymmetricGroupSize) + " for (" + alpha.to_string() + ", " +
        beta.to_string() + ", " + gamma.to_string() + ")");
}

}  // namespace spst
