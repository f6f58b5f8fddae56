#ifndef SPST_KRONECKER_HPP
#define SPST_KRONECKER_HPP

#include <gmpxx.h>

#include "spst/partition.hpp"
#include "spst/transitions.hpp"

namespace spst {

// Stable Kronecker coefficient through the stable Specht basis: expand
// sdag_alpha and sdag_beta into Schur functions, multiply, convert back, and
// read off gamma. No t parameter anywhere; all intermediate arithmetic is
// capped at |alpha| + |beta|, which also bounds the support of the answer.
mpz_class stable_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           ExpansionCache& cache = ExpansionCache::global());

struct OracleResult {
    mpz_class value;
    int stabilized_at;  // the t at which the value first repeated
};

// Finite-t character sums at increasing t, starting from the smallest t that
// pads all three shapes, until the same value shows up at two consecutive t.
// Two consecutive equal values are evidence of stabilization, not proof; the
// oracle is empirical by construction. Throws OracleBudgetError when t would
// pass the supported character-table maximum first.
OracleResult stable_kronecker_oracle(const Partition& alpha, const Partition& beta,
                                     const Partition& gamma);

}  // namespace spst

#endif
