#ifndef SPST_CHARACTERS_HPP
#define SPST_CHARACTERS_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "spst/partition.hpp"

namespace spst {

// Class counts and the border-strip recursion stay desk-scale up to here;
// larger t is rejected outright.
inline constexpr int kMaxSymmetricGroupSize = 12;

/// Exact class function on S_t, stored densely over all cycle types.
struct CharacterVector {
    int t = 0;
    std::map<Partition, mpz_class, PartitionCanonLess> values;

    const mpz_class& at(const Partition& cycle_type) const;
};

/// Class function on S_m x S_t indexed by pairs of cycle types.
struct PairCharacterVector {
    int m = 0;
    int t = 0;
    std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairCanonLess> values;

    const mpz_class& at(const Partition& sigma_type, const Partition& tau_type) const;
};

/// Full character table of S_n: classes and shapes both run over
/// partitions_of(n) in canonical order, chi[shape][class].
struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;
    std::vector<std::vector<mpz_class>> chi;

    int index_of(const Partition& p) const;
    const mpz_class& value(const Partition& shape, const Partition& cycle_type) const;
};

// Centralizer order z_rho = prod_i i^{m_i} m_i!.
mpz_class z_order(const Partition& rho);

// Memoized; concurrent reads are fine, first access per n computes under a
// lock. Throws std::invalid_argument beyond kMaxSymmetricGroupSize.
std::shared_ptr<const CharacterTable> character_table(int n);

// chi^lambda(rho) by the Murnaghan-Nakayama rule; |lambda| = |rho| required.
mpz_class specht_char_value(const Partition& lambda, const Partition& rho);

CharacterVector specht_character(const Partition& lambda);

// Character of the restriction of the Schur module S_lambda(C^t) to S_t:
// s_lambda evaluated at the eigenvalues of a permutation matrix, via the
// power-sum expansion with p_k -> sum of the cycle lengths dividing k.
// Throws NonIntegralError if the rational arithmetic fails to land on an
// integer (an internal bug, not a caller error).
CharacterVector schur_module_character(const Partition& lambda, int t);

// Multiplicities <chi, chi^mu> over all mu |- t. Throws NotACharacterError
// when any multiplicity is negative or fractional.
std::map<Partition, mpz_class, PartitionCanonLess> decompose(const CharacterVector& chi);

// Kronecker coefficient of the padded triple at finite t. Requires t large
// enough to pad all three shapes (PadTooSmallError otherwise).
mpz_class kronecker_finite(const Partition& alpha, const Partition& beta,
                           const Partition& gamma, int t);

// Character of M_mu^t, the induction of Sp_mu (x) trivial from
// S_{|mu|} x S_{t-|mu|}: by Pieri this is the sum of chi^lambda over
// lambda |- t with lambda/mu a horizontal strip.
CharacterVector m_character(const Partition& mu, int t);

// Permutation character of S_m x S_t on words of length m over t letters
// with pairwise distinct letters. Requires t >= m >= 0.
PairCharacterVector injective_words_character(int m, int t);

// Bilinear decomposition of a pair character into irreducibles
// chi^mu (x) chi^nu, mu |- m, nu |- t.
std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairCanonLess> decompose_pairs(
    const PairCharacterVector& chi);

// CLI-facing JSON: {"t": N, "values": [{"class": [...], "value": "..."}]}.
std::string character_to_json(const CharacterVector& chi);

}  // namespace spst

#endif
