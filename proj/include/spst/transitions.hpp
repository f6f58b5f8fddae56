#ifndef SPST_TRANSITIONS_HPP
#define SPST_TRANSITIONS_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "spst/partition.hpp"
#include "spst/symfunc.hpp"

namespace spst {

class Store;

// The six degree-filtered transition tables. A and B are mutually inverse
// uni-triangular matrices graded by partition size; the other four move
// between the Schur-module, M, and Specht bases of the representation ring.
enum class TableKind { A, B, MToSp, SpToM, SToM, MToS };

std::string table_kind_name(TableKind kind);
TableKind table_kind_from_name(const std::string& name);

struct CoeffMatrix {
    TableKind kind = TableKind::A;
    int cap = 0;
    std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairCanonLess> entries;

    mpz_class entry(const Partition& row, const Partition& col) const;
    void add(const Partition& row, const Partition& col, const mpz_class& value);

    bool operator==(const CoeffMatrix& other) const {
        return kind == other.kind && cap == other.cap && entries == other.entries;
    }
};

// C(r, c) = sum_k X(r, k) Y(k, c).
CoeffMatrix matrix_product(const CoeffMatrix& x, const CoeffMatrix& y);

/// Memoized Schur expansions of the two plethysms every table entry needs:
/// s_mu[h_1 + h_2 + ...] and s_outer[L_1 + L_2 + ...], both truncated at a
/// cap. Concurrent readers share the stored expansion; a reader that needs a
/// deeper cap recomputes and replaces it. Never hands out an expansion
/// shallower than requested.
class ExpansionCache {
public:
    std::shared_ptr<const SymFunc> h_series_row(const Partition& mu, int cap);
    std::shared_ptr<const SymFunc> lyndon_series_row(const Partition& outer, int cap);

    static ExpansionCache& global();

private:
    std::shared_ptr<const SymFunc> lookup(bool lyndon_kind, const Partition& key, int cap);

    std::mutex mutex_;
    std::map<Partition, std::shared_ptr<const SymFunc>, PartitionCanonLess> h_rows_;
    std::map<Partition, std::shared_ptr<const SymFunc>, PartitionCanonLess> lyndon_rows_;
};

// --- per-entry formulas ---------------------------------------------------

// Stable restriction multiplicity via the strip-sum composition:
// a_lambda^nu = sum over mu with mu/nu a horizontal strip of
// <s_lambda, s_mu[h_1 + h_2 + ...]>. Equal to delta when |lambda| <= |nu|.
mpz_class a_stable(const Partition& lambda, const Partition& nu,
                   ExpansionCache& cache = ExpansionCache::global());

// Littlewood's finite-t formula <s_lambda, s_{nu^(t)}[1 + h_1 + h_2 + ...]>.
// Kept alongside a_stable for cross-validation; requires nu to pad into t
// and t within the character-table range.
mpz_class a_finite(const Partition& lambda, const Partition& nu, int t);

// b_lambda^nu = sum over mu with nu/mu a vertical strip of
// (-1)^{|nu| - |lambda|} <s_{mu^T}, s_{lambda^T}[L_1 + L_2 + ...]>.
mpz_class b_stable(const Partition& lambda, const Partition& nu,
                   ExpansionCache& cache = ExpansionCache::global());

// [M_mu^t] = sum of [Sp_{nu^(t)}] over horizontal strips mu/nu.
std::map<Partition, mpz_class, PartitionCanonLess> m_to_specht_row(const Partition& mu);

// [Sp_{nu^(t)}] = sum of (-1)^{|nu| - |mu|} [M_mu^t] over vertical strips.
std::map<Partition, mpz_class, PartitionCanonLess> specht_to_m_row(const Partition& nu);

// [S_lambda(C^t)] in the M basis; all entries nonnegative.
std::map<Partition, mpz_class, PartitionCanonLess> schur_to_m_row(
    const Partition& lambda, ExpansionCache& cache = ExpansionCache::global());

// [M_mu^t] in the Schur-module basis; entry signs follow (-1)^{|mu| - |lambda|}.
std::map<Partition, mpz_class, PartitionCanonLess> m_to_schur_row(
    const Partition& mu, ExpansionCache& cache = ExpansionCache::global());

// --- stable Specht basis ---------------------------------------------------

/// Element expressed in the stable Specht basis s-dagger; integer
/// coefficients, no zero entries.
struct StableSpechtExpansion {
    int cap = 0;
    std::map<Partition, mpz_class, PartitionCanonLess> terms;

    bool operator==(const StableSpechtExpansion& other) const { return terms == other.terms; }
};

// Applies the A matrix row-wise: s_lambda = sum_nu a_lambda^nu sdag_nu.
// Input must be Schur basis with integer coefficients (NonIntegralError).
StableSpechtExpansion schur_to_stable_specht(const SymFunc& f,
                                             ExpansionCache& cache = ExpansionCache::global());

// Applies the B matrix: sdag_nu = sum_lambda b_lambda^nu s_lambda.
SymFunc stable_specht_to_schur(const StableSpechtExpansion& f,
                               ExpansionCache& cache = ExpansionCache::global());

std::string to_text(const StableSpechtExpansion& f);
std::string to_json_string(const StableSpechtExpansion& f);

// --- whole tables -----------------------------------------------------------

struct BuildOptions {
    bool parallel = true;
    ExpansionCache* cache = nullptr;  // global() when null
};

// Bulk builder: the plethysm expansions behind SToM, MToS, A and B are
// data-parallel over partitions and run under OpenMP when enabled.
CoeffMatrix build_table(TableKind kind, int cap, const BuildOptions& options = {});

// Naive per-entry construction through the row/entry formulas above; the
// serial reference the parallel builder is tested against.
CoeffMatrix build_table_reference(TableKind kind, int cap);

struct TableOptions {
    bool parallel = true;
    const Store* store = nullptr;     // persistent cache, optional
    std::ostream* warnings = nullptr; // store problems land here, never throw
};

// Per-process memo in front of build_table, with optional disk persistence.
std::shared_ptr<const CoeffMatrix> table(TableKind kind, int cap,
                                         const TableOptions& options = {});

// {"kind": "...", "cap": N, "entries": [{"row": [...], "col": [...],
// "value": "..."}]} in canonical row-then-col order.
std::string matrix_to_json(const CoeffMatrix& m);

// Throws CorruptCacheError unless the body parses and matches kind/cap.
CoeffMatrix matrix_from_json(const std::string& body, TableKind kind, int cap);

}  // namespace spst

#endif
