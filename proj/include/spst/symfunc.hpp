#ifndef SPST_SYMFUNC_HPP
#define SPST_SYMFUNC_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "spst/partition.hpp"

namespace spst {

enum class Basis { Schur, Power, Homogeneous, Elementary, Monomial };

char basis_letter(Basis b);
std::string basis_name(Basis b);

/// Sparse symmetric function: a basis tag, exact rational coefficients
/// indexed by partitions, and an explicit degree cap. Inhomogeneous elements
/// are fine; the constant term is indexed by the empty partition. No stored
/// coefficient is zero and no stored partition exceeds the cap.
///
/// Values are treated as immutable once built; add_term exists for the
/// construction phase only.
class SymFunc {
public:
    SymFunc(Basis basis, int cap);

    static SymFunc zero(Basis basis, int cap) { return SymFunc(basis, cap); }
    static SymFunc constant(const mpq_class& value, int cap, Basis basis = Basis::Power);
    // Throws std::invalid_argument when |lambda| > cap.
    static SymFunc basis_element(Basis basis, const Partition& lambda, int cap);

    Basis basis() const { return basis_; }
    int cap() const { return cap_; }
    const std::map<Partition, mpq_class, PartitionCanonLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpq_class coeff(const Partition& p) const;

    // Accumulates; drops the entry when it cancels to zero and silently
    // ignores partitions beyond the cap (that is what truncation means).
    void add_term(const Partition& p, const mpq_class& coefficient);

    bool integer_coefficients() const;

    bool operator==(const SymFunc& other) const {
        return basis_ == other.basis_ && terms_ == other.terms_;
    }

private:
    Basis basis_;
    int cap_;
    std::map<Partition, mpq_class, PartitionCanonLess> terms_;
};

// Linear operations require matching bases; mixed caps take the minimum.
SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc sub(const SymFunc& f, const SymFunc& g);
SymFunc scale(const SymFunc& f, const mpq_class& c);

SymFunc to_power(const SymFunc& f);
SymFunc from_power(const SymFunc& f, Basis target);
SymFunc convert(const SymFunc& f, Basis target);

// Hall inner product; exact on the common cap. <p_rho, p_sigma> = z_rho
// delta, <s_lambda, s_mu> = delta.
mpq_class hall_inner(const SymFunc& f, const SymFunc& g);

// Product truncated at min(f.cap, g.cap), returned in the basis of f.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// c_{lambda,mu}^{nu}; zero unless |lambda| + |mu| = |nu|.
mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// omega s_lambda = s_{lambda^T}, omega h_n = e_n, omega p_n = (-1)^{n-1} p_n.
SymFunc omega(const SymFunc& f);

// "2*s[2,1] + 1/2*p[1,1] - 3", zero renders "0".
std::string to_text(const SymFunc& f);

// {"basis": "...", "terms": [{"partition": [...], "num": "...", "den": "..."}], "cap": N}
std::string to_json_string(const SymFunc& f);

mpz_class integer_coefficient(const SymFunc& f, const Partition& p);

}  // namespace spst

#endif
