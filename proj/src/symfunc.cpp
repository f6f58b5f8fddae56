#include "spst/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "spst/characters.hpp"
#include "spst/errors.hpp"

namespace spst {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::Schur: return 's';
        case Basis::Power: return 'p';
        case Basis::Homogeneous: return 'h';
        case Basis::Elementary: return 'e';
        case Basis::Monomial: return 'm';
    }
    throw std::logic_error("unknown basis");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Schur: return "schur";
        case Basis::Power: return "power";
        case Basis::Homogeneous: return "homogeneous";
        case Basis::Elementary: return "elementary";
        case Basis::Monomial: return "monomial";
    }
    throw std::logic_error("unknown basis");
}

SymFunc::SymFunc(Basis basis, int cap) : basis_(basis), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("SymFunc: cap must be nonnegative");
}

SymFunc SymFunc::constant(const mpq_class& value, int cap, Basis basis) {
    SymFunc out(basis, cap);
    out.add_term(Partition{}, value);
    return out;
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, int cap) {
    if (lambda.size() > cap)
        throw std::invalid_argument("basis_element: |" + lambda.to_string() + "| exceeds cap " +
                                    std::to_string(cap));
    SymFunc out(basis, cap);
    out.add_term(lambda, 1);
    return out;
}

mpq_class SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SymFunc::add_term(const Partition& p, const mpq_class& coefficient) {
    if (p.size() > cap_) return;
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(p, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SymFunc::integer_coefficients() const {
    for (const auto& [p, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis()) throw std::logic_error("add: mismatched bases");
    SymFunc out(f.basis(), std::min(f.cap(), g.cap()));
    for (const auto& [p, c] : f.terms()) out.add_term(p, c);
    for (const auto& [p, c] : g.terms()) out.add_term(p, c);
    return out;
}

SymFunc sub(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis()) throw std::logic_error("sub: mismatched bases");
    SymFunc out(f.basis(), std::min(f.cap(), g.cap()));
    for (const auto& [p, c] : f.terms()) out.add_term(p, c);
    for (const auto& [p, c] : g.terms()) out.add_term(p, mpq_class(-c));
    return out;
}

SymFunc scale(const SymFunc& f, const mpq_class& c) {
    SymFunc out(f.basis(), f.cap());
    if (c == 0) return out;
    for (const auto& [p, value] : f.terms()) out.add_term(p, value * c);
    return out;
}

namespace {

// Transition data between the power basis and the monomial/homogeneous pair
// for one degree. forward[r][l] is the coefficient of m_{lambda_l} in
// p_{rho_r} (an assignment count); monomial_in_power[l] solves
// forward^T x = e_l, giving m_{lambda_l} in power-sum coordinates.
struct MonomialTables {
    std::vector<Partition> shapes;
    std::vector<std::vector<mpz_class>> forward;
    std::vector<std::vector<mpq_class>> monomial_in_power;

    int index_of(const Partition& p) const {
        auto it = std::lower_bound(shapes.begin(), shapes.end(), p, PartitionCanonLess{});
        if (it == shapes.end() || !(*it == p))
            throw std::logic_error("MonomialTables: shape of wrong degree");
        return static_cast<int>(it - shapes.begin());
    }
};

// assignment count: functions from the parts of rho onto rows with row sums
// lambda_j; equal parts of rho are distinguishable factor indices, so each
// row choice carries a binomial weight
void assignment_count(const std::vector<std::pair<int, int>>& value_mult,
                      std::vector<int>& remaining, const Partition& lambda, int row,
                      const mpz_class& ways, mpz_class& total) {
    if (row == lambda.length()) {
        total += ways;
        return;
    }
    int target = lambda.part(row);
    // choose how many parts of each distinct value go into this row
    std::vector<int> take(value_mult.size(), 0);
    auto recurse = [&](auto&& self, std::size_t v, int left, mpz_class weight) -> void {
        if (left == 0) {
            for (std::size_t i = 0; i < take.size(); ++i) remaining[i] -= take[i];
            assignment_count(value_mult, remaining, lambda, row + 1, ways * weight, total);
            for (std::size_t i = 0; i < take.size(); ++i) remaining[i] += take[i];
            return;
        }
        if (v == value_mult.size()) return;
        int value = value_mult[v].first;
        int max_take = std::min(remaining[v], left / value);
        mpz_class choose = 1;
        for (int k = 0; k <= max_take; ++k) {
            if (k > 0) choose = choose * (remaining[v] - k + 1) / k;
            take[v] = k;
            self(self, v + 1, left - k * value, weight * choose);
        }
        take[v] = 0;
    };
    recurse(recurse, 0, target, mpz_class(1));
}

mpz_class power_in_monomial(const Partition& rho, const Partition& lambda) {
    std::vector<std::pair<int, int>> value_mult;  // (part value, multiplicity) of rho
    for (int part : rho.parts()) {
        if (!value_mult.empty() && value_mult.back().first == part)
            ++value_mult.back().second;
        else
            value_mult.emplace_back(part, 1);
    }
    std::vector<int> remaining;
    remaining.reserve(value_mult.size());
    for (auto& [value, mult] : value_mult) remaining.push_back(mult);
    mpz_class total = 0;
    assignment_count(value_mult, remaining, lambda, 0, mpz_class(1), total);
    return total;
}

std::mutex g_monomial_mutex;
std::map<int, std::shared_ptr<const MonomialTables>> g_monomial_tables;

std::shared_ptr<const MonomialTables> monomial_tables(int n) {
    std::lock_guard<std::mutex> lock(g_monomial_mutex);
    auto it = g_monomial_tables.find(n);
    if (it != g_monomial_tables.end()) return it->second;

    auto tables = std::make_shared<MonomialTables>();
    tables->shapes = partitions_of(n);
    std::size_t count = tables->shapes.size();
    tables->forward.assign(count, std::vector<mpz_class>(count));
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t l = 0; l < count; ++l)
            tables->forward[r][l] = power_in_monomial(tables->shapes[r], tables->shapes[l]);

    // invert forward^T by Gauss-Jordan; the matrix is invertible over Q
    std::vector<std::vector<mpq_class>> work(count, std::vector<mpq_class>(2 * count));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) work[i][j] = mpq_class(tables->forward[j][i]);
        work[i][count + i] = 1;
    }
    for (std::size_t col = 0; col < count; ++col) {
        std::size_t pivot = col;
        while (pivot < count && work[pivot][col] == 0) ++pivot;
        if (pivot == count) throw std::logic_error("monomial transition matrix is singular");
        std::swap(work[pivot], work[col]);
        mpq_class inv = 1 / work[col][col];
        for (auto& x : work[col]) x *= inv;
        for (std::size_t row = 0; row < count; ++row) {
            if (row == col || work[row][col] == 0) continue;
            mpq_class factor = work[row][col];
            for (std::size_t j = 0; j < 2 * count; ++j) work[row][j] -= factor * work[col][j];
        }
    }
    tables->monomial_in_power.assign(count, std::vector<mpq_class>(count));
    for (std::size_t l = 0; l < count; ++l)
        for (std::size_t r = 0; r < count; ++r)
            tables->monomial_in_power[l][r] = work[r][count + l];

    g_monomial_tables.emplace(n, tables);
    return tables;
}

// power expansion of h_n (all signs +) or e_n (sign by column height)
void add_one_row_expansion(SymFunc& accum, int n, bool elementary, const mpq_class& scale_by) {
    for (const Partition& rho : partitions_of(n)) {
        mpq_class c = scale_by / mpq_class(z_order(rho));
        if (elementary && (n - rho.length()) % 2) c = -c;
        accum.add_term(rho, c);
    }
}

SymFunc power_product(const SymFunc& f, const SymFunc& g, int cap) {
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

SymFunc omega_power(const SymFunc& f) {
    SymFunc out(Basis::Power, f.cap());
    for (const auto& [rho, c] : f.terms()) {
        if ((rho.size() - rho.length()) % 2)
            out.add_term(rho, mpq_class(-c));
        else
            out.add_term(rho, c);
    }
    return out;
}

}  // namespace

SymFunc to_power(const SymFunc& f) {
    if (f.basis() == Basis::Power) return f;
    SymFunc out(Basis::Power, f.cap());
    switch (f.basis()) {
        case Basis::Schur: {
            for (const auto& [lambda, c] : f.terms()) {
                auto table = character_table(lambda.size());
                std::size_t row = static_cast<std::size_t>(table->index_of(lambda));
                for (std::size_t k = 0; k < table->classes.size(); ++k) {
                    const Partition& rho = table->classes[k];
                    out.add_term(rho, c * mpq_class(table->chi[row][k]) / mpq_class(z_order(rho)));
                }
            }
            break;
        }
        case Basis::Homogeneous:
        case Basis::Elementary: {
            bool elementary = f.basis() == Basis::Elementary;
            for (const auto& [mu, c] : f.terms()) {
                SymFunc term = SymFunc::constant(c, f.cap());
                for (int part : mu.parts()) {
                    SymFunc row(Basis::Power, f.cap());
                    add_one_row_expansion(row, part, elementary, 1);
                    term = power_product(term, row, f.cap());
                }
                for (const auto& [rho, value] : term.terms()) out.add_term(rho, value);
            }
            break;
        }
        case Basis::Monomial: {
            for (const auto& [lambda, c] : f.terms()) {
                auto tables = monomial_tables(lambda.size());
                int col = tables->index_of(lambda);
                for (std::size_t r = 0; r < tables->shapes.size(); ++r)
                    out.add_term(tables->shapes[r],
                                 c * tables->monomial_in_power[static_cast<std::size_t>(col)][r]);
            }
            break;
        }
        case Basis::Power: break;
    }
    return out;
}

SymFunc from_power(const SymFunc& f, Basis target) {
    if (f.basis() != Basis::Power) throw std::logic_error("from_power: input must be POWER basis");
    if (target == Basis::Power) return f;
    if (target == Basis::Elementary) {
        SymFunc h = from_power(omega_power(f), Basis::Homogeneous);
        SymFunc out(Basis::Elementary, f.cap());
        for (const auto& [p, c] : h.terms()) out.add_term(p, c);
        return out;
    }

    SymFunc out(target, f.cap());
    // split by degree; every conversion below is a per-degree linear map
    std::map<int, std::vector<std::pair<Partition, mpq_class>>> by_degree;
    for (const auto& [rho, c] : f.terms()) by_degree[rho.size()].emplace_back(rho, c);

    for (const auto& [degree, terms] : by_degree) {
        switch (target) {
            case Basis::Schur: {
                auto table = character_table(degree);
                for (std::size_t s = 0; s < table->classes.size(); ++s) {
                    mpq_class value = 0;
                    for (const auto& [rho, c] : terms)
                        value += c * mpq_class(table->chi[s][static_cast<std::size_t>(
                                         table->index_of(rho))]);
                    out.add_term(table->classes[s], value);
                }
                break;
            }
            case Basis::Monomial: {
                auto tables = monomial_tables(degree);
                for (std::size_t l = 0; l < tables->shapes.size(); ++l) {
                    mpq_class value = 0;
                    for (const auto& [rho, c] : terms)
                        value += c * mpq_class(tables->forward[static_cast<std::size_t>(
                                         tables->index_of(rho))][l]);
                    out.add_term(tables->shapes[l], value);
                }
                break;
            }
            case Basis::Homogeneous: {
                // <f, m_lambda> picks out the h_lambda coefficient
                auto tables = monomial_tables(degree);
                for (std::size_t l = 0; l < tables->shapes.size(); ++l) {
                    mpq_class value = 0;
                    for (const auto& [rho, c] : terms) {
                        std::size_t r = static_cast<std::size_t>(tables->index_of(rho));
                        value += c * tables->monomial_in_power[l][r] * mpq_class(z_order(rho));
                    }
                    out.add_term(tables->shapes[l], value);
                }
                break;
            }
            default: throw std::logic_error("from_power: unreachable target");
        }
    }
    return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_power(to_power(f), target);
}

mpq_class hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_power(f);
    SymFunc gp = to_power(g);
    int cap = std::min(fp.cap(), gp.cap());
    mpq_class total = 0;
    for (const auto& [rho, a] : fp.terms()) {
        if (rho.size() > cap) continue;
        auto it = gp.terms().find(rho);
        if (it == gp.terms().end()) continue;
        total += a * it->second * mpq_class(z_order(rho));
    }
    return total;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    int cap = std::min(f.cap(), g.cap());
    SymFunc product = power_product(to_power(f), to_power(g), cap);
    if (f.basis() == Basis::Power) return product;
    return from_power(product, f.basis());
}

mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    int cap = nu.size();
    SymFunc product = power_product(to_power(SymFunc::basis_element(Basis::Schur, lambda, cap)),
                                    to_power(SymFunc::basis_element(Basis::Schur, mu, cap)), cap);
    mpq_class value = hall_inner(product, SymFunc::basis_element(Basis::Schur, nu, cap));
    if (value.get_den() != 1)
        throw NonIntegralError("lr_coefficient: got " + value.get_str());
    return value.get_num();
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::Power: return omega_power(f);
        case Basis::Schur: {
            SymFunc out(Basis::Schur, f.cap());
            for (const auto& [lambda, c] : f.terms()) out.add_term(transpose(lambda), c);
            return out;
        }
        case Basis::Homogeneous:
        case Basis::Elementary: {
            SymFunc out(f.basis() == Basis::Homogeneous ? Basis::Elementary : Basis::Homogeneous,
                        f.cap());
            for (const auto& [p, c] : f.terms()) out.add_term(p, c);
            return out;
        }
        case Basis::Monomial: return from_power(omega_power(to_power(f)), Basis::Monomial);
    }
    throw std::logic_error("unknown basis");
}

namespace {

std::string coefficient_text(const mpq_class& c) {
    mpq_class a = abs(c);
    return a.get_str();
}

}  // namespace

std::string to_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpq_class a = abs(c);
        if (p.empty()) {
            out += coefficient_text(c);
        } else {
            if (a != 1) {
                out += coefficient_text(c);
                out += '*';
            }
            out += basis_letter(f.basis());
            out += p.to_string();
        }
    }
    return out;
}

std::string to_json_string(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : f.terms()) {
        nlohmann::json t;
        t["partition"] = p.parts();
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    nlohmann::json out;
    out["basis"] = basis_name(f.basis());
    out["terms"] = std::move(terms);
    out["cap"] = f.cap();
    return out.dump();
}

mpz_class integer_coefficient(const SymFunc& f, const Partition& p) {
    mpq_class c = f.coeff(p);
    if (c.get_den() != 1)
        throw NonIntegralError("coefficient of " + p.to_string() + " is " + c.get_str());
    return c.get_num();
}

}  // namespace spst
