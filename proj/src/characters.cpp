#include "spst/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "spst/errors.hpp"

namespace spst {

const mpz_class& CharacterVector::at(const Partition& cycle_type) const {
    auto it = values.find(cycle_type);
    if (it == values.end())
        throw std::invalid_argument("character value requested for a cycle type not of size t");
    return it->second;
}

const mpz_class& PairCharacterVector::at(const Partition& sigma_type,
                                         const Partition& tau_type) const {
    auto it = values.find({sigma_type, tau_type});
    if (it == values.end())
        throw std::invalid_argument("pair character value requested for a bad cycle-type pair");
    return it->second;
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), p, PartitionCanonLess{});
    if (it == classes.end() || !(*it == p))
        throw std::invalid_argument("partition is not of size " + std::to_string(n));
    return static_cast<int>(it - classes.begin());
}

const mpz_class& CharacterTable::value(const Partition& shape, const Partition& cycle_type) const {
    return chi[static_cast<std::size_t>(index_of(shape))]
              [static_cast<std::size_t>(index_of(cycle_type))];
}

mpz_class z_order(const Partition& rho) {
    mpz_class z = 1;
    int i = 0;
    while (i < rho.length()) {
        int value = rho.part(i);
        int mult = 0;
        while (i < rho.length() && rho.part(i) == value) {
            ++mult;
            ++i;
        }
        for (int k = 1; k <= mult; ++k) z *= mpz_class(value) * k;
    }
    return z;
}

namespace {

// Key for the border-strip recursion memo: shape parts, -1, remaining cycles.
struct MnKey {
    std::vector<int> data;
    bool operator==(const MnKey& other) const { return data == other.data; }
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : k.data) {
            h ^= static_cast<std::size_t>(v + 2);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<int> beta_set(const Partition& shape) {
    // beta_i = shape_i + (len - 1 - i), strictly decreasing
    int len = shape.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape.part(i) + (len - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

class MurnaghanNakayama {
public:
    mpz_class evaluate(const Partition& shape, const std::vector<int>& cycles, std::size_t from) {
        if (from == cycles.size()) return shape.empty() ? 1 : 0;
        MnKey key;
        key.data = shape.parts();
        key.data.push_back(-1);
        key.data.insert(key.data.end(), cycles.begin() + static_cast<std::ptrdiff_t>(from),
                        cycles.end());
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        int r = cycles[from];
        mpz_class total = 0;
        std::vector<int> beta = beta_set(shape);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int b = beta[i];
            if (b < r) continue;
            int target = b - r;
            bool occupied = false;
            int height = 0;  // elements strictly between target and b
            for (std::size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == target) occupied = true;
                if (beta[j] > target && beta[j] < b) ++height;
            }
            if (occupied) continue;
            std::vector<int> next = beta;
            next[i] = target;
            mpz_class sub = evaluate(partition_from_beta(std::move(next)), cycles, from + 1);
            if (height % 2)
                total -= sub;
            else
                total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::unordered_map<MnKey, mpz_class, MnKeyHash> memo_;
};

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> g_tables;

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int n) {
    if (n < 0 || n > kMaxSymmetricGroupSize)
        throw std::invalid_argument("character_table: n = " + std::to_string(n) +
                                    " outside supported range [0, " +
                                    std::to_string(kMaxSymmetricGroupSize) + "]");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;

    auto table = std::make_shared<CharacterTable>();
    table->n = n;
    table->classes = partitions_of(n);
    std::size_t count = table->classes.size();
    table->chi.assign(count, std::vector<mpz_class>(count));
    MurnaghanNakayama mn;
    for (std::size_t s = 0; s < count; ++s)
        for (std::size_t c = 0; c < count; ++c)
            table->chi[s][c] = mn.evaluate(table->classes[s], table->classes[c].parts(), 0);
    g_tables.emplace(n, table);
    return g_tables[n];
}

mpz_class specht_char_value(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("specht_char_value: |lambda| != |rho|");
    return character_table(lambda.size())->value(lambda, rho);
}

CharacterVector specht_character(const Partition& lambda) {
    auto table = character_table(lambda.size());
    CharacterVector out;
    out.t = lambda.size();
    std::size_t row = static_cast<std::size_t>(table->index_of(lambda));
    for (std::size_t c = 0; c < table->classes.size(); ++c)
        out.values[table->classes[c]] = table->chi[row][c];
    return out;
}

namespace {

// trace of w^k on C^t for w of cycle type rho: sum of the parts dividing k
mpz_class power_trace(const Partition& rho, int k) {
    mpz_class total = 0;
    for (int part : rho.parts())
        if (k % part == 0) total += part;
    return total;
}

}  // namespace

CharacterVector schur_module_character(const Partition& lambda, int t) {
    if (t < 1) throw std::invalid_argument("schur_module_character: t must be >= 1");
    auto inner_table = character_table(lambda.size());
    std::size_t row = lambda.size() == 0 ? 0 : static_cast<std::size_t>(inner_table->index_of(lambda));

    CharacterVector out;
    out.t = t;
    for (const Partition& rho : partitions_of(t)) {
        mpq_class value = 0;
        for (std::size_t c = 0; c < inner_table->classes.size(); ++c) {
            const Partition& sigma = inner_table->classes[c];
            mpz_class prod = 1;
            for (int part : sigma.parts()) prod *= power_trace(rho, part);
            value += mpq_class(inner_table->chi[row][c] * prod) / mpq_class(z_order(sigma));
        }
        value.canonicalize();
        if (value.get_den() != 1)
            throw NonIntegralError("schur_module_character: non-integral value at class " +
                                   rho.to_string());
        out.values[rho] = value.get_num();
    }
    return out;
}

std::map<Partition, mpz_class, PartitionCanonLess> decompose(const CharacterVector& chi) {
    auto table = character_table(chi.t);
    std::map<Partition, mpz_class, PartitionCanonLess> out;
    for (std::size_t s = 0; s < table->classes.size(); ++s) {
        mpq_class mult = 0;
        for (std::size_t c = 0; c < table->classes.size(); ++c) {
            const Partition& rho = table->classes[c];
            mult += mpq_class(chi.at(rho) * table->chi[s][c]) / mpq_class(z_order(rho));
        }
        mult.canonicalize();
        if (mult.get_den() != 1 || mult < 0)
            throw NotACharacterError("decompose: multiplicity of " +
                                     table->classes[s].to_string() + " is " + mult.get_str());
        if (mult != 0) out[table->classes[s]] = mult.get_num();
    }
    return out;
}

mpz_class kronecker_finite(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           int t) {
    Partition a = pad(alpha, t);
    Partition b = pad(beta, t);
    Partition c = pad(gamma, t);
    auto table = character_table(t);
    std::size_t ra = static_cast<std::size_t>(table->index_of(a));
    std::size_t rb = static_cast<std::size_t>(table->index_of(b));
    std::size_t rc = static_cast<std::size_t>(table->index_of(c));
    mpq_class total = 0;
    for (std::size_t k = 0; k < table->classes.size(); ++k)
        total += mpq_class(table->chi[ra][k] * table->chi[rb][k] * table->chi[rc][k]) /
                 mpq_class(z_order(table->classes[k]));
    total.canonicalize();
    if (total.get_den() != 1 || total < 0)
        throw NonIntegralError("kronecker_finite: character sum is " + total.get_str());
    return total.get_num();
}

CharacterVector m_character(const Partition& mu, int t) {
    if (t < mu.size()) throw std::invalid_argument("m_character: t < |mu|");
    CharacterVector out;
    out.t = t;
    for (const Partition& rho : partitions_of(t)) out.values[rho] = 0;
    for (const Partition& lambda : partitions_of(t)) {
        if (!is_horizontal_strip(lambda, mu)) continue;
        CharacterVector chi = specht_character(lambda);
        for (auto& [rho, value] : out.values) value += chi.at(rho);
    }
    return out;
}

namespace {

// a permutation of {0,..,n-1} with the given cycle type
std::vector<int> permutation_of_type(const Partition& type, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int next = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i)
            perm[static_cast<std::size_t>(next + i)] = next + (i + 1) % len;
        next += len;
    }
    return perm;
}

void count_fixed_words(const std::vector<int>& sigma_inv, const std::vector<int>& tau, int m,
                       int t, std::vector<int>& word, std::vector<bool>& used, mpz_class& count) {
    int k = static_cast<int>(word.size());
    if (k == m) {
        for (int i = 0; i < m; ++i)
            if (tau[static_cast<std::size_t>(word[static_cast<std::size_t>(
                    sigma_inv[static_cast<std::size_t>(i)])])] != word[static_cast<std::size_t>(i)])
                return;
        ++count;
        return;
    }
    for (int letter = 0; letter < t; ++letter) {
        if (used[static_cast<std::size_t>(letter)]) continue;
        used[static_cast<std::size_t>(letter)] = true;
        word.push_back(letter);
        count_fixed_words(sigma_inv, tau, m, t, word, used, count);
        word.pop_back();
        used[static_cast<std::size_t>(letter)] = false;
    }
}

}  // namespace

PairCharacterVector injective_words_character(int m, int t) {
    if (m < 0 || t < m) throw std::invalid_argument("injective_words_character: need t >= m >= 0");
    PairCharacterVector out;
    out.m = m;
    out.t = t;
    for (const Partition& alpha : partitions_of(m)) {
        std::vector<int> sigma = permutation_of_type(alpha, m);
        std::vector<int> sigma_inv(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        for (const Partition& beta : partitions_of(t)) {
            std::vector<int> tau = permutation_of_type(beta, t);
            mpz_class count = 0;
            std::vector<int> word;
            std::vector<bool> used(static_cast<std::size_t>(t), false);
            count_fixed_words(sigma_inv, tau, m, t, word, used, count);
            out.values[{alpha, beta}] = count;
        }
    }
    return out;
}

std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairCanonLess> decompose_pairs(
    const PairCharacterVector& chi) {
    auto table_m = character_table(chi.m);
    auto table_t = character_table(chi.t);
    std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairCanonLess> out;
    for (std::size_t sm = 0; sm < table_m->classes.size(); ++sm) {
        for (std::size_t st = 0; st < table_t->classes.size(); ++st) {
            mpq_class mult = 0;
            for (std::size_t cm = 0; cm < table_m->classes.size(); ++cm) {
                const Partition& alpha = table_m->classes[cm];
                mpq_class inner = 0;
                for (std::size_t ct = 0; ct < table_t->classes.size(); ++ct) {
                    const Partition& beta = table_t->classes[ct];
                    inner += mpq_class(chi.at(alpha, beta) * table_t->chi[st][ct]) /
                             mpq_class(z_order(beta));
                }
                mult += inner * mpq_class(table_m->chi[sm][cm]) / mpq_class(z_order(alpha));
            }
            mult.canonicalize();
            if (mult.get_den() != 1 || mult < 0)
                throw NotACharacterError("decompose_pairs: multiplicity is " + mult.get_str());
            if (mult != 0) out[{table_m->classes[sm], table_t->classes[st]}] = mult.get_num();
        }
    }
    return out;
}

std::string character_to_json(const CharacterVector& chi) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [cycle_type, value] : chi.values) {
        nlohmann::json entry;
        entry["class"] = cycle_type.parts();
        entry["value"] = value.get_str();
        values.push_back(std::move(entry));
    }
    nlohmann::json out;
    out["t"] = chi.t;
    out["values"] = std::move(values);
    return out.dump();
}

}  // namespace spst
