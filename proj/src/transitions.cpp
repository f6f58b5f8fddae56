#include "spst/transitions.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "spst/characters.hpp"
#include "spst/errors.hpp"
#include "spst/plethysm.hpp"
#include "spst/store.hpp"

namespace spst {

std::string table_kind_name(TableKind kind) {
    switch (kind) {
        case TableKind::A: return "a";
        case TableKind::B: return "b";
        case TableKind::MToSp: return "m2sp";
        case TableKind::SpToM: return "sp2m";
        case TableKind::SToM: return "s2m";
        case TableKind::MToS: return "m2s";
    }
    throw std::logic_error("unknown table kind");
}

TableKind table_kind_from_name(const std::string& name) {
    if (name == "a") return TableKind::A;
    if (name == "b") return TableKind::B;
    if (name == "m2sp") return TableKind::MToSp;
    if (name == "sp2m") return TableKind::SpToM;
    if (name == "s2m") return TableKind::SToM;
    if (name == "m2s") return TableKind::MToS;
    throw std::invalid_argument("unknown table kind '" + name + "'");
}

mpz_class CoeffMatrix::entry(const Partition& row, const Partition& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? mpz_class(0) : it->second;
}

void CoeffMatrix::add(const Partition& row, const Partition& col, const mpz_class& value) {
    if (value == 0) return;
    auto [it, inserted] = entries.emplace(std::make_pair(row, col), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries.erase(it);
    }
}

CoeffMatrix matrix_product(const CoeffMatrix& x, const CoeffMatrix& y) {
    // group y by row partition for the inner join
    std::map<Partition, std::vector<std::pair<Partition, mpz_class>>, PartitionCanonLess> y_rows;
    for (const auto& [key, value] : y.entries) y_rows[key.first].emplace_back(key.second, value);

    CoeffMatrix out;
    out.kind = x.kind;
    out.cap = std::min(x.cap, y.cap);
    for (const auto& [key, value] : x.entries) {
        auto it = y_rows.find(key.second);
        if (it == y_rows.end()) continue;
        for (const auto& [col, yval] : it->second) out.add(key.first, col, value * yval);
    }
    return out;
}

// --- expansion cache --------------------------------------------------------

ExpansionCache& ExpansionCache::global() {
    static ExpansionCache instance;
    return instance;
}

std::shared_ptr<const SymFunc> ExpansionCache::lookup(bool lyndon_kind, const Partition& key,
                                                      int cap) {
    auto& rows = lyndon_kind ? lyndon_rows_ : h_rows_;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = rows.find(key);
        if (it != rows.end() && it->second->cap() >= cap) return it->second;
    }
    SymFunc outer = SymFunc::basis_element(Basis::Schur, key, std::max(cap, key.size()));
    SymFunc inner =
        series(lyndon_kind ? SeriesKind::Lyndon : SeriesKind::HPositive, cap);
    auto expansion =
        std::make_shared<const SymFunc>(from_power(plethysm(outer, inner), Basis::Schur));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = rows.find(key);
        if (it != rows.end() && it->second->cap() >= cap) return it->second;
        rows[key] = expansion;
    }
    return expansion;
}

std::shared_ptr<const SymFunc> ExpansionCache::h_series_row(const Partition& mu, int cap) {
    return lookup(false, mu, cap);
}

std::shared_ptr<const SymFunc> ExpansionCache::lyndon_series_row(const Partition& outer, int cap) {
    return lookup(true, outer, cap);
}

// --- strip enumeration ------------------------------------------------------

namespace {

// all nu contained in mu with mu/nu a horizontal strip
std::vector<Partition> horizontal_strip_interiors(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int row) -> void {
        if (row == mu.length()) {
            std::vector<int> parts;
            for (int part : current)
                if (part > 0) parts.push_back(part);
            out.emplace_back(std::move(parts));
            return;
        }
        // interlacing: mu_row >= nu_row >= mu_{row+1}
        for (int value = mu.part(row); value >= mu.part(row + 1); --value) {
            current.push_back(value);
            self(self, row + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

// all mu contained in nu with nu/mu a vertical strip
std::vector<Partition> vertical_strip_interiors(const Partition& nu) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int row) -> void {
        if (row == nu.length()) {
            std::vector<int> parts;
            for (int part : current)
                if (part > 0) parts.push_back(part);
            out.emplace_back(std::move(parts));
            return;
        }
        for (int drop = 0; drop <= 1; ++drop) {
            int value = nu.part(row) - drop;
            if (row > 0 && value > current.back()) continue;
            if (value < 0) continue;
            current.push_back(value);
            self(self, row + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

mpz_class signed_by_size_difference(const Partition& a, const Partition& b, mpz_class value) {
    if ((a.size() + b.size()) % 2) value = -value;
    return value;
}

}  // namespace

// --- per-entry formulas -----------------------------------------------------

mpz_class a_stable(const Partition& lambda, const Partition& nu, ExpansionCache& cache) {
    if (lambda.size() <= nu.size()) return lambda == nu ? 1 : 0;
    mpz_class total = 0;
    // mu runs over partitions containing nu by a horizontal strip; the inner
    // product vanishes beyond |mu| = |lambda|
    for (const Partition& mu : partitions_up_to(lambda.size())) {
        if (mu.size() < nu.size()) continue;
        if (!is_horizontal_strip(mu, nu)) continue;
        total += integer_coefficient(*cache.h_series_row(mu, lambda.size()), lambda);
    }
    return total;
}

mpz_class a_finite(const Partition& lambda, const Partition& nu, int t) {
    if (t > kMaxSymmetricGroupSize)
        throw std::invalid_argument("a_finite: t exceeds the supported maximum " +
                                    std::to_string(kMaxSymmetricGroupSize));
    Partition padded = pad(nu, t);
    int work_cap = std::max(t, lambda.size());
    SymFunc outer = SymFunc::basis_element(Basis::Schur, padded, work_cap);
    SymFunc inner = series(SeriesKind::HWithOne, lambda.size());
    mpq_class value = hall_inner(
        SymFunc::basis_element(Basis::Schur, lambda, lambda.size()), plethysm(outer, inner));
    if (value.get_den() != 1)
        throw NonIntegralError("a_finite: inner product is " + value.get_str());
    return value.get_num();
}

mpz_class b_stable(const Partition& lambda, const Partition& nu, ExpansionCache& cache) {
    auto row = cache.lyndon_series_row(transpose(lambda), nu.size());
    mpz_class total = 0;
    for (const Partition& mu : vertical_strip_interiors(nu))
        total += integer_coefficient(*row, transpose(mu));
    return signed_by_size_difference(lambda, nu, total);
}

std::map<Partition, mpz_class, PartitionCanonLess> m_to_specht_row(const Partition& mu) {
    std::map<Partition, mpz_class, PartitionCanonLess> out;
    for (const Partition& nu : horizontal_strip_interiors(mu)) out[nu] = 1;
    return out;
}

std::map<Partition, mpz_class, PartitionCanonLess> specht_to_m_row(const Partition& nu) {
    std::map<Partition, mpz_class, PartitionCanonLess> out;
    for (const Partition& mu : vertical_strip_interiors(nu))
        out[mu] = signed_by_size_difference(nu, mu, 1);
    return out;
}

std::map<Partition, mpz_class, PartitionCanonLess> schur_to_m_row(const Partition& lambda,
                                                                  ExpansionCache& cache) {
    std::map<Partition, mpz_class, PartitionCanonLess> out;
    for (const Partition& mu : partitions_up_to(lambda.size())) {
        mpz_class value = integer_coefficient(*cache.h_series_row(mu, lambda.size()), lambda);
        if (value != 0) out[mu] = value;
    }
    return out;
}

std::map<Partition, mpz_class, PartitionCanonLess> m_to_schur_row(const Partition& mu,
                                                                  ExpansionCache& cache) {
    std::map<Partition, mpz_class, PartitionCanonLess> out;
    Partition mu_t = transpose(mu);
    for (const Partition& lambda : partitions_up_to(mu.size())) {
        mpz_class value =
            integer_coefficient(*cache.lyndon_series_row(transpose(lambda), mu.size()), mu_t);
        if (value != 0) out[lambda] = signed_by_size_difference(mu, lambda, value);
    }
    return out;
}

// --- stable Specht basis ----------------------------------------------------

StableSpechtExpansion schur_to_stable_specht(const SymFunc& f, ExpansionCache& cache) {
    if (f.basis() != Basis::Schur)
        throw std::invalid_argument("schur_to_stable_specht: input must be Schur basis");
    StableSpechtExpansion out;
    out.cap = f.cap();
    for (const auto& [lambda, coefficient] : f.terms()) {
        if (coefficient.get_den() != 1)
            throw NonIntegralError("schur_to_stable_specht: coefficient of " +
                                   lambda.to_string() + " is " + coefficient.get_str());
        mpz_class c = coefficient.get_num();
        for (const Partition& nu : partitions_up_to(lambda.size())) {
            mpz_class a = a_stable(lambda, nu, cache);
            if (a == 0) continue;
            auto [it, inserted] = out.terms.emplace(nu, a * c);
            if (!inserted) {
                it->second += a * c;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

SymFunc stable_specht_to_schur(const StableSpechtExpansion& f, ExpansionCache& cache) {
    SymFunc out(Basis::Schur, f.cap);
    for (const auto& [nu, c] : f.terms) {
        for (const Partition& lambda : partitions_up_to(nu.size())) {
            mpz_class b = b_stable(lambda, nu, cache);
            if (b != 0) out.add_term(lambda, mpq_class(b * c));
        }
    }
    return out;
}

std::string to_text(const StableSpechtExpansion& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class a = abs(c);
        if (p.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += '*';
            }
            out += "sdag";
            out += p.to_string();
        }
    }
    return out;
}

std::string to_json_string(const StableSpechtExpansion& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : f.terms) {
        nlohmann::json t;
        t["partition"] = p.parts();
        t["num"] = c.get_str();
        t["den"] = "1";
        terms.push_back(std::move(t));
    }
    nlohmann::json out;
    out["basis"] = "sdag";
    out["terms"] = std::move(terms);
    out["cap"] = f.cap;
    return out.dump();
}

// --- whole tables -----------------------------------------------------------

namespace {

void warm_expansions(int cap, bool parallel, bool lyndon_kind, ExpansionCache& cache) {
    // character tables first, so parallel workers only ever read them
    for (int n = 0; n <= cap; ++n) character_table(n);
    std::vector<Partition> shapes = partitions_up_to(cap);
    int count = static_cast<int>(shapes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < count; ++i) {
        if (lyndon_kind)
            cache.lyndon_series_row(shapes[static_cast<std::size_t>(i)], cap);
        else
            cache.h_series_row(shapes[static_cast<std::size_t>(i)], cap);
    }
}

}  // namespace

CoeffMatrix build_table(TableKind kind, int cap, const BuildOptions& options) {
    ExpansionCache& cache = options.cache ? *options.cache : ExpansionCache::global();
    CoeffMatrix out;
    out.kind = kind;
    out.cap = cap;
    std::vector<Partition> shapes = partitions_up_to(cap);

    switch (kind) {
        case TableKind::MToSp:
            for (const Partition& mu : shapes)
                for (const Partition& nu : horizontal_strip_interiors(mu)) out.add(mu, nu, 1);
            break;
        case TableKind::SpToM:
            for (const Partition& nu : shapes)
                for (const Partition& mu : vertical_strip_interiors(nu))
                    out.add(nu, mu, signed_by_size_difference(nu, mu, 1));
            break;
        case TableKind::SToM: {
            warm_expansions(cap, options.parallel, false, cache);
            for (const Partition& mu : shapes) {
                auto expansion = cache.h_series_row(mu, cap);
                for (const auto& [lambda, coefficient] : expansion->terms())
                    out.add(lambda, mu, integer_coefficient(*expansion, lambda));
            }
            break;
        }
        case TableKind::MToS: {
            warm_expansions(cap, options.parallel, true, cache);
            for (const Partition& lambda : shapes) {
                auto expansion = cache.lyndon_series_row(transpose(lambda), cap);
                for (const auto& [tau, coefficient] : expansion->terms()) {
                    // tau = mu^T
                    Partition mu = transpose(tau);
                    out.add(mu, lambda,
                            signed_by_size_difference(mu, lambda,
                                                      integer_coefficient(*expansion, tau)));
                }
            }
            break;
        }
        case TableKind::A: {
            warm_expansions(cap, options.parallel, false, cache);
            for (const Partition& mu : shapes) {
                auto expansion = cache.h_series_row(mu, cap);
                std::vector<Partition> interiors = horizontal_strip_interiors(mu);
                for (const auto& [lambda, coefficient] : expansion->terms()) {
                    mpz_class value = integer_coefficient(*expansion, lambda);
                    for (const Partition& nu : interiors) out.add(lambda, nu, value);
                }
            }
            break;
        }
        case TableKind::B: {
            // row nu holds the Schur expansion of sdag_nu, so the A and B
            // tables compose to the identity as literal matrix products
            warm_expansions(cap, options.parallel, true, cache);
            for (const Partition& nu : shapes) {
                std::vector<Partition> interiors = vertical_strip_interiors(nu);
                for (const Partition& lambda : shapes) {
                    if (lambda.size() > nu.size()) continue;
                    auto row = cache.lyndon_series_row(transpose(lambda), cap);
                    mpz_class total = 0;
                    for (const Partition& mu : interiors)
                        total += integer_coefficient(*row, transpose(mu));
                    if (total != 0)
                        out.add(nu, lambda, signed_by_size_difference(lambda, nu, total));
                }
            }
            break;
        }
    }
    return out;
}

CoeffMatrix build_table_reference(TableKind kind, int cap) {
    // private cache so this path shares no state with the parallel builder
    ExpansionCache cache;
    CoeffMatrix out;
    out.kind = kind;
    out.cap = cap;
    std::vector<Partition> shapes = partitions_up_to(cap);
    for (const Partition& row : shapes) {
        switch (kind) {
            case TableKind::MToSp:
                for (const auto& [col, v] : m_to_specht_row(row)) out.add(row, col, v);
                break;
            case TableKind::SpToM:
                for (const auto& [col, v] : specht_to_m_row(row)) out.add(row, col, v);
                break;
            case TableKind::SToM:
                for (const auto& [col, v] : schur_to_m_row(row, cache)) out.add(row, col, v);
                break;
            case TableKind::MToS:
                for (const auto& [col, v] : m_to_schur_row(row, cache)) out.add(row, col, v);
                break;
            case TableKind::A:
                for (const Partition& col : shapes) out.add(row, col, a_stable(row, col, cache));
                break;
            case TableKind::B:
                // row is the dagger label: entry(nu, lambda) = b_lambda^nu
                for (const Partition& col : shapes) out.add(row, col, b_stable(col, row, cache));
                break;
        }
    }
    return out;
}

namespace {

std::mutex g_table_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const CoeffMatrix>> g_table_memo;

}  // namespace

std::shared_ptr<const CoeffMatrix> table(TableKind kind, int cap, const TableOptions& options) {
    std::pair<int, int> memo_key{static_cast<int>(kind), cap};
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_table_memo.find(memo_key);
        if (it != g_table_memo.end()) return it->second;
    }

    CacheKey key{table_kind_name(kind), cap, kCacheSchemaVersion};
    std::shared_ptr<const CoeffMatrix> built;
    if (options.store) {
        Store::LoadResult cached = options.store->load(key);
        if (cached.status == Store::LoadStatus::Ok) {
            try {
                built = std::make_shared<const CoeffMatrix>(
                    matrix_from_json(cached.body, kind, cap));
            } catch (const CorruptCacheError& err) {
                if (options.warnings)
                    *options.warnings << "warning: " << err.what() << "; recomputing\n";
                built.reset();
            }
        } else if (cached.status == Store::LoadStatus::Corrupt && options.warnings) {
            *options.warnings << "warning: corrupt cache entry for " << key.kind << "-"
                              << key.cap << "; recomputing\n";
        }
    }
    if (!built) {
        BuildOptions build_options;
        build_options.parallel = options.parallel;
        built = std::make_shared<const CoeffMatrix>(build_table(kind, cap, build_options));
        if (options.store) {
            try {
                options.store->save(key, matrix_to_json(*built));
            } catch (const IoError& err) {
                if (options.warnings) *options.warnings << "warning: " << err.what() << "\n";
            }
        }
    }

    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto [it, inserted] = g_table_memo.emplace(memo_key, built);
    return it->second;
}

std::string matrix_to_json(const CoeffMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : m.entries) {
        nlohmann::json e;
        e["row"] = key.first.parts();
        e["col"] = key.second.parts();
        e["value"] = value.get_str();
        entries.push_back(std::move(e));
    }
    nlohmann::json out;
    out["kind"] = table_kind_name(m.kind);
    out["cap"] = m.cap;
    out["entries"] = std::move(entries);
    return out.dump();
}

namespace {

Partition partition_from_json(const nlohmann::json& array) {
    if (!array.is_array()) throw CorruptCacheError("cache: partition field is not an array");
    std::vector<int> parts;
    for (const auto& value : array) {
        if (!value.is_number_integer()) throw CorruptCacheError("cache: non-integer part");
        parts.push_back(value.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& err) {
        throw CorruptCacheError(std::string("cache: bad partition: ") + err.what());
    }
}

}  // namespace

CoeffMatrix matrix_from_json(const std::string& body, TableKind kind, int cap) {
    nlohmann::json parsed = nlohmann::json::parse(body, nullptr, false);
    if (parsed.is_discarded()) throw CorruptCacheError("cache: body is not valid JSON");
    try {
        if (parsed.at("kind").get<std::string>() != table_kind_name(kind) ||
            parsed.at("cap").get<int>() != cap)
            throw CorruptCacheError("cache: body kind/cap mismatch");
        CoeffMatrix out;
        out.kind = kind;
        out.cap = cap;
        for (const auto& entry : parsed.at("entries")) {
            Partition row = partition_from_json(entry.at("row"));
            Partition col = partition_from_json(entry.at("col"));
            if (row.size() > cap || col.size() > cap)
                throw CorruptCacheError("cache: entry beyond cap");
            mpz_class value;
            if (mpz_set_str(value.get_mpz_t(), entry.at("value").get<std::string>().c_str(), 10))
                throw CorruptCacheError("cache: bad integer literal");
            if (value != 0) out.entries[{std::move(row), std::move(col)}] = value;
        }
        return out;
    } catch (const nlohmann::json::exception& err) {
        throw CorruptCacheError(std::string("cache: malformed table body: ") + err.what());
    }
}

}  // namespace spst
