#include "kschub/coefficients.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kschub/bijections.hpp"
#include "kschub/json_io.hpp"

namespace kschub {

std::string to_string(Route r) {
    switch (r) {
        case Route::BuchCount: return "BUCH_COUNT";
        case Route::GProduct: return "G_PRODUCT";
        case Route::GDual: return "G_DUAL";
    }
    return "?";
}

Route route_from_string(const std::string& s) {
    if (s == "buch" || s == "BUCH_COUNT") return Route::BuchCount;
    if (s == "product" || s == "G_PRODUCT") return Route::GProduct;
    if (s == "dual" || s == "G_DUAL") return Route::GDual;
    throw std::invalid_argument("unknown route '" + s + "'");
}

std::optional<long long> CoefficientCache::lookup(const Partition& lambda,
                                                  const Partition& mu,
                                                  const Partition& nu,
                                                  Route route) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({lambda, mu, nu, route});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CoefficientCache::store(const CoefficientRecord& rec) {
    std::unique_lock lock(mutex_);
    entries_[{rec.lambda, rec.mu, rec.nu, rec.route}] = rec.value;
}

std::vector<CoefficientRecord> CoefficientCache::records() const {
    std::shared_lock lock(mutex_);
    std::vector<CoefficientRecord> out;
    out.reserve(entries_.size());
    for (const auto& [key, value] : entries_)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), value,
                       std::get<3>(key)});
    return out;
}

std::size_t CoefficientCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void CoefficientCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

CoefficientCache CoefficientCache::load(const std::string& path) {
    CoefficientCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        cache.store(coefficient_record_from_json(nlohmann::json::parse(line)));
    }
    return cache;
}

void CoefficientCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    require(static_cast<bool>(out), "cannot open cache file '" + path + "'");
    for (const auto& rec : records()) out << to_json(rec).dump() << '\n';
}

namespace {

long long cached(CoefficientCache* cache, const Partition& lambda, const Partition& mu,
                 const Partition& nu, Route route, auto&& compute) {
    if (cache)
        if (auto hit = cache->lookup(lambda, mu, nu, route)) return *hit;
    long long v = compute();
    if (cache) cache->store({lambda, mu, nu, v, route});
    return v;
}

} // namespace

long long c_buch(const Partition& lambda, const Partition& mu, const Partition& nu,
                 CoefficientCache* cache) {
    return cached(cache, lambda, mu, nu, Route::BuchCount, [&] {
        for (int i = 1; i <= lambda.length(); ++i)
            if (nu.part(i) < lambda.part(i)) return 0LL;
        if (nu.size() < lambda.size() + mu.size()) return 0LL;
        Composition wt = subtract(nu, lambda);
        long long count = 0;
        for (const auto& s : enumerate_fillings(SkewShape(mu), FillingClass::Svt,
                                                EnumConstraint::weight(wt)))
            if (is_yamanouchi(column_word(s), lambda)) ++count;
        int excess = nu.size() - lambda.size() - mu.size();
        return (excess % 2 == 0) ? count : -count;
    });
}

namespace {

// product expansions are shared across triples; memoized per (lambda,mu,D)
const GradedExpansion& product_in_G(const Partition& lambda, const Partition& mu,
                                    int D) {
    using Key = std::tuple<Partition, Partition, int>;
    static std::map<Key, GradedExpansion> memo;
    static std::mutex m;
    Key key{lambda, mu, D};
    {
        std::lock_guard lock(m);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    GradedExpansion prod = multiply(expand_to_m(Basis::BigG, lambda, D),
                                    expand_to_m(Basis::BigG, mu, D));
    GradedExpansion in_g = change_basis(prod, Basis::BigG);
    std::lock_guard lock(m);
    return memo.emplace(std::move(key), std::move(in_g)).first->second;
}

} // namespace

long long c_product(const Partition& lambda, const Partition& mu, const Partition& nu,
                    int degree_bound, CoefficientCache* cache) {
    require(degree_bound >= nu.size(), "insufficient-degree");
    return cached(cache, lambda, mu, nu, Route::GProduct,
                  [&] { return product_in_G(lambda, mu, degree_bound).coeff(nu); });
}

GradedExpansion skew_g_expand(const Partition& nu, const Partition& lambda) {
    require(nu.contains(lambda), "lambda must be contained in nu");
    SkewShape shape(nu, lambda);
    // raise the bound until two successive m-expansions agree; the RPP
    // weight size is capped by the cell count, so this terminates
    int d = shape.cell_count();
    GradedExpansion cur = expand_to_m(Basis::SmallG, shape, d);
    for (;; ++d) {
        GradedExpansion next = expand_to_m(Basis::SmallG, shape, d + 1);
        bool same = cur.terms() == next.terms();
        cur = std::move(next);
        if (same) break;
        check_invariant(d < 4 * (shape.cell_count() + 1),
                        "skew g expansion failed to stabilize");
    }
    return change_basis(cur, Basis::SmallG);
}

long long c_dual(const Partition& lambda, const Partition& mu, const Partition& nu,
                 CoefficientCache* cache) {
    require(nu.contains(lambda), "lambda must be contained in nu");
    return cached(cache, lambda, mu, nu, Route::GDual, [&] {
        using Key = std::pair<Partition, Partition>;
        static std::map<Key, GradedExpansion> memo;
        static std::mutex m;
        Key key{nu, lambda};
        {
            std::lock_guard lock(m);
            if (auto it = memo.find(key); it != memo.end()) return it->second.coeff(mu);
        }
        GradedExpansion e = skew_g_expand(nu, lambda);
        std::lock_guard lock(m);
        return memo.emplace(std::move(key), std::move(e)).first->second.coeff(mu);
    });
}

GradedExpansion skew_g_schur_expand(const Partition& nu, const Partition& lambda) {
    require(nu.contains(lambda), "lambda must be contained in nu");
    GradedExpansion out(Basis::S, nu.size() - lambda.size());
    for (const auto& a : enumerate_augmented_ssyt_all_shapes(lambda, nu))
        out.add_term(a.top().skew_shape().outer(), 1);
    return out;
}

GradedExpansion pieri_G(const Partition& lambda, const Composition& alpha,
                        int degree_bound) {
    require(degree_bound >= lambda.size() + alpha.size(), "insufficient-degree");
    GradedExpansion prod = multiply(expand_to_m(Basis::BigG, lambda, degree_bound),
                                    expand_to_m(Basis::H, alpha.sorted(), degree_bound));
    return change_basis(prod, Basis::BigG);
}

namespace {

struct Triple {
    Partition nu, lambda, mu;
};

std::vector<Triple> triples_up_to(int n) {
    std::vector<Triple> out;
    for (const auto& nu : partitions_up_to(n)) {
        auto subs = subpartitions_of(nu);
        for (const auto& lambda : subs)
            for (const auto& mu : subs) out.push_back({nu, lambda, mu});
    }
    return out;
}

CrossValidateReport run_cross_validate(int n, bool parallel, CoefficientCache* cache) {
    require(n >= 0, "max size must be non-negative");
    CrossValidateReport report;
    report.max_size = n;
    report.parallel = parallel;
    report.stopping_note =
        "dual route bound raised until two successive m-expansions agree "
        "(certified by the RPP cell-count bound)";
    auto triples = triples_up_to(n);
    report.checked = static_cast<long long>(triples.size());
    struct Row {
        long long buch = 0, product = 0, dual = 0;
    };
    std::vector<Row> rows(triples.size());

    auto eval = [&](size_t i) {
        const Triple& t = triples[i];
        rows[i].buch = c_buch(t.lambda, t.mu, t.nu, cache);
        rows[i].product = c_product(t.lambda, t.mu, t.nu, n, cache);
        rows[i].dual = c_dual(t.lambda, t.mu, t.nu, cache);
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(triples.size()); ++i)
            eval(static_cast<size_t>(i));
#else
        for (size_t i = 0; i < triples.size(); ++i) eval(i);
#endif
    } else {
        for (size_t i = 0; i < triples.size(); ++i) eval(i);
    }

    for (size_t i = 0; i < triples.size(); ++i) {
        const Row& r = rows[i];
        if (r.buch != r.product || r.buch != r.dual)
            report.mismatches.push_back(
                {triples[i].lambda, triples[i].mu, triples[i].nu, r.buch, r.product,
                 r.dual});
    }
    return report;
}

} // namespace

CrossValidateReport cross_validate_serial(int n, CoefficientCache* cache) {
    return run_cross_validate(n, false, cache);
}

CrossValidateReport cross_validate_parallel(int n, CoefficientCache* cache) {
    return run_cross_validate(n, true, cache);
}

CrossValidateReport cross_validate(int n, bool parallel, CoefficientCache* cache) {
    return run_cross_validate(n, parallel, cache);
}

} // namespace kschub
