#ifndef KSCHUB_COEFFICIENTS_HPP
#define KSCHUB_COEFFICIENTS_HPP

#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "kschub/symfunc.hpp"

namespace kschub {

enum class Route { BuchCount, GProduct, GDual };

std::string to_string(Route r);
Route route_from_string(const std::string& s); // "buch","product","dual" or tags

struct CoefficientRecord {
    Partition lambda, mu, nu;
    long long value = 0;
    Route route = Route::BuchCount;

    bool operator==(const CoefficientRecord& o) const {
        return lambda == o.lambda && mu == o.mu && nu == o.nu && value == o.value &&
               route == o.route;
    }
};

/// Coefficient store keyed on (lambda, mu, nu, route); concurrent reads,
/// serialized writes.  Persisted as newline-delimited JSON records.
class CoefficientCache {
public:
    CoefficientCache() = default;

    std::optional<long long> lookup(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, Route route) const;
    void store(const CoefficientRecord& rec);
    std::vector<CoefficientRecord> records() const; // deterministic order
    std::size_t size() const;
    void clear();

    static CoefficientCache load(const std::string& path); // missing file = empty
    void save(const std::string& path) const;

private:
    using Key = std::tuple<Partition, Partition, Partition, Route>;
    std::map<Key, long long> entries_;
    mutable std::shared_mutex mutex_;
};

// Buch's rule: signed count of column lambda-Yamanouchi SVT of shape mu and
// weight nu - lambda.
long long c_buch(const Partition& lambda, const Partition& mu, const Partition& nu,
                 CoefficientCache* cache = nullptr);

// Coefficient of G_nu in the G-expansion of G_lambda * G_mu at bound D.
long long c_product(const Partition& lambda, const Partition& mu, const Partition& nu,
                    int degree_bound, CoefficientCache* cache = nullptr);

// Coefficient of g_mu in the g-expansion of the skew g_{nu/lambda}.
long long c_dual(const Partition& lambda, const Partition& mu, const Partition& nu,
                 CoefficientCache* cache = nullptr);

// g-expansion of g_{nu/lambda}; the internal degree bound is raised until
// the m-expansion stabilizes (certified finite by the RPP cell-count bound).
GradedExpansion skew_g_expand(const Partition& nu, const Partition& lambda);

// Schur expansion of g_{nu/lambda} over SSYT with inflated weight nu.
GradedExpansion skew_g_schur_expand(const Partition& nu, const Partition& lambda);

// G-expansion of G_lambda * h_alpha at bound D; the G_nu coefficient equals
// r_coeff(nu/lambda, alpha).
GradedExpansion pieri_G(const Partition& lambda, const Composition& alpha,
                        int degree_bound);

struct RouteMismatch {
    Partition lambda, mu, nu;
    long long buch = 0, product = 0, dual = 0;
};

struct CrossValidateReport {
    int max_size = 0;
    long long checked = 0;
    std::vector<RouteMismatch> mismatches;
    std::string stopping_note; // records the dual-route stabilization rule
    bool parallel = false;

    bool passed() const { return mismatches.empty(); }
};

// Evaluates all triples with |nu| <= n in the canonical order, comparing the
// three routes.  The parallel variant fans triples out with OpenMP and
// produces the identical report.
CrossValidateReport cross_validate_serial(int n, CoefficientCache* cache = nullptr);
CrossValidateReport cross_validate_parallel(int n, CoefficientCache* cache = nullptr);
CrossValidateReport cross_validate(int n, bool parallel = true,
                                   CoefficientCache* cache = nullptr);

} // namespace kschub

#endif
