#ifndef KSCHUB_SYMFUNC_HPP
#define KSCHUB_SYMFUNC_HPP

#include <map>
#include <string>

#include "kschub/shapes.hpp"

namespace kschub {

enum class Basis { M, H, S, BigG, SmallG };

std::string to_string(Basis b);
Basis basis_from_string(const std::string& s); // "m","h","s","G","g"

/// Integer-coefficient expansion in one basis, truncated at a degree bound.
/// Terms are indexed by partitions of size <= degree_bound; no zero
/// coefficients are stored.  Term iteration follows the canonical
/// (size, reverse-lex) order.
class GradedExpansion {
public:
    using TermMap = std::map<Partition, long long, SizeRevLexLess>;

    GradedExpansion() = default;
    GradedExpansion(Basis basis, int degree_bound);

    Basis basis() const { return basis_; }
    int degree_bound() const { return degree_bound_; }
    long long coeff(const Partition& idx) const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // drops the term if value becomes 0; ignores indices beyond the bound
    void add_term(const Partition& idx, long long value);
    void scale(long long factor);

    bool operator==(const GradedExpansion& o) const {
        return basis_ == o.basis_ && degree_bound_ == o.degree_bound_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    Basis basis_ = Basis::M;
    int degree_bound_ = 0;
    TermMap terms_;
};

// m-expansion of a basis element, truncated at degree D.  Results are
// memoized; safe for concurrent use.
GradedExpansion expand_to_m(Basis b, const Partition& index, int degree_bound);
// Skew indices exist for G and g only.
GradedExpansion expand_to_m(Basis b, const SkewShape& index, int degree_bound);

GradedExpansion add(const GradedExpansion& a, const GradedExpansion& b);
GradedExpansion subtract_expansions(const GradedExpansion& a, const GradedExpansion& b);

// Product in the monomial basis, truncated at the common degree bound.
GradedExpansion multiply(const GradedExpansion& a, const GradedExpansion& b);

// Coefficient of m_nu in m_lam * m_mu.
long long monomial_product_coeff(const Partition& lam, const Partition& mu,
                                 const Partition& nu);

// Exact re-expansion in the target basis; round trips are identities.  The
// recomposition is verified internally and a failed unitriangularity check
// raises invariant_violation.
GradedExpansion change_basis(const GradedExpansion& e, Basis target);

// Hall inner product via m- and h-coefficients; requires equal bounds.
long long hall_pair(const GradedExpansion& a, const GradedExpansion& b);

} // namespace kschub

#endif
