#include "kschub/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "kschub/fillings.hpp"

namespace kschub {

std::string to_string(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::H: return "h";
        case Basis::S: return "s";
        case Basis::BigG: return "G";
        case Basis::SmallG: return "g";
    }
    return "?";
}

Basis basis_from_string(const std::string& s) {
    if (s == "m") return Basis::M;
    if (s == "h") return Basis::H;
    if (s == "s") return Basis::S;
    if (s == "G") return Basis::BigG;
    if (s == "g") return Basis::SmallG;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

GradedExpansion::GradedExpansion(Basis basis, int degree_bound)
    : basis_(basis), degree_bound_(degree_bound) {
    require(degree_bound >= 0, "degree bound must be non-negative");
}

long long GradedExpansion::coeff(const Partition& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0 : it->second;
}

void GradedExpansion::add_term(const Partition& idx, long long value) {
    if (value == 0 || idx.size() > degree_bound_) return;
    auto [it, inserted] = terms_.emplace(idx, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedExpansion::scale(long long factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [idx, v] : terms_) v *= factor;
}

std::string GradedExpansion::to_string() const {
    if (terms_.empty()) return "0  (basis " + kschub::to_string(basis_) +
                               ", degree bound " + std::to_string(degree_bound_) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, v] : terms_) {
        long long a = v;
        if (first) {
            if (a < 0) { os << "- "; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a << '*';
        os << kschub::to_string(basis_) << '[';
        for (size_t i = 0; i < idx.parts().size(); ++i) {
            if (i) os << ',';
            os << idx.parts()[i];
        }
        os << ']';
        first = false;
    }
    os << "  (degree bound " << degree_bound_ << ")";
    return os.str();
}

namespace {

// thread-safe memo for expansions keyed by (basis, outer, inner, bound)
using ExpKey = std::tuple<Basis, Partition, Partition, int>;
std::map<ExpKey, GradedExpansion>& exp_cache() {
    static std::map<ExpKey, GradedExpansion> cache;
    return cache;
}
std::mutex& exp_mutex() {
    static std::mutex m;
    return m;
}

GradedExpansion h_row_to_m(int r, int D) {
    GradedExpansion out(Basis::M, D);
    if (r <= D)
        for (const auto& mu : partitions_of(r)) out.add_term(mu, 1);
    return out;
}

GradedExpansion compute_to_m(Basis b, const SkewShape& index, int D) {
    GradedExpansion out(Basis::M, D);
    const Partition& lam = index.outer();
    switch (b) {
        case Basis::M:
            require(index.is_straight(), "skew index not supported for basis m");
            out.add_term(lam, 1);
            return out;
        case Basis::H: {
            require(index.is_straight(), "skew index not supported for basis h");
            if (lam.size() > D) return out;
            GradedExpansion acc(Basis::M, D);
            acc.add_term(Partition(), 1);
            for (int p : lam.parts()) acc = multiply(acc, h_row_to_m(p, D));
            return acc;
        }
        case Basis::S: {
            require(index.is_straight(), "skew index not supported for basis s");
            if (lam.size() > D) return out;
            for (const auto& mu : partitions_of(lam.size()))
                out.add_term(mu, kostka(lam, Composition(mu.parts())));
            return out;
        }
        case Basis::BigG: {
            for (int d = index.cell_count(); d <= D; ++d)
                for (const auto& mu : partitions_of(d))
                    out.add_term(mu, k_coeff(index, Composition(mu.parts())));
            return out;
        }
        case Basis::SmallG: {
            // r-coefficients vanish beyond the cell count, so the m-support
            // of a skew g is finite
            int top = std::min(D, index.cell_count());
            for (int d = 0; d <= top; ++d)
                for (const auto& mu : partitions_of(d))
                    out.add_term(mu, r_coeff(index, Composition(mu.parts())));
            return out;
        }
    }
    return out;
}

} // namespace

GradedExpansion expand_to_m(Basis b, const SkewShape& index, int degree_bound) {
    ExpKey key{b, index.outer(), index.inner(), degree_bound};
    {
        std::lock_guard<std::mutex> lock(exp_mutex());
        if (auto it = exp_cache().find(key); it != exp_cache().end()) return it->second;
    }
    GradedExpansion out = compute_to_m(b, index, degree_bound);
    std::lock_guard<std::mutex> lock(exp_mutex());
    return exp_cache().emplace(std::move(key), std::move(out)).first->second;
}

GradedExpansion expand_to_m(Basis b, const Partition& index, int degree_bound) {
    return expand_to_m(b, SkewShape(index), degree_bound);
}

GradedExpansion add(const GradedExpansion& a, const GradedExpansion& b) {
    require(a.basis() == b.basis() && a.degree_bound() == b.degree_bound(),
            "bound mismatch");
    GradedExpansion out = a;
    for (const auto& [idx, v] : b.terms()) out.add_term(idx, v);
    return out;
}

GradedExpansion subtract_expansions(const GradedExpansion& a, const GradedExpansion& b) {
    require(a.basis() == b.basis() && a.degree_bound() == b.degree_bound(),
            "bound mismatch");
    GradedExpansion out = a;
    for (const auto& [idx, v] : b.terms()) out.add_term(idx, -v);
    return out;
}

namespace {

// distinct rearrangements of lam padded with zeros to `slots` positions
std::vector<std::vector<int>> rearrangements(const Partition& lam, int slots) {
    std::vector<std::vector<int>> out;
    if (lam.length() > slots) return out;
    std::vector<int> v(slots, 0);
    std::copy(lam.parts().begin(), lam.parts().end(), v.begin());
    std::sort(v.begin(), v.end());
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

long long monomial_product_coeff(const Partition& lam, const Partition& mu,
                                 const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return 0;
    int L = nu.length();
    if (lam.length() > L || mu.length() > L) return 0;
    long long count = 0;
    for (const auto& alpha : rearrangements(lam, L)) {
        std::vector<int> beta(L);
        bool ok = true;
        for (int i = 0; i < L; ++i) {
            beta[i] = nu.part(i + 1) - alpha[i];
            if (beta[i] < 0) { ok = false; break; }
        }
        if (!ok) continue;
        std::sort(beta.rbegin(), beta.rend());
        while (!beta.empty() && beta.back() == 0) beta.pop_back();
        if (Partition(beta) == mu) ++count;
    }
    return count;
}

GradedExpansion multiply(const GradedExpansion& a, const GradedExpansion& b) {
    require(a.basis() == Basis::M && b.basis() == Basis::M,
            "multiply works in the monomial basis");
    require(a.degree_bound() == b.degree_bound(), "bound mismatch");
    int D = a.degree_bound();
    GradedExpansion out(Basis::M, D);
    for (const auto& [lam, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) {
            int d = lam.size() + mu.size();
            if (d > D) continue;
            for (const auto& nu : partitions_of(d)) {
                long long c = monomial_product_coeff(lam, mu, nu);
                if (c != 0) out.add_term(nu, ca * cb * c);
            }
        }
    return out;
}

namespace {

GradedExpansion to_m(const GradedExpansion& e) {
    if (e.basis() == Basis::M) return e;
    GradedExpansion out(Basis::M, e.degree_bound());
    for (const auto& [idx, v] : e.terms()) {
        GradedExpansion part = expand_to_m(e.basis(), idx, e.degree_bound());
        part.scale(v);
        out = add(out, part);
    }
    return out;
}

// forward peel: the target's m-expansion touches only indices at or after
// the leading one in (size, reverse-lex) order; holds for s and G
GradedExpansion peel_forward(GradedExpansion residual, Basis target) {
    int D = residual.degree_bound();
    GradedExpansion out(target, D);
    while (!residual.is_zero()) {
        const auto& [mu, d] = *residual.terms().begin();
        GradedExpansion em = expand_to_m(target, mu, D);
        check_invariant(em.coeff(mu) == 1, "transition not unitriangular at leading index");
        em.scale(d);
        out.add_term(mu, d);
        residual = subtract_expansions(residual, em);
        check_invariant(residual.coeff(mu) == 0, "peel failed to clear leading index");
    }
    return out;
}

// peel for g: same-size support of g_mu lies at or after mu, lower-size
// support is arbitrary, so process sizes from the top down
GradedExpansion peel_small_g(GradedExpansion residual, Basis target) {
    int D = residual.degree_bound();
    GradedExpansion out(target, D);
    while (!residual.is_zero()) {
        int top = residual.terms().rbegin()->first.size();
        // first (reverse-lex earliest) index of the largest remaining size
        const Partition* mu = nullptr;
        for (const auto& [idx, v] : residual.terms())
            if (idx.size() == top) { mu = &idx; break; }
        Partition m = *mu;
        long long d = residual.coeff(m);
        GradedExpansion em = expand_to_m(target, m, D);
        check_invariant(em.coeff(m) == 1, "transition not unitriangular at leading index");
        em.scale(d);
        out.add_term(m, d);
        residual = subtract_expansions(residual, em);
        check_invariant(residual.coeff(m) == 0, "peel failed to clear leading index");
    }
    return out;
}

// h is not triangular against m directly (h_11 = m_2 + 2 m_11), so transit
// through s and back-substitute against the Kostka matrix per size block.
GradedExpansion peel_h(const GradedExpansion& f_m) {
    int D = f_m.degree_bound();
    GradedExpansion s = peel_forward(f_m, Basis::S);
    GradedExpansion out(Basis::H, D);
    for (int k = 0; k <= D; ++k) {
        auto block = partitions_of(k); // reverse-lex order
        std::map<Partition, long long> solved;
        for (auto it = block.rbegin(); it != block.rend(); ++it) {
            long long v = s.coeff(*it);
            for (const auto& [mu, d] : solved)
                v -= kostka(*it, Composition(mu.parts())) * d;
            if (v != 0) solved.emplace(*it, v);
        }
        for (const auto& [mu, d] : solved) out.add_term(mu, d);
    }
    return out;
}

GradedExpansion from_m(const GradedExpansion& f_m, Basis target) {
    GradedExpansion out;
    switch (target) {
        case Basis::M: return f_m;
        case Basis::S:
        case Basis::BigG: out = peel_forward(f_m, target); break;
        case Basis::SmallG: out = peel_small_g(f_m, target); break;
        case Basis::H: out = peel_h(f_m); break;
    }
    // recomposition check certifies exactness of the solve
    GradedExpansion back = to_m(out);
    check_invariant(back == f_m, "basis change failed recomposition");
    return out;
}

} // namespace

GradedExpansion change_basis(const GradedExpansion& e, Basis target) {
    if (e.basis() == target) return e;
    return from_m(to_m(e), target);
}

long long hall_pair(const GradedExpansion& a, const GradedExpansion& b) {
    require(a.degree_bound() == b.degree_bound(),
            "insufficient degree bound to convert: pairing needs equal bounds");
    GradedExpansion am = to_m(a);
    GradedExpansion bh = change_basis(b, Basis::H);
    long long sum = 0;
    for (const auto& [idx, v] : am.terms()) sum += v * bh.coeff(idx);
    return sum;
}

} // namespace kschub
