#include "kschub/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kschub {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 1, "partition parts must be positive");
        if (i + 1 < parts_.size())
            require(parts_[i] >= parts_[i + 1], "partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> out(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j)
        out[j - 1] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) require(e >= 0, "composition entries must be non-negative");
    size_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

int Composition::trimmed_length() const {
    int n = length();
    while (n > 0 && entries_[n - 1] == 0) --n;
    return n;
}

bool Composition::is_partition() const {
    int n = trimmed_length();
    for (int i = 0; i < n; ++i) {
        if (entries_[i] <= 0) return false;
        if (i + 1 < n && entries_[i] < entries_[i + 1]) return false;
    }
    return true;
}

Partition Composition::to_partition() const {
    require(is_partition(), "composition is not a partition");
    std::vector<int> v(entries_.begin(), entries_.begin() + trimmed_length());
    return Partition(std::move(v));
}

Partition Composition::sorted() const {
    std::vector<int> v;
    for (int e : entries_)
        if (e > 0) v.push_back(e);
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

bool Composition::operator==(const Composition& o) const {
    int n = trimmed_length(), m = o.trimmed_length();
    if (n != m) return false;
    return std::equal(entries_.begin(), entries_.begin() + n, o.entries_.begin());
}

bool Composition::operator<(const Composition& o) const {
    int n = trimmed_length(), m = o.trimmed_length();
    return std::lexicographical_compare(entries_.begin(), entries_.begin() + n,
                                        o.entries_.begin(), o.entries_.begin() + m);
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    require(outer_.contains(inner_), "skew shape requires inner contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells_row_major() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(cell_count());
    for (int r = 1; r <= rows(); ++r)
        for (int c = row_begin(r); c <= row_end(r); ++c) out.emplace_back(r, c);
    return out;
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

Partition conjugate(const Partition& lam) { return lam.conjugate(); }

bool contains(const Partition& lam, const Partition& mu) { return lam.contains(mu); }

SkewShape star(const Partition& mu, const Partition& lam) {
    // lambda rows sit at the bottom, pushed right of mu's widest row; mu rows
    // stack on top at their own columns.
    std::vector<int> outer, inner;
    int shift = mu.part(1);
    for (int r = 1; r <= lam.length(); ++r) {
        outer.push_back(lam.part(r) + shift);
        inner.push_back(shift);
    }
    for (int i = 1; i <= mu.length(); ++i) outer.push_back(mu.part(i));
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Composition subtract(const Partition& nu, const Partition& lam) {
    std::vector<int> out;
    int n = std::max(nu.length(), lam.length());
    for (int i = 1; i <= n; ++i) {
        int d = nu.part(i) - lam.part(i);
        require(d >= 0, "not-contained");
        out.push_back(d);
    }
    return Composition(std::move(out));
}

bool size_revlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // reverse-lex: lexicographically larger part vector comes first
    return a.parts() > b.parts();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    require(n >= 0, "partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    require(n >= 0, "partitions_up_to requires n >= 0");
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto block = partitions_of(k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> subpartitions_of(const Partition& nu) {
    std::vector<Partition> out;
    for (const auto& mu : partitions_up_to(nu.size()))
        if (nu.contains(mu)) out.push_back(mu);
    return out;
}

} // namespace kschub
