#ifndef KSCHUB_SHAPES_HPP
#define KSCHUB_SHAPES_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kschub/errors.hpp"

namespace kschub {

/// Integer partition: weakly decreasing positive parts.  Canonical form
/// strips trailing zeros; the empty partition is ().
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }     // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; parts beyond length() read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic on the part vectors; used only as a map key order.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Sequence of non-negative integers.  Entries are kept as given; two
/// compositions are equal iff they agree after trailing-zero removal.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    int size() const { return size_; }     // |alpha|
    int length() const { return static_cast<int>(entries_.size()); }
    // length after trailing-zero removal
    int trimmed_length() const;
    int entry(int i) const {
        return (i >= 1 && i <= length()) ? entries_[i - 1] : 0;
    }
    const std::vector<int>& entries() const { return entries_; }

    bool is_partition() const;
    // as a partition, requires is_partition()
    Partition to_partition() const;
    // partition rearrangement (sort descending)
    Partition sorted() const;

    bool operator==(const Composition& o) const;
    bool operator<(const Composition& o) const; // map key order (trimmed lex)

    std::string to_string() const;

private:
    std::vector<int> entries_;
    int size_ = 0;
};

/// Skew shape outer/inner with inner contained in outer.  Coordinates are
/// French: row 1 at the bottom, (row, column) both 1-based.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = Partition());

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int rows() const { return outer_.length(); }
    int cell_count() const { return outer_.size() - inner_.size(); }
    bool is_straight() const { return inner_.empty(); }

    // columns inner_r+1 .. outer_r hold cells of row r
    int row_begin(int r) const { return inner_.part(r) + 1; }
    int row_end(int r) const { return outer_.part(r); }
    bool has_cell(int row, int col) const {
        return row >= 1 && row <= rows() && col >= row_begin(row) && col <= row_end(row);
    }
    std::vector<std::pair<int, int>> cells_row_major() const; // bottom row first

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

    std::string to_string() const;

private:
    Partition outer_, inner_;
};

Partition conjugate(const Partition& lam);
bool contains(const Partition& lam, const Partition& mu); // mu subset of lam

// Skew shape with lambda occupying the bottom-right block and mu the
// top-left block, no shared rows or columns (the star shape mu*lambda).
SkewShape star(const Partition& mu, const Partition& lam);

// Componentwise nu - lam; throws "not-contained" on a negative entry.
Composition subtract(const Partition& nu, const Partition& lam);

// Compare in the canonical enumeration order: by size, then reverse-
// lexicographic (lex-descending) within a size.  This order is part of the
// contract for triangular solves and reports.
bool size_revlex_less(const Partition& a, const Partition& b);

struct SizeRevLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return size_revlex_less(a, b);
    }
};

// All partitions of size 0..n in (size, reverse-lex) order.
std::vector<Partition> partitions_up_to(int n);
// All partitions of size exactly n in reverse-lex order.
std::vector<Partition> partitions_of(int n);
// All partitions contained in nu, in (size, reverse-lex) order.
std::vector<Partition> subpartitions_of(const Partition& nu);

} // namespace kschub

#endif
