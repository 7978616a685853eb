#ifndef KSCHUB_FILLINGS_HPP
#define KSCHUB_FILLINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kschub/shapes.hpp"

namespace kschub {

/// One cell: a non-empty set of positive integers, stored ascending.
using Cell = std::vector<int>;
/// Words are sequences of positive integers, so letters above 9 stay
/// unambiguous.
using Word = std::vector<int>;

enum class FillingClass { Ssyt, Tabloid, Svt, Rpp, Elegant };

std::string to_string(FillingClass cls);

/// A filling of a grid of cells, each holding a finite ascending set.
///
/// The shape is stored as per-row (offset, cells): for skew shapes the
/// offset of row r is inner_r; tabloids are rows at offset 0 whose lengths
/// may form any composition (empty rows allowed).
class Filling {
public:
    Filling() = default;
    Filling(const SkewShape& shape, std::vector<std::vector<Cell>> rows);
    // tabloid-style rows at offset 0, arbitrary lengths, singleton or set cells
    static Filling from_rows(std::vector<std::vector<Cell>> rows);
    static Filling from_values(const SkewShape& shape,
                               const std::vector<std::vector<int>>& rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const { return static_cast<int>(rows_[r - 1].size()); }
    int row_offset(int r) const { return offsets_[r - 1]; }
    int row_begin(int r) const { return offsets_[r - 1] + 1; }
    int row_end(int r) const { return offsets_[r - 1] + row_length(r); }
    bool has_cell(int row, int col) const {
        return row >= 1 && row <= rows() && col >= row_begin(row) && col <= row_end(row);
    }
    const Cell& cell(int row, int col) const { return rows_[row - 1][col - row_begin(row)]; }
    Cell& cell(int row, int col) { return rows_[row - 1][col - row_begin(row)]; }
    const std::vector<std::vector<Cell>>& row_data() const { return rows_; }

    int value(int row, int col) const; // singleton cells only
    bool all_singleton() const;
    int cell_count() const;
    int entry_count() const;
    int max_entry() const;
    // excess = entries - cells
    int excess() const { return entry_count() - cell_count(); }

    bool is_skew_shaped() const;            // offsets/lengths form a skew shape
    SkewShape skew_shape() const;           // requires is_skew_shaped()
    std::vector<int> outer_lengths() const; // offset + length per row
    std::vector<int> inner_lengths() const; // offsets per row

    bool operator==(const Filling& o) const {
        return offsets_ == o.offsets_ && rows_ == o.rows_;
    }

    std::string to_string() const;

private:
    std::vector<int> offsets_;
    std::vector<std::vector<Cell>> rows_;
};

enum class WeightRule { LetterCount, ColumnCount };

/// A weight together with the rule that produced it; RPP weights use the
/// column-count rule and must not silently mix with letter counts.
struct WeightVector {
    Composition values;
    WeightRule rule = WeightRule::LetterCount;

    bool operator==(const WeightVector& o) const {
        return rule == o.rule && values == o.values;
    }
};

bool validate(const Filling& f, FillingClass cls);
WeightVector weight(const Filling& f, FillingClass cls);

Word row_word(const Filling& f);           // rows top to bottom, left to right
Word column_word(const Filling& f);        // columns left to right, cells top to bottom
Word sv_row_word(const Filling& f);        // set-valued row word, see sec. 4.2 rule

// Every suffix v must satisfy wt_i(v)+lam_i >= wt_{i+1}(v)+lam_{i+1}.
bool is_yamanouchi(const Word& w, const Partition& lam = Partition());

// RSK row insertion of a word; returns the insertion tableau P(w).
Filling insertion_tableau(const Word& w);
bool knuth_equivalent(const Word& u, const Word& w);

// The unique tableau of shape and weight lambda (row i filled with i).
Filling super_standard(const Partition& lam);

struct EnumConstraint {
    std::optional<Composition> weight_equals; // exact weight under the class rule
    std::optional<int> max_entry;
    std::optional<int> max_entries_total;     // caps |wt| (useful for SVT searches)

    static EnumConstraint weight(Composition a) {
        return {std::move(a), std::nullopt, std::nullopt};
    }
    static EnumConstraint entries_up_to(int n) {
        return {std::nullopt, n, std::nullopt};
    }
    static EnumConstraint entries_up_to(int n, int total) {
        return {std::nullopt, n, total};
    }
    static EnumConstraint none() { return {std::nullopt, std::nullopt, std::nullopt}; }
};

// All fillings of the class meeting the constraint, each exactly once, in a
// deterministic cell-lexicographic order.  Unconstrained enumeration is only
// finite (and allowed) for the elegant class.
std::vector<Filling> enumerate_fillings(const SkewShape& shape, FillingClass cls,
                                        const EnumConstraint& constraint);

// Tabloids with given row lengths (a composition; zero rows allowed).
std::vector<Filling> enumerate_tabloids(const std::vector<int>& row_lengths,
                                        int max_entry);

long long kostka(const Partition& lam, const Composition& mu);
// (-1)^(|mu| - #cells) * |SVT(shape, mu)|
long long k_coeff(const SkewShape& shape, const Composition& mu);
// |RPP(shape, alpha)| under the column-count weight rule
long long r_coeff(const SkewShape& shape, const Composition& alpha);
// number of strict elegant fillings of lam/mu; 0 when mu is not inside lam
long long elegant_count(const Partition& lam, const Partition& mu);

} // namespace kschub

#endif
