#ifndef KSCHUB_INFLATED_HPP
#define KSCHUB_INFLATED_HPP

#include <map>
#include <utility>
#include <vector>

#include "kschub/fillings.hpp"

namespace kschub {

enum class AugKind { Tabloid, Ssyt, Svt };

/// A filling placed caty-corner above-left of the super-standard tableau
/// T_lambda.  The lambda block always holds exactly T_lambda.
class AugmentedFilling {
public:
    AugmentedFilling(Filling top, Partition lambda, AugKind kind);

    const Filling& top() const { return top_; }
    const Partition& lambda() const { return lambda_; }
    AugKind kind() const { return kind_; }

    // rows of the combined object bottom to top: T_lambda's rows then top's
    std::vector<std::vector<Cell>> combined_rows() const;
    // combined filling on star(shape(top), lambda); top must be skew-shaped
    Filling star_filling() const;
    Composition weight() const;      // wt(top) + lambda, letter counts
    Word combined_row_word() const;  // requires singleton cells

    bool operator==(const AugmentedFilling& o) const {
        return kind_ == o.kind_ && lambda_ == o.lambda_ && top_ == o.top_;
    }

private:
    Filling top_;
    Partition lambda_;
    AugKind kind_;
};

/// Column-strict grid with explicit positions and gaps, as produced by the
/// inflation procedure.  Uncovered cells are the topmost occupied cell of
/// each occupied column.
class InflatedTableau {
public:
    explicit InflatedTableau(std::map<std::pair<int, int>, Cell> cells);

    const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }
    // (column, max entry of the topmost cell), ordered by column
    std::vector<std::pair<int, int>> uncovered() const;
    // conjugate of the partition rearrangement of the uncovered maxima
    Partition inflated_weight() const;

private:
    std::map<std::pair<int, int>, Cell> cells_; // keyed (row, col)
};

InflatedTableau inflate_tabloid(const AugmentedFilling& a);
InflatedTableau inflate_svt(const AugmentedFilling& a);
// column-order variant of the same construction (sec. 4.1 remark)
InflatedTableau inflate_svt_by_columns(const AugmentedFilling& a);

Partition inflated_weight(const AugmentedFilling& a);

// (row word of the augmented tabloid is Yamanouchi?, iwt equals wt?); the
// two answers must agree for every input and are exposed as a testable pair.
std::pair<bool, bool> check_yamanouchi_weight_equivalence(const AugmentedFilling& a);

// All augmented tabloids with top rows of the given lengths and inflated
// weight target; entries are bounded by l(target).
std::vector<AugmentedFilling> enumerate_augmented_tabloids(
    const Partition& lambda, const std::vector<int>& row_lengths,
    const Partition& target_iwt, int max_entry = -1);

// All augmented SSYT/SVT of the given top shape with the given inflated
// weight.  kind selects the class; for Ssyt only singleton fillings appear.
std::vector<AugmentedFilling> enumerate_augmented_of_shape(
    const Partition& lambda, AugKind kind, const Partition& top_shape,
    const Partition& target_iwt, int max_entry = -1);

// All augmented SSYT of any shape with the given inflated weight (the
// highest-weight family the Schur expansion of skew g sums over).
std::vector<AugmentedFilling> enumerate_augmented_ssyt_all_shapes(
    const Partition& lambda, const Partition& target_iwt);

} // namespace kschub

#endif
