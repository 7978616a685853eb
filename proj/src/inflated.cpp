#include "kschub/inflated.hpp"

#include <algorithm>

namespace kschub {

AugmentedFilling::AugmentedFilling(Filling top, Partition lambda, AugKind kind)
    : top_(std::move(top)), lambda_(std::move(lambda)), kind_(kind) {
    switch (kind_) {
        case AugKind::Tabloid:
            require(validate(top_, FillingClass::Tabloid), "top block is not a tabloid");
            break;
        case AugKind::Ssyt:
            require(top_.is_skew_shaped() && top_.skew_shape().is_straight() &&
                        validate(top_, FillingClass::Ssyt),
                    "top block is not a straight-shape SSYT");
            break;
        case AugKind::Svt:
            require(top_.is_skew_shaped() && top_.skew_shape().is_straight() &&
                        validate(top_, FillingClass::Svt),
                    "top block is not a straight-shape SVT");
            break;
    }
}

std::vector<std::vector<Cell>> AugmentedFilling::combined_rows() const {
    std::vector<std::vector<Cell>> rows;
    for (int i = 1; i <= lambda_.length(); ++i)
        rows.push_back(std::vector<Cell>(lambda_.part(i), Cell{i}));
    for (const auto& row : top_.row_data()) rows.push_back(row);
    return rows;
}

Filling AugmentedFilling::star_filling() const {
    SkewShape sh = star(top_.skew_shape().outer(), lambda_);
    std::vector<std::vector<Cell>> rows;
    for (int i = 1; i <= lambda_.length(); ++i)
        rows.push_back(std::vector<Cell>(lambda_.part(i), Cell{i}));
    for (const auto& row : top_.row_data()) rows.push_back(row);
    return Filling(sh, std::move(rows));
}

Composition AugmentedFilling::weight() const {
    Composition wt_top = kschub::weight(top_, kind_ == AugKind::Tabloid
                                                  ? FillingClass::Tabloid
                                                  : FillingClass::Svt)
                             .values;
    int n = std::max(wt_top.length(), lambda_.length());
    std::vector<int> out(n, 0);
    for (int i = 1; i <= n; ++i) out[i - 1] = wt_top.entry(i) + lambda_.part(i);
    return Composition(std::move(out));
}

Word AugmentedFilling::combined_row_word() const {
    Word w;
    auto rows = combined_rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        for (const Cell& c : *it) {
            require(c.size() == 1, "row word needs singleton cells");
            w.push_back(c[0]);
        }
    return w;
}

InflatedTableau::InflatedTableau(std::map<std::pair<int, int>, Cell> cells)
    : cells_(std::move(cells)) {
    // column-strictness across gaps: reading up an occupied column, every
    // cell's entries exceed all entries of the cell beneath it
    std::map<int, std::pair<int, int>> last_in_col; // col -> (row, max)
    for (const auto& [pos, cell] : cells_) {
        check_invariant(!cell.empty(), "inflated tableau has an empty cell");
        for (size_t i = 0; i + 1 < cell.size(); ++i)
            check_invariant(cell[i] < cell[i + 1], "inflated cell is not a set");
        auto [r, c] = pos;
        auto it = last_in_col.find(c);
        if (it != last_in_col.end())
            check_invariant(it->second.second < cell.front(),
                            "inflated tableau is not column-strict");
        last_in_col[c] = {r, cell.back()};
    }
}

std::vector<std::pair<int, int>> InflatedTableau::uncovered() const {
    std::map<int, int> top; // col -> max entry of topmost cell (rows ascend in map order)
    for (const auto& [pos, cell] : cells_) top[pos.second] = cell.back();
    return {top.begin(), top.end()};
}

Partition InflatedTableau::inflated_weight() const {
    std::vector<int> maxima;
    for (const auto& [col, m] : uncovered()) maxima.push_back(m);
    std::sort(maxima.rbegin(), maxima.rend());
    return Partition(maxima).conjugate();
}

namespace {

struct Grid {
    // (row, col) -> cell; columns are absolute staircase positions
    std::map<std::pair<int, int>, Cell> cells;

    bool occupied(int r, int c) const { return cells.count({r, c}) > 0; }
    // all entries in rows < r of column c are smaller than e, with at least
    // one entry present (an unsupported column is never a target)
    bool column_admits(int r, int c, int e) const {
        bool any = false;
        for (const auto& [pos, cell] : cells) {
            if (pos.second != c || pos.first >= r) continue;
            any = true;
            if (cell.back() >= e) return false;
        }
        return any;
    }
};

// Move the entries of one cell within row r.  The largest entry seeks the
// rightmost empty supported cell; later entries go weakly left of the
// previous landing and may join an occupied cell.  Entries with no target
// stay in the cell's own position at stay_col.
void place_cell_entries(Grid& g, int r, const Cell& entries, int stay_col, int width) {
    int limit = width;
    bool first = true;
    bool stayed = false;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        int e = *it;
        int found = -1;
        if (!stayed) {
            for (int j = limit; j >= 1; --j) {
                if (first && g.occupied(r, j)) continue;
                if (g.column_admits(r, j, e)) { found = j; break; }
            }
        }
        if (found < 0) {
            g.cells[{r, stay_col}].push_back(e);
            stayed = true; // remaining (smaller) entries stay with it
        } else {
            g.cells[{r, found}].push_back(e);
            limit = found;
            first = false;
        }
    }
    // cells are built largest-entry-first
    for (auto& [pos, cell] : g.cells)
        if (pos.first == r) std::sort(cell.begin(), cell.end());
}

InflatedTableau inflate_rows(const std::vector<std::vector<Cell>>& rows) {
    int width = 0;
    for (const auto& row : rows) width += static_cast<int>(row.size());
    // staircase: each row's cells occupy fresh columns left of all rows below
    std::vector<int> start(rows.size() + 1, 0);
    int right = width;
    std::vector<std::pair<int, int>> spans(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        int n = static_cast<int>(rows[r].size());
        spans[r] = {right - n + 1, right};
        right -= n;
    }
    Grid g;
    if (!rows.empty())
        for (size_t k = 0; k < rows[0].size(); ++k)
            g.cells[{1, spans[0].first + static_cast<int>(k)}] = rows[0][k];
    for (size_t r = 1; r < rows.size(); ++r) {
        int row = static_cast<int>(r) + 1;
        // cells right to left
        for (int k = static_cast<int>(rows[r].size()) - 1; k >= 0; --k)
            place_cell_entries(g, row, rows[r][k], spans[r].first + k, width);
    }
    return InflatedTableau(std::move(g.cells));
}

std::vector<std::vector<Cell>> combined_or_empty(const AugmentedFilling& a) {
    auto rows = a.combined_rows();
    // drop trailing empty rows so the staircase has a sensible height
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

} // namespace

InflatedTableau inflate_tabloid(const AugmentedFilling& a) {
    require(a.kind() == AugKind::Tabloid || a.top().all_singleton(),
            "inflate_tabloid needs singleton cells");
    return inflate_rows(combined_or_empty(a));
}

InflatedTableau inflate_svt(const AugmentedFilling& a) {
    return inflate_rows(combined_or_empty(a));
}

InflatedTableau inflate_svt_by_columns(const AugmentedFilling& a) {
    // the combined diagram's columns, rightmost first: the lambda block sits
    // southeast, so its columns come first, then the top block's
    struct ColCell { int row; Cell entries; };
    std::vector<std::vector<ColCell>> columns; // rightmost first, cells bottom-up
    const Partition& lam = a.lambda();
    Partition lamc = lam.conjugate();
    for (int c = lam.part(1); c >= 1; --c) {
        std::vector<ColCell> col;
        for (int r = 1; r <= lamc.part(c); ++r) col.push_back({r, Cell{r}});
        columns.push_back(std::move(col));
    }
    const Filling& top = a.top();
    int top_width = 0;
    for (int r = 1; r <= top.rows(); ++r) top_width = std::max(top_width, top.row_end(r));
    for (int c = top_width; c >= 1; --c) {
        std::vector<ColCell> col;
        for (int r = 1; r <= top.rows(); ++r)
            if (top.has_cell(r, c)) col.push_back({lam.length() + r, top.cell(r, c)});
        columns.push_back(std::move(col));
    }
    int width = 0;
    for (const auto& col : columns) width += static_cast<int>(!col.empty());
    width = std::max(width, 1);
    Grid g;
    int next_x = width;
    bool first_col = true;
    for (const auto& col : columns) {
        if (col.empty()) continue;
        int x = next_x--;
        if (first_col) {
            for (const auto& cc : col) g.cells[{cc.row, x}] = cc.entries;
            first_col = false;
            continue;
        }
        for (const auto& cc : col) place_cell_entries(g, cc.row, cc.entries, x, width);
    }
    return InflatedTableau(std::move(g.cells));
}

Partition inflated_weight(const AugmentedFilling& a) {
    return inflate_svt(a).inflated_weight();
}

std::pair<bool, bool> check_yamanouchi_weight_equivalence(const AugmentedFilling& a) {
    require(a.kind() == AugKind::Tabloid, "equivalence check is for tabloids");
    bool yam = is_yamanouchi(a.combined_row_word());
    Partition iwt = inflated_weight(a);
    bool equal = Composition(iwt.parts()) == a.weight();
    return {yam, equal};
}

namespace {

int default_entry_bound(const Partition& target, int requested) {
    // uncovered maxima rearrange to target', whose largest part is l(target);
    // every entry lies below some uncovered maximum
    return requested >= 0 ? requested : target.length();
}

} // namespace

std::vector<AugmentedFilling> enumerate_augmented_tabloids(
    const Partition& lambda, const std::vector<int>& row_lengths,
    const Partition& target_iwt, int max_entry) {
    std::vector<AugmentedFilling> out;
    if (!target_iwt.contains(lambda)) return out;
    int bound = default_entry_bound(target_iwt, max_entry);
    for (auto& t : enumerate_tabloids(row_lengths, bound)) {
        AugmentedFilling a(std::move(t), lambda, AugKind::Tabloid);
        if (inflated_weight(a) == target_iwt) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AugmentedFilling> enumerate_augmented_of_shape(
    const Partition& lambda, AugKind kind, const Partition& top_shape,
    const Partition& target_iwt, int max_entry) {
    std::vector<AugmentedFilling> out;
    if (!target_iwt.contains(lambda)) return out;
    int bound = default_entry_bound(target_iwt, max_entry);
    FillingClass cls = kind == AugKind::Ssyt ? FillingClass::Ssyt : FillingClass::Svt;
    require(kind != AugKind::Tabloid, "use enumerate_augmented_tabloids for tabloids");
    int budget = target_iwt.size() - lambda.size();
    if (top_shape.size() > budget) return out;
    for (auto& f : enumerate_fillings(SkewShape(top_shape), cls,
                                      EnumConstraint::entries_up_to(bound, budget))) {
        AugmentedFilling a(std::move(f), lambda, kind);
        if (inflated_weight(a) == target_iwt) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AugmentedFilling> enumerate_augmented_ssyt_all_shapes(
    const Partition& lambda, const Partition& target_iwt) {
    std::vector<AugmentedFilling> out;
    if (!target_iwt.contains(lambda)) return out;
    int budget = target_iwt.size() - lambda.size();
    for (const auto& shape : partitions_up_to(budget)) {
        auto block = enumerate_augmented_of_shape(lambda, AugKind::Ssyt, shape, target_iwt);
        out.insert(out.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
    }
    return out;
}

} // namespace kschub
