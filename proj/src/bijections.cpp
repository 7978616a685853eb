#include "kschub/bijections.hpp"

#include <algorithm>
#include <map>

namespace kschub {

AugmentedFilling partial_map(const Filling& rpp) {
    require(validate(rpp, FillingClass::Rpp), "partial_map needs a reverse plane partition");
    SkewShape shape = rpp.skew_shape();
    // row x of the tabloid collects, in ascending order, the rows of the
    // topmost x in each column containing x
    std::map<int, std::vector<int>> rows;
    int maxcol = 0;
    for (int r = 1; r <= rpp.rows(); ++r) maxcol = std::max(maxcol, rpp.row_end(r));
    for (int c = 1; c <= maxcol; ++c)
        for (int r = 1; r <= rpp.rows(); ++r) {
            if (!rpp.has_cell(r, c)) continue;
            int x = rpp.value(r, c);
            bool covered = rpp.has_cell(r + 1, c) && rpp.value(r + 1, c) == x;
            if (!covered) rows[x].push_back(r);
        }
    int maxletter = rows.empty() ? 0 : rows.rbegin()->first;
    std::vector<std::vector<Cell>> tab(maxletter);
    for (auto& [x, positions] : rows) {
        std::sort(positions.begin(), positions.end());
        for (int p : positions) tab[x - 1].push_back(Cell{p});
    }
    return AugmentedFilling(Filling::from_rows(std::move(tab)), shape.inner(),
                            AugKind::Tabloid);
}

Filling partial_inverse(const AugmentedFilling& a, const Partition& nu) {
    require(a.kind() == AugKind::Tabloid, "partial_inverse needs an augmented tabloid");
    require(inflated_weight(a) == nu, "not-in-image");
    const Partition& lam = a.lambda();
    SkewShape shape(nu, lam);
    std::vector<std::vector<Cell>> rows;
    for (int r = 1; r <= shape.rows(); ++r)
        rows.push_back(std::vector<Cell>(shape.row_end(r) - shape.row_begin(r) + 1));
    auto cell_at = [&](int r, int c) -> Cell& { return rows[r - 1][c - shape.row_begin(r)]; };
    const Filling& t = a.top();
    for (int i = 1; i <= t.rows(); ++i) {
        for (int k = t.row_length(i); k >= 1; --k) {
            int e = t.value(i, k);
            int col = -1;
            for (int c = shape.row_begin(e); c <= shape.row_end(e); ++c)
                if (shape.has_cell(e, c) && cell_at(e, c).empty()) { col = c; break; }
            check_invariant(col > 0, "partial_inverse found no empty cell");
            cell_at(e, col) = Cell{i};
            for (int r = e - 1; r >= 1 && shape.has_cell(r, col); --r) {
                if (!cell_at(r, col).empty()) break;
                cell_at(r, col) = Cell{i};
            }
        }
    }
    Filling out(shape, std::move(rows));
    check_invariant(validate(out, FillingClass::Rpp), "partial_inverse built a non-RPP");
    return out;
}

namespace {

struct MulticellPos {
    int row = 0, col = 0;
    bool found = false;
};

MulticellPos highest_rightmost_multicell(const Filling& f) {
    MulticellPos p;
    for (int r = f.rows(); r >= 1 && !p.found; --r)
        for (int c = f.row_end(r); c >= f.row_begin(r); --c)
            if (f.cell(r, c).size() > 1) {
                p = {r, c, true};
                break;
            }
    return p;
}

} // namespace

Filling dilate(const Filling& svt) {
    require(validate(svt, FillingClass::Svt), "dilate needs a set-valued tableau");
    MulticellPos p = highest_rightmost_multicell(svt);
    require(p.found, "already-terminal");
    auto rows = svt.row_data();
    Cell& source = rows[p.row - 1][p.col - svt.row_begin(p.row)];
    int x = source.back();
    source.pop_back();
    // RSK row insertion into the subtableau strictly above row p.row;
    // those rows are multicell-free because p.row is the highest with one
    int cur = x;
    for (int r = p.row + 1;; ++r) {
        if (r > static_cast<int>(rows.size())) {
            rows.push_back({Cell{cur}});
            break;
        }
        auto& row = rows[r - 1];
        size_t pos = row.size();
        for (size_t k = 0; k < row.size(); ++k)
            if (row[k][0] > cur) { pos = k; break; }
        if (pos == row.size()) {
            row.push_back(Cell{cur});
            break;
        }
        std::swap(cur, row[pos][0]);
    }
    Filling out = Filling::from_rows(std::move(rows));
    check_invariant(validate(out, FillingClass::Svt), "dilation broke the tableau");
    return out;
}

DilationTrace phi_trace(const Filling& svt) {
    require(validate(svt, FillingClass::Svt), "phi needs a set-valued tableau");
    require(svt.is_skew_shaped() && svt.skew_shape().is_straight(),
            "phi needs a straight shape");
    DilationTrace trace;
    trace.initial = svt;
    Filling cur = svt;
    std::map<std::pair<int, int>, int> elegant_cells;
    while (true) {
        MulticellPos p = highest_rightmost_multicell(cur);
        if (!p.found) break;
        Filling next = dilate(cur);
        // locate the grown cell shape(S_i)/shape(S_{i-1})
        std::pair<int, int> grown{0, 0};
        for (int r = 1; r <= next.rows(); ++r) {
            int before = r <= cur.rows() ? cur.row_length(r) : 0;
            if (next.row_length(r) > before) {
                grown = {r, next.row_end(r)};
                break;
            }
        }
        check_invariant(grown.first != 0, "dilation did not grow the shape");
        elegant_cells[grown] = grown.first - p.row;
        trace.steps.push_back({next, p.row, cur.cell(p.row, p.col).back(), grown});
        cur = std::move(next);
    }
    trace.terminal = cur;
    // assemble the elegant filling on shape(terminal)/shape(initial)
    SkewShape ef_shape(cur.skew_shape().outer(), svt.skew_shape().outer());
    std::vector<std::vector<Cell>> rows;
    for (int r = 1; r <= ef_shape.rows(); ++r) {
        std::vector<Cell> row;
        for (int c = ef_shape.row_begin(r); c <= ef_shape.row_end(r); ++c) {
            auto it = elegant_cells.find({r, c});
            check_invariant(it != elegant_cells.end(), "missing elegant cell");
            row.push_back(Cell{it->second});
        }
        rows.push_back(std::move(row));
    }
    trace.elegant = Filling(ef_shape, std::move(rows));
    check_invariant(validate(trace.elegant, FillingClass::Elegant),
                    "phi produced a non-elegant filling");
    return trace;
}

std::pair<Filling, Filling> phi(const Filling& svt) {
    DilationTrace t = phi_trace(svt);
    return {t.elegant, t.terminal};
}

std::vector<Filling> phi_t_fiber(const Filling& tableau, const Partition& eta) {
    require(validate(tableau, FillingClass::Ssyt), "phi_t_fiber needs an SSYT");
    require(tableau.is_skew_shaped() && tableau.skew_shape().is_straight(),
            "phi_t_fiber needs a straight shape");
    require(tableau.skew_shape().outer().contains(eta), "eta must fit inside shape(T)");
    Word target = row_word(tableau);
    // Knuth-equivalent words share their weight, so the fiber search runs
    // over SVT of shape eta and weight wt(T) exactly
    Composition wt = weight(tableau, FillingClass::Ssyt).values;
    std::vector<Filling> out;
    for (auto& s : enumerate_fillings(SkewShape(eta), FillingClass::Svt,
                                      EnumConstraint::weight(wt)))
        if (knuth_equivalent(sv_row_word(s), target)) out.push_back(std::move(s));
    return out;
}

namespace {

// word of the cells of S weakly right of column c, followed by w(T_lambda)
Word tail_column_word(const Filling& s, int from_col, const Partition& lam) {
    Word w;
    int maxcol = 0;
    for (int r = 1; r <= s.rows(); ++r) maxcol = std::max(maxcol, s.row_end(r));
    for (int c = from_col; c <= maxcol; ++c)
        for (int r = s.rows(); r >= 1; --r)
            if (s.has_cell(r, c))
                for (int v : s.cell(r, c)) w.push_back(v);
    Word tl = column_word(super_standard(lam));
    w.insert(w.end(), tl.begin(), tl.end());
    return w;
}

} // namespace

TauOutcome tau(const AugmentedFilling& a) {
    require(a.kind() == AugKind::Svt || a.kind() == AugKind::Ssyt,
            "tau acts on augmented set-valued tableaux");
    const Filling& s = a.top();
    const Partition& lam = a.lambda();
    if (is_yamanouchi(column_word(s), lam)) return {a, true};
    int width = s.rows() ? s.row_end(1) : 0;
    int col = 0;
    for (int c = width; c >= 1; --c)
        if (!is_yamanouchi(tail_column_word(s, c, lam))) { col = c; break; }
    check_invariant(col >= 1, "tau: no failing column despite non-Yamanouchi word");
    Word w = tail_column_word(s, col, lam);
    // rightmost position whose letter y >= 2 has more y's than (y-1)'s in the
    // suffix starting there
    int maxletter = 0;
    for (int v : w) maxletter = std::max(maxletter, v);
    std::vector<int> cnt(maxletter + 2, 0);
    int found_pos = -1, y = 0;
    // lambda's letters are already inside the concatenated word, so the
    // suffix counts need no extra shift
    for (int pos = static_cast<int>(w.size()) - 1; pos >= 0; --pos) {
        int v = w[pos];
        ++cnt[v];
        if (found_pos < 0 && v >= 2 && cnt[v] > cnt[v - 1]) {
            found_pos = pos;
            y = v;
        }
    }
    check_invariant(found_pos >= 0, "tau: no offending letter found");
    // map the position back to the cell of S containing this y; positions in
    // w(T_lambda) cannot offend, so it lies within the S segment
    int row = 0;
    {
        int pos = 0;
        int maxcol = 0;
        for (int r = 1; r <= s.rows(); ++r) maxcol = std::max(maxcol, s.row_end(r));
        for (int c = col; c <= maxcol && row == 0; ++c)
            for (int r = s.rows(); r >= 1 && row == 0; --r)
                if (s.has_cell(r, c))
                    for (int v : s.cell(r, c)) {
                        if (pos == found_pos) {
                            check_invariant(v == y, "tau: letter/position mismatch");
                            row = r;
                            break;
                        }
                        ++pos;
                    }
        check_invariant(row >= 1, "tau: offending letter not inside S");
    }
    // leftmost cell of row `row` containing y
    int cmin = 0;
    for (int c = s.row_begin(row); c <= s.row_end(row); ++c) {
        const Cell& cell = s.cell(row, c);
        if (std::binary_search(cell.begin(), cell.end(), y)) { cmin = c; break; }
    }
    check_invariant(cmin >= 1, "tau: cell_min not found");
    auto rows = s.row_data();
    Cell& cell = rows[row - 1][cmin - s.row_begin(row)];
    bool inserted;
    auto it = std::lower_bound(cell.begin(), cell.end(), y - 1);
    if (it != cell.end() && *it == y - 1) {
        cell.erase(it);
        inserted = false;
    } else {
        cell.insert(it, y - 1);
        inserted = true;
    }
    Filling result(s.skew_shape(), std::move(rows));
    check_invariant(validate(result, FillingClass::Svt), "tau broke the tableau");
    TauOutcome out{AugmentedFilling(std::move(result), lam, AugKind::Svt), false,
                   col, y, row, cmin, inserted};
    return out;
}

} // namespace kschub
