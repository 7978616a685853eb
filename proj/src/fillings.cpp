#include "kschub/fillings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kschub {

std::string to_string(FillingClass cls) {
    switch (cls) {
        case FillingClass::Ssyt: return "ssyt";
        case FillingClass::Tabloid: return "tabloid";
        case FillingClass::Svt: return "svt";
        case FillingClass::Rpp: return "rpp";
        case FillingClass::Elegant: return "elegant";
    }
    return "?";
}

namespace {

void check_cells(const std::vector<std::vector<Cell>>& rows) {
    for (const auto& row : rows)
        for (const auto& cell : row) {
            require(!cell.empty(), "filling cells must be non-empty");
            for (size_t i = 0; i < cell.size(); ++i) {
                require(cell[i] >= 1, "filling entries must be positive");
                if (i + 1 < cell.size())
                    require(cell[i] < cell[i + 1], "cell entries must be strictly increasing");
            }
        }
}

} // namespace

Filling::Filling(const SkewShape& shape, std::vector<std::vector<Cell>> rows)
    : rows_(std::move(rows)) {
    require(static_cast<int>(rows_.size()) == shape.rows(),
            "row count does not match shape");
    for (int r = 1; r <= shape.rows(); ++r) {
        require(static_cast<int>(rows_[r - 1].size()) == shape.row_end(r) - shape.row_begin(r) + 1,
                "row length does not match shape");
        offsets_.push_back(shape.inner().part(r));
    }
    check_cells(rows_);
}

Filling Filling::from_rows(std::vector<std::vector<Cell>> rows) {
    Filling f;
    f.rows_ = std::move(rows);
    f.offsets_.assign(f.rows_.size(), 0);
    check_cells(f.rows_);
    return f;
}

Filling Filling::from_values(const SkewShape& shape,
                             const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Cell>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Cell> r;
        for (int v : row) r.push_back(Cell{v});
        cells.push_back(std::move(r));
    }
    return Filling(shape, std::move(cells));
}

int Filling::value(int row, int col) const {
    const Cell& c = cell(row, col);
    require(c.size() == 1, "cell is not a singleton");
    return c[0];
}

bool Filling::all_singleton() const {
    for (const auto& row : rows_)
        for (const auto& c : row)
            if (c.size() != 1) return false;
    return true;
}

int Filling::cell_count() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

int Filling::entry_count() const {
    int n = 0;
    for (const auto& row : rows_)
        for (const auto& c : row) n += static_cast<int>(c.size());
    return n;
}

int Filling::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (const auto& c : row)
            if (!c.empty()) m = std::max(m, c.back());
    return m;
}

bool Filling::is_skew_shaped() const {
    std::vector<int> outer = outer_lengths(), inner = inner_lengths();
    for (size_t i = 0; i + 1 < outer.size(); ++i) {
        if (outer[i] < outer[i + 1]) return false;
        if (inner[i] < inner[i + 1]) return false;
    }
    for (size_t i = 0; i < outer.size(); ++i)
        if (inner[i] > outer[i]) return false;
    if (!outer.empty() && outer.back() == 0 && rows_.back().empty()) {
        // trailing empty rows are tolerated only at offset 0
        // (canonical skew shapes drop them)
    }
    return true;
}

SkewShape Filling::skew_shape() const {
    require(is_skew_shaped(), "filling is not skew-shaped");
    std::vector<int> outer = outer_lengths(), inner = inner_lengths();
    while (!outer.empty() && outer.back() == 0) {
        outer.pop_back();
        inner.pop_back();
    }
    return SkewShape(Partition(outer), Partition(inner));
}

std::vector<int> Filling::outer_lengths() const {
    std::vector<int> out;
    for (int r = 1; r <= rows(); ++r) out.push_back(row_end(r));
    return out;
}

std::vector<int> Filling::inner_lengths() const { return offsets_; }

std::string Filling::to_string() const {
    std::ostringstream os;
    for (int r = rows(); r >= 1; --r) {
        for (int i = 0; i < row_offset(r); ++i) os << " . ";
        for (const Cell& c : rows_[r - 1]) {
            os << ' ';
            for (int v : c) os << v;
            os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Column-adjacency helper: topmost cell strictly below (row,col), if any.
const Cell* cell_below(const Filling& f, int row, int col) {
    if (row >= 2 && f.has_cell(row - 1, col)) return &f.cell(row - 1, col);
    return nullptr;
}

bool rows_weakly_increase(const Filling& f) {
    for (int r = 1; r <= f.rows(); ++r)
        for (int c = f.row_begin(r); c < f.row_end(r); ++c)
            if (f.cell(r, c).back() > f.cell(r, c + 1).front()) return false;
    return true;
}

} // namespace

bool validate(const Filling& f, FillingClass cls) {
    if (cls == FillingClass::Tabloid) {
        for (int r = 1; r <= f.rows(); ++r)
            if (f.row_offset(r) != 0) return false;
        if (!f.all_singleton()) return false;
        return rows_weakly_increase(f);
    }
    if (!f.is_skew_shaped()) return false;
    switch (cls) {
        case FillingClass::Ssyt:
        case FillingClass::Svt: {
            if (cls == FillingClass::Ssyt && !f.all_singleton()) return false;
            // every one-per-cell choice is an SSYT iff max(left) <= min(right)
            // and max(below) < min(above)
            if (!rows_weakly_increase(f)) return false;
            for (int r = 2; r <= f.rows(); ++r)
                for (int c = f.row_begin(r); c <= f.row_end(r); ++c)
                    if (const Cell* b = cell_below(f, r, c))
                        if (b->back() >= f.cell(r, c).front()) return false;
            return true;
        }
        case FillingClass::Rpp: {
            if (!f.all_singleton()) return false;
            if (!rows_weakly_increase(f)) return false;
            for (int r = 2; r <= f.rows(); ++r)
                for (int c = f.row_begin(r); c <= f.row_end(r); ++c)
                    if (const Cell* b = cell_below(f, r, c))
                        if (b->back() > f.cell(r, c).front()) return false;
            return true;
        }
        case FillingClass::Elegant: {
            if (!f.all_singleton()) return false;
            for (int r = 1; r <= f.rows(); ++r)
                for (int c = f.row_begin(r); c <= f.row_end(r); ++c) {
                    if (f.value(r, c) > r - 1) return false;
                    if (c < f.row_end(r) && f.value(r, c) >= f.value(r, c + 1)) return false;
                    if (const Cell* b = cell_below(f, r, c))
                        if (b->back() >= f.cell(r, c).front()) return false;
                }
            return true;
        }
        default: return false;
    }
}

WeightVector weight(const Filling& f, FillingClass cls) {
    std::vector<int> w;
    auto bump = [&w](int v, int by) {
        if (static_cast<int>(w.size()) < v) w.resize(v, 0);
        w[v - 1] += by;
    };
    if (cls == FillingClass::Rpp) {
        // column-count rule: per letter, the number of columns containing it
        for (int r = 1; r <= f.rows(); ++r)
            for (int c = f.row_begin(r); c <= f.row_end(r); ++c) {
                int v = f.value(r, c);
                const Cell* b = cell_below(f, r, c);
                if (!b || b->back() != v) bump(v, 1); // bottom of its vertical run
            }
        return {Composition(std::move(w)), WeightRule::ColumnCount};
    }
    for (const auto& row : f.row_data())
        for (const Cell& c : row)
            for (int v : c) bump(v, 1);
    return {Composition(std::move(w)), WeightRule::LetterCount};
}

Word row_word(const Filling& f) {
    Word w;
    for (int r = f.rows(); r >= 1; --r)
        for (int c = f.row_begin(r); c <= f.row_end(r); ++c) w.push_back(f.value(r, c));
    return w;
}

Word column_word(const Filling& f) {
    Word w;
    int maxcol = 0;
    for (int r = 1; r <= f.rows(); ++r) maxcol = std::max(maxcol, f.row_end(r));
    for (int c = 1; c <= maxcol; ++c)
        for (int r = f.rows(); r >= 1; --r)
            if (f.has_cell(r, c))
                for (int v : f.cell(r, c)) w.push_back(v);
    return w;
}

Word sv_row_word(const Filling& f) {
    Word w;
    for (int r = f.rows(); r >= 1; --r) {
        // non-minimal entries right to left, largest first within a cell
        for (int c = f.row_end(r); c >= f.row_begin(r); --c) {
            const Cell& cell = f.cell(r, c);
            for (size_t i = cell.size(); i > 1; --i) w.push_back(cell[i - 1]);
        }
        // then minimal entries left to right
        for (int c = f.row_begin(r); c <= f.row_end(r); ++c)
            w.push_back(f.cell(r, c).front());
    }
    return w;
}

bool is_yamanouchi(const Word& w, const Partition& lam) {
    int maxletter = lam.length() + 1;
    for (int v : w) maxletter = std::max(maxletter, v);
    std::vector<long long> cnt(maxletter + 2, 0);
    // empty suffix: lambda itself is weakly decreasing, nothing to check
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        ++cnt[x];
        // prepending x can only break the inequality at i = x-1
        if (x >= 2 && cnt[x] + lam.part(x) > cnt[x - 1] + lam.part(x - 1)) return false;
    }
    return true;
}

Filling insertion_tableau(const Word& w) {
    std::vector<std::vector<int>> rows; // rows[0] is the bottom row
    for (int x : w) {
        int cur = x;
        size_t r = 0;
        for (;; ++r) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
            if (it == rows[r].end()) {
                rows[r].push_back(cur);
                break;
            }
            std::swap(cur, *it);
        }
    }
    std::vector<std::vector<Cell>> cells;
    for (const auto& row : rows) {
        std::vector<Cell> rc;
        for (int v : row) rc.push_back(Cell{v});
        cells.push_back(std::move(rc));
    }
    Filling out = Filling::from_rows(std::move(cells));
    check_invariant(out.rows() == 0 || validate(out, FillingClass::Ssyt),
                    "insertion tableau is not an SSYT");
    return out;
}

bool knuth_equivalent(const Word& u, const Word& w) {
    return insertion_tableau(u) == insertion_tableau(w);
}

Filling super_standard(const Partition& lam) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= lam.length(); ++i)
        rows.push_back(std::vector<int>(lam.part(i), i));
    return Filling::from_values(SkewShape(lam), rows);
}

namespace {

// Shared backtracking enumerator.  Cells are assigned in row-major order
// (bottom row first), so the left and below neighbours are always decided.
struct Enumerator {
    const SkewShape& shape;
    FillingClass cls;
    const EnumConstraint& constraint;
    std::vector<std::pair<int, int>> cells;
    std::vector<int> target;      // exact weight, trimmed; empty if none
    int max_entry = 0;
    std::vector<int> used;        // letter counts (or RPP column counts)
    int entries_placed = 0;
    std::vector<std::vector<Cell>> work_rows;
    std::vector<Filling> out;

    Enumerator(const SkewShape& s, FillingClass k, const EnumConstraint& c)
        : shape(s), cls(k), constraint(c) {
        cells = shape.cells_row_major();
        if (constraint.weight_equals) {
            const Composition& a = *constraint.weight_equals;
            target.assign(a.entries().begin(),
                          a.entries().begin() + a.trimmed_length());
            max_entry = static_cast<int>(target.size());
        } else if (constraint.max_entry) {
            max_entry = *constraint.max_entry;
            require(max_entry >= 0, "max-entry bound must be non-negative");
        } else {
            require(cls == FillingClass::Elegant,
                    "enumeration needs a weight or max-entry constraint");
            max_entry = shape.rows(); // row bound caps entries at r-1 anyway
        }
        used.assign(std::max(max_entry, 1), 0);
        for (int r = 1; r <= shape.rows(); ++r)
            work_rows.push_back(
                std::vector<Cell>(shape.row_end(r) - shape.row_begin(r) + 1));
    }

    const Cell& at(int r, int c) const { return work_rows[r - 1][c - shape.row_begin(r)]; }
    Cell& at(int r, int c) { return work_rows[r - 1][c - shape.row_begin(r)]; }

    bool letter_rule() const { return cls != FillingClass::Rpp; }

    bool weight_ok_final() const {
        if (target.empty() && !constraint.weight_equals) return true;
        for (size_t i = 0; i < used.size(); ++i) {
            long long want = i < target.size() ? target[i] : 0;
            if (used[i] != want) return false;
        }
        return true;
    }

    void emit() {
        out.push_back(Filling(shape, work_rows));
    }

    void run() {
        if (max_entry == 0 && !cells.empty()) return;
        recurse(0);
    }

    void recurse(size_t i) {
        if (i == cells.size()) {
            if (weight_ok_final()) emit();
            return;
        }
        auto [r, c] = cells[i];
        const Cell* left = (c > shape.row_begin(r)) ? &at(r, c - 1) : nullptr;
        const Cell* below = shape.has_cell(r - 1, c) ? &at(r - 1, c) : nullptr;
        switch (cls) {
            case FillingClass::Svt: place_sets(i, r, c, left, below); break;
            default: place_values(i, r, c, left, below); break;
        }
    }

    void place_values(size_t i, int r, int c, const Cell* left, const Cell* below) {
        int lo = 1, hi = max_entry;
        if (cls == FillingClass::Elegant) hi = std::min(hi, r - 1);
        switch (cls) {
            case FillingClass::Ssyt:
                if (left) lo = std::max(lo, left->back());
                if (below) lo = std::max(lo, below->back() + 1);
                break;
            case FillingClass::Tabloid:
                if (left) lo = std::max(lo, left->back());
                break;
            case FillingClass::Rpp:
                if (left) lo = std::max(lo, left->back());
                if (below) lo = std::max(lo, below->back());
                break;
            case FillingClass::Elegant:
                if (left) lo = std::max(lo, left->back() + 1);
                if (below) lo = std::max(lo, below->back() + 1);
                break;
            default: break;
        }
        for (int v = lo; v <= hi; ++v) {
            bool counts = true;
            if (cls == FillingClass::Rpp)
                counts = !(below && below->back() == v); // inside a vertical run
            if (!target.empty() || constraint.weight_equals) {
                if (counts && used[v - 1] + 1 > (v <= static_cast<int>(target.size())
                                                     ? target[v - 1]
                                                     : 0))
                    continue;
            }
            at(r, c) = Cell{v};
            if (counts) ++used[v - 1];
            recurse(i + 1);
            if (counts) --used[v - 1];
            at(r, c).clear();
        }
    }

    void place_sets(size_t i, int r, int c, const Cell* left, const Cell* below) {
        int lo = 1;
        if (left) lo = std::max(lo, left->back());
        if (below) lo = std::max(lo, below->back() + 1);
        if (lo > max_entry) return;
        int span = max_entry - lo + 1;
        int remaining_cells = static_cast<int>(cells.size() - i) - 1;
        int set_cap = span;
        if (constraint.max_entries_total)
            set_cap = std::min(set_cap,
                               *constraint.max_entries_total - entries_placed - remaining_cells);
        if (set_cap < 1) return;
        // subsets of {lo..max_entry} in content-lexicographic order
        std::vector<Cell> subsets;
        for (unsigned mask = 1; mask < (1u << span); ++mask) {
            Cell s;
            for (int b = 0; b < span; ++b)
                if (mask & (1u << b)) s.push_back(lo + b);
            if (static_cast<int>(s.size()) <= set_cap) subsets.push_back(std::move(s));
        }
        std::sort(subsets.begin(), subsets.end());
        for (const Cell& s : subsets) {
            bool ok = true;
            if (constraint.weight_equals) {
                for (int v : s)
                    if (used[v - 1] + 1 > (v <= static_cast<int>(target.size()) ? target[v - 1] : 0)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    // each remaining cell still needs at least one entry
                    long long budget = 0;
                    for (size_t t = 0; t < target.size(); ++t) budget += target[t] - used[t];
                    if (budget - static_cast<long long>(s.size()) < remaining_cells) ok = false;
                }
            }
            if (!ok) continue;
            at(r, c) = s;
            for (int v : s) ++used[v - 1];
            entries_placed += static_cast<int>(s.size());
            recurse(i + 1);
            entries_placed -= static_cast<int>(s.size());
            for (int v : s) --used[v - 1];
            at(r, c).clear();
        }
    }
};

} // namespace

std::vector<Filling> enumerate_fillings(const SkewShape& shape, FillingClass cls,
                                        const EnumConstraint& constraint) {
    require(cls != FillingClass::Tabloid || shape.inner().empty(),
            "tabloid enumeration uses straight row shapes");
    Enumerator e(shape, cls, constraint);
    e.run();
    return std::move(e.out);
}

std::vector<Filling> enumerate_tabloids(const std::vector<int>& row_lengths,
                                        int max_entry) {
    for (int n : row_lengths) require(n >= 0, "row lengths must be non-negative");
    std::vector<Filling> out;
    std::vector<std::vector<Cell>> rows(row_lengths.size());
    auto recurse = [&](auto&& self, size_t r) -> void {
        if (r == row_lengths.size()) {
            out.push_back(Filling::from_rows(rows));
            return;
        }
        int n = row_lengths[r];
        std::vector<int> row(n, 0);
        auto fill = [&](auto&& fill_self, int pos, int lo) -> void {
            if (pos == n) {
                rows[r].clear();
                for (int v : row) rows[r].push_back(Cell{v});
                self(self, r + 1);
                return;
            }
            for (int v = lo; v <= max_entry; ++v) {
                row[pos] = v;
                fill_self(fill_self, pos + 1, v);
            }
        };
        if (n == 0) {
            rows[r].clear();
            self(self, r + 1);
        } else {
            fill(fill, 0, 1);
        }
    };
    if (max_entry >= 0) recurse(recurse, 0);
    return out;
}

long long kostka(const Partition& lam, const Composition& mu) {
    if (lam.size() != mu.size()) return 0;
    static std::map<std::pair<Partition, Composition>, long long> cache;
    auto key = std::make_pair(lam, mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    long long n = static_cast<long long>(
        enumerate_fillings(SkewShape(lam), FillingClass::Ssyt,
                           EnumConstraint::weight(mu))
            .size());
    cache.emplace(std::move(key), n);
    return n;
}

long long k_coeff(const SkewShape& shape, const Composition& mu) {
    if (mu.size() < shape.cell_count()) return 0;
    long long n = static_cast<long long>(
        enumerate_fillings(shape, FillingClass::Svt, EnumConstraint::weight(mu)).size());
    int excess = mu.size() - shape.cell_count();
    return (excess % 2 == 0) ? n : -n;
}

long long r_coeff(const SkewShape& shape, const Composition& alpha) {
    if (alpha.size() > shape.cell_count()) return 0;
    return static_cast<long long>(
        enumerate_fillings(shape, FillingClass::Rpp, EnumConstraint::weight(alpha)).size());
}

long long elegant_count(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return 0;
    return static_cast<long long>(
        enumerate_fillings(SkewShape(lam, mu), FillingClass::Elegant,
                           EnumConstraint::none())
            .size());
}

} // namespace kschub
