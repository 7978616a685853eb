#ifndef KSCHUB_BIJECTIONS_HPP
#define KSCHUB_BIJECTIONS_HPP

#include <vector>

#include "kschub/inflated.hpp"

namespace kschub {

struct DilationStep {
    Filling result;          // tableau after the step
    int multicell_row;       // row of the multicell that lost its entry
    int ejected;             // the entry removed and re-inserted
    std::pair<int, int> new_cell; // cell created by the insertion
};

struct DilationTrace {
    Filling initial;
    std::vector<DilationStep> steps;
    Filling terminal;        // multicell-free
    Filling elegant;         // growth record on shape(terminal)/shape(initial)
};

// The map d: RPP of shape nu/lambda -> augmented tabloid T*T_lambda where
// row x of T lists the row positions of the topmost x of each vertical run.
AugmentedFilling partial_map(const Filling& rpp);

// Inverse construction: entries of tabloid row i placed right-to-left at the
// leftmost empty cell of the recorded row, flooding empty cells below.
Filling partial_inverse(const AugmentedFilling& a, const Partition& nu);

// One dilation step: remove the largest entry of the rightmost multicell in
// the highest multicell row and RSK-insert it into the rows above.
Filling dilate(const Filling& svt);

// Iterated dilation; returns (elegant filling, terminal tableau).
std::pair<Filling, Filling> phi(const Filling& svt);
DilationTrace phi_trace(const Filling& svt);

// All SVT of shape eta whose set-valued row word is Knuth equivalent to the
// row word of T; the count matches elegant_count(shape(T), eta).
std::vector<Filling> phi_t_fiber(const Filling& tableau, const Partition& eta);

struct TauOutcome {
    AugmentedFilling result;
    bool fixed_point;
    // located data when not fixed: column, letter, row, cell_min column
    int column = 0, letter = 0, row = 0, cell_min_col = 0;
    bool inserted = false; // true if y-1 was added, false if deleted
};

// Sign-reversing involution toggling y-1 in cell_min; fixed points are the
// column lambda-Yamanouchi set-valued tableaux.
TauOutcome tau(const AugmentedFilling& a);

} // namespace kschub

#endif
