#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patsep/permutation.hpp"

namespace patsep {

// A cell of the r x s tilted checkerboard. Columns a run left to right,
// rows b bottom to top; only cells with a == b (mod 2) carry elements.
struct GridCell {
    int a = 0;  // column, in [1, r]
    int b = 0;  // row, in [1, s]

    bool operator==(const GridCell& rhs) const { return a == rhs.a && b == rhs.b; }
    bool operator<(const GridCell& rhs) const {
        return a != rhs.a ? a < rhs.a : b < rhs.b;
    }
    std::string str() const;
};

// The r x s checkerboard with its cell -> (position, value) embedding.
// Orientation convention: position is the rank of the cell under
// lexicographic (a, b); value is the rank under lexicographic (b, -a).
// Any dihedral image would serve equally (the separator property is
// symmetry-invariant); this choice satisfies the row/column order relation
// used by the lower-bound constructions and is pinned by the separator
// oracle in the test suite.
class CheckerboardLayout {
public:
    CheckerboardLayout(int r, int s);  // throws NonPositiveDimensions

    int rows() const { return s_; }
    int columns() const { return r_; }
    int length() const { return static_cast<int>(cells_.size()); }  // ceil(rs/2)

    // Cells in position order (lexicographic by (a, b)).
    const std::vector<GridCell>& cells() const { return cells_; }

    bool has_cell(const GridCell& c) const;
    int position_of(const GridCell& c) const;  // 1-based; throws CellNotInLayout
    int value_of(const GridCell& c) const;     // 1-based; throws CellNotInLayout

    // The induced permutation of length ceil(rs/2).
    Permutation permutation() const;

private:
    int require_index(const GridCell& c) const;

    int r_, s_;
    std::vector<GridCell> cells_;   // sorted by (a, b): index = position - 1
    std::vector<int> values_;       // values_[i] = value of cells_[i]
};

// sigma^{r,s} and its layout.
std::pair<CheckerboardLayout, Permutation> checkerboard(int r, int s);

// Standardization of the checkerboard permutation with the omitted cells'
// positions deleted.
Permutation restrict_layout(const CheckerboardLayout& layout,
                            const std::vector<GridCell>& omitted);

// The six construction subcases of the lower bound, split on
// k relative to m = floor((1 + sqrt(2k-3)) / 2).
enum class Subcase { ia, ib, ic, iia, iib, iic };

const char* subcase_name(Subcase s);

struct ConstructionPlan {
    int k = 0;
    int m = 0;
    Subcase subcase = Subcase::ia;
    int base_r = 0;
    int base_s = 0;
    std::vector<GridCell> omitted;

    // k + floor(sqrt(2k-3)) - 1
    int target_length() const;
};

// Chooses the subcase and omitted cells realizing a k-separator of length
// k + floor(sqrt(2k-3)) - 1. Throws KTooSmall for k < 2.
ConstructionPlan plan_for(int k);

// Executes plan_for(k). With verify = true the result is checked against
// the separator oracle and ConstructionInvalid is thrown on failure (an
// internal orientation/omission bug, never a user error).
Permutation construct_separator(int k, bool verify = false);

}  // namespace patsep
