#include "patsep/checkerboard.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "patsep/numeric.hpp"
#include "patsep/patterns.hpp"
#include "patsep/separator.hpp"

namespace patsep {

std::string GridCell::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

CheckerboardLayout::CheckerboardLayout(int r, int s) : r_(r), s_(s) {
    if (r < 1 || s < 1)
        throw NonPositiveDimensions("checkerboard dimensions must be >= 1, got " +
                                    std::to_string(r) + " x " + std::to_string(s));
    for (int a = 1; a <= r; ++a)
        for (int b = 1; b <= s; ++b)
            if ((a + b) % 2 == 0) cells_.push_back(GridCell{a, b});

    // value = rank under lexicographic (b, -a)
    std::vector<int> order(cells_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const GridCell& cx = cells_[x];
        const GridCell& cy = cells_[y];
        return cx.b != cy.b ? cx.b < cy.b : cx.a > cy.a;
    });
    values_.resize(cells_.size());
    for (int rank = 0; rank < static_cast<int>(order.size()); ++rank)
        values_[order[rank]] = rank + 1;
}

int CheckerboardLayout::require_index(const GridCell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || !(*it == c))
        throw CellNotInLayout("cell " + c.str() + " not in " + std::to_string(r_) +
                              " x " + std::to_string(s_) + " checkerboard");
    return static_cast<int>(it - cells_.begin());
}

bool CheckerboardLayout::has_cell(const GridCell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    return it != cells_.end() && *it == c;
}

int CheckerboardLayout::position_of(const GridCell& c) const {
    return require_index(c) + 1;
}

int CheckerboardLayout::value_of(const GridCell& c) const {
    return values_[require_index(c)];
}

Permutation CheckerboardLayout::permutation() const {
    return Permutation::from_one_line(values_);
}

std::pair<CheckerboardLayout, Permutation> checkerboard(int r, int s) {
    CheckerboardLayout layout(r, s);
    Permutation perm = layout.permutation();
    return {std::move(layout), std::move(perm)};
}

Permutation restrict_layout(const CheckerboardLayout& layout,
                            const std::vector<GridCell>& omitted) {
    std::vector<char> drop(layout.length(), 0);
    for (const GridCell& c : omitted) drop[layout.position_of(c) - 1] = 1;

    const Permutation full = layout.permutation();
    std::vector<int> kept;
    kept.reserve(layout.length());
    for (int p = 0; p < layout.length(); ++p)
        if (!drop[p]) kept.push_back(full.one_line()[p]);
    if (kept.empty())
        throw EmptyInput("restriction omits every cell of the layout");
    return standardize(kept);
}

const char* subcase_name(Subcase s) {
    switch (s) {
        case Subcase::ia: return "i.a";
        case Subcase::ib: return "i.b";
        case Subcase::ic: return "i.c";
        case Subcase::iia: return "ii.a";
        case Subcase::iib: return "ii.b";
        case Subcase::iic: return "ii.c";
    }
    return "?";
}

int ConstructionPlan::target_length() const {
    return k + static_cast<int>(isqrt_u64(2ull * k - 3)) - 1;
}

ConstructionPlan plan_for(int k) {
    if (k < 2) throw KTooSmall("construction requires k >= 2, got " + std::to_string(k));

    const int s = static_cast<int>(isqrt_u64(2ull * k - 3));
    const int m = (1 + s) / 2;
    // the unique m with 2m^2 - 2m + 2 <= k <= 2m^2 + 2m + 1
    const int case1_lo = 2 * m * m - 2 * m + 2;
    const int case2_lo = 2 * m * m + 2;
    const int case2_hi = 2 * m * m + 2 * m + 1;
    if (k < case1_lo || k > case2_hi)
        throw std::logic_error("scale parameter misclassified k = " + std::to_string(k));

    ConstructionPlan plan;
    plan.k = k;
    plan.m = m;

    if (k <= case2_lo - 1) {
        // Case 1: sigma in S_{k + (2m-2)}
        if (k == case1_lo) {
            plan.subcase = Subcase::ia;
            plan.base_r = plan.base_s = 2 * m;
        } else if (k <= 2 * m * m - m + 2) {
            // k = 2m^2 - 2m + 2 + i, 1 <= i <= m: drop the last column's
            // cells above row 2i from sigma^{2m+1, 2m}
            plan.subcase = Subcase::ib;
            plan.base_r = 2 * m + 1;
            plan.base_s = 2 * m;
            const int i = k - case1_lo;
            for (int b = 2 * i + 1; b <= 2 * m - 1; b += 2)
                plan.omitted.push_back(GridCell{2 * m + 1, b});
        } else {
            // k = 2m^2 - m + 2 + j, 1 <= j < m: drop the leftmost m+1-j
            // cells of the top row of sigma^{2m+1, 2m+1}
            plan.subcase = Subcase::ic;
            plan.base_r = plan.base_s = 2 * m + 1;
            const int j = k - (2 * m * m - m + 2);
            for (int xi = 1; xi <= m + 1 - j; ++xi)
                plan.omitted.push_back(GridCell{2 * xi - 1, 2 * m + 1});
        }
    } else {
        // Case 2: sigma in S_{k + (2m-1)}
        if (k == case2_lo) {
            plan.subcase = Subcase::iia;
            plan.base_r = plan.base_s = 2 * m + 1;
        } else {
            // Start from the sigma^{2m+1,2m+1} sub-grid of sigma^{2m+2,2m+2}
            // and add back cells of the last column bottom-to-top, then of
            // the top row right-to-left, until the length target is met.
            const int extras = k - case2_lo;  // in [1, 2m-1]
            plan.subcase = extras <= m ? Subcase::iib : Subcase::iic;
            plan.base_r = plan.base_s = 2 * m + 2;

            std::vector<GridCell> addition_order;
            for (int b = 2; b <= 2 * m + 2; b += 2)
                addition_order.push_back(GridCell{2 * m + 2, b});  // last column
            for (int a = 2 * m; a >= 2; a -= 2)
                addition_order.push_back(GridCell{a, 2 * m + 2});  // top row
            for (int t = extras; t < static_cast<int>(addition_order.size()); ++t)
                plan.omitted.push_back(addition_order[t]);
            std::sort(plan.omitted.begin(), plan.omitted.end());
        }
    }

    const int base_len =
        (plan.base_r * plan.base_s + 1) / 2;  // ceil(rs/2), r*s even except i.c/ii.a
    if (base_len - static_cast<int>(plan.omitted.size()) != plan.target_length())
        throw std::logic_error("construction plan misses the length target for k = " +
                               std::to_string(k));
    return plan;
}

Permutation construct_separator(int k, bool verify) {
    const ConstructionPlan plan = plan_for(k);
    CheckerboardLayout layout(plan.base_r, plan.base_s);
    Permutation result = restrict_layout(layout, plan.omitted);
    if (result.size() != plan.target_length())
        throw ConstructionInvalid("length " + std::to_string(result.size()) +
                                  " != target " + std::to_string(plan.target_length()) +
                                  " for k = " + std::to_string(k));
    if (verify && !is_k_separator(result, k).is_separator)
        throw ConstructionInvalid("constructed permutation fails the separator "
                                  "oracle for k = " + std::to_string(k));
    return result;
}

}  // namespace patsep
