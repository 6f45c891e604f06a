#include "strata/boundary.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

std::vector<size_t> canonical_column_order(const Fixture& f) {
    std::vector<size_t> order(f.model.dim());
    std::iota(order.begin(), order.end(), size_t{0});
    auto kind_rank = [](CycleKind k) {
        switch (k) {
            case CycleKind::Delta: return 0;
            case CycleKind::Alpha: return 1;
            case CycleKind::Other: return 2;
        }
        return 2;
    };
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const Cycle& ca = f.model.cycles[a];
        const Cycle& cb = f.model.cycles[b];
        if (ca.level != cb.level) return ca.level > cb.level;
        return kind_rank(ca.kind) < kind_rank(cb.kind);
    });
    return order;
}

Rref rref_equations(const Fixture& f, const Mat& A) {
    return rref(A, canonical_column_order(f));
}

RowClassification classify_row(const Fixture& f, const Vec& row) {
    if (row.size() != f.model.dim())
        throw DomainError(DomainError::Code::DimensionMismatch, "classify_row: bad row size");
    bool any = false;
    long top = 0;
    for (size_t l = 0; l < row.size(); ++l) {
        if (row[l].is_zero()) continue;
        long lv = f.model.cycles[l].level;
        if (!any || lv > top) top = lv;
        any = true;
    }
    if (!any)
        throw DomainError(DomainError::Code::BrokenInvariant, "zero row has no top level");

    RowClassification out;
    out.top_level = top;
    for (const std::string& e : f.graph.horizontal_edges_at(top))
        if (!f.model.pairing_with(row, e).is_zero()) out.crossed.push_back(e);
    out.horizontal_crossing = !out.crossed.empty();
    return out;
}

BoundaryEquationSet boundary_equations(const Fixture& f, const Mat& A) {
    BoundaryEquationSet out;
    std::map<long, Mat, std::greater<long>> blocks;
    for (long i : f.graph.levels()) blocks.emplace(i, Mat(0, f.model.level(i).dim()));

    Rref reduced = rref_equations(f, A);
    for (size_t k = 0; k < reduced.mat.rows(); ++k) {
        Vec row = reduced.mat.row(k);
        RowClassification cls = classify_row(f, row);
        if (cls.horizontal_crossing) {
            out.log.push_back({"horizontal-crossing", k, cls.top_level, cls.crossed, row});
            continue;
        }
        Vec truncated(row.size());
        for (size_t l = 0; l < row.size(); ++l)
            if (f.model.cycles[l].level == cls.top_level) truncated[l] = row[l];
        Vec image = specialize(f.model, f.graph, truncated, cls.top_level);
        if (is_zero(image)) {
            out.log.push_back({"reduced-to-zero", k, cls.top_level, {}, row});
            continue;
        }
        blocks.at(cls.top_level).append_row(image);
    }

    for (auto& [level, mat] : blocks)
        out.blocks.push_back({level, level < 0, rref(mat).mat});
    return out;
}

std::vector<BoundaryBlock> coordfree_boundary(const Fixture& f, const Mat& A) {
    if (A.cols() != f.model.dim())
        throw DomainError(DomainError::Code::DimensionMismatch,
                          "coordfree_boundary: equation width mismatch");
    Filtrations filt = build_filtrations(f.model, f.graph);
    std::vector<BoundaryBlock> out;
    for (long i : f.graph.levels()) {
        Mat slice = row_space_intersection(A, filt.W.at(i));
        Mat images(0, f.model.level(i).dim());
        for (size_t k = 0; k < slice.rows(); ++k) {
            Vec image = specialize(f.model, f.graph, slice.row(k), i);
            if (!is_zero(image)) images.append_row(image);
        }
        out.push_back({i, i < 0, rref(images).mat});
    }
    return out;
}

} // namespace strata
