#include "hopfforge/linalg.hpp"

#include <algorithm>

namespace hopfforge {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Fq{1};
    return m;
}

Matrix mat_mul(const FieldCtx& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw Error("matrix dimension mismatch");
    Matrix C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            Fq aik = A.at(i, k);
            if (aik == F.zero()) continue;
            for (size_t j = 0; j < B.cols; ++j) {
                Fq b = B.at(k, j);
                if (b == F.zero()) continue;
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, b));
            }
        }
    return C;
}

size_t mat_rank(const FieldCtx& F, Matrix A) {
    size_t rank = 0;
    for (size_t col = 0; col < A.cols && rank < A.rows; ++col) {
        size_t pivot = rank;
        while (pivot < A.rows && A.at(pivot, col) == F.zero()) ++pivot;
        if (pivot == A.rows) continue;
        std::swap_ranges(A.a.begin() + static_cast<long>(pivot * A.cols),
                         A.a.begin() + static_cast<long>((pivot + 1) * A.cols),
                         A.a.begin() + static_cast<long>(rank * A.cols));
        Fq inv = F.inv(A.at(rank, col));
        for (size_t r = rank + 1; r < A.rows; ++r) {
            Fq f = A.at(r, col);
            if (f == F.zero()) continue;
            Fq scale = F.mul(f, inv);
            for (size_t c = col; c < A.cols; ++c)
                A.at(r, c) = F.sub(A.at(r, c), F.mul(scale, A.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

SparseVec sparse_axpy(const FieldCtx& F, const SparseVec& x, Fq c, const SparseVec& y) {
    // x + c*y, both sorted.
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            Fq v = F.mul(c, y[j].second);
            if (v != F.zero()) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            Fq v = F.add(x[i].second, F.mul(c, y[j].second));
            if (v != F.zero()) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

bool ColumnEchelon::add_column(SparseVec col) {
    std::vector<Fq> combo;
    if (track_) {
        combo.assign(seen_ + 1, F_->zero());
        combo[seen_] = F_->one();
    }
    ++seen_;
    for (;;) {
        if (col.empty()) {
            if (track_) kernel_.push_back(std::move(combo));
            return false;
        }
        uint32_t lead = col.front().first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                                   [](const auto& p, uint32_t r) { return p.first < r; });
        if (it == pivots_.end() || it->first != lead) {
            // New pivot; normalize to a monic leading entry.
            Fq inv = F_->inv(col.front().second);
            for (auto& [r, v] : col) v = F_->mul(v, inv);
            if (track_) {
                for (auto& v : combo) v = F_->mul(v, inv);
                combos_.push_back(std::move(combo));
            }
            store_.push_back(std::move(col));
            pivots_.insert(it, {lead, store_.size() - 1});
            return true;
        }
        size_t si = it->second;
        Fq factor = F_->neg(col.front().second);
        col = sparse_axpy(*F_, col, factor, store_[si]);
        if (track_) {
            const auto& pc = combos_[si];
            if (combo.size() < pc.size()) combo.resize(pc.size(), F_->zero());
            for (size_t i = 0; i < pc.size(); ++i)
                combo[i] = F_->add(combo[i], F_->mul(factor, pc[i]));
        }
    }
}

}  // namespace hopfforge
