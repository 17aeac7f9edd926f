#include "momgra/linalg.hpp"

#include <algorithm>

namespace momgra {

std::vector<int> Matrix::rref(const Field& F) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int piv = -1;
        for (int i = row; i < r_; ++i)
            if (!F.is_zero(a_[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a_[row], a_[piv]);
        Num inv = F.inv(a_[row][col]);
        for (int j = col; j < c_; ++j) a_[row][j] = F.mul(a_[row][j], inv);
        for (int i = 0; i < r_; ++i) {
            if (i == row || F.is_zero(a_[i][col])) continue;
            Num f = a_[i][col];
            for (int j = col; j < c_; ++j)
                a_[i][j] = F.sub(a_[i][j], F.mul(f, a_[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int Matrix::rank(const Field& F) const {
    Matrix m = *this;
    return static_cast<int>(m.rref(F).size());
}

std::vector<std::vector<Num>> Matrix::kernel(const Field& F) const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref(F);
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Num>> basis;
    for (int j = 0; j < c_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Num> v(c_, Num(0));
        v[j] = Num(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(static_cast<int>(i), j));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Num>> Matrix::solve(const std::vector<Num>& b, const Field& F) const {
    require(static_cast<int>(b.size()) == r_, "solve: size mismatch");
    Matrix m(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m.at(i, j) = a_[i][j];
        m.at(i, c_) = b[i];
    }
    std::vector<int> pivots = m.rref(F);
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<Num> x(c_, Num(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m.at(static_cast<int>(i), c_);
    return x;
}

std::vector<Num> Matrix::apply(const std::vector<Num>& x, const Field& F) const {
    require(static_cast<int>(x.size()) == c_, "apply: size mismatch");
    std::vector<Num> y(r_, Num(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!F.is_zero(a_[i][j]) && !F.is_zero(x[j])) y[i] = F.add(y[i], F.mul(a_[i][j], x[j]));
    return y;
}

void SpanBasis::reduce(std::vector<Num>& v, const Field& F) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Num& c = v[pivots_[i]];
        if (F.is_zero(c)) continue;
        Num f = c;
        for (int j = 0; j < dim_; ++j)
            if (!F.is_zero(rows_[i][j])) v[j] = F.sub(v[j], F.mul(f, rows_[i][j]));
    }
}

bool SpanBasis::add(std::vector<Num> v, const Field& F) {
    require(static_cast<int>(v.size()) == dim_, "span: size mismatch");
    reduce(v, F);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (!F.is_zero(v[j])) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Num inv = F.inv(v[piv]);
    for (int j = 0; j < dim_; ++j) v[j] = F.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool SpanBasis::contains(std::vector<Num> v, const Field& F) const {
    require(static_cast<int>(v.size()) == dim_, "span: size mismatch");
    reduce(v, F);
    for (int j = 0; j < dim_; ++j)
        if (!F.is_zero(v[j])) return false;
    return true;
}

int poly_matrix_rank(std::vector<std::vector<Poly>> m, const Field& F) {
    if (m.empty() || m[0].empty()) return 0;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int rank = 0;
    Poly prev_pivot;  // zero means "none yet"
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Poly t = m[rank][col].mul(m[i][j], F).sub(m[i][col].mul(m[rank][j], F), F);
                if (!prev_pivot.is_zero()) t = t.divide_exact(prev_pivot, F);
                m[i][j] = t;
            }
            m[i][col] = Poly(m[i][col].nvars());
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace momgra
