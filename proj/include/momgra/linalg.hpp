#ifndef MOMGRA_LINALG_HPP
#define MOMGRA_LINALG_HPP

#include <optional>
#include <vector>

#include "momgra/poly.hpp"
#include "momgra/scalar.hpp"

namespace momgra {

// Dense matrix of scalars; all routines are exact over the given field.
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(rows, std::vector<Num>(cols, Num(0))) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    Num& at(int i, int j) { return a_[i][j]; }
    const Num& at(int i, int j) const { return a_[i][j]; }

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<int> rref(const Field& F);
    int rank(const Field& F) const;
    // Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<Num>> kernel(const Field& F) const;
    // One solution x of A x = b, if any.
    std::optional<std::vector<Num>> solve(const std::vector<Num>& b, const Field& F) const;

    std::vector<Num> apply(const std::vector<Num>& x, const Field& F) const;

private:
    int r_, c_;
    std::vector<std::vector<Num>> a_;
};

// Incremental row-space tracker: feed vectors, query rank and membership.
class SpanBasis {
public:
    explicit SpanBasis(int dim) : dim_(dim) {}
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    // Returns true when the vector enlarged the span.
    bool add(std::vector<Num> v, const Field& F);
    bool contains(std::vector<Num> v, const Field& F) const;

private:
    void reduce(std::vector<Num>& v, const Field& F) const;
    int dim_;
    std::vector<std::vector<Num>> rows_;  // echelonized
    std::vector<int> pivots_;
};

// Rank of a matrix of polynomials over the fraction field, by fraction-free
// Gaussian elimination (Bareiss); exact divisions only.
int poly_matrix_rank(std::vector<std::vector<Poly>> m, const Field& F);

}  // namespace momgra

#endif
