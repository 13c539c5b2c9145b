#pragma once

// Exact dense linear algebra over Q. Everything here is small (a handful of
// rows), so plain rational Gauss-Jordan elimination is used throughout.

#include "symtaut/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace symtaut {

using Vector = std::vector<Rational>;

bool is_zero_vector(const Vector& v);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    /// All rows must share one length. `cols` disambiguates the empty case.
    static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    std::vector<Vector> row_vectors() const;
    RatMatrix transpose() const;
    Vector apply(const Vector& v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row-echelon form; zero rows are kept at the bottom.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RatMatrix& m);

/// Determinant of a square matrix by Gaussian elimination.
Rational determinant(const RatMatrix& m);

/// Basis of { v : M v = 0 }, one vector per free column.
std::vector<Vector> kernel_basis(const RatMatrix& m);

/// Unique x with M x = b. Throws SingularMatrix unless M is square of full rank.
Vector solve(const RatMatrix& m, const Vector& b);

/// Basis of { v : s^T B v = 0 for every row s of S }.
std::vector<Vector> orthogonal_complement(const RatMatrix& s, const RatMatrix& b);

/// A linear subspace of Q^n held by its canonical basis: the non-zero rows of
/// the reduced row-echelon form, each with leading coefficient 1. Equality of
/// subspaces is therefore equality of these matrices.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }

    const RatMatrix& basis() const noexcept { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Orthogonal complement with respect to the bilinear form B (rows index
    /// this space, columns index the target space).
    Subspace perp(const RatMatrix& form) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    RatMatrix basis_;
};

}  // namespace symtaut
