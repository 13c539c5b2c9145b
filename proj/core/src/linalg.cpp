#include "symtaut/linalg.hpp"

#include "symtaut/errors.hpp"

#include <string>
#include <utility>

namespace symtaut {

bool is_zero_vector(const Vector& v) {
    for (const auto& e : v) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged initializer for RatMatrix");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionMismatch("row " + std::to_string(i) + " has length " +
                                    std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Vector RatMatrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> RatMatrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back(row(i));
    }
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Vector RatMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("matrix-vector size mismatch");
    }
    Vector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product size mismatch");
    }
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a(pivot, j), a(lead_row, j));
            }
        }
        Rational inv = 1 / a(lead_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) {
            a(lead_row, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead_row || a(i, col) == 0) {
                continue;
            }
            Rational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                a(i, j) -= factor * a(lead_row, j);
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    if (pivot_cols != nullptr) {
        *pivot_cols = std::move(pivots);
    }
    return a;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("determinant needs a square matrix");
    }
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
            }
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) {
                continue;
            }
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) {
                a(i, j) -= f * a(c, j);
            }
        }
    }
    return det;
}

std::vector<Vector> kernel_basis(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -r(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector solve(const RatMatrix& m, const Vector& b) {
    if (m.rows() != m.cols()) {
        throw SingularMatrix("solve requires a square matrix");
    }
    if (b.size() != m.rows()) {
        throw DimensionMismatch("right-hand side has wrong length");
    }
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(aug, &pivots);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
        throw SingularMatrix("matrix is rank deficient");
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = r(i, n);
    }
    return x;
}

std::vector<Vector> orthogonal_complement(const RatMatrix& s, const RatMatrix& b) {
    if (s.cols() != b.rows()) {
        throw DimensionMismatch("subspace coordinates do not match the bilinear form");
    }
    if (s.rows() == 0) {
        std::vector<Vector> all;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Vector e(b.cols(), Rational(0));
            e[j] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return kernel_basis(s * b);
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    Subspace out(ambient_dim);
    if (generators.empty()) {
        return out;
    }
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(RatMatrix::from_rows(generators, ambient_dim), &pivots);
    out.basis_ = RatMatrix(pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            out.basis_(i, j) = r(i, j);
        }
    }
    return out;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    return span(ambient_dim, RatMatrix::identity(ambient_dim).row_vectors());
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) {
        throw DimensionMismatch("vector does not live in the subspace's ambient space");
    }
    auto gens = basis_vectors();
    gens.push_back(v);
    return rank(RatMatrix::from_rows(gens, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw DimensionMismatch("subspaces live in different ambient spaces");
    }
    return (*this + other).dim() == dim();
}

Subspace Subspace::perp(const RatMatrix& form) const {
    return span(form.cols(), orthogonal_complement(basis_, form));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) {
        throw DimensionMismatch("subspaces live in different ambient spaces");
    }
    auto gens = a.basis_vectors();
    auto more = b.basis_vectors();
    gens.insert(gens.end(), more.begin(), more.end());
    return Subspace::span(a.ambient_, gens);
}

}  // namespace symtaut
