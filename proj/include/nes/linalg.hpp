#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nes {

using Vector = std::vector<double>;

// Dense row-major matrix. The games handled here are desk scale
// (a handful of players), so no sparsity or blocking.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);

Matrix transpose(const Matrix& a);

// Largest absolute entry.
double max_abs(const Matrix& a);

double norm_inf(const Vector& x);
double norm2(const Vector& x);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

// Gaussian elimination with partial pivoting. Throws SingularMatrixError
// naming the elimination stage when a pivot falls below
// 1e-12 * max_abs(a).
Vector solve_linear(Matrix a, Vector b);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// returned in ascending order. Converged to 1e-12 relative.
Vector jacobi_eigenvalues(Matrix a);

// Eigenvalues of a general real matrix via the characteristic polynomial
// (Faddeev-LeVerrier coefficients, Durand-Kerner root iteration).
// Intended for desk-scale N; accuracy degrades beyond N ~ 10.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

// Matrix exponential by scaling-and-squaring on a 13-term Taylor series;
// the argument is halved until its max-norm is below 0.5.
Matrix matrix_exp(const Matrix& a);

}  // namespace nes
