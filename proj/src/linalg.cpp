#include "nes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nes/errors.hpp"

namespace nes {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw ValidationError("matrix-vector shape mismatch");
    Vector r(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
    return m;
}

double norm_inf(const Vector& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

double norm2(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ValidationError("vector size mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ValidationError("vector size mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(double s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vector solve_linear(Matrix a, Vector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw ValidationError("solve_linear: system must be square with matching rhs");
    const double pivot_floor = 1e-12 * max_abs(a);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
        if (std::fabs(a(piv, col)) <= pivot_floor)
            throw SingularMatrixError("solve_linear: pivot below threshold at elimination stage " +
                                      std::to_string(col));
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }

    Vector x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t j = ri + 1; j < n; ++j) s -= a(ri, j) * x[j];
        x[ri] = s / a(ri, ri);
    }
    return x;
}

Vector jacobi_eigenvalues(Matrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("jacobi_eigenvalues: matrix must be square");

    const double scale = std::max(max_abs(a), 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a(i, j)));
        if (off <= 1e-14 * scale) break;

        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) <= 1e-15 * scale) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }

    Vector ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("eigenvalues: matrix must be square");

    // Faddeev-LeVerrier: p(x) = x^n + c[0] x^{n-1} + ... + c[n-1].
    std::vector<double> c(n, 0.0);
    Matrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        c[k - 1] = -tr / static_cast<double>(k);
        if (k < n) {
            Matrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[k - 1];
            m = a * shifted;
        }
    }

    using C = std::complex<double>;
    auto poly = [&](C x) {
        C v(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) v = v * x + c[k];
        return v;
    };

    // Durand-Kerner from the standard non-real, non-unit starting points.
    std::vector<C> roots(n);
    const C seed(0.4, 0.9);
    roots[0] = seed;
    for (std::size_t i = 1; i < n; ++i) roots[i] = roots[i - 1] * seed;

    const double tol = 1e-13 * std::max(1.0, max_abs(a));
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            C denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const C delta = poly(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < tol) break;
    }
    return roots;
}

Matrix matrix_exp(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("matrix_exp: matrix must be square");

    int squarings = 0;
    double norm = max_abs(a);
    while (norm / std::pow(2.0, squarings) >= 0.5) ++squarings;

    const Matrix b = (1.0 / std::pow(2.0, squarings)) * a;
    Matrix result = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int k = 1; k <= 13; ++k) {
        term = (1.0 / k) * (term * b);
        result = result + term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace nes
