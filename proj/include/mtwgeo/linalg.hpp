#pragma once

#include "mtwgeo/qpoly.hpp"
#include "mtwgeo/rational.hpp"

#include <optional>
#include <vector>

namespace mtw {

/// Dense matrix over the Gaussian rationals. All algorithms are exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GaussRat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const GaussRat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat scaled(const GaussRat& s) const;
    Mat conj_transpose() const;
    Mat transpose() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    int rank() const;
    /// Basis of the right nullspace, one column vector per basis element.
    std::vector<std::vector<GaussRat>> nullspace() const;
    /// Solve A x = b for each column of b; nullopt when inconsistent.
    std::optional<Mat> solve(const Mat& b) const;
    GaussRat trace() const;

    /// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
    /// Throws unless every coefficient is real.
    QPoly charpoly_real() const;

    bool is_hermitian() const;
    /// Exact positive-semidefiniteness of a Hermitian matrix via pivoted LDL*.
    bool is_psd_hermitian() const;

private:
    int rows_, cols_;
    std::vector<GaussRat> a_;
};

} // namespace mtw
