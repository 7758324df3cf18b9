#include "mtwgeo/linalg.hpp"

#include <stdexcept>

namespace mtw {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussRat& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Mat Mat::scaled(const GaussRat& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Mat Mat::conj_transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        GaussRat inv = GaussRat(1) / m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GaussRat f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<GaussRat>> Mat::nullspace() const {
    Mat m = *this;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRat> v(cols_);
        v[free] = GaussRat(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("Mat::solve: shape mismatch");
    Mat aug(rows_, cols_ + b.cols());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c >= cols_) return std::nullopt; // inconsistent
    Mat x(cols_, b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(int(r), cols_ + j);
    return x;
}

GaussRat Mat::trace() const {
    GaussRat t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

QPoly Mat::charpoly_real() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly on non-square matrix");
    int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
    std::vector<GaussRat> c(n + 1);
    c[n] = GaussRat(1);
    Mat m = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = *this * m;
        GaussRat ck = -(m.trace() / GaussRat(Rational(k)));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    std::vector<Rational> real(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (c[k].im != 0) throw std::runtime_error("charpoly_real: complex coefficient");
        real[k] = c[k].re;
    }
    return QPoly(std::move(real));
}

bool Mat::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

bool Mat::is_psd_hermitian() const {
    // Pivoted outer-product elimination: pick a positive diagonal pivot,
    // subtract its rank-one Hermitian complement, repeat. A Hermitian PSD
    // matrix with zero diagonal row/col must have that row/col zero.
    Mat m = *this;
    int n = rows_;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i] || m.at(i, i).is_zero()) continue;
            if (m.at(i, i).im != 0 || m.at(i, i).re < 0) return false;
            if (p < 0 || m.at(i, i).re > m.at(p, p).re) p = i;
        }
        if (p < 0) break;
        GaussRat inv = GaussRat(1) / m.at(p, p);
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p) continue;
            GaussRat f = m.at(i, p) * inv;
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (done[j] || j == p) continue;
                m.at(i, j) -= f * m.at(p, j);
            }
        }
        for (int j = 0; j < n; ++j) { m.at(p, j) = GaussRat(); m.at(j, p) = GaussRat(); }
        done[p] = true;
    }
    // Remaining active submatrix has zero diagonal; PSD iff it is zero.
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j)
            if (!done[j] && !m.at(i, j).is_zero()) return false;
    }
    return true;
}

} // namespace mtw
