#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace nvmem {

using c64 = std::complex<double>;

// Dense complex matrix, fixed capacity 6x6. Everything in this project is a
// 3- or 6-level manifold, so a stack-allocated matrix avoids any allocation
// in the hot paths.
class CMat {
public:
    CMat() : n_(0) { a_.fill(c64{}); }
    explicit CMat(int n) : n_(n) { a_.fill(c64{}); }

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    c64& operator()(int i, int j) { return a_[static_cast<size_t>(i) * 6 + j]; }
    const c64& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * 6 + j]; }

    CMat adjoint() const {
        CMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    CMat operator+(const CMat& o) const {
        CMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j) + o(i, j);
        return m;
    }

    CMat operator-(const CMat& o) const {
        CMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j) - o(i, j);
        return m;
    }

    CMat operator*(const CMat& o) const {
        CMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                c64 s{};
                for (int k = 0; k < n_; ++k) s += (*this)(i, k) * o(k, j);
                m(i, j) = s;
            }
        return m;
    }

    // max |a_ij|
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += std::norm((*this)(i, j));
        return std::sqrt(s);
    }

    c64 trace() const {
        c64 t{};
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double hermiticity_residual() const {
        double r = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return r;
    }

private:
    int n_;
    std::array<c64, 36> a_;
};

}  // namespace nvmem
