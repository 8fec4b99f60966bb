// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtkd {

/// Dense row-major matrix of doubles. Rank-1 arrays are stored as 1 x n.
/// All training arithmetic runs in double precision.
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("Tensor: negative dimension");
    }

    static Tensor zeros(int r, int c) { return Tensor(r, c); }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return data.size(); }

    bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// y += a * x, elementwise over equal-shaped tensors.
inline void axpy(double a, const Tensor& x, Tensor& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("axpy: shape mismatch");
    for (std::size_t i = 0; i < x.data.size(); ++i) y.data[i] += a * x.data[i];
}

inline void scale_inplace(Tensor& t, double a) {
    for (double& v : t.data) v *= a;
}

inline double sum_squares(const Tensor& t) {
    double s = 0.0;
    for (double v : t.data) s += v * v;
    return s;
}

} // namespace mtkd
