#pragma once

/*
 * Dense exact linear algebra over Rational.
 *
 * det_exact runs Bareiss fraction-free elimination: every intermediate
 * entry is a minor of the input, and each division is exact. Pivoting
 * only looks for a nonzero entry (no magnitude heuristics are needed in
 * exact arithmetic).
 */

#include <initializer_list>
#include <utility>

#include <Eigen/Core>

#include "moishezon/errors.hpp"
#include "moishezon/rational.hpp"

namespace moishezon {

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline RationalVector make_vector(std::initializer_list<Rational> values) {
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& x : values) v(i++) = x;
    return v;
}

template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    using Index = Eigen::Index;

    if (input.rows() != input.cols()) {
        throw DomainError("det_exact: matrix is " + std::to_string(input.rows()) + "x" +
                          std::to_string(input.cols()) + ", not square");
    }
    const Index n = input.rows();
    if (n == 0) return Scalar(1);

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
    Scalar previous_pivot(1);
    int sign = 1;

    for (Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == Scalar(0)) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (m(i, k) != Scalar(0)) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return Scalar(0);
            m.row(k).swap(m.row(swap_row));
            sign = -sign;
        }
        const Scalar pivot = m(k, k);
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / previous_pivot;
            }
            m(i, k) = Scalar(0);
        }
        previous_pivot = pivot;
    }
    return sign > 0 ? Scalar(m(n - 1, n - 1)) : Scalar(-m(n - 1, n - 1));
}

}  // namespace moishezon
