#pragma once

#include <memory>
#include <string>
#include <vector>

#include "corep/linalg.hpp"

namespace corep {

/// Finite-dimensional unital associative algebra over the base field, given
/// by structure constants. mult[i] is the matrix of left multiplication by
/// the i-th basis element: (b_i * x) = mult[i] * x on coordinate vectors,
/// i.e. mult[i](k, j) is the coefficient of b_k in b_i * b_j.
template <class K>
struct Algebra {
    Index dim = 0;
    std::vector<Mat<K>> left_mult;
    std::vector<Mat<K>> right_mult;
    Vec<K> unit;

    Mat<K> left_mult_of(const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Zero(dim, dim);
        for (Index i = 0; i < dim; ++i)
            if (!x(i).is_zero()) m += x(i) * left_mult[i];
        return m;
    }
    Mat<K> right_mult_of(const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Zero(dim, dim);
        for (Index i = 0; i < dim; ++i)
            if (!x(i).is_zero()) m += x(i) * right_mult[i];
        return m;
    }
    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const { return left_mult_of(x) * y; }
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    if (a == b) return true;
    if (!a || !b || a->dim != b->dim) return false;
    if (!vec_eq<K>(a->unit, b->unit)) return false;
    for (Index i = 0; i < a->dim; ++i)
        if (!mat_eq<K>(a->left_mult[i], b->left_mult[i])) return false;
    return true;
}

/// Builds and verifies an algebra from left-multiplication matrices.
/// Associativity is checked on all basis triples, unit laws on both sides.
template <class K>
AlgebraPtr<K> make_algebra(std::vector<Mat<K>> left_mult, Vec<K> unit) {
    const Index n = static_cast<Index>(left_mult.size());
    if (unit.size() != n) throw InputShapeError("make_algebra: unit length differs from dimension");
    for (const auto& m : left_mult)
        if (m.rows() != n || m.cols() != n) throw InputShapeError("make_algebra: multiplication tensor shape");

    auto alg = std::make_shared<Algebra<K>>();
    alg->dim = n;
    alg->left_mult = std::move(left_mult);
    alg->right_mult.assign(n, Mat<K>::Zero(n, n));
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) alg->right_mult[j].col(i) = alg->left_mult[i].col(j);
    alg->unit = std::move(unit);

    for (Index i = 0; i < n; ++i)
        for (Index l = 0; l < n; ++l) {
            const Mat<K> lhs = alg->right_mult[l] * alg->left_mult[i];
            const Mat<K> rhs = alg->left_mult[i] * alg->right_mult[l];
            for (Index j = 0; j < n; ++j)
                if (!vec_eq<K>(Vec<K>(lhs.col(j)), Vec<K>(rhs.col(j))))
                    throw NonAssociative("associativity fails at basis triple (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ", " + std::to_string(l) + ")");
        }

    const Mat<K> lu = alg->left_mult_of(alg->unit);
    const Mat<K> ru = alg->right_mult_of(alg->unit);
    const Mat<K> id = Mat<K>::Identity(n, n);
    for (Index j = 0; j < n; ++j) {
        if (!vec_eq<K>(Vec<K>(lu.col(j)), Vec<K>(id.col(j))))
            throw NonUnital("1 * b_" + std::to_string(j) + " differs from b_" + std::to_string(j));
        if (!vec_eq<K>(Vec<K>(ru.col(j)), Vec<K>(id.col(j))))
            throw NonUnital("b_" + std::to_string(j) + " * 1 differs from b_" + std::to_string(j));
    }
    return alg;
}

template <class K>
bool is_commutative(const Algebra<K>& a) {
    for (Index i = 0; i < a.dim; ++i)
        for (Index j = 0; j < i; ++j)
            if (!vec_eq<K>(Vec<K>(a.left_mult[i].col(j)), Vec<K>(a.left_mult[j].col(i)))) return false;
    return true;
}

} // namespace corep
