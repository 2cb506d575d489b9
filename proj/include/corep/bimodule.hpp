#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corep/algebra.hpp"
#include "corep/linalg.hpp"
#include "corep/verdict.hpp"

namespace corep {

/// (R,S)-bimodule with explicit action tensors: left_act[i] is the matrix of
/// the left action of the i-th basis element of R, right_act[j] of the right
/// action of the j-th basis element of S. The two actions commute.
template <class K>
struct Bimodule {
    AlgebraPtr<K> left_ring, right_ring;
    Index dim = 0;
    std::vector<Mat<K>> left_act;
    std::vector<Mat<K>> right_act;

    Mat<K> left_action_of(const Vec<K>& r) const {
        Mat<K> m = Mat<K>::Zero(dim, dim);
        for (Index i = 0; i < left_ring->dim; ++i)
            if (!r(i).is_zero()) m += r(i) * left_act[i];
        return m;
    }
    Mat<K> right_action_of(const Vec<K>& s) const {
        Mat<K> m = Mat<K>::Zero(dim, dim);
        for (Index j = 0; j < right_ring->dim; ++j)
            if (!s(j).is_zero()) m += s(j) * right_act[j];
        return m;
    }
};

template <class K>
using BimodulePtr = std::shared_ptr<const Bimodule<K>>;

template <class K>
bool same_bimodule(const BimodulePtr<K>& a, const BimodulePtr<K>& b) {
    if (a == b) return true;
    if (!a || !b || a->dim != b->dim) return false;
    if (!same_algebra(a->left_ring, b->left_ring) || !same_algebra(a->right_ring, b->right_ring)) return false;
    for (Index i = 0; i < a->left_ring->dim; ++i)
        if (!mat_eq<K>(a->left_act[i], b->left_act[i])) return false;
    for (Index j = 0; j < a->right_ring->dim; ++j)
        if (!mat_eq<K>(a->right_act[j], b->right_act[j])) return false;
    return true;
}

/// Builds and verifies an (R,S)-bimodule: both actions unital and
/// multiplicative, and commuting with each other, on all basis triples.
template <class K>
BimodulePtr<K> make_bimodule(AlgebraPtr<K> left_ring, AlgebraPtr<K> right_ring, Index dim,
                             std::vector<Mat<K>> left_act, std::vector<Mat<K>> right_act) {
    if (static_cast<Index>(left_act.size()) != left_ring->dim ||
        static_cast<Index>(right_act.size()) != right_ring->dim)
        throw InputShapeError("make_bimodule: action tensor count differs from ring dimension");
    for (const auto& m : left_act)
        if (m.rows() != dim || m.cols() != dim) throw InputShapeError("make_bimodule: left action shape");
    for (const auto& m : right_act)
        if (m.rows() != dim || m.cols() != dim) throw InputShapeError("make_bimodule: right action shape");

    auto mod = std::make_shared<Bimodule<K>>();
    mod->left_ring = std::move(left_ring);
    mod->right_ring = std::move(right_ring);
    mod->dim = dim;
    mod->left_act = std::move(left_act);
    mod->right_act = std::move(right_act);

    const Mat<K> id = Mat<K>::Identity(dim, dim);
    if (!mat_eq<K>(mod->left_action_of(mod->left_ring->unit), id))
        throw BadLeftAction("left action of the unit is not the identity");
    if (!mat_eq<K>(mod->right_action_of(mod->right_ring->unit), id))
        throw BadRightAction("right action of the unit is not the identity");

    const auto& R = *mod->left_ring;
    for (Index i = 0; i < R.dim; ++i)
        for (Index j = 0; j < R.dim; ++j) {
            // b_i (b_j m) = (b_i b_j) m
            Mat<K> prod_act = Mat<K>::Zero(dim, dim);
            const Vec<K> bij = R.left_mult[i].col(j);
            for (Index k = 0; k < R.dim; ++k)
                if (!bij(k).is_zero()) prod_act += bij(k) * mod->left_act[k];
            if (!mat_eq<K>(Mat<K>(mod->left_act[i] * mod->left_act[j]), prod_act))
                throw BadLeftAction("left action not multiplicative at basis pair (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
        }
    const auto& S = *mod->right_ring;
    for (Index i = 0; i < S.dim; ++i)
        for (Index j = 0; j < S.dim; ++j) {
            // (m b_i) b_j = m (b_i b_j)
            Mat<K> prod_act = Mat<K>::Zero(dim, dim);
            const Vec<K> bij = S.left_mult[i].col(j);
            for (Index k = 0; k < S.dim; ++k)
                if (!bij(k).is_zero()) prod_act += bij(k) * mod->right_act[k];
            if (!mat_eq<K>(Mat<K>(mod->right_act[j] * mod->right_act[i]), prod_act))
                throw BadRightAction("right action not multiplicative at basis pair (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
        }
    for (Index i = 0; i < R.dim; ++i)
        for (Index j = 0; j < S.dim; ++j)
            if (!mat_eq<K>(Mat<K>(mod->left_act[i] * mod->right_act[j]),
                           Mat<K>(mod->right_act[j] * mod->left_act[i])))
                throw ActionsDontCommute("actions do not commute at ring basis pair (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ")");
    return mod;
}

/// R as an (R,R)-bimodule via multiplication.
template <class K>
BimodulePtr<K> regular_bimodule(const AlgebraPtr<K>& r) {
    return make_bimodule<K>(r, r, r->dim, r->left_mult, r->right_mult);
}

template <class K>
BimodulePtr<K> zero_bimodule(AlgebraPtr<K> left_ring, AlgebraPtr<K> right_ring) {
    const std::vector<Mat<K>> la(left_ring->dim, Mat<K>::Zero(0, 0));
    const std::vector<Mat<K>> ra(right_ring->dim, Mat<K>::Zero(0, 0));
    return make_bimodule<K>(std::move(left_ring), std::move(right_ring), 0, la, ra);
}

enum class Sides { left_only, right_only, both };

inline std::string sides_str(Sides s) {
    switch (s) {
        case Sides::left_only: return "left";
        case Sides::right_only: return "right";
        case Sides::both: return "both";
    }
    return "both";
}

/// Linear map between bimodules intertwining the actions named by `sides`.
template <class K>
struct BimoduleMap {
    BimodulePtr<K> source, target;
    Mat<K> mat;
    Sides sides = Sides::both;
};

template <class K>
bool intertwines_left(const Mat<K>& f, const Bimodule<K>& m, const Bimodule<K>& n) {
    for (Index i = 0; i < m.left_ring->dim; ++i)
        if (!mat_eq<K>(Mat<K>(f * m.left_act[i]), Mat<K>(n.left_act[i] * f))) return false;
    return true;
}

template <class K>
bool intertwines_right(const Mat<K>& f, const Bimodule<K>& m, const Bimodule<K>& n) {
    for (Index j = 0; j < m.right_ring->dim; ++j)
        if (!mat_eq<K>(Mat<K>(f * m.right_act[j]), Mat<K>(n.right_act[j] * f))) return false;
    return true;
}

template <class K>
bool intertwines(const Mat<K>& f, const Bimodule<K>& m, const Bimodule<K>& n, Sides sides) {
    if (sides != Sides::right_only && !intertwines_left(f, m, n)) return false;
    if (sides != Sides::left_only && !intertwines_right(f, m, n)) return false;
    return true;
}

template <class K>
BimoduleMap<K> make_bimodule_map(BimodulePtr<K> source, BimodulePtr<K> target, Mat<K> mat, Sides sides) {
    if (mat.rows() != target->dim || mat.cols() != source->dim)
        throw InputShapeError("make_bimodule_map: matrix shape");
    if (sides != Sides::right_only && !same_algebra(source->left_ring, target->left_ring))
        throw RingMismatch("bimodule map: left rings differ");
    if (sides != Sides::left_only && !same_algebra(source->right_ring, target->right_ring))
        throw RingMismatch("bimodule map: right rings differ");
    if (!intertwines(mat, *source, *target, sides))
        throw NotBimoduleMap("matrix does not intertwine the " + sides_str(sides) + "-side actions");
    return BimoduleMap<K>{std::move(source), std::move(target), std::move(mat), sides};
}

/// Tensor product over the middle ring: result = (M (x)_k N) / span{ mr (x) n - m (x) rn },
/// with the outer actions descended. project and section translate between the
/// plain tensor space (row-major pair basis) and the canonical quotient basis.
template <class K>
struct TensorProduct {
    BimodulePtr<K> left_factor, right_factor;
    BimodulePtr<K> result;
    Mat<K> project;
    Mat<K> section;

    Index dim() const { return result->dim; }
    Index plain_dim() const { return left_factor->dim * right_factor->dim; }

    Vec<K> pure(const Vec<K>& m, const Vec<K>& n) const {
        Vec<K> plain = Vec<K>::Zero(plain_dim());
        for (Index a = 0; a < left_factor->dim; ++a) {
            if (m(a).is_zero()) continue;
            for (Index c = 0; c < right_factor->dim; ++c)
                if (!n(c).is_zero()) plain(a * right_factor->dim + c) = m(a) * n(c);
        }
        return project * plain;
    }
};

template <class K>
TensorProduct<K> tensor_over_ring(const BimodulePtr<K>& m, const BimodulePtr<K>& n) {
    if (!same_algebra(m->right_ring, n->left_ring))
        throw MiddleRingMismatch("tensor_over_ring: middle rings differ");
    const Index dm = m->dim, dn = n->dim;
    const Index plain = dm * dn;
    const auto& mid = *m->right_ring;

    RowReducer<K> red(plain);
    for (Index r = 0; r < mid.dim; ++r)
        for (Index a = 0; a < dm; ++a)
            for (Index c = 0; c < dn; ++c) {
                std::map<Index, K> row;
                for (Index ap = 0; ap < dm; ++ap) {
                    const K& v = m->right_act[r](ap, a);
                    if (!v.is_zero()) row[ap * dn + c] += v;
                }
                for (Index cp = 0; cp < dn; ++cp) {
                    const K& v = n->left_act[r](cp, c);
                    if (!v.is_zero()) row[a * dn + cp] -= v;
                }
                SparseVec<K> srow;
                for (auto& [idx, v] : row)
                    if (!v.is_zero()) srow.emplace_back(idx, std::move(v));
                red.add(std::move(srow));
            }

    const Quotient<K> q = quotient_by(Subspace<K>::from_reducer(std::move(red)));

    std::vector<Mat<K>> left_act, right_act;
    left_act.reserve(m->left_ring->dim);
    const Mat<K> idn = Mat<K>::Identity(dn, dn);
    const Mat<K> idm = Mat<K>::Identity(dm, dm);
    for (Index i = 0; i < m->left_ring->dim; ++i)
        left_act.push_back(q.project * apply_kron<K>(m->left_act[i], idn, q.section));
    for (Index j = 0; j < n->right_ring->dim; ++j)
        right_act.push_back(q.project * apply_kron<K>(idm, n->right_act[j], q.section));

    TensorProduct<K> t;
    t.left_factor = m;
    t.right_factor = n;
    t.result = make_bimodule<K>(m->left_ring, n->right_ring, q.dim(), std::move(left_act), std::move(right_act));
    t.project = std::move(q.project);
    t.section = std::move(q.section);
    return t;
}

namespace detail {

/// Rows of the intertwining system "X A = B X" over unknowns vec_rm(X),
/// X of shape (tgt x src).
template <class K>
void add_intertwine_rows(LinearSystem<K>& sys, const Mat<K>& a, const Mat<K>& b, Index tgt, Index src) {
    for (Index r = 0; r < tgt; ++r)
        for (Index c = 0; c < src; ++c) {
            std::map<Index, K> row;
            for (Index mcol = 0; mcol < src; ++mcol) {
                const K& v = a(mcol, c);
                if (!v.is_zero()) row[r * src + mcol] += v;
            }
            for (Index mrow = 0; mrow < tgt; ++mrow) {
                const K& v = b(r, mrow);
                if (!v.is_zero()) row[mrow * src + c] -= v;
            }
            SparseVec<K> srow;
            for (auto& [idx, v] : row)
                if (!v.is_zero()) srow.emplace_back(idx, std::move(v));
            sys.add_row(std::move(srow), K(0));
        }
}

} // namespace detail

/// Canonical basis of the space of maps M -> N intertwining the requested
/// sides. The returned maps are ordered by the echelon form of their
/// vectorized matrices.
template <class K>
std::vector<BimoduleMap<K>> hom_space(const BimodulePtr<K>& m, const BimodulePtr<K>& n, Sides sides) {
    if (sides != Sides::right_only && !same_algebra(m->left_ring, n->left_ring))
        throw RingMismatch("hom_space: left rings differ");
    if (sides != Sides::left_only && !same_algebra(m->right_ring, n->right_ring))
        throw RingMismatch("hom_space: right rings differ");

    LinearSystem<K> sys(n->dim * m->dim);
    if (sides != Sides::right_only)
        for (Index i = 0; i < m->left_ring->dim; ++i)
            detail::add_intertwine_rows(sys, m->left_act[i], n->left_act[i], n->dim, m->dim);
    if (sides != Sides::left_only)
        for (Index j = 0; j < m->right_ring->dim; ++j)
            detail::add_intertwine_rows(sys, m->right_act[j], n->right_act[j], n->dim, m->dim);

    const Subspace<K> sol = sys.solve()->kernel;
    std::vector<BimoduleMap<K>> basis;
    basis.reserve(sol.dim());
    for (Index i = 0; i < sol.dim(); ++i)
        basis.push_back(make_bimodule_map<K>(m, n, unvec_rm<K>(sol.basis_vector(i), n->dim, m->dim), sides));
    return basis;
}

/// R-centralized elements of an (R,R)-bimodule: {m | rm = mr for all r}.
template <class K>
Subspace<K> centralizer(const BimodulePtr<K>& m) {
    if (!same_algebra(m->left_ring, m->right_ring)) throw RingMismatch("centralizer: rings differ");
    Mat<K> rows(m->left_ring->dim * m->dim, m->dim);
    for (Index i = 0; i < m->left_ring->dim; ++i)
        rows.middleRows(i * m->dim, m->dim) = m->left_act[i] - m->right_act[i];
    return kernel<K>(rows);
}

template <class K>
std::optional<Mat<K>> try_inverse(const Mat<K>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const Index n = a.rows();
    RowReducer<K> red(2 * n);
    for (Index i = 0; i < n; ++i) {
        SparseVec<K> row;
        for (Index j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) row.emplace_back(j, a(i, j));
        row.emplace_back(n + i, K(1));
        red.add(std::move(row));
    }
    if (red.rank() != n) return std::nullopt;
    const auto piv = red.pivots();
    for (Index i = 0; i < n; ++i)
        if (piv[i] != i) return std::nullopt;
    const Mat<K> r = red.rref();
    return Mat<K>(r.rightCols(n));
}

template <class K>
struct IsoWitness {
    Status status = Status::NO_WITNESS_FOUND;
    std::optional<BimoduleMap<K>> map, inverse;
    SearchTrace trace;
};

/// Randomized search for a mutually inverse pair of bimodule maps. FOUND is
/// exact-verified; a negative is only "no witness found" (probabilistic),
/// reported as such.
template <class K>
IsoWitness<K> random_iso_witness(const BimodulePtr<K>& m, const BimodulePtr<K>& n, Sides sides, long trials,
                                 std::uint64_t seed) {
    IsoWitness<K> w;
    w.trace.seed = seed;
    w.trace.budget = trials;
    if (m->dim != n->dim) {
        w.trace.notes.push_back("dimension mismatch");
        return w;
    }
    const auto hom = hom_space<K>(m, n, sides);
    auto accept = [&](const Mat<K>& x) -> bool {
        auto inv = try_inverse(x);
        if (!inv) return false;
        if (!intertwines(*inv, *n, *m, sides)) return false;
        w.status = Status::FOUND;
        w.map = make_bimodule_map<K>(m, n, x, sides);
        w.inverse = make_bimodule_map<K>(n, m, *inv, sides);
        return true;
    };
    if (same_bimodule(m, n)) {
        w.trace.trials_used = 1;
        if (accept(Mat<K>::Identity(m->dim, m->dim))) return w;
    }
    if (hom.empty()) return w;
    Prng rng(seed);
    for (long t = 0; t < trials; ++t) {
        w.trace.trials_used = t + 1;
        const long height = 1L << std::min<long>(t / 4, 16);
        Mat<K> x = Mat<K>::Zero(n->dim, m->dim);
        for (const auto& f : hom) x += K(rng.uniform(-height, height)) * f.mat;
        if (accept(x)) return w;
    }
    return w;
}

} // namespace corep
