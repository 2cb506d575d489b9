#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "corep/errors.hpp"
#include "corep/scalar.hpp"

namespace corep {

using Index = Eigen::Index;

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
bool mat_is_zero(const Mat<K>& a) {
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

template <class K>
bool mat_eq(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

template <class K>
bool vec_eq(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

/// Row-major flattening: entry (i, j) of an r x c matrix lands at index i*c + j.
template <class K>
Vec<K> vec_rm(const Mat<K>& a) {
    Vec<K> v(a.rows() * a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            v(i * a.cols() + j) = a(i, j);
    return v;
}

template <class K>
Mat<K> unvec_rm(const Vec<K>& v, Index rows, Index cols) {
    if (v.size() != rows * cols) throw InputShapeError("unvec: size mismatch");
    Mat<K> a(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            a(i, j) = v(i * cols + j);
    return a;
}

/// Kronecker product compatible with row-major tensor indexing:
/// (kron(A, B))(ia*Br+ib, ja*Bc+jb) = A(ia, ja) * B(ib, jb).
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> out = Mat<K>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index ia = 0; ia < a.rows(); ++ia)
        for (Index ja = 0; ja < a.cols(); ++ja) {
            if (a(ia, ja).is_zero()) continue;
            for (Index ib = 0; ib < b.rows(); ++ib)
                for (Index jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
        }
    return out;
}

/// Computes (A kron B) * X column by column without materializing the
/// Kronecker product, via vec_rm(A Y B^T) = (A kron B) vec_rm(Y).
template <class K>
Mat<K> apply_kron(const Mat<K>& a, const Mat<K>& b, const Mat<K>& x) {
    if (x.rows() != a.cols() * b.cols()) throw InputShapeError("apply_kron: shape mismatch");
    Mat<K> out(a.rows() * b.rows(), x.cols());
    for (Index c = 0; c < x.cols(); ++c) {
        Mat<K> y = unvec_rm<K>(x.col(c), a.cols(), b.cols());
        Mat<K> z = a * y * b.transpose();
        out.col(c) = vec_rm(z);
    }
    return out;
}

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class K>
using SparseVec = std::vector<std::pair<Index, K>>;

template <class K>
SparseVec<K> sparse_from_dense(const Vec<K>& v) {
    SparseVec<K> out;
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) out.emplace_back(i, v(i));
    return out;
}

namespace detail {

/// a += c * b, sparse merge; drops cancelled entries.
template <class K>
SparseVec<K> sparse_axpy(const SparseVec<K>& a, const K& c, const SparseVec<K>& b) {
    SparseVec<K> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            K v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            K v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

} // namespace detail

/// Incremental exact Gaussian eliminator. Rows are inserted one at a time and
/// reduced against the pivots found so far; finalization yields the unique
/// reduced row echelon form of the row space, pivots strictly increasing.
template <class K>
class RowReducer {
  public:
    explicit RowReducer(Index cols) : cols_(cols) {}

    Index cols() const { return cols_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }

    /// Inserts a row; returns true if it enlarged the row space.
    bool add(SparseVec<K> row) {
        while (!row.empty()) {
            const Index lead = row.front().first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                const K inv = row.front().second.inverse();
                for (auto& e : row) e.second = e.second * inv;
                rows_.emplace(lead, std::move(row));
                reduced_ = false;
                return true;
            }
            row = detail::sparse_axpy(row, -row.front().second, it->second);
        }
        return false;
    }

    bool add_dense(const Vec<K>& v) { return add(sparse_from_dense(v)); }

    bool has_pivot(Index col) const { return rows_.count(col) != 0; }

    std::vector<Index> pivots() const {
        std::vector<Index> p;
        p.reserve(rows_.size());
        for (const auto& [c, r] : rows_) p.push_back(c);
        return p;
    }

    /// Fully reduced rows, sorted by pivot column.
    Mat<K> rref() {
        normalize();
        Mat<K> out = Mat<K>::Zero(rank(), cols_);
        Index i = 0;
        for (const auto& [p, row] : rows_) {
            for (const auto& [c, v] : row) out(i, c) = v;
            ++i;
        }
        return out;
    }

  private:
    void normalize() {
        if (reduced_) return;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            auto& row = it->second;
            SparseVec<K> hits;
            for (const auto& e : row)
                if (e.first != it->first && rows_.count(e.first)) hits.push_back(e);
            for (const auto& [c, v] : hits) row = detail::sparse_axpy(row, -v, rows_.at(c));
        }
        reduced_ = true;
    }

    Index cols_;
    std::map<Index, SparseVec<K>> rows_;
    bool reduced_ = true;
};

/// A linear subspace of k^n held by its canonical basis: the reduced row
/// echelon form of any spanning set, pivot columns strictly increasing.
template <class K>
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(Index ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Mat<K>::Zero(0, ambient);
        return s;
    }

    /// Canonicalizes the span of the given rows.
    static Subspace from_rows(const Mat<K>& rows) {
        RowReducer<K> red(rows.cols());
        for (Index i = 0; i < rows.rows(); ++i) red.add_dense(Vec<K>(rows.row(i).transpose()));
        return from_reducer(std::move(red));
    }

    static Subspace from_columns(const Mat<K>& cols) { return from_rows(Mat<K>(cols.transpose())); }

    static Subspace from_reducer(RowReducer<K> red) {
        Subspace s;
        s.ambient_ = red.cols();
        s.pivots_ = red.pivots();
        s.basis_ = red.rref();
        return s;
    }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.rows(); }
    const Mat<K>& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    Vec<K> basis_vector(Index i) const { return basis_.row(i).transpose(); }

    /// Canonical representative of x modulo this subspace (zero iff x lies in it).
    Vec<K> reduce(Vec<K> x) const {
        if (x.size() != ambient_) throw InputShapeError("Subspace::reduce: ambient mismatch");
        for (Index i = 0; i < dim(); ++i) {
            const K c = x(pivots_[i]);
            if (!c.is_zero()) x -= c * basis_vector(i);
        }
        return x;
    }

    bool contains(const Vec<K>& x) const { return vec_is_zero<K>(reduce(x)); }

    /// Coordinates of x in the canonical basis, if x lies in the subspace.
    std::optional<Vec<K>> coords_of(const Vec<K>& x) const {
        if (x.size() != ambient_) throw InputShapeError("Subspace::coords_of: ambient mismatch");
        Vec<K> c(dim());
        for (Index i = 0; i < dim(); ++i) c(i) = x(pivots_[i]);
        if (!vec_eq<K>(Vec<K>(basis_.transpose() * c), x)) return std::nullopt;
        return c;
    }

    Vec<K> lift(const Vec<K>& coords) const { return basis_.transpose() * coords; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && mat_eq(a.basis_, b.basis_);
    }

  private:
    Index ambient_ = 0;
    Mat<K> basis_{Mat<K>::Zero(0, 0)};
    std::vector<Index> pivots_;
};

template <class K>
Index rank_of(const Mat<K>& a) {
    RowReducer<K> red(a.cols());
    for (Index i = 0; i < a.rows(); ++i) red.add_dense(Vec<K>(a.row(i).transpose()));
    return red.rank();
}

/// Nullspace {x : Ax = 0}, canonical basis.
template <class K>
Subspace<K> kernel(const Mat<K>& a) {
    RowReducer<K> red(a.cols());
    for (Index i = 0; i < a.rows(); ++i) red.add_dense(Vec<K>(a.row(i).transpose()));
    const Mat<K> r = red.rref();
    const std::vector<Index> piv = red.pivots();
    std::vector<bool> is_piv(a.cols(), false);
    for (Index p : piv) is_piv[p] = true;
    Mat<K> gens = Mat<K>::Zero(a.cols() - r.rows(), a.cols());
    Index g = 0;
    for (Index f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        gens(g, f) = K(1);
        for (Index i = 0; i < r.rows(); ++i) gens(g, piv[i]) = -r(i, f);
        ++g;
    }
    return Subspace<K>::from_rows(gens);
}

template <class K>
struct LinearSolution {
    Vec<K> particular;
    Subspace<K> kernel;
};

/// Exact solve of A x = b; returns the canonical particular solution (free
/// coordinates zero) and the full homogeneous solution space.
template <class K>
std::optional<LinearSolution<K>> solve(const Mat<K>& a, const Vec<K>& b) {
    if (a.rows() != b.size()) throw InputShapeError("solve: row count differs from rhs length");
    const Index n = a.cols();
    RowReducer<K> red(n + 1);
    for (Index i = 0; i < a.rows(); ++i) {
        SparseVec<K> row;
        for (Index j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) row.emplace_back(j, a(i, j));
        if (!b(i).is_zero()) row.emplace_back(n, b(i));
        red.add(std::move(row));
    }
    if (red.has_pivot(n)) return std::nullopt;
    const Mat<K> r = red.rref();
    const std::vector<Index> piv = red.pivots();
    Vec<K> x = Vec<K>::Zero(n);
    for (Index i = 0; i < r.rows(); ++i) x(piv[i]) = r(i, n);
    std::vector<bool> is_piv(n, false);
    for (Index p : piv) is_piv[p] = true;
    Mat<K> gens = Mat<K>::Zero(n - r.rows(), n);
    Index g = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        gens(g, f) = K(1);
        for (Index i = 0; i < r.rows(); ++i) gens(g, piv[i]) = -r(i, f);
        ++g;
    }
    return LinearSolution<K>{std::move(x), Subspace<K>::from_rows(gens)};
}

template <class K>
Subspace<K> subspace_meet(const Subspace<K>& u, const Subspace<K>& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw InputShapeError("subspace_meet: ambient dimensions differ");
    // U = {x : c.x = 0 for all c in ker(Bu)}; stack both constraint sets.
    const Subspace<K> cu = kernel<K>(u.basis());
    const Subspace<K> cw = kernel<K>(w.basis());
    Mat<K> constraints(cu.dim() + cw.dim(), u.ambient_dim());
    constraints << cu.basis(), cw.basis();
    return kernel<K>(constraints);
}

/// Quotient of k^ambient by a relation subspace. `project` maps a vector to
/// the coordinates of its class in the canonical quotient basis (the non-pivot
/// coordinates of the echelonized relation space); `section` embeds the
/// quotient back on those coordinates, so project * section = identity and
/// ker(project) = relations.
template <class K>
struct Quotient {
    Mat<K> project;
    Mat<K> section;
    std::vector<Index> free_cols;

    Index dim() const { return project.rows(); }
};

template <class K>
Quotient<K> quotient_by(const Subspace<K>& rel) {
    const Index n = rel.ambient_dim();
    std::vector<bool> is_piv(n, false);
    for (Index p : rel.pivots()) is_piv[p] = true;
    Quotient<K> q;
    for (Index f = 0; f < n; ++f)
        if (!is_piv[f]) q.free_cols.push_back(f);
    const Index d = static_cast<Index>(q.free_cols.size());
    q.project = Mat<K>::Zero(d, n);
    q.section = Mat<K>::Zero(n, d);
    for (Index i = 0; i < d; ++i) {
        q.project(i, q.free_cols[i]) = K(1);
        q.section(q.free_cols[i], i) = K(1);
        for (Index j = 0; j < rel.dim(); ++j) q.project(i, rel.pivots()[j]) = -rel.basis()(j, q.free_cols[i]);
    }
    return q;
}

/// Deterministic pseudo-random source; the mt19937_64 stream is fixed by the
/// standard, so identical seeds give identical draws on every platform.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

  private:
    std::mt19937_64 eng_;
};

template <class K>
Vec<K> random_int_vec(Index n, Prng& rng, long height) {
    Vec<K> v(n);
    for (Index i = 0; i < n; ++i) v(i) = K(rng.uniform(-height, height));
    return v;
}

/// Random element of a subspace: integer coefficients in [-height, height]
/// against the canonical basis. Deterministic in (S, seed, height).
template <class K>
Vec<K> random_element(const Subspace<K>& s, std::uint64_t seed, long height) {
    Prng rng(seed);
    if (s.dim() == 0) return Vec<K>::Zero(s.ambient_dim());
    return s.basis().transpose() * random_int_vec<K>(s.dim(), rng, height);
}

/// A linear system assembled row by row over a fixed set of unknowns;
/// supports inhomogeneous right-hand sides via an augmented column.
template <class K>
class LinearSystem {
  public:
    explicit LinearSystem(Index unknowns) : n_(unknowns), red_(unknowns + 1) {}

    Index unknowns() const { return n_; }

    void add_row(SparseVec<K> coeffs, const K& rhs) {
        if (!rhs.is_zero()) coeffs.emplace_back(n_, rhs);
        red_.add(std::move(coeffs));
    }

    /// Adds the family of rows "M x = rhs" for a dense matrix M.
    void add_matrix(const Mat<K>& m, const Vec<K>& rhs) {
        if (m.cols() != n_ || m.rows() != rhs.size()) throw InputShapeError("LinearSystem::add_matrix shape");
        for (Index i = 0; i < m.rows(); ++i) {
            SparseVec<K> row;
            for (Index j = 0; j < n_; ++j)
                if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
            add_row(std::move(row), rhs(i));
        }
    }

    std::optional<LinearSolution<K>> solve() {
        if (red_.has_pivot(n_)) return std::nullopt;
        const Mat<K> r = red_.rref();
        const std::vector<Index> piv = red_.pivots();
        Vec<K> x = Vec<K>::Zero(n_);
        for (Index i = 0; i < r.rows(); ++i) x(piv[i]) = r(i, n_);
        std::vector<bool> is_piv(n_, false);
        for (Index p : piv) is_piv[p] = true;
        Mat<K> gens = Mat<K>::Zero(n_ - r.rows(), n_);
        Index g = 0;
        for (Index f = 0; f < n_; ++f) {
            if (is_piv[f]) continue;
            gens(g, f) = K(1);
            for (Index i = 0; i < r.rows(); ++i) gens(g, piv[i]) = -r(i, f);
            ++g;
        }
        return LinearSolution<K>{std::move(x), Subspace<K>::from_rows(gens)};
    }

  private:
    Index n_;
    RowReducer<K> red_;
};

} // namespace corep
