#pragma once

#include "hla/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hla {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form. The result keeps the input shape;
/// zero rows sink to the bottom.
inline RrefResult rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// A linear subspace of Q^n stored as its canonical RREF basis (no zero rows).
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t n) { return Subspace(n, Matrix(0, n), {}); }
    static Subspace full(std::size_t n) { return Subspace(n, Matrix::identity(n), all_pivots(n)); }

    /// Row span of `generators`.
    static Subspace span(const Matrix& generators)
    {
        auto [red, piv] = rref(generators);
        Matrix basis(piv.size(), generators.cols());
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = red(i, j);
        return Subspace(generators.cols(), std::move(basis), std::move(piv));
    }

    static Subspace span(std::size_t n, const std::vector<Vector>& generators)
    {
        return span(Matrix::from_rows(n, generators));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

    /// Eliminates pivot coordinates of v against the basis.
    Vector reduce(Vector v) const
    {
        check_ambient(v.size());
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            Scalar f = v[pivots_[i]];
            if (!is_zero(f)) axpy(-f, basis_.row(i), v);
        }
        return v;
    }

    bool contains(const Vector& v) const { return hla::is_zero(std::span<const Scalar>(reduce(v))); }

    bool contains(const Subspace& other) const
    {
        check_ambient(other.ambient_dim());
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void check_ambient(std::size_t n) const
    {
        if (n != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
    }

private:
    Subspace(std::size_t n, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(n), basis_(std::move(basis)), pivots_(std::move(pivots))
    {
    }

    static std::vector<std::size_t> all_pivots(std::size_t n)
    {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        return p;
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    a.check_ambient(b.ambient_dim());
    return Subspace::span(vstack(a.basis(), b.basis()));
}

inline bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }
inline bool subspace_equal(const Subspace& a, const Subspace& b)
{
    a.check_ambient(b.ambient_dim());
    return a == b;
}

/// {v : m v = 0}.
inline Subspace kernel_basis(const Matrix& m)
{
    auto [red, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

/// Column space of m.
inline Subspace image_basis(const Matrix& m) { return Subspace::span(m.transpose()); }

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    a.check_ambient(b.ambient_dim());
    // x = A^T s = B^T t  <=>  [A^T | -B^T] (s,t) = 0
    const std::size_t n = a.ambient_dim();
    Matrix sys(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) sys(j, i) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) sys(j, a.dim() + i) = -b.basis()(i, j);
    Subspace k = kernel_basis(sys);
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < k.dim(); ++r) {
        Vector x = zero_vector(n);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(k.basis()(r, i), a.basis().row(i), x);
        gens.push_back(std::move(x));
    }
    return Subspace::span(n, gens);
}

/// Image of a subspace under a linear map.
inline Subspace map_subspace(const Matrix& f, const Subspace& s)
{
    if (f.cols() != s.ambient_dim()) throw std::invalid_argument("map_subspace: dimension mismatch");
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(f * s.basis().row(i));
    return Subspace::span(f.rows(), gens);
}

/// Canonical particular solution of a x = b: free variables set to zero.
inline std::optional<Vector> solve_linear(const Matrix& a, const Vector& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [red, piv] = rref(std::move(aug));
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vector x = zero_vector(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, a.cols());
    return x;
}

/// Q^n / K with coset representatives at the non-pivot coordinates of K.
class QuotientSpace {
public:
    QuotientSpace() = default;

    QuotientSpace(std::size_t ambient_dim, Subspace killed) : ambient_(ambient_dim), killed_(std::move(killed))
    {
        killed_.check_ambient(ambient_dim);
        std::vector<bool> is_pivot(ambient_, false);
        for (auto p : killed_.pivots()) is_pivot[p] = true;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!is_pivot[c]) free_.push_back(c);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }
    const Subspace& killed() const { return killed_; }
    /// Ambient coordinate that represents quotient basis vector i.
    std::size_t representative_index(std::size_t i) const { return free_[i]; }

    Vector project(const Vector& v) const
    {
        Vector r = killed_.reduce(v);
        Vector c(free_.size());
        for (std::size_t i = 0; i < free_.size(); ++i) c[i] = r[free_[i]];
        return c;
    }

    Vector lift(const Vector& c) const
    {
        if (c.size() != free_.size()) throw std::invalid_argument("QuotientSpace::lift: dimension mismatch");
        Vector v = zero_vector(ambient_);
        for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = c[i];
        return v;
    }

    Matrix coset_reps() const
    {
        Matrix m(free_.size(), ambient_);
        for (std::size_t i = 0; i < free_.size(); ++i) m(i, free_[i]) = 1;
        return m;
    }

    Matrix project_matrix() const
    {
        Matrix m(free_.size(), ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) m.set_column(j, project(unit_vector(ambient_, j)));
        return m;
    }

    Matrix lift_matrix() const { return coset_reps().transpose(); }

private:
    std::size_t ambient_ = 0;
    Subspace killed_;
    std::vector<std::size_t> free_;
};

inline QuotientSpace quotient_by(std::size_t ambient_dim, const Subspace& killed)
{
    return QuotientSpace(ambient_dim, killed);
}

} // namespace hla
