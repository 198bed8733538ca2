#pragma once

#include "hla/linalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hla {

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return (a == b) ? Parity::even : Parity::odd;
}

/// Ordered even and odd basis names. Global index order is evens first.
struct GradedBasis {
    std::vector<std::string> even;
    std::vector<std::string> odd;

    std::size_t d0() const { return even.size(); }
    std::size_t d1() const { return odd.size(); }
    std::size_t dim() const { return even.size() + odd.size(); }

    Parity parity(std::size_t global) const { return global < d0() ? Parity::even : Parity::odd; }
    const std::string& name(std::size_t global) const { return global < d0() ? even[global] : odd[global - d0()]; }

    std::optional<std::size_t> index_of(const std::string& n) const
    {
        for (std::size_t i = 0; i < dim(); ++i)
            if (name(i) == n) return i;
        return std::nullopt;
    }

    friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

/// Dense rank-3 array of structure constants, T(i, j, k) = coefficient of
/// basis vector k in the product of basis vectors i and j.
class StructureTensor {
public:
    StructureTensor() = default;
    StructureTensor(std::size_t n0, std::size_t n1, std::size_t n2)
        : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, Scalar(0))
    {
    }

    std::size_t extent(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n1_ + j) * n2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * n1_ + j) * n2_ + k];
    }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
    std::vector<Scalar> data_;
};

/// A finite-dimensional Hom-Lie antialgebra given by structure constants.
///
/// even_even(i,j,k): e_i . e_j in a0, even_odd(i,j,k): e_i . f_j in a1,
/// bracket(i,j,k): [f_i, f_j] in a0. Twists act on column vectors
/// (alpha: a0 -> a0, beta: a1 -> a1). Construction rejects tables that are
/// not supercommutative; the defining identities are checked separately by
/// verify_axioms.
class HomLieAntialgebra {
public:
    HomLieAntialgebra() = default;

    HomLieAntialgebra(GradedBasis basis, StructureTensor even_even, StructureTensor even_odd,
                      StructureTensor bracket, Matrix alpha, Matrix beta)
        : basis_(std::move(basis)), c00_(std::move(even_even)), c01_(std::move(even_odd)), c11_(std::move(bracket)),
          alpha_(std::move(alpha)), beta_(std::move(beta))
    {
        validate();
        build_table();
    }

    static HomLieAntialgebra zero(GradedBasis basis, Matrix alpha, Matrix beta)
    {
        const std::size_t d0 = basis.d0(), d1 = basis.d1();
        return HomLieAntialgebra(std::move(basis), StructureTensor(d0, d0, d0), StructureTensor(d0, d1, d1),
                                 StructureTensor(d1, d1, d0), std::move(alpha), std::move(beta));
    }

    const GradedBasis& basis() const { return basis_; }
    std::size_t d0() const { return basis_.d0(); }
    std::size_t d1() const { return basis_.d1(); }
    std::size_t dim() const { return basis_.dim(); }

    const StructureTensor& even_even() const { return c00_; }
    const StructureTensor& even_odd() const { return c01_; }
    const StructureTensor& bracket() const { return c11_; }
    const Matrix& alpha() const { return alpha_; }
    const Matrix& beta() const { return beta_; }
    /// alpha (+) beta on the whole space.
    const Matrix& twist() const { return twist_; }

    /// Product of global basis vectors i and j, as a global coordinate vector.
    const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    /// Bilinear extension of the supercommutative product. Odd times odd is
    /// the bracket.
    Vector product(const Vector& u, const Vector& v) const
    {
        check(u);
        check(v);
        Vector out = zero_vector(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(u[i])) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (is_zero(v[j])) continue;
                axpy(u[i] * v[j], product(i, j), out);
            }
        }
        return out;
    }

    Vector twist(const Vector& u) const { return twist_ * u; }

    /// Matrix of w -> e_i . w on the whole space.
    Matrix left_multiplication(std::size_t i) const
    {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, product(i, j));
        return m;
    }

    Vector unit(std::size_t global) const { return unit_vector(dim(), global); }
    Vector embed_even(const Vector& x) const
    {
        Vector v = zero_vector(dim());
        for (std::size_t i = 0; i < d0(); ++i) v[i] = x.at(i);
        return v;
    }
    Vector embed_odd(const Vector& y) const
    {
        Vector v = zero_vector(dim());
        for (std::size_t i = 0; i < d1(); ++i) v[d0() + i] = y.at(i);
        return v;
    }
    Vector even_part(const Vector& v) const { return Vector(v.begin(), v.begin() + static_cast<long>(d0())); }
    Vector odd_part(const Vector& v) const { return Vector(v.begin() + static_cast<long>(d0()), v.end()); }

    friend bool operator==(const HomLieAntialgebra& a, const HomLieAntialgebra& b)
    {
        return a.basis_ == b.basis_ && a.c00_ == b.c00_ && a.c01_ == b.c01_ && a.c11_ == b.c11_ &&
               a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

    /// Same structure constants and twists, basis names ignored.
    bool same_structure(const HomLieAntialgebra& o) const
    {
        return d0() == o.d0() && d1() == o.d1() && c00_ == o.c00_ && c01_ == o.c01_ && c11_ == o.c11_ &&
               alpha_ == o.alpha_ && beta_ == o.beta_;
    }

private:
    void check(const Vector& v) const
    {
        if (v.size() != dim()) throw std::invalid_argument("element has wrong dimension");
    }

    void validate() const
    {
        const std::size_t d0 = basis_.d0(), d1 = basis_.d1();
        if (d0 + d1 == 0) throw std::invalid_argument("algebra must have at least one basis vector");
        for (std::size_t i = 0; i < basis_.dim(); ++i)
            for (std::size_t j = i + 1; j < basis_.dim(); ++j)
                if (basis_.name(i) == basis_.name(j))
                    throw std::invalid_argument("duplicate basis name '" + basis_.name(i) + "'");
        auto shape = [](const StructureTensor& t, std::size_t a, std::size_t b, std::size_t c) {
            return t.extent(0) == a && t.extent(1) == b && t.extent(2) == c;
        };
        if (!shape(c00_, d0, d0, d0) || !shape(c01_, d0, d1, d1) || !shape(c11_, d1, d1, d0))
            throw std::invalid_argument("structure tensor shape does not match the basis");
        if (alpha_.rows() != d0 || alpha_.cols() != d0 || beta_.rows() != d1 || beta_.cols() != d1)
            throw std::invalid_argument("twist shape does not match the basis");
        for (std::size_t i = 0; i < d0; ++i)
            for (std::size_t j = 0; j < d0; ++j)
                for (std::size_t k = 0; k < d0; ++k)
                    if (c00_(i, j, k) != c00_(j, i, k))
                        throw std::invalid_argument("even product is not symmetric at (" + basis_.even[i] + "," +
                                                    basis_.even[j] + ")");
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t k = 0; k < d0; ++k)
                    if (c11_(i, j, k) != -c11_(j, i, k))
                        throw std::invalid_argument("bracket is not antisymmetric at (" + basis_.odd[i] + "," +
                                                    basis_.odd[j] + ")");
    }

    void build_table()
    {
        const std::size_t n = dim(), d0 = basis_.d0(), d1 = basis_.d1();
        table_.assign(n * n, zero_vector(n));
        for (std::size_t i = 0; i < d0; ++i)
            for (std::size_t j = 0; j < d0; ++j)
                for (std::size_t k = 0; k < d0; ++k) table_[i * n + j][k] = c00_(i, j, k);
        for (std::size_t i = 0; i < d0; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t k = 0; k < d1; ++k) {
                    table_[i * n + d0 + j][d0 + k] = c01_(i, j, k);
                    table_[(d0 + j) * n + i][d0 + k] = c01_(i, j, k);
                }
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t k = 0; k < d0; ++k) table_[(d0 + i) * n + d0 + j][k] = c11_(i, j, k);
        twist_ = block_diagonal(alpha_, beta_);
    }

    GradedBasis basis_;
    StructureTensor c00_, c01_, c11_;
    Matrix alpha_, beta_;
    Matrix twist_;
    std::vector<Vector> table_;
};

/// Grade-preserving linear map given by its even and odd blocks.
struct GradedMorphism {
    Matrix even; ///< source a0 -> target a0
    Matrix odd;  ///< source a1 -> target a1

    Matrix as_matrix() const { return block_diagonal(even, odd); }
    Vector apply(const Vector& v) const { return as_matrix() * v; }

    static GradedMorphism identity(const HomLieAntialgebra& a)
    {
        return {Matrix::identity(a.d0()), Matrix::identity(a.d1())};
    }
    static GradedMorphism zero(const HomLieAntialgebra& from, const HomLieAntialgebra& to)
    {
        return {Matrix(to.d0(), from.d0()), Matrix(to.d1(), from.d1())};
    }
    /// Splits a global block-diagonal map.
    static GradedMorphism from_matrix(const Matrix& m, std::size_t src_d0, std::size_t tgt_d0)
    {
        GradedMorphism g{Matrix(tgt_d0, src_d0), Matrix(m.rows() - tgt_d0, m.cols() - src_d0)};
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                bool ti = i < tgt_d0, sj = j < src_d0;
                if (ti && sj) g.even(i, j) = m(i, j);
                else if (!ti && !sj) g.odd(i - tgt_d0, j - src_d0) = m(i, j);
                else if (!is_zero(m(i, j))) throw std::invalid_argument("map is not grade-preserving");
            }
        return g;
    }

    friend bool operator==(const GradedMorphism&, const GradedMorphism&) = default;
};

inline GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f)
{
    return {g.even * f.even, g.odd * f.odd};
}

inline void check_morphism_shape(const HomLieAntialgebra& src, const HomLieAntialgebra& tgt, const GradedMorphism& f)
{
    if (f.even.rows() != tgt.d0() || f.even.cols() != src.d0() || f.odd.rows() != tgt.d1() ||
        f.odd.cols() != src.d1())
        throw std::invalid_argument("morphism blocks do not match the source/target dimensions");
}

/// A pair of subspaces (of a0, of a1).
struct GradedSubspacePair {
    Subspace even;
    Subspace odd;

    std::size_t dim() const { return even.dim() + odd.dim(); }
    friend bool operator==(const GradedSubspacePair&, const GradedSubspacePair&) = default;

    static GradedSubspacePair zero(const HomLieAntialgebra& a)
    {
        return {Subspace::zero(a.d0()), Subspace::zero(a.d1())};
    }
    static GradedSubspacePair full(const HomLieAntialgebra& a)
    {
        return {Subspace::full(a.d0()), Subspace::full(a.d1())};
    }
};

/// Incremental construction by basis names. Setting a product also sets its
/// supercommutative mirror.
class AlgebraBuilder {
public:
    AlgebraBuilder(std::vector<std::string> even, std::vector<std::string> odd)
        : basis_{std::move(even), std::move(odd)}, c00_(basis_.d0(), basis_.d0(), basis_.d0()),
          c01_(basis_.d0(), basis_.d1(), basis_.d1()), c11_(basis_.d1(), basis_.d1(), basis_.d0()),
          alpha_(basis_.d0(), basis_.d0()), beta_(basis_.d1(), basis_.d1())
    {
    }

    const GradedBasis& basis() const { return basis_; }

    /// Sets p . q (or [p, q]) = sum of coefficient * name.
    AlgebraBuilder& product(const std::string& p, const std::string& q,
                            const std::vector<std::pair<std::string, Scalar>>& value)
    {
        std::size_t i = index(p), j = index(q);
        const std::size_t d0 = basis_.d0();
        bool ei = i < d0, ej = j < d0;
        if (!ei && ej) {
            std::swap(i, j);
            std::swap(ei, ej);
        }
        for (const auto& [name, c] : value) {
            std::size_t k = index(name);
            bool ek = k < d0;
            if (ei && ej) {
                if (!ek) throw std::invalid_argument("even product must land in the even part");
                c00_(i, j, k) = c;
                c00_(j, i, k) = c;
            } else if (ei) {
                if (ek) throw std::invalid_argument("even-odd product must land in the odd part");
                c01_(i, j - d0, k - d0) = c;
            } else {
                if (!ek) throw std::invalid_argument("bracket must land in the even part");
                if (i == j && !is_zero(c)) throw std::invalid_argument("bracket [y,y] must vanish");
                c11_(i - d0, j - d0, k) = c;
                c11_(j - d0, i - d0, k) = -c;
            }
        }
        return *this;
    }

    AlgebraBuilder& twist(const std::string& p, const std::vector<std::pair<std::string, Scalar>>& value)
    {
        std::size_t i = index(p);
        const std::size_t d0 = basis_.d0();
        for (const auto& [name, c] : value) {
            std::size_t k = index(name);
            if ((i < d0) != (k < d0)) throw std::invalid_argument("twist must preserve parity");
            if (i < d0) alpha_(k, i) = c;
            else beta_(k - d0, i - d0) = c;
        }
        return *this;
    }

    AlgebraBuilder& identity_twists()
    {
        alpha_ = Matrix::identity(basis_.d0());
        beta_ = Matrix::identity(basis_.d1());
        return *this;
    }

    HomLieAntialgebra build() const { return HomLieAntialgebra(basis_, c00_, c01_, c11_, alpha_, beta_); }

private:
    std::size_t index(const std::string& n) const
    {
        auto i = basis_.index_of(n);
        if (!i) throw std::invalid_argument("undeclared basis name '" + n + "'");
        return *i;
    }

    GradedBasis basis_;
    StructureTensor c00_, c01_, c11_;
    Matrix alpha_, beta_;
};

/// Structure tensors and twists read off from a global product table.
/// `table(i, j)` must return the global coordinates of e_i . e_j.
template <class TableFn>
HomLieAntialgebra algebra_from_table(GradedBasis basis, TableFn&& table, const Matrix& twist)
{
    const std::size_t d0 = basis.d0(), d1 = basis.d1();
    StructureTensor c00(d0, d0, d0), c01(d0, d1, d1), c11(d1, d1, d0);
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d0; ++j) {
            Vector v = table(i, j);
            for (std::size_t k = 0; k < d0; ++k) c00(i, j, k) = v[k];
            for (std::size_t k = 0; k < d1; ++k)
                if (!is_zero(v[d0 + k])) throw std::invalid_argument("even product has an odd component");
        }
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d1; ++j) {
            Vector v = table(i, d0 + j);
            for (std::size_t k = 0; k < d1; ++k) c01(i, j, k) = v[d0 + k];
            for (std::size_t k = 0; k < d0; ++k)
                if (!is_zero(v[k])) throw std::invalid_argument("even-odd product has an even component");
        }
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) {
            Vector v = table(d0 + i, d0 + j);
            for (std::size_t k = 0; k < d0; ++k) c11(i, j, k) = v[k];
            for (std::size_t k = 0; k < d1; ++k)
                if (!is_zero(v[d0 + k])) throw std::invalid_argument("bracket has an odd component");
        }
    GradedMorphism tw = GradedMorphism::from_matrix(twist, d0, d0);
    return HomLieAntialgebra(std::move(basis), std::move(c00), std::move(c01), std::move(c11), std::move(tw.even),
                             std::move(tw.odd));
}

} // namespace hla
