#pragma once

#include "hla/algebra.hpp"
#include "hla/checks.hpp"
#include "hla/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

// ---------------------------------------------------------------------------
// Chain side: tensor powers indexed by global basis indices, (i, j) -> i n + j
// and (i, j, k) -> (i n + j) n + k.

inline Vector tensor(const Vector& u, const Vector& v)
{
    Vector t = zero_vector(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) t[i * v.size() + j] = u[i] * v[j];
    }
    return t;
}

/// Multiplication a (x) a -> a. y (x) x goes to x . y.
inline Matrix d2_chain_matrix(const HomLieAntialgebra& a)
{
    const std::size_t n = a.dim();
    Matrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, a.product(i, j));
    return m;
}

/// The image under d3 of one basis 3-tensor. Signatures other than
/// (x,x,x), (x,x,y), (x,y,y), (y,y,y) map to zero.
inline Vector d3_chain_column(const HomLieAntialgebra& a, std::size_t i, std::size_t j, std::size_t k)
{
    const auto& b = a.basis();
    auto tw = [&](std::size_t g) { return a.twist(a.unit(g)); };
    const Parity pi = b.parity(i), pj = b.parity(j), pk = b.parity(k);
    const Parity E = Parity::even, O = Parity::odd;
    if (pi == E && pj == E && pk == E) return tensor(tw(i), a.product(j, k)) - tensor(a.product(i, j), tw(k));
    if (pi == E && pj == E && pk == O)
        return tensor(tw(i), a.product(j, k)) - Scalar(1, 2) * tensor(a.product(i, j), tw(k));
    if (pi == E && pj == O && pk == O)
        return tensor(tw(i), a.product(j, k)) - tensor(a.product(i, j), tw(k)) - tensor(tw(j), a.product(i, k));
    if (pi == O && pj == O && pk == O)
        return tensor(tw(i), a.product(j, k)) + tensor(tw(j), a.product(k, i)) + tensor(tw(k), a.product(i, j));
    return zero_vector(a.dim() * a.dim());
}

inline Matrix d3_chain_matrix(const HomLieAntialgebra& a)
{
    const std::size_t n = a.dim();
    Matrix m(n * n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.set_column((i * n + j) * n + k, d3_chain_column(a, i, j, k));
    return m;
}

/// x1(x)x2 - x2(x)x1, x(x)y - y(x)x, y1(x)y2 + y2(x)y1 over basis pairs.
inline std::vector<Vector> symmetrizers(const HomLieAntialgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const bool both_odd = a.basis().parity(i) == Parity::odd && a.basis().parity(j) == Parity::odd;
            Vector v = zero_vector(n * n);
            v[i * n + j] += 1;
            v[j * n + i] += both_odd ? Scalar(1) : Scalar(-1);
            if (!is_zero(std::span<const Scalar>(v))) out.push_back(std::move(v));
        }
    return out;
}

struct IaOptions {
    bool include_symmetrizers = true;
    bool include_d3_image = true;
};

/// Relations of the universal central extension: the symmetrizers plus the
/// image of d3. Throws std::logic_error if the span leaves ker d2.
inline Subspace build_ia(const HomLieAntialgebra& a, IaOptions opts = {})
{
    const std::size_t n = a.dim();
    std::vector<Vector> gens;
    if (opts.include_symmetrizers) gens = symmetrizers(a);
    if (opts.include_d3_image) {
        Subspace im = image_basis(d3_chain_matrix(a));
        for (std::size_t r = 0; r < im.dim(); ++r) gens.push_back(im.basis_vector(r));
    }
    Subspace ia = Subspace::span(n * n, gens);
    const Matrix d2 = d2_chain_matrix(a);
    for (std::size_t r = 0; r < ia.dim(); ++r)
        if (!is_zero(std::span<const Scalar>(d2 * ia.basis().row(r))))
            throw std::logic_error("relation space is not contained in ker d2; the algebra violates its axioms");
    return ia;
}

struct H2Homology {
    std::size_t dim = 0;          ///< dim ker d2 / I_a
    std::size_t dim_mod_im_d3 = 0; ///< dim ker d2 / im d3
    std::size_t rank_d2 = 0;
    std::size_t rank_d3 = 0;
    Subspace ker_d2;
    Subspace ia;
    QuotientSpace tensor_mod_ia;   ///< (a (x) a) / I_a
    Subspace classes;              ///< image of ker d2 in quotient coordinates
    std::vector<Vector> representatives; ///< tensors lifting a basis of `classes`
};

inline H2Homology h2_homology(const HomLieAntialgebra& a)
{
    H2Homology h;
    const std::size_t nn = a.dim() * a.dim();
    const Matrix d2 = d2_chain_matrix(a);
    const Matrix d3 = d3_chain_matrix(a);
    h.ker_d2 = kernel_basis(d2);
    h.rank_d2 = nn - h.ker_d2.dim();
    h.rank_d3 = rank(d3);
    h.ia = build_ia(a);
    if (!h.ker_d2.contains(h.ia)) throw std::logic_error("I_a not inside ker d2");
    h.tensor_mod_ia = quotient_by(nn, h.ia);
    std::vector<Vector> imgs;
    for (std::size_t r = 0; r < h.ker_d2.dim(); ++r) imgs.push_back(h.tensor_mod_ia.project(h.ker_d2.basis_vector(r)));
    h.classes = Subspace::span(h.tensor_mod_ia.dim(), imgs);
    for (std::size_t r = 0; r < h.classes.dim(); ++r)
        h.representatives.push_back(h.tensor_mod_ia.lift(h.classes.basis_vector(r)));
    h.dim = h.ker_d2.dim() - h.ia.dim();
    h.dim_mod_im_d3 = h.ker_d2.dim() - h.rank_d3;
    if (h.dim != h.classes.dim()) throw std::logic_error("H2 dimension bookkeeping mismatch");
    return h;
}

// ---------------------------------------------------------------------------
// Cochain side with values in a Hom-vector superspace V = V0 (+) V1.

/// Coefficient space with twists. The trivial coefficients use one even and
/// one odd copy of the ground field so that every cochain component is
/// scalar-valued.
struct CoefficientSpace {
    GradedBasis basis;
    Matrix alpha; ///< on V0
    Matrix beta;  ///< on V1

    std::size_t m0() const { return basis.d0(); }
    std::size_t m1() const { return basis.d1(); }

    static CoefficientSpace trivial()
    {
        return {GradedBasis{{"1"}, {"1'"}}, Matrix::identity(1), Matrix::identity(1)};
    }
};

/// Layout of cochain coordinates for a given algebra and coefficient space.
///
/// 1-cochains: v0(i)[c] for i in a0, c in V0; then v1(j)[c] for j in a1, c in V1.
/// 2-cochains: w0(i,j)[c] (a0 x a0 -> V0), w1(i,j)[c] (a0 x a1 -> V1),
///             w2(i,j)[c] (a1 x a1 -> V0).
/// 3-cochains: blocks (x,x,x)->V0, (x,x,y)->V1, (x,y,y)->V0, (y,y,y)->V1.
struct CochainLayout {
    std::size_t d0, d1, m0, m1;

    CochainLayout(const HomLieAntialgebra& a, const CoefficientSpace& v)
        : d0(a.d0()), d1(a.d1()), m0(v.m0()), m1(v.m1())
    {
    }

    std::size_t dim1() const { return d0 * m0 + d1 * m1; }
    std::size_t v0(std::size_t i, std::size_t c) const { return i * m0 + c; }
    std::size_t v1(std::size_t j, std::size_t c) const { return d0 * m0 + j * m1 + c; }

    std::size_t dim2() const { return d0 * d0 * m0 + d0 * d1 * m1 + d1 * d1 * m0; }
    std::size_t w0(std::size_t i, std::size_t j, std::size_t c) const { return (i * d0 + j) * m0 + c; }
    std::size_t w1(std::size_t i, std::size_t j, std::size_t c) const
    {
        return d0 * d0 * m0 + (i * d1 + j) * m1 + c;
    }
    std::size_t w2(std::size_t i, std::size_t j, std::size_t c) const
    {
        return d0 * d0 * m0 + d0 * d1 * m1 + (i * d1 + j) * m0 + c;
    }

    std::size_t dim3() const { return d0 * d0 * d0 * m0 + d0 * d0 * d1 * m1 + d0 * d1 * d1 * m0 + d1 * d1 * d1 * m1; }
    std::size_t t_xxx(std::size_t i, std::size_t j, std::size_t k, std::size_t c) const
    {
        return ((i * d0 + j) * d0 + k) * m0 + c;
    }
    std::size_t t_xxy(std::size_t i, std::size_t j, std::size_t k, std::size_t c) const
    {
        return d0 * d0 * d0 * m0 + ((i * d0 + j) * d1 + k) * m1 + c;
    }
    std::size_t t_xyy(std::size_t i, std::size_t j, std::size_t k, std::size_t c) const
    {
        return d0 * d0 * d0 * m0 + d0 * d0 * d1 * m1 + ((i * d1 + j) * d1 + k) * m0 + c;
    }
    std::size_t t_yyy(std::size_t i, std::size_t j, std::size_t k, std::size_t c) const
    {
        return d0 * d0 * d0 * m0 + d0 * d0 * d1 * m1 + d0 * d1 * d1 * m0 + ((i * d1 + j) * d1 + k) * m1 + c;
    }
};

/// V-valued 1-cochain: v0 is a V0 x a0 matrix, v1 a V1 x a1 matrix.
struct Cochain1 {
    Matrix v0;
    Matrix v1;
};

/// V-valued 2-cochain (w0, w1, w2). Entry w0[i * d0 + j] is w0(e_i, e_j) in
/// V0, w1[i * d1 + j] is w1(e_i, f_j) in V1, w2[i * d1 + j] is w2(f_i, f_j)
/// in V0.
struct Cocycle2 {
    CoefficientSpace coefficients;
    std::size_t d0 = 0, d1 = 0;
    std::vector<Vector> w0, w1, w2;

    static Cocycle2 zero(const HomLieAntialgebra& a, CoefficientSpace v)
    {
        Cocycle2 w;
        w.d0 = a.d0();
        w.d1 = a.d1();
        w.w0.assign(w.d0 * w.d0, zero_vector(v.m0()));
        w.w1.assign(w.d0 * w.d1, zero_vector(v.m1()));
        w.w2.assign(w.d1 * w.d1, zero_vector(v.m0()));
        w.coefficients = std::move(v);
        return w;
    }

    Vector& omega0(std::size_t i, std::size_t j) { return w0[i * d0 + j]; }
    Vector& omega1(std::size_t i, std::size_t j) { return w1[i * d1 + j]; }
    Vector& omega2(std::size_t i, std::size_t j) { return w2[i * d1 + j]; }
    const Vector& omega0(std::size_t i, std::size_t j) const { return w0[i * d0 + j]; }
    const Vector& omega1(std::size_t i, std::size_t j) const { return w1[i * d1 + j]; }
    const Vector& omega2(std::size_t i, std::size_t j) const { return w2[i * d1 + j]; }

    friend bool operator==(const Cocycle2& a, const Cocycle2& b)
    {
        return a.d0 == b.d0 && a.d1 == b.d1 && a.w0 == b.w0 && a.w1 == b.w1 && a.w2 == b.w2 &&
               a.coefficients.basis == b.coefficients.basis && a.coefficients.alpha == b.coefficients.alpha &&
               a.coefficients.beta == b.coefficients.beta;
    }
};

inline void check_cocycle_shape(const HomLieAntialgebra& a, const Cocycle2& w)
{
    const auto m0 = w.coefficients.m0(), m1 = w.coefficients.m1();
    bool ok = w.d0 == a.d0() && w.d1 == a.d1() && w.w0.size() == a.d0() * a.d0() &&
              w.w1.size() == a.d0() * a.d1() && w.w2.size() == a.d1() * a.d1();
    for (const auto& v : w.w0) ok = ok && v.size() == m0;
    for (const auto& v : w.w1) ok = ok && v.size() == m1;
    for (const auto& v : w.w2) ok = ok && v.size() == m0;
    if (!ok) throw std::invalid_argument("cocycle dimensions do not match the algebra and coefficient space");
}

inline Vector cochain_coordinates(const HomLieAntialgebra& a, const Cocycle2& w)
{
    check_cocycle_shape(a, w);
    CochainLayout L(a, w.coefficients);
    Vector v = zero_vector(L.dim2());
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d0; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) v[L.w0(i, j, c)] = w.omega0(i, j)[c];
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t c = 0; c < L.m1; ++c) v[L.w1(i, j, c)] = w.omega1(i, j)[c];
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) v[L.w2(i, j, c)] = w.omega2(i, j)[c];
    return v;
}

inline Cocycle2 cocycle_from_coordinates(const HomLieAntialgebra& a, const CoefficientSpace& v, const Vector& x)
{
    CochainLayout L(a, v);
    if (x.size() != L.dim2()) throw std::invalid_argument("cochain coordinate vector has wrong length");
    Cocycle2 w = Cocycle2::zero(a, v);
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d0; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) w.omega0(i, j)[c] = x[L.w0(i, j, c)];
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t c = 0; c < L.m1; ++c) w.omega1(i, j)[c] = x[L.w1(i, j, c)];
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) w.omega2(i, j)[c] = x[L.w2(i, j, c)];
    return w;
}

inline Vector cochain_coordinates(const HomLieAntialgebra& a, const CoefficientSpace& v, const Cochain1& u)
{
    CochainLayout L(a, v);
    if (u.v0.rows() != L.m0 || u.v0.cols() != L.d0 || u.v1.rows() != L.m1 || u.v1.cols() != L.d1)
        throw std::invalid_argument("1-cochain dimensions do not match");
    Vector x = zero_vector(L.dim1());
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t c = 0; c < L.m0; ++c) x[L.v0(i, c)] = u.v0(c, i);
    for (std::size_t j = 0; j < L.d1; ++j)
        for (std::size_t c = 0; c < L.m1; ++c) x[L.v1(j, c)] = u.v1(c, j);
    return x;
}

inline Cochain1 cochain1_from_coordinates(const HomLieAntialgebra& a, const CoefficientSpace& v, const Vector& x)
{
    CochainLayout L(a, v);
    Cochain1 u{Matrix(L.m0, L.d0), Matrix(L.m1, L.d1)};
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t c = 0; c < L.m0; ++c) u.v0(c, i) = x[L.v0(i, c)];
    for (std::size_t j = 0; j < L.d1; ++j)
        for (std::size_t c = 0; c < L.m1; ++c) u.v1(c, j) = x[L.v1(j, c)];
    return u;
}

namespace detail {

/// Linear functionals on 2-cochain coordinates for w_k(u, v)[c] with u, v
/// given in block coordinates.
struct CochainEval {
    const CochainLayout& L;

    Vector w0(const Vector& u, const Vector& v, std::size_t c) const
    {
        Vector f = zero_vector(L.dim2());
        for (std::size_t i = 0; i < L.d0; ++i)
            for (std::size_t j = 0; j < L.d0; ++j)
                if (!is_zero(u[i]) && !is_zero(v[j])) f[L.w0(i, j, c)] += u[i] * v[j];
        return f;
    }
    /// u in a0, v in a1
    Vector w1(const Vector& u, const Vector& v, std::size_t c) const
    {
        Vector f = zero_vector(L.dim2());
        for (std::size_t i = 0; i < L.d0; ++i)
            for (std::size_t j = 0; j < L.d1; ++j)
                if (!is_zero(u[i]) && !is_zero(v[j])) f[L.w1(i, j, c)] += u[i] * v[j];
        return f;
    }
    Vector w2(const Vector& u, const Vector& v, std::size_t c) const
    {
        Vector f = zero_vector(L.dim2());
        for (std::size_t i = 0; i < L.d1; ++i)
            for (std::size_t j = 0; j < L.d1; ++j)
                if (!is_zero(u[i]) && !is_zero(v[j])) f[L.w2(i, j, c)] += u[i] * v[j];
        return f;
    }
};

} // namespace detail

/// d1 : C^1 -> C^2, d1 v(x1,x2) = v0(x1.x2), d1 v(x1,y1) = v1(x1.y1),
/// d1 v(y1,y2) = v0([y1,y2]).
inline Matrix d1_matrix(const HomLieAntialgebra& a, const CoefficientSpace& v = CoefficientSpace::trivial())
{
    CochainLayout L(a, v);
    Matrix m(L.dim2(), L.dim1());
    const std::size_t d0 = a.d0();
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d0; ++j) {
            const Vector& p = a.product(i, j);
            for (std::size_t k = 0; k < L.d0; ++k)
                for (std::size_t c = 0; c < L.m0; ++c) m(L.w0(i, j, c), L.v0(k, c)) = p[k];
        }
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d1; ++j) {
            const Vector& p = a.product(i, d0 + j);
            for (std::size_t k = 0; k < L.d1; ++k)
                for (std::size_t c = 0; c < L.m1; ++c) m(L.w1(i, j, c), L.v1(k, c)) = p[d0 + k];
        }
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = 0; j < L.d1; ++j) {
            const Vector& p = a.product(d0 + i, d0 + j);
            for (std::size_t k = 0; k < L.d0; ++k)
                for (std::size_t c = 0; c < L.m0; ++c) m(L.w2(i, j, c), L.v0(k, c)) = p[k];
        }
    return m;
}

/// d2 : C^2 -> C^3. In the w1 terms whose odd argument is written first,
/// the arguments are swapped so that w1 always reads (even, odd).
inline Matrix d2_matrix(const HomLieAntialgebra& a, const CoefficientSpace& v = CoefficientSpace::trivial())
{
    CochainLayout L(a, v);
    detail::CochainEval ev{L};
    Matrix m(L.dim3(), L.dim2());
    const Scalar half(1, 2);
    const std::size_t d0 = a.d0();
    auto E = [&](const Vector& g) { return a.even_part(g); };
    auto O = [&](const Vector& g) { return a.odd_part(g); };
    auto tw = [&](std::size_t g) { return a.twist(a.unit(g)); };
    auto set_row = [&](std::size_t r, const Vector& f) {
        for (std::size_t c = 0; c < f.size(); ++c) m(r, c) = f[c];
    };

    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d0; ++j)
            for (std::size_t k = 0; k < L.d0; ++k)
                for (std::size_t c = 0; c < L.m0; ++c)
                    set_row(L.t_xxx(i, j, k, c), ev.w0(E(tw(i)), E(a.product(j, k)), c) -
                                                     ev.w0(E(a.product(i, j)), E(tw(k)), c));
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d0; ++j)
            for (std::size_t k = 0; k < L.d1; ++k)
                for (std::size_t c = 0; c < L.m1; ++c) {
                    const std::size_t y = d0 + k;
                    set_row(L.t_xxy(i, j, k, c), ev.w1(E(tw(i)), O(a.product(j, y)), c) -
                                                     half * ev.w1(E(a.product(i, j)), O(tw(y)), c));
                }
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t k = 0; k < L.d1; ++k)
                for (std::size_t c = 0; c < L.m0; ++c) {
                    const std::size_t y1 = d0 + j, y2 = d0 + k;
                    set_row(L.t_xyy(i, j, k, c), ev.w0(E(tw(i)), E(a.product(y1, y2)), c) -
                                                     ev.w2(O(a.product(i, y1)), O(tw(y2)), c) -
                                                     ev.w2(O(tw(y1)), O(a.product(i, y2)), c));
                }
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = 0; j < L.d1; ++j)
            for (std::size_t k = 0; k < L.d1; ++k)
                for (std::size_t c = 0; c < L.m1; ++c) {
                    const std::size_t y1 = d0 + i, y2 = d0 + j, y3 = d0 + k;
                    set_row(L.t_yyy(i, j, k, c), ev.w1(E(a.product(y2, y3)), O(tw(y1)), c) +
                                                     ev.w1(E(a.product(y3, y1)), O(tw(y2)), c) +
                                                     ev.w1(E(a.product(y1, y2)), O(tw(y3)), c));
                }
    return m;
}

/// Coordinates of the supercommutativity constraints on 2-cochains:
/// w0(i,j) - w0(j,i) and w2(i,j) + w2(j,i), one row each.
inline Matrix symmetry_constraints(const HomLieAntialgebra& a, const CoefficientSpace& v)
{
    CochainLayout L(a, v);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = i + 1; j < L.d0; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) {
                Vector r = zero_vector(L.dim2());
                r[L.w0(i, j, c)] = 1;
                r[L.w0(j, i, c)] = -1;
                rows.push_back(std::move(r));
            }
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = i; j < L.d1; ++j)
            for (std::size_t c = 0; c < L.m0; ++c) {
                Vector r = zero_vector(L.dim2());
                r[L.w2(i, j, c)] += 1;
                r[L.w2(j, i, c)] += 1;
                rows.push_back(std::move(r));
            }
    return Matrix::from_rows(L.dim2(), rows);
}

namespace detail {

inline std::string cocycle_condition_name(const CochainLayout& L, std::size_t row, std::vector<std::size_t>& args,
                                          std::size_t& component)
{
    const std::size_t b1 = L.d0 * L.d0 * L.d0 * L.m0;
    const std::size_t b2 = b1 + L.d0 * L.d0 * L.d1 * L.m1;
    const std::size_t b3 = b2 + L.d0 * L.d1 * L.d1 * L.m0;
    auto split = [&](std::size_t r, std::size_t n1, std::size_t n2, std::size_t n3, std::size_t m) {
        component = r % m;
        r /= m;
        std::size_t k = r % n3;
        r /= n3;
        std::size_t j = r % n2;
        std::size_t i = r / n2;
        (void)n1;
        args = {i, j, k};
    };
    if (row < b1) {
        split(row, L.d0, L.d0, L.d0, L.m0);
        return "cocycle1";
    }
    if (row < b2) {
        split(row - b1, L.d0, L.d0, L.d1, L.m1);
        args[2] += L.d0;
        return "cocycle2";
    }
    if (row < b3) {
        split(row - b2, L.d0, L.d1, L.d1, L.m0);
        args[1] += L.d0;
        args[2] += L.d0;
        return "cocycle3";
    }
    split(row - b3, L.d1, L.d1, L.d1, L.m1);
    for (auto& x : args) x += L.d0;
    return "cocycle4";
}

} // namespace detail

/// The four cocycle conditions (and the supercommutativity of w0, w2) on
/// all basis tuples. Witness values are in V coordinates: lhs is the
/// condition's value, rhs is 0.
inline Check check_cocycle(const HomLieAntialgebra& a, const Cocycle2& w)
{
    check_cocycle_shape(a, w);
    Check check{"cocycle", Status::pass, {}, {}};
    CochainLayout L(a, w.coefficients);
    const Vector x = cochain_coordinates(a, w);

    for (std::size_t i = 0; i < L.d0; ++i)
        for (std::size_t j = i + 1; j < L.d0; ++j)
            if (w.omega0(i, j) != w.omega0(j, i)) {
                check.status = Status::fail;
                check.witnesses.push_back(
                    detail::make_witness(a, "w0-symmetry", {i, j}, w.omega0(i, j), w.omega0(j, i)));
            }
    for (std::size_t i = 0; i < L.d1; ++i)
        for (std::size_t j = i; j < L.d1; ++j)
            if (w.omega2(i, j) != Scalar(-1) * w.omega2(j, i)) {
                check.status = Status::fail;
                check.witnesses.push_back(detail::make_witness(a, "w2-antisymmetry", {L.d0 + i, L.d0 + j},
                                                               w.omega2(i, j), Scalar(-1) * w.omega2(j, i)));
            }

    const Vector values = d2_matrix(a, w.coefficients) * x;
    // group by (condition, tuple) so each witness carries a whole V-vector
    std::vector<std::size_t> args;
    std::size_t comp = 0;
    std::size_t r = 0;
    while (r < values.size()) {
        std::string name = detail::cocycle_condition_name(L, r, args, comp);
        const std::size_t m = (name == "cocycle1" || name == "cocycle3") ? L.m0 : L.m1;
        Vector val(values.begin() + static_cast<long>(r), values.begin() + static_cast<long>(r + m));
        if (!is_zero(std::span<const Scalar>(val))) {
            check.status = Status::fail;
            Witness wt{name, {}, val, zero_vector(m)};
            for (auto g : args) wt.arguments.push_back(a.basis().name(g));
            check.witnesses.push_back(std::move(wt));
        }
        r += m;
    }
    return check;
}

inline bool is_cocycle_with_coeffs(const HomLieAntialgebra& a, const Cocycle2& w) { return check_cocycle(a, w).passed(); }

/// d1 applied to a V-valued 1-cochain.
inline Cocycle2 coboundary(const HomLieAntialgebra& a, const CoefficientSpace& v, const Cochain1& u)
{
    return cocycle_from_coordinates(a, v, d1_matrix(a, v) * cochain_coordinates(a, v, u));
}

/// A 1-cochain u with d1 u = w, if one exists (free coordinates set to 0).
inline std::optional<Cochain1> is_coboundary_with_coeffs(const HomLieAntialgebra& a, const Cocycle2& w)
{
    auto sol = solve_linear(d1_matrix(a, w.coefficients), cochain_coordinates(a, w));
    if (!sol) return std::nullopt;
    return cochain1_from_coordinates(a, w.coefficients, *sol);
}

struct H2Cohomology {
    std::size_t dim = 0;
    std::size_t dim_cocycles = 0;    ///< ker d2 restricted to supercommutative cochains
    std::size_t dim_ker_d2 = 0;      ///< ker d2 on all cochain coordinates
    std::size_t rank_d1 = 0;
    std::size_t rank_d2 = 0;
    std::vector<Cocycle2> representatives;
};

/// H^2 = Z^2 / B^2 where Z^2 is ker d2 on supercommutative 2-cochains.
inline H2Cohomology h2_cohomology(const HomLieAntialgebra& a, const CoefficientSpace& v = CoefficientSpace::trivial())
{
    H2Cohomology h;
    const Matrix d1 = d1_matrix(a, v);
    const Matrix d2 = d2_matrix(a, v);
    const Matrix sym = symmetry_constraints(a, v);
    const Subspace ker_d2 = kernel_basis(d2);
    const Subspace cocycles = kernel_basis(vstack(d2, sym));
    const Subspace boundaries = image_basis(d1);
    if (!cocycles.contains(boundaries)) throw std::logic_error("coboundaries are not cocycles; d2 d1 != 0");
    h.dim_ker_d2 = ker_d2.dim();
    h.dim_cocycles = cocycles.dim();
    h.rank_d1 = boundaries.dim();
    h.rank_d2 = d2.cols() - ker_d2.dim();
    h.dim = cocycles.dim() - boundaries.dim();
    QuotientSpace q = quotient_by(d1.rows(), boundaries);
    std::vector<Vector> imgs;
    for (std::size_t r = 0; r < cocycles.dim(); ++r) imgs.push_back(q.project(cocycles.basis_vector(r)));
    Subspace classes = Subspace::span(q.dim(), imgs);
    for (std::size_t r = 0; r < classes.dim(); ++r)
        h.representatives.push_back(cocycle_from_coordinates(a, v, q.lift(classes.basis_vector(r))));
    return h;
}

inline H2Cohomology h2_cohomology_trivial(const HomLieAntialgebra& a) { return h2_cohomology(a); }

} // namespace hla
