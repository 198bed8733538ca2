#pragma once

#include "hla/algebra.hpp"
#include "hla/checks.hpp"
#include "hla/homology.hpp"
#include "hla/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

/// 0 -> V -> total -> base -> 0. The kernel space carries its twists; its
/// products are those of total restricted to im(inclusion).
struct CentralExtension {
    HomLieAntialgebra base;
    CoefficientSpace kernel;
    HomLieAntialgebra total;
    GradedMorphism inclusion;  ///< V -> total
    GradedMorphism projection; ///< total -> base
};

/// Thrown by constructors whose input fails a defining check; carries the
/// failing check with its witnesses.
class CheckFailure : public std::runtime_error {
public:
    CheckFailure(const std::string& what, Check check) : std::runtime_error(what), check_(std::move(check)) {}
    const Check& check() const { return check_; }

private:
    Check check_;
};

/// V viewed as an abelian algebra with its twists; nullopt when V = 0.
inline std::optional<HomLieAntialgebra> abelian_algebra(const CoefficientSpace& v)
{
    if (v.basis.dim() == 0) return std::nullopt;
    return HomLieAntialgebra::zero(v.basis, v.alpha, v.beta);
}

/// a (+)_w V with the extension products. No cocycle check: used both by the
/// checked constructor and to test the lemma in the failing direction.
inline HomLieAntialgebra twisted_sum(const HomLieAntialgebra& a, const Cocycle2& w)
{
    check_cocycle_shape(a, w);
    const CoefficientSpace& V = w.coefficients;
    const std::size_t d0 = a.d0(), d1 = a.d1(), m0 = V.m0(), m1 = V.m1();
    std::vector<std::string> taken = a.basis().even;
    taken.insert(taken.end(), a.basis().odd.begin(), a.basis().odd.end());
    auto ve = detail::disjoint_names(taken, V.basis.even, {});
    auto vo = detail::disjoint_names(taken, V.basis.odd, ve);
    GradedBasis basis{a.basis().even, a.basis().odd};
    basis.even.insert(basis.even.end(), ve.begin(), ve.end());
    basis.odd.insert(basis.odd.end(), vo.begin(), vo.end());

    const std::size_t D0 = d0 + m0, N = basis.dim();
    auto table = [&](std::size_t i, std::size_t j) {
        Vector out = zero_vector(N);
        const bool ia = i < d0 || (i >= D0 && i < D0 + d1);
        const bool ja = j < d0 || (j >= D0 && j < D0 + d1);
        if (!ia || !ja) return out;
        const std::size_t gi = i < d0 ? i : d0 + (i - D0), gj = j < d0 ? j : d0 + (j - D0);
        const Vector& p = a.product(gi, gj);
        for (std::size_t k = 0; k < d0; ++k) out[k] = p[k];
        for (std::size_t k = 0; k < d1; ++k) out[D0 + k] = p[d0 + k];
        const bool ei = gi < d0, ej = gj < d0;
        if (ei && ej)
            for (std::size_t c = 0; c < m0; ++c) out[d0 + c] = w.omega0(gi, gj)[c];
        else if (ei != ej) {
            const std::size_t x = ei ? gi : gj, y = (ei ? gj : gi) - d0;
            for (std::size_t c = 0; c < m1; ++c) out[D0 + d1 + c] = w.omega1(x, y)[c];
        } else
            for (std::size_t c = 0; c < m0; ++c) out[d0 + c] = w.omega2(gi - d0, gj - d0)[c];
        return out;
    };
    Matrix twist = block_diagonal(block_diagonal(a.alpha(), V.alpha), block_diagonal(a.beta(), V.beta));
    return algebra_from_table(std::move(basis), table, twist);
}

/// Central extension of a by V along the 2-cocycle w. Throws CheckFailure
/// naming the violated cocycle condition when w is not a cocycle.
inline CentralExtension central_extension_from_cocycle(const HomLieAntialgebra& a, const Cocycle2& w)
{
    Check c = check_cocycle(a, w);
    if (!c.passed()) {
        const auto& wt = c.witnesses.front();
        std::string args;
        for (const auto& s : wt.arguments) args += (args.empty() ? "" : ",") + s;
        throw CheckFailure("not a 2-cocycle: (" + wt.identity + ") fails at (" + args + ")", std::move(c));
    }
    const CoefficientSpace& V = w.coefficients;
    const std::size_t d0 = a.d0(), d1 = a.d1(), m0 = V.m0(), m1 = V.m1();
    CentralExtension e{a, V, twisted_sum(a, w), {}, {}};
    e.inclusion.even = Matrix(d0 + m0, m0);
    e.inclusion.odd = Matrix(d1 + m1, m1);
    for (std::size_t c0 = 0; c0 < m0; ++c0) e.inclusion.even(d0 + c0, c0) = 1;
    for (std::size_t c1 = 0; c1 < m1; ++c1) e.inclusion.odd(d1 + c1, c1) = 1;
    e.projection.even = Matrix(d0, d0 + m0);
    e.projection.odd = Matrix(d1, d1 + m1);
    for (std::size_t i = 0; i < d0; ++i) e.projection.even(i, i) = 1;
    for (std::size_t j = 0; j < d1; ++j) e.projection.odd(j, j) = 1;
    return e;
}

/// Exactness, homomorphism property of i and pi, and im(i) inside the
/// center of the total algebra.
inline Report verify_central_extension(const CentralExtension& e)
{
    Report r;
    const auto& T = e.total;
    check_morphism_shape(T, e.base, e.projection);
    if (e.inclusion.even.rows() != T.d0() || e.inclusion.odd.rows() != T.d1() ||
        e.inclusion.even.cols() != e.kernel.m0() || e.inclusion.odd.cols() != e.kernel.m1())
        throw std::invalid_argument("inclusion does not match kernel and total dimensions");

    const Matrix pi = e.projection.as_matrix(), inc = e.inclusion.as_matrix();
    const Subspace im_i = image_basis(inc), ker_pi = kernel_basis(pi);
    r.add("pi-surjective", rank(pi) == e.base.dim());
    r.add("i-injective", im_i.dim() == e.kernel.basis.dim());
    r.add("exactness", im_i == ker_pi, "im i = ker pi");
    r.add(check_homomorphism(T, e.base, e.projection)).name = "pi-homomorphism";
    if (auto v = abelian_algebra(e.kernel)) r.add(check_homomorphism(*v, T, e.inclusion)).name = "i-homomorphism";
    else r.add("i-homomorphism", true, "kernel is zero");

    const GradedSubspacePair z = center(T);
    Check central{"centrality", Status::pass, {}, {}};
    for (std::size_t c = 0; c < inc.cols(); ++c) {
        Vector v = inc.column(c);
        bool ok = z.even.contains(T.even_part(v)) && z.odd.contains(T.odd_part(v));
        if (!ok) {
            central.status = Status::fail;
            // name the first nonzero product against a basis vector
            for (std::size_t g = 0; g < T.dim(); ++g) {
                Vector p = T.product(v, T.unit(g));
                if (!is_zero(std::span<const Scalar>(p))) {
                    central.witnesses.push_back(
                        Witness{"central", {e.kernel.basis.name(c), T.basis().name(g)}, p, zero_vector(T.dim())});
                    break;
                }
            }
        }
    }
    r.add(std::move(central));
    r.dimension("base", static_cast<long>(e.base.dim()));
    r.dimension("kernel", static_cast<long>(e.kernel.basis.dim()));
    r.dimension("total", static_cast<long>(T.dim()));
    r.dimension("center", static_cast<long>(z.dim()));
    return r;
}

/// A section s of pi, solved basis vector by basis vector with free
/// coordinates set to zero. `variant` > 0 adds variant times the sum of the
/// kernel basis of matching parity, giving a different section whenever
/// that part of the kernel is nonzero.
inline GradedMorphism section_of(const CentralExtension& e, unsigned variant = 0)
{
    const Matrix pi = e.projection.as_matrix();
    const auto& T = e.total;
    const Subspace ker = kernel_basis(pi);
    Vector shift0 = zero_vector(T.dim()), shift1 = zero_vector(T.dim());
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector k = ker.basis_vector(r);
        bool even = is_zero(std::span<const Scalar>(T.odd_part(k)));
        (even ? shift0 : shift1) = (even ? shift0 : shift1) + k;
    }
    Matrix s(T.dim(), e.base.dim());
    for (std::size_t g = 0; g < e.base.dim(); ++g) {
        auto v = solve_linear(pi, e.base.unit(g));
        if (!v) throw std::invalid_argument("projection is not surjective");
        if (variant) *v = *v + Scalar(variant) * (g < e.base.d0() ? shift0 : shift1);
        s.set_column(g, *v);
    }
    return GradedMorphism::from_matrix(s, e.base.d0(), T.d0());
}

// ---------------------------------------------------------------------------
// Actions, semidirect products, crossed modules.

/// Action of a on V: rho[g] is the operator of basis vector g of a on V in
/// global V coordinates. Even g must preserve parity, odd g must swap it.
struct Action {
    std::vector<Matrix> rho;

    Matrix of(const Vector& x) const
    {
        Matrix m = rho.empty() ? Matrix() : Matrix(rho[0].rows(), rho[0].cols());
        for (std::size_t g = 0; g < x.size(); ++g)
            if (!is_zero(x[g])) m = m + scaled(rho[g], x[g]);
        return m;
    }

    static Action zero(const HomLieAntialgebra& a, const HomLieAntialgebra& v)
    {
        return Action{std::vector<Matrix>(a.dim(), Matrix(v.dim(), v.dim()))};
    }

private:
    static Matrix scaled(Matrix m, const Scalar& s)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
        return m;
    }
};

inline void check_action_shape(const HomLieAntialgebra& a, const HomLieAntialgebra& v, const Action& rho)
{
    if (rho.rho.size() != a.dim()) throw std::invalid_argument("action needs one operator per basis vector");
    for (const auto& m : rho.rho)
        if (m.rows() != v.dim() || m.cols() != v.dim())
            throw std::invalid_argument("action operator does not match the module dimension");
}

/// a |x V with products (x1,u1).(x2,u2) = (x1.x2, rho(x1)u2 + rho(x2)u1 + u1.u2)
/// and the analogous mixed and bracket rules.
inline HomLieAntialgebra semidirect_product(const HomLieAntialgebra& a, const HomLieAntialgebra& v, const Action& rho)
{
    check_action_shape(a, v, rho);
    const std::size_t d0 = a.d0(), d1 = a.d1(), m0 = v.d0(), m1 = v.d1();
    std::vector<std::string> taken = a.basis().even;
    taken.insert(taken.end(), a.basis().odd.begin(), a.basis().odd.end());
    auto ve = detail::disjoint_names(taken, v.basis().even, {});
    auto vo = detail::disjoint_names(taken, v.basis().odd, ve);
    GradedBasis basis{a.basis().even, a.basis().odd};
    basis.even.insert(basis.even.end(), ve.begin(), ve.end());
    basis.odd.insert(basis.odd.end(), vo.begin(), vo.end());

    const std::size_t D0 = d0 + m0, N = basis.dim();
    // split a global index of the product into (in a?, local global index)
    auto split = [&](std::size_t i) -> std::pair<bool, std::size_t> {
        if (i < d0) return {true, i};
        if (i < D0) return {false, i - d0};
        if (i < D0 + d1) return {true, d0 + (i - D0)};
        return {false, m0 + (i - D0 - d1)};
    };
    auto out_a = [&](const Vector& p, Vector& out) {
        for (std::size_t k = 0; k < d0; ++k) out[k] += p[k];
        for (std::size_t k = 0; k < d1; ++k) out[D0 + k] += p[d0 + k];
    };
    auto out_v = [&](const Vector& p, Vector& out, const Scalar& s) {
        for (std::size_t k = 0; k < m0; ++k) out[d0 + k] += s * p[k];
        for (std::size_t k = 0; k < m1; ++k) out[D0 + d1 + k] += s * p[m0 + k];
    };
    auto table = [&](std::size_t i, std::size_t j) {
        Vector out = zero_vector(N);
        auto [ia, gi] = split(i);
        auto [ja, gj] = split(j);
        if (ia && ja) out_a(a.product(gi, gj), out);
        else if (!ia && !ja) out_v(v.product(gi, gj), out, Scalar(1));
        else {
            const std::size_t g = ia ? gi : gj, c = ia ? gj : gi;
            const bool both_odd = a.basis().parity(g) == Parity::odd && v.basis().parity(c) == Parity::odd;
            // [(0,v1),(y2,0)] = -rho(y2) v1
            Scalar sign = (!ia && both_odd) ? Scalar(-1) : Scalar(1);
            out_v(rho.rho[g] * v.unit(c), out, sign);
        }
        return out;
    };
    Matrix twist = block_diagonal(block_diagonal(a.alpha(), v.alpha()), block_diagonal(a.beta(), v.beta()));
    return algebra_from_table(std::move(basis), table, twist);
}

/// The seven action identities on basis tuples, the grading of rho, and the
/// semidirect product passing verify_axioms.
inline Report verify_action(const HomLieAntialgebra& a, const HomLieAntialgebra& v, const Action& rho)
{
    check_action_shape(a, v, rho);
    Report r;
    const std::size_t m0 = v.d0(), m = v.dim();

    Check grading{"action-grading", Status::pass, {}, {}};
    for (std::size_t g = 0; g < a.dim(); ++g) {
        const bool odd_g = a.basis().parity(g) == Parity::odd;
        for (std::size_t c = 0; c < m; ++c) {
            Vector img = rho.rho[g] * v.unit(c);
            for (std::size_t k = 0; k < m; ++k) {
                const bool flips = (c < m0) != (k < m0);
                if (!is_zero(img[k]) && flips != odd_g) {
                    grading.status = Status::fail;
                    grading.witnesses.push_back(
                        Witness{"grading", {a.basis().name(g), v.basis().name(c)}, img, zero_vector(m)});
                    break;
                }
            }
        }
    }
    const bool graded = grading.passed();
    r.add(std::move(grading));

    Check check{"action", Status::pass, {}, {}};
    const Scalar half(1, 2);
    auto R = [&](const Vector& x) { return rho.of(x); };
    auto ue = [&](std::size_t c) { return v.unit(c); };
    auto P = [&](const Vector& p, const Vector& q) { return v.product(p, q); };
    auto tw = [&](const Vector& p) { return v.twist(p); };
    auto rec = [&](const char* id, std::size_t g, std::initializer_list<std::size_t> cs, const Vector& lhs,
                   const Vector& rhs) {
        if (lhs == rhs) return;
        check.status = Status::fail;
        Witness w{id, {a.basis().name(g)}, lhs, rhs};
        for (auto c : cs) w.arguments.push_back(v.basis().name(c));
        check.witnesses.push_back(std::move(w));
    };
    for (std::size_t g = 0; g < a.dim(); ++g) {
        const Vector x = a.unit(g), ax = a.twist(x);
        const bool even = g < a.d0();
        for (std::size_t c1 = 0; c1 < m; ++c1)
            for (std::size_t c2 = 0; c2 < m; ++c2) {
                const bool e1 = c1 < m0, e2 = c2 < m0;
                const Vector u1 = ue(c1), u2 = ue(c2);
                if (even) {
                    if (e1 && e2) rec("action01", g, {c1, c2}, R(ax) * P(u1, u2), P(R(x) * u1, tw(u2)));
                    if (e1 && !e2) {
                        rec("action021", g, {c1, c2}, R(ax) * P(u1, u2), half * P(R(x) * u1, tw(u2)));
                        rec("action023", g, {c1, c2}, P(R(x) * u2, tw(u1)), half * P(R(x) * u1, tw(u2)));
                    }
                    if (!e1 && !e2)
                        rec("action031", g, {c1, c2}, R(ax) * P(u1, u2),
                            P(R(x) * u1, tw(u2)) + P(tw(u1), R(x) * u2));
                } else {
                    if (e1 && e2) rec("action022", g, {c1, c2}, P(R(x) * u2, tw(u1)), half * (R(ax) * P(u1, u2)));
                    if (e1 && !e2)
                        rec("action032", g, {c1, c2}, R(ax) * P(u1, u2),
                            P(tw(u1), R(x) * u2) - P(R(x) * u1, tw(u2)));
                    if (!e1 && !e2)
                        rec("action04", g, {c1, c2}, R(ax) * P(u1, u2),
                            P(tw(u1), R(x) * u2) - P(tw(u2), R(x) * u1));
                }
            }
    }
    r.add(std::move(check));
    if (graded) {
        Check ax = verify_axioms(semidirect_product(a, v, rho));
        ax.name = "semidirect-axioms";
        r.add(std::move(ax));
    } else
        r.add(Check{"semidirect-axioms", Status::fail, {}, "action is not graded"});
    return r;
}

/// Semidirect product, rejecting actions that fail verify_action.
inline HomLieAntialgebra semidirect(const HomLieAntialgebra& a, const HomLieAntialgebra& v, const Action& rho)
{
    Report r = verify_action(a, v, rho);
    for (const auto& c : r.checks)
        if (!c.passed()) throw CheckFailure("action check '" + c.name + "' failed", c);
    return semidirect_product(a, v, rho);
}

struct CrossedModule {
    HomLieAntialgebra v_algebra;
    HomLieAntialgebra base;
    Action action;
    GradedMorphism boundary; ///< v_algebra -> base
};

/// Boundary homomorphism, (cm1)-(cm4), (pei1)-(pei3), and the action checks.
inline Report verify_crossed_module(const CrossedModule& cm)
{
    const auto& V = cm.v_algebra;
    const auto& A = cm.base;
    check_morphism_shape(V, A, cm.boundary);
    check_action_shape(A, V, cm.action);
    Report r;
    r.add(check_homomorphism(V, A, cm.boundary)).name = "boundary-homomorphism";
    const Matrix d = cm.boundary.as_matrix();

    Check check{"crossed", Status::pass, {}, {}};
    auto rec = [&](const char* id, std::vector<std::string> args, Vector lhs, Vector rhs) {
        if (lhs == rhs) return;
        check.status = Status::fail;
        check.witnesses.push_back(Witness{id, std::move(args), std::move(lhs), std::move(rhs)});
    };
    for (std::size_t g = 0; g < A.dim(); ++g)
        for (std::size_t c = 0; c < V.dim(); ++c) {
            const bool eg = g < A.d0(), ec = c < V.d0();
            const char* id = eg ? (ec ? "cm1" : "cm2") : (ec ? "cm3" : "cm4");
            rec(id, {A.basis().name(g), V.basis().name(c)}, d * (cm.action.rho[g] * V.unit(c)),
                A.product(A.unit(g), d * V.unit(c)));
        }
    for (std::size_t c1 = 0; c1 < V.dim(); ++c1)
        for (std::size_t c2 = 0; c2 < V.dim(); ++c2) {
            const bool e1 = c1 < V.d0(), e2 = c2 < V.d0();
            const char* id = (e1 && e2) ? "pei1" : (!e1 && !e2) ? "pei2" : "pei3";
            rec(id, {V.basis().name(c1), V.basis().name(c2)}, cm.action.of(d * V.unit(c1)) * V.unit(c2),
                V.product(c1, c2));
        }
    r.add(std::move(check));
    r.append(verify_action(A, V, cm.action), "action");
    return r;
}

/// (total, base, pi) with rho(a) t = s(a) . t for a section s; centrality
/// makes this independent of s.
inline CrossedModule crossed_module_from_central_extension(const CentralExtension& e)
{
    Report r = verify_central_extension(e);
    for (const auto& c : r.checks)
        if (!c.passed()) throw CheckFailure("central extension check '" + c.name + "' failed", c);
    const Matrix s = section_of(e).as_matrix();
    const auto& T = e.total;
    Action rho;
    for (std::size_t g = 0; g < e.base.dim(); ++g) {
        Matrix m(T.dim(), T.dim());
        Vector sg = s.column(g);
        for (std::size_t c = 0; c < T.dim(); ++c) m.set_column(c, T.product(sg, T.unit(c)));
        rho.rho.push_back(std::move(m));
    }
    return CrossedModule{T, e.base, std::move(rho), e.projection};
}

} // namespace hla
