#pragma once

#include "hla/checks.hpp"
#include "hla/extensions.hpp"
#include "hla/homology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

class NotPerfect : public std::runtime_error {
public:
    NotPerfect(std::string span, Report report)
        : std::runtime_error("algebra is not perfect: " + span + " fails"), span_(std::move(span)),
          report_(std::move(report))
    {
    }
    /// The first failing equality, e.g. "a0 = a0.a0".
    const std::string& span() const { return span_; }
    const Report& report() const { return report_; }

private:
    std::string span_;
    Report report_;
};

class AnnihilationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BaseMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// uce(a) = (a (x) a) / I_a with the quotient basis ordered even first.
struct UceResult {
    HomLieAntialgebra base;
    Subspace ia;
    QuotientSpace quotient;          ///< over a (x) a, dimension n^2
    std::vector<std::size_t> reps;   ///< tensor index of each uce basis vector
    HomLieAntialgebra uce_algebra;
    GradedMorphism u;                ///< uce -> base
    GradedSubspacePair kernel_of_u;
    bool base_perfect = false;

    /// Class of a tensor in uce coordinates.
    Vector to_uce(const Vector& t) const
    {
        Vector q = quotient.project(t), out = zero_vector(reps.size());
        for (std::size_t p = 0; p < reps.size(); ++p) out[p] = q[free_position(reps[p])];
        return out;
    }

    /// The tensor lifting uce coordinates (combination of coset reps).
    Vector to_tensor(const Vector& p) const
    {
        Vector t = zero_vector(quotient.ambient_dim());
        for (std::size_t k = 0; k < reps.size(); ++k) t[reps[k]] = p[k];
        return t;
    }

private:
    std::size_t free_position(std::size_t tensor_index) const
    {
        for (std::size_t k = 0; k < quotient.dim(); ++k)
            if (quotient.representative_index(k) == tensor_index) return k;
        throw std::logic_error("not a coset representative");
    }
};

namespace detail {

inline std::string tensor_name(const HomLieAntialgebra& a, std::size_t t)
{
    const std::size_t n = a.dim(), i = t / n, j = t % n;
    if (a.basis().parity(i) == Parity::odd && a.basis().parity(j) == Parity::odd)
        return "{" + a.basis().name(i) + "|" + a.basis().name(j) + "}";
    return a.basis().name(i) + "*" + a.basis().name(j);
}

inline bool tensor_is_even(const HomLieAntialgebra& a, std::size_t t)
{
    return a.basis().parity(t / a.dim()) == a.basis().parity(t % a.dim());
}

inline Matrix twist_square(const HomLieAntialgebra& a)
{
    const std::size_t n = a.dim();
    Matrix m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, tensor(a.twist(a.unit(i)), a.twist(a.unit(j))));
    return m;
}

} // namespace detail

/// Builds uce(a). Throws NotPerfect naming the first failing span equality
/// unless `force` is set; forced builds carry no universality claim.
inline UceResult build_uce(const HomLieAntialgebra& a, bool force = false)
{
    Report perfect = perfectness_report(a);
    if (!perfect.passed() && !force)
        for (const auto& c : perfect.checks)
            if (!c.passed()) throw NotPerfect(c.name, perfect);

    const std::size_t n = a.dim();
    UceResult r{a, build_ia(a), {}, {}, {}, {}, {}, perfect.passed()};
    r.quotient = quotient_by(n * n, r.ia);
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < r.quotient.dim(); ++k) {
            std::size_t t = r.quotient.representative_index(k);
            if (detail::tensor_is_even(a, t) == (pass == 0)) r.reps.push_back(t);
        }

    GradedBasis basis;
    for (auto t : r.reps) (detail::tensor_is_even(a, t) ? basis.even : basis.odd).push_back(detail::tensor_name(a, t));
    const std::size_t N = r.reps.size();
    if (N == 0) throw std::invalid_argument("uce is zero-dimensional");

    const Matrix d2 = d2_chain_matrix(a);
    Matrix u(n, N);
    for (std::size_t p = 0; p < N; ++p) u.set_column(p, d2.column(r.reps[p]));
    auto table = [&](std::size_t p, std::size_t q) { return r.to_uce(tensor(u.column(p), u.column(q))); };
    const Matrix tw2 = detail::twist_square(a);
    Matrix twist(N, N);
    for (std::size_t p = 0; p < N; ++p) twist.set_column(p, r.to_uce(tw2.column(r.reps[p])));
    r.uce_algebra = algebra_from_table(std::move(basis), table, twist);
    r.u = GradedMorphism::from_matrix(u, r.uce_algebra.d0(), a.d0());
    r.kernel_of_u = {kernel_basis(r.u.even), kernel_basis(r.u.odd)};
    return r;
}

/// The lifted twists and product map I_a into I_a, and the four relations
/// hold in (a (x) a) / ia with w0 = *, w1 = * read (even, odd), w2 = {,}.
/// Taking `ia` as a parameter lets tests pass a mutilated relation space.
inline Report well_definedness_check(const HomLieAntialgebra& a, const Subspace& ia)
{
    Report r;
    const std::size_t n = a.dim(), d0 = a.d0();
    const Matrix tw2 = detail::twist_square(a), d2 = d2_chain_matrix(a);
    Check alpha{"alpha-lift", Status::pass, {}, {}}, beta{"beta-lift", Status::pass, {}, {}};
    Check prod{"product-lift", Status::pass, {}, {}};
    for (std::size_t k = 0; k < ia.dim(); ++k) {
        const Vector t = ia.basis_vector(k);
        bool even = true;
        for (std::size_t c = 0; c < t.size(); ++c)
            if (!is_zero(t[c]) && !detail::tensor_is_even(a, c)) even = false;
        Vector img = tw2 * t;
        if (!ia.contains(img)) {
            Check& c = even ? alpha : beta;
            c.status = Status::fail;
            c.witnesses.push_back(Witness{c.name, {"I_a[" + std::to_string(k) + "]"}, img, ia.reduce(img)});
        }
        Vector d = d2 * t;
        if (!is_zero(std::span<const Scalar>(d))) {
            prod.status = Status::fail;
            prod.witnesses.push_back(Witness{"product-lift", {"I_a[" + std::to_string(k) + "]"}, d, zero_vector(n)});
        }
    }
    r.add(std::move(alpha));
    r.add(std::move(beta));
    r.add(std::move(prod));

    Check rel{"uce-relations", Status::pass, {}, {}};
    auto tw = [&](std::size_t g) { return a.twist(a.unit(g)); };
    auto P = [&](std::size_t i, std::size_t j) { return a.product(i, j); };
    const Scalar half(1, 2);
    auto rec = [&](const char* id, std::initializer_list<std::size_t> args, const Vector& t) {
        if (ia.contains(t)) return;
        rel.status = Status::fail;
        Witness w{id, {}, ia.reduce(t), zero_vector(n * n)};
        for (auto g : args) w.arguments.push_back(a.basis().name(g));
        rel.witnesses.push_back(std::move(w));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const bool ei = i < d0, ej = j < d0, ek = k < d0;
                if (ei && ej && ek) rec("uce-cocycle1", {i, j, k}, tensor(tw(i), P(j, k)) - tensor(P(i, j), tw(k)));
                if (ei && ej && !ek)
                    rec("uce-cocycle2", {i, j, k}, tensor(tw(i), P(j, k)) - half * tensor(P(i, j), tw(k)));
                if (ei && !ej && !ek)
                    rec("uce-cocycle3", {i, j, k},
                        tensor(tw(i), P(j, k)) - tensor(P(i, j), tw(k)) - tensor(tw(j), P(i, k)));
                if (!ei && !ej && !ek)
                    rec("uce-cocycle4", {i, j, k},
                        tensor(P(j, k), tw(i)) + tensor(P(k, i), tw(j)) + tensor(P(i, j), tw(k)));
            }
    r.add(std::move(rel));
    return r;
}

inline Report well_definedness_check(const HomLieAntialgebra& a, const UceResult& r)
{
    return well_definedness_check(a, r.ia);
}

/// Axioms of uce, u a surjective homomorphism, ker u central.
inline Report verify_uce(const UceResult& r)
{
    Report rep;
    rep.add(verify_axioms(r.uce_algebra)).name = "uce-axioms";
    rep.add(check_homomorphism(r.uce_algebra, r.base, r.u)).name = "u-homomorphism";
    rep.add("u-surjective", rank(r.u.as_matrix()) == r.base.dim());
    const GradedSubspacePair z = center(r.uce_algebra);
    rep.add("kernel-central", z.even.contains(r.kernel_of_u.even) && z.odd.contains(r.kernel_of_u.odd));
    rep.dimension("uce_even", static_cast<long>(r.uce_algebra.d0()));
    rep.dimension("uce_odd", static_cast<long>(r.uce_algebra.d1()));
    rep.dimension("ker_u", static_cast<long>(r.kernel_of_u.dim()));
    return rep;
}

/// 0 -> ker u -> uce -> base -> 0 as a CentralExtension.
inline CentralExtension uce_extension(const UceResult& r)
{
    const auto& U = r.uce_algebra;
    CoefficientSpace V;
    std::vector<Vector> cols0, cols1;
    for (std::size_t k = 0; k < r.kernel_of_u.even.dim(); ++k) {
        V.basis.even.push_back("k" + std::to_string(k));
        cols0.push_back(r.kernel_of_u.even.basis_vector(k));
    }
    for (std::size_t k = 0; k < r.kernel_of_u.odd.dim(); ++k) {
        V.basis.odd.push_back("k" + std::to_string(cols0.size() + k));
        cols1.push_back(r.kernel_of_u.odd.basis_vector(k));
    }
    CentralExtension e;
    e.base = r.base;
    e.total = U;
    e.inclusion = {Matrix::from_columns(U.d0(), cols0), Matrix::from_columns(U.d1(), cols1)};
    e.projection = r.u;
    // twists on the kernel: restriction of the uce twists (kernel is twist-stable)
    auto restrict = [](const Matrix& tw, const Matrix& inc) {
        Matrix out(inc.cols(), inc.cols());
        for (std::size_t c = 0; c < inc.cols(); ++c) {
            auto x = solve_linear(inc, tw * inc.column(c));
            if (!x) throw std::logic_error("kernel of u is not twist-stable");
            out.set_column(c, *x);
        }
        return out;
    };
    V.alpha = restrict(U.alpha(), e.inclusion.even);
    V.beta = restrict(U.beta(), e.inclusion.odd);
    e.kernel = std::move(V);
    return e;
}

struct UniversalityCertificate {
    CentralExtension target;
    GradedMorphism phi;   ///< uce -> target.total
    bool commutes = false; ///< pi o phi = u
    bool homomorphism = false;
    bool unique = false;   ///< phi agrees with the phi of a second section
    Report report;
};

/// phi(x1 * x2) = s(x1) . s(x2) for the section s = section_of(e, variant).
/// Throws BaseMismatch or AnnihilationFailure.
inline GradedMorphism universality_map(const UceResult& r, const CentralExtension& e, unsigned variant = 0)
{
    if (!e.base.same_structure(r.base)) throw BaseMismatch("extension base differs from the uce base");
    const auto& T = e.total;
    const std::size_t n = r.base.dim();
    const Matrix s = section_of(e, variant).as_matrix();
    Matrix hat(T.dim(), n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hat.set_column(i * n + j, T.product(s.column(i), s.column(j)));
    for (std::size_t k = 0; k < r.ia.dim(); ++k)
        if (!is_zero(std::span<const Scalar>(hat * r.ia.basis().row(k))))
            throw AnnihilationFailure("lifted products do not vanish on I_a (relation " + std::to_string(k) + ")");
    Matrix phi(T.dim(), r.reps.size());
    for (std::size_t p = 0; p < r.reps.size(); ++p) phi.set_column(p, hat.column(r.reps[p]));
    return GradedMorphism::from_matrix(phi, r.uce_algebra.d0(), T.d0());
}

class PreconditionFailure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two homomorphisms uce -> e.total over u; by Lemma 2 they must coincide.
/// Throws PreconditionFailure when either map is not a homomorphism over u.
inline bool uniqueness_check(const UceResult& r, const CentralExtension& e, const GradedMorphism& phi1,
                             const GradedMorphism& phi2)
{
    for (const auto* f : {&phi1, &phi2}) {
        if (!is_homomorphism(r.uce_algebra, e.total, *f))
            throw PreconditionFailure("map is not a homomorphism of Hom-Lie antialgebras");
        if (!(compose(e.projection, *f) == r.u)) throw PreconditionFailure("map does not commute with the projections");
    }
    return phi1 == phi2;
}

inline UniversalityCertificate universality_morphism(const UceResult& r, const CentralExtension& e)
{
    UniversalityCertificate c{e, universality_map(r, e, 0), false, false, false, {}};
    const GradedMorphism other = universality_map(r, e, 1);
    c.commutes = compose(e.projection, c.phi) == r.u;
    Check hom = check_homomorphism(r.uce_algebra, e.total, c.phi);
    c.homomorphism = hom.passed();
    c.unique = c.phi == other;
    c.report.add("pi.phi = u", c.commutes);
    hom.name = "phi-homomorphism";
    c.report.add(std::move(hom));
    c.report.add("section-independent", c.unique);
    c.report.dimension("sections_differ", section_of(e, 0) == section_of(e, 1) ? 0 : 1);
    return c;
}

/// ker u against ker d2 / I_a computed separately, and the map sending a
/// homology representative to its class in uce.
inline Report kernel_vs_h2(const HomLieAntialgebra& a, const UceResult& r)
{
    Report rep;
    const H2Homology h = h2_homology(a);
    rep.dimension("ker_u", static_cast<long>(r.kernel_of_u.dim()));
    rep.dimension("H2", static_cast<long>(h.dim));
    rep.dimension("H2_mod_im_d3", static_cast<long>(h.dim_mod_im_d3));
    rep.add("dimension", r.kernel_of_u.dim() == h.dim, "dim ker u = dim H2");
    rep.add("same-relations", h.ia == r.ia);

    const Matrix u = r.u.as_matrix();
    std::vector<Vector> images;
    bool in_kernel = true;
    for (const auto& t : h.representatives) {
        Vector p = r.to_uce(t);
        if (!is_zero(std::span<const Scalar>(u * p))) in_kernel = false;
        images.push_back(std::move(p));
    }
    const Subspace img = Subspace::span(r.uce_algebra.dim(), images);
    rep.add("representatives-in-ker-u", in_kernel);
    rep.add("isomorphism", img.dim() == h.representatives.size() && img.dim() == r.kernel_of_u.dim(),
            "images of the H2 representatives form a basis of ker u");
    return rep;
}

inline bool uce_is_perfect(const UceResult& r) { return is_perfect(r.uce_algebra); }

} // namespace hla
