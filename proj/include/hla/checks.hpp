#pragma once

#include "hla/algebra.hpp"
#include "hla/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace hla {

namespace detail {

inline Witness make_witness(const HomLieAntialgebra& a, std::string identity, std::initializer_list<std::size_t> args,
                            Vector lhs, Vector rhs)
{
    Witness w{std::move(identity), {}, std::move(lhs), std::move(rhs)};
    for (auto i : args) w.arguments.push_back(a.basis().name(i));
    return w;
}

inline Vector mul(const HomLieAntialgebra& a, const Vector& u, const Vector& v) { return a.product(u, v); }

} // namespace detail

/// Evaluates the four defining identities on every basis triple; by
/// multilinearity this decides them on all elements.
///
///   hanti01  alpha(x1).(x2.x3) = (x1.x2).alpha(x3)
///   hanti02  alpha(x1).(x2.y1) = 1/2 (x1.x2).beta(y1)
///   hanti03  alpha(x1).[y1,y2] = [x1.y1, beta(y2)] + [beta(y1), x1.y2]
///   hanti04  beta(y1).[y2,y3] + beta(y2).[y3,y1] + beta(y3).[y1,y2] = 0
inline Check verify_axioms(const HomLieAntialgebra& a)
{
    using detail::mul;
    Check check{"axioms", Status::pass, {}, {}};
    const std::size_t d0 = a.d0(), n = a.dim();
    auto tw = [&](std::size_t i) { return a.twist(a.unit(i)); };
    auto record = [&](const char* id, std::initializer_list<std::size_t> args, Vector lhs, Vector rhs) {
        if (lhs != rhs) {
            check.status = Status::fail;
            check.witnesses.push_back(detail::make_witness(a, id, args, std::move(lhs), std::move(rhs)));
        }
    };
    const Scalar half(1, 2);

    for (std::size_t x1 = 0; x1 < d0; ++x1)
        for (std::size_t x2 = 0; x2 < d0; ++x2)
            for (std::size_t x3 = 0; x3 < d0; ++x3)
                record("hanti01", {x1, x2, x3}, mul(a, tw(x1), a.product(x2, x3)),
                       mul(a, a.product(x1, x2), tw(x3)));

    for (std::size_t x1 = 0; x1 < d0; ++x1)
        for (std::size_t x2 = 0; x2 < d0; ++x2)
            for (std::size_t y = d0; y < n; ++y)
                record("hanti02", {x1, x2, y}, mul(a, tw(x1), a.product(x2, y)),
                       half * mul(a, a.product(x1, x2), tw(y)));

    for (std::size_t x = 0; x < d0; ++x)
        for (std::size_t y1 = d0; y1 < n; ++y1)
            for (std::size_t y2 = d0; y2 < n; ++y2)
                record("hanti03", {x, y1, y2}, mul(a, tw(x), a.product(y1, y2)),
                       mul(a, a.product(x, y1), tw(y2)) + mul(a, tw(y1), a.product(x, y2)));

    for (std::size_t y1 = d0; y1 < n; ++y1)
        for (std::size_t y2 = d0; y2 < n; ++y2)
            for (std::size_t y3 = d0; y3 < n; ++y3)
                record("hanti04", {y1, y2, y3},
                       mul(a, tw(y1), a.product(y2, y3)) + mul(a, tw(y2), a.product(y3, y1)) +
                           mul(a, tw(y3), a.product(y1, y2)),
                       zero_vector(n));
    return check;
}

/// alpha and beta are algebra morphisms for all three operations.
inline Check check_multiplicative(const HomLieAntialgebra& a)
{
    Check check{"multiplicative", Status::pass, {}, {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.basis().parity(i) == Parity::odd && a.basis().parity(j) == Parity::even) continue;
            Vector lhs = a.twist(a.product(i, j));
            Vector rhs = a.product(a.twist(a.unit(i)), a.twist(a.unit(j)));
            if (lhs != rhs) {
                check.status = Status::fail;
                const char* id = a.basis().parity(i) == Parity::odd ? "alpha-bracket"
                                 : a.basis().parity(j) == Parity::odd ? "beta-action"
                                                                     : "alpha-product";
                check.witnesses.push_back(detail::make_witness(a, id, {i, j}, std::move(lhs), std::move(rhs)));
            }
        }
    return check;
}

inline bool is_multiplicative(const HomLieAntialgebra& a) { return check_multiplicative(a).passed(); }

/// The five homomorphism conditions on basis elements and pairs.
inline Check check_homomorphism(const HomLieAntialgebra& src, const HomLieAntialgebra& tgt, const GradedMorphism& f)
{
    check_morphism_shape(src, tgt, f);
    Check check{"homomorphism", Status::pass, {}, {}};
    const Matrix m = f.as_matrix();
    auto fail = [&](const char* id, std::initializer_list<std::size_t> args, Vector lhs, Vector rhs) {
        check.status = Status::fail;
        check.witnesses.push_back(detail::make_witness(src, id, args, std::move(lhs), std::move(rhs)));
    };
    for (std::size_t i = 0; i < src.dim(); ++i) {
        Vector lhs = m * src.twist(src.unit(i));
        Vector rhs = tgt.twist(m * src.unit(i));
        if (lhs != rhs) fail(src.basis().parity(i) == Parity::even ? "homo01" : "homo02", {i}, lhs, rhs);
    }
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i; j < src.dim(); ++j) {
            Vector lhs = m * src.product(i, j);
            Vector rhs = tgt.product(m * src.unit(i), m * src.unit(j));
            if (lhs != rhs) {
                Parity pi = src.basis().parity(i), pj = src.basis().parity(j);
                const char* id = (pi == Parity::even && pj == Parity::even) ? "homo1"
                                 : (pi != pj)                              ? "homo2"
                                                                           : "homo3";
                fail(id, {i, j}, lhs, rhs);
            }
        }
    return check;
}

inline bool is_homomorphism(const HomLieAntialgebra& src, const HomLieAntialgebra& tgt, const GradedMorphism& f)
{
    return check_homomorphism(src, tgt, f).passed();
}

namespace detail {

inline std::vector<std::string> disjoint_names(const std::vector<std::string>& taken, std::vector<std::string> names,
                                               const std::vector<std::string>& also_taken)
{
    auto clash = [&](const std::string& s, std::size_t self) {
        for (const auto& t : taken)
            if (t == s) return true;
        for (const auto& t : also_taken)
            if (t == s) return true;
        for (std::size_t k = 0; k < names.size(); ++k)
            if (k != self && names[k] == s) return true;
        return false;
    };
    for (std::size_t k = 0; k < names.size(); ++k)
        while (clash(names[k], k)) names[k] += "'";
    return names;
}

} // namespace detail

/// a (+) b with componentwise operations and twists. Clashing names from b
/// get a trailing prime.
inline HomLieAntialgebra direct_sum(const HomLieAntialgebra& a, const HomLieAntialgebra& b)
{
    std::vector<std::string> taken = a.basis().even;
    taken.insert(taken.end(), a.basis().odd.begin(), a.basis().odd.end());
    GradedBasis basis;
    basis.even = a.basis().even;
    auto be = detail::disjoint_names(taken, b.basis().even, {});
    basis.even.insert(basis.even.end(), be.begin(), be.end());
    basis.odd = a.basis().odd;
    auto bo = detail::disjoint_names(taken, b.basis().odd, be);
    basis.odd.insert(basis.odd.end(), bo.begin(), bo.end());

    const std::size_t ad0 = a.d0(), bd0 = b.d0(), ad1 = a.d1();
    const std::size_t d0 = ad0 + bd0, n = basis.dim();
    // global index in the sum for a global index of a or b
    auto from_a = [&](std::size_t i) { return i < ad0 ? i : d0 + (i - ad0); };
    auto from_b = [&](std::size_t i) { return i < bd0 ? ad0 + i : d0 + ad1 + (i - bd0); };
    auto embed = [&](const Vector& v, auto&& idx) {
        Vector out = zero_vector(n);
        for (std::size_t k = 0; k < v.size(); ++k) out[idx(k)] = v[k];
        return out;
    };
    std::vector<std::ptrdiff_t> owner_a(n, -1), owner_b(n, -1);
    for (std::size_t i = 0; i < a.dim(); ++i) owner_a[from_a(i)] = static_cast<std::ptrdiff_t>(i);
    for (std::size_t i = 0; i < b.dim(); ++i) owner_b[from_b(i)] = static_cast<std::ptrdiff_t>(i);

    auto table = [&](std::size_t i, std::size_t j) {
        if (owner_a[i] >= 0 && owner_a[j] >= 0)
            return embed(a.product(static_cast<std::size_t>(owner_a[i]), static_cast<std::size_t>(owner_a[j])), from_a);
        if (owner_b[i] >= 0 && owner_b[j] >= 0)
            return embed(b.product(static_cast<std::size_t>(owner_b[i]), static_cast<std::size_t>(owner_b[j])), from_b);
        return zero_vector(n);
    };
    Matrix twist(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i) twist.set_column(from_a(i), embed(a.twist(a.unit(i)), from_a));
    for (std::size_t i = 0; i < b.dim(); ++i) twist.set_column(from_b(i), embed(b.twist(b.unit(i)), from_b));
    return algebra_from_table(std::move(basis), table, twist);
}

/// Graph {(x, f x)} inside direct_sum(src, tgt).
inline GradedSubspacePair graph_of(const HomLieAntialgebra& src, const HomLieAntialgebra& tgt, const GradedMorphism& f)
{
    check_morphism_shape(src, tgt, f);
    std::vector<Vector> ev, od;
    for (std::size_t i = 0; i < src.d0(); ++i) {
        Vector v = zero_vector(src.d0() + tgt.d0());
        v[i] = 1;
        for (std::size_t k = 0; k < tgt.d0(); ++k) v[src.d0() + k] = f.even(k, i);
        ev.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < src.d1(); ++i) {
        Vector v = zero_vector(src.d1() + tgt.d1());
        v[i] = 1;
        for (std::size_t k = 0; k < tgt.d1(); ++k) v[src.d1() + k] = f.odd(k, i);
        od.push_back(std::move(v));
    }
    return {Subspace::span(src.d0() + tgt.d0(), ev), Subspace::span(src.d1() + tgt.d1(), od)};
}

namespace detail {

inline void check_pair(const HomLieAntialgebra& a, const GradedSubspacePair& s)
{
    s.even.check_ambient(a.d0());
    s.odd.check_ambient(a.d1());
}

inline std::vector<Vector> global_basis(const HomLieAntialgebra& a, const GradedSubspacePair& s)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < s.even.dim(); ++i) out.push_back(a.embed_even(s.even.basis_vector(i)));
    for (std::size_t i = 0; i < s.odd.dim(); ++i) out.push_back(a.embed_odd(s.odd.basis_vector(i)));
    return out;
}

inline bool pair_contains(const HomLieAntialgebra& a, const GradedSubspacePair& s, const Vector& v)
{
    return s.even.contains(a.even_part(v)) && s.odd.contains(a.odd_part(v));
}

} // namespace detail

/// Closure of s under the three operations and under alpha, beta.
inline bool is_subalgebra(const HomLieAntialgebra& a, const GradedSubspacePair& s)
{
    detail::check_pair(a, s);
    auto gens = detail::global_basis(a, s);
    for (const auto& u : gens) {
        if (!detail::pair_contains(a, s, a.twist(u))) return false;
        for (const auto& v : gens)
            if (!detail::pair_contains(a, s, a.product(u, v))) return false;
    }
    return true;
}

/// Sub-antialgebra with s . a contained in s.
inline bool is_ideal(const HomLieAntialgebra& a, const GradedSubspacePair& s)
{
    if (!is_subalgebra(a, s)) return false;
    for (const auto& u : detail::global_basis(a, s))
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!detail::pair_contains(a, s, a.product(u, a.unit(j)))) return false;
    return true;
}

/// Elements whose products with every basis vector vanish.
inline GradedSubspacePair center(const HomLieAntialgebra& a)
{
    const std::size_t n = a.dim(), d0 = a.d0();
    // stacked operator x -> (x . e_j)_j, restricted to one parity
    auto kernel_of_products = [&](std::size_t begin, std::size_t end) {
        Matrix m(n * n, end - begin);
        for (std::size_t c = begin; c < end; ++c)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector& p = a.product(c, j);
                for (std::size_t k = 0; k < n; ++k) m(j * n + k, c - begin) = p[k];
            }
        return kernel_basis(m);
    };
    return {kernel_of_products(0, d0), kernel_of_products(d0, n)};
}

struct ProductSpans {
    Subspace even_even;  ///< span(a0 . a0) in a0
    Subspace odd_odd;    ///< span([a1, a1]) in a0
    Subspace even_odd;   ///< span(a0 . a1) in a1
};

inline ProductSpans product_spans(const HomLieAntialgebra& a)
{
    const std::size_t d0 = a.d0(), n = a.dim();
    std::vector<Vector> ee, oo, eo;
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = i; j < d0; ++j) ee.push_back(a.even_part(a.product(i, j)));
    for (std::size_t i = d0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) oo.push_back(a.even_part(a.product(i, j)));
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = d0; j < n; ++j) eo.push_back(a.odd_part(a.product(i, j)));
    return {Subspace::span(d0, ee), Subspace::span(d0, oo), Subspace::span(a.d1(), eo)};
}

/// The three span equalities, one check each.
inline Report perfectness_report(const HomLieAntialgebra& a)
{
    Report r;
    auto spans = product_spans(a);
    r.dimension("dim_a0", static_cast<long>(a.d0()));
    r.dimension("dim_a1", static_cast<long>(a.d1()));
    r.dimension("dim_a0.a0", static_cast<long>(spans.even_even.dim()));
    r.dimension("dim_[a1,a1]", static_cast<long>(spans.odd_odd.dim()));
    r.dimension("dim_a0.a1", static_cast<long>(spans.even_odd.dim()));
    // witness: the first basis vector outside the span; rhs is its component inside the span
    auto add = [&](const char* name, const Subspace& span, bool odd) {
        Check& c = r.add(name, span.dim() == span.ambient_dim());
        for (std::size_t k = 0; k < span.ambient_dim() && !c.passed(); ++k) {
            Vector e = unit_vector(span.ambient_dim(), k);
            if (span.contains(e)) continue;
            const std::size_t g = odd ? a.d0() + k : k;
            c.witnesses.push_back(Witness{name, {a.basis().name(g)}, e, e - span.reduce(e)});
            break;
        }
    };
    add("a0 = a0.a0", spans.even_even, false);
    add("a0 = [a1,a1]", spans.odd_odd, false);
    add("a1 = a0.a1", spans.even_odd, true);
    return r;
}

inline bool is_perfect(const HomLieAntialgebra& a) { return perfectness_report(a).passed(); }

/// Smallest ideal containing every product: products closed under
/// multiplication by a and under the twists until the dimension stabilises.
inline GradedSubspacePair derived_ideal(const HomLieAntialgebra& a)
{
    auto spans = product_spans(a);
    GradedSubspacePair s{subspace_sum(spans.even_even, spans.odd_odd), spans.even_odd};
    for (std::size_t round = 0; round <= a.dim(); ++round) {
        const std::size_t before = s.dim();
        std::vector<Vector> ev, od;
        for (const auto& u : detail::global_basis(a, s)) {
            Vector t = a.twist(u);
            ev.push_back(a.even_part(t));
            od.push_back(a.odd_part(t));
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Vector p = a.product(u, a.unit(j));
                ev.push_back(a.even_part(p));
                od.push_back(a.odd_part(p));
            }
        }
        s.even = subspace_sum(s.even, Subspace::span(a.d0(), ev));
        s.odd = subspace_sum(s.odd, Subspace::span(a.d1(), od));
        if (s.dim() == before) break;
    }
    return s;
}

} // namespace hla
