#pragma once

#include "hla/algebra.hpp"
#include "hla/report.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

/// K3: basis {eps; a, b}, alpha = id, beta(a) = mu a, beta(b) = b / mu,
/// eps.eps = eps, eps.a = mu/2 a, eps.b = 1/(2 mu) b, [a,b] = 1/2 eps.
inline HomLieAntialgebra k3(const Scalar& mu)
{
    if (is_zero(mu)) throw std::invalid_argument("k3: mu must be nonzero");
    const Scalar half(1, 2);
    return AlgebraBuilder({"eps"}, {"a", "b"})
        .product("eps", "eps", {{"eps", Scalar(1)}})
        .product("eps", "a", {{"a", mu / 2}})
        .product("eps", "b", {{"b", 1 / (2 * mu)}})
        .product("a", "b", {{"eps", half}})
        .twist("eps", {{"eps", Scalar(1)}})
        .twist("a", {{"a", mu}})
        .twist("b", {{"b", 1 / mu}})
        .build();
}

/// The 3-dimensional algebra {eps; a1, a2} with [a1,a2] = eps as its only
/// nonzero product, alpha = id, beta(a1) = mu a1, beta(a2) = a2 / mu.
inline HomLieAntialgebra exe02(const Scalar& mu)
{
    if (is_zero(mu)) throw std::invalid_argument("exe02: mu must be nonzero");
    return AlgebraBuilder({"eps"}, {"a1", "a2"})
        .product("a1", "a2", {{"eps", Scalar(1)}})
        .twist("eps", {{"eps", Scalar(1)}})
        .twist("a1", {{"a1", mu}})
        .twist("a2", {{"a2", 1 / mu}})
        .build();
}

/// The 4-dimensional central extension of exe02 by {0; z}:
/// [a1,a2] = eps, eps.a1 = mu z, beta(z) = mu z.
inline HomLieAntialgebra exe02_extension(const Scalar& mu)
{
    if (is_zero(mu)) throw std::invalid_argument("exe02: mu must be nonzero");
    return AlgebraBuilder({"eps"}, {"a1", "a2", "z"})
        .product("a1", "a2", {{"eps", Scalar(1)}})
        .product("eps", "a1", {{"z", mu}})
        .twist("eps", {{"eps", Scalar(1)}})
        .twist("a1", {{"a1", mu}})
        .twist("a2", {{"a2", 1 / mu}})
        .twist("z", {{"z", mu}})
        .build();
}

// ---------------------------------------------------------------------------
// Windowed K(1)

/// a + b sqrt(q). When q is the square of a rational the root is folded
/// into a and b stays 0.
class QuadraticScalar {
public:
    QuadraticScalar() = default;
    QuadraticScalar(Scalar a, Scalar b, const Scalar& q) : a_(std::move(a)), b_(std::move(b)), q_(q) {}

    const Scalar& rational() const { return a_; }
    const Scalar& irrational() const { return b_; }
    bool is_zero() const { return hla::is_zero(a_) && hla::is_zero(b_); }

    friend QuadraticScalar operator+(const QuadraticScalar& x, const QuadraticScalar& y)
    {
        return {x.a_ + y.a_, x.b_ + y.b_, x.q_};
    }
    friend QuadraticScalar operator-(const QuadraticScalar& x, const QuadraticScalar& y)
    {
        return {x.a_ - y.a_, x.b_ - y.b_, x.q_};
    }
    friend QuadraticScalar operator*(const QuadraticScalar& x, const QuadraticScalar& y)
    {
        return {x.a_ * y.a_ + x.b_ * y.b_ * x.q_, x.a_ * y.b_ + x.b_ * y.a_, x.q_};
    }
    friend bool operator==(const QuadraticScalar& x, const QuadraticScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    std::string str() const
    {
        if (hla::is_zero(b_)) return to_string(a_);
        return to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + to_string(abs(b_)) + "*sqrt(" + to_string(q_) + ")";
    }

private:
    Scalar a_ = 0, b_ = 0, q_ = 1;
};

struct K1Parameters {
    Scalar q;
    int radius = 1; ///< window radius N
};

struct K1WindowReport {
    long checked = 0;
    long skipped = 0;
    std::map<std::string, long> checked_per_identity;
    std::vector<Witness> failures;       ///< lhs/rhs left empty; see failure_values
    std::vector<std::string> failure_values;

    bool passed() const { return failures.empty(); }
};

/// Relation table of K(1) restricted to |n| <= N for eps_n and |i| <= N - 1/2
/// for a_i. Odd indices are stored doubled (h = 2i, odd). Instances whose
/// intermediate products leave the window are skipped, never truncated.
class K1Window {
public:
    explicit K1Window(K1Parameters p) : p_(std::move(p))
    {
        if (is_zero(p_.q) || p_.q == 1) throw std::invalid_argument("k1-window: q must differ from 0 and 1");
        if (p_.radius < 1) throw std::invalid_argument("k1-window: radius must be at least 1");
        root_ = rational_sqrt(p_.q);
    }

    int radius() const { return p_.radius; }
    const Scalar& q() const { return p_.q; }

    bool even_in_window(long n) const { return std::labs(n) <= p_.radius; }
    bool odd_in_window(long h) const { return std::labs(h) <= 2L * p_.radius - 1; }

    /// q^(h/2) for an odd or even h.
    QuadraticScalar q_power_half(long h) const
    {
        long whole = (h >= 0 ? h : h - 1) / 2; // floor(h / 2)
        bool has_root = (h - 2 * whole) != 0;
        Scalar base = pow_rational(p_.q, whole);
        if (!has_root) return lift(base);
        if (root_) return lift(base * *root_);
        return QuadraticScalar(0, base, p_.q);
    }

    QuadraticScalar lift(const Scalar& s) const { return QuadraticScalar(s, 0, p_.q); }

    /// {i} = (q^i - 1)/(q - 1) for i = h/2.
    QuadraticScalar q_number(long h) const
    {
        QuadraticScalar num = q_power_half(h) - lift(Scalar(1));
        return num * lift(1 / (p_.q - 1));
    }

    /// Element: sparse map from signed key to coefficient. Even keys are
    /// 2n (even integers), odd keys are h = 2i (odd integers), so the key is
    /// twice the index in both cases and parity is key parity.
    using Element = std::map<long, QuadraticScalar>;

    Element basis(long key) const { return Element{{key, lift(Scalar(1))}}; }

    /// Product of two basis keys; nullopt when the result leaves the window.
    std::optional<Element> product(long k1, long k2) const
    {
        const bool odd1 = (k1 & 1) != 0, odd2 = (k2 & 1) != 0;
        const long k = k1 + k2;
        if (!odd1 && !odd2) {
            if (!even_in_window(k / 2)) return std::nullopt;
            return basis(k);
        }
        if (odd1 != odd2) {
            long h = odd1 ? k1 : k2;
            if (!odd_in_window(k)) return std::nullopt;
            QuadraticScalar c = lift(Scalar(1, 2)) * (lift(Scalar(1)) + q_power_half(h));
            return Element{{k, c}};
        }
        if (!even_in_window(k / 2)) return std::nullopt;
        QuadraticScalar c = lift(Scalar(1, 2)) * (q_number(k2) - q_number(k1));
        if (c.is_zero()) return Element{};
        return Element{{k, c}};
    }

    std::optional<Element> product(const Element& u, const Element& v) const
    {
        Element out;
        for (const auto& [ku, cu] : u)
            for (const auto& [kv, cv] : v) {
                auto p = product(ku, kv);
                if (!p) return std::nullopt;
                for (const auto& [k, c] : *p) add_to(out, k, cu * cv * c);
            }
        return out;
    }

    Element twist(const Element& u) const
    {
        Element out;
        for (const auto& [k, c] : u) {
            if ((k & 1) == 0) add_to(out, k, c);
            else add_to(out, k, c * (lift(Scalar(1)) + q_power_half(k)));
        }
        return out;
    }

    static Element combine(const Element& u, const Element& v, const QuadraticScalar& sv)
    {
        Element out = u;
        for (const auto& [k, c] : v) add_to(out, k, sv * c);
        return out;
    }

    static std::string key_name(long k)
    {
        if ((k & 1) == 0) return "eps_" + std::to_string(k / 2);
        return "a_" + std::to_string(k) + "/2";
    }

    /// Evaluates every in-window instance of the four defining identities.
    K1WindowReport check_identities() const
    {
        K1WindowReport rep;
        std::vector<long> evens, odds;
        for (long n = -p_.radius; n <= p_.radius; ++n) evens.push_back(2 * n);
        for (long h = -(2L * p_.radius - 1); h <= 2L * p_.radius - 1; h += 2) odds.push_back(h);
        const QuadraticScalar one = lift(Scalar(1)), half = lift(Scalar(1, 2)), minus = lift(Scalar(-1));

        auto record = [&](const char* id, std::vector<long> args, const std::optional<Element>& lhs,
                          const std::optional<Element>& rhs) {
            if (!lhs || !rhs) {
                ++rep.skipped;
                return;
            }
            ++rep.checked;
            ++rep.checked_per_identity[id];
            Element diff = combine(*lhs, *rhs, minus);
            if (!diff.empty()) {
                Witness w{id, {}, {}, {}};
                for (long k : args) w.arguments.push_back(key_name(k));
                rep.failures.push_back(std::move(w));
                rep.failure_values.push_back(render(*lhs) + " != " + render(*rhs));
            }
        };
        auto mul = [&](const std::optional<Element>& u, const std::optional<Element>& v) -> std::optional<Element> {
            if (!u || !v) return std::nullopt;
            return product(*u, *v);
        };
        auto sum = [&](const std::optional<Element>& u, const std::optional<Element>& v,
                       const QuadraticScalar& s) -> std::optional<Element> {
            if (!u || !v) return std::nullopt;
            return combine(*u, *v, s);
        };
        auto scaled = [&](const std::optional<Element>& u, const QuadraticScalar& s) -> std::optional<Element> {
            if (!u) return std::nullopt;
            return combine(Element{}, *u, s);
        };
        auto e = [&](long k) { return std::optional<Element>(basis(k)); };
        auto tw = [&](long k) { return std::optional<Element>(twist(basis(k))); };

        for (long x1 : evens)
            for (long x2 : evens)
                for (long x3 : evens)
                    record("hanti01", {x1, x2, x3}, mul(tw(x1), mul(e(x2), e(x3))), mul(mul(e(x1), e(x2)), tw(x3)));
        for (long x1 : evens)
            for (long x2 : evens)
                for (long y : odds)
                    record("hanti02", {x1, x2, y}, mul(tw(x1), mul(e(x2), e(y))),
                           scaled(mul(mul(e(x1), e(x2)), tw(y)), half));
        for (long x : evens)
            for (long y1 : odds)
                for (long y2 : odds)
                    record("hanti03", {x, y1, y2}, mul(tw(x), mul(e(y1), e(y2))),
                           sum(mul(mul(e(x), e(y1)), tw(y2)), mul(tw(y1), mul(e(x), e(y2))), one));
        for (long y1 : odds)
            for (long y2 : odds)
                for (long y3 : odds)
                    record("hanti04", {y1, y2, y3},
                           sum(sum(mul(tw(y1), mul(e(y2), e(y3))), mul(tw(y2), mul(e(y3), e(y1))), one),
                               mul(tw(y3), mul(e(y1), e(y2))), one),
                           std::optional<Element>(Element{}));
        return rep;
    }

    static std::string render(const Element& u)
    {
        if (u.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : u) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")" + key_name(k);
        }
        return s;
    }

private:
    static void add_to(Element& out, long k, const QuadraticScalar& c)
    {
        auto it = out.find(k);
        if (it == out.end()) {
            if (!c.is_zero()) out.emplace(k, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) out.erase(it);
    }

    static Scalar pow_rational(const Scalar& base, long e)
    {
        Scalar r = 1;
        Scalar b = e >= 0 ? base : 1 / base;
        for (long i = 0; i < std::labs(e); ++i) r *= b;
        return r;
    }

    static std::optional<Scalar> rational_sqrt(const Scalar& q)
    {
        if (sgn(q) < 0) return std::nullopt;
        mpz_class n = q.get_num(), d = q.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Scalar(rn, rd);
    }

    K1Parameters p_;
    std::optional<Scalar> root_;
};

} // namespace hla
