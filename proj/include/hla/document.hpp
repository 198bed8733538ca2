#pragma once

#include "hla/algebra.hpp"
#include "hla/extensions.hpp"
#include "hla/homology.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hla {

/// Located error in a document; what() reads "line:column: message".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
          column_(column), message_(message)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_, column_;
    std::string message_;
};

namespace doc {

/// A node of the TOML subset: string, array of strings, or table. Tables
/// keep insertion order.
struct Value {
    enum class Kind { string, array, table } kind = Kind::table;
    std::string str;
    std::vector<std::string> items;
    std::vector<std::pair<std::string, Value>> entries;
    std::size_t line = 1, column = 1;
    bool explicit_header = false; ///< table opened by a [header] line

    const Value* find(std::string_view key) const
    {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
    Value* find(std::string_view key)
    {
        for (auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

[[noreturn]] inline void fail(const Value& at, const std::string& msg) { throw ParseError(at.line, at.column, msg); }

inline bool bare_char(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Value parse()
    {
        Value root;
        Value* current = &root;
        while (pos_ < s_.size()) {
            skip_ws();
            if (at_eol()) {
                next_line();
                continue;
            }
            if (peek() == '[') current = &header(root);
            else keyval(*current);
            skip_ws();
            if (!at_eol()) error("expected end of line");
            next_line();
        }
        return root;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t column() const { return pos_ - line_start_ + 1; }
    [[noreturn]] void error(const std::string& msg) const { throw ParseError(line_, column(), msg); }

    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool at_eol()
    {
        if (pos_ < s_.size() && s_[pos_] == '#')
            while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        return pos_ >= s_.size() || s_[pos_] == '\n' || (s_[pos_] == '\r' && peek_at(1) == '\n');
    }
    char peek_at(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
    void next_line()
    {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        if (pos_ < s_.size()) ++pos_;
        ++line_;
        line_start_ = pos_;
    }
    void expect(char c)
    {
        if (peek() != c) error(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string key()
    {
        if (peek() == '"') return quoted();
        std::size_t b = pos_;
        while (pos_ < s_.size() && bare_char(s_[pos_])) ++pos_;
        if (b == pos_) error("expected a key");
        return std::string(s_.substr(b, pos_ - b));
    }

    std::string quoted()
    {
        expect('"');
        std::string out;
        while (true) {
            if (pos_ >= s_.size() || s_[pos_] == '\n') error("unterminated string");
            char c = s_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                char e = peek();
                ++pos_;
                switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: --pos_; error("unsupported escape sequence");
                }
            } else
                out += c;
        }
        return out;
    }

    Value& header(Value& root)
    {
        const std::size_t col = column();
        expect('[');
        skip_ws();
        Value* t = &root;
        std::string path;
        while (true) {
            std::string k = key();
            path += (path.empty() ? "" : ".") + k;
            Value* child = t->find(k);
            if (!child) {
                Value v;
                v.line = line_;
                v.column = col;
                t->entries.emplace_back(k, std::move(v));
                child = &t->entries.back().second;
            } else if (child->kind != Value::Kind::table)
                error("key '" + path + "' is not a table");
            t = child;
            skip_ws();
            if (peek() == '.') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        expect(']');
        if (t->explicit_header) throw ParseError(line_, col, "table [" + path + "] defined twice");
        t->explicit_header = true;
        t->line = line_;
        t->column = col;
        return *t;
    }

    void keyval(Value& table)
    {
        const std::size_t kl = line_, kc = column();
        std::string k = key();
        skip_ws();
        expect('=');
        skip_ws();
        Value v = value();
        v.line = kl;
        v.column = kc;
        if (table.find(k)) throw ParseError(kl, kc, "duplicate key '" + k + "'");
        table.entries.emplace_back(std::move(k), std::move(v));
    }

    Value value()
    {
        Value v;
        v.line = line_;
        v.column = column();
        if (peek() == '"') {
            v.kind = Value::Kind::string;
            v.str = quoted();
        } else if (peek() == '[') {
            v.kind = Value::Kind::array;
            ++pos_;
            skip_ws();
            while (peek() != ']') {
                if (peek() != '"') error("array items must be strings");
                v.items.push_back(quoted());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    skip_ws();
                } else if (peek() != ']')
                    error("expected ',' or ']'");
            }
            ++pos_;
        } else if (peek() == '{') {
            v.kind = Value::Kind::table;
            v.explicit_header = true;
            ++pos_;
            skip_ws();
            while (peek() != '}') {
                keyval(v);
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    skip_ws();
                } else if (peek() != '}')
                    error("expected ',' or '}'");
            }
            ++pos_;
        } else
            error("expected a string, an array or an inline table (numbers must be quoted)");
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0, line_ = 1, line_start_ = 0;
};

inline Value parse_text(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Typed decoding helpers.

inline void allow_keys(const Value& t, std::initializer_list<std::string_view> keys)
{
    for (const auto& [k, v] : t.entries) {
        bool ok = false;
        for (auto a : keys) ok = ok || a == k;
        if (!ok) fail(v, "unknown key '" + k + "'");
    }
}

inline const Value& require(const Value& t, std::string_view key, Value::Kind kind)
{
    const Value* v = t.find(key);
    if (!v) fail(t, "missing key '" + std::string(key) + "'");
    if (v->kind != kind) fail(*v, "key '" + std::string(key) + "' has the wrong type");
    return *v;
}

inline const Value* optional_table(const Value& t, std::string_view key)
{
    const Value* v = t.find(key);
    if (v && v->kind != Value::Kind::table) fail(*v, "key '" + std::string(key) + "' must be a table");
    return v;
}

inline Scalar scalar_of(const Value& v)
{
    if (v.kind != Value::Kind::string) fail(v, "coefficient must be a quoted rational");
    Scalar s;
    if (!try_parse_scalar(v.str, s)) fail(v, "malformed rational '" + v.str + "'");
    return s;
}

/// {name = "coef", ...} as a global vector over `basis`; names must have
/// the given parity when `parity` is set.
inline Vector combination(const Value& v, const GradedBasis& basis, std::optional<Parity> parity)
{
    if (v.kind != Value::Kind::table) fail(v, "value must be an inline table of coefficients");
    Vector out = zero_vector(basis.dim());
    for (const auto& [name, c] : v.entries) {
        auto i = basis.index_of(name);
        if (!i) fail(c, "undeclared basis name '" + name + "'");
        if (parity && basis.parity(*i) != *parity)
            fail(c, "'" + name + "' has the wrong parity here");
        out[*i] = scalar_of(c);
    }
    return out;
}

inline std::pair<std::size_t, std::size_t> pair_key(const Value& at, const std::string& key, const GradedBasis& basis)
{
    auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
        fail(at, "key '" + key + "' must have the form \"p,q\"");
    auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    std::string p = trim(key.substr(0, comma)), q = trim(key.substr(comma + 1));
    auto i = basis.index_of(p), j = basis.index_of(q);
    if (!i) fail(at, "undeclared basis name '" + p + "'");
    if (!j) fail(at, "undeclared basis name '" + q + "'");
    return {*i, *j};
}

inline GradedBasis basis_of(const Value& t)
{
    GradedBasis b;
    const Value* e = t.find("even");
    const Value* o = t.find("odd");
    if (e && e->kind != Value::Kind::array) fail(*e, "'even' must be an array of names");
    if (o && o->kind != Value::Kind::array) fail(*o, "'odd' must be an array of names");
    if (e) b.even = e->items;
    if (o) b.odd = o->items;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const std::string& n = b.name(i);
        const Value& at = i < b.d0() ? *e : *o;
        if (n.empty()) fail(at, "basis names must be nonempty");
        if (n.find(',') != std::string::npos) fail(at, "basis name '" + n + "' contains ','");
        if (!seen.insert(n).second) fail(at, "duplicate basis name '" + n + "'");
    }
    return b;
}

/// Twist block: each declared name maps to a combination of names of the
/// same parity; omitted rows are zero.
inline Matrix twist_of(const Value* t, const GradedBasis& basis, Parity parity)
{
    const std::size_t d = parity == Parity::even ? basis.d0() : basis.d1();
    const std::size_t off = parity == Parity::even ? 0 : basis.d0();
    Matrix m(d, d);
    if (!t) return m;
    for (const auto& [name, v] : t->entries) {
        auto i = basis.index_of(name);
        if (!i) fail(v, "undeclared basis name '" + name + "'");
        if (basis.parity(*i) != parity) fail(v, "'" + name + "' has the wrong parity here");
        Vector img = combination(v, basis, parity);
        for (std::size_t k = 0; k < d; ++k) m(k, *i - off) = img[off + k];
    }
    return m;
}

enum class PairSymmetry { symmetric, antisymmetric, mixed };

/// Entries "p,q" = {...} with mirror completion. Explicit mirrors must agree
/// with the completion. `left`/`right` are the argument parities (for mixed
/// tables either order is accepted and stored as (even, odd)).
inline std::map<std::pair<std::size_t, std::size_t>, Vector> pair_table(const Value* t, const GradedBasis& args,
                                                                       Parity left, Parity right,
                                                                       const GradedBasis& values, Parity out,
                                                                       PairSymmetry sym)
{
    std::map<std::pair<std::size_t, std::size_t>, Vector> entries;
    if (!t) return entries;
    for (const auto& [key, v] : t->entries) {
        auto [i, j] = pair_key(v, key, args);
        if (sym == PairSymmetry::mixed && args.parity(i) == right && args.parity(j) == left && left != right)
            std::swap(i, j);
        if (args.parity(i) != left || args.parity(j) != right)
            fail(v, "arguments of '" + key + "' have the wrong parity for this table");
        Vector val = combination(v, values, out);
        if (sym == PairSymmetry::antisymmetric && i == j && !is_zero(std::span<const Scalar>(val)))
            fail(v, "bracket of '" + key + "' with itself must vanish");
        auto set = [&](std::pair<std::size_t, std::size_t> k, const Vector& x) {
            auto it = entries.find(k);
            if (it != entries.end() && it->second != x)
                fail(v, "symmetry contradiction at '" + key + "'");
            entries[k] = x;
        };
        set({i, j}, val);
        if (sym == PairSymmetry::symmetric && i != j) set({j, i}, val);
        if (sym == PairSymmetry::antisymmetric && i != j) set({j, i}, Scalar(-1) * val);
    }
    return entries;
}

inline HomLieAntialgebra algebra_of(const Value& t, bool top_level)
{
    if (top_level)
        allow_keys(t, {"kind", "description", "even", "odd", "alpha", "beta", "product_even_even", "product_even_odd",
                       "bracket_odd_odd"});
    else allow_keys(t, {"even", "odd", "alpha", "beta", "product_even_even", "product_even_odd", "bracket_odd_odd"});
    GradedBasis b = basis_of(t);
    if (b.dim() == 0) fail(t, "algebra needs at least one basis name");
    const std::size_t d0 = b.d0(), d1 = b.d1();
    StructureTensor c00(d0, d0, d0), c01(d0, d1, d1), c11(d1, d1, d0);
    for (const auto& [k, v] : pair_table(optional_table(t, "product_even_even"), b, Parity::even, Parity::even, b,
                                         Parity::even, PairSymmetry::symmetric))
        for (std::size_t c = 0; c < d0; ++c) c00(k.first, k.second, c) = v[c];
    for (const auto& [k, v] : pair_table(optional_table(t, "product_even_odd"), b, Parity::even, Parity::odd, b,
                                         Parity::odd, PairSymmetry::mixed))
        for (std::size_t c = 0; c < d1; ++c) c01(k.first, k.second - d0, c) = v[d0 + c];
    for (const auto& [k, v] : pair_table(optional_table(t, "bracket_odd_odd"), b, Parity::odd, Parity::odd, b,
                                         Parity::even, PairSymmetry::antisymmetric))
        for (std::size_t c = 0; c < d0; ++c) c11(k.first - d0, k.second - d0, c) = v[c];
    Matrix alpha = twist_of(optional_table(t, "alpha"), b, Parity::even);
    Matrix beta = twist_of(optional_table(t, "beta"), b, Parity::odd);
    return HomLieAntialgebra(std::move(b), std::move(c00), std::move(c01), std::move(c11), std::move(alpha),
                             std::move(beta));
}

inline void check_kind(const Value& root, std::string_view expected, bool optional)
{
    const Value* k = root.find("kind");
    if (!k) {
        if (optional) return;
        fail(root, "missing key 'kind' (expected \"" + std::string(expected) + "\")");
    }
    if (k->kind != Value::Kind::string || k->str != expected)
        fail(*k, "document kind must be \"" + std::string(expected) + "\"");
}

inline const Value& sub_table(const Value& root, std::string_view key)
{
    return require(root, key, Value::Kind::table);
}

inline CoefficientSpace coefficients_of(const Value& t)
{
    allow_keys(t, {"even", "odd", "alpha", "beta"});
    GradedBasis b = basis_of(t);
    return {b, twist_of(optional_table(t, "alpha"), b, Parity::even), twist_of(optional_table(t, "beta"), b, Parity::odd)};
}

// ---------------------------------------------------------------------------
// Emitting.

inline std::string key_text(const std::string& k)
{
    bool bare = !k.empty();
    for (char c : k) bare = bare && bare_char(c);
    if (bare) return k;
    std::string out = "\"";
    for (char c : k) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '\t') {
            out += "\\t";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

inline std::string string_text(const std::string& s)
{
    std::string q = key_text(s);
    return q.front() == '"' ? q : "\"" + s + "\"";
}

inline std::string names_text(const std::vector<std::string>& names)
{
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + string_text(names[i]);
    return out + "]";
}

/// { name = "coef", ... } over the given global indices, zeros omitted.
inline std::string combination_text(const Vector& v, const GradedBasis& basis)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        out += (first ? " " : ", ") + key_text(basis.name(k)) + " = \"" + to_string(v[k]) + "\"";
        first = false;
    }
    return out + (first ? "}" : " }");
}

inline std::string pair_name(const GradedBasis& b, std::size_t i, std::size_t j)
{
    return "\"" + b.name(i) + "," + b.name(j) + "\"";
}

/// Body of an algebra (without a kind line) under an optional table prefix.
inline void emit_algebra_body(std::ostream& os, const HomLieAntialgebra& a, const std::string& prefix)
{
    const auto& b = a.basis();
    const std::size_t d0 = a.d0(), n = a.dim();
    auto header = [&](const char* name) {
        os << "\n[" << (prefix.empty() ? "" : prefix + ".") << name << "]\n";
    };
    if (!prefix.empty()) os << "\n[" << prefix << "]\n";
    os << "even = " << names_text(b.even) << "\n";
    os << "odd = " << names_text(b.odd) << "\n";
    header("alpha");
    for (std::size_t i = 0; i < d0; ++i) {
        Vector col = a.twist(a.unit(i));
        if (!is_zero(std::span<const Scalar>(col))) os << key_text(b.name(i)) << " = " << combination_text(col, b) << "\n";
    }
    header("beta");
    for (std::size_t i = d0; i < n; ++i) {
        Vector col = a.twist(a.unit(i));
        if (!is_zero(std::span<const Scalar>(col))) os << key_text(b.name(i)) << " = " << combination_text(col, b) << "\n";
    }
    auto emit_pairs = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1, bool upper) {
        for (std::size_t i = i0; i < i1; ++i)
            for (std::size_t j = upper ? std::max(i, j0) : j0; j < j1; ++j) {
                const Vector& p = a.product(i, j);
                if (!is_zero(std::span<const Scalar>(p)))
                    os << pair_name(b, i, j) << " = " << combination_text(p, b) << "\n";
            }
    };
    header("product_even_even");
    emit_pairs(0, d0, 0, d0, true);
    header("product_even_odd");
    emit_pairs(0, d0, d0, n, false);
    header("bracket_odd_odd");
    emit_pairs(d0, n, d0, n, true);
}

} // namespace doc

// ---------------------------------------------------------------------------
// Public document API.

inline std::string document_kind(std::string_view text)
{
    doc::Value root = doc::parse_text(text);
    const doc::Value* k = root.find("kind");
    if (!k) return "algebra";
    if (k->kind != doc::Value::Kind::string) doc::fail(*k, "'kind' must be a string");
    return k->str;
}

inline HomLieAntialgebra parse_algebra(std::string_view text)
{
    doc::Value root = doc::parse_text(text);
    doc::check_kind(root, "algebra", true);
    try {
        return doc::algebra_of(root, true);
    } catch (const std::invalid_argument& e) {
        throw ParseError(root.line, root.column, e.what());
    }
}

inline std::string emit_algebra(const HomLieAntialgebra& a)
{
    std::ostringstream os;
    os << "kind = \"algebra\"\n";
    doc::emit_algebra_body(os, a, "");
    return os.str();
}

/// Cocycle with values in the [coefficients] space; argument names refer to `a`.
inline Cocycle2 parse_cocycle(std::string_view text, const HomLieAntialgebra& a)
{
    using namespace doc;
    Value root = parse_text(text);
    check_kind(root, "cocycle", false);
    allow_keys(root, {"kind", "description", "coefficients", "omega0", "omega1", "omega2"});
    CoefficientSpace V = coefficients_of(sub_table(root, "coefficients"));
    Cocycle2 w = Cocycle2::zero(a, V);
    const auto& b = a.basis();
    const std::size_t d0 = a.d0(), m0 = V.m0();
    for (const auto& [k, v] : pair_table(optional_table(root, "omega0"), b, Parity::even, Parity::even, V.basis,
                                         Parity::even, PairSymmetry::symmetric))
        w.omega0(k.first, k.second) = Vector(v.begin(), v.begin() + static_cast<long>(m0));
    for (const auto& [k, v] : pair_table(optional_table(root, "omega1"), b, Parity::even, Parity::odd, V.basis,
                                         Parity::odd, PairSymmetry::mixed))
        w.omega1(k.first, k.second - d0) = Vector(v.begin() + static_cast<long>(m0), v.end());
    for (const auto& [k, v] : pair_table(optional_table(root, "omega2"), b, Parity::odd, Parity::odd, V.basis,
                                         Parity::even, PairSymmetry::antisymmetric))
        w.omega2(k.first - d0, k.second - d0) = Vector(v.begin(), v.begin() + static_cast<long>(m0));
    return w;
}

inline std::string emit_cocycle(const HomLieAntialgebra& a, const Cocycle2& w)
{
    using namespace doc;
    std::ostringstream os;
    const auto& V = w.coefficients;
    const auto& b = a.basis();
    const std::size_t d0 = a.d0(), d1 = a.d1(), m0 = V.m0();
    auto in_v = [&](const Vector& x, bool even) {
        Vector g = zero_vector(V.basis.dim());
        for (std::size_t c = 0; c < x.size(); ++c) g[(even ? 0 : m0) + c] = x[c];
        return combination_text(g, V.basis);
    };
    os << "kind = \"cocycle\"\n\n[coefficients]\n";
    os << "even = " << names_text(V.basis.even) << "\nodd = " << names_text(V.basis.odd) << "\n";
    os << "\n[coefficients.alpha]\n";
    for (std::size_t c = 0; c < m0; ++c)
        if (!is_zero(std::span<const Scalar>(V.alpha.column(c))))
            os << key_text(V.basis.even[c]) << " = " << in_v(V.alpha.column(c), true) << "\n";
    os << "\n[coefficients.beta]\n";
    for (std::size_t c = 0; c < V.m1(); ++c)
        if (!is_zero(std::span<const Scalar>(V.beta.column(c))))
            os << key_text(V.basis.odd[c]) << " = " << in_v(V.beta.column(c), false) << "\n";
    os << "\n[omega0]\n";
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = i; j < d0; ++j)
            if (!is_zero(std::span<const Scalar>(w.omega0(i, j))))
                os << pair_name(b, i, j) << " = " << in_v(w.omega0(i, j), true) << "\n";
    os << "\n[omega1]\n";
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            if (!is_zero(std::span<const Scalar>(w.omega1(i, j))))
                os << pair_name(b, i, d0 + j) << " = " << in_v(w.omega1(i, j), false) << "\n";
    os << "\n[omega2]\n";
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = i; j < d1; ++j)
            if (!is_zero(std::span<const Scalar>(w.omega2(i, j))))
                os << pair_name(b, d0 + i, d0 + j) << " = " << in_v(w.omega2(i, j), true) << "\n";
    return os.str();
}

/// Coefficient space for cohomology: kind = "coefficients" with even/odd names
/// and optional [alpha]/[beta] tables.
inline CoefficientSpace parse_coefficients(std::string_view text)
{
    using namespace doc;
    Value root = parse_text(text);
    check_kind(root, "coefficients", false);
    allow_keys(root, {"kind", "description", "even", "odd", "alpha", "beta"});
    GradedBasis b = basis_of(root);
    return {b, twist_of(optional_table(root, "alpha"), b, Parity::even),
            twist_of(optional_table(root, "beta"), b, Parity::odd)};
}

inline std::string emit_coefficients(const CoefficientSpace& V)
{
    using namespace doc;
    std::ostringstream os;
    auto block_vector = [](const CoefficientSpace& W, const Vector& x, bool even) {
        Vector g = zero_vector(W.basis.dim());
        for (std::size_t c = 0; c < x.size(); ++c) g[(even ? 0 : W.m0()) + c] = x[c];
        return g;
    };
    os << "kind = \"coefficients\"\n";
    os << "even = " << names_text(V.basis.even) << "\nodd = " << names_text(V.basis.odd) << "\n";
    os << "\n[alpha]\n";
    for (std::size_t c = 0; c < V.m0(); ++c)
        if (!is_zero(std::span<const Scalar>(V.alpha.column(c))))
            os << key_text(V.basis.even[c]) << " = " << combination_text(block_vector(V, V.alpha.column(c), true), V.basis) << "\n";
    os << "\n[beta]\n";
    for (std::size_t c = 0; c < V.m1(); ++c)
        if (!is_zero(std::span<const Scalar>(V.beta.column(c))))
            os << key_text(V.basis.odd[c]) << " = " << combination_text(block_vector(V, V.beta.column(c), false), V.basis) << "\n";
    return os.str();
}

/// Module algebra [module] and operators [rho0] (even elements of a) and
/// [rho1] (odd elements): "g,c" = {...} is rho(g) applied to module basis c.
struct ActionDocument {
    HomLieAntialgebra module;
    Action action;
};

inline ActionDocument parse_action(std::string_view text, const HomLieAntialgebra& a)
{
    using namespace doc;
    Value root = parse_text(text);
    check_kind(root, "action", false);
    allow_keys(root, {"kind", "description", "module", "rho0", "rho1"});
    const Value& mt = sub_table(root, "module");
    HomLieAntialgebra v;
    try {
        v = algebra_of(mt, false);
    } catch (const std::invalid_argument& e) {
        fail(mt, e.what());
    }
    Action rho = Action::zero(a, v);
    for (int which = 0; which < 2; ++which) {
        const Value* t = optional_table(root, which == 0 ? "rho0" : "rho1");
        if (!t) continue;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& [key, val] : t->entries) {
            auto comma = key.find(',');
            if (comma == std::string::npos) fail(val, "key '" + key + "' must have the form \"g,c\"");
            auto g = a.basis().index_of(key.substr(0, comma));
            auto c = v.basis().index_of(key.substr(comma + 1));
            if (!g) fail(val, "undeclared algebra name '" + key.substr(0, comma) + "'");
            if (!c) fail(val, "undeclared module name '" + key.substr(comma + 1) + "'");
            if ((a.basis().parity(*g) == Parity::odd) != (which == 1))
                fail(val, "'" + key.substr(0, comma) + "' belongs in [" + (which == 0 ? "rho1" : "rho0") + "]");
            if (!seen.insert({*g, *c}).second) fail(val, "duplicate entry '" + key + "'");
            Parity out = v.basis().parity(*c) + a.basis().parity(*g);
            rho.rho[*g].set_column(*c, combination(val, v.basis(), out));
        }
    }
    return {std::move(v), std::move(rho)};
}

inline std::string emit_action(const HomLieAntialgebra& a, const ActionDocument& d)
{
    using namespace doc;
    std::ostringstream os;
    os << "kind = \"action\"\n";
    emit_algebra_body(os, d.module, "module");
    for (int which = 0; which < 2; ++which) {
        os << "\n[" << (which == 0 ? "rho0" : "rho1") << "]\n";
        for (std::size_t g = 0; g < a.dim(); ++g) {
            if ((g >= a.d0()) != (which == 1)) continue;
            for (std::size_t c = 0; c < d.module.dim(); ++c) {
                Vector img = d.action.rho[g] * d.module.unit(c);
                if (!is_zero(std::span<const Scalar>(img)))
                    os << "\"" << a.basis().name(g) << "," << d.module.basis().name(c)
                       << "\" = " << combination_text(img, d.module.basis()) << "\n";
            }
        }
    }
    return os.str();
}

/// [map] src = { tgt = "c" } read against source and target bases.
inline GradedMorphism morphism_of(const doc::Value& t, const HomLieAntialgebra& src, const HomLieAntialgebra& tgt)
{
    using namespace doc;
    Matrix m(tgt.dim(), src.dim());
    for (const auto& [name, v] : t.entries) {
        auto i = src.basis().index_of(name);
        if (!i) fail(v, "undeclared source name '" + name + "'");
        m.set_column(*i, combination(v, tgt.basis(), src.basis().parity(*i)));
    }
    return GradedMorphism::from_matrix(m, src.d0(), tgt.d0());
}

inline std::string morphism_text(const GradedMorphism& f, const HomLieAntialgebra& src, const HomLieAntialgebra& tgt)
{
    std::ostringstream os;
    const Matrix m = f.as_matrix();
    for (std::size_t i = 0; i < src.dim(); ++i) {
        Vector col = m.column(i);
        if (!is_zero(std::span<const Scalar>(col)))
            os << doc::key_text(src.basis().name(i)) << " = " << doc::combination_text(col, tgt.basis()) << "\n";
    }
    return os.str();
}

inline GradedMorphism parse_morphism(std::string_view text, const HomLieAntialgebra& src, const HomLieAntialgebra& tgt)
{
    using namespace doc;
    Value root = parse_text(text);
    check_kind(root, "morphism", false);
    allow_keys(root, {"kind", "description", "map"});
    return morphism_of(sub_table(root, "map"), src, tgt);
}

inline std::string emit_morphism(const GradedMorphism& f, const HomLieAntialgebra& src, const HomLieAntialgebra& tgt)
{
    return "kind = \"morphism\"\n\n[map]\n" + morphism_text(f, src, tgt);
}

/// Extension bundle: [base], [total], [projection]. The kernel is ker pi
/// with the restricted twists; its basis is named k0, k1, ... .
inline CentralExtension extension_from_projection(HomLieAntialgebra base, HomLieAntialgebra total,
                                                  GradedMorphism projection)
{
    check_morphism_shape(total, base, projection);
    const Subspace k0 = kernel_basis(projection.even), k1 = kernel_basis(projection.odd);
    CentralExtension e;
    std::vector<Vector> c0, c1;
    for (std::size_t r = 0; r < k0.dim(); ++r) {
        e.kernel.basis.even.push_back("k" + std::to_string(r));
        c0.push_back(k0.basis_vector(r));
    }
    for (std::size_t r = 0; r < k1.dim(); ++r) {
        e.kernel.basis.odd.push_back("k" + std::to_string(k0.dim() + r));
        c1.push_back(k1.basis_vector(r));
    }
    e.inclusion = {Matrix::from_columns(total.d0(), c0), Matrix::from_columns(total.d1(), c1)};
    auto restrict = [](const Matrix& tw, const Matrix& inc) {
        Matrix out(inc.cols(), inc.cols());
        for (std::size_t c = 0; c < inc.cols(); ++c) {
            auto x = solve_linear(inc, tw * inc.column(c));
            if (!x) throw std::invalid_argument("kernel of the projection is not stable under the twists");
            out.set_column(c, *x);
        }
        return out;
    };
    e.kernel.alpha = restrict(total.alpha(), e.inclusion.even);
    e.kernel.beta = restrict(total.beta(), e.inclusion.odd);
    e.base = std::move(base);
    e.total = std::move(total);
    e.projection = std::move(projection);
    return e;
}

inline CentralExtension parse_extension(std::string_view text)
{
    using namespace doc;
    Value root = parse_text(text);
    check_kind(root, "extension", false);
    allow_keys(root, {"kind", "description", "base", "total", "projection"});
    const Value& bt = sub_table(root, "base");
    const Value& tt = sub_table(root, "total");
    const Value& pt = sub_table(root, "projection");
    HomLieAntialgebra base, total;
    try {
        base = algebra_of(bt, false);
    } catch (const std::invalid_argument& e) {
        fail(bt, e.what());
    }
    try {
        total = algebra_of(tt, false);
    } catch (const std::invalid_argument& e) {
        fail(tt, e.what());
    }
    GradedMorphism pi = morphism_of(pt, total, base);
    try {
        return extension_from_projection(std::move(base), std::move(total), std::move(pi));
    } catch (const std::invalid_argument& e) {
        fail(pt, e.what());
    }
}

inline std::string emit_extension(const CentralExtension& e)
{
    std::ostringstream os;
    os << "kind = \"extension\"\n";
    doc::emit_algebra_body(os, e.base, "base");
    doc::emit_algebra_body(os, e.total, "total");
    os << "\n[projection]\n" << morphism_text(e.projection, e.total, e.base);
    return os.str();
}

} // namespace hla
