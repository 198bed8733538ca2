#pragma once

// Fixtures shared by the unit tests and the acceptance runner.

#include "hla/builtin.hpp"
#include "hla/checks.hpp"
#include "hla/extensions.hpp"
#include "hla/homology.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hla::fixtures {

struct Perturbation {
    std::string label;
    HomLieAntialgebra algebra;
};

/// Every +1 change of one independent product structure constant, with the
/// supercommutative mirror entry adjusted to match.
inline std::vector<Perturbation> product_perturbations(const HomLieAntialgebra& a, const Scalar& delta = 1)
{
    std::vector<Perturbation> out;
    const auto& b = a.basis();
    const std::size_t d0 = a.d0(), d1 = a.d1();
    auto make = [&](StructureTensor c00, StructureTensor c01, StructureTensor c11, std::string label) {
        out.push_back({std::move(label), HomLieAntialgebra(b, std::move(c00), std::move(c01), std::move(c11),
                                                           a.alpha(), a.beta())});
    };
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = i; j < d0; ++j)
            for (std::size_t k = 0; k < d0; ++k) {
                StructureTensor c = a.even_even();
                c(i, j, k) += delta;
                if (i != j) c(j, i, k) += delta;
                make(c, a.even_odd(), a.bracket(), b.name(i) + "." + b.name(j) + " -> " + b.name(k));
            }
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t k = 0; k < d1; ++k) {
                StructureTensor c = a.even_odd();
                c(i, j, k) += delta;
                make(a.even_even(), c, a.bracket(), b.name(i) + "." + b.name(d0 + j) + " -> " + b.name(d0 + k));
            }
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = i + 1; j < d1; ++j)
            for (std::size_t k = 0; k < d0; ++k) {
                StructureTensor c = a.bracket();
                c(i, j, k) += delta;
                c(j, i, k) -= delta;
                make(a.even_even(), a.even_odd(), c,
                     "[" + b.name(d0 + i) + "," + b.name(d0 + j) + "] -> " + b.name(k));
            }
    return out;
}

/// V = {0; z} with beta(z) = mu z.
inline CoefficientSpace odd_line(const Scalar& mu)
{
    CoefficientSpace v{GradedBasis{{}, {"z"}}, Matrix(0, 0), Matrix(1, 1)};
    v.beta(0, 0) = mu;
    return v;
}

/// V = {w; 0} with alpha(w) = w.
inline CoefficientSpace even_line()
{
    return {GradedBasis{{"w"}, {}}, Matrix::identity(1), Matrix(0, 0)};
}

/// The exe02 cocycle omega1(eps, a1) = mu z, optionally with an extra even
/// coordinate w (alpha(w) = w) in the coefficient space.
inline Cocycle2 exe02_cocycle(const Scalar& mu, bool with_w = false)
{
    CoefficientSpace v = odd_line(mu);
    if (with_w) v = {GradedBasis{{"w"}, {"z"}}, Matrix::identity(1), v.beta};
    Cocycle2 w = Cocycle2::zero(exe02(mu), v);
    w.omega1(0, 0)[0] = mu;
    return w;
}

/// Central extensions of K3(2) used for the universality property: trivial
/// kernel, a 1-dim even kernel with w = 0, and a 1-dim odd kernel with the
/// cocycle omega1(eps, a) = z (beta(z) = 2z).
inline std::vector<std::pair<std::string, CentralExtension>> k3_extensions()
{
    const HomLieAntialgebra a = k3(2);
    std::vector<std::pair<std::string, CentralExtension>> out;
    CoefficientSpace none{GradedBasis{}, Matrix(0, 0), Matrix(0, 0)};
    out.emplace_back("trivial kernel", central_extension_from_cocycle(a, Cocycle2::zero(a, none)));
    out.emplace_back("even kernel, w = 0", central_extension_from_cocycle(a, Cocycle2::zero(a, even_line())));
    Cocycle2 w = Cocycle2::zero(a, odd_line(2));
    w.omega1(0, 0)[0] = 1;
    out.emplace_back("odd kernel, omega1(eps,a) = z", central_extension_from_cocycle(a, w));
    return out;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread = 3)
{
    std::uniform_int_distribution<int> num(-spread, spread), den(1, 3), zero(0, 2);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (zero(rng) != 0) {
                m(i, j) = Scalar(num(rng), den(rng));
                m(i, j).canonicalize();
            }
    return m;
}

/// Grade-preserving map with entries in {-1, 0, 1}.
inline GradedMorphism random_graded_map(std::mt19937& rng, const HomLieAntialgebra& src,
                                        const HomLieAntialgebra& tgt)
{
    std::uniform_int_distribution<int> e(-1, 1);
    GradedMorphism f = GradedMorphism::zero(src, tgt);
    for (std::size_t i = 0; i < f.even.rows(); ++i)
        for (std::size_t j = 0; j < f.even.cols(); ++j) f.even(i, j) = e(rng);
    for (std::size_t i = 0; i < f.odd.rows(); ++i)
        for (std::size_t j = 0; j < f.odd.cols(); ++j) f.odd(i, j) = e(rng);
    return f;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct RunResult {
    int status = -1;
    std::string out;
};

/// Runs a shell command, capturing stdout.
inline RunResult run(const std::string& command)
{
    RunResult r;
    FILE* p = popen(command.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace hla::fixtures
