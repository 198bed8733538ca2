#include "hla/uce.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hla;

TEST(Uce, K3FamilySatisfiesTheTheorem)
{
    for (Scalar mu : {Scalar(1), Scalar(2), Scalar(3)}) {
        SCOPED_TRACE(mu.get_str());
        UceResult u = build_uce(k3(mu));
        EXPECT_TRUE(u.base_perfect);
        EXPECT_EQ(u.uce_algebra.d0(), 1u);
        EXPECT_EQ(u.uce_algebra.d1(), 2u);
        EXPECT_TRUE(verify_uce(u).passed());
        EXPECT_TRUE(verify_axioms(u.uce_algebra).passed());
        Report k = kernel_vs_h2(k3(mu), u);
        EXPECT_TRUE(k.passed());
        EXPECT_EQ(k.dimension_of("ker_u"), 0);
        EXPECT_EQ(k.dimension_of("H2"), 0);
        EXPECT_TRUE(uce_is_perfect(u));
        EXPECT_TRUE(well_definedness_check(k3(mu), u).passed());
        // the trivial-kernel uce is isomorphic to the base through u
        EXPECT_EQ(rank(u.u.as_matrix()), 3u);
    }
}

TEST(Uce, DirectSumOfPerfectAlgebras)
{
    HomLieAntialgebra a = direct_sum(k3(2), k3(3));
    ASSERT_TRUE(is_perfect(a));
    UceResult u = build_uce(a);
    EXPECT_TRUE(verify_uce(u).passed());
    EXPECT_TRUE(kernel_vs_h2(a, u).passed());
    EXPECT_TRUE(uce_is_perfect(u));
    EXPECT_EQ(static_cast<long>(u.kernel_of_u.dim()), static_cast<long>(h2_homology(a).dim));
}

TEST(Uce, NonPerfectBaseIsRejectedWithSpan)
{
    try {
        build_uce(exe02(2));
        FAIL() << "expected NotPerfect";
    } catch (const NotPerfect& e) {
        EXPECT_EQ(e.span(), "a0 = a0.a0");
        EXPECT_FALSE(e.report().passed());
        EXPECT_NE(std::string(e.what()).find("a0 = a0.a0"), std::string::npos);
    }
    UceResult forced = build_uce(exe02(2), true);
    EXPECT_FALSE(forced.base_perfect);
    EXPECT_FALSE(uce_is_perfect(forced));
}

TEST(Uce, RelationHooks)
{
    // the relations checked in well_definedness also hold without the
    // symmetrizers on K3, and fail for the zero space
    HomLieAntialgebra a = k3(2);
    EXPECT_TRUE(well_definedness_check(a, build_ia(a, {false, true})).passed());
    EXPECT_FALSE(well_definedness_check(a, Subspace::zero(a.dim() * a.dim())).passed());
}

TEST(Uce, ExtensionBundle)
{
    UceResult u = build_uce(k3(2));
    CentralExtension e = uce_extension(u);
    EXPECT_TRUE(verify_central_extension(e).passed());
    EXPECT_EQ(e.kernel.basis.dim(), 0u);
}

TEST(Universality, K3Extensions)
{
    UceResult u = build_uce(k3(2));
    auto exts = fixtures::k3_extensions();
    ASSERT_EQ(exts.size(), 3u);
    for (const auto& [name, e] : exts) {
        SCOPED_TRACE(name);
        ASSERT_TRUE(verify_central_extension(e).passed());
        UniversalityCertificate c = universality_morphism(u, e);
        EXPECT_TRUE(c.commutes);
        EXPECT_TRUE(c.homomorphism);
        EXPECT_TRUE(c.unique);
        EXPECT_TRUE(c.report.passed());
        EXPECT_TRUE(compose(e.projection, c.phi) == u.u);
        EXPECT_TRUE(uniqueness_check(u, e, universality_map(u, e, 0), universality_map(u, e, 2)));
    }
    // the nontrivial kernels admit distinct sections
    EXPECT_EQ(universality_morphism(u, exts[1].second).report.dimension_of("sections_differ"), 1);
    EXPECT_EQ(universality_morphism(u, exts[2].second).report.dimension_of("sections_differ"), 1);
}

TEST(Universality, KernelValuedPerturbationIsRejected)
{
    UceResult u = build_uce(k3(2));
    const CentralExtension e = fixtures::k3_extensions()[2].second;
    GradedMorphism phi = universality_map(u, e);
    GradedMorphism bent = phi;
    const std::size_t z = *e.total.basis().index_of("z") - e.total.d0();
    bent.odd(z, 0) += 1;
    EXPECT_THROW(uniqueness_check(u, e, phi, bent), PreconditionFailure);
}

TEST(Universality, BaseMismatch)
{
    UceResult u = build_uce(k3(2));
    CentralExtension e = fixtures::k3_extensions()[0].second;
    e.base = k3(3);
    EXPECT_THROW(universality_map(u, e), BaseMismatch);
}
