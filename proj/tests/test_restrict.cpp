#include <gtest/gtest.h>

#include <random>

#include "hqmap/combinat.hpp"
#include "hqmap/restrict.hpp"
#include "oracles.hpp"

using namespace hqmap;

namespace {

MultiIndex mi(std::initializer_list<int> e) { return MultiIndex(e); }

HermitianForm s_form(int a, int b)
{
    RealPoly s(static_cast<std::size_t>(a + b));
    for (int j = 0; j < a + b; ++j)
        s.add(MultiIndex::unit(static_cast<std::size_t>(a + b), static_cast<std::size_t>(j)), Rational(j < a ? 1 : -1));
    return form_from_real_poly(s);
}

HermitianForm power(const HermitianForm& f, int d)
{
    HermitianForm r = f;
    for (int i = 1; i < d; ++i) r = r * f;
    return r;
}

// Random bihomogeneous form of bidegree (d, d) with small integer data.
HermitianForm random_bihomogeneous(std::size_t n, int d, int entries, std::mt19937_64& rng)
{
    const auto basis = monomials_of_degree(n, d);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> val(-4, 4);
    std::vector<FormEntry> list;
    std::set<std::pair<MultiIndex, MultiIndex>> seen;
    for (int i = 0; i < entries; ++i) {
        auto a = basis[pick(rng)], b = basis[pick(rng)];
        if (seen.count({a, b}) || seen.count({b, a})) continue;
        seen.insert({a, b});
        list.push_back({a, b, Gaussian(Rational(val(rng)), a == b ? Rational(0) : Rational(val(rng)))});
    }
    return form_from_entries(n, list);
}

} // namespace

TEST(Veronese, Dim)
{
    EXPECT_EQ(veronese_dim(3, 2), 6);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(veronese_dim(n, 0), 1);
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(veronese_dim(2, d), d + 1);
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) EXPECT_EQ(veronese_dim(n, d), Integer(monomials_of_degree(n, d).size()));
}

TEST(RestrictionMatrix, LineInPlane)
{
    const Gaussian c(Rational(2), Rational(-1, 3));
    GaussMatrix L(2, 1);
    L(0, 0) = Gaussian(1);
    L(1, 0) = c;
    const auto R = restriction_matrix(AffineEmbedding(L), 2);
    ASSERT_EQ(R.rows, (std::vector<MultiIndex>{mi({2, 0}), mi({1, 1}), mi({0, 2})}));
    ASSERT_EQ(R.cols, (std::vector<MultiIndex>{mi({2})}));
    EXPECT_EQ(R.T(0, 0), Gaussian(1));
    EXPECT_EQ(R.T(1, 0), c);
    EXPECT_EQ(R.T(2, 0), c * c);
}

TEST(RestrictionMatrix, IdentityEmbedding)
{
    for (int d = 0; d <= 3; ++d) {
        const auto R = restriction_matrix(AffineEmbedding(GaussMatrix::identity(3)), d);
        EXPECT_EQ(R.T, GaussMatrix::identity(R.rows.size()));
        EXPECT_EQ(R.rows, R.cols);
    }
}

TEST(RestrictionMatrix, VeroneseIdentityAtRandomPoints)
{
    Sampler rng(4);
    for (int t = 0; t < 10; ++t) {
        const bool affine = t % 2 == 1;
        const auto E = sample_graph_embedding(4, 2, affine, rng, 50);
        const int d = 1 + t % 3;
        const auto R = restriction_matrix(E, d);
        std::vector<Gaussian> w{rng.gaussian(20), rng.gaussian(20)};
        std::vector<Gaussian> z(4);
        for (std::size_t i = 0; i < 4; ++i) {
            z[i] = E.translation()[i];
            for (std::size_t j = 0; j < 2; ++j) z[i] += E.linear()(i, j) * w[j];
        }
        auto mono = [](const MultiIndex& m, const std::vector<Gaussian>& x) {
            Gaussian v(1);
            for (std::size_t j = 0; j < m.size(); ++j)
                for (int e = 0; e < m[j]; ++e) v *= x[j];
            return v;
        };
        for (std::size_t i = 0; i < R.rows.size(); ++i) {
            Gaussian rhs(0);
            for (std::size_t j = 0; j < R.cols.size(); ++j) rhs += R.T(i, j) * mono(R.cols[j], w);
            ASSERT_EQ(mono(R.rows[i], z), rhs);
        }
    }
}

TEST(Embedding, RejectsRankDeficient)
{
    GaussMatrix L(3, 2);
    L(0, 0) = Gaussian(1);
    L(0, 1) = Gaussian(2);
    try {
        AffineEmbedding E(L);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "RankDeficientEmbedding");
    }
}

TEST(Restrict, SpecExamples)
{
    GaussMatrix L(3, 1);
    L(0, 0) = Gaussian(1);
    auto r = restrict_form(s_form(2, 1), AffineEmbedding(L));
    EXPECT_EQ(r, form_from_entries(1, {{mi({1}), mi({1}), Gaussian(1)}}));
    EXPECT_EQ(form_rank(r), 1u);
    EXPECT_THROW(restrict_form(s_form(2, 2), AffineEmbedding(L)), DomainError);
}

TEST(Restrict, CommutesWithComposeLinear)
{
    Sampler rng(21);
    std::mt19937_64 g(21);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 3 + t % 2;
        auto f = random_bihomogeneous(n, 1 + t % 2, 5, g) + power(s_form(2, static_cast<int>(n) - 2), 1 + t % 2);
        const auto E = sample_graph_embedding(n, 1 + t % 2, t % 3 == 0, rng, 30);
        ASSERT_EQ(restrict_form(f, E), compose_linear(f, E.linear(), E.translation()));
    }
}

TEST(Restrict, EmbeddingIndependence)
{
    Sampler rng(8);
    std::mt19937_64 g(8);
    for (int t = 0; t < 20; ++t) {
        auto f = random_bihomogeneous(4, 2, 8, g);
        const auto E = sample_general_embedding(4, 2, rng, 5);
        // Same subspace, different basis: E * P with P invertible.
        GaussMatrix P(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) P(i, j) = rng.small_gaussian(4);
        } while (rank(P) < 2);
        const AffineEmbedding F(E.linear() * P);
        ASSERT_EQ(form_rank(restrict_form(f, E)), form_rank(restrict_form(f, F)));
    }
}

TEST(GenericRank, SpecExamples)
{
    const auto sq = power(s_form(2, 1), 2);
    const auto g = generic_restriction_rank(sq, 2);
    EXPECT_EQ(g.rank, 3u);
    EXPECT_EQ(Integer(g.rank), veronese_dim(2, 2));
    EXPECT_LT(g.failure_bound, 1e-10);
    EXPECT_EQ(generic_restriction_rank(HermitianForm(3), 2).rank, 0u);
    // |z1 + z2|^2 depends on a single direction: full rank 1 survives.
    auto lin = form_from_entries(3, {{mi({1, 0, 0}), mi({1, 0, 0}), Gaussian(1)},
                                     {mi({0, 1, 0}), mi({0, 1, 0}), Gaussian(1)},
                                     {mi({1, 0, 0}), mi({0, 1, 0}), Gaussian(1)}});
    EXPECT_EQ(generic_restriction_rank(lin, 1).rank, form_rank(lin));
    EXPECT_THROW(generic_restriction_rank(sq, 3), DomainError);
    EXPECT_THROW(generic_restriction_rank(sq, 0), DomainError);
}

TEST(GenericRank, RealSamplesWouldUndershoot)
{
    // i z1 conj(z2) - i z2 conj(z1) on the line (v w, w) is i (v - conj v) |w|^2.
    auto f = form_from_entries(2, {{mi({1, 0}), mi({0, 1}), Gaussian(0, 1)}});
    EXPECT_EQ(generic_restriction_rank(f, 1).rank, 1u);
    GaussMatrix L(2, 1);
    L(0, 0) = Gaussian(Rational(7, 3));
    L(1, 0) = Gaussian(1);
    EXPECT_EQ(form_rank(restrict_form(f, AffineEmbedding(L))), 0u);
}

TEST(MaxAffineRank, SpecExamples)
{
    const auto sq = power(s_form(2, 1), 2);
    AffineRankOptions lin;
    lin.translate = false;
    EXPECT_EQ(max_affine_rank(sq, 2, lin), 3u);
    // Translated planes keep the lower-degree parts, so the affine value is larger.
    EXPECT_EQ(max_affine_rank(sq, 2), 6u);
    auto one = form_from_entries(3, {{mi({1, 0, 0}), mi({1, 0, 0}), Gaussian(1)}});
    EXPECT_EQ(max_affine_rank(one, 1), 1u);
    EXPECT_EQ(max_affine_rank(one, 2), 1u);
}

TEST(MaxAffineRank, LinearAgreesWithGenericOnSameSeeds)
{
    std::mt19937_64 g(3);
    for (int t = 0; t < 10; ++t) {
        auto f = random_bihomogeneous(3, 2, 6, g);
        AffineRankOptions o;
        o.translate = false;
        o.samples = 3;
        o.seed = static_cast<std::uint64_t>(t);
        GenericRankOptions go;
        go.seed = static_cast<std::uint64_t>(t);
        EXPECT_EQ(max_affine_rank(f, 2, o), generic_restriction_rank(f, 2, go).rank);
    }
}

TEST(MaxAffineRank, GraphFamilyMatchesGeneralHyperplanes)
{
    std::mt19937_64 g(17);
    Sampler rng(17);
    for (int t = 0; t < 10; ++t) {
        auto f = random_bihomogeneous(3, 1 + t % 2, 6, g);
        std::size_t general = 0;
        for (int k = 0; k < 50; ++k)
            general = std::max(general, form_rank(restrict_form(f, sample_general_embedding(3, 2, rng, 6))));
        AffineRankOptions o;
        o.translate = false;
        o.samples = 50;
        o.seed = static_cast<std::uint64_t>(t);
        EXPECT_EQ(max_affine_rank(f, 2, o), general);
    }
}

TEST(QuadricPlane, StaysOnQuadric)
{
    Sampler rng(9);
    for (int t = 0; t < 10; ++t) {
        const auto E = sample_quadric_plane(2, 1, rng);
        HermitianForm def = s_form(2, 1);
        def = def - form_from_entries(3, {{MultiIndex(3), MultiIndex(3), Gaussian(1)}});
        EXPECT_TRUE(restrict_form(def, E).is_zero());
    }
    for (int t = 0; t < 5; ++t) {
        const auto E = sample_quadric_plane(3, 1, rng);
        HermitianForm def = s_form(3, 1) - form_from_entries(4, {{MultiIndex(4), MultiIndex(4), Gaussian(1)}});
        EXPECT_TRUE(restrict_form(def, E).is_zero());
    }
    EXPECT_THROW(sample_quadric_plane(1, 1, rng), DomainError);
}

TEST(Green, InequalityOnRandomSystems)
{
    std::mt19937_64 g(99);
    for (int nvars : {3, 4}) {
        const int n = nvars - 1;
        for (int d = 1; d <= 3; ++d) {
            const auto mons = monomials_of_degree(static_cast<std::size_t>(nvars), d);
            for (int t = 0; t < 8; ++t) {
                std::uniform_int_distribution<std::size_t> rows(1, mons.size());
                std::uniform_int_distribution<int> val(-3, 3);
                std::vector<HoloPoly> sys(rows(g), HoloPoly(static_cast<std::size_t>(nvars)));
                for (auto& p : sys)
                    for (const auto& m : mons)
                        if (g() % 3 == 0) p.add(m, Gaussian(Rational(val(g)), Rational(val(g))));
                const auto N = rank(coefficient_matrix(sys));
                const auto k = generic_system_restriction_rank(sys, static_cast<std::size_t>(n)).rank;
                ASSERT_LE(Integer(N), green_K(n, k)) << "n=" << n << " d=" << d;
                ASSERT_GE(Integer(k), green_G_stable(n, N));
            }
        }
    }
}

TEST(HermitianBound, BihomogeneousForms)
{
    std::mt19937_64 g(5);
    for (int nvars : {3, 4}) {
        const int n = nvars - 1;
        for (int d = 1; d <= 2; ++d)
            for (int t = 0; t < 3; ++t) {
                auto f = random_bihomogeneous(static_cast<std::size_t>(nvars), d, 8, g);
                const auto r = form_rank(f);
                for (int m = 1; m <= n - 1; ++m) {
                    AffineRankOptions o;
                    o.translate = false;
                    o.samples = 5;
                    const auto k = max_affine_rank(f, static_cast<std::size_t>(m + 1), o);
                    ASSERT_LE(Integer(r), hermitian_R(m, n, k)) << "m=" << m << " n=" << n;
                }
            }
    }
}
