#include <gtest/gtest.h>

#include <random>

#include "hqmap/form_io.hpp"
#include "hqmap/forms.hpp"
#include "hqmap/random.hpp"
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

HermitianForm random_form(std::size_t n, int maxdeg, int entries, std::mt19937_64& rng)
{
    const auto basis = monomials_up_to_degree(n, maxdeg);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> val(-5, 5);
    std::vector<FormEntry> list;
    std::set<std::pair<MultiIndex, MultiIndex>> seen;
    for (int i = 0; i < entries; ++i) {
        auto a = basis[pick(rng)], b = basis[pick(rng)];
        if (seen.count({a, b}) || seen.count({b, a})) continue;
        seen.insert({a, b});
        Gaussian v(Rational(val(rng), 1 + (val(rng) + 5) % 3), a == b ? Rational(0) : Rational(val(rng)));
        list.push_back({a, b, v});
    }
    return form_from_entries(n, list);
}

GaussMatrix random_invertible(std::size_t n, Sampler& rng)
{
    for (;;) {
        GaussMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.small_gaussian(3);
        if (rank(m) == n) return m;
    }
}

} // namespace

TEST(Form, EntriesValidation)
{
    EXPECT_THROW(form_from_entries(2, {{mi({1, 0}), mi({1, 0}), Gaussian(1, 1)}}), DomainError);
    EXPECT_THROW(form_from_entries(2, {{mi({1, 0}), mi({1}), Gaussian(1)}}), DomainError);
    EXPECT_THROW(form_from_entries(2, {{mi({1, 0}), mi({0, 1}), Gaussian(1, 2)}, {mi({0, 1}), mi({1, 0}), Gaussian(1, 2)}}),
                 DomainError);
    // Mirror is inferred.
    auto f = form_from_entries(2, {{mi({1, 0}), mi({0, 1}), Gaussian(1, 2)}});
    EXPECT_EQ(f.entry(mi({0, 1}), mi({1, 0})), Gaussian(1, -2));
}

TEST(Form, SpecDecomposeExamples)
{
    auto f = form_from_entries(2, {{mi({1, 0}), mi({1, 0}), Gaussian(1)}, {mi({0, 1}), mi({0, 1}), Gaussian(-1)}});
    auto d = decompose(f);
    ASSERT_EQ(d.components.size(), 2u);
    EXPECT_EQ(d.components[0].sign, 1);
    EXPECT_EQ(d.components[0].weight, 1);
    EXPECT_EQ(d.components[0].poly, HoloPoly::variable(2, 0));
    EXPECT_EQ(d.components[1].sign, -1);
    EXPECT_EQ(d.components[1].poly, HoloPoly::variable(2, 1));

    auto cross = form_from_entries(2, {{mi({1, 0}), mi({0, 1}), Gaussian(1)}});
    d = decompose(cross);
    ASSERT_EQ(d.components.size(), 2u);
    const HoloPoly z1 = HoloPoly::variable(2, 0), z2 = HoloPoly::variable(2, 1);
    EXPECT_EQ(d.components[0].sign, 1);
    EXPECT_EQ(d.components[0].weight, Rational(1, 2));
    EXPECT_EQ(d.components[0].poly, z1 + z2);
    EXPECT_EQ(d.components[1].sign, -1);
    EXPECT_EQ(d.components[1].weight, Rational(1, 2));
    EXPECT_EQ(d.components[1].poly, z1 - z2);
    EXPECT_EQ(norm_difference(d, false), cross);

    auto sq = s_form(2, 1) * s_form(2, 1);
    EXPECT_EQ(form_rank(sq), 6u);
    EXPECT_EQ(form_inertia(sq), (SignaturePair{4, 2}));
    d = decompose(sq);
    std::map<MultiIndex, Rational> weights;
    for (auto& c : d.components) {
        ASSERT_EQ(c.poly.size(), 1u);
        weights[c.poly.terms().begin()->first] = c.weight * c.sign;
    }
    EXPECT_EQ(weights[mi({1, 1, 0})], 2);
    EXPECT_EQ(weights[mi({1, 0, 1})], -2);
    EXPECT_EQ(weights[mi({2, 0, 0})], 1);
}

TEST(Form, ZeroForm)
{
    HermitianForm z(3);
    EXPECT_EQ(form_rank(z), 0u);
    EXPECT_EQ(form_inertia(z), (SignaturePair{0, 0}));
    EXPECT_TRUE(decompose(z).components.empty());
    EXPECT_TRUE(form_from_real_poly(RealPoly(3)).is_zero());
}

TEST(Form, FromRealPoly)
{
    auto s = s_form(2, 1);
    EXPECT_EQ(form_inertia(s), (SignaturePair{2, 1}));
    EXPECT_EQ(s.entry(mi({0, 0, 1}), mi({0, 0, 1})), Gaussian(-1));
}

TEST(Form, NormDifferenceExamples)
{
    WeightedHoloMap id{3, {{1, 1, HoloPoly::variable(3, 0)}, {1, 1, HoloPoly::variable(3, 1)}, {-1, 1, HoloPoly::variable(3, 2)}}};
    auto f = norm_difference(id, true);
    EXPECT_EQ(f.entry(MultiIndex(3), MultiIndex(3)), Gaussian(-1));
    EXPECT_EQ(form_inertia(f), (SignaturePair{2, 2}));
    WeightedHoloMap one{2, {{1, 2, HoloPoly::variable(2, 0)}}};
    EXPECT_EQ(norm_difference(one, false), form_from_entries(2, {{mi({1, 0}), mi({1, 0}), Gaussian(2)}}));
}

TEST(Form, ComposeLinearExamples)
{
    auto f = s_form(2, 1) * s_form(2, 1);
    EXPECT_EQ(compose_linear(f, GaussMatrix::identity(3)), f);
    auto g = form_from_entries(2, {{mi({1, 0}), mi({1, 0}), Gaussian(1)}, {mi({0, 1}), mi({0, 1}), Gaussian(1)}});
    GaussMatrix E(2, 1);
    E(0, 0) = Gaussian(1);
    EXPECT_EQ(compose_linear(g, E), form_from_entries(1, {{mi({1}), mi({1}), Gaussian(1)}}));
    EXPECT_THROW(compose_linear(g, GaussMatrix::identity(3)), DomainError);
}

TEST(FormProperty, DecomposeRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 4;
        auto f = random_form(n, 3, 2 + t % 9, rng);
        auto d = decompose(f);
        ASSERT_EQ(norm_difference(d, false), f);
        ASSERT_EQ(d.components.size(), form_rank(f));
        std::vector<HoloPoly> polys;
        for (auto& c : d.components) polys.push_back(c.poly);
        ASSERT_TRUE(polys.empty() || linearly_independent(polys));
        const auto in = form_inertia(f);
        ASSERT_EQ(in.pos + in.neg, form_rank(f));
        ASSERT_EQ(d.signature(), in);
    }
}

TEST(FormProperty, InertiaMatchesEigenSolver)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-9, 9), size(1, 12);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        GaussMatrix h(n, n);
        Eigen::MatrixXcd e(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        // Low-rank instances too, so zero eigenvalues are exercised.
        const bool low = t % 3 == 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Gaussian v(Rational(val(rng)), i == j ? Rational(0) : Rational(val(rng)));
                h(i, j) = v;
                h(j, i) = v.conj();
            }
        if (low) {
            GaussMatrix u(n, 2), d(2, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < 2; ++k) u(i, k) = Gaussian(Rational(val(rng)), Rational(val(rng)));
            d(0, 0) = Gaussian(1);
            d(1, 1) = Gaussian(-1);
            h = u * d * conjugate_transpose(u);
        }
        double norm = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) norm = std::max(norm, std::abs(oracle::to_c(h(i, j))));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = oracle::to_c(h(i, j)) / (norm > 0 ? norm : 1.0);
        const auto [p, q] = oracle::float_inertia(e, 1e-8);
        const auto exact = inertia(h);
        ASSERT_EQ(exact.pos, p) << "trial " << t;
        ASSERT_EQ(exact.neg, q) << "trial " << t;
        ASSERT_EQ(exact.rank(), rank(h));
    }
}

TEST(FormProperty, CoordinateChangeInvariance)
{
    std::mt19937_64 rng(5);
    Sampler s(3);
    for (int t = 0; t < 8; ++t) {
        const std::size_t n = 2 + t % 2;
        auto f = random_form(n, 2, 6, rng);
        const auto r = form_rank(f);
        const auto in = form_inertia(f);
        for (int k = 0; k < 50; ++k) {
            auto g = compose_linear(f, random_invertible(n, s));
            ASSERT_EQ(form_rank(g), r);
            ASSERT_EQ(form_inertia(g), in);
        }
    }
    auto sq = s_form(2, 1) * s_form(2, 1);
    for (int k = 0; k < 10; ++k) {
        auto g = compose_linear(sq, random_invertible(3, s));
        EXPECT_EQ(form_rank(g), 6u);
        EXPECT_EQ(form_inertia(g), (SignaturePair{4, 2}));
    }
}

TEST(FormIo, RoundTripAndErrors)
{
    const std::string text = "form n=2\n# comment\n1 0 ; 0 1 ; 1/2 ; -3\n\n0 0 ; 0 0 ; -1 ; 0\n";
    auto f = io::read_form(text);
    std::ostringstream out;
    io::write_form(out, f);
    EXPECT_EQ(io::read_form(out.str()), f);
    EXPECT_EQ(f.entry(mi({0, 1}), mi({1, 0})), Gaussian(Rational(1, 2), Rational(3)));

    try {
        io::read_form("form n=2\n1 0 ; 0 1 ; x ; 0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    try {
        io::read_form("form n=2\n1 0 ; 0 1 ; 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(io::read_form("forms n=2\n"), ParseError);
    EXPECT_THROW(io::read_form("form n=2\n1 0 0 ; 0 1 ; 1 ; 0\n"), ParseError);
    EXPECT_THROW(io::read_form("form n=1\n1 ; 1 ; 1 ; 1\n"), DomainError);
}
