#include <gtest/gtest.h>

#include <random>

#include "distrec/decomp/bordered.hpp"
#include "distrec/decomp/decomposition.hpp"
#include "distrec/decomp/spec.hpp"
#include "distrec/exact/determinant.hpp"
#include "distrec/recurrence/recurrence.hpp"
#include "distrec/trees/canonical.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/random.hpp"
#include "oracles.hpp"

using namespace distrec;
using namespace distrec::decomp;
using exact::det_bareiss;
using trees::path;
using trees::star;

namespace {

GenericInstance scalar_instance(long block, long alpha) { return GenericInstance(IntMatrix{{block}}, {BigInt(alpha)}); }

} // namespace

TEST(Compose, SpecExamples)
{
    EXPECT_TRUE(trees::isomorphic(compose(path(4), 0, path(2), 0), path(5)));
    EXPECT_TRUE(trees::isomorphic(compose(star(3), 0, path(2), 0), star(4)));
    EXPECT_THROW(compose(path(3), 3, path(2), 0), DomainError);
    EXPECT_THROW(compose(path(3), 0, path(2), 2), DomainError);
}

TEST(Compose, SizeIsSumMinusOne)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const Tree s = trees::random_tree(1 + trial % 7, rng());
        const Tree r = trees::random_tree(1 + trial % 9, rng());
        const Tree t = compose(s, trial % s.n(), r, trial % r.n());
        EXPECT_EQ(t.n(), s.n() + r.n() - 1);
    }
}

TEST(Decomposition, CanonicalizesAttachment)
{
    EXPECT_EQ(Decomposition(path(4), 0), Decomposition(path(4), 3));
    EXPECT_EQ(Decomposition(path(4), 1), Decomposition(path(4), 2));
    EXPECT_FALSE(Decomposition(path(4), 0) == Decomposition(path(4), 1));
    EXPECT_THROW(Decomposition(path(1), 0), DomainError);
    EXPECT_THROW(Decomposition(path(3), 5), DomainError);
}

TEST(DecompositionsEquivalent, SpecExamples)
{
    EXPECT_TRUE(decompositions_equivalent(Decomposition(path(4), 0), Decomposition(path(4), 3)));
    EXPECT_FALSE(decompositions_equivalent(Decomposition(star(3), 0), Decomposition(star(3), 1)));
    const Decomposition d(trees::star_like({1, 2}), 2);
    EXPECT_TRUE(decompositions_equivalent(d, d));
}

TEST(EnumerateDecompositions, SpecExamples)
{
    EXPECT_EQ(enumerate_decompositions(2).size(), 1u);
    EXPECT_EQ(enumerate_decompositions(4).size(), 4u);
    EXPECT_EQ(enumerate_decompositions(5).size(), 9u);
    EXPECT_EQ(enumerate_decompositions(6).size(), 20u);
    EXPECT_EQ(enumerate_decompositions(7).size(), 48u);
    EXPECT_THROW(enumerate_decompositions(13), ConfigError);
    EXPECT_THROW(enumerate_decompositions(1), DomainError);
}

TEST(EnumerateDecompositions, MatchesBruteForceOracle)
{
    for (std::size_t m = 2; m <= 6; ++m)
        EXPECT_EQ(enumerate_decompositions(m).size(), oracle::count_rooted(m)) << "m=" << m;
}

TEST(EnumerateDecompositions, PairwiseInequivalent)
{
    const auto list = enumerate_decompositions(7);
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            EXPECT_FALSE(decompositions_equivalent(list[i], list[j])) << i << " " << j;
}

TEST(BorderedTop, SpecExamples)
{
    const Decomposition p4_end(path(4), 0);
    EXPECT_EQ(bordered_top(p4_end, scalar_instance(0, 1)), trees::distance_matrix(path(5)));

    // K_{1,3} at a leaf: borders alpha, alpha+e, alpha+2e, alpha+2e.
    const Tree r = path(3);
    const GenericInstance g = instance_from_tree(r, 0);
    const IntMatrix m = bordered_top(Decomposition(star(3), 1), g);
    const std::size_t n = g.size();
    const long shifts[] = {0, 1, 2, 2};
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_EQ(m(i, n + b), g.alpha()[i] + shifts[b]);

    // Empty block
    const GenericInstance empty(IntMatrix(0, 0), {});
    const Decomposition d(trees::star_like({1, 1, 2}), 3);
    EXPECT_EQ(bordered_top(d, empty), trees::distance_matrix(d.subtree().relabeled([&] {
        std::vector<Vertex> perm(d.m());
        const auto order = d.border_order();
        for (std::size_t i = 0; i < order.size(); ++i)
            perm[order[i]] = i;
        return perm;
    }())));
}

TEST(BorderedTop, EqualsDistanceMatrixOfTheComposedTree)
{
    std::mt19937_64 rng(21);
    for (std::size_t m = 2; m <= 6; ++m)
        for (const Decomposition& d : enumerate_decompositions(m))
            for (int trial = 0; trial < 3; ++trial) {
                const Tree r = trees::random_tree(2 + trial * 2, rng());
                const Vertex y = rng() % r.n();
                const Tree t = compose(d.subtree(), d.attach(), r, y);
                ASSERT_EQ(bordered_top(d, instance_from_tree(r, y)), trees::distance_matrix(t));
            }
}

TEST(BorderedTop, SymmetricEvenForGenericBlocks)
{
    std::mt19937_64 rng(2);
    const GenericInstance g = sample_integer_instance(4, 10, false, rng);
    const IntMatrix m = bordered_top(Decomposition(path(5), 2), g);
    for (std::size_t i = 4; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            EXPECT_EQ(m(i, j), m(j, i));
}

TEST(BorderedPath, SpecExamples)
{
    std::mt19937_64 rng(6);
    const GenericInstance g = sample_integer_instance(3, 9, false, rng);
    const IntMatrix k1 = bordered_path(1, g);
    ASSERT_EQ(k1.rows(), 4u);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(k1(i, j), g.block()(i, j));
        EXPECT_EQ(k1(i, 3), g.alpha()[i]);
        EXPECT_EQ(k1(3, i), g.alpha()[i]);
    }
    EXPECT_EQ(k1(3, 3), 0);

    const IntMatrix p3 = bordered_path(2, scalar_instance(0, 1));
    EXPECT_EQ(p3, trees::distance_matrix(path(3)));
    EXPECT_EQ(det_bareiss(p3), 4);
    EXPECT_THROW(bordered_path(0, g), DomainError);
}

TEST(BorderedPath, TreeSourcedDeterminantsFollowTheClosedForm)
{
    for (std::size_t rn = 1; rn <= 7; ++rn)
        for (const Tree& r : trees::enumerate_trees(rn))
            for (Vertex y = 0; y < r.n(); ++y)
                for (std::size_t k = 1; k <= 5; ++k)
                    ASSERT_EQ(det_bareiss(bordered_path(k, instance_from_tree(r, y))),
                              recurrence::graham_pollak(r.n() + k - 1));
}

TEST(GenericInstance, ShapeValidation)
{
    EXPECT_THROW(GenericInstance(IntMatrix(2, 3), {1, 2}), DimensionError);
    EXPECT_THROW(GenericInstance(IntMatrix(2, 2), {1}), DimensionError);
    EXPECT_THROW(instance_from_tree(path(3), 3), DomainError);
}

TEST(GenericInstance, SymmetricSampling)
{
    std::mt19937_64 rng(4);
    const GenericInstance g = sample_integer_instance(5, 10, true, rng);
    EXPECT_EQ(g.block(), g.block().transpose());
    const GenericInstance h = sample_field_instance(5, 101, false, rng);
    for (const auto& x : h.block().entries()) {
        EXPECT_GE(x, 0);
        EXPECT_LT(x, 101);
    }
}

TEST(SubtreeSpec, Grammar)
{
    EXPECT_EQ(parse_subtree_spec("path:4"), path(4));
    EXPECT_EQ(parse_subtree_spec("star:5"), star(4));
    EXPECT_EQ(parse_subtree_spec("starlike:1,1,2"), trees::star_like({1, 1, 2}));
    EXPECT_EQ(parse_subtree_spec("edges:0-1,1-2"), path(3));
    EXPECT_THROW(parse_subtree_spec("path"), ConfigError);
    EXPECT_THROW(parse_subtree_spec("path:0"), ConfigError);
    EXPECT_THROW(parse_subtree_spec("star:1"), ConfigError);
    EXPECT_THROW(parse_subtree_spec("cycle:4"), ConfigError);
    EXPECT_THROW(parse_subtree_spec("starlike:1,x"), ConfigError);
}

TEST(SubtreeSpec, Attachments)
{
    EXPECT_EQ(parse_attach("end", path(5)), 0u);
    EXPECT_EQ(parse_attach("center", path(5)), 2u);
    EXPECT_EQ(parse_attach("center", star(4)), 0u);
    EXPECT_EQ(parse_attach("end", star(4)), 1u);
    EXPECT_EQ(parse_attach("3", path(5)), 3u);
    EXPECT_THROW(parse_attach("5", path(5)), ConfigError);
    EXPECT_THROW(parse_attach("left", path(5)), ConfigError);
}

TEST(SubtreeSpec, Describe)
{
    EXPECT_EQ(describe(path(6)), "P_6");
    EXPECT_EQ(describe(star(5)), "K_{1,5}");
    EXPECT_EQ(describe(trees::star_like({3, 1, 1})), "K(1,1,3)");
    EXPECT_EQ(describe(trees::parse_edge_list("0-2,1-2,2-3,3-4,3-5")).substr(0, 2), "T[");
    EXPECT_EQ(decomposition_id(Decomposition(path(5), 4)), "P_5@0");
    EXPECT_EQ(decomposition_id(Decomposition(path(5), 2)), "P_5@2");
    EXPECT_EQ(decomposition_id(Decomposition(star(3), 0)), "K_{1,3}@center");
    EXPECT_EQ(decomposition_id(Decomposition(star(3), 2)), "K_{1,3}@leaf");
}
