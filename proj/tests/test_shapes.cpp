#include "affk/core.hpp"
#include "affk/error.hpp"
#include "affk/partition.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace affk;

TEST(Partition, RejectsIncreasingOrNonPositiveParts)
{
    EXPECT_THROW(Partition({1, 2}), InvalidInput);
    EXPECT_THROW(Partition({2, 0}), InvalidInput);
    EXPECT_NO_THROW(Partition({}));
}

TEST(Partition, SizeAndLength)
{
    const Partition p{6, 4, 3, 1, 1, 1};
    EXPECT_EQ(p.size(), 16);
    EXPECT_EQ(p.length(), 6);
    EXPECT_EQ(p.column(0), 6);
    EXPECT_EQ(p.column(3), 2);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate(Partition{3, 1, 1}), (Partition{3, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition{6, 4, 3, 1, 1, 1}), (Partition{6, 3, 3, 2, 1, 1}));
    for (const Partition& p : partitions_up_to(8)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, Dominance)
{
    EXPECT_TRUE(dominates(Partition{2, 1}, Partition{1, 1, 1}));
    EXPECT_FALSE(dominates(Partition{2, 1}, Partition{3}));
    EXPECT_TRUE(dominates(Partition{3, 2, 1}, Partition{3, 2, 1}));
    EXPECT_FALSE(dominates(Partition{3}, Partition{1, 1}));
}

TEST(Partition, DominanceIsReversedByConjugation)
{
    for (int n = 1; n <= 7; ++n)
        for (const Partition& a : partitions_of(n))
            for (const Partition& b : partitions_of(n))
                EXPECT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a)));
}

TEST(Partition, HookLength)
{
    EXPECT_EQ(hook_length(Partition{1}, Cell{0, 0}), 1);
    EXPECT_EQ(hook_length(Partition{6, 4, 3, 1, 1, 1}, Cell{0, 0}), 11);
    EXPECT_EQ(hook_length(Partition{3, 1, 1}, Cell{0, 1}), 2);
    EXPECT_THROW(hook_length(Partition{3, 1, 1}, Cell{1, 1}), InvalidInput);
    EXPECT_EQ(hook(Partition{3, 2}), 4);
    EXPECT_EQ(hook(Partition{}), 0);
}

TEST(Partition, Enumeration)
{
    EXPECT_EQ(partitions_of(5).size(), 7u);
    EXPECT_EQ(partitions_of(5).front(), (Partition{5}));
    EXPECT_EQ(partitions_of(5).back(), (Partition{1, 1, 1, 1, 1}));
    EXPECT_EQ(partitions_of(6, 2).size(), 4u);
    EXPECT_EQ(partitions_up_to(3).size(), 7u);
    EXPECT_EQ(compositions_of(4).size(), 8u);
    EXPECT_EQ(compositions_of(4, 2).size(), 5u);
    EXPECT_EQ(rearrangements({2, 1, 1}).size(), 3u);
    EXPECT_EQ(strip_zeros({0, 2, 0, 1}), (Composition{2, 1}));
}

TEST(Partition, GradedOrderIsALinearExtensionOfDominance)
{
    const auto all = partitions_up_to(7);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) EXPECT_TRUE(graded_dominance_less(all[i], all[i + 1]));
    for (int n = 1; n <= 7; ++n)
        for (const Partition& a : partitions_of(n))
            for (const Partition& b : partitions_of(n))
                if (a != b && dominates(a, b)) EXPECT_TRUE(graded_dominance_less(a, b));
}

TEST(Partition, ParseAndFormat)
{
    EXPECT_EQ(parse_partition("3,1,1"), (Partition{3, 1, 1}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_partition("2,1,0,0"), (Partition{2, 1}));
    EXPECT_EQ(parse_composition("1,0,2"), (Composition{1, 0, 2}));
    EXPECT_THROW(parse_partition("1,2"), InvalidInput);
    EXPECT_THROW(parse_partition("a"), InvalidInput);
    EXPECT_THROW(parse_composition("1,-1"), InvalidInput);
    EXPECT_EQ(format_partition(Partition{3, 1, 1}), "3,1,1");
}

TEST(Partition, AddAndRemoveCells)
{
    const Partition p{2, 1};
    const std::vector<Cell> add{{0, 2}, {2, 0}};
    EXPECT_EQ(add_cells(p, add), (Partition{3, 1, 1}));
    const std::vector<Cell> bad{{1, 2}};
    EXPECT_THROW(add_cells(p, bad), InvalidInput);
    const std::vector<Cell> remove{{1, 0}};
    EXPECT_EQ(remove_cells(p, remove), (Partition{2}));
    EXPECT_EQ(skew_cells(Partition{3, 1}, Partition{1}).size(), 3u);
}

TEST(Residue, ReducesModuloLevel)
{
    EXPECT_EQ(Residue(-1, 3).value(), 2);
    EXPECT_EQ(Residue::of(Cell{2, 0}, 3).value(), 1);
    EXPECT_EQ(Residue(0, 3).prev(3).value(), 2);
}

TEST(Core, IsCore)
{
    EXPECT_TRUE(is_core(Partition{6, 4, 3, 1, 1, 1}, 4));
    EXPECT_TRUE(is_core(Partition{3, 1, 1}, 2));
    EXPECT_FALSE(is_core(Partition{2, 2}, 2));
    EXPECT_THROW(Core(Partition{2, 2}, 2), InvalidInput);
}

TEST(Core, IsCoreAgreesWithHookScan)
{
    for (int k = 1; k <= 4; ++k) {
        const auto cores = oracle::cores_by_hooks(10, k);
        const std::set<Partition> expected(cores.begin(), cores.end());
        for (const Partition& p : partitions_up_to(10)) EXPECT_EQ(is_core(p, k), expected.count(p) == 1) << p;
    }
}

TEST(Core, Corners)
{
    const Core empty(2);
    const auto add = addable_corners(empty);
    ASSERT_EQ(add.size(), 1u);
    EXPECT_EQ(add[0].cell, (Cell{0, 0}));
    EXPECT_EQ(add[0].residue.value(), 0);

    const Core g(Partition{3, 1, 1}, 2);
    std::set<std::pair<Cell, int>> removable;
    for (const Corner& c : removable_corners(g)) removable.insert({c.cell, c.residue.value()});
    EXPECT_EQ(removable, (std::set<std::pair<Cell, int>>{{{2, 0}, 1}, {{0, 2}, 2}}));

    std::set<std::pair<Cell, int>> addable;
    for (const Corner& c : addable_corners(g)) addable.insert({c.cell, c.residue.value()});
    EXPECT_EQ(addable, (std::set<std::pair<Cell, int>>{{{3, 0}, 0}, {{1, 1}, 0}, {{0, 3}, 0}}));
}

TEST(Core, NeverAddableAndRemovableOfOneResidue)
{
    for (int k = 1; k <= 4; ++k)
        for (const Core& g : cores_up_to(8, k))
            for (int i = 0; i <= k; ++i) {
                const Residue r(i, k + 1);
                EXPECT_FALSE(!addable_corners(g, r).empty() && !removable_corners(g, r).empty()) << g;
            }
}

TEST(Core, BoundedPartitionOfCore)
{
    EXPECT_EQ(core_to_bounded(Partition{3, 1, 1}, 2), (Partition{2, 1, 1}));
    EXPECT_EQ(core_to_bounded(Partition{4}, 4), (Partition{4}));
    EXPECT_EQ(core_to_bounded(Partition{8, 5, 2, 1}, 3), (Partition{3, 3, 2, 1}));
    EXPECT_THROW(core_to_bounded(Partition{2, 2}, 2), InvalidInput);
}

TEST(Core, CoreOfBoundedPartition)
{
    EXPECT_EQ(bounded_to_core(Partition{2, 1, 1}, 2).shape(), (Partition{3, 1, 1}));
    EXPECT_EQ(bounded_to_core(Partition{3, 3, 2, 1}, 3).shape(), (Partition{8, 5, 2, 1}));
    EXPECT_THROW(bounded_to_core(Partition{4, 3, 2, 1}, 3), InvalidInput);
    EXPECT_EQ(core_to_bounded(bounded_to_core(Partition{4, 3, 2, 1}, 4)), (Partition{4, 3, 2, 1}));
}

TEST(Core, BijectionMatchesHookDefinition)
{
    for (int k = 1; k <= 4; ++k) {
        for (const Partition& g : oracle::cores_by_hooks(12, k)) {
            const Partition lambda = oracle::bounded_by_hooks(g, k);
            EXPECT_EQ(core_to_bounded(Core(g, k)), lambda);
            EXPECT_EQ(bounded_to_core(lambda, k).shape(), g);
        }
        for (const Partition& lambda : partitions_up_to(7, k))
            EXPECT_EQ(core_to_bounded(bounded_to_core(lambda, k)), lambda);
    }
}

TEST(Core, SmallHookPartitionsAreTheirOwnCores)
{
    for (int k = 1; k <= 5; ++k)
        for (const Partition& lambda : partitions_up_to(8, k))
            if (hook(lambda) <= k) {
                EXPECT_EQ(bounded_to_core(lambda, k).shape(), lambda);
                EXPECT_EQ(k_conjugate(lambda, k), conjugate(lambda));
            }
}

TEST(Core, KConjugate)
{
    EXPECT_EQ(k_conjugate(Partition{2, 1, 1}, 2), (Partition{2, 1, 1}));
    EXPECT_EQ(k_conjugate(Partition{3, 2, 1}, 3), (Partition{2, 1, 1, 1, 1}));
    EXPECT_THROW(k_conjugate(Partition{4}, 3), InvalidInput);
    for (int k = 1; k <= 4; ++k)
        for (const Partition& lambda : partitions_up_to(8, k)) {
            const Partition c = k_conjugate(lambda, k);
            EXPECT_TRUE(c.is_bounded(k));
            EXPECT_EQ(k_conjugate(c, k), lambda);
        }
}

TEST(Core, AddResidueCorners)
{
    EXPECT_EQ(add_residue_corners(Core(2), Residue(0, 3)).shape(), (Partition{1}));
    EXPECT_EQ(add_residue_corners(Core(Partition{1}, 2), Residue(1, 3)).shape(), (Partition{2}));
    Core g(2);
    for (int i : {0, 1, 2, 1}) g = add_residue_corners(g, Residue(i, 3));
    EXPECT_EQ(g.shape(), (Partition{3, 1, 1}));
}

TEST(Core, AddingCornersGrowsBoundedPartitionByOne)
{
    for (int k = 1; k <= 4; ++k)
        for (const Core& g : cores_up_to(7, k))
            for (int i = 0; i <= k; ++i) {
                const Residue r(i, k + 1);
                if (addable_corners(g, r).empty()) continue;
                const Core next = add_residue_corners(g, r);
                EXPECT_TRUE(is_core(next.shape(), k));
                EXPECT_EQ(core_to_bounded(next).size(), core_to_bounded(g).size() + 1);
            }
}

TEST(Core, CornerOperatorRelations)
{
    for (int k = 2; k <= 4; ++k) {
        const int n = k + 1;
        auto s = [&](int i, const Core& g) { return add_residue_corners(g, Residue(i, n)); };
        for (const Core& g : cores_up_to(6, k))
            for (int i = 0; i <= k; ++i) {
                EXPECT_EQ(s(i, s(i, g)), s(i, g));
                const int j = (i + 1) % n;
                EXPECT_EQ(s(i, s(j, s(i, g))), s(j, s(i, s(j, g))));
                for (int m = 0; m <= k; ++m) {
                    const int d = (i - m + n) % n;
                    if (d != 0 && d != 1 && d != n - 1) EXPECT_EQ(s(i, s(m, g)), s(m, s(i, g)));
                }
            }
    }
}

TEST(Core, CoresUpToIsGradedAndComplete)
{
    for (int k = 1; k <= 3; ++k) {
        const auto cores = cores_up_to(6, k);
        EXPECT_EQ(cores.size(), partitions_up_to(6, k).size());
        for (const Core& g : cores) EXPECT_TRUE(is_core(g.shape(), k));
    }
}
