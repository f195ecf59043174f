#include <doctest.h>

#include <random>
#include <set>

#include "superfuzz/algebra.hpp"
#include "superfuzz/error.hpp"
#include "superfuzz/matrix.hpp"
#include "superfuzz/partition.hpp"

using namespace superfuzz;

TEST_CASE("validate_scheme accepts and rejects cut lists") {
    CHECK_NOTHROW(validate_scheme({{}, {}}, 3, 3));
    CHECK_NOTHROW(validate_scheme({{2, 5}, {2, 5}}, 7, 7));
    CHECK_THROWS_WITH_AS(validate_scheme({{3}, {}}, 3, 4), doctest::Contains("OutOfRangeCut"), Error);
    CHECK_THROWS_WITH_AS(validate_scheme({{}, {0}}, 3, 4), doctest::Contains("OutOfRangeCut"), Error);
    CHECK_THROWS_WITH_AS(validate_scheme({{2, 1}, {}}, 4, 4), doctest::Contains("UnsortedCuts"), Error);
    CHECK_THROWS_WITH_AS(validate_scheme({{2, 2}, {}}, 4, 4), doctest::Contains("DuplicateCut"), Error);
    CHECK_THROWS_AS(validate_scheme({{}, {}}, 0, 2), Error);
}

TEST_CASE("classify_partition") {
    CHECK(classify_partition({{3}, {3}}, 6, 6) == PartitionClass::SymmetricAndPseudo);
    CHECK(classify_partition({{2}, {2}}, 5, 5) == PartitionClass::Symmetric); // pseudo needs a row cut at 3
    CHECK(classify_partition({{2}, {3}}, 5, 5) == PartitionClass::Pseudo);
    CHECK(classify_partition({{}, {}}, 4, 7) == PartitionClass::Trivial);
    CHECK(classify_partition({{1, 2}, {1, 2}}, 3, 3) == PartitionClass::Cell);
    CHECK(classify_partition({{1}, {1, 2}}, 2, 3) == PartitionClass::Cell);
    CHECK(classify_partition({{1}, {2}}, 4, 4) == PartitionClass::General);
    CHECK(classify_partition({{2}, {}}, 5, 5) == PartitionClass::General);
    CHECK(classify_partition({{2}, {2}}, 5, 6) == PartitionClass::General); // not square
    CHECK(classify_partition({{3}, {2}}, 5, 4) == PartitionClass::General);
}

TEST_CASE("enumerate_partitions counts and order") {
    CHECK(enumerate_partitions(2, 2).size() == 3);
    CHECK(enumerate_partitions(3, 3).size() == 15);
    CHECK(enumerate_partitions(1, 1).empty());
    CHECK(count_partitions(2, 2) == 3);
    CHECK(count_partitions(3, 3) == 15);

    auto schemes = enumerate_partitions(2, 2);
    REQUIRE(schemes.size() == 3);
    CHECK(schemes[0] == PartitionScheme{{}, {1}});
    CHECK(schemes[1] == PartitionScheme{{1}, {}});
    CHECK(schemes[2] == PartitionScheme{{1}, {1}});

    // lexicographic on (row_cuts, col_cuts)
    auto s33 = enumerate_partitions(3, 3);
    auto key = [](const PartitionScheme& s) { return std::pair{s.row_cuts, s.col_cuts}; };
    for (std::size_t i = 1; i < s33.size(); ++i)
        CHECK(key(s33[i - 1]) < key(s33[i]));
}

TEST_CASE("enumeration agrees with an independent subset walk up to 6x6") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) {
            std::set<std::pair<std::vector<int>, std::vector<int>>> oracle;
            for (unsigned rbits = 0; rbits < (1u << (n - 1)); ++rbits)
                for (unsigned cbits = 0; cbits < (1u << (m - 1)); ++cbits) {
                    if (rbits == 0 && cbits == 0)
                        continue;
                    std::vector<int> r, c;
                    for (int k = 1; k < n; ++k)
                        if (rbits & (1u << (k - 1)))
                            r.push_back(k);
                    for (int k = 1; k < m; ++k)
                        if (cbits & (1u << (k - 1)))
                            c.push_back(k);
                    oracle.insert({r, c});
                }
            auto got = enumerate_partitions(n, m);
            CHECK(got.size() == oracle.size());
            CHECK(got.size() == count_partitions(n, m));
            for (const auto& s : got) {
                CHECK(oracle.count({s.row_cuts, s.col_cuts}) == 1);
                CHECK_NOTHROW(validate_scheme(s, n, m));
            }
        }
}

TEST_CASE("count_symmetric_partitions") {
    CHECK(count_symmetric_partitions(2) == 1);
    CHECK(count_symmetric_partitions(4) == 7);
    CHECK(count_symmetric_partitions(1) == 0);

    // must equal the number of enumerated schemes classifying symmetric
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t found = 0;
        for (const auto& s : enumerate_partitions(n, n)) {
            auto c = classify_partition(s, n, n);
            if (c == PartitionClass::Symmetric || c == PartitionClass::SymmetricAndPseudo ||
                c == PartitionClass::Cell)
                ++found;
        }
        CHECK(found == count_symmetric_partitions(n));
    }
}

TEST_CASE("symmetric scheme survives transpose") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (const auto& s : enumerate_partitions(5, 5)) {
        auto c = classify_partition(s, 5, 5);
        if (c != PartitionClass::Symmetric && c != PartitionClass::SymmetricAndPseudo &&
            c != PartitionClass::Cell)
            continue;
        std::vector<double> e(25);
        for (auto& x : e)
            x = val(rng);
        SuperMatrix a(5, 5, e, s);
        CHECK(transpose(a).scheme() == s);
    }
}

TEST_CASE("super_diagonal") {
    SUBCASE("two rectangular blocks") {
        SuperMatrix b1 = SuperMatrix::from_rows({{3, 1, 2}, {5, 6, 0}});
        SuperMatrix b2 = SuperMatrix::from_rows({{2, 5}, {-1, 3}, {9, 10}});
        SuperMatrix d = super_diagonal({b1, b2});
        CHECK(d.rows() == 5);
        CHECK(d.cols() == 5);
        CHECK(d.scheme() == PartitionScheme{{2}, {3}});
        CHECK(d(0, 0) == 3);
        CHECK(d(1, 1) == 6);
        CHECK(d(2, 3) == 2);
        CHECK(d(4, 4) == 10);
        CHECK(d(0, 3) == 0);
        CHECK(d(3, 0) == 0);
    }
    SUBCASE("single block keeps a trivial scheme") {
        SuperMatrix b = SuperMatrix::from_rows({{1, 2}, {3, 4}});
        SuperMatrix d = super_diagonal({b});
        CHECK(d == b);
        CHECK(d.scheme().trivial());
    }
    SUBCASE("three 1x1 blocks") {
        SuperMatrix d =
            super_diagonal({SuperMatrix(1, 1, {7}), SuperMatrix(1, 1, {8}), SuperMatrix(1, 1, {9})});
        CHECK(d.scheme() == PartitionScheme{{1, 2}, {1, 2}});
        CHECK(d(0, 0) == 7);
        CHECK(d(1, 1) == 8);
        CHECK(d(2, 2) == 9);
        CHECK(d(0, 1) == 0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_WITH_AS(super_diagonal({}), doctest::Contains("EmptyBlockList"), Error);
        SuperMatrix cut(2, 2, {1, 2, 3, 4}, {{1}, {}});
        CHECK_THROWS_AS(super_diagonal({cut}), Error);
    }
    SUBCASE("nonzero entries lie inside diagonal blocks") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> dim(1, 4);
        std::uniform_real_distribution<double> val(0.5, 2.0);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<SuperMatrix> blocks;
            int nb = dim(rng);
            for (int b = 0; b < nb; ++b) {
                int r = dim(rng), c = dim(rng);
                std::vector<double> e(static_cast<std::size_t>(r) * c);
                for (auto& x : e)
                    x = val(rng);
                blocks.emplace_back(r, c, std::move(e));
            }
            SuperMatrix d = super_diagonal(blocks);
            auto roff = block_offsets(d.scheme().row_cuts, d.rows());
            auto coff = block_offsets(d.scheme().col_cuts, d.cols());
            for (int i = 0; i < d.rows(); ++i)
                for (int j = 0; j < d.cols(); ++j) {
                    if (d(i, j) == 0.0)
                        continue;
                    std::size_t bi = 0, bj = 0;
                    while (i >= roff[bi + 1])
                        ++bi;
                    while (j >= coff[bj + 1])
                        ++bj;
                    CHECK(bi == bj);
                }
        }
    }
}
