#include "homdim/error.hpp"
#include "homdim/schur.hpp"
#include "schur_oracles.hpp"

#include <doctest.h>

using namespace homdim;
using namespace homdim::test;

TEST_CASE("partitions")
{
    CHECK(Partition({3, 1, 1}).size() == 5);
    CHECK(Partition({3, 1, 1}).length() == 3);
    CHECK(Partition({2, 1}).to_string() == "2,1");
    CHECK(Partition().to_string().empty());
    CHECK(Partition() < Partition({1}));
    CHECK(Partition({1, 1}) < Partition({2}));
    CHECK_THROWS_AS(Partition({1, 2}), InvalidParams);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidParams);

    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto ps = partitions_of(n);
        CHECK(ps.size() == counts[n]);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i + 1] < ps[i]);
        for (const auto& p : ps) CHECK(p.size() == n);
    }
}

TEST_CASE("ell_from_q")
{
    CHECK(ell_from_q(3, 1) == 3);
    CHECK(ell_from_q(0, -1) == 2);
    CHECK(ell_from_q(0, 1) == 0);
    CHECK(ell_from_q(2, 1) == 2);
    CHECK(ell_from_q(5, 2) == 4);
    CHECK(ell_from_q(7, 2) == 3);
    CHECK(ell_from_q(7, -1) == 2);
    CHECK_THROWS_AS(ell_from_q(0, 0), ZeroQ);
    CHECK_THROWS_AS(ell_from_q(5, 10), ZeroQ);
    CHECK_THROWS_AS(ell_from_q(0, 2), InvalidParams);
    CHECK_THROWS_AS(ell_from_q(4, 1), InvalidParams);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 97u, 101u}) {
        for (long long q = 1; q < static_cast<long long>(p); ++q) {
            CAPTURE(p);
            CAPTURE(q);
            const std::size_t l = ell_from_q(p, q);
            CHECK(l == ell_oracle(p, q));
            CHECK(l != 1);
        }
    }
}

TEST_CASE("cores and weights")
{
    CHECK(ell_core_weight(Partition({1}), 2) == std::pair{Partition({1}), std::size_t{0}});
    CHECK(ell_core_weight(Partition({2, 1}), 2) == std::pair{Partition({2, 1}), std::size_t{0}});
    CHECK(ell_core_weight(Partition({3}), 2) == std::pair{Partition({1}), std::size_t{1}});
    CHECK(ell_core_weight(Partition(), 3) == std::pair{Partition(), std::size_t{0}});
    CHECK(ell_core_weight(Partition({4, 4}), 4) == std::pair{Partition(), std::size_t{2}});
    CHECK_THROWS_AS(ell_core_weight(Partition({2}), 1), InvalidParams);
}

TEST_CASE("abacus cores equal brute-force rim hook removal")
{
    for (std::size_t ell = 2; ell <= 5; ++ell) {
        std::map<Parts, std::set<Parts>> memo;
        for (std::size_t n = 0; n <= 10; ++n) {
            for (const auto& lam : partitions_of(n)) {
                CAPTURE(lam.to_string());
                CAPTURE(ell);
                const auto cores = brute_cores(lam.parts(), ell, memo);
                REQUIRE(cores.size() == 1);  // independent of removal order
                const auto [core, w] = ell_core_weight(lam, ell);
                CHECK(core.parts() == *cores.begin());
                CHECK(core.size() + ell * w == n);
                CHECK(ell_core_weight(core, ell) == std::pair{core, std::size_t{0}});
            }
        }
    }
}

TEST_CASE("d_ell_p")
{
    CHECK(d_ell_p(0, 2, 0) == 0);
    CHECK(d_ell_p(0, 3, 5) == 0);
    CHECK(d_ell_p(6, 2, 2) == 2);
    CHECK(d_ell_p(7, 3, 0) == 3);
    CHECK_THROWS_AS(d_ell_p(3, 1, 0), InvalidParams);
    CHECK_THROWS_AS(d_ell_p(3, 2, 6), InvalidParams);
    for (std::size_t r = 0; r <= 60; ++r) {
        for (std::size_t ell = 2; ell <= 7; ++ell) {
            for (std::uint64_t p : {0u, 2u, 3u, 5u, 7u}) CHECK(d_ell_p(r, ell, p) == d_oracle(r, ell, p));
        }
    }
}

TEST_CASE("schur_dims")
{
    const DimPair semi = schur_dims({5, 5, 0, 0});
    CHECK(semi.gldim == HomDim::finite(0));
    CHECK(semi.domdim.is_infinite());
    CHECK(semi.domdim.certificate() == "semisimple");
    CHECK(schur_dims({2, 2, 2, 2}).gldim == HomDim::finite(2));
    CHECK(schur_dims({2, 2, 2, 2}).domdim == HomDim::finite(2));
    CHECK(schur_dims({6, 6, 2, 2}).gldim == HomDim::finite(8));
    CHECK(schur_dims({9, 6, 2, 2}).domdim == HomDim::finite(2));
    CHECK_THROWS_AS(schur_dims({1, 2, 2, 2}), InvalidParams);
    CHECK_THROWS_AS(schur_dims({3, 3, 1, 0}), InvalidParams);
    CHECK_THROWS_AS(schur_dims({3, 3, 2, 9}), InvalidParams);
    for (std::size_t r = 0; r <= 12; ++r) {
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
                const DimPair d = schur_dims({r + 1, r, ell, p});
                CHECK(d.gldim == HomDim::finite(2 * (r - d_oracle(r, ell, p))));
                CHECK(d.domdim == HomDim::finite(2 * (ell - 1)));
            }
        }
    }
}

TEST_CASE("blocks_enumerate")
{
    CHECK(blocks_enumerate(0, 2) == std::vector<BlockLabel>{{Partition(), 0}});
    CHECK(blocks_enumerate(2, 2) == std::vector<BlockLabel>{{Partition(), 1}});
    CHECK(blocks_enumerate(3, 2) == std::vector<BlockLabel>{{Partition({2, 1}), 0}, {Partition({1}), 1}});
    CHECK_THROWS_AS(blocks_enumerate(3, 1), InvalidParams);

    for (std::size_t r = 0; r <= 12; ++r) {
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            CAPTURE(r);
            CAPTURE(ell);
            const auto blocks = blocks_enumerate(r, ell);
            for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
                const bool ordered = blocks[i].weight < blocks[i + 1].weight ||
                                     (blocks[i].weight == blocks[i + 1].weight && blocks[i].core < blocks[i + 1].core);
                CHECK(ordered);
            }
            for (const auto& b : blocks) {
                CHECK(b.core.size() + ell * b.weight == r);
                CHECK(ell_core_weight(b.core, ell).second == 0);
            }
            for (const auto& lam : partitions_of(r)) {
                const auto [core, w] = ell_core_weight(lam, ell);
                const auto hits = std::count(blocks.begin(), blocks.end(), BlockLabel{core, w});
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("block_dims")
{
    CHECK(block_dims(0, 2, 2).gldim == HomDim::finite(0));
    CHECK(block_dims(0, 2, 2).domdim.is_infinite());
    CHECK(block_dims(1, 2, 2).gldim == HomDim::finite(2));
    CHECK(block_dims(1, 2, 2).domdim == HomDim::finite(2));
    CHECK(block_dims(3, 2, 2).gldim == HomDim::finite(8));
    CHECK_THROWS_AS(block_dims(1, 1, 0), InvalidParams);
    for (std::size_t w = 1; w <= 6; ++w) {
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
                const DimPair d = block_dims(w, ell, p);
                CHECK(d.gldim == HomDim::finite(2 * (ell * w - d_oracle(ell * w, ell, p))));
                CHECK(d.domdim == HomDim::finite(2 * (ell - 1)));
            }
        }
    }
}

TEST_CASE("the whole algebra attains the largest block global dimension")
{
    for (std::size_t r = 1; r <= 12; ++r) {
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
                std::size_t best = 0;
                for (const auto& b : blocks_enumerate(r, ell)) best = std::max(best, block_dims(b.weight, ell, p).gldim.value());
                CHECK(schur_dims({r, r, ell, p}).gldim.value() == best);
            }
        }
    }
}
