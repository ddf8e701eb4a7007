#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>

#include "quadratica/serialize.hpp"
#include "quadratica/verify.hpp"

using namespace quadratica;

TEST(Errata, EveryEntryReDerives)
{
    ASSERT_EQ(errata().size(), 17u);
    std::set<std::string> ids;
    for (const ErratumEntry& e : errata()) {
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
        EXPECT_FALSE(e.displayed.empty());
        EXPECT_FALSE(e.derived.empty());
        EXPECT_NE(e.displayed, e.derived) << e.id;
        EXPECT_FALSE(e.oracle.empty());
        EXPECT_TRUE(e.confirm()) << e.id;
    }
    EXPECT_NE(find_erratum("phi-sixth-power"), nullptr);
    EXPECT_EQ(find_erratum("no-such-entry"), nullptr);
}

TEST(Errata, DataFileMatchesTable)
{
    std::ifstream in(std::string(QUADRATICA_DATA_DIR) + "/errata.json");
    ASSERT_TRUE(in.good());
    const json file = json::parse(in);
    EXPECT_EQ(file, errata_json());
    EXPECT_EQ(file["version"], kErrataVersion);
}

TEST(Errata, IndependentSpotChecks)
{
    // x1 + x2 = -3/2 for 2x^2 + 3x + 1 - P
    EXPECT_EQ(BigRational(1023) + BigRational(-2049, 2), BigRational(-3, 2));
    // phi^6 = 8 phi + 5 from 1, 1, 2, 3, 5, 8
    const QuadElem phi = golden_ratio();
    EXPECT_EQ(phi * phi * phi * phi * phi * phi, phi * BigRational(8) + BigRational(5));
    // completing the square: (2x + 1)^2 = 1 + 4 = 5 mod 11 at a root of x^2 + x - 1
    for (long x = 0; x < 11; ++x) {
        if ((x * x + x - 1) % 11 == 0) {
            EXPECT_EQ((2 * x + 1) * (2 * x + 1) % 11, 5);
        }
    }
}

TEST(Serialize, RationalRoundTrip)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const BigRational r = detail::random_rational(rng, 1000000, 1000);
        EXPECT_EQ(rational_from_json(json::parse(to_json_value(r).dump())), r);
    }
    const BigRational huge(BigInt("123456789012345678901234567890"), BigInt("7"));
    EXPECT_EQ(rational_from_json(to_json_value(huge)), huge);
    EXPECT_EQ(to_json_value(BigRational(-3, 4))["num"], "-3");
    EXPECT_EQ(rational_from_json(json("5/6")), BigRational(5, 6));
    EXPECT_THROW(rational_from_json(json::object()), Error);
}

TEST(Serialize, QuadElemRoundTrip)
{
    std::mt19937_64 rng(2);
    for (std::int64_t m : {2, 3, 5, -1, -3, 13, -7, 30}) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem z = detail::random_elem(rng, m);
            const json j = json::parse(to_json_value(z).dump());
            EXPECT_EQ(quad_from_json(j), z);
            EXPECT_EQ(j["text"], z.str());
        }
    }
    EXPECT_THROW(quad_from_json(json{{"a", 1}}), Error);
}

TEST(Serialize, RootPairShape)
{
    const json j = to_json_value(solve(Quadratic(1, -1, -1)));
    EXPECT_EQ(j["kind"], "RealDistinct");
    EXPECT_EQ(quad_from_json(j["r1"]), golden_ratio());
    EXPECT_EQ(quad_from_json(j["r2"]), golden_conjugate());
}
