#include "numsg/monotonicity.hpp"
#include "numsg/representations.hpp"
#include "numsg/search.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace numsg;

namespace {

const std::vector<Int> kTwoBlock{24, 25, 36, 51, 54};
const std::vector<Int> kDecreasing{13, 19, 24, 44, 49, 54, 55, 59, 60, 66};
const std::vector<Int> kSlowGrowth{16, 17, 35, 71};

// Checks every stated implication of a verdict against independently
// computed data for one semigroup.
void check_verdict(const NumericalSemigroup& s)
{
	const LevelTable t(s);
	const auto inv = abc_table(t);
	const auto v = certify(t, inv);
	const auto& key = s.key();
	const int r = t.reduction_number();

	EXPECT_EQ(v.nondecreasing, !t.first_decrease().has_value()) << key;
	EXPECT_EQ(v.evidence.bad_residues, inv.bad_count()) << key;
	switch (v.certificate) {
	case Certificate::CMTangentCone: EXPECT_EQ(inv.bad_count(), 0u) << key; break;
	case Certificate::AperyBound: EXPECT_LE(inv.bad_count(), 3u) << key; break;
	case Certificate::DhBound:
		for (int h = 2; h <= r; ++h) {
			EXPECT_LE(t.d_set(h).size(), static_cast<std::size_t>(h) + 1) << key;
			EXPECT_TRUE(build_injection(t, h).success) << key << " h=" << h;
		}
		break;
	case Certificate::Direct: break;
	}
	if (!v.nondecreasing) {
		EXPECT_EQ(v.certificate, Certificate::Direct) << key;
		EXPECT_TRUE(v.first_decrease) << key;
	}
	// Each residue class holds at most one element of D_h, and only a bad one.
	for (int h = 2; h <= r; ++h)
		EXPECT_LE(t.d_set(h).size(), inv.bad_count()) << key;

	const auto n = necessary_report(t, inv);
	EXPECT_EQ(n.c2_count, t.c_set(2).size()) << key;
	if (n.shortcut_nondecreasing()) {
		EXPECT_TRUE(v.nondecreasing) << key;
	}
}

} // namespace

TEST(Certify, TwoBlockExample)
{
	const auto v = certify(make_semigroup(kTwoBlock));
	EXPECT_TRUE(v.nondecreasing);
	EXPECT_EQ(v.certificate, Certificate::DhBound);
	EXPECT_GT(v.evidence.bad_residues, 3u);
	ASSERT_GE(v.evidence.d_sizes.size(), 4u);
	EXPECT_EQ(std::vector<std::size_t>(v.evidence.d_sizes.begin(), v.evidence.d_sizes.begin() + 4),
	          (std::vector<std::size_t>{1, 3, 4, 4}));
	for (std::size_t k = 4; k < v.evidence.d_sizes.size(); ++k)
		EXPECT_LE(v.evidence.d_sizes[k], 3u);
	EXPECT_FALSE(v.first_decrease);
}

TEST(Certify, SlowGrowthNeedsDirectComputation)
{
	const auto v = certify(make_semigroup(kSlowGrowth));
	EXPECT_TRUE(v.nondecreasing);
	EXPECT_EQ(v.certificate, Certificate::Direct);
	ASSERT_GE(v.evidence.d_sizes.size(), 2u);
	EXPECT_EQ(v.evidence.d_sizes[1], 5u);
	EXPECT_EQ(v.evidence.hilbert.size(), 16u);
}

TEST(Certify, DecreasingExample)
{
	const auto v = certify(make_semigroup(kDecreasing));
	EXPECT_FALSE(v.nondecreasing);
	EXPECT_EQ(v.certificate, Certificate::Direct);
	EXPECT_EQ(v.first_decrease, 2);
	ASSERT_GE(v.evidence.hilbert.size(), 3u);
	EXPECT_EQ(v.evidence.hilbert[1], 10);
	EXPECT_EQ(v.evidence.hilbert[2], 9);
	EXPECT_EQ(v.evidence.d_sizes.front(), 4u);
}

TEST(Certify, CohenMacaulayExample)
{
	const auto v = certify(make_semigroup({3, 5}));
	EXPECT_EQ(v.certificate, Certificate::CMTangentCone);
	EXPECT_TRUE(v.nondecreasing);
	EXPECT_EQ(to_string(Certificate::AperyBound), "AperyBound");
}

TEST(Necessary, Examples)
{
	const auto two = necessary_report(make_semigroup(kTwoBlock));
	EXPECT_EQ(two.c2_count, 7u);
	EXPECT_FALSE(two.shortcut_nondecreasing());

	const LevelTable t(make_semigroup(kDecreasing));
	const auto dec = necessary_report(t, abc_table(t));
	EXPECT_GE(dec.c2_count, 3u);
	EXPECT_EQ(dec.c2_count, oracle::Table(kDecreasing, 4).c_set(2).size());
	EXPECT_EQ(dec.ed, 10u);
	EXPECT_GE(dec.c_chain_ok, 2);
	EXPECT_FALSE(dec.ed45_small_mult);

	const auto small = necessary_report(make_semigroup({2, 3}));
	EXPECT_EQ(small.c2_count, 0u);
	EXPECT_TRUE(small.shortcut_nondecreasing());
}

TEST(Certify, SoundOnExhaustiveCorpus)
{
	for (const auto& gens : oracle::all_semigroups(7, 22, 2, 5))
		check_verdict(make_semigroup(gens));
}

TEST(Certify, SoundOnRandomCorpus)
{
	std::mt19937_64 rng(555);
	for (int trial = 0; trial < 250; ++trial) {
		const auto gens = oracle::random_generators(rng, 20, 9, 4);
		check_verdict(make_semigroup(gens));
		// Hilbert sequence against brute force, to cover the Direct path.
		const LevelTable t(make_semigroup(gens));
		if (t.multiplicity() <= 12 && gens.size() <= 5) {
			const oracle::Table o(gens, t.reduction_number() + 1);
			for (int h = 0; h <= t.reduction_number(); ++h)
				ASSERT_EQ(t.hilbert_at(h), static_cast<Int>(o.level_set(h).size())) << t.semigroup().key();
		}
	}
}

TEST(Certify, MultiplicityFourSweep)
{
	SearchConstraints c;
	c.max_multiplicity = 4;
	c.max_frobenius = 60;
	std::size_t seen = 0;
	for (const auto& s : enumerate_semigroups(c)) {
		if (s.multiplicity() != 4)
			continue;
		++seen;
		const auto v = certify(s);
		EXPECT_TRUE(v.nondecreasing) << s.key();
		EXPECT_TRUE(v.certificate == Certificate::CMTangentCone || v.certificate == Certificate::AperyBound)
		    << s.key();
	}
	EXPECT_GT(seen, 100u);
}

TEST(Certify, SmallMultiplicityEmbeddingFourFiveSweep)
{
	SearchConstraints c;
	c.max_multiplicity = 8;
	c.ed_min = 4;
	c.ed_max = 5;
	c.max_frobenius = 60;
	std::size_t seen = 0;
	for (const auto& s : enumerate_semigroups(c)) {
		++seen;
		const auto rec = analyze_candidate(s);
		EXPECT_TRUE(rec.necessary.ed45_small_mult);
		EXPECT_TRUE(rec.nondecreasing) << s.key();
	}
	EXPECT_GT(seen, 1000u);
}
