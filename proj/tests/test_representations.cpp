#include "numsg/report.hpp"
#include "numsg/representations.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace numsg;

namespace {

const std::vector<Int> kTwoBlock{24, 25, 36, 51, 54};
const std::vector<Int> kDecreasing{13, 19, 24, 44, 49, 54, 55, 59, 60, 66};

// Every coefficient vector of s whose weight equals the brute-force order.
std::set<std::vector<Int>> maximal_reps_oracle(const std::vector<Int>& gens, Int s, int order)
{
	std::set<std::vector<Int>> out;
	std::vector<Int> coeffs(gens.size(), 0);
	std::function<void(std::size_t, Int, int)> rec = [&](std::size_t j, Int rest, int weight) {
		if (j == gens.size()) {
			if (rest == 0 && weight == order)
				out.insert(coeffs);
			return;
		}
		for (Int k = 0; k * gens[j] <= rest; ++k) {
			coeffs[j] = k;
			rec(j + 1, rest - k * gens[j], weight + static_cast<int>(k));
		}
		coeffs[j] = 0;
	};
	rec(0, s, 0);
	return out;
}

} // namespace

TEST(MaximalRepresentations, Examples)
{
	const LevelTable t(make_semigroup(kDecreasing));
	const auto reps = maximal_representations(t, 57);
	ASSERT_EQ(reps.size(), 1u);
	EXPECT_EQ(reps[0].coeffs, (std::vector<Int>{0, 3, 0, 0, 0, 0, 0, 0, 0, 0}));
	EXPECT_EQ(reps[0].weight, 3);
	EXPECT_EQ(lex_greatest_maximal_rep(t, 62).coeffs, (std::vector<Int>{0, 2, 1, 0, 0, 0, 0, 0, 0, 0}));
	EXPECT_EQ(lex_greatest_maximal_rep(t, 72).coeffs, (std::vector<Int>{0, 0, 3, 0, 0, 0, 0, 0, 0, 0}));

	const LevelTable u(make_semigroup(kTwoBlock));
	EXPECT_EQ(lex_greatest_maximal_rep(u, 150).coeffs, (std::vector<Int>{0, 6, 0, 0, 0}));
	EXPECT_EQ(lex_greatest_maximal_rep(u, 190).coeffs, (std::vector<Int>{0, 4, 1, 0, 1}));
	EXPECT_EQ(format_sum({0, 4, 1, 0, 0}, kTwoBlock), "4·25+36");
	EXPECT_EQ(format_sum({0, 0, 0, 0, 0}, kTwoBlock), "0");
	EXPECT_THROW(maximal_representations(u, 23), DomainError);
}

TEST(MaximalRepresentations, MatchBruteForceAndOrdering)
{
	std::mt19937_64 rng(9001);
	for (int trial = 0; trial < 60; ++trial) {
		const auto gens = oracle::random_generators(rng, 10, 4);
		const LevelTable t(make_semigroup(gens));
		const Int lim = std::max<Int>(t.semigroup().frobenius(), 0) + 3 * t.multiplicity();
		const auto ord = oracle::orders(gens, lim);
		for (Int s = 0; s <= lim; ++s) {
			if (ord[static_cast<std::size_t>(s)] < 0)
				continue;
			const auto reps = maximal_representations(t, s);
			std::set<std::vector<Int>> got;
			for (const auto& r : reps) {
				got.insert(r.coeffs);
				EXPECT_EQ(r.value, s);
				EXPECT_EQ(detail::dot(r.coeffs, gens), s);
			}
			ASSERT_EQ(got, maximal_reps_oracle(gens, s, ord[static_cast<std::size_t>(s)]))
			    << t.semigroup().key() << " at " << s;
			ASSERT_EQ(lex_greatest_maximal_rep(t, s), reps.front());

			// Descending Lex on coefficient vectors is ascending order on the
			// nondecreasing summand lists, since all have the same length.
			for (std::size_t k = 1; k < reps.size(); ++k) {
				EXPECT_TRUE(reps[k - 1].coeffs > reps[k].coeffs);
				EXPECT_TRUE(reps[k - 1].summands(gens) < reps[k].summands(gens));
			}
		}
	}
}

TEST(Psi, Examples)
{
	const LevelTable t(make_semigroup(kTwoBlock));
	EXPECT_EQ(psi_map(t, 5, 126), 125);
	EXPECT_EQ(psi_map(t, 5, 137), 125);
	EXPECT_EQ(psi_map(t, 5, 155), 125);
	EXPECT_EQ(psi_map(t, 5, 166), 136);
	EXPECT_THROW(psi_map(t, 5, 125), DomainError);

	const LevelTable d(make_semigroup(kDecreasing));
	EXPECT_EQ(psi_map(d, 2, 44), 38);
	EXPECT_EQ(psi_map(d, 2, 49), 38);
	EXPECT_EQ(psi_map(d, 2, 54), 43);
	EXPECT_EQ(psi_map(d, 2, 59), 48);
}

TEST(Injection, TwoBlockTrace)
{
	const LevelTable t(make_semigroup(kTwoBlock));
	const auto res = build_injection(t, 5);
	ASSERT_TRUE(res.success);
	EXPECT_FALSE(res.failure);
	EXPECT_EQ(res.domain, (std::vector<Int>{126, 137, 155, 166}));
	EXPECT_EQ(res.assignment, (std::vector<std::pair<Int, Int>>{{126, 125}, {137, 136}, {155, 154}, {166, 165}}));
	ASSERT_EQ(res.trace.size(), 3u);
	EXPECT_EQ(res.trace[0].element, 137);
	EXPECT_EQ(res.trace[0].image_value, 136);
	EXPECT_EQ(res.trace[0].image, (std::vector<Int>{0, 4, 1, 0, 0}));
	EXPECT_EQ(res.trace[1].element, 155);
	EXPECT_EQ(res.trace[1].image_value, 154);
	EXPECT_EQ(res.trace[1].image, (std::vector<Int>{0, 4, 0, 0, 1}));
	EXPECT_EQ(res.trace[2].element, 166);
	EXPECT_EQ(res.trace[2].image_value, 165);
	EXPECT_EQ(res.trace[2].image, (std::vector<Int>{0, 3, 1, 0, 1}));
	std::set<int> blocks;
	for (const auto& st : res.trace)
		blocks.insert(st.block);
	EXPECT_EQ(blocks.size(), 2u);
	EXPECT_EQ(res.trace.back().step, 3);
	EXPECT_EQ(psi_name(0), "ψ");
	EXPECT_EQ(psi_name(2), "ψ″");
	EXPECT_EQ(psi_name(3), "ψ⁽³⁾");
	EXPECT_EQ(psi_name(12), "ψ⁽¹²⁾");
}

TEST(Injection, FailureWhenDomainTooLarge)
{
	const LevelTable t(make_semigroup(kDecreasing));
	const auto res = build_injection(t, 2);
	EXPECT_FALSE(res.success);
	ASSERT_TRUE(res.failure);
	EXPECT_EQ(res.failure->reason, InjectionFailure::BlocksExhausted);
	EXPECT_EQ(res.failure->tie_index, 3u);
	EXPECT_EQ(res.failure->first, 54);
	EXPECT_EQ(res.failure->second, 59);
	EXPECT_EQ(res.failure->value, 48);
	ASSERT_EQ(res.trace.size(), 2u);
	EXPECT_EQ(res.trace[0].element, 49);
	EXPECT_EQ(res.trace[0].image_value, 43);
	EXPECT_EQ(res.trace[1].element, 54);
	EXPECT_EQ(res.trace[1].image_value, 48);
	const auto text = report::injection_text(res, t.semigroup().generators(), true);
	EXPECT_NE(text.find("failure: ψ″(54) = ψ″(59) = 48 at index 3"), std::string::npos) << text;
	EXPECT_THROW(build_injection(t, 1), DomainError);
}

TEST(Injection, SucceedsWheneverDomainIsSmall)
{
	std::mt19937_64 rng(31337);
	std::size_t checked = 0;
	for (int trial = 0; trial < 400; ++trial) {
		const auto gens = oracle::random_generators(rng, 14, 6);
		const LevelTable t(make_semigroup(gens));
		const int r = t.reduction_number();
		std::optional<oracle::Table> o;
		for (int h = 2; h <= r; ++h) {
			const auto d = t.d_set(h);
			if (d.empty() || d.size() > static_cast<std::size_t>(h) + 1)
				continue;
			if (!o)
				o.emplace(gens, r + 3);
			const auto res = build_injection(t, h);
			ASSERT_TRUE(res.success) << t.semigroup().key() << " h=" << h;
			const auto c = o->c_set(h);
			std::set<Int> images;
			for (const auto& [s, img] : res.assignment) {
				EXPECT_TRUE(std::binary_search(c.begin(), c.end(), img)) << t.semigroup().key() << " h=" << h;
				images.insert(img);
			}
			EXPECT_EQ(images.size(), d.size());
			EXPECT_EQ(build_injection(t, h).trace, res.trace);
			for (Int s : d) {
				const Int img = psi_map(t, h, s);
				EXPECT_TRUE(std::binary_search(c.begin(), c.end(), img));
			}
			++checked;
		}
	}
	EXPECT_GT(checked, 50u);
}
