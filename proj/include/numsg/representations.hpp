#pragma once

#include "numsg/filtration.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace numsg {

/// Coefficients over the sorted minimal generators: value = sum coeffs[j]*g_j.
struct Representation {
	std::vector<Int> coeffs;
	Int value = 0;
	Int weight = 0;

	/// The generators with multiplicity, nondecreasing.
	std::vector<Int> summands(const std::vector<Int>& gens) const
	{
		std::vector<Int> out;
		for (std::size_t j = 0; j < coeffs.size(); ++j)
			out.insert(out.end(), static_cast<std::size_t>(coeffs[j]), gens[j]);
		return out;
	}

	friend bool operator==(const Representation&, const Representation&) = default;
};

/// "4·25+36" style rendering of a coefficient vector.
inline std::string format_sum(const std::vector<Int>& coeffs, const std::vector<Int>& gens)
{
	std::string out;
	for (std::size_t j = 0; j < coeffs.size(); ++j) {
		if (coeffs[j] == 0)
			continue;
		if (!out.empty())
			out += '+';
		if (coeffs[j] > 1)
			out += std::to_string(coeffs[j]) + "·";
		out += std::to_string(gens[j]);
	}
	return out.empty() ? "0" : out;
}

namespace detail {

// A multiset of generators is a maximal representation exactly when every
// prefix peeled off drops the order by one, so search over nondecreasing
// generator indices, stepping only to elements of order one less.
inline void collect_maximal(const LevelTable& t, Int value, std::size_t min_index, std::vector<Int>& coeffs,
                            std::vector<Representation>& out, Int target, Int weight)
{
	if (value == 0) {
		out.push_back({coeffs, target, weight});
		return;
	}
	const auto& gens = t.semigroup().generators();
	const int o = t.order(value);
	for (std::size_t j = min_index; j < gens.size(); ++j) {
		const Int g = gens[j];
		if (g > value)
			break;
		if (t.order_or_gap(value - g) != o - 1)
			continue;
		++coeffs[j];
		collect_maximal(t, value - g, j, coeffs, out, target, weight);
		--coeffs[j];
	}
}

inline bool lex_greater(const std::vector<Int>& a, const std::vector<Int>& b)
{
	return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

/// Every coefficient vector of weight ord(s) summing to s, in decreasing
/// lexicographic order of (lambda_1, ..., lambda_n).
inline std::vector<Representation> maximal_representations(const LevelTable& t, Int s)
{
	const int o = t.order(s);
	std::vector<Int> coeffs(t.semigroup().embedding_dimension(), 0);
	std::vector<Representation> out;
	detail::collect_maximal(t, s, 0, coeffs, out, s, o);
	std::sort(out.begin(), out.end(),
	          [](const Representation& a, const Representation& b) { return detail::lex_greater(a.coeffs, b.coeffs); });
	return out;
}

inline Representation lex_greatest_maximal_rep(const LevelTable& t, Int s)
{
	// Greedy: at each generator take as many copies as still leave a maximal
	// completion; order drops by exactly one per summand along such a path.
	const auto& gens = t.semigroup().generators();
	Representation rep{std::vector<Int>(gens.size(), 0), s, t.order(s)};
	Int rest = s;
	for (std::size_t j = 0; j < gens.size() && rest > 0; ++j) {
		while (gens[j] <= rest && t.order_or_gap(rest - gens[j]) == t.order(rest) - 1) {
			rest -= gens[j];
			++rep.coeffs[j];
		}
	}
	if (rest != 0)
		throw InternalError("greedy maximal representation of " + std::to_string(s) + " did not terminate at 0");
	return rep;
}

inline bool in_d_set(const LevelTable& t, int h, Int s)
{
	return h >= 2 && t.order_or_gap(s) == h - 1 && t.order(s + t.multiplicity()) >= h + 1;
}

inline bool in_c_set(const LevelTable& t, int h, Int s)
{
	return h >= 1 && t.order_or_gap(s) == h && t.order_or_gap(s - t.multiplicity()) != h - 1;
}

namespace detail {

// First h summands of the lex-greatest maximal representation of s + g1, as
// a coefficient vector.
inline std::vector<Int> psi_coeffs(const LevelTable& t, int h, Int s)
{
	const auto rep = lex_greatest_maximal_rep(t, s + t.multiplicity());
	std::vector<Int> out(rep.coeffs.size(), 0);
	Int left = h;
	for (std::size_t j = 0; j < rep.coeffs.size() && left > 0; ++j) {
		const Int take = std::min(left, rep.coeffs[j]);
		out[j] = take;
		left -= take;
	}
	return out;
}

inline Int dot(const std::vector<Int>& coeffs, const std::vector<Int>& gens)
{
	Int v = 0;
	for (std::size_t j = 0; j < coeffs.size(); ++j)
		v += coeffs[j] * gens[j];
	return v;
}

} // namespace detail

/// Sum of the h smallest summands of the lex-greatest maximal representation
/// of s + g1. Always lands in C_h.
inline Int psi_map(const LevelTable& t, int h, Int s)
{
	if (!in_d_set(t, h, s))
		throw DomainError(std::to_string(s) + " is not in D_" + std::to_string(h));
	const Int image = detail::dot(detail::psi_coeffs(t, h, s), t.semigroup().generators());
	if (!in_c_set(t, h, image))
		throw InternalError("psi(" + std::to_string(s) + ") = " + std::to_string(image) + " is not in C_" +
		                    std::to_string(h));
	return image;
}

/// One redefinition of the tie-breaking procedure.
struct InjectionStep {
	int step = 0;           ///< w in psi^(w)
	int block = 0;          ///< block j replaces summand position h - j + 1
	std::size_t tie_index = 0; ///< 1-based position of the first tie in the sorted chain
	Int tied_with = 0;      ///< the other pre-image of the tied value
	Int element = 0;        ///< the pre-image whose image was redefined
	Int replaced = 0;       ///< generator removed from the image
	Int inserted = 0;       ///< generator put in its place
	std::vector<Int> image; ///< new image as coefficient vector
	Int image_value = 0;

	friend bool operator==(const InjectionStep&, const InjectionStep&) = default;
};

enum class InjectionFailure { BlocksExhausted, NoAdmissibleGenerator };

struct InjectionFailurePoint {
	InjectionFailure reason = InjectionFailure::BlocksExhausted;
	std::size_t tie_index = 0;
	Int first = 0;  ///< pre-image of psi_a
	Int second = 0; ///< pre-image of psi_{a+1}
	Int value = 0;  ///< the tied image

	friend bool operator==(const InjectionFailurePoint&, const InjectionFailurePoint&) = default;
};

struct InjectionResult {
	int level = 0;
	bool success = false;
	std::vector<Int> domain;                   ///< D_h ascending
	std::vector<std::vector<Int>> initial;     ///< psi images, aligned with domain
	std::vector<std::pair<Int, Int>> assignment; ///< s -> image, ascending in s (final state, even on failure)
	std::vector<InjectionStep> trace;
	std::optional<InjectionFailurePoint> failure;
};

namespace detail {

inline bool covered_by(const std::vector<Int>& small, const std::vector<Int>& big)
{
	for (std::size_t j = 0; j < small.size(); ++j)
		if (small[j] > big[j])
			return false;
	return true;
}

// Smallest generator that can replace `replaced_index` in `image` so the result
// is still a sub-multiset of some maximal representation of s + g1 (which puts
// it in C_h) and is Lex-smaller than `image`.
inline std::optional<std::size_t> admissible_generator(const std::vector<Representation>& reps,
                                                       const std::vector<Int>& image, std::size_t replaced_index)
{
	const std::size_t n = image.size();
	for (std::size_t p = replaced_index + 1; p < n; ++p) {
		auto candidate = image;
		--candidate[replaced_index];
		++candidate[p];
		for (const auto& r : reps)
			if (r.coeffs[p] > 0 && covered_by(candidate, r.coeffs))
				return p;
	}
	return std::nullopt;
}

} // namespace detail

/// The tie-breaking construction of an injection D_h -> C_h.
///
/// Images start as psi(s), kept as summand multisets and ordered by decreasing
/// Lex (stable). While the chain has a tie, take the first tied pair at index
/// a and redefine the later pre-image (falling back to the earlier one) by
/// swapping summand h - j + 1 for a larger generator g_p drawn from its own
/// maximal representations; j counts how many distinct tie indices have been
/// worked so far. More than h blocks means there is no position left to swap.
inline InjectionResult build_injection(const LevelTable& t, int h)
{
	if (h < 2)
		throw DomainError("injection is defined for h >= 2");
	const auto& gens = t.semigroup().generators();
	const Int m = t.multiplicity();

	InjectionResult res;
	res.level = h;
	res.domain = t.d_set(h);
	const std::size_t count = res.domain.size();

	std::vector<std::vector<Representation>> reps(count);
	std::vector<std::vector<Int>> image(count);
	for (std::size_t k = 0; k < count; ++k) {
		reps[k] = maximal_representations(t, res.domain[k] + m);
		image[k] = detail::psi_coeffs(t, h, res.domain[k]);
	}
	res.initial = image;

	std::vector<std::size_t> chain(count);
	for (std::size_t k = 0; k < count; ++k)
		chain[k] = k;
	auto resort = [&] {
		std::stable_sort(chain.begin(), chain.end(),
		                 [&](std::size_t a, std::size_t b) { return detail::lex_greater(image[a], image[b]); });
	};
	resort();

	int block = 0;
	std::optional<std::size_t> last_tie;
	for (;;) {
		std::optional<std::size_t> tie;
		for (std::size_t a = 0; a + 1 < count; ++a)
			if (image[chain[a]] == image[chain[a + 1]]) {
				tie = a;
				break;
			}
		if (!tie) {
			res.success = true;
			break;
		}
		if (tie != last_tie) {
			++block;
			last_tie = tie;
		}
		const std::size_t u = chain[*tie];
		const std::size_t v = chain[*tie + 1];
		const auto& tied = image[u];
		InjectionFailurePoint fp{InjectionFailure::BlocksExhausted, *tie + 1, res.domain[u], res.domain[v],
		                         detail::dot(tied, gens)};
		if (block > h) {
			res.failure = fp;
			break;
		}

		// Summand position h - block (0-based) of the sorted summand list.
		const auto summands = Representation{tied, 0, 0}.summands(gens);
		const Int replaced = summands[static_cast<std::size_t>(h - block)];
		const auto replaced_index =
		    static_cast<std::size_t>(std::find(gens.begin(), gens.end(), replaced) - gens.begin());

		bool done = false;
		for (std::size_t who : {v, u}) {
			auto p = detail::admissible_generator(reps[who], image[who], replaced_index);
			if (!p)
				continue;
			auto next = image[who];
			--next[replaced_index];
			++next[*p];
			image[who] = next;
			InjectionStep st;
			st.step = static_cast<int>(res.trace.size()) + 1;
			st.block = block;
			st.tie_index = *tie + 1;
			st.element = res.domain[who];
			st.tied_with = res.domain[who == v ? u : v];
			st.replaced = replaced;
			st.inserted = gens[*p];
			st.image = std::move(next);
			st.image_value = detail::dot(st.image, gens);
			res.trace.push_back(std::move(st));
			done = true;
			break;
		}
		if (!done) {
			fp.reason = InjectionFailure::NoAdmissibleGenerator;
			res.failure = fp;
			break;
		}
		resort();
	}

	for (std::size_t k = 0; k < count; ++k)
		res.assignment.emplace_back(res.domain[k], detail::dot(image[k], gens));
	if (res.success) {
		std::vector<Int> seen;
		for (const auto& [s, img] : res.assignment) {
			if (!in_c_set(t, h, img))
				throw InternalError("injection image " + std::to_string(img) + " of " + std::to_string(s) +
				                    " is not in C_" + std::to_string(h));
			seen.push_back(img);
		}
		std::sort(seen.begin(), seen.end());
		if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
			throw InternalError("injection produced repeated images at level " + std::to_string(h));
	}
	return res;
}

inline std::string psi_name(int step)
{
	if (step == 0)
		return "ψ";
	if (step == 1)
		return "ψ′";
	if (step == 2)
		return "ψ″";
	static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
	std::string digits;
	for (char c : std::to_string(step))
		digits += sup[c - '0'];
	return "ψ⁽" + digits + "⁾";
}

} // namespace numsg
