#pragma once

#include "numsg/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace numsg {

using Int = std::int64_t;

namespace detail {

inline constexpr Int unreachable = std::numeric_limits<Int>::max();

/// Least element of <gens> in each residue class modulo `modulus`, or
/// `unreachable` for classes the generators never hit (gcd > 1).
///
/// Round-robin relaxation: each generator walks the cycles of the residue
/// graph once, starting from the cheapest node on the cycle. O(n * modulus).
inline std::vector<Int> residue_shortest_paths(std::span<const Int> gens, Int modulus)
{
	const auto m = static_cast<std::size_t>(modulus);
	std::vector<Int> dist(m, unreachable);
	dist[0] = 0;
	for (Int g : gens) {
		if (g % modulus == 0)
			continue;
		const Int d = std::gcd(modulus, g);
		const Int cycle_len = modulus / d;
		for (Int p = 0; p < d; ++p) {
			Int best = unreachable;
			for (Int q = p; q < modulus; q += d)
				best = std::min(best, dist[static_cast<std::size_t>(q)]);
			if (best == unreachable)
				continue;
			Int cur = best;
			for (Int step = 0; step < cycle_len; ++step) {
				cur += g;
				auto& slot = dist[static_cast<std::size_t>(cur % modulus)];
				cur = std::min(cur, slot);
				slot = cur;
			}
		}
	}
	return dist;
}

inline bool checked_mul(Int a, Int b, Int& out) { return !__builtin_mul_overflow(a, b, &out); }

} // namespace detail

/// A numerical semigroup held by its minimal generators g1 < ... < gn together
/// with the Apery set with respect to g1. Immutable once built.
class NumericalSemigroup {
public:
	/// Builds the semigroup generated by `raw`, reducing to the minimal system.
	static NumericalSemigroup generated_by(std::span<const Int> raw)
	{
		if (raw.empty())
			throw InvalidInput("generator list is empty");
		std::vector<Int> sorted(raw.begin(), raw.end());
		for (Int v : sorted)
			if (v < 1)
				throw InvalidInput("generators must be positive, got " + std::to_string(v));
		std::sort(sorted.begin(), sorted.end());
		sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

		Int g = 0;
		for (Int v : sorted)
			g = std::gcd(g, v);
		if (g != 1)
			throw InvalidInput("generators have gcd " + std::to_string(g) + ", not a numerical semigroup");
		Int product = 0;
		if (!detail::checked_mul(sorted.front(), sorted.back(), product))
			throw InvalidInput("generators too large: g1 * gn overflows 64-bit arithmetic");

		// A value can only be a combination of strictly smaller ones, so one
		// ascending pass yields the unique minimal system.
		std::vector<Int> minimal{sorted.front()};
		for (std::size_t k = 1; k < sorted.size(); ++k) {
			const Int v = sorted[k];
			const auto dist = detail::residue_shortest_paths(minimal, minimal.front());
			if (dist[static_cast<std::size_t>(v % minimal.front())] > v)
				minimal.push_back(v);
		}

		NumericalSemigroup s;
		s.gens_ = std::move(minimal);
		s.apery_ = detail::residue_shortest_paths(s.gens_, s.gens_.front());
		s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - s.gens_.front();
		return s;
	}

	/// Skips the minimality reduction; `gens` must already be the sorted
	/// minimal system of a numerical semigroup. Used by the enumerator.
	static NumericalSemigroup from_minimal_generators(std::vector<Int> gens)
	{
		NumericalSemigroup s;
		s.gens_ = std::move(gens);
		s.apery_ = detail::residue_shortest_paths(s.gens_, s.gens_.front());
		s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - s.gens_.front();
		return s;
	}

	const std::vector<Int>& generators() const noexcept { return gens_; }
	Int multiplicity() const noexcept { return gens_.front(); }
	std::size_t embedding_dimension() const noexcept { return gens_.size(); }
	const std::vector<Int>& apery() const noexcept { return apery_; }
	/// -1 exactly for the semigroup of all naturals.
	Int frobenius() const noexcept { return frobenius_; }

	bool contains(Int s) const noexcept
	{
		if (s < 0)
			return false;
		return s >= apery_[static_cast<std::size_t>(s % multiplicity())];
	}

	/// Comma-joined minimal generators, e.g. "3,5".
	std::string key() const
	{
		std::string out;
		for (std::size_t k = 0; k < gens_.size(); ++k) {
			if (k)
				out += ',';
			out += std::to_string(gens_[k]);
		}
		return out;
	}

	friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept
	{
		return a.gens_ == b.gens_;
	}

private:
	NumericalSemigroup() = default;

	std::vector<Int> gens_;
	std::vector<Int> apery_;
	Int frobenius_ = -1;
};

inline NumericalSemigroup make_semigroup(std::span<const Int> raw)
{
	return NumericalSemigroup::generated_by(raw);
}

inline NumericalSemigroup make_semigroup(std::initializer_list<Int> raw)
{
	return NumericalSemigroup::generated_by(std::span<const Int>(raw.begin(), raw.size()));
}

inline const std::vector<Int>& apery_set(const NumericalSemigroup& s) { return s.apery(); }

inline bool contains(const NumericalSemigroup& s, Int v) { return s.contains(v); }

/// Order of a single element by a direct DP over 0..v. Prefer LevelTable::order
/// when asking about many elements of the same semigroup.
inline int order(const NumericalSemigroup& s, Int v)
{
	if (!s.contains(v))
		throw DomainError(std::to_string(v) + " is not an element of <" + s.key() + ">");
	std::vector<int> ord(static_cast<std::size_t>(v) + 1, -1);
	ord[0] = 0;
	for (Int x = 1; x <= v; ++x) {
		int best = -1;
		for (Int g : s.generators()) {
			if (g > x)
				break;
			const int prev = ord[static_cast<std::size_t>(x - g)];
			if (prev >= 0)
				best = std::max(best, prev + 1);
		}
		ord[static_cast<std::size_t>(x)] = best;
	}
	return ord[static_cast<std::size_t>(v)];
}

/// Symmetric: z in S exactly when f - z is not, for 0 <= z <= f.
inline bool is_symmetric(const NumericalSemigroup& s)
{
	const Int f = s.frobenius();
	for (Int z = 0; z <= f; ++z)
		if (s.contains(z) == s.contains(f - z))
			return false;
	return true;
}

} // namespace numsg
