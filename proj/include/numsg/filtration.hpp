#pragma once

#include "numsg/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace numsg {

/// Orders of all elements of S up to a bound large enough to see every level
/// up to the reduction number, plus the Hilbert function H(0..r).
///
/// Two facts make a finite table sufficient:
///  - s > h*g1 + f implies s in (h+1)M, so level h lies below h*g1 + f;
///  - for ord(s) > r, ord(s - g1) = ord(s) - 1, so orders past the table are
///    recovered by stepping down in multiples of g1.
class LevelTable {
public:
	explicit LevelTable(NumericalSemigroup s) : sg_(std::move(s))
	{
		const Int m = sg_.multiplicity();
		// Reduction numbers are at most g1 - 1; doubling just keeps tables small.
		int guess = 4;
		for (;;) {
			tabulate((static_cast<Int>(guess) + 3) * m + fplus());
			if (auto r = find_reduction_number(guess)) {
				reduction_ = *r;
				break;
			}
			if (guess > m + 8)
				throw InternalError("no reduction number found for <" + sg_.key() + ">");
			guess *= 2;
		}
		// Trim to what the queries need: levels up to r + 3 directly.
		bound_ = (static_cast<Int>(reduction_) + 3) * m + fplus();
		ord_.resize(static_cast<std::size_t>(bound_) + 1);
		hilbert_.reserve(static_cast<std::size_t>(reduction_) + 1);
		for (int h = 0; h <= reduction_; ++h)
			hilbert_.push_back(count_level(h));
	}

	const NumericalSemigroup& semigroup() const noexcept { return sg_; }
	Int multiplicity() const noexcept { return sg_.multiplicity(); }
	/// Largest element whose order is stored directly.
	Int bound() const noexcept { return bound_; }
	int reduction_number() const noexcept { return reduction_; }
	/// H(0), ..., H(r); H(h) = g1 for every h >= r.
	const std::vector<Int>& hilbert() const noexcept { return hilbert_; }

	Int hilbert_at(int h) const
	{
		if (h < 0)
			throw DomainError("negative level");
		if (h <= reduction_)
			return hilbert_[static_cast<std::size_t>(h)];
		return sg_.multiplicity();
	}

	bool contains(Int s) const noexcept { return sg_.contains(s); }

	/// max{h : s in hM}; throws DomainError for gaps.
	int order(Int s) const
	{
		if (!sg_.contains(s))
			throw DomainError(std::to_string(s) + " is not an element of <" + sg_.key() + ">");
		return order_of_member(s);
	}

	/// -1 for gaps and negative values, the order otherwise.
	int order_or_gap(Int s) const noexcept
	{
		if (!sg_.contains(s))
			return -1;
		return order_of_member(s);
	}

	/// hM \ (h+1)M, ascending.
	std::vector<Int> level_set(int h) const
	{
		if (h < 0)
			throw DomainError("negative level");
		const Int m = sg_.multiplicity();
		const Int top = static_cast<Int>(h) * m + fplus();
		if (top > bound_) {
			// Past r every level is a translate of level r.
			auto base = level_set(reduction_);
			for (Int& v : base)
				v += static_cast<Int>(h - reduction_) * m;
			return base;
		}
		std::vector<Int> out;
		for (Int s = 0; s <= top; ++s)
			if (ord_[static_cast<std::size_t>(s)] == h)
				out.push_back(s);
		return out;
	}

	/// Elements on level h-1 that skip a level when g1 is added.
	std::vector<Int> d_set(int h) const
	{
		if (h < 1)
			throw DomainError("D_h is defined for h >= 1");
		std::vector<Int> out;
		if (h == 1)
			return out;
		const Int m = sg_.multiplicity();
		for (Int s : level_set(h - 1))
			if (order_of_member(s + m) >= h + 1)
				out.push_back(s);
		return out;
	}

	/// Elements on level h not of the form t + g1 with t on level h-1.
	std::vector<Int> c_set(int h) const
	{
		if (h < 1)
			throw DomainError("C_h is defined for h >= 1");
		const Int m = sg_.multiplicity();
		std::vector<Int> out;
		for (Int s : level_set(h))
			if (order_or_gap(s - m) != h - 1)
				out.push_back(s);
		return out;
	}

	/// Least h with H(h) < H(h-1).
	std::optional<int> first_decrease() const
	{
		for (int h = 1; h <= reduction_; ++h)
			if (hilbert_[static_cast<std::size_t>(h)] < hilbert_[static_cast<std::size_t>(h - 1)])
				return h;
		return std::nullopt;
	}

private:
	Int fplus() const noexcept { return std::max<Int>(sg_.frobenius(), 0); }

	void tabulate(Int bound)
	{
		bound_ = bound;
		ord_.assign(static_cast<std::size_t>(bound) + 1, -1);
		ord_[0] = 0;
		const auto& gens = sg_.generators();
		for (Int x = 1; x <= bound; ++x) {
			int best = -1;
			for (Int g : gens) {
				if (g > x)
					break;
				const int prev = ord_[static_cast<std::size_t>(x - g)];
				if (prev + 1 > best && prev >= 0)
					best = prev + 1;
			}
			ord_[static_cast<std::size_t>(x)] = best;
		}
	}

	// Least h in 1..max_h with (h+1)M = g1 + hM. Only s <= (h+1)g1 + f can be
	// counterexamples: beyond that s - g1 already lies in (h+1)M.
	std::optional<int> find_reduction_number(int max_h) const
	{
		const Int m = sg_.multiplicity();
		for (int h = 1; h <= max_h; ++h) {
			const Int top = (static_cast<Int>(h) + 1) * m + fplus();
			if (top > bound_)
				return std::nullopt;
			bool equal = true;
			for (Int s = m; s <= top && equal; ++s) {
				const int o = ord_[static_cast<std::size_t>(s)];
				if (o >= h + 1 && ord_[static_cast<std::size_t>(s - m)] < h)
					equal = false;
			}
			if (equal)
				return h;
		}
		return std::nullopt;
	}

	Int count_level(int h) const
	{
		const Int top = static_cast<Int>(h) * sg_.multiplicity() + fplus();
		Int n = 0;
		for (Int s = 0; s <= top; ++s)
			n += ord_[static_cast<std::size_t>(s)] == h;
		return n;
	}

	int order_of_member(Int s) const noexcept
	{
		if (s <= bound_)
			return ord_[static_cast<std::size_t>(s)];
		const Int m = sg_.multiplicity();
		const Int steps = (s - bound_ + m - 1) / m;
		return ord_[static_cast<std::size_t>(s - steps * m)] + static_cast<int>(steps);
	}

	NumericalSemigroup sg_;
	Int bound_ = 0;
	int reduction_ = 1;
	std::vector<int> ord_;
	std::vector<Int> hilbert_;
};

inline std::vector<Int> level_set(const NumericalSemigroup& s, int h) { return LevelTable(s).level_set(h); }

struct HilbertFunction {
	std::vector<Int> values; ///< H(0..r)
	int reduction_number = 1;
};

inline HilbertFunction hilbert_function(const NumericalSemigroup& s)
{
	LevelTable t(s);
	return {t.hilbert(), t.reduction_number()};
}

inline std::vector<Int> d_set(const NumericalSemigroup& s, int h) { return LevelTable(s).d_set(h); }
inline std::vector<Int> c_set(const NumericalSemigroup& s, int h) { return LevelTable(s).c_set(h); }
inline std::optional<int> first_decrease(const NumericalSemigroup& s) { return LevelTable(s).first_decrease(); }

} // namespace numsg
