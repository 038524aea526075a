#pragma once

#include "numsg/filtration.hpp"

#include <optional>
#include <vector>

namespace numsg {

/// S' = <g1, g2 - g1, ..., gn - g1>, reduced to its minimal generators.
inline NumericalSemigroup blowup(const NumericalSemigroup& s)
{
	const auto& g = s.generators();
	std::vector<Int> raw{g.front()};
	for (std::size_t j = 1; j < g.size(); ++j)
		raw.push_back(g[j] - g.front());
	return NumericalSemigroup::generated_by(raw);
}

/// Apery set of the blow-up taken with respect to g1 of the original
/// semigroup, not the blow-up's own multiplicity.
inline std::vector<Int> blowup_apery(const NumericalSemigroup& s)
{
	const auto& g = s.generators();
	std::vector<Int> raw{g.front()};
	for (std::size_t j = 1; j < g.size(); ++j)
		raw.push_back(g[j] - g.front());
	return detail::residue_shortest_paths(raw, g.front());
}

struct AperyRow {
	Int residue = 0;
	Int omega = 0;       ///< least element of S in the class
	Int omega_prime = 0; ///< least element of S' in the class
	int a = 0;           ///< omega = omega_prime + a * g1
	int b = 0;           ///< order of omega
	int c = 0;           ///< min h with omega_prime + h*g1 in hM

	friend bool operator==(const AperyRow&, const AperyRow&) = default;
};

struct AperyInvariants {
	std::vector<AperyRow> rows;

	/// Residues where a_i > b_i.
	std::size_t bad_count() const
	{
		std::size_t n = 0;
		for (const auto& r : rows)
			n += r.a > r.b;
		return n;
	}
};

inline AperyInvariants abc_table(const LevelTable& table)
{
	const auto& s = table.semigroup();
	const Int m = s.multiplicity();
	const auto& omega = s.apery();
	const auto omega_prime = blowup_apery(s);

	AperyInvariants inv;
	inv.rows.reserve(omega.size());
	for (Int i = 0; i < m; ++i) {
		const auto k = static_cast<std::size_t>(i);
		AperyRow row;
		row.residue = i;
		row.omega = omega[k];
		row.omega_prime = omega_prime[k];
		const Int diff = row.omega - row.omega_prime;
		if (diff < 0 || diff % m != 0)
			throw InternalError("omega - omega' is not a nonnegative multiple of g1 for residue " +
			                    std::to_string(i) + " of <" + s.key() + ">");
		row.a = static_cast<int>(diff / m);
		row.b = table.order(row.omega);

		// Membership in hM - h g1 is monotone in h, so scan upward.
		const int cap = row.a + table.reduction_number() + static_cast<int>(m);
		int h = 0;
		while (table.order_or_gap(row.omega_prime + h * m) < h) {
			if (++h > cap)
				throw InternalError("c_i scan exceeded cap for residue " + std::to_string(i) + " of <" +
				                    s.key() + ">");
		}
		row.c = h;
		inv.rows.push_back(row);
	}
	return inv;
}

inline AperyInvariants abc_table(const NumericalSemigroup& s) { return abc_table(LevelTable(s)); }

/// Cohen-Macaulay tangent cone: a_i = b_i for every residue.
inline bool tangent_cone_is_cm(const AperyInvariants& inv) { return inv.bad_count() == 0; }

inline bool tangent_cone_is_cm(const NumericalSemigroup& s) { return tangent_cone_is_cm(abc_table(s)); }

/// For a residue with a_i > b_i, an element omega_i + lambda*g1 that skips a
/// level when g1 is added. Such an element exists with lambda < c_i - a_i.
inline std::optional<Int> skip_witness(const LevelTable& table, const AperyInvariants& inv, Int residue)
{
	const Int m = table.multiplicity();
	if (residue < 0 || residue >= m)
		throw DomainError("residue " + std::to_string(residue) + " out of range 0.." + std::to_string(m - 1));
	const auto& row = inv.rows[static_cast<std::size_t>(residue)];
	if (row.a == row.b)
		return std::nullopt;
	for (int lambda = 0; lambda < row.c - row.a; ++lambda) {
		const Int s = row.omega + lambda * m;
		if (table.order(s + m) > table.order(s) + 1)
			return s;
	}
	throw InternalError("a_i > b_i but no skipping element found for residue " + std::to_string(residue));
}

inline std::optional<Int> skip_witness(const NumericalSemigroup& s, Int residue)
{
	LevelTable t(s);
	return skip_witness(t, abc_table(t), residue);
}

} // namespace numsg
