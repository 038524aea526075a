#pragma once

#include "numsg/filtration.hpp"
#include "numsg/invariants.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace numsg {

enum class Certificate { CMTangentCone, AperyBound, DhBound, Direct };

inline std::string_view to_string(Certificate c)
{
	switch (c) {
	case Certificate::CMTangentCone: return "CMTangentCone";
	case Certificate::AperyBound: return "AperyBound";
	case Certificate::DhBound: return "DhBound";
	case Certificate::Direct: return "Direct";
	}
	return "?";
}

/// What the deciding criterion looked at. Fields not computed for the
/// certificate that fired are left empty.
struct Evidence {
	std::size_t bad_residues = 0;            ///< |{i : a_i > b_i}|
	std::vector<Int> per_level_bound;        ///< min(bad_residues, h+1) for h = 2..r (AperyBound)
	std::vector<std::size_t> d_sizes;        ///< |D_h| for h = 2..r (DhBound, Direct)
	std::vector<std::size_t> c_sizes;        ///< |C_h| for h = 2..r (Direct)
	std::vector<Int> hilbert;                ///< H(0..r) (Direct)
};

struct Verdict {
	bool nondecreasing = true;
	Certificate certificate = Certificate::Direct;
	std::optional<int> first_decrease;
	Evidence evidence;
};

/// Criteria are tried cheapest first; the first that fires is reported.
inline Verdict certify(const LevelTable& t, const AperyInvariants& inv)
{
	Verdict v;
	const int r = t.reduction_number();
	v.evidence.bad_residues = inv.bad_count();
	if (v.evidence.bad_residues == 0) {
		v.certificate = Certificate::CMTangentCone;
		return v;
	}
	if (v.evidence.bad_residues <= 3) {
		v.certificate = Certificate::AperyBound;
		for (int h = 2; h <= r; ++h)
			v.evidence.per_level_bound.push_back(std::min<Int>(static_cast<Int>(v.evidence.bad_residues), h + 1));
		return v;
	}
	bool bound_holds = true;
	for (int h = 2; h <= r; ++h) {
		const auto d = t.d_set(h).size();
		v.evidence.d_sizes.push_back(d);
		bound_holds = bound_holds && d <= static_cast<std::size_t>(h) + 1;
	}
	if (bound_holds) {
		v.certificate = Certificate::DhBound;
		return v;
	}
	v.certificate = Certificate::Direct;
	for (int h = 2; h <= r; ++h)
		v.evidence.c_sizes.push_back(t.c_set(h).size());
	v.evidence.hilbert = t.hilbert();
	v.first_decrease = t.first_decrease();
	v.nondecreasing = !v.first_decrease.has_value();
	return v;
}

inline Verdict certify(const NumericalSemigroup& s)
{
	LevelTable t(s);
	return certify(t, abc_table(t));
}

/// Necessary conditions for a decreasing Hilbert function.
struct NecessaryReport {
	std::size_t c2_count = 0; ///< |{omega_i : b_i = 2}| = |C_2|
	int c_chain_ok = 1;       ///< largest j with |C_h| >= h+1 for all 2 <= h <= j (1 if none)
	std::size_t ed = 0;
	bool ed45_small_mult = false; ///< e.d. in {4,5} and g1 <= 8

	/// c2_count < 3 already rules out a decrease.
	bool shortcut_nondecreasing() const { return c2_count < 3; }
};

inline NecessaryReport necessary_report(const LevelTable& t, const AperyInvariants& inv)
{
	NecessaryReport rep;
	for (const auto& row : inv.rows)
		rep.c2_count += row.b == 2;
	rep.ed = t.semigroup().embedding_dimension();
	rep.ed45_small_mult = (rep.ed == 4 || rep.ed == 5) && t.multiplicity() <= 8;
	if (rep.c2_count >= 3) {
		for (int h = 2; h <= t.reduction_number(); ++h) {
			if (t.c_set(h).size() < static_cast<std::size_t>(h) + 1)
				break;
			rep.c_chain_ok = h;
		}
	}
	return rep;
}

inline NecessaryReport necessary_report(const NumericalSemigroup& s)
{
	LevelTable t(s);
	return necessary_report(t, abc_table(t));
}

} // namespace numsg
