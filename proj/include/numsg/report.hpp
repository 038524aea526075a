#pragma once

#include "numsg/monotonicity.hpp"
#include "numsg/representations.hpp"
#include "numsg/search.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace numsg::report {

using json = nlohmann::ordered_json;

inline json to_json(const NumericalSemigroup& s) { return s.generators(); }

/// "1,5,11,…,24, →": H(0..r) with the stable value repeated as continuation.
inline std::string format_hilbert(const std::vector<Int>& values)
{
	std::string out;
	for (Int v : values)
		out += std::to_string(v) + ",";
	return out + " →";
}

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

inline json filtration_fragment(const LevelTable& t)
{
	json j;
	j["hilbert"] = t.hilbert();
	j["r"] = t.reduction_number();
	json d = json::object();
	for (int h = 2; h <= t.reduction_number(); ++h)
		d[std::to_string(h)] = t.d_set(h);
	j["D"] = std::move(d);
	json c = json::object();
	for (int h = 1; h <= t.reduction_number(); ++h)
		c[std::to_string(h)] = t.c_set(h);
	j["C"] = std::move(c);
	j["first_decrease"] = optional_int(t.first_decrease());
	return j;
}

inline json abc_fragment(const AperyInvariants& inv)
{
	json rows = json::array();
	for (const auto& r : inv.rows)
		rows.push_back({{"i", r.residue},
		                {"omega", r.omega},
		                {"omega_prime", r.omega_prime},
		                {"a", r.a},
		                {"b", r.b},
		                {"c", r.c}});
	return {{"abc", std::move(rows)}, {"tangent_cone_cm", tangent_cone_is_cm(inv)}};
}

inline json evidence_json(const Evidence& e, Certificate c)
{
	json j;
	j["bad_residues"] = e.bad_residues;
	switch (c) {
	case Certificate::CMTangentCone: break;
	case Certificate::AperyBound: j["per_level_bound"] = e.per_level_bound; break;
	case Certificate::DhBound: j["d_sizes"] = e.d_sizes; break;
	case Certificate::Direct:
		j["d_sizes"] = e.d_sizes;
		j["c_sizes"] = e.c_sizes;
		j["hilbert"] = e.hilbert;
		break;
	}
	return j;
}

inline json verdict_json(const NumericalSemigroup& s, const Verdict& v)
{
	return {{"semigroup", to_json(s)},
	        {"nondecreasing", v.nondecreasing},
	        {"certificate", std::string(to_string(v.certificate))},
	        {"first_decrease", optional_int(v.first_decrease)},
	        {"evidence", evidence_json(v.evidence, v.certificate)}};
}

inline json necessary_json(const NecessaryReport& r)
{
	return {{"c2_count", r.c2_count},
	        {"c_chain_ok", r.c_chain_ok},
	        {"ed", r.ed},
	        {"ed45_small_mult", r.ed45_small_mult},
	        {"c2_shortcut_nondecreasing", r.shortcut_nondecreasing()}};
}

/// Everything the library knows about one semigroup.
inline json analyze(const NumericalSemigroup& s)
{
	LevelTable t(s);
	const auto inv = abc_table(t);
	json j;
	j["semigroup"] = to_json(s);
	j["multiplicity"] = s.multiplicity();
	j["embedding_dimension"] = s.embedding_dimension();
	j["frobenius"] = s.frobenius();
	j["symmetric"] = is_symmetric(s);
	j["apery"] = s.apery();
	j["blowup"] = to_json(blowup(s));
	const auto levels = filtration_fragment(t);
	for (const auto& [k, v] : levels.items())
		j[k] = v;
	const auto table = abc_fragment(inv);
	for (const auto& [k, v] : table.items())
		j[k] = v;
	j["verdict"] = verdict_json(s, certify(t, inv));
	j["necessary"] = necessary_json(necessary_report(t, inv));
	return j;
}

inline const char* failure_name(InjectionFailure f)
{
	return f == InjectionFailure::BlocksExhausted ? "blocks_exhausted" : "no_admissible_generator";
}

inline json injection_json(const InjectionResult& res, const std::vector<Int>& gens)
{
	json j;
	j["level"] = res.level;
	j["success"] = res.success;
	j["D"] = res.domain;
	json initial = json::object();
	for (std::size_t k = 0; k < res.domain.size(); ++k)
		initial[std::to_string(res.domain[k])] = detail::dot(res.initial[k], gens);
	j["psi"] = std::move(initial);
	json assignment = json::object();
	for (const auto& [s, img] : res.assignment)
		assignment[std::to_string(s)] = img;
	j["assignment"] = std::move(assignment);
	json trace = json::array();
	for (const auto& st : res.trace)
		trace.push_back({{"step", st.step},
		                 {"block", st.block},
		                 {"tie_index", st.tie_index},
		                 {"element", st.element},
		                 {"tied_with", st.tied_with},
		                 {"replaced", st.replaced},
		                 {"inserted", st.inserted},
		                 {"image", format_sum(st.image, gens)},
		                 {"image_value", st.image_value}});
	j["trace"] = std::move(trace);
	if (res.failure)
		j["failure"] = {{"reason", failure_name(res.failure->reason)},
		                {"tie_index", res.failure->tie_index},
		                {"first", res.failure->first},
		                {"second", res.failure->second},
		                {"value", res.failure->value}};
	else
		j["failure"] = nullptr;
	return j;
}

/// Human-readable replay of the construction in ψ, ψ′, ψ″, ψ⁽ʷ⁾ notation.
inline std::string injection_text(const InjectionResult& res, const std::vector<Int>& gens, bool trace)
{
	std::ostringstream os;
	os << "D_" << res.level << " = {";
	for (std::size_t k = 0; k < res.domain.size(); ++k)
		os << (k ? ", " : "") << res.domain[k];
	os << "}\n";
	if (trace) {
		for (std::size_t k = 0; k < res.domain.size(); ++k)
			os << "ψ(" << res.domain[k] << ") = " << format_sum(res.initial[k], gens) << " = "
			   << detail::dot(res.initial[k], gens) << "\n";
		for (const auto& st : res.trace)
			os << psi_name(st.step) << "(" << st.element << ") = " << format_sum(st.image, gens) << " = "
			   << st.image_value << "  [block " << st.block << ", tie at index " << st.tie_index << " with "
			   << st.tied_with << ", " << st.replaced << " -> " << st.inserted << "]\n";
	}
	if (res.success) {
		os << "injective: ";
		for (std::size_t k = 0; k < res.assignment.size(); ++k)
			os << (k ? ", " : "") << res.assignment[k].first << "->" << res.assignment[k].second;
		os << "\n";
	} else {
		const auto& f = *res.failure;
		const std::string name = psi_name(static_cast<int>(res.trace.size()));
		os << "failure: " << name << "(" << f.first << ") = " << name << "(" << f.second << ") = " << f.value
		   << " at index " << f.tie_index << " ("
		   << (f.reason == InjectionFailure::BlocksExhausted ? "no summand position left to modify"
		                                                     : "no admissible generator")
		   << ")\n";
	}
	return os.str();
}

inline json record_json(const SearchRecord& r)
{
	json j;
	j["generators"] = r.generators;
	j["m"] = r.multiplicity;
	j["ed"] = r.ed;
	j["f"] = r.frobenius;
	j["r"] = r.reduction_number;
	j["symmetric"] = r.symmetric;
	j["nondecreasing"] = r.nondecreasing;
	j["certificate"] = std::string(to_string(r.certificate));
	j["first_decrease"] = optional_int(r.first_decrease);
	j["necessary"] = {{"c2_count", r.necessary.c2_count},
	                  {"c_chain_ok", r.necessary.c_chain_ok},
	                  {"ed45_small_mult", r.necessary.ed45_small_mult}};
	if (r.wall_us)
		j["wall_us"] = *r.wall_us;
	return j;
}

inline std::string csv_header() { return "generators,m,ed,f,r,certificate,first_decrease"; }

inline std::string csv_row(const SearchRecord& r)
{
	std::string gens;
	for (std::size_t k = 0; k < r.generators.size(); ++k)
		gens += (k ? "," : "") + std::to_string(r.generators[k]);
	return "\"" + gens + "\"," + std::to_string(r.multiplicity) + "," + std::to_string(r.ed) + "," +
	       std::to_string(r.frobenius) + "," + std::to_string(r.reduction_number) + "," +
	       std::string(to_string(r.certificate)) + "," +
	       (r.first_decrease ? std::to_string(*r.first_decrease) : std::string());
}

inline json summary_json(const HuntSummary& s)
{
	json per = json::object();
	for (const auto& [k, v] : s.per_certificate)
		per[k] = v;
	return {{"candidates", s.candidates},
	        {"matched", s.matched},
	        {"decreasing", s.decreasing},
	        {"per_certificate", std::move(per)},
	        {"partitions_total", s.partitions_total},
	        {"resume_key", s.partitions_done},
	        {"interrupted", s.interrupted},
	        {"seconds", s.seconds},
	        {"per_second", s.seconds > 0 ? static_cast<double>(s.candidates) / s.seconds : 0.0}};
}

} // namespace numsg::report
