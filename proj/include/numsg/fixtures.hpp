#pragma once

// Golden values for three worked semigroups: <24,25,36,51,54> (injection that
// needs two blocks), <13,19,24,44,49,54,55,59,60,66> (decreasing, injection
// fails) and <16,17,35,71> (non-decreasing although |D_3| > 4).

#include "numsg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace numsg::fixtures {

using report::json;

inline constexpr const char* builtin_text = R"json([
  {"name": "hilbert <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "hilbert",
   "expected": [1,5,11,16,19,20,21,22,22,22,22,23,24]},
  {"name": "D sizes <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "d_sizes",
   "expected": {"prefix": [1,3,4,4], "tail_max": 3}},
  {"name": "D_5 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "d_set", "level": 5,
   "expected": [126,137,155,166]},
  {"name": "ord(126) <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "order", "element": 126,
   "expected": 4},
  {"name": "lex rep 150 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "lex_rep", "element": 150,
   "expected": [0,6,0,0,0]},
  {"name": "lex rep 161 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "lex_rep", "element": 161,
   "expected": [0,5,1,0,0]},
  {"name": "lex rep 179 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "lex_rep", "element": 179,
   "expected": [0,5,0,0,1]},
  {"name": "lex rep 190 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "lex_rep", "element": 190,
   "expected": [0,4,1,0,1]},
  {"name": "psi(126) <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "psi", "level": 5,
   "element": 126, "expected": 125},
  {"name": "psi(137) <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "psi", "level": 5,
   "element": 137, "expected": 125},
  {"name": "psi(155) <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "psi", "level": 5,
   "element": 155, "expected": 125},
  {"name": "psi(166) <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "psi", "level": 5,
   "element": 166, "expected": 136},
  {"name": "injection level 5 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "injection", "level": 5,
   "expected": {"success": true,
                "assignment": {"126": 125, "137": 136, "155": 154, "166": 165},
                "trace": [[137, 136], [155, 154], [166, 165]],
                "failure": null}},
  {"name": "C_5 <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "c_set", "level": 5,
   "expected": [125,136,154,165,191]},
  {"name": "|C_2| <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "c_size", "level": 2,
   "expected": 7},
  {"name": "tangent cone <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "tangent_cone_cm",
   "expected": false},
  {"name": "certificate <24,25,36,51,54>", "semigroup": [24,25,36,51,54], "kind": "certificate",
   "expected": {"nondecreasing": true, "certificate": "DhBound"}},

  {"name": "D_2 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "d_set", "level": 2,
   "expected": [44,49,54,59]},
  {"name": "maximal reps of 57 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "max_reps",
   "element": 57, "expected": [[0,3,0,0,0,0,0,0,0,0]]},
  {"name": "lex rep 62 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "lex_rep",
   "element": 62, "expected": [0,2,1,0,0,0,0,0,0,0]},
  {"name": "lex rep 67 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "lex_rep",
   "element": 67, "expected": [0,1,2,0,0,0,0,0,0,0]},
  {"name": "lex rep 72 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "lex_rep",
   "element": 72, "expected": [0,0,3,0,0,0,0,0,0,0]},
  {"name": "psi(44) <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "psi", "level": 2,
   "element": 44, "expected": 38},
  {"name": "psi(49) <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "psi", "level": 2,
   "element": 49, "expected": 38},
  {"name": "psi(54) <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "psi", "level": 2,
   "element": 54, "expected": 43},
  {"name": "psi(59) <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "psi", "level": 2,
   "element": 59, "expected": 48},
  {"name": "injection level 2 <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "injection",
   "level": 2,
   "expected": {"success": false,
                "assignment": {"44": 38, "49": 43, "54": 48, "59": 48},
                "trace": [[49, 43], [54, 48]],
                "failure": {"reason": "blocks_exhausted", "tie_index": 3, "first": 54, "second": 59, "value": 48}}},
  {"name": "first decrease <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "first_decrease",
   "expected": 2},
  {"name": "certificate <13,...,66>", "semigroup": [13,19,24,44,49,54,55,59,60,66], "kind": "certificate",
   "expected": {"nondecreasing": false, "certificate": "Direct"}},

  {"name": "hilbert <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "hilbert",
   "expected": [1,4,8,10,10,11,11,12,12,13,13,14,14,15,15,16]},
  {"name": "D_3 <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "d_set", "level": 3,
   "expected": [52,70,88,106,142]},
  {"name": "C_3 <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "c_set", "level": 3,
   "expected": [51,69,87,105,123,141,159]},
  {"name": "level gap 3 <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "level_gap", "level": 3,
   "expected": {"previous": 8, "current": 10, "c_minus_d": 2}},
  {"name": "first decrease <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "first_decrease",
   "expected": null},
  {"name": "certificate <16,17,35,71>", "semigroup": [16,17,35,71], "kind": "certificate",
   "expected": {"nondecreasing": true, "certificate": "Direct"}}
])json";

inline json builtin() { return json::parse(builtin_text); }

struct Outcome {
	std::string name;
	bool pass = false;
	std::string detail; ///< "expected X, got Y" on failure
};

/// What the library computes for a fixture's kind and parameters.
inline json evaluate(const json& fx)
{
	const auto gens = fx.at("semigroup").get<std::vector<Int>>();
	const auto s = make_semigroup(gens);
	const LevelTable t(s);
	const std::string kind = fx.at("kind").get<std::string>();
	auto level = [&] { return fx.at("level").get<int>(); };
	auto element = [&] { return fx.at("element").get<Int>(); };

	if (kind == "hilbert")
		return t.hilbert();
	if (kind == "hilbert_text")
		return report::format_hilbert(t.hilbert());
	if (kind == "d_set")
		return t.d_set(level());
	if (kind == "c_set")
		return t.c_set(level());
	if (kind == "c_size")
		return t.c_set(level()).size();
	if (kind == "d_sizes") {
		const auto prefix_len = fx.at("expected").at("prefix").size();
		std::vector<std::size_t> prefix;
		std::size_t tail_max = 0;
		for (int h = 2; h <= t.reduction_number(); ++h) {
			const auto d = t.d_set(h).size();
			if (prefix.size() < prefix_len)
				prefix.push_back(d);
			else
				tail_max = std::max(tail_max, d);
		}
		return {{"prefix", prefix}, {"tail_max", tail_max}};
	}
	if (kind == "level_gap") {
		const int h = level();
		const auto diff = static_cast<Int>(t.c_set(h).size()) - static_cast<Int>(t.d_set(h).size());
		return {{"previous", t.hilbert_at(h - 1)}, {"current", t.hilbert_at(h)}, {"c_minus_d", diff}};
	}
	if (kind == "order")
		return t.order(element());
	if (kind == "lex_rep")
		return lex_greatest_maximal_rep(t, element()).coeffs;
	if (kind == "max_reps") {
		json out = json::array();
		for (const auto& r : maximal_representations(t, element()))
			out.push_back(r.coeffs);
		return out;
	}
	if (kind == "psi")
		return psi_map(t, level(), element());
	if (kind == "injection") {
		const auto res = build_injection(t, level());
		json assignment = json::object();
		for (const auto& [d, img] : res.assignment)
			assignment[std::to_string(d)] = img;
		json trace = json::array();
		for (const auto& st : res.trace)
			trace.push_back({st.element, st.image_value});
		json failure = nullptr;
		if (res.failure)
			failure = {{"reason", report::failure_name(res.failure->reason)},
			           {"tie_index", res.failure->tie_index},
			           {"first", res.failure->first},
			           {"second", res.failure->second},
			           {"value", res.failure->value}};
		return {{"success", res.success}, {"assignment", assignment}, {"trace", trace}, {"failure", failure}};
	}
	if (kind == "first_decrease")
		return report::optional_int(t.first_decrease());
	if (kind == "certificate") {
		const auto v = certify(t, abc_table(t));
		return {{"nondecreasing", v.nondecreasing}, {"certificate", std::string(to_string(v.certificate))}};
	}
	if (kind == "tangent_cone_cm")
		return tangent_cone_is_cm(abc_table(t));
	if (kind == "blowup")
		return blowup(s).generators();
	throw InvalidInput("unknown fixture kind '" + kind + "'");
}

/// Replays every fixture, optionally only those for one semigroup (by key,
/// e.g. "16,17,35,71"). A fixture that throws counts as a failure.
inline std::vector<Outcome> verify(const json& fixtures, const std::optional<std::string>& only = std::nullopt)
{
	if (!fixtures.is_array())
		throw InvalidInput("fixture file must hold a JSON array");
	std::vector<Outcome> out;
	for (const auto& fx : fixtures) {
		Outcome o;
		o.name = fx.value("name", std::string("(unnamed)"));
		try {
			const auto gens = fx.at("semigroup").get<std::vector<Int>>();
			if (only && make_semigroup(gens).key() != *only)
				continue;
			const auto actual = evaluate(fx);
			const auto& expected = fx.at("expected");
			o.pass = actual == expected;
			if (!o.pass)
				o.detail = "expected " + expected.dump() + ", got " + actual.dump();
		} catch (const std::exception& e) {
			o.pass = false;
			o.detail = std::string("error: ") + e.what();
		}
		out.push_back(std::move(o));
	}
	return out;
}

/// Replays the built-in fixture set.
inline std::vector<Outcome> verify_paper_examples() { return verify(builtin()); }

} // namespace numsg::fixtures
