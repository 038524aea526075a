#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process
// with captured streams.

#include "numsg/fixtures.hpp"
#include "numsg/report.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace numsg::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, fixture_failure = 2, internal_error = 3 };

namespace detail {

inline void write_search_output(const HuntResult& res, std::ostream& records, std::ostream& summary,
                                std::ostream* csv)
{
	for (const auto& r : res.records)
		records << report::record_json(r).dump() << '\n';
	if (csv) {
		*csv << report::csv_header() << '\n';
		for (const auto& r : res.records)
			*csv << report::csv_row(r) << '\n';
	}
	summary << report::json{{"summary", report::summary_json(res.summary)}}.dump() << '\n';
}

} // namespace detail

/// Runs one invocation. `stop` lets a signal handler interrupt `search`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const std::atomic<bool>* stop = nullptr)
{
	CLI::App app{"Hilbert functions of numerical semigroup rings: levels, Apery invariants, "
	             "injections D_h -> C_h, and exhaustive search"};
	app.name("numsg");
	app.require_subcommand(1);

	std::vector<Int> gens;
	bool json_out = false;

	auto* analyze = app.add_subcommand("analyze", "full JSON report for one semigroup");
	analyze->add_option("generators", gens, "generators (any generating set)")->required();

	auto* hilbert = app.add_subcommand("hilbert", "Hilbert function H(0..r), then the stable value");
	hilbert->add_option("generators", gens)->required();
	hilbert->add_flag("--json", json_out, "emit JSON fragment with D and C sets");

	auto* apery = app.add_subcommand("apery", "Apery set and a_i, b_i, c_i table");
	apery->add_option("generators", gens)->required();
	apery->add_flag("--json", json_out);

	int level = 0;
	bool trace = false;
	auto* injection = app.add_subcommand("injection", "build the tie-breaking injection D_h -> C_h");
	injection->add_option("generators", gens)->required();
	injection->add_option("--level", level, "level h >= 2")->required();
	injection->add_flag("--trace", trace, "print every redefinition step");
	injection->add_flag("--json", json_out);

	SearchConstraints sc;
	std::size_t ed_max = 0;
	Int max_gen = 0;
	Int max_frob = 0;
	std::string predicate = "all";
	unsigned workers = 1;
	std::string out_file;
	std::string csv_file;
	std::size_t resume = 0;
	double time_limit = 0;
	bool timings = false;
	auto* search = app.add_subcommand("search", "exhaustive search over a bounded family");
	search->add_option("--max-mult", sc.max_multiplicity, "largest multiplicity g1")->required();
	search->add_option("--ed-min", sc.ed_min, "smallest embedding dimension")->default_val(2);
	auto* ed_max_opt = search->add_option("--ed-max", ed_max, "largest embedding dimension");
	auto* max_gen_opt = search->add_option("--max-gen", max_gen, "largest generator");
	auto* max_frob_opt = search->add_option("--max-frob", max_frob, "largest Frobenius number");
	search->add_flag("--symmetric", sc.symmetric_only, "symmetric semigroups only");
	search->add_option("--predicate", predicate, "decreasing | dh_bound_fails | certificate_is_direct | all")
	    ->default_val("all");
	search->add_option("--workers", workers, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
	search->add_option("--out", out_file, "JSONL record file (default: stdout)");
	search->add_option("--csv", csv_file, "CSV table of the matched records");
	search->add_option("--resume", resume, "resume key printed by an interrupted run");
	search->add_option("--time-limit", time_limit, "stop after this many seconds, keeping a resume key");
	search->add_flag("--timings", timings, "add per-record wall time (makes output nondeterministic)");

	std::string fixture_file;
	std::string only;
	bool dump = false;
	auto* verify = app.add_subcommand("verify-paper", "replay the built-in golden fixtures");
	verify->add_option("--fixtures", fixture_file, "fixture JSON file (default: built-in set)");
	verify->add_option("--only", only, "restrict to one semigroup, e.g. 16,17,35,71");
	verify->add_flag("--dump", dump, "print the built-in fixture set and exit");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? ok : invalid_input;
	}

	try {
		if (*analyze) {
			out << report::analyze(make_semigroup(gens)).dump(2) << '\n';
			return ok;
		}
		if (*hilbert) {
			const LevelTable t(make_semigroup(gens));
			if (json_out)
				out << report::filtration_fragment(t).dump() << '\n';
			else
				out << report::format_hilbert(t.hilbert()) << '\n';
			return ok;
		}
		if (*apery) {
			const LevelTable t(make_semigroup(gens));
			const auto inv = abc_table(t);
			if (json_out) {
				auto j = report::abc_fragment(inv);
				j["apery"] = t.semigroup().apery();
				out << j.dump() << '\n';
				return ok;
			}
			out << "Ap(S, " << t.multiplicity() << ") = {";
			for (std::size_t i = 0; i < inv.rows.size(); ++i)
				out << (i ? ", " : "") << inv.rows[i].omega;
			out << "}\n";
			out << "i\tomega\tomega'\ta\tb\tc\n";
			for (const auto& r : inv.rows)
				out << r.residue << '\t' << r.omega << '\t' << r.omega_prime << '\t' << r.a << '\t' << r.b << '\t'
				    << r.c << (r.a > r.b ? "\t*" : "") << '\n';
			out << "tangent cone Cohen-Macaulay: " << (tangent_cone_is_cm(inv) ? "yes" : "no") << '\n';
			return ok;
		}
		if (*injection) {
			const LevelTable t(make_semigroup(gens));
			const auto res = build_injection(t, level);
			if (json_out)
				out << report::injection_json(res, t.semigroup().generators()).dump() << '\n';
			else
				out << report::injection_text(res, t.semigroup().generators(), trace);
			return ok;
		}
		if (*search) {
			if (*ed_max_opt)
				sc.ed_max = ed_max;
			if (*max_gen_opt)
				sc.max_generator = max_gen;
			if (*max_frob_opt)
				sc.max_frobenius = max_frob;
			sc.predicate = parse_predicate(predicate);
			sc.validate();

			std::atomic<bool> local_stop{false};
			std::jthread watchdog;
			if (time_limit > 0)
				watchdog = std::jthread([&](std::stop_token tok) {
					const auto until = std::chrono::steady_clock::now() + std::chrono::duration<double>(time_limit);
					while (!tok.stop_requested() && std::chrono::steady_clock::now() < until) {
						if (stop && stop->load())
							break;
						std::this_thread::sleep_for(std::chrono::milliseconds(20));
					}
					local_stop = true;
				});
			else if (stop)
				watchdog = std::jthread([&](std::stop_token tok) {
					while (!tok.stop_requested() && !stop->load())
						std::this_thread::sleep_for(std::chrono::milliseconds(20));
					if (stop->load())
						local_stop = true;
				});

			HuntOptions opt;
			opt.workers = workers;
			opt.resume_from = resume;
			opt.timings = timings;
			opt.stop = &local_stop;
			const auto res = hunt(sc, opt);
			if (watchdog.joinable()) {
				watchdog.request_stop();
				watchdog.join();
			}

			std::optional<std::ofstream> csv;
			if (!csv_file.empty()) {
				csv.emplace(csv_file);
				if (!*csv)
					throw InvalidInput("cannot write " + csv_file);
			}
			if (out_file.empty()) {
				detail::write_search_output(res, out, err, csv ? &*csv : nullptr);
			} else {
				std::ofstream records(out_file);
				if (!records)
					throw InvalidInput("cannot write " + out_file);
				detail::write_search_output(res, records, out, csv ? &*csv : nullptr);
			}
			if (res.summary.interrupted)
				err << "interrupted: resume with --resume " << res.summary.partitions_done << '\n';
			return ok;
		}
		if (*verify) {
			if (dump) {
				out << fixtures::builtin().dump(2) << '\n';
				return ok;
			}
			report::json fx;
			if (fixture_file.empty()) {
				fx = fixtures::builtin();
			} else {
				std::ifstream in(fixture_file);
				if (!in)
					throw InvalidInput("cannot read " + fixture_file);
				try {
					fx = report::json::parse(in);
				} catch (const report::json::parse_error& e) {
					throw InvalidInput(std::string("fixture file is not valid JSON: ") + e.what());
				}
			}
			const auto outcomes =
			    fixtures::verify(fx, only.empty() ? std::nullopt : std::optional<std::string>(only));
			std::size_t failed = 0;
			for (const auto& o : outcomes) {
				out << (o.pass ? "PASS  " : "FAIL  ") << o.name;
				if (!o.pass)
					out << "\n      " << o.detail;
				out << '\n';
				failed += !o.pass;
			}
			out << outcomes.size() - failed << '/' << outcomes.size() << " fixtures passed\n";
			return failed == 0 && !outcomes.empty() ? ok : fixture_failure;
		}
	} catch (const InternalError& e) {
		err << "internal invariant violation: " << e.what() << '\n';
		return internal_error;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return invalid_input;
	}
	return invalid_input;
}

} // namespace numsg::cli
