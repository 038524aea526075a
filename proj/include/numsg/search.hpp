#pragma once

#include "numsg/monotonicity.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace numsg {

enum class Predicate { Decreasing, DhBoundFails, CertificateIsDirect, All };

inline Predicate parse_predicate(std::string_view s)
{
	if (s == "decreasing")
		return Predicate::Decreasing;
	if (s == "dh_bound_fails")
		return Predicate::DhBoundFails;
	if (s == "certificate_is_direct")
		return Predicate::CertificateIsDirect;
	if (s == "all")
		return Predicate::All;
	throw InvalidInput("unknown predicate '" + std::string(s) +
	                   "' (expected decreasing, dh_bound_fails, certificate_is_direct or all)");
}

struct SearchConstraints {
	Int max_multiplicity = 0;
	std::size_t ed_min = 2;
	std::optional<std::size_t> ed_max;
	std::optional<Int> max_frobenius;
	std::optional<Int> max_generator;
	bool symmetric_only = false;
	Predicate predicate = Predicate::All;

	void validate() const
	{
		if (max_multiplicity < 1)
			throw InvalidInput("max multiplicity must be positive");
		if (ed_min < 1)
			throw InvalidInput("minimum embedding dimension must be at least 1");
		if (ed_max && *ed_max < ed_min)
			throw InvalidInput("embedding dimension range is empty");
		if (!max_generator && !max_frobenius)
			throw InvalidInput("search space is unbounded: give a maximum generator or a maximum Frobenius number");
		if (max_generator && *max_generator < 1)
			throw InvalidInput("max generator must be positive");
		if (max_frobenius && *max_frobenius < -1)
			throw InvalidInput("max Frobenius number must be at least -1");
	}

	/// No minimal generator exceeds f + g1, so a Frobenius bound caps generators too.
	Int generator_limit(Int g1) const
	{
		Int lim = max_generator.value_or(std::numeric_limits<Int>::max());
		if (max_frobenius)
			lim = std::min(lim, *max_frobenius + g1);
		return lim;
	}

	std::size_t ed_limit() const { return ed_max.value_or(static_cast<std::size_t>(max_multiplicity)); }
};

/// Top-level unit of work: all semigroups whose two smallest generators are
/// (g1, g2). g2 == 0 stands for the one-generator semigroup <1>.
struct Partition {
	Int g1 = 0;
	Int g2 = 0;
	friend bool operator==(const Partition&, const Partition&) = default;
};

inline std::vector<Partition> partitions(const SearchConstraints& c)
{
	c.validate();
	std::vector<Partition> out;
	const bool naturals_fit = (!c.max_generator || *c.max_generator >= 1) && (!c.max_frobenius || *c.max_frobenius >= -1);
	if (c.ed_min <= 1 && naturals_fit)
		out.push_back({1, 0});
	if (c.ed_limit() < 2)
		return out;
	for (Int g1 = 2; g1 <= c.max_multiplicity; ++g1) {
		const Int lim = c.generator_limit(g1);
		for (Int g2 = g1 + 1; g2 <= lim; ++g2)
			if (g2 % g1 != 0)
				out.push_back({g1, g2});
	}
	return out;
}

namespace detail {

struct EnumFrame {
	std::vector<Int> gens;
	std::vector<char> reach; // membership in <gens> for 0..limit
	Int gcd = 0;
};

inline void add_generator(EnumFrame& f, Int x)
{
	f.gens.push_back(x);
	f.gcd = std::gcd(f.gcd, x);
	const auto lim = static_cast<Int>(f.reach.size()) - 1;
	for (Int v = x; v <= lim; ++v)
		if (f.reach[static_cast<std::size_t>(v - x)])
			f.reach[static_cast<std::size_t>(v)] = 1;
}

// Depth-first over strictly increasing generator tuples: pre-order visit is
// lexicographic order of the tuples. Returns false if `visit` asked to stop.
inline bool enumerate_from(const SearchConstraints& c, const EnumFrame& frame, Int limit,
                           const std::function<bool(const NumericalSemigroup&)>& visit)
{
	const std::size_t ed = frame.gens.size();
	if (frame.gcd == 1 && ed >= c.ed_min) {
		auto s = NumericalSemigroup::from_minimal_generators(frame.gens);
		const bool frob_ok = !c.max_frobenius || s.frobenius() <= *c.max_frobenius;
		if (frob_ok && (!c.symmetric_only || is_symmetric(s)))
			if (!visit(s))
				return false;
	}
	if (ed >= c.ed_limit())
		return true;
	for (Int x = frame.gens.back() + 1; x <= limit; ++x) {
		// A gap below the next generator stays a gap forever.
		if (c.max_frobenius && x - 1 > *c.max_frobenius && !frame.reach[static_cast<std::size_t>(x - 1)] &&
		    x - 1 > frame.gens.back())
			break;
		if (frame.reach[static_cast<std::size_t>(x)])
			continue;
		EnumFrame next = frame;
		add_generator(next, x);
		if (!enumerate_from(c, next, limit, visit))
			return false;
	}
	return true;
}

} // namespace detail

/// Visits every semigroup of one partition in canonical order.
inline bool enumerate_partition(const SearchConstraints& c, const Partition& p,
                                const std::function<bool(const NumericalSemigroup&)>& visit)
{
	if (p.g2 == 0) {
		const std::vector<Int> one{1};
		return visit(NumericalSemigroup::generated_by(one));
	}
	const Int limit = c.generator_limit(p.g1);
	if (p.g2 > limit)
		return true;
	detail::EnumFrame f;
	f.reach.assign(static_cast<std::size_t>(limit) + 1, 0);
	f.reach[0] = 1;
	detail::add_generator(f, p.g1);
	// g2 itself may already cut off permanent gaps above the Frobenius bound.
	if (c.max_frobenius)
		for (Int v = *c.max_frobenius + 1; v < p.g2; ++v)
			if (!f.reach[static_cast<std::size_t>(v)])
				return true;
	detail::add_generator(f, p.g2);
	return detail::enumerate_from(c, f, limit, visit);
}

/// Every matching semigroup exactly once, ascending lexicographically in the
/// minimal generator tuple.
inline std::vector<NumericalSemigroup> enumerate_semigroups(const SearchConstraints& c)
{
	std::vector<NumericalSemigroup> out;
	for (const auto& p : partitions(c))
		enumerate_partition(c, p, [&](const NumericalSemigroup& s) {
			out.push_back(s);
			return true;
		});
	return out;
}

struct SearchRecord {
	std::vector<Int> generators;
	Int multiplicity = 0;
	std::size_t ed = 0;
	Int frobenius = 0;
	int reduction_number = 0;
	bool symmetric = false;
	bool nondecreasing = true;
	Certificate certificate = Certificate::Direct;
	std::optional<int> first_decrease;
	NecessaryReport necessary;
	std::optional<double> wall_us; ///< only filled when timings are requested
};

struct HuntSummary {
	std::size_t candidates = 0;
	std::size_t matched = 0;
	std::size_t decreasing = 0;
	std::map<std::string, std::size_t> per_certificate;
	std::size_t partitions_total = 0;
	std::size_t partitions_done = 0; ///< resume key: partitions [0, done) are complete
	bool interrupted = false;
	double seconds = 0;
};

struct HuntOptions {
	unsigned workers = 1;
	std::size_t resume_from = 0;
	bool timings = false;
	const std::atomic<bool>* stop = nullptr;
};

struct HuntResult {
	std::vector<SearchRecord> records;
	HuntSummary summary;
};

inline bool matches(Predicate p, const SearchRecord& r)
{
	switch (p) {
	case Predicate::Decreasing: return !r.nondecreasing;
	// CM and AperyBound both imply |D_h| <= h+1, so the bound fails exactly
	// when certification falls through to the direct computation.
	case Predicate::DhBoundFails: return r.certificate == Certificate::Direct;
	case Predicate::CertificateIsDirect: return r.certificate == Certificate::Direct;
	case Predicate::All: return true;
	}
	return false;
}

/// Runs the full analysis on one candidate and checks the verdict invariants.
inline SearchRecord analyze_candidate(const NumericalSemigroup& s, bool timings = false)
{
	const auto start = std::chrono::steady_clock::now();
	LevelTable t(s);
	const auto inv = abc_table(t);
	const auto v = certify(t, inv);
	SearchRecord rec;
	rec.generators = s.generators();
	rec.multiplicity = s.multiplicity();
	rec.ed = s.embedding_dimension();
	rec.frobenius = s.frobenius();
	rec.reduction_number = t.reduction_number();
	rec.symmetric = is_symmetric(s);
	rec.nondecreasing = v.nondecreasing;
	rec.certificate = v.certificate;
	rec.first_decrease = v.first_decrease;
	rec.necessary = necessary_report(t, inv);

	if (!v.nondecreasing) {
		if (v.certificate != Certificate::Direct || !v.first_decrease)
			throw InternalError("decreasing verdict without a direct certificate for <" + s.key() + ">");
		if (rec.necessary.c2_count < 3 || rec.necessary.c_chain_ok < *v.first_decrease ||
		    (*v.first_decrease == 2 && rec.ed <= 5))
			throw InternalError("decreasing semigroup <" + s.key() + "> violates a necessary condition");
	}
	if (rec.necessary.ed45_small_mult && !v.nondecreasing)
		throw InternalError("<" + s.key() + "> has e.d. 4 or 5, g1 <= 8 and a decreasing Hilbert function");
	if (timings)
		rec.wall_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
	return rec;
}

/// Analyzes every candidate of the family across a worker pool. Results are
/// buffered per partition and merged in partition order, so the output does
/// not depend on the worker count.
inline HuntResult hunt(const SearchConstraints& c, const HuntOptions& opt = {})
{
	const auto start = std::chrono::steady_clock::now();
	const auto parts = partitions(c);
	const std::size_t first = std::min(opt.resume_from, parts.size());

	struct Slot {
		bool done = false;
		std::vector<SearchRecord> records;
		std::size_t candidates = 0;
		std::size_t decreasing = 0;
		std::map<std::string, std::size_t> per_certificate;
	};
	std::vector<Slot> slots(parts.size());
	std::atomic<std::size_t> next{first};
	std::mutex error_mutex;
	std::exception_ptr error;
	auto stopped = [&] { return opt.stop && opt.stop->load(std::memory_order_relaxed); };

	auto worker = [&] {
		for (;;) {
			const std::size_t k = next.fetch_add(1);
			if (k >= parts.size() || stopped())
				return;
			Slot slot;
			try {
				const bool complete = enumerate_partition(c, parts[k], [&](const NumericalSemigroup& s) {
					if (stopped())
						return false;
					auto rec = analyze_candidate(s, opt.timings);
					++slot.candidates;
					slot.decreasing += !rec.nondecreasing;
					++slot.per_certificate[std::string(to_string(rec.certificate))];
					if (matches(c.predicate, rec))
						slot.records.push_back(std::move(rec));
					return true;
				});
				slot.done = complete;
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				return;
			}
			slots[k] = std::move(slot);
		}
	};

	const unsigned n = std::max(1u, opt.workers);
	{
		std::vector<std::jthread> pool;
		for (unsigned w = 0; w < n; ++w)
			pool.emplace_back(worker);
	}
	if (error)
		std::rethrow_exception(error);

	HuntResult res;
	res.summary.partitions_total = parts.size();
	std::size_t k = first;
	for (; k < parts.size() && slots[k].done; ++k) {
		auto& s = slots[k];
		res.summary.candidates += s.candidates;
		res.summary.decreasing += s.decreasing;
		for (const auto& [name, cnt] : s.per_certificate)
			res.summary.per_certificate[name] += cnt;
		for (auto& r : s.records)
			res.records.push_back(std::move(r));
	}
	res.summary.partitions_done = k;
	res.summary.interrupted = k < parts.size();
	res.summary.matched = res.records.size();
	res.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return res;
}

} // namespace numsg
