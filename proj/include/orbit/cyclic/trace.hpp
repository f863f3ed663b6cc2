#pragma once

#include "orbit/cyclic/fin_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orbit::cyclic {

/// Linear functional on A, tau(sum x_i e_i) = sum tau_i x_i.
struct Trace
{
	ExactVector coords;

	GaussRational operator()(ExactVector const &a) const;

	/// Normalized matrix trace on M_n(Q(i)): tau(e_ab) = delta_ab / n.
	static Trace normalized_matrix_trace(std::size_t n);
	static Json to_json(Trace const &t);
	static Trace from_json(Json const &j);
};

struct TraceReport
{
	bool normalized = false;   ///< tau(1) = 1, finite-dimensional stand-in for ||tau|| = 1
	bool positive = false;     ///< tau(a*a) real and >= 0 on every sample
	bool strictly_positive = false; ///< Gram matrix tau(e_i* e_j) has full rank
	bool ad_invariant = false; ///< tau(e_i e_j) = tau(e_j e_i) for all basis pairs
	std::size_t gram_rank = 0;
	std::size_t samples = 0;
	std::vector<std::string> failures;

	bool all_pass() const { return normalized && positive && strictly_positive && ad_invariant; }
};

/// Checks the four trace axioms. Positivity is sampled on random elements
/// with small rational coordinates drawn from a generator seeded by seed.
TraceReport verify_trace(FinAlgebra const &a, Trace const &tau, std::size_t samples, std::uint64_t seed = 0);

} // namespace orbit::cyclic
