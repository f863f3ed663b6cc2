#pragma once

#include "orbit/cyclic/fin_algebra.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbit::cyclic {

/// Periodic cyclic homology read off a truncated cyclic bicomplex.
///
/// The bicomplex has columns p >= 0 holding C_q(A): b on even columns, -b' on
/// odd columns, 1-lambda from odd to even columns and N from even to odd
/// columns. Its total complex in degree n is the direct sum of C_{n-p} over
/// p = 0..n; with chain levels capped at N_max, the homology H_n is exact for
/// n <= N_max - 1. The periodicity map S drops columns 0 and 1 and shifts the
/// rest down by two. HP is the rank of S on homology, H_n -> H_{n-2}, at the
/// highest even and odd degrees n <= N_max, and "stabilized" means those
/// ranks agree with the ranks two degrees lower.
struct HpResult
{
	std::size_t truncation = 0;
	std::size_t hp_even = 0;
	std::size_t hp_odd = 0;
	bool stabilized = false;
	std::size_t even_degree = 0; ///< total degree hp_even was read from
	std::size_t odd_degree = 0;
	std::vector<std::size_t> total_dims;  ///< dim Tot_n, n = 0..N_max
	std::vector<std::size_t> ranks;       ///< rank of the total differential out of Tot_n
	std::vector<std::size_t> cyclic_dims; ///< H_n, n = 0..N_max-1
	std::vector<std::size_t> periodicity_ranks; ///< rank of S: H_n -> H_{n-2}, n = 0..N_max (0 for n < 2)
};

/// Throws InputError if truncation < 2 and InternalError if the total
/// differential fails to square to zero.
HpResult hp_homology(FinAlgebra const &a, std::size_t truncation);

/// Verifies the chain identities behind the total differential on levels
/// up to max_level: b^2 = 0, b'^2 = 0, b(1-lambda) = (1-lambda)b',
/// b'N = Nb, (1-lambda)N = 0, N(1-lambda) = 0. Returns the first failing
/// identity, or an empty string.
std::string check_bicomplex_identities(FinAlgebra const &a, std::size_t max_level);

enum class MoritaVerdict { pass, fail, not_stabilized };

struct MoritaReport
{
	MoritaVerdict verdict;
	HpResult base;
	HpResult amplified;
};

/// Compares HP of A with HP of M_m(A) at the given truncation.
MoritaReport morita_check(FinAlgebra const &a, std::size_t m, std::size_t truncation);

std::string to_string(MoritaVerdict v);

} // namespace orbit::cyclic
