#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>

namespace orbit::cli {

struct Context
{
	std::uint64_t seed = 0;
	Digest digest;

	/// Reads a UTF-8 JSON file (or an inline JSON literal when allow_inline) and folds it into the digest.
	Json load(std::string const &source, bool allow_inline = false);
};

struct SamplingArgs
{
	std::string algebra;
	std::size_t samples = 200;
	long range = 3;
};

Json lie_check(Context &ctx, std::string const &algebra);
Json lie_strata(Context &ctx, SamplingArgs const &args);
Json lie_polarize(Context &ctx, std::string const &algebra, std::string const &functional, std::string const &span);
Json tower_report(Context &ctx, SamplingArgs const &args);

struct QuantizeArgs
{
	std::string alpha;
	unsigned max_degree = 3;
	std::size_t dof = 0; ///< 0: infer from the inputs
	std::string algebra;
	std::string moment;
};

Json quantize_verify(Context &ctx, QuantizeArgs const &args);

Json cyclic_hp(Context &ctx, std::string const &algebra, std::size_t truncation, std::size_t morita);
Json cyclic_entire(Context &ctx, std::string const &pattern, std::size_t horizon);
Json cyclic_trace(Context &ctx, std::string const &algebra, std::string const &trace, std::size_t samples);

Json chern_phi(long n, long k, long q);
Json chern_matrix(std::string const &family, long rank);

Json qgroup_reps(std::string const &family, std::size_t rank, std::size_t t_samples);

struct QgroupVerifyArgs
{
	double q = 0.5;
	std::size_t truncation = 32;
	unsigned degree = 2;
	std::size_t t_samples = 5;
	double t = 0.0;
};

Json qgroup_verify(QgroupVerifyArgs const &args);

Json affine_verify(Context &ctx, double L, double h, std::size_t trials);

} // namespace orbit::cli
