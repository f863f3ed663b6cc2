#include "orbit/cyclic/homology.hpp"

#include "orbit/cyclic/chains.hpp"
#include "orbit/errors.hpp"


namespace orbit::cyclic {

namespace {

struct LevelOps
{
	SparseMatrix b, b_prime, one_minus_lambda, norm;
};

// Places block into dst at (row_offset, col_offset).
void place(std::vector<SparseVector> &columns, SparseMatrix const &block, std::size_t row_offset,
           std::size_t col_offset, GaussRational const &scale)
{
	for (std::size_t c = 0; c < block.cols(); ++c)
		for (auto const &[r, v] : block.column(c))
			columns[col_offset + c].emplace_back(static_cast<std::uint32_t>(r + row_offset), v * scale);
}

std::vector<LevelOps> build_levels(FinAlgebra const &a, std::size_t max_level)
{
	std::vector<LevelOps> ops(max_level + 1);
	std::size_t const len0 = chain_length(a, 0);
	// on C_0: lambda = 1, so 1-lambda = 0 and N = 1
	ops[0].one_minus_lambda = SparseMatrix(len0, len0);
	ops[0].norm = SparseMatrix::identity(len0);
	for (std::size_t q = 1; q <= max_level; ++q)
	{
		ops[q].b = operator_matrix(a, OperatorKind::b, q);
		ops[q].b_prime = operator_matrix(a, OperatorKind::b_prime, q);
		ops[q].one_minus_lambda = operator_matrix(a, OperatorKind::one_minus_lambda, q);
		ops[q].norm = operator_matrix(a, OperatorKind::norm, q);
	}
	return ops;
}

std::string check_identities(std::vector<LevelOps> const &ops)
{
	for (std::size_t q = 1; q < ops.size(); ++q)
	{
		auto const &o = ops[q];
		auto const &lo = ops[q - 1];
		std::string const at = " at level " + std::to_string(q);
		if (!(o.one_minus_lambda * o.norm).is_zero())
			return "(1-lambda)N != 0" + at;
		if (!(o.norm * o.one_minus_lambda).is_zero())
			return "N(1-lambda) != 0" + at;
		if (o.b * o.one_minus_lambda != lo.one_minus_lambda * o.b_prime)
			return "b(1-lambda) != (1-lambda)b'" + at;
		if (o.b_prime * o.norm != lo.norm * o.b)
			return "b'N != Nb" + at;
		if (q >= 2)
		{
			if (!(lo.b * o.b).is_zero())
				return "b^2 != 0" + at;
			if (!(lo.b_prime * o.b_prime).is_zero())
				return "b'^2 != 0" + at;
		}
	}
	return {};
}

} // namespace

std::string check_bicomplex_identities(FinAlgebra const &a, std::size_t max_level)
{
	return check_identities(build_levels(a, max_level));
}

HpResult hp_homology(FinAlgebra const &a, std::size_t truncation)
{
	if (truncation < 2)
		throw InputError("hp_homology: truncation must be at least 2");
	std::size_t const top = truncation;

	auto const ops = build_levels(a, top);
	std::vector<std::size_t> len(top + 1);
	for (std::size_t q = 0; q <= top; ++q)
		len[q] = chain_length(a, q);
	if (auto failure = check_identities(ops); !failure.empty())
		throw InternalError("hp_homology: bicomplex identity violated: " + failure);

	// Tot_n = ⊕_{p=0}^{n} C_{n-p}^{(p)}, blocks ordered by column p
	auto block_offset = [&](std::size_t n, std::size_t p) {
		std::size_t off = 0;
		for (std::size_t s = 0; s < p; ++s)
			off += len[n - s];
		return off;
	};
	HpResult result;
	result.truncation = truncation;
	result.total_dims.resize(top + 1);
	for (std::size_t n = 0; n <= top; ++n)
		result.total_dims[n] = block_offset(n, n + 1);

	std::vector<SparseMatrix> boundary(top + 1);
	for (std::size_t n = 1; n <= top; ++n)
	{
		std::vector<SparseVector> columns(result.total_dims[n]);
		for (std::size_t p = 0; p <= n; ++p)
		{
			std::size_t const q = n - p;
			std::size_t const col_off = block_offset(n, p);
			if (q >= 1)
			{
				auto const &vertical = p % 2 ? ops[q].b_prime : ops[q].b;
				place(columns, vertical, block_offset(n - 1, p), col_off, GaussRational(p % 2 ? -1 : 1));
			}
			if (p >= 1)
			{
				auto const &horizontal = p % 2 ? ops[q].one_minus_lambda : ops[q].norm;
				place(columns, horizontal, block_offset(n - 1, p - 1), col_off, GaussRational(1));
			}
		}
		SparseMatrix d(result.total_dims[n - 1], result.total_dims[n]);
		for (std::size_t c = 0; c < columns.size(); ++c)
			d.set_column(c, std::move(columns[c]));
		boundary[n] = std::move(d);
	}
	for (std::size_t n = 2; n <= top; ++n)
		if (!(boundary[n - 1] * boundary[n]).is_zero())
			throw InternalError("hp_homology: total differential does not square to zero in degree " +
			                    std::to_string(n));

	// rank of ∂_n is bounded by dim ker ∂_{n-1}
	result.ranks.assign(top + 1, 0);
	for (std::size_t n = 1; n <= top; ++n)
	{
		std::size_t const bound = result.total_dims[n - 1] - result.ranks[n - 1];
		result.ranks[n] = sparse_rank(boundary[n], bound);
	}
	result.cyclic_dims.resize(top);
	for (std::size_t n = 0; n < top; ++n)
		result.cyclic_dims[n] = result.total_dims[n] - result.ranks[n] - result.ranks[n + 1];

	// rank S_* on H_n = rank [[d_n, 0], [S_n, d_{n-1}]] - rank d_n - rank d_{n-1}
	result.periodicity_ranks.assign(top + 1, 0);
	for (std::size_t n = 2; n <= top; ++n)
	{
		std::size_t const rows = result.total_dims[n - 1] + result.total_dims[n - 2];
		std::vector<SparseVector> columns(result.total_dims[n] + result.total_dims[n - 1]);
		for (std::size_t c = 0; c < boundary[n].cols(); ++c)
			columns[c] = boundary[n].column(c);
		for (std::size_t p = 2; p <= n; ++p)
			for (std::size_t k = 0; k < len[n - p]; ++k)
				columns[block_offset(n, p) + k].emplace_back(
				    static_cast<std::uint32_t>(result.total_dims[n - 1] + block_offset(n - 2, p - 2) + k),
				    GaussRational(1));
		for (std::size_t c = 0; c < boundary[n - 1].cols(); ++c)
			for (auto const &[r, v] : boundary[n - 1].column(c))
				columns[result.total_dims[n] + c].emplace_back(
				    static_cast<std::uint32_t>(r + result.total_dims[n - 1]), v);
		SparseMatrix joint(rows, columns.size());
		for (std::size_t c = 0; c < columns.size(); ++c)
			joint.set_column(c, std::move(columns[c]));
		result.periodicity_ranks[n] = sparse_rank(joint) - result.ranks[n] - result.ranks[n - 1];
	}

	result.even_degree = top % 2 ? top - 1 : top;
	result.odd_degree = top % 2 ? top : top - 1;
	result.hp_even = result.periodicity_ranks[result.even_degree];
	result.hp_odd = result.periodicity_ranks[result.odd_degree];
	result.stabilized = result.even_degree >= 4 && result.odd_degree >= 3 &&
	                    result.periodicity_ranks[result.even_degree - 2] == result.hp_even &&
	                    result.periodicity_ranks[result.odd_degree - 2] == result.hp_odd;
	return result;
}

MoritaReport morita_check(FinAlgebra const &a, std::size_t m, std::size_t truncation)
{
	if (m < 2)
		throw InputError("morita_check: matrix size must be at least 2");
	MoritaReport report{MoritaVerdict::fail, hp_homology(a, truncation),
	                    hp_homology(FinAlgebra::amplify(a, m), truncation)};
	if (!report.base.stabilized || !report.amplified.stabilized)
		report.verdict = MoritaVerdict::not_stabilized;
	else if (report.base.hp_even == report.amplified.hp_even && report.base.hp_odd == report.amplified.hp_odd)
		report.verdict = MoritaVerdict::pass;
	return report;
}

std::string to_string(MoritaVerdict v)
{
	switch (v)
	{
	case MoritaVerdict::pass: return "pass";
	case MoritaVerdict::fail: return "fail";
	case MoritaVerdict::not_stabilized: return "not stabilized";
	}
	return "?";
}

} // namespace orbit::cyclic
