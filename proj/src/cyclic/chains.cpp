#include "orbit/cyclic/chains.hpp"

#include "orbit/errors.hpp"

#include <string>

namespace orbit::cyclic {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp)
{
	std::size_t r = 1;
	for (std::size_t k = 0; k < exp; ++k)
		r *= base;
	return r;
}

std::size_t encode(std::vector<std::size_t> const &digits, std::size_t d)
{
	std::size_t flat = 0;
	for (auto x : digits)
		flat = flat * d + x;
	return flat;
}

// Walks all basis tensors of C_level in flat order, handing the digits to fn.
template <typename Fn>
void for_each_tensor(std::size_t d, std::size_t level, Fn &&fn)
{
	std::vector<std::size_t> digits(level + 1, 0);
	std::size_t const total = ipow(d, level + 1);
	for (std::size_t flat = 0; flat < total; ++flat)
	{
		fn(flat, digits);
		for (std::size_t k = level + 1; k-- > 0;)
		{
			if (++digits[k] < d)
				break;
			digits[k] = 0;
		}
	}
}

void require_level(OperatorKind kind, std::size_t level)
{
	std::size_t const min = kind == OperatorKind::periodicity ? 2 : 1;
	if (level < min)
		throw InputError("operator " + std::string(operator_name(kind)) + " needs chain level >= " +
		                 std::to_string(min) + ", got " + std::to_string(level));
}

SparseMatrix face_sum(FinAlgebra const &a, std::size_t n, bool wrap)
{
	std::size_t const d = a.dim();
	SparseMatrix m(ipow(d, n), ipow(d, n + 1));
	std::vector<std::size_t> out(n);
	for_each_tensor(d, n, [&](std::size_t flat, std::vector<std::size_t> const &x) {
		SparseVector col;
		for (std::size_t t = 0; t < n; ++t)
		{
			GaussRational const sign(t % 2 ? -1 : 1);
			for (auto const &[k, c] : a.product(x[t], x[t + 1]))
			{
				for (std::size_t s = 0; s < t; ++s)
					out[s] = x[s];
				out[t] = k;
				for (std::size_t s = t + 2; s <= n; ++s)
					out[s - 1] = x[s];
				col.emplace_back(static_cast<std::uint32_t>(encode(out, d)), sign * c);
			}
		}
		if (wrap)
		{
			GaussRational const sign(n % 2 ? -1 : 1);
			for (auto const &[k, c] : a.product(x[n], x[0]))
			{
				out[0] = k;
				for (std::size_t s = 1; s < n; ++s)
					out[s] = x[s];
				col.emplace_back(static_cast<std::uint32_t>(encode(out, d)), sign * c);
			}
		}
		m.set_column(flat, std::move(col));
	});
	return m;
}

// sum_j coeff(j) * lambda^j on C_n, lambda^j rotating by j legs with sign (-1)^{nj}
template <typename Coeff>
SparseMatrix rotation_sum(FinAlgebra const &a, std::size_t n, Coeff &&coeff)
{
	std::size_t const d = a.dim();
	std::size_t const len = ipow(d, n + 1);
	SparseMatrix m(len, len);
	std::vector<std::size_t> out(n + 1);
	for_each_tensor(d, n, [&](std::size_t flat, std::vector<std::size_t> const &x) {
		SparseVector col;
		for (std::size_t j = 0; j <= n; ++j)
		{
			GaussRational c = coeff(j);
			if (c.is_zero())
				continue;
			if ((n * j) % 2)
				c = -c;
			// lambda^j (a_0…a_n) = ± a_{n-j+1} … a_n a_0 … a_{n-j}
			for (std::size_t s = 0; s <= n; ++s)
				out[(s + j) % (n + 1)] = x[s];
			col.emplace_back(static_cast<std::uint32_t>(encode(out, d)), c);
		}
		m.set_column(flat, std::move(col));
	});
	return m;
}

} // namespace

Chain Chain::zero(FinAlgebra const &a, std::size_t level) { return {level, ExactVector(chain_length(a, level))}; }

Chain Chain::basis(FinAlgebra const &a, std::vector<std::size_t> const &legs)
{
	if (legs.empty())
		throw InputError("Chain::basis: need at least one tensor leg");
	for (auto x : legs)
		if (x >= a.dim())
			throw InputError("Chain::basis: basis index out of range");
	Chain c = zero(a, legs.size() - 1);
	c.coords[encode(legs, a.dim())] = GaussRational(1);
	return c;
}

std::size_t chain_length(FinAlgebra const &a, std::size_t level) { return ipow(a.dim(), level + 1); }

OperatorKind parse_operator_kind(std::string_view name)
{
	if (name == "b")
		return OperatorKind::b;
	if (name == "b'" || name == "b_prime" || name == "bprime")
		return OperatorKind::b_prime;
	if (name == "lambda")
		return OperatorKind::lambda;
	if (name == "1-lambda" || name == "one_minus_lambda")
		return OperatorKind::one_minus_lambda;
	if (name == "N" || name == "norm")
		return OperatorKind::norm;
	if (name == "S" || name == "periodicity")
		return OperatorKind::periodicity;
	throw InputError("unknown chain operator '" + std::string(name) + "'");
}

std::string_view operator_name(OperatorKind kind)
{
	switch (kind)
	{
	case OperatorKind::b: return "b";
	case OperatorKind::b_prime: return "b'";
	case OperatorKind::lambda: return "lambda";
	case OperatorKind::one_minus_lambda: return "1-lambda";
	case OperatorKind::norm: return "N";
	case OperatorKind::periodicity: return "S";
	}
	return "?";
}

int level_shift(OperatorKind kind)
{
	switch (kind)
	{
	case OperatorKind::b:
	case OperatorKind::b_prime: return -1;
	case OperatorKind::periodicity: return -2;
	default: return 0;
	}
}

SparseMatrix operator_matrix(FinAlgebra const &a, OperatorKind kind, std::size_t level)
{
	require_level(kind, level);
	std::size_t const n = level;
	switch (kind)
	{
	case OperatorKind::b: return face_sum(a, n, true);
	case OperatorKind::b_prime: return face_sum(a, n, false);
	case OperatorKind::lambda:
		return rotation_sum(a, n, [](std::size_t j) { return GaussRational(j == 1 ? 1 : 0); });
	case OperatorKind::one_minus_lambda:
		return rotation_sum(a, n, [](std::size_t j) { return GaussRational(j == 0 ? 1 : (j == 1 ? -1 : 0)); });
	case OperatorKind::norm: return rotation_sum(a, n, [](std::size_t) { return GaussRational(1); });
	case OperatorKind::periodicity:
	{
		auto weights = rotation_sum(a, n - 1, [](std::size_t j) { return GaussRational(static_cast<long>(j)); });
		auto s = face_sum(a, n - 1, false) * (weights * face_sum(a, n, true));
		return s.scaled(GaussRational(Rational(1, static_cast<long>(n * (n - 1)))));
	}
	}
	throw InternalError("operator_matrix: unhandled operator kind");
}

Chain apply_operator(FinAlgebra const &a, OperatorKind kind, Chain const &x, bool adjoint)
{
	if (x.coords.size() != chain_length(a, x.level))
		throw InputError("apply_operator: chain coordinates do not match its level");
	if (!adjoint)
	{
		auto m = operator_matrix(a, kind, x.level);
		auto const target = static_cast<std::size_t>(static_cast<long>(x.level) + level_shift(kind));
		return {target, m.apply(x.coords)};
	}
	auto const source = static_cast<std::size_t>(static_cast<long>(x.level) - level_shift(kind));
	auto m = operator_matrix(a, kind, source).conj_transpose();
	return {source, m.apply(x.coords)};
}

} // namespace orbit::cyclic
