#include "orbit/liealg/lie_algebra.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

#include <algorithm>

namespace orbit::liealg {

LieAlgebra::LieAlgebra(std::vector<std::string> basis, std::vector<Rational> constants)
    : m_basis(std::move(basis)), m_c(std::move(constants))
{
	std::size_t const n = m_basis.size();
	if (n == 0)
		throw InputError("Lie algebra must have positive dimension");
	if (m_c.size() != n * n * n)
		throw InputError("Lie algebra: expected " + std::to_string(n * n * n) + " structure constants, got " +
		                 std::to_string(m_c.size()));
}

namespace {

std::size_t resolve_index(Json const &v, std::vector<std::string> const &basis, std::string const &what)
{
	if (v.is_number_integer())
	{
		auto i = v.get<long long>();
		if (i < 0 || static_cast<std::size_t>(i) >= basis.size())
			throw InputError("Lie algebra JSON: " + what + " index " + std::to_string(i) + " out of range");
		return static_cast<std::size_t>(i);
	}
	if (v.is_string())
	{
		auto s = v.get<std::string>();
		auto it = std::find(basis.begin(), basis.end(), s);
		if (it != basis.end())
			return static_cast<std::size_t>(it - basis.begin());
		if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
			return resolve_index(Json(std::stoll(s)), basis, what);
		throw InputError("Lie algebra JSON: unknown basis element '" + s + "'");
	}
	throw InputError("Lie algebra JSON: " + what + " must be an index or basis name");
}

} // namespace

LieAlgebra LieAlgebra::from_json(Json const &j)
{
	if (!j.is_object() || !j.contains("dim"))
		throw InputError("Lie algebra JSON: missing \"dim\"");
	auto const n = j["dim"].get<long long>();
	if (n <= 0)
		throw InputError("Lie algebra JSON: dim must be positive");
	std::vector<std::string> basis;
	if (j.contains("basis"))
		basis = j["basis"].get<std::vector<std::string>>();
	else
		for (long long i = 0; i < n; ++i)
			basis.push_back("X" + std::to_string(i + 1));
	if (basis.size() != static_cast<std::size_t>(n))
		throw InputError("Lie algebra JSON: basis has " + std::to_string(basis.size()) + " names, dim is " +
		                 std::to_string(n));

	std::size_t const d = basis.size();
	std::vector<Rational> c(d * d * d);
	std::vector<bool> set(d * d, false);
	for (auto const &entry : j.value("brackets", Json::array()))
	{
		std::size_t const i = resolve_index(entry.at("i"), basis, "i");
		std::size_t const k = resolve_index(entry.at("j"), basis, "j");
		std::vector<Rational> coeffs(d);
		for (auto const &[key, value] : entry.at("coeffs").items())
			coeffs[resolve_index(Json(key), basis, "coeffs")] = rational_from_json(value);
		if (i == k)
		{
			if (std::any_of(coeffs.begin(), coeffs.end(), [](Rational const &r) { return !r.is_zero(); }))
				throw InputError("Lie algebra JSON: [" + basis[i] + "," + basis[i] + "] must vanish");
			continue;
		}
		for (auto const &[row, sign] : {std::pair{i * d + k, 1}, std::pair{k * d + i, -1}})
		{
			for (std::size_t t = 0; t < d; ++t)
			{
				Rational value = sign > 0 ? coeffs[t] : -coeffs[t];
				if (set[row] && c[row * d + t] != value)
					throw InputError("Lie algebra JSON: contradictory brackets for (" + basis[i] + ", " + basis[k] +
					                 ")");
				c[row * d + t] = value;
			}
			set[row] = true;
		}
	}
	return LieAlgebra(std::move(basis), std::move(c));
}

Json LieAlgebra::to_json() const
{
	Json brackets = Json::array();
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = i + 1; j < dim(); ++j)
		{
			Json coeffs = Json::object();
			for (std::size_t k = 0; k < dim(); ++k)
				if (!c(i, j, k).is_zero())
					coeffs[std::to_string(k)] = c(i, j, k).str();
			if (!coeffs.empty())
				brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
		}
	return {{"dim", dim()}, {"basis", m_basis}, {"brackets", brackets}};
}

namespace {

LieAlgebra from_table(std::vector<std::string> basis, std::vector<std::tuple<int, int, int, int>> const &table)
{
	std::size_t const n = basis.size();
	std::vector<Rational> c(n * n * n);
	for (auto [i, j, k, v] : table)
	{
		c[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k)] = v;
		c[(static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)) * n + static_cast<std::size_t>(k)] = -v;
	}
	return LieAlgebra(std::move(basis), std::move(c));
}

} // namespace

LieAlgebra LieAlgebra::heisenberg()
{
	return from_table({"X", "Y", "Z"}, {{0, 1, 2, 1}});
}

LieAlgebra LieAlgebra::affine_line()
{
	return from_table({"X", "Y"}, {{0, 1, 1, 1}});
}

LieAlgebra LieAlgebra::sl2()
{
	return from_table({"H", "E", "F"}, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
}

LieAlgebra LieAlgebra::abelian(std::size_t n)
{
	std::vector<std::string> basis;
	for (std::size_t i = 0; i < n; ++i)
		basis.push_back("X" + std::to_string(i + 1));
	return from_table(std::move(basis), {});
}

ExactVector LieAlgebra::bracket(ExactVector const &x, ExactVector const &y) const
{
	if (x.size() != dim() || y.size() != dim())
		throw InputError("bracket: vector length does not match dim " + std::to_string(dim()));
	ExactVector out(dim());
	for (std::size_t i = 0; i < dim(); ++i)
	{
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < dim(); ++j)
		{
			if (y[j].is_zero())
				continue;
			GaussRational xy = x[i] * y[j];
			for (std::size_t k = 0; k < dim(); ++k)
				if (!c(i, j, k).is_zero())
					out[k] += xy * GaussRational(c(i, j, k));
		}
	}
	return out;
}

ExactVector LieAlgebra::basis_vector(std::size_t i) const
{
	ExactVector v(dim());
	v.at(i) = GaussRational(1);
	return v;
}

bool LieAlgebra::is_antisymmetric() const
{
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = 0; j < dim(); ++j)
			for (std::size_t k = 0; k < dim(); ++k)
				if (c(i, j, k) != -c(j, i, k))
					return false;
	return true;
}

JacobiReport check_jacobi(LieAlgebra const &l)
{
	JacobiReport report;
	std::size_t const n = l.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				auto xi = l.basis_vector(i), xj = l.basis_vector(j), xk = l.basis_vector(k);
				ExactVector sum = l.bracket(xi, l.bracket(xj, xk));
				auto t2 = l.bracket(xj, l.bracket(xk, xi));
				auto t3 = l.bracket(xk, l.bracket(xi, xj));
				for (std::size_t t = 0; t < n; ++t)
					sum[t] += t2[t] + t3[t];
				if (!is_zero(sum))
				{
					report.holds = false;
					report.witness = {i, j, k};
					report.residual = std::move(sum);
					return report;
				}
			}
	return report;
}

bool is_subalgebra(LieAlgebra const &l, std::vector<ExactVector> const &vectors)
{
	for (std::size_t a = 0; a < vectors.size(); ++a)
		for (std::size_t b = a + 1; b < vectors.size(); ++b)
			if (!in_span(vectors, l.bracket(vectors[a], vectors[b]), l.dim()))
				return false;
	return true;
}

} // namespace orbit::liealg
