#include "orbit/cyclic/fin_algebra.hpp"

#include "orbit/errors.hpp"

namespace orbit::cyclic {

namespace {

ExactVector sparse_to_dense(SparseVector const &v, std::size_t dim)
{
	ExactVector out(dim);
	for (auto const &[k, c] : v)
		out[k] = c;
	return out;
}

} // namespace

FinAlgebra::FinAlgebra(std::size_t dim, std::vector<GaussRational> structure, ExactVector unit, ExactMatrix star,
                       std::string name)
    : m_dim(dim), m_mult(std::move(structure)), m_unit(std::move(unit)), m_star(std::move(star)), m_name(std::move(name))
{
	if (dim == 0)
		throw InputError("FinAlgebra: dimension must be positive");
	if (m_mult.size() != dim * dim * dim)
		throw InputError("FinAlgebra: expected dim^3 structure constants");
	if (m_unit.size() != dim)
		throw InputError("FinAlgebra: unit vector has wrong length");
	if (m_star.rows() != dim || m_star.cols() != dim)
		throw InputError("FinAlgebra: involution matrix has wrong shape");
	m_products.resize(dim * dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
				if (!this->mult(i, j, k).is_zero())
					m_products[i * dim + j].emplace_back(static_cast<std::uint32_t>(k), this->mult(i, j, k));
	validate();
}

ExactVector FinAlgebra::basis_vector(std::size_t i) const
{
	ExactVector v(m_dim);
	v.at(i) = GaussRational(1);
	return v;
}

ExactVector FinAlgebra::multiply(ExactVector const &a, ExactVector const &b) const
{
	if (a.size() != m_dim || b.size() != m_dim)
		throw InputError("FinAlgebra::multiply: vector length mismatch");
	ExactVector out(m_dim);
	for (std::size_t i = 0; i < m_dim; ++i)
	{
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < m_dim; ++j)
		{
			if (b[j].is_zero())
				continue;
			GaussRational const ab = a[i] * b[j];
			for (auto const &[k, c] : product(i, j))
				out[k] += ab * c;
		}
	}
	return out;
}

ExactVector FinAlgebra::star(ExactVector const &a) const
{
	if (a.size() != m_dim)
		throw InputError("FinAlgebra::star: vector length mismatch");
	ExactVector conj(m_dim);
	for (std::size_t j = 0; j < m_dim; ++j)
		conj[j] = a[j].conj();
	return m_star * conj;
}

bool FinAlgebra::is_commutative() const
{
	for (std::size_t i = 0; i < m_dim; ++i)
		for (std::size_t j = i + 1; j < m_dim; ++j)
			if (product(i, j) != product(j, i))
				return false;
	return true;
}

void FinAlgebra::validate() const
{
	auto const d = m_dim;
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
			{
				auto left = multiply(sparse_to_dense(product(i, j), d), basis_vector(k));
				auto right = multiply(basis_vector(i), sparse_to_dense(product(j, k), d));
				if (left != right)
					throw InputError("FinAlgebra: multiplication is not associative on basis triple (" +
					                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
			}
	for (std::size_t i = 0; i < d; ++i)
	{
		auto e = basis_vector(i);
		if (multiply(m_unit, e) != e || multiply(e, m_unit) != e)
			throw InputError("FinAlgebra: unit law fails on basis element " + std::to_string(i));
		if (star(star(e)) != e)
			throw InputError("FinAlgebra: involution is not involutive on basis element " + std::to_string(i));
	}
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
		{
			auto ei = basis_vector(i);
			auto ej = basis_vector(j);
			if (star(multiply(ei, ej)) != multiply(star(ej), star(ei)))
				throw InputError("FinAlgebra: (ab)* != b*a* on basis pair (" + std::to_string(i) + "," +
				                 std::to_string(j) + ")");
		}
}

FinAlgebra FinAlgebra::ground_field()
{
	return FinAlgebra(1, {GaussRational(1)}, {GaussRational(1)}, ExactMatrix::identity(1), "Q(i)");
}

FinAlgebra FinAlgebra::diagonal(std::size_t k)
{
	if (k == 0)
		throw InputError("FinAlgebra::diagonal: need at least one summand");
	FinAlgebra a = ground_field();
	for (std::size_t s = 1; s < k; ++s)
		a = direct_sum(a, ground_field());
	a.m_name = k == 1 ? "Q(i)" : "Q(i)^" + std::to_string(k);
	return a;
}

FinAlgebra FinAlgebra::matrix_algebra(std::size_t n)
{
	FinAlgebra a = amplify(ground_field(), n);
	a.m_name = "M" + std::to_string(n) + "(Q(i))";
	return a;
}

FinAlgebra FinAlgebra::truncated_polynomial(std::size_t k)
{
	if (k == 0)
		throw InputError("FinAlgebra::truncated_polynomial: k must be positive");
	std::vector<GaussRational> mult(k * k * k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			if (i + j < k)
				mult[(i * k + j) * k + (i + j)] = GaussRational(1);
	ExactVector unit(k);
	unit[0] = GaussRational(1);
	return FinAlgebra(k, std::move(mult), std::move(unit), ExactMatrix::identity(k),
	                  "Q(i)[x]/(x^" + std::to_string(k) + ")");
}

FinAlgebra FinAlgebra::direct_sum(FinAlgebra const &a, FinAlgebra const &b)
{
	std::size_t const da = a.dim(), db = b.dim(), d = da + db;
	std::vector<GaussRational> mult(d * d * d);
	for (std::size_t i = 0; i < da; ++i)
		for (std::size_t j = 0; j < da; ++j)
			for (auto const &[k, c] : a.product(i, j))
				mult[(i * d + j) * d + k] = c;
	for (std::size_t i = 0; i < db; ++i)
		for (std::size_t j = 0; j < db; ++j)
			for (auto const &[k, c] : b.product(i, j))
				mult[((da + i) * d + da + j) * d + da + k] = c;
	ExactVector unit(d);
	ExactMatrix star(d, d);
	for (std::size_t i = 0; i < da; ++i)
	{
		unit[i] = a.unit()[i];
		for (std::size_t j = 0; j < da; ++j)
			star(i, j) = a.star_matrix()(i, j);
	}
	for (std::size_t i = 0; i < db; ++i)
	{
		unit[da + i] = b.unit()[i];
		for (std::size_t j = 0; j < db; ++j)
			star(da + i, da + j) = b.star_matrix()(i, j);
	}
	return FinAlgebra(d, std::move(mult), std::move(unit), std::move(star), a.name() + "+" + b.name());
}

FinAlgebra FinAlgebra::amplify(FinAlgebra const &a, std::size_t m)
{
	if (m == 0)
		throw InputError("FinAlgebra::amplify: matrix size must be positive");
	std::size_t const da = a.dim(), d = m * m * da;
	auto index = [&](std::size_t r, std::size_t c, std::size_t i) { return (r * m + c) * da + i; };
	std::vector<GaussRational> mult(d * d * d);
	for (std::size_t r = 0; r < m; ++r)
		for (std::size_t s = 0; s < m; ++s)
			for (std::size_t t = 0; t < m; ++t)
				for (std::size_t i = 0; i < da; ++i)
					for (std::size_t j = 0; j < da; ++j)
						for (auto const &[k, c] : a.product(i, j))
							mult[(index(r, s, i) * d + index(s, t, j)) * d + index(r, t, k)] = c;
	ExactVector unit(d);
	ExactMatrix star(d, d);
	for (std::size_t r = 0; r < m; ++r)
		for (std::size_t i = 0; i < da; ++i)
			unit[index(r, r, i)] = a.unit()[i];
	for (std::size_t r = 0; r < m; ++r)
		for (std::size_t s = 0; s < m; ++s)
			for (std::size_t i = 0; i < da; ++i)
				for (std::size_t j = 0; j < da; ++j)
					star(index(s, r, i), index(r, s, j)) = a.star_matrix()(i, j);
	return FinAlgebra(d, std::move(mult), std::move(unit), std::move(star),
	                  "M" + std::to_string(m) + "(" + a.name() + ")");
}

FinAlgebra FinAlgebra::from_json(Json const &j)
{
	if (!j.is_object() || !j.contains("dim") || !j.contains("mult") || !j.contains("unit") || !j.contains("star"))
		throw InputError("FinAlgebra JSON needs keys dim, mult, unit, star");
	auto const d = j.at("dim").get<std::size_t>();
	auto const &jm = j.at("mult");
	if (!jm.is_array() || jm.size() != d)
		throw InputError("FinAlgebra JSON: mult must be a dim x dim x dim array");
	std::vector<GaussRational> mult(d * d * d);
	for (std::size_t a = 0; a < d; ++a)
	{
		if (!jm[a].is_array() || jm[a].size() != d)
			throw InputError("FinAlgebra JSON: mult must be a dim x dim x dim array");
		for (std::size_t b = 0; b < d; ++b)
		{
			if (!jm[a][b].is_array() || jm[a][b].size() != d)
				throw InputError("FinAlgebra JSON: mult must be a dim x dim x dim array");
			for (std::size_t c = 0; c < d; ++c)
				mult[(a * d + b) * d + c] = gauss_from_json(jm[a][b][c]);
		}
	}
	auto const &ju = j.at("unit");
	if (!ju.is_array() || ju.size() != d)
		throw InputError("FinAlgebra JSON: unit must have dim entries");
	ExactVector unit(d);
	for (std::size_t a = 0; a < d; ++a)
		unit[a] = gauss_from_json(ju[a]);
	auto const &js = j.at("star");
	if (!js.is_array() || js.size() != d)
		throw InputError("FinAlgebra JSON: star must be a dim x dim array");
	ExactMatrix star(d, d);
	for (std::size_t a = 0; a < d; ++a)
	{
		if (!js[a].is_array() || js[a].size() != d)
			throw InputError("FinAlgebra JSON: star must be a dim x dim array");
		for (std::size_t b = 0; b < d; ++b)
			star(a, b) = gauss_from_json(js[a][b]);
	}
	return FinAlgebra(d, std::move(mult), std::move(unit), std::move(star), j.value("name", std::string()));
}

Json FinAlgebra::to_json() const
{
	Json mult = Json::array();
	for (std::size_t a = 0; a < m_dim; ++a)
	{
		Json row = Json::array();
		for (std::size_t b = 0; b < m_dim; ++b)
		{
			Json coeffs = Json::array();
			for (std::size_t c = 0; c < m_dim; ++c)
				coeffs.push_back(orbit::to_json(this->mult(a, b, c)));
			row.push_back(coeffs);
		}
		mult.push_back(row);
	}
	return Json{{"name", m_name}, {"dim", m_dim}, {"mult", mult}, {"unit", orbit::to_json(m_unit)},
	            {"star", orbit::to_json(m_star)}};
}

} // namespace orbit::cyclic
