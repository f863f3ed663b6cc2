#include "orbit/exactnum/matrix.hpp"

#include "orbit/errors.hpp"

namespace orbit {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows)
    : m_rows(rows.size()), m_cols(rows.size() ? rows.begin()->size() : 0)
{
	m_data.reserve(m_rows * m_cols);
	for (auto const &r : rows)
	{
		if (r.size() != m_cols)
			throw InputError("ExactMatrix: ragged initializer");
		m_data.insert(m_data.end(), r.begin(), r.end());
	}
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
	ExactMatrix m(n, n);
	for (std::size_t k = 0; k < n; ++k)
		m(k, k) = GaussRational(1);
	return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<ExactVector> const &rows, std::size_t cols)
{
	ExactMatrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		if (rows[r].size() != cols)
			throw InputError("ExactMatrix::from_rows: vector length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

ExactVector ExactMatrix::row(std::size_t r) const
{
	return ExactVector(m_data.begin() + static_cast<std::ptrdiff_t>(r * m_cols),
	                   m_data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m_cols));
}

ExactVector ExactMatrix::column(std::size_t c) const
{
	ExactVector v(m_rows);
	for (std::size_t r = 0; r < m_rows; ++r)
		v[r] = (*this)(r, c);
	return v;
}

ExactMatrix ExactMatrix::transpose() const
{
	ExactMatrix t(m_cols, m_rows);
	for (std::size_t r = 0; r < m_rows; ++r)
		for (std::size_t c = 0; c < m_cols; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

ExactMatrix ExactMatrix::conj_transpose() const
{
	ExactMatrix t(m_cols, m_rows);
	for (std::size_t r = 0; r < m_rows; ++r)
		for (std::size_t c = 0; c < m_cols; ++c)
			t(c, r) = (*this)(r, c).conj();
	return t;
}

bool ExactMatrix::is_zero() const
{
	for (auto const &x : m_data)
		if (!x.is_zero())
			return false;
	return true;
}

ExactMatrix operator*(ExactMatrix const &a, ExactMatrix const &b)
{
	if (a.m_cols != b.m_rows)
		throw InputError("ExactMatrix: product shape mismatch");
	ExactMatrix r(a.m_rows, b.m_cols);
	for (std::size_t i = 0; i < a.m_rows; ++i)
		for (std::size_t k = 0; k < a.m_cols; ++k)
		{
			auto const &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (std::size_t j = 0; j < b.m_cols; ++j)
				if (!b(k, j).is_zero())
					r(i, j) += aik * b(k, j);
		}
	return r;
}

ExactVector operator*(ExactMatrix const &a, ExactVector const &v)
{
	if (a.m_cols != v.size())
		throw InputError("ExactMatrix: matrix-vector shape mismatch");
	ExactVector r(a.m_rows);
	for (std::size_t i = 0; i < a.m_rows; ++i)
		for (std::size_t k = 0; k < a.m_cols; ++k)
			if (!a(i, k).is_zero() && !v[k].is_zero())
				r[i] += a(i, k) * v[k];
	return r;
}

ExactMatrix operator+(ExactMatrix const &a, ExactMatrix const &b)
{
	if (a.m_rows != b.m_rows || a.m_cols != b.m_cols)
		throw InputError("ExactMatrix: sum shape mismatch");
	ExactMatrix r = a;
	for (std::size_t k = 0; k < r.m_data.size(); ++k)
		r.m_data[k] += b.m_data[k];
	return r;
}

ExactMatrix operator-(ExactMatrix const &a, ExactMatrix const &b)
{
	if (a.m_rows != b.m_rows || a.m_cols != b.m_cols)
		throw InputError("ExactMatrix: difference shape mismatch");
	ExactMatrix r = a;
	for (std::size_t k = 0; k < r.m_data.size(); ++k)
		r.m_data[k] -= b.m_data[k];
	return r;
}

bool is_zero(ExactVector const &v)
{
	for (auto const &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

} // namespace orbit
