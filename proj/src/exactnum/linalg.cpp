#include "orbit/exactnum/linalg.hpp"

#include "orbit/errors.hpp"

#include <utility>

namespace orbit {

namespace {

// Fraction-free elimination in place. Returns the rank; swaps counts row
// exchanges so callers can recover the determinant sign.
std::size_t bareiss(ExactMatrix &m, std::size_t &swaps)
{
	std::size_t const rows = m.rows();
	std::size_t const cols = m.cols();
	GaussRational prev(1);
	std::size_t r = 0;
	swaps = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c)
	{
		std::size_t p = r;
		while (p < rows && m(p, c).is_zero())
			++p;
		if (p == rows)
			continue;
		if (p != r)
		{
			for (std::size_t j = 0; j < cols; ++j)
				std::swap(m(p, j), m(r, j));
			++swaps;
		}
		GaussRational const pivot = m(r, c);
		for (std::size_t i = r + 1; i < rows; ++i)
		{
			GaussRational const lead = m(i, c);
			for (std::size_t j = c + 1; j < cols; ++j)
			{
				GaussRational v = pivot * m(i, j);
				if (!lead.is_zero())
					v -= lead * m(r, j);
				m(i, j) = v / prev;
			}
			m(i, c) = GaussRational();
		}
		prev = pivot;
		++r;
	}
	return r;
}

} // namespace

std::size_t rank(ExactMatrix const &m)
{
	ExactMatrix work = m;
	std::size_t swaps = 0;
	return bareiss(work, swaps);
}

GaussRational determinant(ExactMatrix const &m)
{
	if (m.rows() != m.cols())
		throw InputError("determinant: matrix is not square");
	if (m.rows() == 0)
		return GaussRational(1);
	ExactMatrix work = m;
	std::size_t swaps = 0;
	std::size_t const r = bareiss(work, swaps);
	if (r < m.rows())
		return GaussRational();
	// with no skipped columns the last pivot is the determinant up to sign
	GaussRational d = work(m.rows() - 1, m.cols() - 1);
	return swaps % 2 ? -d : d;
}

RowEchelon row_echelon(ExactMatrix const &m)
{
	RowEchelon out{m, {}};
	ExactMatrix &a = out.reduced;
	std::size_t r = 0;
	for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c)
	{
		std::size_t p = r;
		while (p < a.rows() && a(p, c).is_zero())
			++p;
		if (p == a.rows())
			continue;
		if (p != r)
			for (std::size_t j = 0; j < a.cols(); ++j)
				std::swap(a(p, j), a(r, j));
		GaussRational const inv = a(r, c).inverse();
		for (std::size_t j = c; j < a.cols(); ++j)
			a(r, j) *= inv;
		for (std::size_t i = 0; i < a.rows(); ++i)
		{
			if (i == r || a(i, c).is_zero())
				continue;
			GaussRational const f = a(i, c);
			for (std::size_t j = c; j < a.cols(); ++j)
				if (!a(r, j).is_zero())
					a(i, j) -= f * a(r, j);
		}
		out.pivots.push_back(c);
		++r;
	}
	return out;
}

std::vector<ExactVector> kernel_basis(ExactMatrix const &m)
{
	RowEchelon e = row_echelon(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto c : e.pivots)
		is_pivot[c] = true;
	std::vector<ExactVector> basis;
	for (std::size_t free = 0; free < m.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		ExactVector v(m.cols());
		v[free] = GaussRational(1);
		for (std::size_t k = 0; k < e.pivots.size(); ++k)
			v[e.pivots[k]] = -e.reduced(k, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::vector<ExactVector> span_basis(std::vector<ExactVector> const &vectors, std::size_t dim)
{
	if (vectors.empty())
		return {};
	RowEchelon e = row_echelon(ExactMatrix::from_rows(vectors, dim));
	std::vector<ExactVector> basis;
	for (std::size_t k = 0; k < e.pivots.size(); ++k)
		basis.push_back(e.reduced.row(k));
	return basis;
}

std::size_t span_dimension(std::vector<ExactVector> const &vectors, std::size_t dim)
{
	if (vectors.empty())
		return 0;
	return rank(ExactMatrix::from_rows(vectors, dim));
}

bool in_span(std::vector<ExactVector> const &basis, ExactVector const &v, std::size_t dim)
{
	std::vector<ExactVector> extended = basis;
	extended.push_back(v);
	return span_dimension(extended, dim) == span_dimension(basis, dim);
}

std::vector<ExactVector> intersect(std::vector<ExactVector> const &u, std::vector<ExactVector> const &w,
                                   std::size_t dim)
{
	auto bu = span_basis(u, dim);
	auto bw = span_basis(w, dim);
	if (bu.empty() || bw.empty())
		return {};
	// solve sum a_k u_k - sum b_l w_l = 0
	ExactMatrix system(dim, bu.size() + bw.size());
	for (std::size_t r = 0; r < dim; ++r)
	{
		for (std::size_t k = 0; k < bu.size(); ++k)
			system(r, k) = bu[k][r];
		for (std::size_t l = 0; l < bw.size(); ++l)
			system(r, bu.size() + l) = -bw[l][r];
	}
	std::vector<ExactVector> result;
	for (auto const &coeffs : kernel_basis(system))
	{
		ExactVector v(dim);
		for (std::size_t k = 0; k < bu.size(); ++k)
			if (!coeffs[k].is_zero())
				for (std::size_t r = 0; r < dim; ++r)
					v[r] += coeffs[k] * bu[k][r];
		result.push_back(std::move(v));
	}
	return span_basis(result, dim);
}

} // namespace orbit
