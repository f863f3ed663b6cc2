#include "orbit/exactnum/sparse.hpp"

#include "orbit/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace orbit {

namespace {

void normalize(SparseVector &v)
{
	std::sort(v.begin(), v.end(), [](auto const &a, auto const &b) { return a.first < b.first; });
	SparseVector out;
	out.reserve(v.size());
	for (auto &entry : v)
	{
		if (!out.empty() && out.back().first == entry.first)
			out.back().second += entry.second;
		else
			out.push_back(std::move(entry));
	}
	std::erase_if(out, [](auto const &e) { return e.second.is_zero(); });
	v = std::move(out);
}

} // namespace

void SparseMatrix::set_column(std::size_t c, SparseVector v)
{
	normalize(v);
	if (!v.empty() && v.back().first >= m_rows)
		throw InputError("SparseMatrix::set_column: row index out of range");
	m_columns.at(c) = std::move(v);
}

std::size_t SparseMatrix::nonzeros() const
{
	std::size_t n = 0;
	for (auto const &c : m_columns)
		n += c.size();
	return n;
}

void axpy(SparseVector &dst, GaussRational const &scale, SparseVector const &src)
{
	if (scale.is_zero() || src.empty())
		return;
	SparseVector out;
	out.reserve(dst.size() + src.size());
	auto a = dst.begin();
	auto b = src.begin();
	while (a != dst.end() || b != src.end())
	{
		if (b == src.end() || (a != dst.end() && a->first < b->first))
			out.push_back(std::move(*a++));
		else if (a == dst.end() || b->first < a->first)
		{
			out.emplace_back(b->first, scale * b->second);
			++b;
		}
		else
		{
			GaussRational v = a->second + scale * b->second;
			if (!v.is_zero())
				out.emplace_back(a->first, std::move(v));
			++a;
			++b;
		}
	}
	dst = std::move(out);
}

SparseVector SparseMatrix::apply(SparseVector const &x) const
{
	SparseVector out;
	for (auto const &[c, v] : x)
	{
		if (c >= cols())
			throw InputError("SparseMatrix::apply: vector length mismatch");
		for (auto const &[r, a] : m_columns[c])
			out.emplace_back(r, a * v);
	}
	normalize(out);
	return out;
}

ExactVector SparseMatrix::apply(ExactVector const &x) const
{
	if (x.size() != cols())
		throw InputError("SparseMatrix::apply: vector length mismatch");
	ExactVector out(m_rows);
	for (std::size_t c = 0; c < cols(); ++c)
	{
		if (x[c].is_zero())
			continue;
		for (auto const &[r, a] : m_columns[c])
			out[r] += a * x[c];
	}
	return out;
}

SparseMatrix operator*(SparseMatrix const &a, SparseMatrix const &b)
{
	if (a.cols() != b.rows())
		throw InputError("SparseMatrix: product shape mismatch");
	SparseMatrix r(a.rows(), b.cols());
	for (std::size_t c = 0; c < b.cols(); ++c)
		r.m_columns[c] = a.apply(b.m_columns[c]);
	return r;
}

SparseMatrix operator+(SparseMatrix const &a, SparseMatrix const &b)
{
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw InputError("SparseMatrix: sum shape mismatch");
	SparseMatrix r = a;
	for (std::size_t c = 0; c < b.cols(); ++c)
		axpy(r.m_columns[c], GaussRational(1), b.m_columns[c]);
	return r;
}

SparseMatrix SparseMatrix::scaled(GaussRational const &s) const
{
	SparseMatrix r(m_rows, cols());
	if (s.is_zero())
		return r;
	for (std::size_t c = 0; c < cols(); ++c)
		for (auto const &[row, v] : m_columns[c])
			r.m_columns[c].emplace_back(row, v * s);
	return r;
}

SparseMatrix SparseMatrix::conj_transpose() const
{
	SparseMatrix t(cols(), m_rows);
	for (std::size_t c = 0; c < cols(); ++c)
		for (auto const &[r, v] : m_columns[c])
			t.m_columns[r].emplace_back(static_cast<std::uint32_t>(c), v.conj());
	return t; // columns filled in increasing c order, already sorted
}

bool SparseMatrix::is_zero() const
{
	return std::all_of(m_columns.begin(), m_columns.end(), [](auto const &c) { return c.empty(); });
}

ExactMatrix SparseMatrix::to_dense() const
{
	ExactMatrix m(m_rows, cols());
	for (std::size_t c = 0; c < cols(); ++c)
		for (auto const &[r, v] : m_columns[c])
			m(r, c) = v;
	return m;
}

SparseMatrix SparseMatrix::from_dense(ExactMatrix const &m)
{
	SparseMatrix s(m.rows(), m.cols());
	for (std::size_t c = 0; c < m.cols(); ++c)
		for (std::size_t r = 0; r < m.rows(); ++r)
			if (!m(r, c).is_zero())
				s.m_columns[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
	return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
	SparseMatrix s(n, n);
	for (std::size_t k = 0; k < n; ++k)
		s.m_columns[k].emplace_back(static_cast<std::uint32_t>(k), GaussRational(1));
	return s;
}

SparseEchelon::SparseEchelon(std::size_t dim) : m_pivot(dim), m_acc(dim) {}

bool SparseEchelon::insert(SparseVector const &v)
{
	std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> queue;
	std::vector<std::uint32_t> touched;
	for (auto const &[i, x] : v)
	{
		if (i >= m_acc.size())
			throw InputError("SparseEchelon::insert: index out of range");
		m_acc[i] = x;
		queue.push(i);
		touched.push_back(i);
	}
	auto clear = [&] {
		for (auto i : touched)
			m_acc[i] = GaussRational();
	};
	std::uint32_t last = static_cast<std::uint32_t>(-1);
	while (!queue.empty())
	{
		std::uint32_t const i = queue.top();
		queue.pop();
		if (i == last)
			continue;
		last = i;
		if (m_acc[i].is_zero())
			continue;
		if (m_pivot[i].empty())
		{
			GaussRational const inv = m_acc[i].inverse();
			SparseVector row;
			row.emplace_back(i, GaussRational(1));
			std::uint32_t prev = i;
			while (!queue.empty())
			{
				std::uint32_t const j = queue.top();
				queue.pop();
				if (j == prev)
					continue;
				prev = j;
				if (!m_acc[j].is_zero())
					row.emplace_back(j, m_acc[j] * inv);
			}
			m_pivot[i] = std::move(row);
			++m_rank;
			clear();
			return true;
		}
		GaussRational const factor = m_acc[i];
		for (auto const &[j, p] : m_pivot[i])
		{
			if (m_acc[j].is_zero())
			{
				queue.push(j);
				touched.push_back(j);
			}
			m_acc[j] -= factor * p;
		}
	}
	clear();
	return false;
}

std::size_t sparse_rank(SparseMatrix const &m, std::size_t upper_bound)
{
	std::size_t const rows = m.rows();
	std::vector<std::size_t> parent(rows);
	std::iota(parent.begin(), parent.end(), 0);
	std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
		while (parent[x] != x)
		{
			parent[x] = parent[parent[x]];
			x = parent[x];
		}
		return x;
	};
	for (std::size_t c = 0; c < m.cols(); ++c)
	{
		auto const &col = m.column(c);
		for (std::size_t k = 1; k < col.size(); ++k)
		{
			auto a = find(col[0].first);
			auto b = find(col[k].first);
			if (a != b)
				parent[a] = b;
		}
	}
	// group columns and rows by component, ordered by smallest row index
	std::map<std::size_t, std::vector<std::size_t>> component_columns;
	for (std::size_t c = 0; c < m.cols(); ++c)
		if (!m.column(c).empty())
			component_columns[find(m.column(c)[0].first)].push_back(c);
	std::vector<std::uint32_t> local(rows);
	std::map<std::size_t, std::uint32_t> component_size;
	for (std::size_t r = 0; r < rows; ++r)
		local[r] = component_size[find(r)]++;

	std::size_t total = 0;
	for (auto const &[root, columns] : component_columns)
	{
		std::size_t const dim = component_size[root];
		std::size_t const cap = std::min(dim, columns.size());
		SparseEchelon echelon(dim);
		for (auto c : columns)
		{
			if (echelon.rank() == cap || total + echelon.rank() >= upper_bound)
				break;
			SparseVector v;
			v.reserve(m.column(c).size());
			for (auto const &[r, x] : m.column(c))
				v.emplace_back(local[r], x);
			std::sort(v.begin(), v.end(), [](auto const &a, auto const &b) { return a.first < b.first; });
			echelon.insert(v);
		}
		total += echelon.rank();
		if (total >= upper_bound)
			break;
	}
	return total;
}

} // namespace orbit
