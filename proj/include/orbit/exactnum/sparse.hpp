#pragma once

#include "orbit/exactnum/gauss.hpp"
#include "orbit/exactnum/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace orbit {

/// Sorted (index, value) pairs; no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, GaussRational>>;

/// Column-major sparse matrix over Q(i).
class SparseMatrix
{
public:
	SparseMatrix() = default;
	SparseMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_columns(cols) {}

	std::size_t rows() const { return m_rows; }
	std::size_t cols() const { return m_columns.size(); }

	SparseVector const &column(std::size_t c) const { return m_columns[c]; }
	/// Replaces column c; the vector is sorted and zero entries dropped.
	void set_column(std::size_t c, SparseVector v);

	std::size_t nonzeros() const;

	SparseVector apply(SparseVector const &x) const;
	ExactVector apply(ExactVector const &x) const;

	friend SparseMatrix operator*(SparseMatrix const &a, SparseMatrix const &b);
	friend SparseMatrix operator+(SparseMatrix const &a, SparseMatrix const &b);
	SparseMatrix scaled(GaussRational const &s) const;
	SparseMatrix conj_transpose() const;

	bool is_zero() const;
	friend bool operator==(SparseMatrix const &a, SparseMatrix const &b) = default;
	ExactMatrix to_dense() const;
	static SparseMatrix from_dense(ExactMatrix const &m);
	static SparseMatrix identity(std::size_t n);

private:
	std::size_t m_rows = 0;
	std::vector<SparseVector> m_columns;
};

/// Adds scale * src into an accumulator keyed by index.
void axpy(SparseVector &dst, GaussRational const &scale, SparseVector const &src);

/// Incremental exact echelon basis. Vectors are reduced against the stored
/// pivots in increasing index order; only independent vectors are kept.
class SparseEchelon
{
public:
	explicit SparseEchelon(std::size_t dim);

	/// Returns true and stores the vector if it is independent of the basis.
	bool insert(SparseVector const &v);
	std::size_t rank() const { return m_rank; }
	std::size_t dim() const { return m_pivot.size(); }

private:
	std::vector<SparseVector> m_pivot; // indexed by leading position, empty if none
	std::vector<GaussRational> m_acc;
	std::size_t m_rank = 0;
};

/// Exact rank, computed blockwise over the connected components of the
/// row/column incidence graph. If upper_bound is given, elimination stops
/// once the rank reaches it.
std::size_t sparse_rank(SparseMatrix const &m, std::size_t upper_bound = static_cast<std::size_t>(-1));

} // namespace orbit
