#pragma once

#include "orbit/exactnum/matrix.hpp"

#include <cstddef>
#include <vector>

namespace orbit {

/// Rank over Q(i), fraction-free (Bareiss) elimination.
std::size_t rank(ExactMatrix const &m);

/// Determinant of a square matrix (Bareiss). Throws InputError if not square.
GaussRational determinant(ExactMatrix const &m);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon
{
	ExactMatrix reduced;
	std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(ExactMatrix const &m);

/// Basis of { v : m v = 0 }; size is cols - rank.
std::vector<ExactVector> kernel_basis(ExactMatrix const &m);

/// Independent subset-free basis of the span of the given vectors (RREF rows).
std::vector<ExactVector> span_basis(std::vector<ExactVector> const &vectors, std::size_t dim);

/// Dimension of span(vectors).
std::size_t span_dimension(std::vector<ExactVector> const &vectors, std::size_t dim);

/// True iff v lies in span(basis).
bool in_span(std::vector<ExactVector> const &basis, ExactVector const &v, std::size_t dim);

/// Basis of the intersection of two subspaces of Q(i)^dim.
std::vector<ExactVector> intersect(std::vector<ExactVector> const &u, std::vector<ExactVector> const &w,
                                   std::size_t dim);

} // namespace orbit
