#pragma once

#include "orbit/exactnum/json_io.hpp"
#include "orbit/exactnum/matrix.hpp"
#include "orbit/exactnum/sparse.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbit::cyclic {

/// Finite-dimensional unital *-algebra over Q(i), given by structure
/// constants e_i e_j = sum_k mult(i,j,k) e_k, a unit vector, and the matrix S
/// of the conjugate-linear involution: (sum x_j e_j)* = sum_j conj(x_j) S e_j.
class FinAlgebra
{
public:
	/// Validates associativity on basis triples, the unit laws and the
	/// involution axioms; throws InputError on failure.
	FinAlgebra(std::size_t dim, std::vector<GaussRational> mult, ExactVector unit, ExactMatrix star,
	           std::string name = "");

	static FinAlgebra ground_field();
	/// Direct sum of k copies of the ground field.
	static FinAlgebra diagonal(std::size_t k);
	/// Full matrix algebra M_n(Q(i)) in the matrix-unit basis e_ab (index a*n+b).
	static FinAlgebra matrix_algebra(std::size_t n);
	/// Polynomial algebra Q(i)[x]/(x^k), real involution x* = x.
	static FinAlgebra truncated_polynomial(std::size_t k);
	static FinAlgebra direct_sum(FinAlgebra const &a, FinAlgebra const &b);
	/// M_m(A) = M_m(Q(i)) tensor A; basis index (a*m+b)*dim(A)+i.
	static FinAlgebra amplify(FinAlgebra const &a, std::size_t m);

	/// {"dim": d, "mult": [[[c_k…]…]…], "unit": […], "star": [[…]…]}
	static FinAlgebra from_json(Json const &j);
	Json to_json() const;

	std::size_t dim() const { return m_dim; }
	std::string const &name() const { return m_name; }
	ExactVector const &unit() const { return m_unit; }
	ExactMatrix const &star_matrix() const { return m_star; }
	GaussRational const &mult(std::size_t i, std::size_t j, std::size_t k) const
	{
		return m_mult[(i * m_dim + j) * m_dim + k];
	}
	/// Sparse product e_i e_j.
	SparseVector const &product(std::size_t i, std::size_t j) const { return m_products[i * m_dim + j]; }
	bool is_commutative() const;

	ExactVector multiply(ExactVector const &a, ExactVector const &b) const;
	ExactVector star(ExactVector const &a) const;
	ExactVector basis_vector(std::size_t i) const;

private:
	void validate() const;

	std::size_t m_dim;
	std::vector<GaussRational> m_mult;
	ExactVector m_unit;
	ExactMatrix m_star;
	std::string m_name;
	std::vector<SparseVector> m_products;
};

} // namespace orbit::cyclic
