#pragma once

#include "orbit/exactnum/json_io.hpp"
#include "orbit/exactnum/matrix.hpp"
#include "orbit/exactnum/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbit::liealg {

/// Real Lie algebra given by structure constants [X_i, X_j] = sum_k c(i,j,k) X_k.
/// The constants are stored as given; antisymmetry and Jacobi are checked on demand
/// so that malformed inputs can be diagnosed.
class LieAlgebra
{
public:
	LieAlgebra(std::vector<std::string> basis, std::vector<Rational> constants);

	/// {"dim": n, "basis": [...], "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}.
	/// Indices may be numbers or basis names. Each listed bracket also sets [X_j, X_i]
	/// to its negative; contradictory or diagonal entries are input errors.
	static LieAlgebra from_json(Json const &j);
	Json to_json() const;

	static LieAlgebra heisenberg();  ///< X, Y, Z with [X,Y] = Z
	static LieAlgebra affine_line(); ///< X, Y with [X,Y] = Y
	static LieAlgebra sl2();         ///< H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H
	static LieAlgebra abelian(std::size_t n);

	std::size_t dim() const { return m_basis.size(); }
	std::vector<std::string> const &basis() const { return m_basis; }
	Rational const &c(std::size_t i, std::size_t j, std::size_t k) const
	{
		return m_c[(i * dim() + j) * dim() + k];
	}

	/// Bracket extended bilinearly to complex coordinate vectors.
	ExactVector bracket(ExactVector const &x, ExactVector const &y) const;
	ExactVector basis_vector(std::size_t i) const;

	bool is_antisymmetric() const;

private:
	std::vector<std::string> m_basis;
	std::vector<Rational> m_c;
};

struct JacobiReport
{
	bool holds = true;
	std::optional<std::array<std::size_t, 3>> witness; ///< first (i,j,k) with a nonzero cyclic sum
	ExactVector residual;                             ///< the cyclic sum at the witness
};

/// Evaluates [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] on all basis triples.
JacobiReport check_jacobi(LieAlgebra const &l);

/// True if span(vectors) is closed under the bracket.
bool is_subalgebra(LieAlgebra const &l, std::vector<ExactVector> const &vectors);

} // namespace orbit::liealg
