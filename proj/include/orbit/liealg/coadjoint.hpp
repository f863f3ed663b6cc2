#pragma once

#include "orbit/liealg/lie_algebra.hpp"

#include <vector>

namespace orbit::liealg {

/// F in g*, F_i = <F, X_i>.
using Covector = std::vector<Rational>;

/// B_ij = <F, [X_i, X_j]>.
ExactMatrix poisson_matrix(LieAlgebra const &l, Covector const &f);

/// Rank of the Poisson matrix, the dimension of the coadjoint orbit through F.
std::size_t orbit_dimension(LieAlgebra const &l, Covector const &f);

/// Basis of g_F = { X : <F, [X, Y]> = 0 for all Y }.
std::vector<ExactVector> stabilizer(LieAlgebra const &l, Covector const &f);

/// xi_k = ad*_{X_k} F in dual coordinates: (xi_k)_j = -<F, [X_k, X_j]>.
std::vector<ExactVector> hamiltonian_fields(LieAlgebra const &l, Covector const &f);

} // namespace orbit::liealg
