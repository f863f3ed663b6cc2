#pragma once

#include "orbit/liealg/lie_algebra.hpp"
#include "orbit/quantize/diff_op.hpp"

#include <string>
#include <vector>

namespace orbit::quantize {

/// Conventions: omega = sum dq_i ∧ dp_i, xi_f = sum -f_{p_i} d/dq_i + f_{q_i} d/dp_i,
/// so that i(xi_f) omega + df = 0, and {f, g} = xi_f(g), giving {q, p} = 1.
VectorField hamiltonian_field(PhaseSpace const &ps, Poly const &f);

/// i(xi) omega + df, which vanishes for the Hamiltonian field of f.
OneForm contraction_residual(PhaseSpace const &ps, VectorField const &xi, Poly const &f);

Poly poisson(PhaseSpace const &ps, Poly const &f, Poly const &g);

/// alpha(xi) = sum_k alpha_k xi_k.
Poly pair(OneForm const &alpha, VectorField const &xi);

/// The vector field as a first-order operator.
PolyDiffOp as_operator(PhaseSpace const &ps, VectorField const &xi);

/// Q(f) = f + (hbar/i) xi_f + alpha(xi_f) = f - i hbar xi_f + alpha(xi_f).
PolyDiffOp quantize_op(PhaseSpace const &ps, Poly const &f, OneForm const &alpha);

struct CurvatureReport
{
	bool holds = false;
	/// (d alpha + omega)(d/dx_k, d/dx_l) for k < l, flattened row by row; all zero when holds.
	std::vector<Poly> residual;
};

/// Scalar curvature condition d alpha = -omega.
CurvatureReport check_curvature(PhaseSpace const &ps, OneForm const &alpha);

struct DiracReport
{
	bool holds = false;
	PolyDiffOp lhs;      ///< Q({f, g})
	PolyDiffOp rhs;      ///< (i/hbar)[Q(f), Q(g)]
	PolyDiffOp residual; ///< lhs - rhs
};

/// Throws InternalError if the commutator is not divisible by hbar.
DiracReport check_dirac(PhaseSpace const &ps, Poly const &f, Poly const &g, OneForm const &alpha);

struct CocycleReport
{
	/// c(X_i, X_j) = {f_{X_i}, f_{X_j}} + f_{[X_i, X_j]}, row-major n x n.
	std::vector<Poly> table;
	bool flat = false; ///< every entry is literally zero
};

/// Cocycle of a moment map X_i ↦ f_i. The fundamental fields of a left action
/// reverse brackets, so the comparison is against -f_{[X,Y]}.
/// Throws InputError if the moment does not have one polynomial per basis element.
CocycleReport action_cocycle(PhaseSpace const &ps, liealg::LieAlgebra const &l, std::vector<Poly> const &moment);

/// Monomials q^a p^b (all variables) of total degree <= max_degree.
std::vector<Poly> monomials_up_to(PhaseSpace const &ps, unsigned max_degree);

} // namespace orbit::quantize
