#pragma once

#include "orbit/cyclic/fin_algebra.hpp"

#include <cstddef>
#include <string_view>

namespace orbit::cyclic {

/// Element of C_n(A) = A^{⊗(n+1)}, coordinates in the row-major tensor basis.
struct Chain
{
	std::size_t level = 0;
	ExactVector coords;

	static Chain zero(FinAlgebra const &a, std::size_t level);
	static Chain basis(FinAlgebra const &a, std::vector<std::size_t> const &legs);
};

/// Number of coordinates of C_n(A): dim^(n+1).
std::size_t chain_length(FinAlgebra const &a, std::size_t level);

/// Chain-level operators of the cyclic bicomplex.
///  b        Hochschild boundary, faces a_i a_{i+1} plus the wrap-around face (-1)^n a_n a_0.
///  b_prime  the same without the wrap-around face.
///  lambda   (a_0⊗…⊗a_n) ↦ (-1)^n a_n⊗a_0⊗…⊗a_{n-1}.
///  one_minus_lambda
///  norm     N = sum_{j=0}^{n} lambda^j.
///  periodicity  S: C_n → C_{n-2},
///           S = 1/(n(n-1)) · b' · (sum_{j=0}^{n-1} j lambda^j) · b,
///           the zig-zag through the bicomplex that realises the column shift
///           on cyclic cycles.
enum class OperatorKind { b, b_prime, lambda, one_minus_lambda, norm, periodicity };

OperatorKind parse_operator_kind(std::string_view name);
std::string_view operator_name(OperatorKind kind);

/// Level shift of the operator: -1 for b and b', -2 for S, 0 otherwise.
int level_shift(OperatorKind kind);

/// Matrix of the operator acting on C_level. Throws InputError when the level
/// is below the operator's minimum (1 for b, b', lambda, N; 2 for S).
SparseMatrix operator_matrix(FinAlgebra const &a, OperatorKind kind, std::size_t level);

/// Applies the operator to x. With adjoint = true the conjugate transpose is
/// applied instead (basis assumed orthonormal), raising the level.
Chain apply_operator(FinAlgebra const &a, OperatorKind kind, Chain const &x, bool adjoint = false);

} // namespace orbit::cyclic
