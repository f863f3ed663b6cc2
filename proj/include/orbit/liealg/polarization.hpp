#pragma once

#include "orbit/liealg/coadjoint.hpp"

#include <string>
#include <vector>

namespace orbit::liealg {

struct MixedType
{
	long k = 0;
	long l = 0;
	long m = 0;
	friend bool operator==(MixedType const &, MixedType const &) = default;
};

/// Lie-algebra level check of a complex polarization p ⊆ g ⊗ C at F.
struct PolarizationReport
{
	bool subalgebra = false;          ///< [p, p] ⊆ p
	bool contains_stabilizer = false; ///< g_F ⊗ C ⊆ p
	bool a = false;                   ///< subalgebra and contains_stabilizer
	bool b_infinitesimal = false;     ///< [g_F, p] ⊆ p
	bool c = false;                   ///< p + conj(p) is the complexification of the real subalgebra m
	std::size_t dim_p = 0;
	std::size_t dim_m = 0; ///< m = (p + conj p) ∩ g
	std::size_t dim_h = 0; ///< h = p ∩ g
	std::size_t dim_stabilizer = 0;
	/// k = dim g - dim m, l = (dim m - dim h)/2, m = dim h - dim g_F
	MixedType mixed_type;
	std::vector<std::string> not_evaluated; ///< conditions outside exact linear algebra
	std::vector<std::string> failures;

	bool passes() const { return a && b_infinitesimal && c; }
};

/// Throws InputError if a spanning vector does not have dim g coordinates.
PolarizationReport check_polarization(LieAlgebra const &l, Covector const &f, std::vector<ExactVector> const &p);

/// Basis of the real subspace V ∩ g for a conjugation-stable complex subspace V.
std::vector<ExactVector> real_points(std::vector<ExactVector> const &v, std::size_t dim);

} // namespace orbit::liealg
