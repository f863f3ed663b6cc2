#pragma once

#include "orbit/exactnum/rational.hpp"
#include "orbit/qgroup/weyl.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace orbit::qgroup {

/// rho_{w,t} descriptor; dimension is 1 for w = e and infinite otherwise.
struct RepDescriptor
{
	WeylElement w;
	double t = 0;
	bool infinite = false;

	std::string dimension() const { return infinite ? "inf" : "1"; }
};

/// One descriptor per (w, t) with t = 2 pi k / t_samples, ordered by w then t.
/// Throws InputError if t_samples is zero.
std::vector<RepDescriptor> rep_catalog(WeylFamily f, std::size_t rank, std::size_t t_samples);

/// Operator model of the quantized function algebra of SU(2) on e_0..e_{N-1}:
/// a e_n = sqrt(1 - q^{2n}) e_{n-1}, c e_n = e^{it} q^n e_n. The character model
/// is the 1x1 representation a = e^{it}, c = 0.
struct TruncatedRep
{
	double q = 0;
	double t = 0;
	std::size_t truncation = 0;
	bool character = false;
	Eigen::MatrixXcd a;
	Eigen::MatrixXcd c;
};

/// Throws InputError unless 0 < q < 1 and N >= 4.
TruncatedRep build_rep_su2(double q, double t, std::size_t truncation);
TruncatedRep character_rep(double t);

struct RelationResidual
{
	std::string relation;
	double interior = 0; ///< max |entry| over rows and columns 0..N-2
	double boundary = 0; ///< max |entry| in the last row or column
};

struct RelationReport
{
	std::vector<RelationResidual> relations;
	double interior_max = 0;
	double boundary_max = 0;
};

/// Residuals of ac - q ca, ac* - q c*a, cc* - c*c, a*a + c*c - 1 and aa* + q^2 cc* - 1.
/// For the 1x1 character model the whole matrix counts as interior.
RelationReport relation_residuals(TruncatedRep const &r);

enum class ConstraintVerdict { pass, inconclusive };

struct CharacterReport
{
	ConstraintVerdict verdict = ConstraintVerdict::inconclusive;
	Rational q;           ///< exact value of the double q
	Rational determinant; ///< of [[1, 1], [1, q^2]] acting on (|alpha|^2, |gamma|^2)
	Rational alpha_sq;    ///< forced |alpha|^2 when determined
	Rational gamma_sq;    ///< forced |gamma|^2 when determined
};

/// One-dimensional *-representations a ↦ alpha, c ↦ gamma must satisfy
/// |alpha|^2 + |gamma|^2 = 1 and |alpha|^2 + q^2 |gamma|^2 = 1. Solved exactly:
/// for q != 1 this forces gamma = 0, |alpha| = 1. q = 1 is inconclusive.
/// Throws InputError unless 0 < q <= 1.
CharacterReport character_constraints(double q);

/// Largest violation of the two sphere relations at scalar values.
double scalar_relation_residual(double q, std::complex<double> alpha, std::complex<double> gamma);

struct KernelRankReport
{
	std::size_t monomials = 0;
	std::size_t rank = 0;
	bool full_rank = false;
	std::vector<double> singular_values;
	std::vector<double> t_values;
};

/// PBW monomials a^j c^k c*^l and a*^j c^k c*^l (j >= 1) with j + k + l <= degree.
std::vector<std::string> pbw_monomials(unsigned degree);

/// Stacks the images of the PBW monomials under rho_{s,t_i} (truncated, unless
/// characters_only) and the characters tau_{t_i}; t_i = 2 pi frac(i g), g the golden
/// ratio conjugate, so sample sets are nested. Rank uses singular values above
/// 1e-9 times the largest. Throws InputError for degree > 4 or t_samples = 0.
KernelRankReport joint_kernel_rank(double q, unsigned degree, std::size_t t_samples, std::size_t truncation,
                                   bool characters_only = false);

} // namespace orbit::qgroup
