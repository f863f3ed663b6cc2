#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbit::affine {

/// x -> a x + b with a != 0.
struct AffineElement
{
	double a = 1.0;
	double b = 0.0;

	AffineElement() = default;
	AffineElement(double a_, double b_);

	AffineElement operator*(AffineElement const &o) const { return {a * o.a, a * o.b + b}; }
	AffineElement inverse() const { return {1.0 / a, -b / a}; }
};

using GridFunction = std::vector<std::complex<double>>;

/// Nodes x = s e^u, u = -L, -L+h, ..., L, with the positive branch stored first.
class LogGrid
{
public:
	LogGrid(double half_size, double step);

	double half_size() const { return L_; }
	double step() const { return h_; }
	std::size_t branch_size() const { return n_; }
	std::size_t size() const { return 2 * n_; }

	double node(std::size_t index) const;
	double weight() const { return h_; }

	/// m with |a| = e^{m h}; throws InputError naming the nearest aligned value otherwise.
	long shift_of(double a) const;
	double aligned(long m) const;

	double norm_squared(GridFunction const &f) const;

private:
	double L_;
	double h_;
	std::size_t n_;
};

/// (S_g f)(x) = e^{i b x} f(a x); index shifts wrap periodically on each branch.
GridFunction rep_S(AffineElement const &g, LogGrid const &grid, GridFunction const &f);

double max_abs_difference(GridFunction const &x, GridFunction const &y);

/// Max-norm of S_{g1} S_{g2} f - S_{g1 g2} f over random f supported away
/// from the wrap seam.
double verify_homomorphism(AffineElement const &g1, AffineElement const &g2, LogGrid const &grid,
                           std::size_t trials, std::uint64_t seed = 0);

/// Max |‖S_g f‖² - ‖f‖²| over random f.
double verify_unitarity(AffineElement const &g, LogGrid const &grid, std::size_t trials, std::uint64_t seed = 0);

/// e^{i λ ln|a|} (sgn a)^ε.
std::complex<double> character_U(double lambda, int epsilon, AffineElement const &g);

struct IndexMetadata
{
	std::pair<int, int> index{1, 1};
	std::string group = "Ext(S¹ ∨ S¹) ≅ Z ⊕ Z";
	std::string target = "Z ⊕ Z";
	std::string quotient = "C(S¹ ∨ S¹)";
};

IndexMetadata index_metadata();

struct SuiteConfig
{
	std::size_t pairs = 1000;
	long max_shift = 16;    ///< aligned dilations e^{m h}, |m| <= max_shift
	double max_translation = 0.25;
	double max_lambda = 5.0;
	std::uint64_t seed = 0;
};

struct SuiteReport
{
	std::size_t pairs = 0;
	double homomorphism_residual = 0;
	double unitarity_residual = 0;
	double character_residual = 0;
	IndexMetadata index;
};

/// Random aligned pairs, one test function per pair.
SuiteReport run_suite(LogGrid const &grid, SuiteConfig const &config);

} // namespace orbit::affine
