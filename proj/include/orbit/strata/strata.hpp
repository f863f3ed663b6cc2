#pragma once

#include "orbit/exactnum/polynomial.hpp"
#include "orbit/liealg/coadjoint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbit::strata {

using liealg::Covector;
using liealg::LieAlgebra;

/// Integer grid sampler: each coordinate is (draw mod (2*range+1)) - range
/// from a 64-bit Mersenne twister seeded with seed.
struct SamplerConfig
{
	std::uint64_t seed = 0;
	std::size_t count = 100;
	long range = 3;
};

std::vector<Covector> sample_covectors(std::size_t dim, SamplerConfig const &cfg);

/// A nonvanishing minor of the Poisson matrix at one sample.
struct MinorWitness
{
	std::vector<std::size_t> rows;
	std::vector<std::size_t> cols;
	Rational value;
};

struct Stratum
{
	std::size_t dimension = 0;
	std::vector<Covector> samples;
	std::vector<std::size_t> sample_indices; ///< positions in the sampled sequence
	std::vector<MinorWitness> witnesses;     ///< one nonzero dimension-sized minor per sample
	bool higher_minors_vanish = true;        ///< all (dimension+2)-minors vanish at every sample
};

/// Groups the samples by exact orbit dimension, strata in decreasing dimension.
/// Throws InputError if count is zero.
std::vector<Stratum> stratify(LieAlgebra const &l, SamplerConfig const &cfg);

/// Determinant of the Poisson submatrix on rows x cols, as a polynomial in F.
MPoly<Rational> minor_polynomial(LieAlgebra const &l, std::vector<std::size_t> const &rows,
                                 std::vector<std::size_t> const &cols);

struct GenericRank
{
	std::size_t rank = 0;
	Covector point; ///< sample attaining the rank
	MinorWitness witness;
	MPoly<Rational> minor;
	std::string minor_text;
	bool cross_checked = false; ///< symbolic minor evaluates to the exact minor at point, nonzero
};

GenericRank generic_rank(LieAlgebra const &l, SamplerConfig const &cfg);

struct FoliationReport
{
	bool pass = true;
	std::vector<std::string> failures;
};

/// At each sample the Hamiltonian fields must span exactly the stratum dimension
/// and coincide with the column space of the Poisson matrix.
/// Throws InputError on an empty stratum.
FoliationReport foliation_check(LieAlgebra const &l, Stratum const &s);

struct Extension
{
	std::size_t dimension = 0;
	std::string ideal_label;
	std::string quotient_label;
};

struct TowerReport
{
	std::vector<Extension> extensions;
	std::string note;
};

/// One extension per positive-dimensional stratum, in decreasing dimension.
TowerReport extension_tower(std::vector<Stratum> const &strata);

/// [delta_0]_i = sum_j c_ij index_j. Throws InputError on a shape mismatch.
std::vector<BigInt> compose_index(std::vector<std::vector<BigInt>> const &c, std::vector<BigInt> const &indices);

} // namespace orbit::strata
