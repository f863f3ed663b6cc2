#pragma once

#include "orbit/exactnum/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbit::chern {

/// Phi(n, k, q) = sum_{i=1}^{k} (-1)^{i-1} C(n, k-i) i^{q-1}.
/// Throws InputError unless k >= 1, n >= 0, q >= 1.
BigInt phi(long n, long k, long q);

/// SU: SU(n+1); SO_odd: SO(2n+1); Sp: Sp(n), with n the rank.
enum class Family { SU, SO_odd, Sp };

Family parse_family(std::string_view name);
std::string family_name(Family f);
/// "SU(4)", "SO(5)", "Sp(2)".
std::string group_name(Family f, long rank);

struct Generator
{
	std::string label;
	long degree = 0; ///< cohomological degree; K-theory generators are odd (degree 1 mod 2)
};

struct RingModel
{
	std::string group;
	std::string theory; ///< "K" or "H"
	std::vector<Generator> generators;
};

struct RingModels
{
	RingModel k_theory;
	RingModel cohomology;
};

/// Exterior-algebra generators of K^* and H^*. Throws InputError for rank < 1 or rank > 64.
RingModels ring_models(Family f, long rank);

struct ChernMatrix
{
	std::string group;
	std::vector<std::string> row_labels;    ///< K-theory generators
	std::vector<std::string> column_labels; ///< cohomology generators
	std::vector<std::vector<Rational>> entries;
	std::size_t rank = 0;
	bool square = false;
	Rational determinant; ///< zero when not square
	bool invertible = false;
};

/// Coefficients of ch on the K-theory generators.
///  SU(n+1): row k, column i: (-1)^i / i! Phi(n+1, k, i+1), k, i = 1..n.
///  SO(2n+1): rows k = 1..n-1: (-1)^{i-1} 2/(2i-1)! Phi(2n+1, k, 2i); spin row
///  (-1)^{i-1} / (2^{n-1} (2i-1)!) sum_{k=1}^{n} Phi(2n+1, k, 2i).
/// Throws InputError for Sp or rank < 1.
ChernMatrix chern_matrix(Family f, long rank);

} // namespace orbit::chern
