#include "orbit/affine/affine.hpp"
#include "orbit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace orbit;
using namespace orbit::affine;

namespace {

GridFunction random_function(LogGrid const &grid, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> n;
	GridFunction f(grid.size());
	for (auto &z : f)
		z = {n(rng), n(rng)};
	return f;
}

} // namespace

TEST_CASE("log grid layout")
{
	LogGrid grid(8, 0.0625);
	CHECK(grid.branch_size() == 257);
	CHECK(grid.size() == 514);
	CHECK(grid.node(0) == doctest::Approx(std::exp(-8.0)));
	CHECK(grid.node(128) == 1.0);
	CHECK(grid.node(257 + 128) == -1.0);
	CHECK(grid.shift_of(std::exp(0.125)) == 2);
	CHECK(grid.shift_of(-std::exp(-0.0625)) == -1);
	CHECK_THROWS_AS(LogGrid(1, 0.3), InputError);
	CHECK_THROWS_AS(grid.shift_of(1.5), InputError);
	try
	{
		grid.shift_of(1.5);
	}
	catch (InputError const &e)
	{
		CHECK(std::string(e.what()).find("nearest aligned") != std::string::npos);
	}
	CHECK_THROWS_AS(AffineElement(0, 1), InputError);
}

TEST_CASE("rep_S pointwise action")
{
	LogGrid grid(2, 0.25);
	auto f = random_function(grid, 1);
	CHECK(rep_S({1, 0}, grid, f) == f);

	auto phase = rep_S({1, 0.7}, grid, f);
	for (std::size_t i = 0; i < f.size(); ++i)
	{
		CHECK(std::abs(phase[i]) == doctest::Approx(std::abs(f[i])).epsilon(1e-14));
		CHECK(std::abs(phase[i] - std::exp(std::complex<double>(0, 0.7 * grid.node(i))) * f[i]) < 1e-14);
	}

	// delta at u0 on the positive branch moves to u0 - h
	GridFunction delta(grid.size());
	delta[10] = 1;
	auto moved = rep_S({std::exp(0.25), 0}, grid, delta);
	CHECK(moved[9] == std::complex<double>(1));
	CHECK(max_abs_difference(moved, GridFunction(grid.size())) == 1.0);

	auto swapped = rep_S({-1, 0}, grid, delta);
	CHECK(swapped[grid.branch_size() + 10] == std::complex<double>(1));

	// off the seam, (S_g f)(x) = e^{ibx} f(ax) at the node ax
	AffineElement g(-std::exp(0.5), 0.3);
	auto s = rep_S(g, grid, f);
	for (std::size_t i = 0; i < grid.branch_size() - 2; ++i)
	{
		double x = grid.node(i);
		std::size_t j = grid.branch_size() + i + 2;
		CHECK(grid.node(j) == doctest::Approx(g.a * x));
		CHECK(std::abs(s[i] - std::polar(1.0, g.b * x) * f[j]) < 1e-14);
	}
}

TEST_CASE("homomorphism and unitarity")
{
	LogGrid grid(8, 0.0625);
	double h = grid.step();
	CHECK(verify_homomorphism({std::exp(h), 1}, {std::exp(2 * h), -2}, grid, 20, 3) <= 1e-12);
	AffineElement g(-std::exp(5 * h), 0.4);
	CHECK(verify_homomorphism(g, g.inverse(), grid, 20, 4) <= 1e-12);
	CHECK(verify_homomorphism({std::exp(3 * h), 0}, {-std::exp(-7 * h), 0}, grid, 20, 5) == 0.0);

	CHECK(verify_unitarity({1, 2.5}, grid, 20) <= 1e-12);
	CHECK(verify_unitarity({std::exp(3 * h), 0}, grid, 20) <= 1e-12);
	CHECK_THROWS_AS(verify_unitarity({1.1, 0}, grid, 1), InputError);

	// S_g S_{g^-1} is the identity on the whole grid when b = 0
	auto f = random_function(grid, 9);
	AffineElement d(std::exp(40 * h), 0);
	CHECK(rep_S(d, grid, rep_S(d.inverse(), grid, f)) == f);
}

TEST_CASE("characters")
{
	CHECK(character_U(3.0, 1, {1, 5}) == std::complex<double>(1));
	CHECK(character_U(0.0, 1, {-2, 0}) == std::complex<double>(-1));
	CHECK(character_U(0.0, 0, {-2, 0}) == std::complex<double>(1));
	CHECK(std::abs(character_U(2.0, 0, {std::exp(0.5), 0}) - std::polar(1.0, 1.0)) < 1e-15);
	CHECK_THROWS_AS(character_U(1.0, 2, {1, 0}), InputError);
}

TEST_CASE("suite and index metadata")
{
	LogGrid grid(8, 0.0625);
	auto r = run_suite(grid, {});
	CHECK(r.pairs == 1000);
	CHECK(r.homomorphism_residual <= 1e-12);
	CHECK(r.unitarity_residual <= 1e-12);
	CHECK(r.character_residual <= 1e-14);
	auto again = run_suite(grid, {});
	CHECK(again.homomorphism_residual == r.homomorphism_residual);

	auto m = index_metadata();
	CHECK(m.index == std::pair{1, 1});
	CHECK(m.target == "Z ⊕ Z");
	CHECK(m.quotient == "C(S¹ ∨ S¹)");
}
