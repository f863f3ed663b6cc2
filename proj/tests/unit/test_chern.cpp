#include "orbit/chern/chern.hpp"
#include "orbit/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace orbit;
using namespace orbit::chern;

namespace {

// Pascal triangle and machine integers: an oracle independent of GMP binomials
long long phi_oracle(int n, int k, int q)
{
	std::vector<std::vector<long long>> pascal(n + 1);
	for (int r = 0; r <= n; ++r)
	{
		pascal[r].assign(r + 1, 1);
		for (int c = 1; c < r; ++c)
			pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
	}
	auto choose = [&](int a, int b) { return b < 0 || b > a ? 0LL : pascal[a][b]; };
	long long total = 0;
	for (int i = 1; i <= k; ++i)
	{
		long long p = 1;
		for (int e = 0; e < q - 1; ++e)
			p *= i;
		total += (i % 2 ? 1 : -1) * choose(n, k - i) * p;
	}
	return total;
}

Rational leibniz(std::vector<std::vector<Rational>> const &m)
{
	std::vector<std::size_t> perm(m.size());
	std::iota(perm.begin(), perm.end(), 0);
	Rational total(0);
	do
	{
		int inversions = 0;
		for (std::size_t a = 0; a < perm.size(); ++a)
			for (std::size_t b = a + 1; b < perm.size(); ++b)
				inversions += perm[a] > perm[b];
		Rational term(inversions % 2 ? -1 : 1);
		for (std::size_t r = 0; r < perm.size(); ++r)
			term *= m[r][perm[r]];
		total += term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

} // namespace

TEST_CASE("phi examples")
{
	CHECK(phi(2, 1, 2) == 1);
	CHECK(phi(3, 2, 2) == 1);
	CHECK(phi(3, 2, 3) == -1);
	for (long n = 0; n < 8; ++n)
		for (long q = 1; q < 8; ++q)
			CHECK(phi(n, 1, q) == 1);
	CHECK_THROWS_AS(phi(3, 0, 1), InputError);
	CHECK_THROWS_AS(phi(3, 1, 0), InputError);
	CHECK_THROWS_AS(phi(-1, 1, 1), InputError);
}

TEST_CASE("phi matches a machine-integer oracle")
{
	for (int n = 1; n <= 12; ++n)
		for (int k = 1; k <= n; ++k)
			for (int q = 1; q <= 8; ++q)
				CHECK(phi(n, k, q) == static_cast<long>(phi_oracle(n, k, q)));
	// large arguments stay exact
	CHECK(phi(200, 100, 30) > 0);
}

TEST_CASE("ring models")
{
	auto su3 = ring_models(Family::SU, 2);
	CHECK(su3.k_theory.group == "SU(3)");
	REQUIRE(su3.k_theory.generators.size() == 2);
	CHECK(su3.k_theory.generators[0].label == "beta(rho_1)");
	REQUIRE(su3.cohomology.generators.size() == 2);
	CHECK(su3.cohomology.generators[0].label == "x_3");
	CHECK(su3.cohomology.generators[1].label == "x_5");

	auto so5 = ring_models(Family::SO_odd, 2);
	CHECK(so5.cohomology.group == "SO(5)");
	CHECK(so5.cohomology.generators[1].label == "x_7");
	CHECK(so5.k_theory.generators.back().label == "epsilon_5");
	CHECK(so5.k_theory.generators.size() == 3);

	auto sp1 = ring_models(Family::Sp, 1);
	REQUIRE(sp1.cohomology.generators.size() == 1);
	CHECK(sp1.cohomology.generators[0].label == "x_3");

	for (long r = 1; r <= 6; ++r)
	{
		// SU(2n): x_3 ... x_{4n-1}; SU(2n+1): x_3 ... x_{4n+1}; Sp and SO: x_3, x_7, ..., x_{4n-1}
		auto su = ring_models(Family::SU, r).cohomology.generators;
		CHECK(su.size() == static_cast<std::size_t>(r));
		CHECK(su.back().degree == 2 * r + 1);
		for (auto f : {Family::SO_odd, Family::Sp})
		{
			auto g = ring_models(f, r).cohomology.generators;
			for (long i = 0; i < r; ++i)
				CHECK(g[static_cast<std::size_t>(i)].degree == 4 * (i + 1) - 1);
		}
		for (auto f : {Family::SU, Family::SO_odd, Family::Sp})
		{
			for (auto const &g : ring_models(f, r).cohomology.generators)
				CHECK(g.degree % 2 == 1);
		}
	}
	CHECK_THROWS_AS(ring_models(Family::SU, 0), InputError);
	CHECK_THROWS_AS(parse_family("G2"), InputError);
}

TEST_CASE("chern matrix examples")
{
	auto su2 = chern_matrix(Family::SU, 1);
	REQUIRE(su2.entries.size() == 1);
	CHECK(su2.entries[0][0] == Rational(-1));
	CHECK(su2.determinant == Rational(-1));

	auto su3 = chern_matrix(Family::SU, 2);
	CHECK(su3.entries == std::vector<std::vector<Rational>>{{Rational(-1), Rational(1, 2)},
	                                                         {Rational(-1), Rational(-1, 2)}});
	CHECK(su3.determinant == Rational(1));
	CHECK(su3.invertible);

	for (long n = 1; n <= 6; ++n)
	{
		auto m = chern_matrix(Family::SU, n);
		CHECK(m.invertible);
		CHECK(m.rank == static_cast<std::size_t>(n));
		for (long i = 1; i <= n; ++i)
			CHECK(m.entries[0][static_cast<std::size_t>(i - 1)] ==
			      Rational(i % 2 ? -1 : 1) / Rational(factorial(static_cast<unsigned>(i))));
		if (n <= 4)
			CHECK(m.determinant == leibniz(m.entries));
	}

	auto so3 = chern_matrix(Family::SO_odd, 1);
	CHECK(so3.row_labels == std::vector<std::string>{"epsilon_3"});
	CHECK(so3.entries[0][0] == Rational(1));
	auto so5 = chern_matrix(Family::SO_odd, 2);
	REQUIRE(so5.entries.size() == 2);
	// lambda_1 row: 2 Phi(5,1,2), -2/3! Phi(5,1,4)
	CHECK(so5.entries[0][0] == Rational(2));
	CHECK(so5.entries[0][1] == Rational(-1, 3));
	// spin row: (Phi(5,1,2) + Phi(5,2,2))/2 = (1 + 3)/2
	CHECK(so5.entries[1][0] == Rational(2));
	CHECK(so5.rank <= 2);
	CHECK_THROWS_AS(chern_matrix(Family::Sp, 2), InputError);
}
