#include "orbit/errors.hpp"
#include "orbit/exactnum/hbar_poly.hpp"
#include "orbit/exactnum/json_io.hpp"
#include "orbit/exactnum/linalg.hpp"
#include "orbit/exactnum/polynomial.hpp"
#include "orbit/exactnum/sparse.hpp"
#include "orbit/exactnum/tensor_index.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace orbit;

namespace {

GaussRational random_gauss(std::mt19937_64 &rng, int range, bool complex)
{
	auto draw = [&] { return static_cast<long>(rng() % (2 * range + 1)) - range; };
	Rational re(draw(), 1 + static_cast<long>(rng() % 3));
	Rational im = complex ? Rational(draw(), 1 + static_cast<long>(rng() % 3)) : Rational(0);
	return {re, im};
}

ExactMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int density_pct)
{
	ExactMatrix m(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			if (static_cast<int>(rng() % 100) < density_pct)
				m(r, c) = random_gauss(rng, 3, rng() % 2);
	return m;
}

// Leibniz expansion, used as an independent determinant oracle.
GaussRational leibniz_det(ExactMatrix const &m)
{
	std::vector<std::size_t> perm(m.rows());
	std::iota(perm.begin(), perm.end(), 0);
	GaussRational total;
	do
	{
		int inversions = 0;
		for (std::size_t a = 0; a < perm.size(); ++a)
			for (std::size_t b = a + 1; b < perm.size(); ++b)
				inversions += perm[a] > perm[b];
		GaussRational term(1);
		for (std::size_t r = 0; r < perm.size(); ++r)
			term *= m(r, perm[r]);
		total += inversions % 2 ? -term : term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

} // namespace

TEST_CASE("rational canonical form and parsing")
{
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(3, -6).str() == "-1/2");
	CHECK(Rational::parse("6/4").str() == "3/2");
	CHECK(Rational::parse("-7").str() == "-7");
	CHECK(Rational::parse(" +5/10 ") == Rational(1, 2));
	CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
	CHECK_THROWS_AS(Rational::parse("abc"), InputError);
	CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
	CHECK(Rational::from_double(0.5) == Rational(1, 2));
	CHECK(binomial(5, 2) == 10);
	CHECK(binomial(3, 4) == 0);
	CHECK(factorial(5) == 120);
}

TEST_CASE("gaussian rational arithmetic")
{
	GaussRational const i = GaussRational::i();
	CHECK(i * i == GaussRational(-1));
	GaussRational a(Rational(1, 2), Rational(-3));
	CHECK(a * a.inverse() == GaussRational(1));
	CHECK(a.norm() == Rational(37, 4));
	CHECK(GaussRational().norm().is_zero());
	CHECK_THROWS_AS(GaussRational().inverse(), InputError);
	CHECK(a.str() == "1/2-3i");

	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 200; ++trial)
	{
		auto x = random_gauss(rng, 5, true);
		auto y = random_gauss(rng, 5, true);
		CHECK((x * y).conj() == y.conj() * x.conj());
		CHECK((x * y).conj() == x.conj() * y.conj());
		CHECK(x.conj().conj() == x);
		CHECK(x.norm().sign() >= 0);
		CHECK((x.norm().is_zero()) == x.is_zero());
	}
}

TEST_CASE("gaussian rational json round trip")
{
	GaussRational z(Rational(-2, 3), Rational(5));
	Json j = to_json(z);
	CHECK(j["re"] == "-2/3");
	CHECK(j["im"] == "5");
	CHECK(gauss_from_json(j) == z);
	CHECK(gauss_from_json(Json("1/2")) == GaussRational(Rational(1, 2)));
	CHECK(gauss_from_json(Json(3)) == GaussRational(3));
	CHECK_THROWS_AS(gauss_from_json(Json(1.5)), InputError);
}

TEST_CASE("hbar polynomials")
{
	HbarPoly h = HbarPoly::hbar();
	HbarPoly p = h * h + HbarPoly(GaussRational::i()) * h;
	CHECK(p.degree() == 2);
	CHECK(p.coefficient(1) == GaussRational::i());
	CHECK((p - p).is_zero());
	CHECK(p.divided_by_hbar() == h + HbarPoly(GaussRational::i()));
	CHECK_THROWS_AS((p + HbarPoly(1)).divided_by_hbar(), InternalError);
}

TEST_CASE("rank examples")
{
	CHECK(rank(ExactMatrix::identity(2)) == 2);
	CHECK(rank(ExactMatrix(3, 3)) == 0);
	CHECK(rank(ExactMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel examples")
{
	CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
	auto zero_kernel = kernel_basis(ExactMatrix(2, 2));
	CHECK(zero_kernel.size() == 2);
	CHECK(span_dimension(zero_kernel, 2) == 2);

	auto k = kernel_basis(ExactMatrix{{1, 2}, {2, 4}});
	REQUIRE(k.size() == 1);
	// proportional to (-2, 1)
	CHECK(k[0][0] * GaussRational(1) == k[0][1] * GaussRational(-2));
	CHECK(!is_zero(k[0]));
}

TEST_CASE("rank plus nullity equals columns and kernel vectors are annihilated")
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 60; ++trial)
	{
		std::size_t rows = 1 + rng() % 6;
		std::size_t cols = 1 + rng() % 6;
		auto m = random_matrix(rng, rows, cols, 45);
		// occasionally force dependent rows
		if (rows > 2 && trial % 3 == 0)
			for (std::size_t c = 0; c < cols; ++c)
				m(rows - 1, c) = m(0, c) * GaussRational(Rational(2), Rational(1)) - m(1, c);
		auto kernel = kernel_basis(m);
		CHECK(rank(m) + kernel.size() == cols);
		CHECK(span_dimension(kernel, cols) == kernel.size());
		for (auto const &v : kernel)
			CHECK(is_zero(m * v));
	}
}

TEST_CASE("bareiss determinant agrees with Leibniz expansion")
{
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 40; ++trial)
	{
		std::size_t n = 1 + rng() % 5;
		auto m = random_matrix(rng, n, n, 70);
		CHECK(determinant(m) == leibniz_det(m));
	}
	CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), InputError);
}

TEST_CASE("subspace intersection")
{
	// span{e0, e1} ∩ span{e1, e2} = span{e1}
	std::vector<ExactVector> u{{1, 0, 0}, {0, 1, 0}};
	std::vector<ExactVector> w{{0, 1, 0}, {0, 0, 1}};
	auto x = intersect(u, w, 3);
	REQUIRE(x.size() == 1);
	CHECK(in_span(x, ExactVector{0, 1, 0}, 3));
}

TEST_CASE("tensor power index")
{
	std::vector<std::size_t> d22{2, 2}, d32{3, 2};
	CHECK(tensor_power_index(d22, std::vector<std::size_t>{0, 0}) == 0);
	CHECK(tensor_power_index(d22, std::vector<std::size_t>{1, 1}) == 3);
	CHECK(tensor_power_index(d32, std::vector<std::size_t>{2, 1}) == 5);
	CHECK_THROWS_AS(tensor_power_index(d32, std::vector<std::size_t>{3, 0}), std::out_of_range);

	std::vector<std::size_t> dims{3, 1, 4, 2};
	for (std::size_t flat = 0; flat < tensor_size(dims); ++flat)
		CHECK(tensor_power_index(dims, tensor_power_unindex(dims, flat)) == flat);
}

TEST_CASE("sparse rank matches dense rank")
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 60; ++trial)
	{
		std::size_t rows = 1 + rng() % 12;
		std::size_t cols = 1 + rng() % 12;
		auto m = random_matrix(rng, rows, cols, 20);
		auto s = SparseMatrix::from_dense(m);
		CHECK(sparse_rank(s) == rank(m));
		CHECK(s.to_dense() == m);
		CHECK((s.conj_transpose()).to_dense() == m.conj_transpose());
	}
}

TEST_CASE("sparse product and application")
{
	std::mt19937_64 rng(9);
	auto a = random_matrix(rng, 4, 5, 50);
	auto b = random_matrix(rng, 5, 3, 50);
	auto sa = SparseMatrix::from_dense(a);
	auto sb = SparseMatrix::from_dense(b);
	CHECK((sa * sb).to_dense() == a * b);
	ExactVector v{1, 2, 0, GaussRational::i(), -1};
	CHECK(sa.apply(v) == a * v);
}

TEST_CASE("multivariate polynomial basics")
{
	using P = MPoly<Rational>;
	auto x = P::variable(2, 0);
	auto y = P::variable(2, 1);
	auto f = x * x * y + P::constant(2, Rational(3));
	CHECK(f.degree() == 3);
	CHECK(f.derivative(0) == (x * y).scaled(Rational(2)));
	CHECK(f.derivative(1) == x * x);
	std::vector<Rational> pt{Rational(2), Rational(-1)};
	CHECK(f.evaluate(pt) == Rational(-1));
	CHECK((f - f).is_zero());
	CHECK(f.str({"x", "y"}) == "x^2*y + (3)");
}
