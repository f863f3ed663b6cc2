#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"
#include "orbit/liealg/polarization.hpp"

#include <doctest.h>

#include <random>

using namespace orbit;
using namespace orbit::liealg;

namespace {

std::vector<LieAlgebra> algebras()
{
	return {LieAlgebra::heisenberg(), LieAlgebra::affine_line(), LieAlgebra::sl2(), LieAlgebra::abelian(3)};
}

Covector random_covector(std::mt19937_64 &rng, std::size_t n)
{
	Covector f;
	for (std::size_t i = 0; i < n; ++i)
		f.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
	return f;
}

Covector cov(std::initializer_list<int> v)
{
	Covector f;
	for (int x : v)
		f.emplace_back(x);
	return f;
}

} // namespace

TEST_CASE("jacobi identity")
{
	for (auto const &l : algebras())
	{
		CHECK(l.is_antisymmetric());
		CHECK(check_jacobi(l).holds);
	}

	// Heisenberg with [X,Y] = Z set on one side only and an extra [X,Z] = Y
	auto h = LieAlgebra::heisenberg();
	std::vector<Rational> c(27);
	c[(0 * 3 + 1) * 3 + 2] = 1;
	c[(0 * 3 + 2) * 3 + 1] = 1;
	c[(2 * 3 + 0) * 3 + 1] = -1;
	LieAlgebra broken(h.basis(), c);
	CHECK(!broken.is_antisymmetric());
	auto report = check_jacobi(broken);
	CHECK(!report.holds);
	REQUIRE(report.witness.has_value());
	CHECK(!is_zero(report.residual));
}

TEST_CASE("lie algebra json")
{
	Json j = Json::parse(R"({"dim": 3, "basis": ["X", "Y", "Z"],
		"brackets": [{"i": "X", "j": "Y", "coeffs": {"Z": "1"}}]})");
	auto l = LieAlgebra::from_json(j);
	CHECK(l.c(1, 0, 2) == Rational(-1));
	CHECK(l.to_json() == LieAlgebra::heisenberg().to_json());
	CHECK(LieAlgebra::from_json(l.to_json()).to_json() == l.to_json());

	Json contradict = j;
	contradict["brackets"].push_back(Json::parse(R"({"i": 1, "j": 0, "coeffs": {"2": "1"}})"));
	CHECK_THROWS_AS(LieAlgebra::from_json(contradict), InputError);
	Json consistent = j;
	consistent["brackets"].push_back(Json::parse(R"({"i": 1, "j": 0, "coeffs": {"2": "-1"}})"));
	CHECK_NOTHROW(LieAlgebra::from_json(consistent));
	Json diagonal = Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 0, "coeffs": {"1": "1"}}]})");
	CHECK_THROWS_AS(LieAlgebra::from_json(diagonal), InputError);
	CHECK_THROWS_AS(LieAlgebra::from_json(Json::parse(R"({"dim": 2, "basis": ["A"]})")), InputError);
	CHECK_THROWS_AS(LieAlgebra::from_json(Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {}}]})")),
	                InputError);
}

TEST_CASE("poisson matrix examples")
{
	auto h = LieAlgebra::heisenberg();
	auto b = poisson_matrix(h, cov({0, 0, 1}));
	CHECK(b == ExactMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
	CHECK(poisson_matrix(LieAlgebra::affine_line(), cov({0, 1})) == ExactMatrix{{0, 1}, {-1, 0}});
	CHECK(poisson_matrix(LieAlgebra::sl2(), cov({0, 0, 0})) == ExactMatrix(3, 3));
	CHECK_THROWS_AS(poisson_matrix(h, cov({1, 2})), InputError);

	CHECK(orbit_dimension(h, cov({0, 0, 1})) == 2);
	CHECK(orbit_dimension(h, cov({1, 1, 0})) == 0);
	CHECK(orbit_dimension(LieAlgebra::affine_line(), cov({0, 1})) == 2);
	CHECK(orbit_dimension(LieAlgebra::sl2(), cov({0, 1, 1})) == 2);
}

TEST_CASE("stabilizer examples")
{
	auto h = LieAlgebra::heisenberg();
	auto s = stabilizer(h, cov({0, 0, 1}));
	REQUIRE(s.size() == 1);
	CHECK(in_span(s, ExactVector{0, 0, 1}, 3));
	CHECK(stabilizer(LieAlgebra::affine_line(), cov({0, 1})).empty());
	CHECK(stabilizer(LieAlgebra::sl2(), cov({0, 0, 0})).size() == 3);
}

TEST_CASE("hamiltonian field examples")
{
	auto h = LieAlgebra::heisenberg();
	auto xi = hamiltonian_fields(h, cov({0, 0, 1}));
	CHECK(span_dimension({xi[0], xi[1]}, 3) == 2);
	CHECK(is_zero(xi[2]));
	for (auto const &v : hamiltonian_fields(h, cov({0, 0, 0})))
		CHECK(is_zero(v));
	CHECK(span_dimension(hamiltonian_fields(LieAlgebra::affine_line(), cov({0, 1})), 2) == 2);
	// ad*_X F (Y) = -F([X, Y]) = -F(Z)
	CHECK(xi[0] == ExactVector{0, -1, 0});
}

TEST_CASE("coadjoint invariants on random covectors")
{
	std::mt19937_64 rng(17);
	for (auto const &l : algebras())
		for (int trial = 0; trial < 25; ++trial)
		{
			auto f = random_covector(rng, l.dim());
			auto b = poisson_matrix(l, f);
			CHECK(b.transpose() == ExactMatrix(b.rows(), b.cols()) - b);
			std::size_t const r = orbit_dimension(l, f);
			CHECK(r % 2 == 0);
			auto stab = stabilizer(l, f);
			CHECK(stab.size() + r == l.dim());
			CHECK(is_subalgebra(l, stab));
			// independent oracle: X in g_F iff F([X, X_j]) = 0 for every j
			for (auto const &x : stab)
				for (std::size_t j = 0; j < l.dim(); ++j)
				{
					auto br = l.bracket(x, l.basis_vector(j));
					GaussRational pairing;
					for (std::size_t k = 0; k < l.dim(); ++k)
						pairing += br[k] * GaussRational(f[k]);
					CHECK(pairing.is_zero());
				}
			auto fields = hamiltonian_fields(l, f);
			std::vector<ExactVector> columns;
			for (std::size_t c = 0; c < b.cols(); ++c)
				columns.push_back(b.column(c));
			CHECK(span_dimension(fields, l.dim()) == r);
			auto both = fields;
			both.insert(both.end(), columns.begin(), columns.end());
			CHECK(span_dimension(both, l.dim()) == r);
		}
}

TEST_CASE("polarization examples")
{
	auto h = LieAlgebra::heisenberg();
	auto f = cov({0, 0, 1});
	GaussRational const i = GaussRational::i();

	auto real = check_polarization(h, f, {{0, 0, 1}, {1, 0, 0}});
	CHECK(real.passes());
	CHECK(real.dim_m == 2);
	CHECK(real.dim_h == 2);
	CHECK(real.mixed_type == MixedType{1, 0, 1});

	auto complex = check_polarization(h, f, {{0, 0, 1}, {1, i, 0}});
	CHECK(complex.passes());
	CHECK(complex.dim_m == 3);
	CHECK(complex.dim_h == 1);
	CHECK(complex.mixed_type == MixedType{0, 1, 0});

	auto missing = check_polarization(h, f, {{1, 0, 0}});
	CHECK(!missing.a);
	CHECK(!missing.contains_stabilizer);
	CHECK(missing.not_evaluated.size() == 3);

	auto not_closed = check_polarization(LieAlgebra::sl2(), cov({0, 0, 0}), {{0, 1, 0}, {0, 0, 1}});
	CHECK(!not_closed.subalgebra);

	CHECK_THROWS_AS(check_polarization(h, f, {{1, 0}}), InputError);

	std::mt19937_64 rng(5);
	for (auto const &l : algebras())
	{
		std::vector<ExactVector> full;
		for (std::size_t k = 0; k < l.dim(); ++k)
			full.push_back(l.basis_vector(k));
		for (int trial = 0; trial < 5; ++trial)
		{
			auto r = check_polarization(l, random_covector(rng, l.dim()), full);
			CHECK(r.passes());
			CHECK(r.mixed_type.k == 0);
			CHECK(r.mixed_type.l == 0);
		}
	}
}
