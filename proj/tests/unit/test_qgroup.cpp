#include "orbit/errors.hpp"
#include "orbit/qgroup/su2_model.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace orbit;
using namespace orbit::qgroup;

TEST_CASE("weyl group examples")
{
	auto a1 = weyl_group(WeylFamily::A, 1);
	REQUIRE(a1.size() == 2);
	CHECK(a1[0].length == 0);
	CHECK(a1[1].length == 1);
	CHECK(a1[1].word_string() == "s1");

	auto a2 = weyl_group(WeylFamily::A, 2);
	CHECK(a2.size() == 6);
	CHECK(std::max_element(a2.begin(), a2.end(), [](auto &x, auto &y) { return x.length < y.length; })->length == 3);

	auto b2 = weyl_group(WeylFamily::B, 2);
	CHECK(b2.size() == 8);
	CHECK(b2.back().length == 4);
	CHECK_THROWS_AS(weyl_group(WeylFamily::A, 0), InputError);
	CHECK_THROWS_AS(weyl_group(WeylFamily::A, 8), InputError);
}

TEST_CASE("weyl group orders and reduced words")
{
	for (std::size_t n = 1; n <= 5; ++n)
		for (auto f : {WeylFamily::A, WeylFamily::B})
		{
			auto w = weyl_group(f, n);
			CHECK(w.size() == weyl_order(f, n));
			std::set<std::vector<int>> distinct;
			for (auto const &e : w)
			{
				distinct.insert(e.images);
				CHECK(e.word.size() == e.length);
				CHECK(evaluate_word(f, n, e.word) == e.images);
			}
			CHECK(distinct.size() == w.size());
			if (f == WeylFamily::A)
			{
				// Coxeter length of a permutation is its inversion count
				for (auto const &e : w)
				{
					std::size_t inv = 0;
					for (std::size_t i = 0; i < e.images.size(); ++i)
						for (std::size_t j = i + 1; j < e.images.size(); ++j)
							inv += e.images[i] > e.images[j];
					CHECK(inv == e.length);
				}
			}
		}
	CHECK(weyl_order(WeylFamily::A, 3) == 24);
	CHECK(weyl_order(WeylFamily::B, 3) == 48);
}

TEST_CASE("representation catalog")
{
	auto a1 = rep_catalog(WeylFamily::A, 1, 4);
	CHECK(a1.size() == 8);
	CHECK(std::count_if(a1.begin(), a1.end(), [](auto const &d) { return !d.infinite; }) == 4);
	for (auto const &d : a1)
	{
		CHECK(d.infinite == !d.w.is_identity());
		CHECK(d.t >= 0);
		CHECK(d.t < 2 * 3.14159266);
	}
	auto a2 = rep_catalog(WeylFamily::A, 2, 1);
	CHECK(a2.size() == 6);
	CHECK(std::count_if(a2.begin(), a2.end(), [](auto const &d) { return d.dimension() == "1"; }) == 1);
	for (auto const &d : rep_catalog(WeylFamily::B, 2, 3))
		CHECK((d.dimension() == "1") == d.w.is_identity());
	CHECK_THROWS_AS(rep_catalog(WeylFamily::A, 1, 0), InputError);
}

TEST_CASE("truncated su2 model")
{
	auto r = build_rep_su2(0.5, 0.0, 4);
	for (int k = 0; k < 4; ++k)
		CHECK(std::abs(r.c(k, k) - std::pow(0.5, k)) < 1e-15);
	CHECK(r.a.col(0).norm() == 0.0);
	CHECK(std::abs(r.a(0, 1) - std::sqrt(0.75)) < 1e-15);
	CHECK_THROWS_AS(build_rep_su2(1.0, 0.0, 8), InputError);
	CHECK_THROWS_AS(build_rep_su2(0.5, 0.0, 3), InputError);

	auto interior = relation_residuals(build_rep_su2(0.5, 0.3, 16));
	CHECK(interior.interior_max <= 1e-12);
	CHECK(interior.relations.size() == 5);

	for (double q : {0.3, 0.5, 0.8})
		CHECK(relation_residuals(build_rep_su2(q, 1.1, 32)).interior_max <= 1e-10);

	auto small = relation_residuals(build_rep_su2(0.5, 0.0, 4));
	CHECK(small.boundary_max > 0);
	CHECK(small.interior_max <= 1e-12);

	auto ch = relation_residuals(character_rep(0.7));
	CHECK(ch.interior_max <= 1e-15);
	CHECK(ch.boundary_max == 0);
}

TEST_CASE("character constraints")
{
	auto r = character_constraints(0.5);
	CHECK(r.verdict == ConstraintVerdict::pass);
	CHECK(r.gamma_sq.is_zero());
	CHECK(r.alpha_sq == Rational(1));
	CHECK(r.determinant == Rational(-3, 4));
	CHECK(character_constraints(1.0).verdict == ConstraintVerdict::inconclusive);
	CHECK_THROWS_AS(character_constraints(0.0), InputError);

	std::mt19937_64 rng(2);
	std::uniform_real_distribution<double> u(-1, 1);
	for (int i = 0; i < 50; ++i)
	{
		std::complex<double> g(u(rng), u(rng));
		if (std::abs(g) < 1e-3)
			continue;
		std::complex<double> a(u(rng), u(rng));
		CHECK(scalar_relation_residual(0.5, a, g) > 1e-8);
	}
	CHECK(scalar_relation_residual(0.5, std::polar(1.0, 0.4), 0.0) < 1e-15);
}

TEST_CASE("joint kernel rank")
{
	CHECK(pbw_monomials(2).size() == 14);
	CHECK(pbw_monomials(0) == std::vector<std::string>{"1"});
	auto full = joint_kernel_rank(0.5, 2, 5, 16);
	CHECK(full.monomials == 14);
	CHECK(full.full_rank);
	CHECK(joint_kernel_rank(0.5, 0, 3, 16).rank == 1);
	auto chars = joint_kernel_rank(0.5, 2, 1, 16, true);
	CHECK(!chars.full_rank);

	std::size_t previous = 0;
	for (std::size_t s = 1; s <= 6; ++s)
	{
		auto r = joint_kernel_rank(0.5, 3, s, 12);
		CHECK(r.rank >= previous);
		previous = r.rank;
	}
	CHECK_THROWS_AS(joint_kernel_rank(0.5, 5, 3, 16), InputError);
}
