#include "orbit/cyclic/trace.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

#include <random>

namespace orbit::cyclic {

GaussRational Trace::operator()(ExactVector const &a) const
{
	if (a.size() != coords.size())
		throw InputError("trace: dimension mismatch");
	GaussRational total;
	for (std::size_t i = 0; i < a.size(); ++i)
		total += coords[i] * a[i];
	return total;
}

Trace Trace::normalized_matrix_trace(std::size_t n)
{
	Trace t{ExactVector(n * n)};
	for (std::size_t a = 0; a < n; ++a)
		t.coords[a * n + a] = GaussRational(Rational(1, static_cast<long>(n)));
	return t;
}

Json Trace::to_json(Trace const &t)
{
	return orbit::to_json(t.coords);
}

Trace Trace::from_json(Json const &j)
{
	if (!j.is_array())
		throw InputError("trace: expected an array of coefficients");
	Trace t;
	for (auto const &v : j)
		t.coords.push_back(gauss_from_json(v));
	return t;
}

TraceReport verify_trace(FinAlgebra const &a, Trace const &tau, std::size_t samples, std::uint64_t seed)
{
	std::size_t const d = a.dim();
	if (tau.coords.size() != d)
		throw InputError("verify_trace: trace has " + std::to_string(tau.coords.size()) +
		                 " coefficients, algebra has dimension " + std::to_string(d));
	TraceReport report;
	report.samples = samples;

	report.normalized = tau(a.unit()) == GaussRational(1);
	if (!report.normalized)
		report.failures.push_back("normalization: tau(1) = " + tau(a.unit()).str());

	std::mt19937_64 rng(seed);
	report.positive = true;
	for (std::size_t s = 0; s < samples && report.positive; ++s)
	{
		ExactVector x(d);
		for (auto &c : x)
		{
			auto draw = [&] { return static_cast<long>(rng() % 7) - 3; };
			c = GaussRational(Rational(draw(), 1 + static_cast<long>(rng() % 3)), Rational(draw()));
		}
		GaussRational v = tau(a.multiply(a.star(x), x));
		if (!v.is_real() || v.re().sign() < 0)
		{
			report.positive = false;
			report.failures.push_back("positivity: tau(a*a) = " + v.str() + " on sample " + std::to_string(s));
		}
	}

	ExactMatrix gram(d, d);
	for (std::size_t i = 0; i < d; ++i)
	{
		ExactVector ei_star = a.star(a.basis_vector(i));
		for (std::size_t j = 0; j < d; ++j)
			gram(i, j) = tau(a.multiply(ei_star, a.basis_vector(j)));
	}
	report.gram_rank = rank(gram);
	report.strictly_positive = report.gram_rank == d;
	if (!report.strictly_positive)
		report.failures.push_back("strict positivity: Gram matrix has rank " + std::to_string(report.gram_rank) +
		                          " < " + std::to_string(d));

	report.ad_invariant = true;
	for (std::size_t i = 0; i < d && report.ad_invariant; ++i)
		for (std::size_t j = i + 1; j < d && report.ad_invariant; ++j)
		{
			GaussRational lhs = tau(a.multiply(a.basis_vector(i), a.basis_vector(j)));
			GaussRational rhs = tau(a.multiply(a.basis_vector(j), a.basis_vector(i)));
			if (lhs != rhs)
			{
				report.ad_invariant = false;
				report.failures.push_back("ad-invariance: tau(e" + std::to_string(i) + " e" + std::to_string(j) +
				                          ") != tau(e" + std::to_string(j) + " e" + std::to_string(i) + ")");
			}
		}
	return report;
}

} // namespace orbit::cyclic
