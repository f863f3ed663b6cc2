#include "orbit/affine/affine.hpp"

#include "orbit/errors.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace orbit::affine {

namespace {

constexpr double alignment_tolerance = 1e-9;

GridFunction random_function(LogGrid const &grid, std::size_t margin, std::mt19937_64 &rng)
{
	std::uniform_real_distribution<double> u(-1.0, 1.0);
	GridFunction f(grid.size());
	std::size_t const n = grid.branch_size();
	for (std::size_t i = 0; i < f.size(); ++i)
	{
		std::size_t k = i % n;
		if (k >= margin && k + margin < n)
			f[i] = {u(rng), u(rng)};
	}
	return f;
}

} // namespace

AffineElement::AffineElement(double a_, double b_) : a(a_), b(b_)
{
	if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b))
		throw InputError("affine element needs a finite nonzero dilation");
}

LogGrid::LogGrid(double half_size, double step) : L_(half_size), h_(step)
{
	if (!(L_ > 0) || !(h_ > 0))
		throw InputError("log grid needs L > 0 and h > 0");
	double ratio = L_ / h_;
	if (std::abs(ratio - std::round(ratio)) > alignment_tolerance * std::max(1.0, ratio))
		throw InputError("log grid needs L/h integral");
	if (ratio > 1e7)
		throw InputError("log grid too fine");
	n_ = 2 * static_cast<std::size_t>(std::llround(ratio)) + 1;
}

double LogGrid::node(std::size_t index) const
{
	if (index >= size())
		throw InputError("grid index out of range");
	std::size_t k = index % n_;
	double u = -L_ + static_cast<double>(k) * h_;
	return index < n_ ? std::exp(u) : -std::exp(u);
}

long LogGrid::shift_of(double a) const
{
	if (a == 0.0 || !std::isfinite(a))
		throw InputError("dilation must be finite and nonzero");
	double m = std::log(std::abs(a)) / h_;
	long nearest = std::lround(m);
	if (std::abs(m - static_cast<double>(nearest)) > alignment_tolerance)
	{
		std::ostringstream msg;
		msg.precision(17);
		msg << "dilation a=" << a << " is not grid-aligned; nearest aligned a=" << std::copysign(aligned(nearest), a);
		throw InputError(msg.str());
	}
	return nearest;
}

double LogGrid::aligned(long m) const
{
	return std::exp(static_cast<double>(m) * h_);
}

double LogGrid::norm_squared(GridFunction const &f) const
{
	if (f.size() != size())
		throw InputError("grid function size mismatch");
	double s = 0;
	for (auto const &z : f)
		s += std::norm(z);
	return s * h_;
}

GridFunction rep_S(AffineElement const &g, LogGrid const &grid, GridFunction const &f)
{
	if (f.size() != grid.size())
		throw InputError("grid function size mismatch");
	long const m = grid.shift_of(g.a);
	long const n = static_cast<long>(grid.branch_size());
	bool const swap = g.a < 0;
	GridFunction out(f.size());
	for (std::size_t i = 0; i < f.size(); ++i)
	{
		long branch = static_cast<long>(i) / n;
		long k = static_cast<long>(i) % n;
		long target_branch = swap ? 1 - branch : branch;
		long target = ((k + m) % n + n) % n;
		auto value = f[static_cast<std::size_t>(target_branch * n + target)];
		if (g.b != 0.0)
		{
			auto phase = std::polar(1.0L, static_cast<long double>(g.b) * grid.node(i));
			value *= std::complex<double>(static_cast<double>(phase.real()), static_cast<double>(phase.imag()));
		}
		out[i] = value;
	}
	return out;
}

double max_abs_difference(GridFunction const &x, GridFunction const &y)
{
	if (x.size() != y.size())
		throw InputError("grid function size mismatch");
	double r = 0;
	for (std::size_t i = 0; i < x.size(); ++i)
		r = std::max(r, std::abs(x[i] - y[i]));
	return r;
}

double verify_homomorphism(AffineElement const &g1, AffineElement const &g2, LogGrid const &grid,
                           std::size_t trials, std::uint64_t seed)
{
	auto const margin = static_cast<std::size_t>(std::labs(grid.shift_of(g1.a)) + std::labs(grid.shift_of(g2.a)));
	if (2 * margin >= grid.branch_size())
		throw InputError("dilations too large for the grid");
	auto const g12 = g1 * g2;
	std::mt19937_64 rng(seed);
	double r = 0;
	for (std::size_t t = 0; t < trials; ++t)
	{
		auto f = random_function(grid, margin, rng);
		r = std::max(r, max_abs_difference(rep_S(g1, grid, rep_S(g2, grid, f)), rep_S(g12, grid, f)));
	}
	return r;
}

double verify_unitarity(AffineElement const &g, LogGrid const &grid, std::size_t trials, std::uint64_t seed)
{
	grid.shift_of(g.a);
	std::mt19937_64 rng(seed);
	double r = 0;
	for (std::size_t t = 0; t < trials; ++t)
	{
		auto f = random_function(grid, 0, rng);
		r = std::max(r, std::abs(grid.norm_squared(rep_S(g, grid, f)) - grid.norm_squared(f)));
	}
	return r;
}

std::complex<double> character_U(double lambda, int epsilon, AffineElement const &g)
{
	if (epsilon != 0 && epsilon != 1)
		throw InputError("character sign exponent must be 0 or 1");
	if (g.a == 0.0)
		throw InputError("dilation must be nonzero");
	auto value = std::polar(1.0, lambda * std::log(std::abs(g.a)));
	return (epsilon == 1 && g.a < 0) ? -value : value;
}

IndexMetadata index_metadata()
{
	return {};
}

SuiteReport run_suite(LogGrid const &grid, SuiteConfig const &config)
{
	if (config.max_shift < 0)
		throw InputError("max_shift must be nonnegative");
	std::mt19937_64 rng(config.seed);
	std::uniform_int_distribution<long> shift(-config.max_shift, config.max_shift);
	std::uniform_real_distribution<double> translation(-config.max_translation, config.max_translation);
	std::uniform_real_distribution<double> lambda(-config.max_lambda, config.max_lambda);
	std::bernoulli_distribution coin(0.5);

	auto draw = [&] {
		double a = grid.aligned(shift(rng));
		return AffineElement(coin(rng) ? -a : a, translation(rng));
	};

	SuiteReport report;
	report.pairs = config.pairs;
	for (std::size_t p = 0; p < config.pairs; ++p)
	{
		auto g1 = draw();
		auto g2 = draw();
		std::uint64_t sub = rng();
		report.homomorphism_residual = std::max(report.homomorphism_residual, verify_homomorphism(g1, g2, grid, 1, sub));
		report.unitarity_residual = std::max(report.unitarity_residual, verify_unitarity(g1, grid, 1, sub));
		double l = lambda(rng);
		for (int eps : {0, 1})
		{
			auto lhs = character_U(l, eps, g1 * g2);
			auto rhs = character_U(l, eps, g1) * character_U(l, eps, g2);
			report.character_residual = std::max(report.character_residual, std::abs(lhs - rhs));
		}
	}
	return report;
}

} // namespace orbit::affine
