#include "orbit/qgroup/su2_model.hpp"

#include "orbit/errors.hpp"

#include <cmath>
#include <numbers>

namespace orbit::qgroup {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

std::vector<RepDescriptor> rep_catalog(WeylFamily f, std::size_t rank, std::size_t t_samples)
{
	if (t_samples == 0)
		throw InputError("rep_catalog: t_samples must be at least 1");
	std::vector<RepDescriptor> out;
	for (auto const &w : weyl_group(f, rank))
		for (std::size_t k = 0; k < t_samples; ++k)
			out.push_back({w, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(t_samples),
			               !w.is_identity()});
	return out;
}

TruncatedRep build_rep_su2(double q, double t, std::size_t truncation)
{
	if (!(q > 0 && q < 1))
		throw InputError("build_rep_su2: q must lie in (0, 1)");
	if (truncation < 4)
		throw InputError("build_rep_su2: truncation must be at least 4");
	auto const n = static_cast<Eigen::Index>(truncation);
	TruncatedRep r{q, t, truncation, false, Matrix::Zero(n, n), Matrix::Zero(n, n)};
	Complex const phase = std::polar(1.0, t);
	for (Eigen::Index k = 0; k < n; ++k)
	{
		double const qk = std::pow(q, static_cast<double>(k));
		r.c(k, k) = phase * qk;
		if (k > 0)
			r.a(k - 1, k) = std::sqrt(1 - qk * qk);
	}
	return r;
}

TruncatedRep character_rep(double t)
{
	TruncatedRep r{0, t, 1, true, Matrix::Constant(1, 1, std::polar(1.0, t)), Matrix::Zero(1, 1)};
	return r;
}

RelationReport relation_residuals(TruncatedRep const &r)
{
	Matrix const &a = r.a;
	Matrix const &c = r.c;
	Matrix const as = a.adjoint();
	Matrix const cs = c.adjoint();
	Matrix const id = Matrix::Identity(a.rows(), a.cols());
	double const q = r.q;
	std::vector<std::pair<std::string, Matrix>> rel = {
	    {"ac - q ca", a * c - q * c * a},
	    {"ac* - q c*a", a * cs - q * cs * a},
	    {"cc* - c*c", c * cs - cs * c},
	    {"a*a + c*c - 1", as * a + cs * c - id},
	    {"aa* + q^2 cc* - 1", a * as + q * q * c * cs - id},
	};
	RelationReport report;
	Eigen::Index const n = a.rows();
	for (auto const &[name, m] : rel)
	{
		RelationResidual res{name, 0, 0};
		for (Eigen::Index i = 0; i < n; ++i)
			for (Eigen::Index j = 0; j < n; ++j)
			{
				double const v = std::abs(m(i, j));
				bool const edge = !r.character && (i == n - 1 || j == n - 1);
				(edge ? res.boundary : res.interior) = std::max(edge ? res.boundary : res.interior, v);
			}
		report.interior_max = std::max(report.interior_max, res.interior);
		report.boundary_max = std::max(report.boundary_max, res.boundary);
		report.relations.push_back(std::move(res));
	}
	return report;
}

CharacterReport character_constraints(double q)
{
	if (!(q > 0 && q <= 1))
		throw InputError("character_constraints: q must lie in (0, 1]");
	CharacterReport r;
	r.q = Rational::from_double(q);
	Rational const q2 = r.q * r.q;
	r.determinant = q2 - Rational(1);
	if (r.determinant.is_zero())
		return r;
	// Cramer on [[1, 1], [1, q^2]] (A, G) = (1, 1)
	r.alpha_sq = (q2 - Rational(1)) / r.determinant;
	r.gamma_sq = (Rational(1) - Rational(1)) / r.determinant;
	r.verdict = r.gamma_sq.is_zero() && r.alpha_sq == Rational(1) ? ConstraintVerdict::pass
	                                                              : ConstraintVerdict::inconclusive;
	return r;
}

double scalar_relation_residual(double q, Complex alpha, Complex gamma)
{
	double const a2 = std::norm(alpha), g2 = std::norm(gamma);
	return std::max(std::abs(a2 + g2 - 1), std::abs(a2 + q * q * g2 - 1));
}

namespace {

struct PbwExponent
{
	bool adjoint_a;
	unsigned j, k, l;
};

std::vector<PbwExponent> pbw_exponents(unsigned degree)
{
	std::vector<PbwExponent> out;
	for (int adj = 0; adj < 2; ++adj)
		for (unsigned j = adj; j <= degree; ++j)
			for (unsigned k = 0; j + k <= degree; ++k)
				for (unsigned l = 0; j + k + l <= degree; ++l)
					out.push_back({adj == 1, j, k, l});
	return out;
}

Matrix power(Matrix const &m, unsigned e)
{
	Matrix out = Matrix::Identity(m.rows(), m.cols());
	for (unsigned i = 0; i < e; ++i)
		out = out * m;
	return out;
}

Matrix evaluate(PbwExponent const &e, TruncatedRep const &r)
{
	Matrix const lead = e.adjoint_a ? Matrix(r.a.adjoint()) : r.a;
	return power(lead, e.j) * power(r.c, e.k) * power(r.c.adjoint(), e.l);
}

} // namespace

std::vector<std::string> pbw_monomials(unsigned degree)
{
	std::vector<std::string> names;
	for (auto const &e : pbw_exponents(degree))
	{
		std::string s;
		auto add = [&](std::string const &g, unsigned p) {
			if (p == 0)
				return;
			if (!s.empty())
				s += " ";
			s += g + (p > 1 ? "^" + std::to_string(p) : "");
		};
		add(e.adjoint_a ? "a*" : "a", e.j);
		add("c", e.k);
		add("c*", e.l);
		names.push_back(s.empty() ? "1" : s);
	}
	return names;
}

KernelRankReport joint_kernel_rank(double q, unsigned degree, std::size_t t_samples, std::size_t truncation,
                                   bool characters_only)
{
	if (degree > 4)
		throw InputError("joint_kernel_rank: degree must be at most 4");
	if (t_samples == 0)
		throw InputError("joint_kernel_rank: t_samples must be at least 1");
	auto const exps = pbw_exponents(degree);
	KernelRankReport report;
	report.monomials = exps.size();

	double const golden = (std::sqrt(5.0) - 1) / 2;
	std::vector<TruncatedRep> reps;
	for (std::size_t i = 0; i < t_samples; ++i)
	{
		double frac = static_cast<double>(i) * golden;
		frac -= std::floor(frac);
		double const t = 2 * std::numbers::pi * frac;
		report.t_values.push_back(t);
		if (!characters_only)
			reps.push_back(build_rep_su2(q, t, truncation));
		reps.push_back(character_rep(t));
	}
	Eigen::Index width = 0;
	for (auto const &r : reps)
		width += r.a.size();
	Matrix stacked(static_cast<Eigen::Index>(exps.size()), width);
	for (std::size_t m = 0; m < exps.size(); ++m)
	{
		Eigen::Index col = 0;
		for (auto const &r : reps)
		{
			Matrix img = evaluate(exps[m], r);
			for (Eigen::Index k = 0; k < img.size(); ++k)
				stacked(static_cast<Eigen::Index>(m), col++) = img.data()[k];
		}
	}
	Eigen::JacobiSVD<Matrix> svd(stacked);
	auto const sv = svd.singularValues();
	double const top = sv.size() ? sv(0) : 0.0;
	for (Eigen::Index k = 0; k < sv.size(); ++k)
	{
		report.singular_values.push_back(sv(k));
		if (sv(k) > 1e-9 * top)
			++report.rank;
	}
	report.full_rank = report.rank == report.monomials;
	return report;
}

} // namespace orbit::qgroup
