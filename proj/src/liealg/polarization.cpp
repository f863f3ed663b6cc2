#include "orbit/liealg/polarization.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

namespace orbit::liealg {

namespace {

std::vector<ExactVector> conjugates(std::vector<ExactVector> const &v)
{
	std::vector<ExactVector> out = v;
	for (auto &x : out)
		for (auto &c : x)
			c = c.conj();
	return out;
}

bool brackets_into(LieAlgebra const &l, std::vector<ExactVector> const &from, std::vector<ExactVector> const &with,
                   std::vector<ExactVector> const &target)
{
	for (auto const &x : from)
		for (auto const &y : with)
			if (!in_span(target, l.bracket(x, y), l.dim()))
				return false;
	return true;
}

} // namespace

std::vector<ExactVector> real_points(std::vector<ExactVector> const &v, std::size_t dim)
{
	std::vector<ExactVector> parts;
	for (auto const &x : v)
	{
		ExactVector re(dim), im(dim);
		for (std::size_t i = 0; i < dim; ++i)
		{
			re[i] = GaussRational(x[i].re());
			im[i] = GaussRational(x[i].im());
		}
		parts.push_back(std::move(re));
		parts.push_back(std::move(im));
	}
	return span_basis(parts, dim);
}

PolarizationReport check_polarization(LieAlgebra const &l, Covector const &f, std::vector<ExactVector> const &p)
{
	std::size_t const n = l.dim();
	for (auto const &v : p)
		if (v.size() != n)
			throw InputError("polarization: spanning vector has " + std::to_string(v.size()) +
			                 " coordinates, expected " + std::to_string(n));

	PolarizationReport r;
	auto const basis = span_basis(p, n);
	auto const g_f = stabilizer(l, f);
	r.dim_p = basis.size();
	r.dim_stabilizer = g_f.size();

	r.subalgebra = is_subalgebra(l, basis);
	r.contains_stabilizer = true;
	for (auto const &x : g_f)
		r.contains_stabilizer = r.contains_stabilizer && in_span(basis, x, n);
	r.a = r.subalgebra && r.contains_stabilizer;
	if (!r.subalgebra)
		r.failures.push_back("(a) p is not closed under the bracket");
	if (!r.contains_stabilizer)
		r.failures.push_back("(a) g_F is not contained in p");

	r.b_infinitesimal = brackets_into(l, g_f, basis, basis);
	if (!r.b_infinitesimal)
		r.failures.push_back("(b) [g_F, p] is not contained in p");

	auto const conj = conjugates(basis);
	auto sum = basis;
	sum.insert(sum.end(), conj.begin(), conj.end());
	auto const sum_basis = span_basis(sum, n);
	auto const m = real_points(sum_basis, n);
	auto const h = real_points(intersect(basis, conj, n), n);
	r.dim_m = m.size();
	r.dim_h = h.size();
	bool const complexifies = m.size() == sum_basis.size();
	bool const m_closed = is_subalgebra(l, m);
	r.c = complexifies && m_closed;
	if (!complexifies)
		r.failures.push_back("(c) p + conj(p) is not the complexification of its real points");
	if (!m_closed)
		r.failures.push_back("(c) m = (p + conj p) ∩ g is not a subalgebra");

	r.mixed_type.k = static_cast<long>(n) - static_cast<long>(r.dim_m);
	r.mixed_type.l = (static_cast<long>(r.dim_m) - static_cast<long>(r.dim_h)) / 2;
	r.mixed_type.m = static_cast<long>(r.dim_h) - static_cast<long>(r.dim_stabilizer);
	r.not_evaluated = {"(d) closedness of M0, H0, M, H", "(e) representation sigma0 of H0",
	                   "(f) Nelson conditions for rho"};
	return r;
}

} // namespace orbit::liealg
