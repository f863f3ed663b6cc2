#include "orbit/quantize/quantization.hpp"

#include "orbit/errors.hpp"

namespace orbit::quantize {

VectorField hamiltonian_field(PhaseSpace const &ps, Poly const &f)
{
	VectorField xi(ps.nvars(), ps.zero());
	for (std::size_t i = 0; i < ps.n; ++i)
	{
		xi[ps.q(i)] = -f.derivative(ps.p(i));
		xi[ps.p(i)] = f.derivative(ps.q(i));
	}
	return xi;
}

OneForm contraction_residual(PhaseSpace const &ps, VectorField const &xi, Poly const &f)
{
	// i(xi) (dq ∧ dp) = xi^q dp - xi^p dq
	OneForm r(ps.nvars(), ps.zero());
	for (std::size_t i = 0; i < ps.n; ++i)
	{
		r[ps.q(i)] = f.derivative(ps.q(i)) - xi[ps.p(i)];
		r[ps.p(i)] = f.derivative(ps.p(i)) + xi[ps.q(i)];
	}
	return r;
}

Poly poisson(PhaseSpace const &ps, Poly const &f, Poly const &g)
{
	auto xi = hamiltonian_field(ps, f);
	Poly out = ps.zero();
	for (std::size_t k = 0; k < ps.nvars(); ++k)
		out += xi[k] * g.derivative(k);
	return out;
}

Poly pair(OneForm const &alpha, VectorField const &xi)
{
	if (alpha.size() != xi.size() || alpha.empty())
		throw InputError("pairing: one-form and vector field sizes differ");
	Poly out(alpha.front().nvars());
	for (std::size_t k = 0; k < alpha.size(); ++k)
		out += alpha[k] * xi[k];
	return out;
}

PolyDiffOp as_operator(PhaseSpace const &ps, VectorField const &xi)
{
	PolyDiffOp op(ps.nvars());
	for (std::size_t k = 0; k < ps.nvars(); ++k)
	{
		Monomial d(ps.nvars(), 0);
		d[k] = 1;
		op.add_term(d, xi[k]);
	}
	return op;
}

namespace {

void check_form(PhaseSpace const &ps, OneForm const &alpha)
{
	if (alpha.size() != ps.nvars())
		throw InputError("one-form has " + std::to_string(alpha.size()) + " components, expected " +
		                 std::to_string(ps.nvars()));
}

} // namespace

PolyDiffOp quantize_op(PhaseSpace const &ps, Poly const &f, OneForm const &alpha)
{
	check_form(ps, alpha);
	auto const xi = hamiltonian_field(ps, f);
	HbarPoly const minus_i_hbar = HbarPoly(-GaussRational::i()) * HbarPoly::hbar();
	PolyDiffOp q = PolyDiffOp::multiplication(f + pair(alpha, xi));
	q += as_operator(ps, xi).scaled(minus_i_hbar);
	return q;
}

CurvatureReport check_curvature(PhaseSpace const &ps, OneForm const &alpha)
{
	check_form(ps, alpha);
	CurvatureReport r;
	r.holds = true;
	for (std::size_t k = 0; k < ps.nvars(); ++k)
		for (std::size_t l = k + 1; l < ps.nvars(); ++l)
		{
			Poly e = alpha[l].derivative(k) - alpha[k].derivative(l);
			// omega(d/dq_i, d/dp_i) = 1
			if (k < ps.n && l == k + ps.n)
				e += ps.constant(HbarPoly(1));
			r.holds = r.holds && e.is_zero();
			r.residual.push_back(std::move(e));
		}
	return r;
}

DiracReport check_dirac(PhaseSpace const &ps, Poly const &f, Poly const &g, OneForm const &alpha)
{
	DiracReport r;
	r.lhs = quantize_op(ps, poisson(ps, f, g), alpha);
	PolyDiffOp comm = commutator(quantize_op(ps, f, alpha), quantize_op(ps, g, alpha));
	HbarPoly const i(GaussRational::i());
	r.rhs = comm.map_scalars([&](HbarPoly const &c) { return i * c.divided_by_hbar(); });
	r.residual = r.lhs - r.rhs;
	r.holds = r.residual.is_zero();
	return r;
}

CocycleReport action_cocycle(PhaseSpace const &ps, liealg::LieAlgebra const &l, std::vector<Poly> const &moment)
{
	std::size_t const n = l.dim();
	if (moment.size() != n)
		throw InputError("moment map has " + std::to_string(moment.size()) + " entries, algebra has dimension " +
		                 std::to_string(n));
	CocycleReport r;
	r.flat = true;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Poly c = poisson(ps, moment[i], moment[j]);
			for (std::size_t k = 0; k < n; ++k)
				if (!l.c(i, j, k).is_zero())
					c += moment[k].scaled(HbarPoly(l.c(i, j, k)));
			r.flat = r.flat && c.is_zero();
			r.table.push_back(std::move(c));
		}
	return r;
}

std::vector<Poly> monomials_up_to(PhaseSpace const &ps, unsigned max_degree)
{
	std::vector<Poly> out;
	std::size_t const nv = ps.nvars();
	Monomial m(nv, 0);
	while (true)
	{
		if (Poly::total_degree(m) <= max_degree)
		{
			Poly p(nv);
			p.add_term(m, HbarPoly(1));
			out.push_back(std::move(p));
		}
		std::size_t v = 0;
		while (v < nv && m[v] == max_degree)
			m[v++] = 0;
		if (v == nv)
			break;
		++m[v];
	}
	return out;
}

} // namespace orbit::quantize
