#include "orbit/quantize/diff_op.hpp"

#include "orbit/errors.hpp"

namespace orbit::quantize {

PolyDiffOp PolyDiffOp::identity(std::size_t nvars)
{
	return multiplication(Poly::constant(nvars, HbarPoly(1)));
}

PolyDiffOp PolyDiffOp::multiplication(Poly const &f)
{
	PolyDiffOp op(f.nvars());
	op.add_term(Monomial(f.nvars(), 0), f);
	return op;
}

PolyDiffOp PolyDiffOp::derivative(std::size_t nvars, std::size_t var)
{
	if (var >= nvars)
		throw InputError("derivative: variable index out of range");
	PolyDiffOp op(nvars);
	Monomial d(nvars, 0);
	d[var] = 1;
	op.add_term(d, Poly::constant(nvars, HbarPoly(1)));
	return op;
}

unsigned PolyDiffOp::order() const
{
	unsigned best = 0;
	for (auto const &[d, c] : m_terms)
		best = std::max(best, Poly::total_degree(d));
	return best;
}

void PolyDiffOp::add_term(Monomial const &derivatives, Poly const &coefficient)
{
	if (derivatives.size() != m_nvars || coefficient.nvars() != m_nvars)
		throw InputError("differential operator: variable count mismatch");
	if (coefficient.is_zero())
		return;
	auto [it, inserted] = m_terms.try_emplace(derivatives, coefficient);
	if (!inserted)
	{
		it->second += coefficient;
		if (it->second.is_zero())
			m_terms.erase(it);
	}
}

PolyDiffOp &PolyDiffOp::operator+=(PolyDiffOp const &o)
{
	for (auto const &[d, c] : o.m_terms)
		add_term(d, c);
	return *this;
}

PolyDiffOp &PolyDiffOp::operator-=(PolyDiffOp const &o)
{
	for (auto const &[d, c] : o.m_terms)
		add_term(d, -c);
	return *this;
}

namespace {

// d^gamma f
Poly differentiate(Poly f, Monomial const &gamma)
{
	for (std::size_t v = 0; v < gamma.size() && !f.is_zero(); ++v)
		for (unsigned k = 0; k < gamma[v]; ++k)
			f = f.derivative(v);
	return f;
}

} // namespace

PolyDiffOp operator*(PolyDiffOp const &a, PolyDiffOp const &b)
{
	if (a.m_nvars != b.m_nvars)
		throw InputError("differential operator: variable count mismatch");
	std::size_t const n = a.m_nvars;
	PolyDiffOp out(n);
	// a d^alpha b d^beta = sum_{gamma <= alpha} C(alpha, gamma) a (d^gamma b) d^{alpha - gamma + beta}
	for (auto const &[alpha, ca] : a.m_terms)
		for (auto const &[beta, cb] : b.m_terms)
		{
			Monomial gamma(n, 0);
			while (true)
			{
				Rational weight(1);
				Monomial shift(n);
				for (std::size_t v = 0; v < n; ++v)
				{
					weight *= Rational(binomial(alpha[v], gamma[v]));
					shift[v] = alpha[v] - gamma[v] + beta[v];
				}
				Poly dcb = differentiate(cb, gamma);
				if (!dcb.is_zero())
					out.add_term(shift, (ca * dcb).scaled(HbarPoly(weight)));
				// next gamma in the box [0, alpha]
				std::size_t v = 0;
				while (v < n && gamma[v] == alpha[v])
					gamma[v++] = 0;
				if (v == n)
					break;
				++gamma[v];
			}
		}
	return out;
}

PolyDiffOp PolyDiffOp::scaled(HbarPoly const &s) const
{
	PolyDiffOp out(m_nvars);
	for (auto const &[d, c] : m_terms)
		out.add_term(d, c.scaled(s));
	return out;
}

PolyDiffOp PolyDiffOp::map_scalars(std::function<HbarPoly(HbarPoly const &)> const &f) const
{
	PolyDiffOp out(m_nvars);
	for (auto const &[d, c] : m_terms)
	{
		Poly mapped(m_nvars);
		for (auto const &[mono, s] : c.terms())
			mapped.add_term(mono, f(s));
		out.add_term(d, mapped);
	}
	return out;
}

Poly PolyDiffOp::apply(Poly const &u) const
{
	Poly out(m_nvars);
	for (auto const &[d, c] : m_terms)
		out += c * differentiate(u, d);
	return out;
}

std::string PolyDiffOp::str(std::vector<std::string> const &names) const
{
	if (m_terms.empty())
		return "0";
	std::string out;
	for (auto const &[d, c] : m_terms)
	{
		if (!out.empty())
			out += " + ";
		out += "(" + c.str(names) + ")";
		for (std::size_t v = 0; v < m_nvars; ++v)
		{
			if (d[v] == 0)
				continue;
			out += "*D[" + (v < names.size() ? names[v] : "x" + std::to_string(v)) + "]";
			if (d[v] > 1)
				out += "^" + std::to_string(d[v]);
		}
	}
	return out;
}

PolyDiffOp commutator(PolyDiffOp const &a, PolyDiffOp const &b)
{
	return a * b - b * a;
}

} // namespace orbit::quantize
