#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

using Monomial = std::vector<unsigned>;

/// Sparse commutative polynomial in a fixed number of variables with
/// coefficients in an exact ring R (Rational, GaussRational, HbarPoly).
/// Zero coefficients are never stored.
template <typename R>
class MPoly
{
public:
	using Terms = std::map<Monomial, R>;

	explicit MPoly(std::size_t nvars = 0) : m_nvars(nvars) {}

	static MPoly constant(std::size_t nvars, R const &c)
	{
		MPoly p(nvars);
		p.add_term(Monomial(nvars, 0), c);
		return p;
	}

	static MPoly variable(std::size_t nvars, std::size_t var, unsigned power = 1)
	{
		if (var >= nvars)
			throw std::out_of_range("MPoly::variable: index out of range");
		Monomial m(nvars, 0);
		m[var] = power;
		MPoly p(nvars);
		p.add_term(m, R(1));
		return p;
	}

	std::size_t nvars() const { return m_nvars; }
	Terms const &terms() const { return m_terms; }
	bool is_zero() const { return m_terms.empty(); }

	bool is_constant() const
	{
		return m_terms.empty() || (m_terms.size() == 1 && total_degree(m_terms.begin()->first) == 0);
	}

	R constant_term() const
	{
		auto it = m_terms.find(Monomial(m_nvars, 0));
		return it == m_terms.end() ? R(0) : it->second;
	}

	unsigned degree() const
	{
		unsigned d = 0;
		for (auto const &[m, c] : m_terms)
			d = std::max(d, total_degree(m));
		return d;
	}

	void add_term(Monomial const &m, R const &c)
	{
		if (m.size() != m_nvars)
			throw std::invalid_argument("MPoly: monomial arity mismatch");
		if (c.is_zero())
			return;
		auto [it, inserted] = m_terms.try_emplace(m, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				m_terms.erase(it);
		}
	}

	MPoly &operator+=(MPoly const &o)
	{
		check_arity(o);
		for (auto const &[m, c] : o.m_terms)
			add_term(m, c);
		return *this;
	}

	MPoly &operator-=(MPoly const &o)
	{
		check_arity(o);
		for (auto const &[m, c] : o.m_terms)
			add_term(m, -c);
		return *this;
	}

	friend MPoly operator+(MPoly a, MPoly const &b) { return a += b; }
	friend MPoly operator-(MPoly a, MPoly const &b) { return a -= b; }

	friend MPoly operator*(MPoly const &a, MPoly const &b)
	{
		a.check_arity(b);
		MPoly r(a.m_nvars);
		Monomial m(a.m_nvars);
		for (auto const &[ma, ca] : a.m_terms)
			for (auto const &[mb, cb] : b.m_terms)
			{
				for (std::size_t v = 0; v < a.m_nvars; ++v)
					m[v] = ma[v] + mb[v];
				r.add_term(m, ca * cb);
			}
		return r;
	}

	MPoly &operator*=(MPoly const &o) { return *this = *this * o; }

	MPoly scaled(R const &s) const
	{
		MPoly r(m_nvars);
		for (auto const &[m, c] : m_terms)
			r.add_term(m, c * s);
		return r;
	}

	MPoly operator-() const { return scaled(R(-1)); }

	MPoly derivative(std::size_t var) const
	{
		MPoly r(m_nvars);
		for (auto const &[m, c] : m_terms)
		{
			if (m[var] == 0)
				continue;
			Monomial d = m;
			--d[var];
			r.add_term(d, c * R(static_cast<int>(m[var])));
		}
		return r;
	}

	R evaluate(std::span<R const> point) const
	{
		if (point.size() != m_nvars)
			throw std::invalid_argument("MPoly::evaluate: point arity mismatch");
		R total(0);
		for (auto const &[m, c] : m_terms)
		{
			R term = c;
			for (std::size_t v = 0; v < m_nvars; ++v)
				for (unsigned e = 0; e < m[v]; ++e)
					term *= point[v];
			total += term;
		}
		return total;
	}

	friend bool operator==(MPoly const &a, MPoly const &b) = default;

	/// Human-readable form, e.g. "2*q1^2*p1 + 1/2". Terms in descending monomial order.
	std::string str(std::vector<std::string> const &names) const
	{
		if (m_terms.empty())
			return "0";
		std::ostringstream os;
		bool first = true;
		for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it)
		{
			if (!first)
				os << " + ";
			first = false;
			std::string mono;
			for (std::size_t v = 0; v < m_nvars; ++v)
			{
				if (it->first[v] == 0)
					continue;
				if (!mono.empty())
					mono += "*";
				mono += v < names.size() ? names[v] : "x" + std::to_string(v);
				if (it->first[v] > 1)
					mono += "^" + std::to_string(it->first[v]);
			}
			std::string coeff = "(" + it->second.str() + ")";
			if (mono.empty())
				os << coeff;
			else if (it->second == R(1))
				os << mono;
			else
				os << coeff << "*" << mono;
		}
		return os.str();
	}

	static unsigned total_degree(Monomial const &m)
	{
		unsigned d = 0;
		for (unsigned e : m)
			d += e;
		return d;
	}

private:
	void check_arity(MPoly const &o) const
	{
		if (o.m_nvars != m_nvars)
			throw std::invalid_argument("MPoly: variable count mismatch");
	}

	std::size_t m_nvars;
	Terms m_terms;
};

} // namespace orbit
