#include "orbit/exactnum/hbar_poly.hpp"

#include "orbit/errors.hpp"

namespace orbit {

HbarPoly::HbarPoly(GaussRational c) { add_term(0, c); }

HbarPoly HbarPoly::hbar(unsigned power)
{
	HbarPoly p;
	p.add_term(power, GaussRational(1));
	return p;
}

GaussRational HbarPoly::coefficient(unsigned power) const
{
	auto it = m_terms.find(power);
	return it == m_terms.end() ? GaussRational() : it->second;
}

unsigned HbarPoly::degree() const { return m_terms.empty() ? 0 : m_terms.rbegin()->first; }

HbarPoly HbarPoly::divided_by_hbar() const
{
	HbarPoly r;
	for (auto const &[k, c] : m_terms)
	{
		if (k == 0)
			throw InternalError("HbarPoly: constant term " + c.str() + " is not divisible by hbar");
		r.m_terms.emplace(k - 1, c);
	}
	return r;
}

void HbarPoly::add_term(unsigned power, GaussRational const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = m_terms.try_emplace(power, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			m_terms.erase(it);
	}
}

HbarPoly &HbarPoly::operator+=(HbarPoly const &o)
{
	for (auto const &[k, c] : o.m_terms)
		add_term(k, c);
	return *this;
}

HbarPoly &HbarPoly::operator-=(HbarPoly const &o)
{
	for (auto const &[k, c] : o.m_terms)
		add_term(k, -c);
	return *this;
}

HbarPoly &HbarPoly::operator*=(HbarPoly const &o)
{
	HbarPoly r;
	for (auto const &[ka, ca] : m_terms)
		for (auto const &[kb, cb] : o.m_terms)
			r.add_term(ka + kb, ca * cb);
	m_terms = std::move(r.m_terms);
	return *this;
}

HbarPoly HbarPoly::operator-() const
{
	HbarPoly r;
	for (auto const &[k, c] : m_terms)
		r.m_terms.emplace(k, -c);
	return r;
}

std::string HbarPoly::str() const
{
	if (m_terms.empty())
		return "0";
	std::string out;
	for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it)
	{
		if (!out.empty())
			out += " + ";
		std::string c = it->second.str();
		if (it->first == 0)
			out += c;
		else
		{
			std::string h = it->first == 1 ? "hbar" : "hbar^" + std::to_string(it->first);
			out += (it->second == GaussRational(1)) ? h : "(" + c + ")*" + h;
		}
	}
	return out;
}

} // namespace orbit
