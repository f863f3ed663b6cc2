#include "orbit/exactnum/gauss.hpp"

#include "orbit/errors.hpp"

#include <ostream>

namespace orbit {

GaussRational GaussRational::inverse() const
{
	Rational n = norm();
	if (n.is_zero())
		throw InputError("GaussRational: inverse of zero");
	return {m_re / n, -m_im / n};
}

GaussRational &GaussRational::operator+=(GaussRational const &o)
{
	m_re += o.m_re;
	m_im += o.m_im;
	return *this;
}

GaussRational &GaussRational::operator-=(GaussRational const &o)
{
	m_re -= o.m_re;
	m_im -= o.m_im;
	return *this;
}

GaussRational &GaussRational::operator*=(GaussRational const &o)
{
	if (m_im.is_zero() && o.m_im.is_zero())
	{
		m_re *= o.m_re;
		return *this;
	}
	Rational re = m_re * o.m_re - m_im * o.m_im;
	Rational im = m_re * o.m_im + m_im * o.m_re;
	m_re = std::move(re);
	m_im = std::move(im);
	return *this;
}

std::string GaussRational::str() const
{
	if (m_im.is_zero())
		return m_re.str();
	std::string imag = m_im == Rational(1) ? "i" : (m_im == Rational(-1) ? "-i" : m_im.str() + "i");
	if (m_re.is_zero())
		return imag;
	return m_re.str() + (m_im.sign() > 0 ? "+" : "") + imag;
}

std::ostream &operator<<(std::ostream &os, GaussRational const &z) { return os << z.str(); }

bool lex_less(GaussRational const &a, GaussRational const &b)
{
	if (a.re() != b.re())
		return a.re() < b.re();
	return a.im() < b.im();
}

} // namespace orbit
