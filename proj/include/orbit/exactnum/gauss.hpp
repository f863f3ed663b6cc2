#pragma once

#include "orbit/exactnum/rational.hpp"

#include <iosfwd>
#include <string>

namespace orbit {

/// Element re + i*im of Q(i).
class GaussRational
{
public:
	GaussRational() = default;
	GaussRational(int re) : m_re(re) {}
	GaussRational(long re) : m_re(re) {}
	GaussRational(Rational re) : m_re(std::move(re)) {}
	GaussRational(Rational re, Rational im) : m_re(std::move(re)), m_im(std::move(im)) {}

	static GaussRational i() { return {Rational(0), Rational(1)}; }

	Rational const &re() const { return m_re; }
	Rational const &im() const { return m_im; }

	bool is_zero() const { return m_re.is_zero() && m_im.is_zero(); }
	bool is_real() const { return m_im.is_zero(); }

	GaussRational conj() const { return {m_re, -m_im}; }
	/// re^2 + im^2
	Rational norm() const { return m_re * m_re + m_im * m_im; }
	GaussRational inverse() const;

	GaussRational &operator+=(GaussRational const &o);
	GaussRational &operator-=(GaussRational const &o);
	GaussRational &operator*=(GaussRational const &o);
	GaussRational &operator/=(GaussRational const &o) { return *this *= o.inverse(); }

	friend GaussRational operator+(GaussRational a, GaussRational const &b) { return a += b; }
	friend GaussRational operator-(GaussRational a, GaussRational const &b) { return a -= b; }
	friend GaussRational operator*(GaussRational a, GaussRational const &b) { return a *= b; }
	friend GaussRational operator/(GaussRational a, GaussRational const &b) { return a /= b; }
	GaussRational operator-() const { return {-m_re, -m_im}; }

	friend bool operator==(GaussRational const &a, GaussRational const &b) = default;

	/// "a", "a+bi", "bi" with a, b printed as exact rationals.
	std::string str() const;

private:
	Rational m_re;
	Rational m_im;
};

std::ostream &operator<<(std::ostream &os, GaussRational const &z);

// lexicographic on (re, im); only used to key ordered containers
bool lex_less(GaussRational const &a, GaussRational const &b);

} // namespace orbit
