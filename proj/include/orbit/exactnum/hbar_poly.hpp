#pragma once

#include "orbit/exactnum/gauss.hpp"

#include <map>
#include <string>

namespace orbit {

/// Polynomial in a formal symbol hbar with Q(i) coefficients.
/// Zero coefficients are never stored.
class HbarPoly
{
public:
	using Terms = std::map<unsigned, GaussRational>;

	HbarPoly() = default;
	HbarPoly(int c) : HbarPoly(GaussRational(c)) {}
	HbarPoly(Rational c) : HbarPoly(GaussRational(std::move(c))) {}
	HbarPoly(GaussRational c);

	static HbarPoly hbar(unsigned power = 1);

	Terms const &terms() const { return m_terms; }
	bool is_zero() const { return m_terms.empty(); }
	GaussRational coefficient(unsigned power) const;
	/// Largest stored exponent; 0 for the zero polynomial.
	unsigned degree() const;

	/// Exact division by hbar; throws InternalError if the constant term is nonzero.
	HbarPoly divided_by_hbar() const;

	HbarPoly &operator+=(HbarPoly const &o);
	HbarPoly &operator-=(HbarPoly const &o);
	HbarPoly &operator*=(HbarPoly const &o);

	friend HbarPoly operator+(HbarPoly a, HbarPoly const &b) { return a += b; }
	friend HbarPoly operator-(HbarPoly a, HbarPoly const &b) { return a -= b; }
	friend HbarPoly operator*(HbarPoly const &a, HbarPoly const &b)
	{
		HbarPoly r = a;
		return r *= b;
	}
	HbarPoly operator-() const;

	friend bool operator==(HbarPoly const &a, HbarPoly const &b) = default;

	std::string str() const;

private:
	void add_term(unsigned power, GaussRational const &c);

	Terms m_terms;
};

} // namespace orbit
