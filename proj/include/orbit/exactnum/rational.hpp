#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbit {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
class Rational
{
public:
	Rational() = default;
	Rational(long v) : m_value(v) {}
	Rational(int v) : m_value(v) {}
	Rational(long long v) : Rational(BigInt(std::to_string(v))) {}
	Rational(BigInt const &num) : m_value(num) {}
	Rational(BigInt const &num, BigInt const &den);
	Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
	explicit Rational(mpq_class v) : m_value(std::move(v)) { m_value.canonicalize(); }

	/// Exact binary value of a finite double.
	static Rational from_double(double v);

	/// Accepts "p", "-p", "p/q" (q != 0).
	static Rational parse(std::string_view text);

	BigInt numerator() const { return m_value.get_num(); }
	BigInt denominator() const { return m_value.get_den(); }
	mpq_class const &raw() const { return m_value; }

	bool is_zero() const { return sgn(m_value) == 0; }
	bool is_integer() const { return m_value.get_den() == 1; }
	int sign() const { return sgn(m_value); }
	double to_double() const { return m_value.get_d(); }

	/// "p/q", or "p" when the denominator is 1.
	std::string str() const { return m_value.get_str(); }

	Rational &operator+=(Rational const &o) { m_value += o.m_value; return *this; }
	Rational &operator-=(Rational const &o) { m_value -= o.m_value; return *this; }
	Rational &operator*=(Rational const &o) { m_value *= o.m_value; return *this; }
	Rational &operator/=(Rational const &o);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }
	Rational operator-() const { return Rational(mpq_class(-m_value)); }

	friend bool operator==(Rational const &a, Rational const &b) { return a.m_value == b.m_value; }
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		int c = cmp(a.m_value, b.m_value);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

private:
	mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, Rational const &r);

Rational abs(Rational const &r);

/// Integer power with non-negative exponent.
Rational pow(Rational const &base, unsigned exponent);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

} // namespace orbit
