#include "orbit/exactnum/rational.hpp"

#include "orbit/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace orbit {

Rational::Rational(BigInt const &num, BigInt const &den)
{
	if (den == 0)
		throw InputError("Rational: zero denominator");
	m_value = mpq_class(num, den);
	m_value.canonicalize();
}

Rational Rational::from_double(double v)
{
	if (!std::isfinite(v))
		throw InputError("Rational::from_double: non-finite value");
	return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.erase(s.begin());
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.pop_back();
	if (s.empty())
		throw InputError("Rational::parse: empty string");
	auto slash = s.find('/');
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	auto valid = [](std::string const &t) {
		std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
		if (start >= t.size())
			return false;
		for (std::size_t k = start; k < t.size(); ++k)
			if (!std::isdigit(static_cast<unsigned char>(t[k])))
				return false;
		return true;
	};
	if (!valid(num) || !valid(den))
		throw InputError("Rational::parse: malformed rational '" + s + "'");
	if (num[0] == '+')
		num.erase(num.begin());
	if (den[0] == '+')
		den.erase(den.begin());
	return Rational(BigInt(num), BigInt(den));
}

Rational &Rational::operator/=(Rational const &o)
{
	if (o.is_zero())
		throw InputError("Rational: division by zero");
	m_value /= o.m_value;
	return *this;
}

std::ostream &operator<<(std::ostream &os, Rational const &r) { return os << r.str(); }

Rational abs(Rational const &r) { return r.sign() < 0 ? -r : r; }

Rational pow(Rational const &base, unsigned exponent)
{
	Rational result(1);
	for (unsigned k = 0; k < exponent; ++k)
		result *= base;
	return result;
}

BigInt factorial(unsigned n)
{
	BigInt r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

BigInt binomial(long n, long k)
{
	if (k < 0 || n < 0 || k > n)
		return 0;
	BigInt r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

} // namespace orbit
