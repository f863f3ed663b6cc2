#include "orbit/cyclic/entire.hpp"

#include "orbit/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace orbit::cyclic {

NormSequence NormSequence::finite(std::vector<Rational> values)
{
	for (auto const &v : values)
		if (v.sign() < 0)
			throw InputError("norm sequence: values must be nonnegative");
	NormSequence s;
	s.m_kind = Kind::finite;
	s.m_values = std::move(values);
	s.m_label = "finite";
	return s;
}

NormSequence NormSequence::factorial_quotient(Rational r, Rational s, std::vector<FactorialFactor> factors)
{
	if (r.sign() < 0 || s.sign() < 0)
		throw InputError("norm sequence: scale and base must be nonnegative");
	for (auto const &f : factors)
		if (f.divisor == 0)
			throw InputError("norm sequence: factorial divisor must be positive");
	NormSequence q;
	q.m_kind = Kind::factorial_quotient;
	q.m_scale = std::move(r);
	q.m_base = std::move(s);
	// merge equal divisors and drop cancelled factors
	for (auto const &f : factors)
	{
		bool merged = false;
		for (auto &g : q.m_factors)
			if (g.divisor == f.divisor)
			{
				g.exponent += f.exponent;
				merged = true;
			}
		if (!merged)
			q.m_factors.push_back(f);
	}
	std::erase_if(q.m_factors, [](FactorialFactor const &f) { return f.exponent == 0; });
	q.m_label = "factorial-quotient";
	return q;
}

NormSequence NormSequence::sampled(std::function<double(std::size_t)> values, std::string label)
{
	NormSequence s;
	s.m_kind = Kind::sampled;
	s.m_sampler = std::move(values);
	s.m_label = std::move(label);
	return s;
}

namespace {

struct PatternParser
{
	std::string const &text;
	std::size_t pos = 0;

	[[noreturn]] void fail(std::string const &what) const
	{
		throw InputError("norm pattern '" + text + "': " + what + " at position " + std::to_string(pos));
	}

	bool at_end() const { return pos >= text.size(); }
	char peek() const { return at_end() ? '\0' : text[pos]; }

	bool consume(std::string_view word)
	{
		if (text.compare(pos, word.size(), word) == 0)
		{
			pos += word.size();
			return true;
		}
		return false;
	}

	unsigned read_unsigned()
	{
		std::size_t start = pos;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			++pos;
		if (start == pos)
			fail("expected a number");
		return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
	}

	std::string read_until(char close)
	{
		std::size_t end = text.find(close, pos);
		if (end == std::string::npos)
			fail(std::string("missing '") + close + "'");
		std::string inner = text.substr(pos, end - pos);
		pos = end + 1;
		return inner;
	}
};

} // namespace

NormSequence NormSequence::parse(std::string const &pattern)
{
	std::string compact;
	for (char c : pattern)
		if (!std::isspace(static_cast<unsigned char>(c)))
			compact += c;
	if (compact.empty())
		throw InputError("norm pattern is empty");

	PatternParser p{compact};
	if (p.consume("finite("))
	{
		std::string inner = p.read_until(')');
		if (!p.at_end())
			p.fail("trailing characters");
		std::vector<Rational> values;
		std::size_t start = 0;
		while (start <= inner.size())
		{
			std::size_t comma = inner.find(',', start);
			std::string item = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
			if (!item.empty())
				values.push_back(Rational::parse(item));
			if (comma == std::string::npos)
				break;
			start = comma + 1;
		}
		NormSequence s = finite(std::move(values));
		s.m_label = pattern;
		return s;
	}

	Rational r(1), base(1);
	std::vector<FactorialFactor> factors;
	int sign = 1;
	while (true)
	{
		if (p.consume("pow("))
		{
			Rational s = Rational::parse(p.read_until(')'));
			if (sign < 0)
			{
				if (s.is_zero())
					p.fail("division by pow(0)");
				s = Rational(1) / s;
			}
			base *= s;
		}
		else if (std::isdigit(static_cast<unsigned char>(p.peek())))
		{
			Rational c(static_cast<long>(p.read_unsigned()));
			if (sign < 0)
			{
				if (c.is_zero())
					p.fail("division by zero");
				c = Rational(1) / c;
			}
			r *= c;
		}
		else
		{
			unsigned divisor = 0;
			if (p.consume("floor-half-fact"))
				divisor = 2;
			else if (p.consume("floor-"))
			{
				divisor = p.read_unsigned();
				if (divisor == 0)
					p.fail("floor divisor must be positive");
				if (!p.consume("-fact"))
					p.fail("expected '-fact'");
			}
			else if (p.consume("fact"))
				divisor = 1;
			else
				p.fail("unknown token");
			int power = 1;
			if (p.consume("^"))
				power = static_cast<int>(p.read_unsigned());
			factors.push_back({divisor, sign * power});
		}
		if (p.at_end())
			break;
		if (p.consume("*"))
			sign = 1;
		else if (p.consume("/"))
			sign = -1;
		else
			p.fail("expected '*' or '/'");
	}
	NormSequence s = factorial_quotient(r, base, std::move(factors));
	s.m_label = pattern;
	return s;
}

std::optional<Rational> NormSequence::exact(std::size_t n) const
{
	switch (m_kind)
	{
	case Kind::finite: return n < m_values.size() ? m_values[n] : Rational(0);
	case Kind::sampled: return std::nullopt;
	case Kind::factorial_quotient: break;
	}
	Rational v = m_scale * pow(m_base, static_cast<unsigned>(n));
	for (auto const &f : m_factors)
	{
		Rational p = pow(Rational(factorial(static_cast<unsigned>(n / f.divisor))),
		                 static_cast<unsigned>(std::abs(f.exponent)));
		v = f.exponent > 0 ? v * p : v / p;
	}
	return v;
}

double NormSequence::log_value(std::size_t n) const
{
	double const neg_inf = -std::numeric_limits<double>::infinity();
	switch (m_kind)
	{
	case Kind::finite:
	{
		if (n >= m_values.size() || m_values[n].is_zero())
			return neg_inf;
		return std::log(m_values[n].to_double());
	}
	case Kind::sampled:
	{
		double v = m_sampler(n);
		if (!(v >= 0))
			throw InputError("norm sequence '" + m_label + "': negative or NaN value at n = " + std::to_string(n));
		return v == 0 ? neg_inf : std::log(v);
	}
	case Kind::factorial_quotient: break;
	}
	if (m_scale.is_zero() || (m_base.is_zero() && n > 0))
		return neg_inf;
	double v = std::log(m_scale.to_double());
	if (n > 0)
		v += static_cast<double>(n) * std::log(m_base.to_double());
	for (auto const &f : m_factors)
		v += f.exponent * std::lgamma(static_cast<double>(n / f.divisor) + 1.0);
	return v;
}

std::string to_string(EntiretyVerdict v)
{
	switch (v)
	{
	case EntiretyVerdict::entire: return "entire";
	case EntiretyVerdict::not_entire: return "not-entire";
	case EntiretyVerdict::inconclusive: return "inconclusive";
	}
	return "?";
}

namespace {

double log_weight(std::size_t n)
{
	return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(n / 2) + 1.0);
}

} // namespace

EntiretyReport entirety(NormSequence const &s, std::size_t horizon)
{
	if (horizon < 8)
		throw InputError("entirety: horizon must be at least 8");
	EntiretyReport report;

	for (std::size_t n = horizon / 2; n <= horizon; ++n)
	{
		double lv = s.log_value(n);
		report.root_trend.push_back(std::isinf(lv) ? 0.0 : std::exp((lv + log_weight(n)) / static_cast<double>(n)));
	}
	if (s.kind() != NormSequence::Kind::sampled)
		for (std::size_t n = 0; n <= std::min<std::size_t>(horizon, 12); ++n)
			report.weighted.push_back(*s.exact(n) * Rational(factorial(static_cast<unsigned>(n))) /
			                         Rational(factorial(static_cast<unsigned>(n / 2))));

	switch (s.kind())
	{
	case NormSequence::Kind::finite:
		report.method = "finite-support";
		report.verdict = EntiretyVerdict::entire;
		return report;

	case NormSequence::Kind::factorial_quotient:
	{
		report.method = "symbolic-root-test";
		if (s.scale().is_zero() || s.base().is_zero())
		{
			report.verdict = EntiretyVerdict::entire;
			return report;
		}
		// c_n = r s^n prod (floor(n/d)!)^e with the weight folded in as fact / floor-half-fact;
		// (floor(n/d)!)^{1/n} ~ (n / (d e))^{1/d}, so c_n^{1/n} ~ |s| prod d^{-e/d} n^E, E = sum e/d
		std::vector<FactorialFactor> all = s.factors();
		all.push_back({1, 1});
		all.push_back({2, -1});
		Rational exponent(0);
		double limit = s.base().to_double();
		for (auto const &f : all)
		{
			exponent += Rational(f.exponent, static_cast<long>(f.divisor));
			limit *= std::pow(static_cast<double>(f.divisor), -static_cast<double>(f.exponent) / f.divisor);
		}
		report.exponent = exponent;
		if (exponent.sign() < 0)
			report.verdict = EntiretyVerdict::entire;
		else if (exponent.sign() > 0)
			report.verdict = EntiretyVerdict::not_entire;
		else
		{
			report.root_limit = limit;
			report.verdict = EntiretyVerdict::not_entire;
		}
		return report;
	}

	case NormSequence::Kind::sampled: break;
	}

	// numeric root test: fit c_n^{1/n} ~ C n^beta over the tail and require a monotone trend
	report.method = "numeric-root-test";
	auto const &t = report.root_trend;
	bool nonincreasing = true, nondecreasing = true;
	// the floor(n/2)! weight makes odd and even n alternate, so compare within each parity
	for (std::size_t k = 2; k < t.size(); ++k)
	{
		nonincreasing = nonincreasing && t[k] <= t[k - 2];
		nondecreasing = nondecreasing && t[k] >= t[k - 2];
	}
	if (t.back() == 0.0 && nonincreasing)
	{
		report.verdict = EntiretyVerdict::entire;
		return report;
	}
	if (!nonincreasing && !nondecreasing)
		return report;
	if (t.front() <= 0.0)
		return report;
	double const beta = std::log(t.back() / t.front()) /
	                    std::log(static_cast<double>(horizon) / static_cast<double>(horizon / 2));
	if (nonincreasing && beta <= -0.25)
		report.verdict = EntiretyVerdict::entire;
	else if (nondecreasing || std::abs(beta) < 0.05)
		report.verdict = EntiretyVerdict::not_entire;
	return report;
}

} // namespace orbit::cyclic
