#pragma once

#include "orbit/exactnum/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orbit::cyclic {

/// (floor(n / divisor)!)^exponent
struct FactorialFactor
{
	unsigned divisor = 1;
	int exponent = 1;
	friend bool operator==(FactorialFactor const &, FactorialFactor const &) = default;
};

/// Closed-form description of n ↦ ||f_n||.
class NormSequence
{
public:
	enum class Kind { finite, factorial_quotient, sampled };

	/// ||f_n|| = values[n] for n < size, zero afterwards.
	static NormSequence finite(std::vector<Rational> values);
	/// ||f_n|| = r · s^n · prod_j (floor(n/d_j)!)^{e_j}.
	static NormSequence factorial_quotient(Rational r, Rational s, std::vector<FactorialFactor> factors);
	/// Arbitrary nonnegative values, classified numerically.
	static NormSequence sampled(std::function<double(std::size_t)> values, std::string label);

	/// Parses a pattern such as "floor-half-fact/fact", "1/fact", "pow(1/2)*fact^2/floor-3-fact"
	/// or "finite(1,1/2,3)". Tokens: integers, fact, floor-half-fact, floor-K-fact, pow(s),
	/// each factorial optionally raised to ^k; combined left to right with * and /.
	static NormSequence parse(std::string const &pattern);

	Kind kind() const { return m_kind; }
	Rational const &scale() const { return m_scale; }
	Rational const &base() const { return m_base; }
	std::vector<FactorialFactor> const &factors() const { return m_factors; }
	std::vector<Rational> const &finite_values() const { return m_values; }
	std::string const &label() const { return m_label; }

	/// Exact value; empty for sampled sequences.
	std::optional<Rational> exact(std::size_t n) const;
	/// Natural log of the value, -inf for zero. Avoids overflow for large n.
	double log_value(std::size_t n) const;

private:
	Kind m_kind = Kind::finite;
	Rational m_scale{1};
	Rational m_base{1};
	std::vector<FactorialFactor> m_factors;
	std::vector<Rational> m_values;
	std::function<double(std::size_t)> m_sampler;
	std::string m_label;
};

enum class EntiretyVerdict { entire, not_entire, inconclusive };
std::string to_string(EntiretyVerdict v);

struct EntiretyReport
{
	EntiretyVerdict verdict = EntiretyVerdict::inconclusive;
	/// "finite-support", "symbolic-root-test" or "numeric-root-test"
	std::string method;
	/// Growth exponent E with c_n^{1/n} ~ L · n^E (symbolic path only).
	std::optional<Rational> exponent;
	/// lim c_n^{1/n} when E = 0 (symbolic path only); the radius of convergence is 1/L.
	std::optional<double> root_limit;
	/// c_n^{1/n} for n = horizon/2 .. horizon.
	std::vector<double> root_trend;
	/// Exact weighted norms c_n for n = 0..min(horizon, 12), when available.
	std::vector<Rational> weighted;
};

/// Decides whether sum_n (n!/floor(n/2)!) ||f_n|| z^n has infinite radius of
/// convergence. Throws InputError if horizon < 8.
EntiretyReport entirety(NormSequence const &s, std::size_t horizon);

} // namespace orbit::cyclic
