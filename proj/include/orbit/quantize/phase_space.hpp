#pragma once

#include "orbit/exactnum/hbar_poly.hpp"
#include "orbit/exactnum/polynomial.hpp"

#include <string>
#include <vector>

namespace orbit::quantize {

/// Polynomial on R^{2n} in q1..qn, p1..pn (variables 0..n-1 are q, n..2n-1 are p)
/// with coefficients in Q(i)[hbar].
using Poly = MPoly<HbarPoly>;

/// One-form sum_k a_k dx_k, components ordered dq1..dqn, dp1..dpn.
using OneForm = std::vector<Poly>;

/// Vector field sum_k v_k d/dx_k, same component order.
using VectorField = std::vector<Poly>;

/// Symplectic model R^{2n} with omega = sum dq_i ∧ dp_i.
struct PhaseSpace
{
	std::size_t n = 1;

	std::size_t nvars() const { return 2 * n; }
	std::size_t q(std::size_t i) const { return i; }
	std::size_t p(std::size_t i) const { return n + i; }
	std::vector<std::string> names() const;

	Poly zero() const { return Poly(nvars()); }
	Poly constant(HbarPoly const &c) const { return Poly::constant(nvars(), c); }
	Poly variable(std::size_t v) const { return Poly::variable(nvars(), v); }

	/// Grammar: sums and differences of products of integers, variables q1..qn, p1..pn
	/// (q and p when n = 1), the symbols i and hbar, parenthesized groups and
	/// nonnegative integer powers; division only by nonzero constants.
	/// Throws InputError on malformed text or unknown symbols.
	Poly parse(std::string const &text) const;

	/// Same grammar with dq1..dqn, dp1..dpn (dq, dp when n = 1); every term must
	/// contain exactly one differential, e.g. "p1*dq1 - 1/2*q1*dp1".
	OneForm parse_one_form(std::string const &text) const;

	std::string str(Poly const &f) const { return f.str(names()); }
	std::string str(OneForm const &form) const;
};

/// Smallest n such that every q<k>/p<k>/dq<k>/dp<k> symbol in the texts has k <= n (at least 1).
std::size_t infer_degrees_of_freedom(std::vector<std::string> const &texts);

} // namespace orbit::quantize
