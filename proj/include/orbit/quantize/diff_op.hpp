#pragma once

#include "orbit/quantize/phase_space.hpp"

#include <functional>

namespace orbit::quantize {

/// Differential operator sum_a c_a(x) d^a with polynomial coefficients written
/// to the left of the derivatives. Like terms are merged and zero coefficients
/// dropped, so equal operators compare equal.
class PolyDiffOp
{
public:
	using Terms = std::map<Monomial, Poly>;

	explicit PolyDiffOp(std::size_t nvars = 0) : m_nvars(nvars) {}

	static PolyDiffOp identity(std::size_t nvars);
	static PolyDiffOp multiplication(Poly const &f);
	static PolyDiffOp derivative(std::size_t nvars, std::size_t var);

	std::size_t nvars() const { return m_nvars; }
	Terms const &terms() const { return m_terms; }
	bool is_zero() const { return m_terms.empty(); }
	/// Highest total derivative order; 0 for the zero operator.
	unsigned order() const;

	void add_term(Monomial const &derivatives, Poly const &coefficient);

	PolyDiffOp &operator+=(PolyDiffOp const &o);
	PolyDiffOp &operator-=(PolyDiffOp const &o);
	friend PolyDiffOp operator+(PolyDiffOp a, PolyDiffOp const &b) { return a += b; }
	friend PolyDiffOp operator-(PolyDiffOp a, PolyDiffOp const &b) { return a -= b; }
	/// Composition: (A * B) u = A(B u).
	friend PolyDiffOp operator*(PolyDiffOp const &a, PolyDiffOp const &b);
	friend bool operator==(PolyDiffOp const &a, PolyDiffOp const &b) = default;

	PolyDiffOp scaled(HbarPoly const &s) const;
	/// Applies a transformation to every scalar coefficient.
	PolyDiffOp map_scalars(std::function<HbarPoly(HbarPoly const &)> const &f) const;

	Poly apply(Poly const &u) const;

	/// e.g. "(q1) + (-1i*hbar)*D[p1]".
	std::string str(std::vector<std::string> const &names) const;

private:
	std::size_t m_nvars;
	Terms m_terms;
};

PolyDiffOp commutator(PolyDiffOp const &a, PolyDiffOp const &b);

} // namespace orbit::quantize
