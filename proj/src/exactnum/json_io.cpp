#include "orbit/exactnum/json_io.hpp"

#include "orbit/errors.hpp"

namespace orbit {

Json to_json(Rational const &r) { return r.str(); }

Json to_json(GaussRational const &z) { return Json{{"re", z.re().str()}, {"im", z.im().str()}}; }

Json to_json(ExactVector const &v)
{
	Json out = Json::array();
	for (auto const &z : v)
		out.push_back(to_json(z));
	return out;
}

Json to_json(ExactMatrix const &m)
{
	Json out = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		out.push_back(to_json(m.row(r)));
	return out;
}

Rational rational_from_json(Json const &j)
{
	if (j.is_string())
		return Rational::parse(j.get<std::string>());
	if (j.is_number_integer())
		return Rational(j.get<long>());
	throw InputError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

GaussRational gauss_from_json(Json const &j)
{
	if (j.is_object())
	{
		Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
		Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
		return {re, im};
	}
	return GaussRational(rational_from_json(j));
}

} // namespace orbit
