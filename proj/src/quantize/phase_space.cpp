#include "orbit/quantize/phase_space.hpp"

#include "orbit/errors.hpp"

#include <cctype>
#include <map>
#include <regex>

namespace orbit::quantize {

std::vector<std::string> PhaseSpace::names() const
{
	std::vector<std::string> out;
	for (std::size_t i = 0; i < n; ++i)
		out.push_back("q" + std::to_string(i + 1));
	for (std::size_t i = 0; i < n; ++i)
		out.push_back("p" + std::to_string(i + 1));
	return out;
}

namespace {

class Parser
{
public:
	Parser(std::string const &text, std::map<std::string, std::size_t> symbols, std::size_t nvars)
	    : m_text(text), m_symbols(std::move(symbols)), m_nvars(nvars)
	{
	}

	Poly run()
	{
		skip();
		if (at_end())
			fail("empty expression");
		Poly v = expr();
		if (!at_end())
			fail("unexpected character '" + std::string(1, m_text[m_pos]) + "'");
		return v;
	}

private:
	[[noreturn]] void fail(std::string const &what) const
	{
		throw InputError("polynomial '" + m_text + "': " + what + " at position " + std::to_string(m_pos));
	}
	bool at_end() const { return m_pos >= m_text.size(); }
	void skip()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
			++m_pos;
	}
	bool accept(char c)
	{
		skip();
		if (!at_end() && m_text[m_pos] == c)
		{
			++m_pos;
			skip();
			return true;
		}
		return false;
	}

	Poly expr()
	{
		Poly v = term();
		while (true)
		{
			if (accept('+'))
				v += term();
			else if (accept('-'))
				v -= term();
			else
				return v;
		}
	}

	Poly term()
	{
		Poly v = unary();
		while (true)
		{
			if (accept('*'))
				v *= unary();
			else if (accept('/'))
			{
				Poly d = unary();
				if (!d.is_constant() || d.is_zero() || d.constant_term().degree() != 0)
					fail("division is only allowed by nonzero constants");
				v = v.scaled(HbarPoly(d.constant_term().coefficient(0).inverse()));
			}
			else
				return v;
		}
	}

	Poly unary()
	{
		if (accept('-'))
			return -unary();
		if (accept('+'))
			return unary();
		return power();
	}

	Poly power()
	{
		Poly base = atom();
		if (accept('^'))
		{
			unsigned e = number();
			Poly out = Poly::constant(m_nvars, HbarPoly(1));
			for (unsigned k = 0; k < e; ++k)
				out *= base;
			return out;
		}
		return base;
	}

	unsigned number()
	{
		skip();
		std::size_t start = m_pos;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
			++m_pos;
		if (start == m_pos)
			fail("expected a number");
		std::string digits = m_text.substr(start, m_pos - start);
		if (digits.size() > 9)
			fail("number too large");
		skip();
		return static_cast<unsigned>(std::stoul(digits));
	}

	Poly atom()
	{
		skip();
		if (at_end())
			fail("unexpected end of input");
		char c = m_text[m_pos];
		if (accept('('))
		{
			Poly v = expr();
			if (!accept(')'))
				fail("missing ')'");
			return v;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
			return Poly::constant(m_nvars, HbarPoly(Rational(static_cast<long>(number()))));
		if (std::isalpha(static_cast<unsigned char>(c)))
		{
			std::size_t start = m_pos;
			while (!at_end() && std::isalnum(static_cast<unsigned char>(m_text[m_pos])))
				++m_pos;
			std::string name = m_text.substr(start, m_pos - start);
			skip();
			if (name == "i")
				return Poly::constant(m_nvars, HbarPoly(GaussRational::i()));
			if (name == "hbar")
				return Poly::constant(m_nvars, HbarPoly::hbar());
			auto it = m_symbols.find(name);
			if (it == m_symbols.end())
				fail("unknown symbol '" + name + "'");
			return Poly::variable(m_nvars, it->second);
		}
		fail("unexpected character '" + std::string(1, c) + "'");
	}

	std::string const &m_text;
	std::map<std::string, std::size_t> m_symbols;
	std::size_t m_nvars;
	std::size_t m_pos = 0;
};

std::map<std::string, std::size_t> base_symbols(PhaseSpace const &ps, std::string const &prefix, std::size_t offset)
{
	std::map<std::string, std::size_t> symbols;
	for (std::size_t i = 0; i < ps.n; ++i)
	{
		symbols[prefix + "q" + std::to_string(i + 1)] = offset + ps.q(i);
		symbols[prefix + "p" + std::to_string(i + 1)] = offset + ps.p(i);
	}
	if (ps.n == 1)
	{
		symbols[prefix + "q"] = offset + ps.q(0);
		symbols[prefix + "p"] = offset + ps.p(0);
	}
	return symbols;
}

} // namespace

Poly PhaseSpace::parse(std::string const &text) const
{
	return Parser(text, base_symbols(*this, "", 0), nvars()).run();
}

OneForm PhaseSpace::parse_one_form(std::string const &text) const
{
	std::size_t const nv = nvars();
	auto symbols = base_symbols(*this, "", 0);
	symbols.merge(base_symbols(*this, "d", nv));
	Poly full = Parser(text, symbols, 2 * nv).run();

	OneForm form(nv, zero());
	for (auto const &[mono, coeff] : full.terms())
	{
		std::size_t slot = nv;
		unsigned differentials = 0;
		for (std::size_t k = nv; k < 2 * nv; ++k)
			if (mono[k] > 0)
			{
				differentials += mono[k];
				slot = k - nv;
			}
		if (differentials != 1)
			throw InputError("one-form '" + text + "': every term needs exactly one differential");
		Monomial base(mono.begin(), mono.begin() + static_cast<long>(nv));
		form[slot].add_term(base, coeff);
	}
	return form;
}

std::string PhaseSpace::str(OneForm const &form) const
{
	auto const vars = names();
	std::string out;
	for (std::size_t k = 0; k < form.size(); ++k)
	{
		if (form[k].is_zero())
			continue;
		if (!out.empty())
			out += " + ";
		out += "(" + str(form[k]) + ")*d" + vars[k];
	}
	return out.empty() ? "0" : out;
}

std::size_t infer_degrees_of_freedom(std::vector<std::string> const &texts)
{
	static std::regex const pattern(R"((?:^|[^A-Za-z0-9])d?[qp]([0-9]+))");
	std::size_t n = 1;
	for (auto const &t : texts)
		for (auto it = std::sregex_iterator(t.begin(), t.end(), pattern); it != std::sregex_iterator(); ++it)
			n = std::max<std::size_t>(n, std::stoul((*it)[1].str()));
	return n;
}

} // namespace orbit::quantize
