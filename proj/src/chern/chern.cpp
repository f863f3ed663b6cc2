#include "orbit/chern/chern.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

namespace orbit::chern {

BigInt phi(long n, long k, long q)
{
	if (k < 1 || n < 0 || q < 1)
		throw InputError("phi requires k >= 1, n >= 0, q >= 1");
	BigInt total = 0;
	for (long i = 1; i <= k; ++i)
	{
		BigInt power;
		mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(q - 1));
		BigInt term = binomial(n, k - i) * power;
		total += (i % 2 == 1) ? term : BigInt(-term);
	}
	return total;
}

Family parse_family(std::string_view name)
{
	if (name == "SU" || name == "A")
		return Family::SU;
	if (name == "SO" || name == "SO_odd" || name == "B")
		return Family::SO_odd;
	if (name == "Sp" || name == "C")
		return Family::Sp;
	throw InputError("unknown group family '" + std::string(name) + "' (expected SU, SO or Sp)");
}

std::string family_name(Family f)
{
	switch (f)
	{
	case Family::SU: return "SU";
	case Family::SO_odd: return "SO";
	case Family::Sp: return "Sp";
	}
	return "?";
}

std::string group_name(Family f, long rank)
{
	switch (f)
	{
	case Family::SU: return "SU(" + std::to_string(rank + 1) + ")";
	case Family::SO_odd: return "SO(" + std::to_string(2 * rank + 1) + ")";
	case Family::Sp: return "Sp(" + std::to_string(rank) + ")";
	}
	return "?";
}

namespace {

void check_rank(long rank)
{
	if (rank < 1 || rank > 64)
		throw InputError("rank must be between 1 and 64, got " + std::to_string(rank));
}

} // namespace

RingModels ring_models(Family f, long rank)
{
	check_rank(rank);
	std::string const g = group_name(f, rank);
	RingModels m{{g, "K", {}}, {g, "H", {}}};
	for (long i = 1; i <= rank; ++i)
		m.k_theory.generators.push_back({"beta(rho_" + std::to_string(i) + ")", 1});
	if (f == Family::SO_odd)
		m.k_theory.generators.push_back({"epsilon_" + std::to_string(2 * rank + 1), 1});
	for (long i = 1; i <= rank; ++i)
	{
		long const d = f == Family::SU ? 2 * i + 1 : 4 * i - 1;
		m.cohomology.generators.push_back({"x_" + std::to_string(d), d});
	}
	return m;
}

ChernMatrix chern_matrix(Family f, long rank)
{
	check_rank(rank);
	long const n = rank;
	ChernMatrix m;
	m.group = group_name(f, n);
	for (auto const &g : ring_models(f, n).cohomology.generators)
		m.column_labels.push_back(g.label);

	if (f == Family::SU)
	{
		for (long k = 1; k <= n; ++k)
		{
			m.row_labels.push_back("beta(rho_" + std::to_string(k) + ")");
			std::vector<Rational> row;
			for (long i = 1; i <= n; ++i)
			{
				Rational c(i % 2 ? -1 : 1);
				row.push_back(c / Rational(factorial(static_cast<unsigned>(i))) * Rational(phi(n + 1, k, i + 1)));
			}
			m.entries.push_back(std::move(row));
		}
	}
	else if (f == Family::SO_odd)
	{
		auto odd_fact = [](long i) { return Rational(factorial(static_cast<unsigned>(2 * i - 1))); };
		for (long k = 1; k <= n - 1; ++k)
		{
			m.row_labels.push_back("beta(lambda_" + std::to_string(k) + ")");
			std::vector<Rational> row;
			for (long i = 1; i <= n; ++i)
			{
				Rational c(i % 2 ? 2 : -2);
				row.push_back(c / odd_fact(i) * Rational(phi(2 * n + 1, k, 2 * i)));
			}
			m.entries.push_back(std::move(row));
		}
		m.row_labels.push_back("epsilon_" + std::to_string(2 * n + 1));
		Rational const spin_scale = Rational(1) / pow(Rational(2), static_cast<unsigned>(n - 1));
		std::vector<Rational> row;
		for (long i = 1; i <= n; ++i)
		{
			BigInt sum = 0;
			for (long k = 1; k <= n; ++k)
				sum += phi(2 * n + 1, k, 2 * i);
			Rational c(i % 2 ? 1 : -1);
			row.push_back(c * spin_scale / odd_fact(i) * Rational(sum));
		}
		m.entries.push_back(std::move(row));
	}
	else
		throw InputError("chern_matrix: no coefficient formula for " + m.group);

	ExactMatrix dense(m.entries.size(), m.column_labels.size());
	for (std::size_t r = 0; r < m.entries.size(); ++r)
		for (std::size_t c = 0; c < m.column_labels.size(); ++c)
			dense(r, c) = GaussRational(m.entries[r][c]);
	m.rank = orbit::rank(dense);
	m.square = dense.rows() == dense.cols();
	if (m.square)
		m.determinant = determinant(dense).re();
	m.invertible = m.square && !m.determinant.is_zero();
	return m;
}

} // namespace orbit::chern
