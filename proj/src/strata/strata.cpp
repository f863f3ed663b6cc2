#include "orbit/strata/strata.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace orbit::strata {

std::vector<Covector> sample_covectors(std::size_t dim, SamplerConfig const &cfg)
{
	if (cfg.range < 0)
		throw InputError("sampler range must be nonnegative");
	std::mt19937_64 rng(cfg.seed);
	auto const width = static_cast<std::uint64_t>(2 * cfg.range + 1);
	std::vector<Covector> out(cfg.count, Covector(dim));
	for (auto &f : out)
		for (auto &x : f)
			x = Rational(static_cast<long>(rng() % width) - cfg.range);
	return out;
}

namespace {

ExactMatrix submatrix(ExactMatrix const &m, std::vector<std::size_t> const &rows, std::vector<std::size_t> const &cols)
{
	ExactMatrix s(rows.size(), cols.size());
	for (std::size_t r = 0; r < rows.size(); ++r)
		for (std::size_t c = 0; c < cols.size(); ++c)
			s(r, c) = m(rows[r], cols[c]);
	return s;
}

MinorWitness find_minor(ExactMatrix const &b)
{
	MinorWitness w;
	w.cols = row_echelon(b).pivots;
	w.rows = row_echelon(b.transpose()).pivots;
	w.value = w.rows.empty() ? Rational(1) : determinant(submatrix(b, w.rows, w.cols)).re();
	return w;
}

// every k-subset of {0..n-1}
void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> &out)
{
	std::vector<bool> mask(n, false);
	std::fill(mask.begin(), mask.begin() + static_cast<long>(std::min(k, n)), true);
	if (k > n)
		return;
	do
	{
		std::vector<std::size_t> s;
		for (std::size_t i = 0; i < n; ++i)
			if (mask[i])
				s.push_back(i);
		out.push_back(std::move(s));
	} while (std::prev_permutation(mask.begin(), mask.end()));
}

bool all_minors_vanish(ExactMatrix const &b, std::size_t k)
{
	std::vector<std::vector<std::size_t>> sets;
	subsets(b.rows(), k, sets);
	for (auto const &rows : sets)
		for (auto const &cols : sets)
			if (!determinant(submatrix(b, rows, cols)).is_zero())
				return false;
	return true;
}

} // namespace

std::vector<Stratum> stratify(LieAlgebra const &l, SamplerConfig const &cfg)
{
	if (cfg.count == 0)
		throw InputError("stratify: sample count must be at least 1");
	auto const samples = sample_covectors(l.dim(), cfg);
	std::map<std::size_t, Stratum, std::greater<>> by_dim;
	for (std::size_t s = 0; s < samples.size(); ++s)
	{
		ExactMatrix b = liealg::poisson_matrix(l, samples[s]);
		std::size_t const r = rank(b);
		Stratum &st = by_dim[r];
		st.dimension = r;
		st.samples.push_back(samples[s]);
		st.sample_indices.push_back(s);
		st.witnesses.push_back(find_minor(b));
		st.higher_minors_vanish = st.higher_minors_vanish && all_minors_vanish(b, r + 2);
	}
	std::vector<Stratum> out;
	for (auto &[d, st] : by_dim)
		out.push_back(std::move(st));
	return out;
}

MPoly<Rational> minor_polynomial(LieAlgebra const &l, std::vector<std::size_t> const &rows,
                                 std::vector<std::size_t> const &cols)
{
	std::size_t const n = l.dim();
	if (rows.size() != cols.size())
		throw InputError("minor_polynomial: minor must be square");
	std::size_t const k = rows.size();
	std::vector<MPoly<Rational>> entries(k * k, MPoly<Rational>(n));
	for (std::size_t r = 0; r < k; ++r)
		for (std::size_t c = 0; c < k; ++c)
			for (std::size_t t = 0; t < n; ++t)
				if (!l.c(rows[r], cols[c], t).is_zero())
					entries[r * k + c] += MPoly<Rational>::variable(n, t).scaled(l.c(rows[r], cols[c], t));

	// Leibniz expansion; minors here are at most dim x dim with dim small
	std::vector<std::size_t> perm(k);
	for (std::size_t i = 0; i < k; ++i)
		perm[i] = i;
	MPoly<Rational> det(n);
	do
	{
		int inversions = 0;
		for (std::size_t a = 0; a < k; ++a)
			for (std::size_t b = a + 1; b < k; ++b)
				inversions += perm[a] > perm[b];
		MPoly<Rational> term = MPoly<Rational>::constant(n, Rational(inversions % 2 ? -1 : 1));
		for (std::size_t r = 0; r < k && !term.is_zero(); ++r)
			term *= entries[r * k + perm[r]];
		det += term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return det;
}

GenericRank generic_rank(LieAlgebra const &l, SamplerConfig const &cfg)
{
	auto const strata = stratify(l, cfg);
	Stratum const &top = strata.front();
	GenericRank g;
	g.rank = top.dimension;
	g.point = top.samples.front();
	g.witness = top.witnesses.front();
	g.minor = minor_polynomial(l, g.witness.rows, g.witness.cols);
	g.minor_text = g.minor.str(l.basis());
	Rational const value = g.minor.evaluate(std::span<Rational const>(g.point));
	g.cross_checked = !value.is_zero() && value == g.witness.value;
	return g;
}

FoliationReport foliation_check(LieAlgebra const &l, Stratum const &s)
{
	if (s.samples.empty())
		throw InputError("foliation_check: stratum has no samples");
	FoliationReport report;
	for (std::size_t i = 0; i < s.samples.size(); ++i)
	{
		auto const fields = liealg::hamiltonian_fields(l, s.samples[i]);
		ExactMatrix const b = liealg::poisson_matrix(l, s.samples[i]);
		std::size_t const span = span_dimension(fields, l.dim());
		std::vector<ExactVector> both = fields;
		for (std::size_t c = 0; c < b.cols(); ++c)
			both.push_back(b.column(c));
		std::string const at = " at sample " + std::to_string(s.sample_indices.empty() ? i : s.sample_indices[i]);
		if (span != s.dimension)
			report.failures.push_back("distribution rank " + std::to_string(span) + " != " +
			                          std::to_string(s.dimension) + at);
		else if (span_dimension(both, l.dim()) != span || rank(b) != span)
			report.failures.push_back("distribution differs from the Poisson image" + at);
	}
	report.pass = report.failures.empty();
	return report;
}

TowerReport extension_tower(std::vector<Stratum> const &strata)
{
	TowerReport t;
	std::vector<std::size_t> dims;
	for (auto const &s : strata)
		if (s.dimension > 0)
			dims.push_back(s.dimension);
	std::sort(dims.begin(), dims.end(), std::greater<>());
	dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
	for (std::size_t i = 0; i < dims.size(); ++i)
	{
		std::string const d = std::to_string(dims[i]);
		t.extensions.push_back({dims[i], "C*(V_" + d + ",F_" + d + ")", "A_" + std::to_string(i + 1)});
	}
	t.note = "A_" + std::to_string(dims.size()) + " spectrum = Char(G)";
	return t;
}

std::vector<BigInt> compose_index(std::vector<std::vector<BigInt>> const &c, std::vector<BigInt> const &indices)
{
	std::vector<BigInt> out;
	for (std::size_t i = 0; i < c.size(); ++i)
	{
		if (c[i].size() != indices.size())
			throw InputError("compose_index: row " + std::to_string(i) + " has " + std::to_string(c[i].size()) +
			                 " entries, index vector has " + std::to_string(indices.size()));
		BigInt s = 0;
		for (std::size_t j = 0; j < indices.size(); ++j)
			s += c[i][j] * indices[j];
		out.push_back(s);
	}
	return out;
}

} // namespace orbit::strata
