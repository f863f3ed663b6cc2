#include "orbit/liealg/coadjoint.hpp"

#include "orbit/errors.hpp"
#include "orbit/exactnum/linalg.hpp"

namespace orbit::liealg {

ExactMatrix poisson_matrix(LieAlgebra const &l, Covector const &f)
{
	std::size_t const n = l.dim();
	if (f.size() != n)
		throw InputError("covector has " + std::to_string(f.size()) + " coordinates, algebra has dimension " +
		                 std::to_string(n));
	ExactMatrix b(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Rational s(0);
			for (std::size_t k = 0; k < n; ++k)
				if (!f[k].is_zero())
					s += l.c(i, j, k) * f[k];
			b(i, j) = GaussRational(s);
		}
	return b;
}

std::size_t orbit_dimension(LieAlgebra const &l, Covector const &f)
{
	return rank(poisson_matrix(l, f));
}

std::vector<ExactVector> stabilizer(LieAlgebra const &l, Covector const &f)
{
	// x in g_F iff sum_i x_i B_ij = 0 for all j
	return kernel_basis(poisson_matrix(l, f).transpose());
}

std::vector<ExactVector> hamiltonian_fields(LieAlgebra const &l, Covector const &f)
{
	ExactMatrix b = poisson_matrix(l, f);
	std::vector<ExactVector> fields;
	for (std::size_t k = 0; k < l.dim(); ++k)
	{
		ExactVector xi = b.row(k);
		for (auto &v : xi)
			v = -v;
		fields.push_back(std::move(xi));
	}
	return fields;
}

} // namespace orbit::liealg
