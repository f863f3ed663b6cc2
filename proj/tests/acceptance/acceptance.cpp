#include "orbit/affine/affine.hpp"
#include "orbit/chern/chern.hpp"
#include "orbit/cyclic/chains.hpp"
#include "orbit/cyclic/entire.hpp"
#include "orbit/cyclic/homology.hpp"
#include "orbit/liealg/polarization.hpp"
#include "orbit/qgroup/su2_model.hpp"
#include "orbit/quantize/quantization.hpp"
#include "orbit/strata/strata.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace orbit;

namespace {

constexpr double homomorphism_tolerance = 1e-12;
constexpr double unitarity_tolerance = 1e-12;
constexpr double character_tolerance = 1e-12;
constexpr double su2_interior_tolerance = 1e-10;

struct Check
{
	bool ok = true;
	std::string first_failure;

	void expect(bool condition, std::string const &what)
	{
		if (!condition && ok)
			first_failure = what;
		ok = ok && condition;
	}
};

cyclic::FinAlgebra load_algebra(std::string const &name)
{
	std::ifstream in(std::string(ORBIT_SOURCE_DIR) + "/fixtures/" + name);
	return cyclic::FinAlgebra::from_json(Json::parse(in));
}

liealg::LieAlgebra load_lie(std::string const &name)
{
	std::ifstream in(std::string(ORBIT_SOURCE_DIR) + "/fixtures/" + name);
	return liealg::LieAlgebra::from_json(Json::parse(in));
}

void chern_coefficients(Check &c)
{
	using namespace chern;
	for (long n = 0; n <= 12; ++n)
		for (long q = 1; q <= 8; ++q)
			c.expect(phi(n, 1, q) == 1, "phi(n,1,q) = 1");
	c.expect(phi(3, 2, 2) == 1, "phi(3,2,2) = 1");
	c.expect(phi(3, 2, 3) == -1, "phi(3,2,3) = -1");

	auto su2 = chern_matrix(Family::SU, 1);
	c.expect(su2.entries == std::vector<std::vector<Rational>>{{Rational(-1)}}, "SU(2) matrix [-1]");
	auto su3 = chern_matrix(Family::SU, 2);
	std::vector<std::vector<Rational>> expected{{Rational(-1), Rational(1, 2)}, {Rational(-1), Rational(-1, 2)}};
	c.expect(su3.entries == expected, "SU(3) matrix");
	c.expect(su3.determinant == Rational(1), "SU(3) determinant 1");
	for (long n = 1; n <= 6; ++n)
		c.expect(chern_matrix(Family::SU, n).invertible, "SU(" + std::to_string(n + 1) + ") invertible");
}

void cyclic_homology(Check &c)
{
	std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> cases{
	    {"qi.json", {1, 0}}, {"qi2.json", {2, 0}}, {"m2.json", {1, 0}}};
	for (auto const &[file, hp] : cases)
	{
		auto a = load_algebra(file);
		auto at4 = cyclic::hp_homology(a, 4);
		auto at6 = cyclic::hp_homology(a, 6);
		c.expect(at4.hp_even == hp.first && at4.hp_odd == hp.second, a.name() + " HP at truncation 4");
		c.expect(at6.hp_even == hp.first && at6.hp_odd == hp.second, a.name() + " HP at truncation 6");
		c.expect(at6.stabilized, a.name() + " stabilized at truncation 6");
	}
	auto m = cyclic::morita_check(load_algebra("qi.json"), 2, 6);
	c.expect(m.verdict == cyclic::MoritaVerdict::pass, "morita_check(Q(i), 2)");
}

void operator_identities(Check &c)
{
	using cyclic::OperatorKind;
	std::mt19937_64 rng(20);
	for (auto const *file : {"qi.json", "qi2.json", "m2.json", "dual.json"})
	{
		auto a = load_algebra(file);
		auto op = [&](OperatorKind k, cyclic::Chain const &x) { return cyclic::apply_operator(a, k, x); };
		for (std::size_t level = 1; level <= 5; ++level)
			for (int s = 0; s < 100; ++s)
			{
				auto x = cyclic::Chain::zero(a, level);
				for (auto &v : x.coords)
					if (rng() % 3 == 0)
						v = GaussRational(Rational(static_cast<long>(rng() % 7) - 3),
						                  Rational(static_cast<long>(rng() % 3) - 1));
				std::string where = a.name() + " level " + std::to_string(level);
				c.expect(is_zero(op(OperatorKind::norm, op(OperatorKind::one_minus_lambda, x)).coords), "N(1-l) " + where);
				c.expect(is_zero(op(OperatorKind::one_minus_lambda, op(OperatorKind::norm, x)).coords), "(1-l)N " + where);
				if (level < 2)
					continue;
				auto lhs = op(OperatorKind::b, op(OperatorKind::one_minus_lambda, x));
				auto rhs = op(OperatorKind::one_minus_lambda, op(OperatorKind::b_prime, x));
				c.expect(lhs.coords == rhs.coords, "b(1-l) = (1-l)b' " + where);
				c.expect(is_zero(op(OperatorKind::b, op(OperatorKind::b, x)).coords), "b^2 " + where);
				c.expect(is_zero(op(OperatorKind::b_prime, op(OperatorKind::b_prime, x)).coords), "b'^2 " + where);
			}
	}
}

void quantization(Check &c)
{
	using namespace quantize;
	PhaseSpace ps{1};
	auto monos = monomials_up_to(ps, 3);
	auto dirac_all = [&](OneForm const &alpha) {
		for (std::size_t i = 0; i < monos.size(); ++i)
			for (std::size_t j = 0; j < monos.size(); ++j)
				if (!check_dirac(ps, monos[i], monos[j], alpha).holds)
					return false;
		return true;
	};
	auto flat = ps.parse_one_form("p*dq");
	c.expect(dirac_all(flat), "Dirac rule for all pairs with alpha = p dq");
	c.expect(check_curvature(ps, flat).holds, "curvature with alpha = p dq");
	auto scaled = ps.parse_one_form("2*p*dq");
	c.expect(!dirac_all(scaled), "Dirac rule fails with alpha = 2p dq");
	c.expect(!check_curvature(ps, scaled).holds, "curvature fails with alpha = 2p dq");
}

void stratification(Check &c)
{
	strata::SamplerConfig cfg{1, 1000, 3};
	auto dims = [&](liealg::LieAlgebra const &l) {
		std::set<std::size_t> d;
		for (auto const &s : strata::stratify(l, cfg))
		{
			d.insert(s.dimension);
			c.expect(s.dimension % 2 == 0, "even rank");
			c.expect(s.higher_minors_vanish, "higher minors vanish");
			c.expect(strata::foliation_check(l, s).pass, "foliation_check");
		}
		return d;
	};
	for (auto const *file : {"heisenberg.json", "aff1.json"})
	{
		auto l = load_lie(file);
		c.expect(dims(l) == std::set<std::size_t>{0, 2}, std::string(file) + " strata {2,0}");
		c.expect(strata::generic_rank(l, cfg).rank == 2, std::string(file) + " generic rank 2");
	}
	auto sl2 = load_lie("sl2.json");
	dims(sl2);
	c.expect(strata::generic_rank(sl2, cfg).rank == 2, "sl2 generic rank 2");
	c.expect(dims(load_lie("abelian3.json")) == std::set<std::size_t>{0}, "abelian strata {0}");
}

void polarization(Check &c)
{
	auto h3 = liealg::LieAlgebra::heisenberg();
	liealg::Covector f{Rational(0), Rational(0), Rational(1)};
	ExactVector X{GaussRational(1), GaussRational(0), GaussRational(0)};
	ExactVector Z{GaussRational(0), GaussRational(0), GaussRational(1)};
	ExactVector XiY{GaussRational(1), GaussRational(Rational(0), Rational(1)), GaussRational(0)};

	auto real = liealg::check_polarization(h3, f, {Z, X});
	c.expect(real.a && real.b_infinitesimal && real.c, "real polarization passes");
	c.expect(real.mixed_type == liealg::MixedType{1, 0, 1}, "real mixed type (1,0,1)");
	auto complex = liealg::check_polarization(h3, f, {Z, XiY});
	c.expect(complex.a && complex.b_infinitesimal && complex.c, "complex polarization passes");
	c.expect(complex.mixed_type == liealg::MixedType{0, 1, 0}, "complex mixed type (0,1,0)");
	c.expect(!liealg::check_polarization(h3, f, {X}).a, "span{X} fails (a)");
}

void affine_group(Check &c)
{
	affine::LogGrid grid(8, 0.0625);
	affine::SuiteConfig cfg;
	cfg.pairs = 1000;
	cfg.seed = 2024;
	auto r = affine::run_suite(grid, cfg);
	std::ostringstream os;
	os << "residuals " << r.homomorphism_residual << ", " << r.unitarity_residual << ", " << r.character_residual;
	c.expect(r.homomorphism_residual <= homomorphism_tolerance, "homomorphism " + os.str());
	c.expect(r.unitarity_residual <= unitarity_tolerance, "unitarity " + os.str());
	c.expect(r.character_residual <= character_tolerance, "character " + os.str());
	c.expect(affine::index_metadata().index == std::pair{1, 1}, "index (1,1)");
}

void quantum_group(Check &c)
{
	using namespace qgroup;
	for (auto [f, rank, order] : {std::tuple{WeylFamily::A, 2ul, 6ul}, std::tuple{WeylFamily::B, 2ul, 8ul}})
	{
		auto w = weyl_group(f, rank);
		c.expect(w.size() == order, "Weyl group order");
		for (auto const &e : w)
			c.expect(e.word.size() == e.length && evaluate_word(f, rank, e.word) == e.images, "reduced word");
	}
	for (auto [f, rank] : {std::pair{WeylFamily::A, 1ul}, std::pair{WeylFamily::A, 2ul}, std::pair{WeylFamily::A, 3ul},
	                       std::pair{WeylFamily::B, 2ul}, std::pair{WeylFamily::B, 3ul}})
		for (auto const &d : rep_catalog(f, rank, 3))
			c.expect((d.dimension() == "1") == d.w.is_identity(), "dimension dichotomy");
	for (double q : {0.3, 0.5, 0.8})
		c.expect(relation_residuals(build_rep_su2(q, 0.7, 32)).interior_max <= su2_interior_tolerance,
		         "SU_q(2) interior residual");
	auto ch = character_constraints(0.5);
	c.expect(ch.verdict == ConstraintVerdict::pass && ch.gamma_sq.is_zero() && ch.alpha_sq == Rational(1),
	         "character constraints");
	c.expect(joint_kernel_rank(0.5, 2, 5, 32).full_rank, "joint kernel rank full at degree 2");
}

void entirety(Check &c)
{
	using cyclic::EntiretyVerdict;
	auto verdict = [](std::string const &p) { return cyclic::entirety(cyclic::NormSequence::parse(p), 40).verdict; };
	c.expect(verdict("finite(1,5,2,7)") == EntiretyVerdict::entire, "finitely supported");
	c.expect(verdict("1/fact") == EntiretyVerdict::entire, "1/n!");
	c.expect(verdict("floor-half-fact/fact") == EntiretyVerdict::not_entire, "floor(n/2)!/n!");
}

std::string run_cli(std::vector<std::string> const &args)
{
	std::string cmd = "cd '" + std::string(ORBIT_SOURCE_DIR) + "' && '" + ORBIT_CLI_PATH + "'";
	for (auto const &a : args)
	{
		std::string quoted;
		for (char ch : a)
			quoted += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
		cmd += " '" + quoted + "'";
	}
	cmd += " 2>/dev/null";
	std::string out;
	if (FILE *p = popen(cmd.c_str(), "r"))
	{
		char buf[4096];
		std::size_t n;
		while ((n = fread(buf, 1, sizeof buf, p)) > 0)
			out.append(buf, n);
		out += "\nexit " + std::to_string(pclose(p));
	}
	return out;
}

void determinism(Check &c)
{
	std::ifstream in(std::string(ORBIT_SOURCE_DIR) + "/tests/cli/cases.json");
	auto cases = Json::parse(in);
	c.expect(!cases.empty(), "fixture cases present");
	for (auto const &cs : cases)
	{
		auto args = cs.at("args").get<std::vector<std::string>>();
		auto first = run_cli(args);
		c.expect(first.find("\"subcommand\"") != std::string::npos || first.find("\"error\"") != std::string::npos,
		         cs.at("name").get<std::string>() + " produced a report");
		c.expect(first == run_cli(args), cs.at("name").get<std::string>() + " byte-identical");
	}
}

} // namespace

int main()
{
	struct Criterion
	{
		int id;
		std::string title;
		double budget_s;
		std::function<void(Check &)> run;
	};
	std::vector<Criterion> criteria{
	    {1, "Chern coefficients and matrices", 1, chern_coefficients},
	    {2, "truncated HP and Morita invariance", 60, cyclic_homology},
	    {3, "bicomplex operator identities", 60, operator_identities},
	    {4, "quantization equivalence", 10, quantization},
	    {5, "coadjoint stratification", 10, stratification},
	    {6, "polarization checker", 5, polarization},
	    {7, "affine group residuals and index", 5, affine_group},
	    {8, "quantum group catalog and SU_q(2) model", 30, quantum_group},
	    {9, "entirety classifier", 1, entirety},
	    {10, "CLI determinism", 120, determinism},
	};

	int failed = 0;
	for (auto const &cr : criteria)
	{
		Check check;
		auto start = std::chrono::steady_clock::now();
		try
		{
			cr.run(check);
		}
		catch (std::exception const &e)
		{
			check.expect(false, std::string("exception: ") + e.what());
		}
		double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		check.expect(elapsed < cr.budget_s, "time budget " + std::to_string(cr.budget_s) + " s exceeded");
		failed += !check.ok;
		std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << cr.id << "  " << cr.title
		          << "  (" << std::fixed << std::setprecision(2) << elapsed << " s)";
		if (!check.ok)
			std::cout << "  first failure: " << check.first_failure;
		std::cout << std::endl;
	}
	std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria passed")
	          << std::endl;
	return failed ? 1 : 0;
}
