#include "commands.hpp"

#include "orbit/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace orbit;
using namespace orbit::cli;

namespace {

struct Leaf
{
	CLI::App *app;
	std::string name;
	std::function<Json(Context &)> run;
};

bool is_presentation_flag(std::string const &arg)
{
	return arg == "--timing" || arg == "--format" || arg.rfind("--format=", 0) == 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact computations for coadjoint orbits, cyclic homology and group C*-algebras", "orbit"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string format_name = "json";
	std::uint64_t seed = 0;
	bool timing = false;
	app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "table"}));
	app.add_option("--seed", seed, "Seed for sampled checks");
	app.add_flag("--timing", timing, "Include wall time in the report");
	app.set_version_flag("--version", std::string(cli::version));

	std::vector<Leaf> leaves;
	auto group = [&](std::string const &name, std::string const &help) {
		auto *g = app.add_subcommand(name, help);
		g->require_subcommand(1);
		return g;
	};
	auto leaf = [&](CLI::App *parent, std::string const &name, std::string const &help,
	                std::function<Json(Context &)> run) {
		auto *sub = parent->add_subcommand(name, help);
		leaves.push_back({sub, parent->get_name() + " " + name, std::move(run)});
		return sub;
	};

	// lie
	auto *lie = group("lie", "Lie algebra checks");
	std::string algebra;
	SamplingArgs sampling;
	leaf(lie, "check", "Antisymmetry and Jacobi identity", [&](Context &c) { return lie_check(c, algebra); })
	    ->add_option("--algebra", algebra, "Lie algebra JSON file")
	    ->required();
	auto strata_options = [&](CLI::App *sub) {
		sub->add_option("--algebra", sampling.algebra, "Lie algebra JSON file")->required();
		sub->add_option("--samples", sampling.samples, "Number of sampled covectors")->capture_default_str();
		sub->add_option("--range", sampling.range, "Integer coordinate range")->capture_default_str();
	};
	strata_options(leaf(lie, "strata", "Coadjoint orbit strata by Poisson rank",
	                    [&](Context &c) { return lie_strata(c, sampling); }));
	std::string functional, span;
	auto *pol = leaf(lie, "polarize", "Polarization conditions at a functional",
	                 [&](Context &c) { return lie_polarize(c, algebra, functional, span); });
	pol->add_option("--algebra", algebra, "Lie algebra JSON file")->required();
	pol->add_option("--functional", functional, "Covector coordinates, comma separated")->required();
	pol->add_option("--span", span, "Complex subspace, e.g. \"Z; X + i*Y\"")->required();

	// tower
	auto *tower = group("tower", "Extension tower of the stratification");
	strata_options(leaf(tower, "report", "Tower of extensions", [&](Context &c) { return tower_report(c, sampling); }));

	// quantize
	auto *quant = group("quantize", "Geometric quantization checks");
	QuantizeArgs qargs;
	auto *qv = leaf(quant, "verify", "Curvature condition and Dirac rule",
	                [&](Context &c) { return quantize_verify(c, qargs); });
	qv->add_option("--alpha", qargs.alpha, "Connection one-form, e.g. \"p1*dq1\"")->required();
	qv->add_option("--max-degree", qargs.max_degree, "Maximal monomial degree")->capture_default_str();
	qv->add_option("--dof", qargs.dof, "Degrees of freedom (inferred when omitted)");
	qv->add_option("--algebra", qargs.algebra, "Lie algebra JSON file for the action cocycle");
	qv->add_option("--moment", qargs.moment, "Moment polynomials separated by ';'");

	// cyclic
	auto *cyc = group("cyclic", "Cyclic homology");
	std::size_t truncation = 6, morita = 0, horizon = 40, samples = 100;
	std::string pattern, trace;
	auto *hp = leaf(cyc, "hp", "Truncated periodic cyclic homology",
	                [&](Context &c) { return cyclic_hp(c, algebra, truncation, morita); });
	hp->add_option("--algebra", algebra, "Algebra JSON file")->required();
	hp->add_option("--truncation", truncation, "Maximal total degree")->capture_default_str();
	hp->add_option("--morita", morita, "Also compare with M_m(A)");
	auto *ent = leaf(cyc, "entire", "Entirety of a norm sequence",
	                 [&](Context &c) { return cyclic_entire(c, pattern, horizon); });
	ent->add_option("--pattern", pattern, "Norm pattern, e.g. \"floor-half-fact/fact\"")->required();
	ent->add_option("--horizon", horizon, "Numeric horizon")->capture_default_str();
	auto *tr = leaf(cyc, "trace", "Trace axioms", [&](Context &c) { return cyclic_trace(c, algebra, trace, samples); });
	tr->add_option("--algebra", algebra, "Algebra JSON file")->required();
	tr->add_option("--trace", trace, "Trace coefficients: JSON file or inline array")->required();
	tr->add_option("--samples", samples, "Positivity samples")->capture_default_str();

	// chern
	auto *ch = group("chern", "Chern character");
	long n = 0, k = 0, q = 0, rank = 3;
	std::string family = "SU";
	auto *phi = leaf(ch, "phi", "The coefficient function", [&](Context &) { return chern_phi(n, k, q); });
	phi->add_option("n", n)->required();
	phi->add_option("k", k)->required();
	phi->add_option("q", q)->required();
	auto *cm = leaf(ch, "matrix", "Chern character matrix", [&](Context &) { return chern_matrix(family, rank); });
	cm->add_option("--family", family, "SU, SO or Sp")->capture_default_str();
	cm->add_option("--rank", rank, "Rank parameter")->capture_default_str();

	// qgroup
	auto *qg = group("qgroup", "Quantized function algebras");
	std::size_t weyl_rank = 2, t_samples = 4;
	auto *reps = leaf(qg, "reps", "Representation catalog",
	                  [&](Context &) { return qgroup_reps(family, weyl_rank, t_samples); });
	reps->add_option("--family", family, "Weyl type A or B")->capture_default_str();
	reps->add_option("--rank", weyl_rank, "Rank")->capture_default_str();
	reps->add_option("--t-samples", t_samples, "Torus samples")->capture_default_str();
	QgroupVerifyArgs vargs;
	auto *qver = leaf(qg, "verify", "SU_q(2) relations and faithfulness", [&](Context &) { return qgroup_verify(vargs); });
	qver->add_option("--q", vargs.q, "Deformation parameter")->capture_default_str();
	qver->add_option("--truncation", vargs.truncation, "Truncation size")->capture_default_str();
	qver->add_option("--degree", vargs.degree, "PBW degree")->capture_default_str();
	qver->add_option("--t-samples", vargs.t_samples, "Torus samples")->capture_default_str();
	qver->add_option("--t", vargs.t, "Torus parameter for the relation check")->capture_default_str();

	// affine
	auto *aff = group("affine", "The ax+b group");
	double L = 8, h = 0.0625;
	std::size_t trials = 1000;
	auto *av = leaf(aff, "verify", "Representation residuals and index",
	                [&](Context &c) { return affine_verify(c, L, h, trials); });
	av->add_option("--L", L, "Log-grid half size")->capture_default_str();
	av->set_help_flag("--help", "Print this help message and exit");
	av->add_option("--h", h, "Log-grid step")->capture_default_str();
	av->add_option("--trials", trials, "Random group pairs")->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const &e)
	{
		return app.exit(e);
	}
	catch (CLI::CallForVersion const &e)
	{
		return app.exit(e);
	}
	catch (CLI::ParseError const &e)
	{
		std::string message = e.what();
		for (int i = 1; i < argc; ++i)
		{
			std::string arg = argv[i];
			if (arg == "--format" || arg == "--seed")
				++i;
			else if (arg.rfind("-", 0) != 0)
			{
				if (app.get_subcommand_no_throw(arg) == nullptr)
					message = "unknown subcommand \"" + arg + "\"";
				break;
			}
		}
		std::cerr << app.help();
		std::cout << render_error("usage", message, format_name == "table" ? Format::table : Format::json);
		return 2;
	}

	Format const format = format_name == "table" ? Format::table : Format::json;
	Leaf const *chosen = nullptr;
	for (auto const &l : leaves)
		if (l.app->parsed())
			chosen = &l;
	if (!chosen)
	{
		std::cerr << app.help();
		std::cout << render_error("usage", "no subcommand given", format);
		return 2;
	}

	Context ctx;
	ctx.seed = seed;
	for (int i = 1; i < argc; ++i)
	{
		std::string arg = argv[i];
		if (is_presentation_flag(arg))
		{
			if (arg == "--format")
				++i;
			continue;
		}
		ctx.digest.update(arg);
	}

	try
	{
		auto start = std::chrono::steady_clock::now();
		RunReport report{chosen->name, {}, chosen->run(ctx), std::nullopt};
		report.input_digest = ctx.digest.hex();
		if (timing)
			report.wall_time_ms =
			    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
		std::cout << render(report, format);
		return 0;
	}
	catch (InputError const &e)
	{
		std::cout << render_error("input", e.what(), format);
		return 2;
	}
	catch (Json::exception const &e)
	{
		std::cout << render_error("input", e.what(), format);
		return 2;
	}
	catch (std::exception const &e)
	{
		std::cout << render_error("internal", e.what(), format);
		return 1;
	}
}
