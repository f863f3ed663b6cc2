#include "commands.hpp"

#include "orbit/affine/affine.hpp"
#include "orbit/chern/chern.hpp"
#include "orbit/cyclic/entire.hpp"
#include "orbit/cyclic/homology.hpp"
#include "orbit/cyclic/trace.hpp"
#include "orbit/errors.hpp"
#include "orbit/liealg/coadjoint.hpp"
#include "orbit/liealg/polarization.hpp"
#include "orbit/qgroup/su2_model.hpp"
#include "orbit/quantize/quantization.hpp"
#include "orbit/strata/strata.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace orbit::cli {

namespace {

std::vector<std::string> split(std::string const &text, char sep)
{
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, sep))
	{
		auto b = item.find_first_not_of(" \t");
		auto e = item.find_last_not_of(" \t");
		out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
	}
	return out;
}

Json strings(std::vector<Rational> const &v)
{
	Json j = Json::array();
	for (auto const &x : v)
		j.push_back(x.str());
	return j;
}

Json strings(ExactVector const &v)
{
	Json j = Json::array();
	for (auto const &x : v)
		j.push_back(x.str());
	return j;
}

liealg::LieAlgebra load_lie(Context &ctx, std::string const &path, std::string &name)
{
	auto j = ctx.load(path);
	name = j.is_object() ? j.value("name", std::string()) : std::string();
	return liealg::LieAlgebra::from_json(j);
}

cyclic::FinAlgebra load_fin(Context &ctx, std::string const &path)
{
	return cyclic::FinAlgebra::from_json(ctx.load(path));
}

/// "Z; X + i*Y": vectors separated by ';', terms [sign][rational][*][i][*]name.
std::vector<ExactVector> parse_span(liealg::LieAlgebra const &l, std::string const &text)
{
	static std::regex const term(R"(^\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:(i)\s*\*?\s*)?([A-Za-z_]\w*)\s*)");
	auto const &basis = l.basis();
	auto index_of = [&](std::string const &n) -> std::optional<std::size_t> {
		auto it = std::find(basis.begin(), basis.end(), n);
		if (it == basis.end())
			return std::nullopt;
		return static_cast<std::size_t>(it - basis.begin());
	};
	std::vector<ExactVector> out;
	for (auto const &piece : split(text, ';'))
	{
		if (piece.empty())
			throw InputError("span: empty vector in \"" + text + "\"");
		ExactVector v(l.dim());
		std::string rest = piece;
		bool first = true;
		while (!rest.empty())
		{
			std::smatch m;
			if (!std::regex_search(rest, m, term) || (!first && !m[1].matched))
				throw InputError("span: cannot parse \"" + rest + "\"");
			Rational c = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
			if (m[1].str() == "-")
				c = -c;
			std::string name = m[4].str();
			bool imaginary = m[3].matched;
			auto k = index_of(name);
			if (!k && imaginary && index_of("i" + name))
			{
				k = index_of("i" + name);
				imaginary = false;
			}
			if (!k)
				throw InputError("span: unknown basis element \"" + name + "\"");
			v[*k] += imaginary ? GaussRational(Rational(0), c) : GaussRational(c);
			rest = m.suffix().str();
			first = false;
		}
		out.push_back(std::move(v));
	}
	return out;
}

Json witness_json(strata::MinorWitness const &w)
{
	return {{"rows", w.rows}, {"cols", w.cols}, {"value", w.value.str()}};
}

Json sampler_json(SamplingArgs const &args, std::uint64_t seed)
{
	return {{"samples", args.samples}, {"range", args.range}, {"seed", seed}};
}

} // namespace

Json Context::load(std::string const &source, bool allow_inline)
{
	std::string text;
	auto first = source.find_first_not_of(" \t\n");
	if (allow_inline && first != std::string::npos && (source[first] == '[' || source[first] == '{'))
		text = source;
	else
	{
		std::ifstream in(source, std::ios::binary);
		if (!in)
			throw InputError("cannot open input file \"" + source + "\"");
		std::ostringstream ss;
		ss << in.rdbuf();
		text = ss.str();
	}
	digest.update(text);
	try
	{
		return Json::parse(text);
	}
	catch (Json::parse_error const &e)
	{
		throw InputError("invalid JSON in \"" + source + "\": " + e.what());
	}
}

Json lie_check(Context &ctx, std::string const &algebra)
{
	std::string name;
	auto l = load_lie(ctx, algebra, name);
	auto jr = liealg::check_jacobi(l);
	Json r{{"name", name}, {"dim", l.dim()}, {"basis", l.basis()}, {"antisymmetric", l.is_antisymmetric()},
	       {"jacobi", jr.holds}};
	if (jr.witness)
	{
		r["witness"] = *jr.witness;
		r["residual"] = strings(jr.residual);
	}
	return r;
}

Json lie_strata(Context &ctx, SamplingArgs const &args)
{
	std::string name;
	auto l = load_lie(ctx, args.algebra, name);
	strata::SamplerConfig cfg{ctx.seed, args.samples, args.range};
	auto strata_list = strata::stratify(l, cfg);

	Json list = Json::array();
	Json dims = Json::array();
	bool even = true;
	bool foliations = true;
	for (auto const &s : strata_list)
	{
		auto fol = strata::foliation_check(l, s);
		foliations = foliations && fol.pass;
		even = even && s.dimension % 2 == 0;
		dims.push_back(s.dimension);
		Json e{{"dimension", s.dimension},
		       {"count", s.samples.size()},
		       {"higher_minors_vanish", s.higher_minors_vanish},
		       {"foliation", fol.pass},
		       {"first_sample", strings(s.samples.front())},
		       {"first_index", s.sample_indices.front()},
		       {"witness", witness_json(s.witnesses.front())}};
		if (!fol.failures.empty())
			e["foliation_failures"] = fol.failures;
		list.push_back(std::move(e));
	}
	auto g = strata::generic_rank(l, cfg);
	return {{"name", name},
	        {"sampler", sampler_json(args, ctx.seed)},
	        {"dimensions", dims},
	        {"ranks_even", even},
	        {"foliation", foliations},
	        {"strata", list},
	        {"generic_rank",
	         {{"rank", g.rank},
	          {"point", strings(g.point)},
	          {"minor", g.minor_text},
	          {"witness", witness_json(g.witness)},
	          {"cross_checked", g.cross_checked}}}};
}

Json lie_polarize(Context &ctx, std::string const &algebra, std::string const &functional, std::string const &span)
{
	std::string name;
	auto l = load_lie(ctx, algebra, name);
	ctx.digest.update(functional);
	ctx.digest.update(span);
	liealg::Covector f;
	for (auto const &c : split(functional, ','))
		f.push_back(Rational::parse(c));
	if (f.size() != l.dim())
		throw InputError("functional has " + std::to_string(f.size()) + " coordinates, algebra has dimension " +
		                 std::to_string(l.dim()));
	auto p = parse_span(l, span);
	auto rep = liealg::check_polarization(l, f, p);
	Json vectors = Json::array();
	for (auto const &v : p)
		vectors.push_back(strings(v));
	return {{"name", name},
	        {"functional", strings(f)},
	        {"span", vectors},
	        {"subalgebra", rep.subalgebra},
	        {"contains_stabilizer", rep.contains_stabilizer},
	        {"a", rep.a},
	        {"b_infinitesimal", rep.b_infinitesimal},
	        {"c", rep.c},
	        {"passes", rep.passes()},
	        {"dim_p", rep.dim_p},
	        {"dim_m", rep.dim_m},
	        {"dim_h", rep.dim_h},
	        {"dim_stabilizer", rep.dim_stabilizer},
	        {"orbit_dimension", liealg::orbit_dimension(l, f)},
	        {"mixed_type", {rep.mixed_type.k, rep.mixed_type.l, rep.mixed_type.m}},
	        {"not_evaluated", rep.not_evaluated},
	        {"failures", rep.failures}};
}

Json tower_report(Context &ctx, SamplingArgs const &args)
{
	std::string name;
	auto l = load_lie(ctx, args.algebra, name);
	auto strata_list = strata::stratify(l, {ctx.seed, args.samples, args.range});
	auto tower = strata::extension_tower(strata_list);
	Json ext = Json::array();
	for (auto const &e : tower.extensions)
		ext.push_back({{"dimension", e.dimension}, {"ideal", e.ideal_label}, {"quotient", e.quotient_label}});
	Json dims = Json::array();
	for (auto const &s : strata_list)
		dims.push_back(s.dimension);
	return {{"name", name},
	        {"sampler", sampler_json(args, ctx.seed)},
	        {"dimensions", dims},
	        {"extensions", ext},
	        {"note", tower.note}};
}

Json quantize_verify(Context &ctx, QuantizeArgs const &args)
{
	using namespace quantize;
	ctx.digest.update(args.alpha);
	ctx.digest.update(args.moment);
	std::vector<std::string> texts{args.alpha};
	auto moment_texts = args.moment.empty() ? std::vector<std::string>{} : split(args.moment, ';');
	texts.insert(texts.end(), moment_texts.begin(), moment_texts.end());
	PhaseSpace ps{args.dof ? args.dof : infer_degrees_of_freedom(texts)};
	auto alpha = ps.parse_one_form(args.alpha);

	auto curv = check_curvature(ps, alpha);
	Json curv_residual = Json::array();
	for (auto const &r : curv.residual)
		curv_residual.push_back(ps.str(r));

	auto monos = monomials_up_to(ps, args.max_degree);
	std::size_t pairs = 0, failures = 0;
	Json first_failure;
	for (std::size_t i = 0; i < monos.size(); ++i)
		for (std::size_t j = i; j < monos.size(); ++j)
		{
			++pairs;
			auto d = check_dirac(ps, monos[i], monos[j], alpha);
			if (!d.holds && failures++ == 0)
				first_failure = {{"f", ps.str(monos[i])}, {"g", ps.str(monos[j])}, {"residual", d.residual.str(ps.names())}};
		}

	Json r{{"alpha", ps.str(alpha)},
	       {"degrees_of_freedom", ps.n},
	       {"max_degree", args.max_degree},
	       {"curvature", {{"holds", curv.holds}, {"residual", curv_residual}}},
	       {"dirac", {{"holds", failures == 0}, {"pairs", pairs}, {"failures", failures}}},
	       {"equivalent", curv.holds == (failures == 0)}};
	if (failures)
		r["dirac"]["first_failure"] = first_failure;

	if (!args.algebra.empty())
	{
		std::string name;
		auto l = load_lie(ctx, args.algebra, name);
		std::vector<Poly> moment;
		for (auto const &t : moment_texts)
			moment.push_back(ps.parse(t));
		auto c = action_cocycle(ps, l, moment);
		Json table = Json::array();
		for (std::size_t a = 0; a < l.dim(); ++a)
		{
			Json row = Json::array();
			for (std::size_t b = 0; b < l.dim(); ++b)
				row.push_back(ps.str(c.table[a * l.dim() + b]));
			table.push_back(row);
		}
		r["cocycle"] = {{"algebra", name}, {"table", table}, {"flat", c.flat}};
	}
	else if (!moment_texts.empty())
		throw InputError("--moment needs --algebra");
	return r;
}

Json cyclic_hp(Context &ctx, std::string const &algebra, std::size_t truncation, std::size_t morita)
{
	auto a = load_fin(ctx, algebra);
	auto hp_json = [](cyclic::HpResult const &h) {
		return Json{{"truncation", h.truncation},
		            {"hp_even", h.hp_even},
		            {"hp_odd", h.hp_odd},
		            {"stabilized", h.stabilized},
		            {"even_degree", h.even_degree},
		            {"odd_degree", h.odd_degree},
		            {"total_dims", h.total_dims},
		            {"ranks", h.ranks},
		            {"cyclic_dims", h.cyclic_dims},
		            {"periodicity_ranks", h.periodicity_ranks}};
	};
	Json r{{"name", a.name()}, {"dim", a.dim()}};
	if (morita)
	{
		auto m = cyclic::morita_check(a, morita, truncation);
		r["hp"] = hp_json(m.base);
		r["morita"] = {{"m", morita}, {"verdict", cyclic::to_string(m.verdict)}, {"amplified", hp_json(m.amplified)}};
	}
	else
		r["hp"] = hp_json(cyclic::hp_homology(a, truncation));
	return r;
}

Json cyclic_entire(Context &ctx, std::string const &pattern, std::size_t horizon)
{
	ctx.digest.update(pattern);
	auto s = cyclic::NormSequence::parse(pattern);
	auto rep = cyclic::entirety(s, horizon);
	return {{"pattern", pattern},
	        {"horizon", horizon},
	        {"verdict", cyclic::to_string(rep.verdict)},
	        {"method", rep.method},
	        {"exponent", rep.exponent ? Json(rep.exponent->str()) : Json(nullptr)},
	        {"root_limit", rep.root_limit ? Json(*rep.root_limit) : Json(nullptr)},
	        {"root_trend", rep.root_trend},
	        {"weighted", strings(rep.weighted)}};
}

Json cyclic_trace(Context &ctx, std::string const &algebra, std::string const &trace, std::size_t samples)
{
	auto a = load_fin(ctx, algebra);
	auto tau = cyclic::Trace::from_json(ctx.load(trace, true));
	auto rep = cyclic::verify_trace(a, tau, samples, ctx.seed);
	return {{"name", a.name()},
	        {"trace", strings(tau.coords)},
	        {"normalized", rep.normalized},
	        {"positive", rep.positive},
	        {"strictly_positive", rep.strictly_positive},
	        {"ad_invariant", rep.ad_invariant},
	        {"gram_rank", rep.gram_rank},
	        {"samples", rep.samples},
	        {"all_pass", rep.all_pass()},
	        {"failures", rep.failures}};
}

Json chern_phi(long n, long k, long q)
{
	return {{"n", n}, {"k", k}, {"q", q}, {"value", chern::phi(n, k, q).get_str()}};
}

Json chern_matrix(std::string const &family, long rank)
{
	auto f = chern::parse_family(family);
	auto models = chern::ring_models(f, rank);
	auto gens = [](chern::RingModel const &m) {
		Json j = Json::array();
		for (auto const &g : m.generators)
			j.push_back({{"label", g.label}, {"degree", g.degree}});
		return j;
	};
	Json r{{"group", models.k_theory.group},
	       {"family", chern::family_name(f)},
	       {"rank", rank},
	       {"k_theory", gens(models.k_theory)},
	       {"cohomology", gens(models.cohomology)}};
	if (f == chern::Family::Sp)
	{
		r["matrix"] = nullptr;
		return r;
	}
	auto m = chern::chern_matrix(f, rank);
	Json entries = Json::array();
	for (auto const &row : m.entries)
		entries.push_back(strings(row));
	r["matrix"] = {{"rows", m.row_labels},     {"columns", m.column_labels},
	               {"entries", entries},       {"rank", m.rank},
	               {"square", m.square},       {"determinant", m.square ? Json(m.determinant.str()) : Json(nullptr)},
	               {"invertible", m.invertible}};
	return r;
}

Json qgroup_reps(std::string const &family, std::size_t rank, std::size_t t_samples)
{
	auto f = qgroup::parse_weyl_family(family);
	auto cat = qgroup::rep_catalog(f, rank, t_samples);
	Json list = Json::array();
	std::size_t finite = 0;
	bool dichotomy = true;
	for (auto const &d : cat)
	{
		finite += !d.infinite;
		dichotomy = dichotomy && ((d.dimension() == "1") == d.w.is_identity());
		list.push_back({{"w", d.w.word_string()}, {"length", d.w.length}, {"t", d.t}, {"dimension", d.dimension()}});
	}
	return {{"family", qgroup::to_string(f)},
	        {"rank", rank},
	        {"weyl_order", qgroup::weyl_order(f, rank)},
	        {"t_samples", t_samples},
	        {"catalog", list},
	        {"finite_dimensional", finite},
	        {"dichotomy", dichotomy}};
}

Json qgroup_verify(QgroupVerifyArgs const &args)
{
	auto rel = qgroup::relation_residuals(qgroup::build_rep_su2(args.q, args.t, args.truncation));
	Json relations = Json::array();
	for (auto const &r : rel.relations)
		relations.push_back({{"relation", r.relation}, {"interior", r.interior}, {"boundary", r.boundary}});
	auto ch = qgroup::character_constraints(args.q);
	auto kr = qgroup::joint_kernel_rank(args.q, args.degree, args.t_samples, args.truncation);
	auto kc = qgroup::joint_kernel_rank(args.q, args.degree, args.t_samples, args.truncation, true);
	auto verdict = ch.verdict == qgroup::ConstraintVerdict::pass ? "pass" : "inconclusive";
	return {{"q", args.q},
	        {"truncation", args.truncation},
	        {"residuals", {{"relations", relations}, {"interior_max", rel.interior_max}, {"boundary_max", rel.boundary_max}}},
	        {"character",
	         {{"verdict", verdict},
	          {"determinant", ch.determinant.str()},
	          {"alpha_sq", ch.alpha_sq.str()},
	          {"gamma_sq", ch.gamma_sq.str()}}},
	        {"ranks",
	         {{"degree", args.degree},
	          {"monomials", kr.monomials},
	          {"t_samples", args.t_samples},
	          {"rank", kr.rank},
	          {"full_rank", kr.full_rank},
	          {"characters_only_rank", kc.rank}}}};
}

Json affine_verify(Context &ctx, double L, double h, std::size_t trials)
{
	affine::LogGrid grid(L, h);
	affine::SuiteConfig cfg;
	cfg.pairs = trials;
	cfg.seed = ctx.seed;
	cfg.max_shift = std::min<long>(cfg.max_shift, static_cast<long>(grid.branch_size() - 1) / 5);
	auto r = affine::run_suite(grid, cfg);
	return {{"grid", {{"L", L}, {"h", h}, {"nodes", grid.size()}}},
	        {"pairs", r.pairs},
	        {"homomorphism_residual", r.homomorphism_residual},
	        {"unitarity_residual", r.unitarity_residual},
	        {"character_residual", r.character_residual},
	        {"index", {r.index.index.first, r.index.index.second}},
	        {"index_group", r.index.group},
	        {"quotient", r.index.quotient}};
}

} // namespace orbit::cli
