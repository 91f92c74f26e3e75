// Acceptance suite: one runnable criterion per number, each printing a
// single PASS/FAIL summary line plus the measurements behind it.
//
//   acceptance <n>   run criterion n (1..11)
//   acceptance       run all criteria

#include "gburgers/models.hpp"
#include "gburgers/operators.hpp"
#include "gburgers/pde.hpp"
#include "gburgers/reducer.hpp"
#include "gburgers/reference.hpp"
#include "gburgers/report.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace gburgers;

namespace {

struct Criterion
{
	int id;
	const char *title;
	std::function<bool(std::vector<std::string> &)> run;
};

std::string fmt(const char *f, ...)
{
	char buf[512];
	va_list ap;
	va_start(ap, f);
	std::vsnprintf(buf, sizeof buf, f, ap);
	va_end(ap);
	return buf;
}

ReductionResult reduce_case(CaseTag tag, ProjectionKind kind)
{
	static std::map<std::pair<int, int>, ReductionResult> cache;
	auto key = std::make_pair(static_cast<int>(tag), static_cast<int>(kind));
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	CaseConfig cfg = tag == CaseTag::A1   ? configure(1, 1, -0.5)
	                 : tag == CaseTag::A2 ? configure(1, 1, 0)
	                 : tag == CaseTag::B1 ? configure(0, 1, -0.5)
	                                      : configure(0, 1, 0);
	ReduceOptions opt;
	opt.projection = kind;
	ReductionResult res = reduce(system_for(cfg), model_truncation(tag), opt);
	cache.emplace(key, res);
	return res;
}

// compare one table of reference coefficients against both engine
// conventions; the pass verdict uses the default (listing) convention, the
// closed-form value is shown beside it
int check_table(const std::vector<reference::Coefficient> &table, const GaussianSeries &def,
                const GaussianSeries &closed, const char *what, bool law,
                const AmpPoly *defLaw, const AmpPoly *closedLaw,
                std::vector<std::string> &out)
{
	int bad = 0;
	for (auto &ref : table)
	{
		std::string vDef, vClosed;
		if (law)
		{
			vDef = round4(defLaw->coeff(ref.p, ref.q));
			vClosed = round4(closedLaw->coeff(ref.p, ref.q));
		}
		else
		{
			vDef = round4(def.coeff(ref.k, ref.n, ref.p, ref.q));
			vClosed = round4(closed.coeff(ref.k, ref.n, ref.p, ref.q));
		}
		bool ok = vDef == ref.value;
		if (!ok)
			++bad;
		out.push_back(fmt("  %-4s %s k=%d n=%d p=%d q=%d  reference %-8s engine %-8s "
		                  "(closed-form moments %s)",
		                  ok ? "ok" : "MISS", what, ref.k, ref.n, ref.p, ref.q, ref.value,
		                  vDef.c_str(), vClosed.c_str()));
	}
	return bad;
}

bool criterion1(std::vector<std::string> &out)
{
	ReductionResult def = reduce_case(CaseTag::A1, ProjectionKind::ListingRecurrence);
	ReductionResult closed = reduce_case(CaseTag::A1, ProjectionKind::ClosedForm);
	out.push_back("  engine law:       dA/dtau' = " + render_law(def.amplitudeLaw));
	out.push_back("  closed-form law:  dA/dtau' = " + render_law(closed.amplitudeLaw));
	out.push_back("  reference:        dA/dtau' = 0.0641*A^3 - 0.0022*A^5");
	int bad = check_table(reference::kLawA1, {}, {}, "law", true, &def.amplitudeLaw,
	                      &closed.amplitudeLaw, out);
	return bad == 0;
}

bool criterion2(std::vector<std::string> &out)
{
	ReductionResult def = reduce_case(CaseTag::A1, ProjectionKind::ListingRecurrence);
	ReductionResult closed = reduce_case(CaseTag::A1, ProjectionKind::ClosedForm);
	Truncation rt = report_truncation(CaseTag::A1);
	GaussianSeries vd = def.report_manifold(rt), vc = closed.report_manifold(rt);
	int bad = check_table(reference::kManifoldA1, vd, vc, "v", false, nullptr, nullptr, out);
	out.push_back("  flagged entries (reported, not asserted; the two source tables disagree):");
	for (auto &ref : reference::kManifoldA1Flagged)
		out.push_back(fmt("       v k=%d n=%d p=%d  printed %-7s engine %-8s (closed form %s)",
		                  ref.k, ref.n, ref.p, ref.value,
		                  round4(vd.coeff(ref.k, ref.n, ref.p, ref.q)).c_str(),
		                  round4(vc.coeff(ref.k, ref.n, ref.p, ref.q)).c_str()));
	out.push_back(fmt("  %zu of %zu asserted coefficients match at 4 decimals",
	                  reference::kManifoldA1.size() - bad, reference::kManifoldA1.size()));
	return bad == 0;
}

bool criterion3(std::vector<std::string> &out)
{
	ReductionResult def = reduce_case(CaseTag::A2, ProjectionKind::ListingRecurrence);
	ReductionResult closed = reduce_case(CaseTag::A2, ProjectionKind::ClosedForm);
	out.push_back("  engine law:       dA/dtau' = " + render_law(def.amplitudeLaw));
	out.push_back("  closed-form law:  dA/dtau' = " + render_law(closed.amplitudeLaw));
	out.push_back("  reference: -1.1835*A*th + 0.0641*A^3 - 0.1631*A^3*th - 0.0022*A^5 "
	              "+ 0.0133*A^5*th");
	int bad = check_table(reference::kLawA2, {}, {}, "law", true, &def.amplitudeLaw,
	                      &closed.amplitudeLaw, out);
	return bad == 0;
}

bool criterion4(std::vector<std::string> &out)
{
	ReductionResult b1 = reduce_case(CaseTag::B1, ProjectionKind::ClosedForm);
	bool b1ok = b1.manifold == GaussianSeries::amplitude_mode() && b1.amplitudeLaw.empty();
	out.push_back(fmt("  B1: v = A*G with dA/dtau' = 0 exactly: %s", b1ok ? "yes" : "NO"));

	ReductionResult def = reduce_case(CaseTag::B2, ProjectionKind::ListingRecurrence);
	ReductionResult closed = reduce_case(CaseTag::B2, ProjectionKind::ClosedForm);
	out.push_back("  B2 engine law:      dA/dtau' = " + render_law(def.amplitudeLaw));
	out.push_back("  B2 closed-form law: dA/dtau' = " + render_law(closed.amplitudeLaw));
	int bad = check_table(reference::kLawB2, {}, {}, "law", true, &def.amplitudeLaw,
	                      &closed.amplitudeLaw, out);
	Truncation rt = report_truncation(CaseTag::B2);
	bad += check_table(reference::kManifoldB2, def.report_manifold(rt),
	                   closed.report_manifold(rt), "v", false, nullptr, nullptr, out);
	return b1ok && bad == 0;
}

bool criterion5(std::vector<std::string> &out)
{
	bool ok = true;
	for (Rational sigma : {Rational(1, 2), Rational(1), Rational(2)})
		for (int l = 0; l <= 7; ++l)
		{
			Truncation t{l + 4, 1, 1};
			GaussianSeries mode = hermite_mode(l);
			bool eq = apply_S(sigma, mode, t) == mode.scaled(spectrum_eigenvalue(sigma, l));
			ok = ok && eq;
		}
	out.push_back(fmt("  S_sigma H_l G = (sigma-1-l) H_l G exactly, l <= 7, sigma in "
	                  "{1/2, 1, 2}: %s",
	                  ok ? "all 24 exact" : "MISMATCH"));
	return ok;
}

bool criterion6(std::vector<std::string> &out)
{
	bool ok = true;
	int count = 0;
	for (auto tag : {CaseTag::A1, CaseTag::A2, CaseTag::B1, CaseTag::B2})
	{
		ReductionResult res = reduce_case(tag, ProjectionKind::ListingRecurrence);
		for (auto &rec : res.history)
		{
			ok = ok && rec.roundTripEmpty;
			++count;
		}
	}
	out.push_back(fmt("  apply_S(linv(rhs)) - rhs empty at truncation order for all %d "
	                  "generated right-hand sides: %s",
	                  count, ok ? "yes" : "NO"));
	return ok;
}

bool criterion7(std::vector<std::string> &out)
{
	bool ok = true;
	int count = 0;
	for (auto tag : {CaseTag::A1, CaseTag::A2, CaseTag::B1, CaseTag::B2})
	{
		ReductionResult res = reduce_case(tag, ProjectionKind::ListingRecurrence);
		for (auto &rec : res.history)
		{
			ok = ok && rec.amplitudeExact;
			++count;
		}
	}
	out.push_back(fmt("  projection of v equals A exactly after each of %d sweeps: %s", count,
	                  ok ? "yes" : "NO"));
	return ok;
}

bool criterion8(std::vector<std::string> &out)
{
	Truncation deep{64, 1, 1};
	GaussianSeries inv = linv(GaussianSeries::term(Rational(1), 1, 0, 0, 0), deep);
	bool rec = inv.coeff(1, 2, 0, 0) == RadicalSum(Rational(1, 2)) &&
	           inv.coeff(1, 4, 0, 0) == RadicalSum(Rational(1, 12));
	Rational cPrev = Rational(2);
	for (int n = 2; n <= 30; ++n)
	{
		Rational cCur = Rational(1) / inv.coeff(1, 2 * n, 0, 0).rational_part();
		rec = rec &&
		      cCur * Rational(2 * (n - 1)) == Rational(2 * n) * Rational(2 * n - 1) * cPrev;
		cPrev = cCur;
	}
	out.push_back(fmt("  c_2 = 2, c_4 = 12 and the c_2n recurrence exact to n = 30: %s",
	                  rec ? "yes" : "NO"));

	double prev = 0, ratio = 0;
	for (int n = 1; n <= 30; ++n)
	{
		double term = inv.coeff(1, 2 * n, 0, 0).rational_part().to_double() *
		              weighted_integral(GaussianSeries::term(Rational(1), 1, 2 * n, 0, 0))
		                  .coeff(0, 0)
		                  .to_double();
		if (n > 1)
			ratio = term / prev;
		prev = term;
	}
	bool ratioOk = std::abs(ratio - 0.5) <= 0.02;
	out.push_back(fmt("  successive weighted-integral term ratio at n = 30: %.4f "
	                  "(target 0.5 +- 0.02): %s",
	                  ratio, ratioOk ? "yes" : "NO"));
	return rec && ratioOk;
}

bool criterion9(std::vector<std::string> &out)
{
	CaseConfig cfg = configure(1, 1, -0.5);
	Grid g = grid_for(cfg, 100.0, 512);
	AmplitudeTrace tr = amplitude_trace(cfg, g, 0.3, 1.0, 100.0, 160);
	double rate = measured_cubic_rate(tr, 10.0);
	double relErr = std::abs(rate / 0.0321 - 1.0);
	out.push_back("  A1 run (gamma=1, delta=1, r=-0.5, A0=0.3, t 1..100, N=512)");
	out.push_back(fmt("  measured dA/dlog(t)/A^3 over the last decade: %.4f", rate));
	out.push_back(fmt("  reference 0.0321, relative error %.1f%% (tolerance 15%%)",
	                  100 * relErr));
	out.push_back("  note: at this scale the decaying-diffusivity relaxation "
	              "(theta = 0.5 t^-1/2, still 0.05 at t = 100) dominates the measured "
	              "drift, an order of magnitude above the cubic term");
	return relErr <= 0.15;
}

bool criterion10(std::vector<std::string> &out)
{
	CaseConfig cfg = configure(0, 1, -0.5);
	Grid g = grid_for(cfg, 100.0, 512);
	double a0 = 0.1; // drift scales ~ A0^2; the criterion leaves A0 free
	AmplitudeTrace tr = amplitude_trace(cfg, g, a0, 1.0, 100.0, 120);
	double drift = std::abs(tr.samples.back().amplitude - a0) / a0;
	bool driftOk = drift <= 0.02;
	out.push_back(fmt("  B1 amplitude drift over t in [1, 100] at A0 = %.2f: %.3f%% "
	                  "(tolerance 2%%): %s",
	                  a0, 100 * drift, driftOk ? "yes" : "NO"));

	auto linErr = [&](int n) {
		Grid gg = grid_for(cfg, 16.0, n);
		Field f = gaussian_initial(cfg, gg, 0.4, 1.0);
		SolveOptions opt;
		opt.advection = false;
		Field end = solve(cfg, gg, f, {16.0}, opt).back();
		double err = 0;
		for (int i = 0; i < gg.N; ++i)
		{
			double zeta = cfg.zetaScale() * gg.x(i) * std::pow(end.time, -cfg.beta);
			double exact = cfg.Cconst * std::pow(end.time, -cfg.alpha) * 0.4 *
			               std::exp(-0.5 * zeta * zeta);
			err = std::max(err, std::abs(end.values[i] - exact));
		}
		return err;
	};
	double e1 = linErr(128), e2 = linErr(256);
	bool orderOk = e1 / e2 > 3.0 && e1 / e2 < 5.5;
	out.push_back(fmt("  linear-diffusion exact-solution error: N=128 -> %.3e, N=256 -> "
	                  "%.3e, ratio %.2f (second order wants ~4): %s",
	                  e1, e2, e1 / e2, orderOk ? "yes" : "NO"));
	return driftOk && orderOk;
}

bool criterion11(std::vector<std::string> &out)
{
	CaseConfig cfg = configure(1, 1, -0.5);
	Grid g = grid_for(cfg, 100.0, 512);
	AmplitudeTrace tr = amplitude_trace(cfg, g, 0.3, 1.0, 100.0, 160);
	ReductionResult res = reduce_case(CaseTag::A1, ProjectionKind::ListingRecurrence);
	AmplitudeLawODE law = AmplitudeLawODE::from_reduction(res, cfg);
	CompareReport rep = compare(tr, law);
	bool ok = rep.transientFitValid && std::abs(rep.transientExponent - 0.5) <= 0.1;
	out.push_back(fmt("  fitted decay exponent of the early deviation from the integrated "
	                  "law: %.3f (target 0.5 +- 0.1)",
	                  rep.transientExponent));
	out.push_back("  note: the amplitude functional is even in zeta, so the slowest "
	              "amplitude-visible relaxation at these parameters is the second mode "
	              "(exponent 1) plus the theta transient; the field itself relaxes at "
	              "exponent beta = 0.5");
	return ok;
}

} // namespace

int main(int argc, char **argv)
{
	std::vector<Criterion> criteria = {
	    {1, "case A1 law renders to the reference 0.0641*A^3 - 0.0022*A^5", criterion1},
	    {2, "case A1 manifold matches the 19 reference coefficients", criterion2},
	    {3, "case A2 law matches the reference (c = 0 convention)", criterion3},
	    {4, "case B results: B1 exact, B2 law and manifold match", criterion4},
	    {5, "operator spectrum exact for l <= 7, sigma in {1/2, 1, 2}", criterion5},
	    {6, "inverse round trip on every reduction right-hand side", criterion6},
	    {7, "amplitude condition exact after every sweep", criterion7},
	    {8, "inverse-series diagnostics: recurrence exact, ratio -> 1/2", criterion8},
	    {9, "PDE verification, case A1 cubic rate 0.0321 within 15%", criterion9},
	    {10, "PDE verification, case B1 drift <= 2% and O(dx^2) convergence", criterion10},
	    {11, "transient decay exponent 0.5 +- 0.1", criterion11},
	};

	int only = 0;
	if (argc > 1)
		only = std::atoi(argv[1]);

	int failures = 0;
	for (auto &c : criteria)
	{
		if (only && c.id != only)
			continue;
		std::vector<std::string> lines;
		bool ok = false;
		try
		{
			ok = c.run(lines);
		}
		catch (const std::exception &e)
		{
			lines.push_back(fmt("  exception: %s", e.what()));
		}
		std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", c.id, c.title);
		for (auto &l : lines)
			std::printf("%s\n", l.c_str());
		if (!ok)
			++failures;
	}
	if (!only)
		std::printf("%d criterion(s) failed\n", failures);
	return failures ? 1 : 0;
}
