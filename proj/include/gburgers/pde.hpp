#pragma once

#include "gburgers/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gburgers {

struct PdeError : std::runtime_error
{
	explicit PdeError(const std::string &what) : std::runtime_error(what) {}
};

// Fixed physical-x grid, N interior nodes on (-L, L), solution pinned to zero
// at both ends.
struct Grid
{
	double L = 0;
	int N = 0;

	Grid() = default;
	Grid(double halfWidth, int interior) : L(halfWidth), N(interior)
	{
		if (N < 64)
			throw std::invalid_argument("Grid: N must be >= 64");
		if (L <= 0)
			throw std::invalid_argument("Grid: L must be > 0");
	}
	double dx() const { return 2.0 * L / (N + 1); }
	double x(int i) const { return -L + (i + 1) * dx(); }
};

struct Field
{
	std::vector<double> values; // interior nodes
	double time = 0;
};

// grid wide enough that the similarity window |zeta| <= zetaSpan fits at tEnd
inline Grid grid_for(const CaseConfig &cfg, double tEnd, int N, double zetaSpan = 8.0)
{
	double width = zetaSpan / cfg.zetaScale() * std::pow(tEnd, cfg.beta);
	return Grid(width, N);
}

// u(x, t0) = C t0^-alpha * a0 * exp(-zeta^2/2)
inline Field gaussian_initial(const CaseConfig &cfg, const Grid &g, double a0, double t0)
{
	Field f;
	f.time = t0;
	f.values.resize(g.N);
	double s = cfg.zetaScale() * std::pow(t0, -cfg.beta);
	double amp = cfg.Cconst * std::pow(t0, -cfg.alpha) * a0;
	for (int i = 0; i < g.N; ++i)
	{
		double zeta = s * g.x(i);
		f.values[i] = amp * std::exp(-0.5 * zeta * zeta);
	}
	return f;
}

inline double mass(const Field &f, const Grid &g)
{
	// trapezoid with zero boundaries == dx * sum
	double m = 0;
	for (double v : f.values)
		m += v;
	return m * g.dx();
}

struct SolveOptions
{
	double cfl = 0.4;
	bool advection = true; // disable for the pure-diffusion oracle runs
	int nanCheckInterval = 64;
};

namespace detail {

// conservative flux form: du/dt = -d(u^2/2)/dx + (Delta(t)/2) d2u/dx2
inline void pde_rhs(const CaseConfig &cfg, const Grid &g, const std::vector<double> &u, double t,
                    bool advection, std::vector<double> &out)
{
	int n = g.N;
	double dx = g.dx();
	double nu = 0.5 * cfg.diffusivity(t);
	out.resize(n);
	auto at = [&](int i) { return (i < 0 || i >= n) ? 0.0 : u[i]; };
	for (int i = 0; i < n; ++i)
	{
		double diff = nu * (at(i + 1) - 2.0 * u[i] + at(i - 1)) / (dx * dx);
		double adv = 0;
		if (advection)
		{
			double fp = 0.5 * at(i + 1) * at(i + 1);
			double fm = 0.5 * at(i - 1) * at(i - 1);
			adv = -(fp - fm) / (2.0 * dx);
		}
		out[i] = diff + adv;
	}
}

} // namespace detail

// Method-of-lines integration with classic fourth-order stepping; the step is
// bounded by both the diffusive and advective limits at the current time.
// Returns the field at each requested sample time (ascending, first >= t of
// the initial field).
inline std::vector<Field> solve(const CaseConfig &cfg, const Grid &g, Field field,
                                const std::vector<double> &sampleTimes,
                                const SolveOptions &opt = {})
{
	if (sampleTimes.empty())
		return {};
	if (opt.cfl <= 0 || opt.cfl > 0.5)
		throw std::invalid_argument("solve: cfl must be in (0, 0.5]");
	if (field.time <= 0)
		throw std::invalid_argument("solve: initial time must be > 0");

	std::vector<Field> snapshots;
	snapshots.reserve(sampleTimes.size());
	std::vector<double> k1, k2, k3, k4, tmp;
	double dx = g.dx();
	long step = 0;

	for (double target : sampleTimes)
	{
		if (target < field.time - 1e-12)
			throw std::invalid_argument("solve: sample times must be ascending");
		while (field.time < target)
		{
			double umax = 0;
			for (double v : field.values)
				umax = std::max(umax, std::abs(v));
			double dt = opt.cfl * dx * dx / std::max(cfg.diffusivity(field.time), 1e-300);
			if (opt.advection && umax > 0)
				dt = std::min(dt, opt.cfl * dx / umax);
			dt = std::min(dt, target - field.time);
			if (!(dt > 0) || dt < 1e-14 * field.time)
				throw PdeError("solve: step size underflow at t = " +
				               std::to_string(field.time));

			auto &u = field.values;
			double t = field.time;
			detail::pde_rhs(cfg, g, u, t, opt.advection, k1);
			tmp.resize(u.size());
			for (size_t i = 0; i < u.size(); ++i)
				tmp[i] = u[i] + 0.5 * dt * k1[i];
			detail::pde_rhs(cfg, g, tmp, t + 0.5 * dt, opt.advection, k2);
			for (size_t i = 0; i < u.size(); ++i)
				tmp[i] = u[i] + 0.5 * dt * k2[i];
			detail::pde_rhs(cfg, g, tmp, t + 0.5 * dt, opt.advection, k3);
			for (size_t i = 0; i < u.size(); ++i)
				tmp[i] = u[i] + dt * k3[i];
			detail::pde_rhs(cfg, g, tmp, t + dt, opt.advection, k4);
			for (size_t i = 0; i < u.size(); ++i)
				u[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
			field.time = t + dt;

			if (++step % opt.nanCheckInterval == 0)
				for (double v : u)
					if (!std::isfinite(v))
						throw PdeError("solve: non-finite field at t = " +
						               std::to_string(field.time));
		}
		snapshots.push_back(field);
	}
	return snapshots;
}

// A = (1/sqrt(pi)) * integral v exp(-zeta^2/2) dzeta with v = u/(C t^-alpha),
// zeta = zetaScale * x * t^-beta; trapezoid on the grid.
inline double extract_amplitude(const Field &f, const CaseConfig &cfg, const Grid &g)
{
	if (f.time <= 0)
		throw std::invalid_argument("extract_amplitude: t must be > 0");
	double s = cfg.zetaScale() * std::pow(f.time, -cfg.beta);
	double vScale = 1.0 / (cfg.Cconst * std::pow(f.time, -cfg.alpha));
	double dzeta = s * g.dx();
	double sum = 0;
	for (int i = 0; i < g.N; ++i)
	{
		double zeta = s * g.x(i);
		sum += vScale * f.values[i] * std::exp(-0.5 * zeta * zeta);
	}
	return sum * dzeta / std::sqrt(M_PI);
}

inline std::vector<double> log_spaced(double t0, double t1, int n)
{
	std::vector<double> ts(n);
	for (int i = 0; i < n; ++i)
		ts[i] = t0 * std::pow(t1 / t0, static_cast<double>(i) / (n - 1));
	return ts;
}

// full pipeline: gaussian data at t0, integrate, sample the amplitude
inline AmplitudeTrace amplitude_trace(const CaseConfig &cfg, const Grid &g, double a0, double t0,
                                      double t1, int samples, const SolveOptions &opt = {})
{
	Field f = gaussian_initial(cfg, g, a0, t0);
	AmplitudeTrace trace;
	for (auto &snap : solve(cfg, g, f, log_spaced(t0, t1, samples), opt))
		trace.samples.push_back(
		    {snap.time, extract_amplitude(snap, cfg, g), cfg.theta_of_t(snap.time)});
	return trace;
}

namespace detail {

// RK4 in s = log t from (t0, a0) to t1; works in either direction
inline double integrate_law_between(const AmplitudeLawODE &law, double a0, double t0, double t1,
                                    int steps = 400)
{
	double s0 = std::log(t0), s1 = std::log(t1);
	double ds = (s1 - s0) / steps;
	double a = a0;
	for (int i = 0; i < steps; ++i)
	{
		double s = s0 + i * ds;
		auto f = [&](double as, double ss) { return law.rhs_log_t(as, std::exp(ss)); };
		double k1 = f(a, s);
		double k2 = f(a + 0.5 * ds * k1, s + 0.5 * ds);
		double k3 = f(a + 0.5 * ds * k2, s + 0.5 * ds);
		double k4 = f(a + ds * k3, s + ds);
		a += ds / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
	}
	return a;
}

} // namespace detail

struct CompareReport
{
	double maxRelDeviation = 0;   // over the late-time window
	double lateWindowStart = 0;
	double transientExponent = 0; // fitted decay power of the early deviation
	double beta = 0;              // configured transient exponent for reference
	bool transientFitValid = false;
};

// Integrate the law from the first sample inside the late-time window (the
// last decade by default) and report the worst relative deviation there; fit
// the early-time deviation against t^-p for the transient exponent.
inline CompareReport compare(const AmplitudeTrace &trace, const AmplitudeLawODE &law,
                             double lateWindowFraction = 0.1)
{
	if (trace.samples.size() < 8)
		throw std::invalid_argument("compare: trace too short");
	double tFirst = trace.samples.front().t;
	double tLast = trace.samples.back().t;
	if (tLast < 10.0 * tFirst)
		throw std::invalid_argument("compare: trace must span at least one decade");

	CompareReport rep;
	rep.beta = law.config.beta;
	rep.lateWindowStart = tLast * lateWindowFraction;

	size_t anchor = 0;
	while (anchor < trace.samples.size() && trace.samples[anchor].t < rep.lateWindowStart)
		++anchor;
	if (anchor >= trace.samples.size() - 1)
		anchor = trace.samples.size() - 2;
	double tA = trace.samples[anchor].t;
	double aA = trace.samples[anchor].amplitude;

	for (size_t i = anchor; i < trace.samples.size(); ++i)
	{
		double model = detail::integrate_law_between(law, aA, tA, trace.samples[i].t);
		double dev = std::abs(trace.samples[i].amplitude - model) /
		             std::max(std::abs(model), 1e-300);
		rep.maxRelDeviation = std::max(rep.maxRelDeviation, dev);
	}

	// early deviation from the law anchored late; fit log|dev| ~ -p log t
	std::vector<double> lx, ly;
	for (size_t i = 0; i < anchor; ++i)
	{
		double t = trace.samples[i].t;
		if (t < 1.2 * tFirst || t > 0.5 * tA)
			continue;
		double model = detail::integrate_law_between(law, aA, tA, t);
		double dev = std::abs(trace.samples[i].amplitude - model);
		if (dev < 1e-13)
			continue;
		lx.push_back(std::log(t));
		ly.push_back(std::log(dev));
	}
	if (lx.size() >= 4)
	{
		double n = static_cast<double>(lx.size());
		double sx = 0, sy = 0, sxx = 0, sxy = 0;
		for (size_t i = 0; i < lx.size(); ++i)
		{
			sx += lx[i];
			sy += ly[i];
			sxx += lx[i] * lx[i];
			sxy += lx[i] * ly[i];
		}
		double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
		rep.transientExponent = -slope;
		rep.transientFitValid = true;
	}
	return rep;
}

// Fit of dA/d(log t) / A^3 over [tWindowStart, end of trace]; this is the
// cubic-rate estimate the verification acceptance uses.
inline double measured_cubic_rate(const AmplitudeTrace &trace, double tWindowStart)
{
	double num = 0;
	int count = 0;
	for (size_t i = 0; i + 1 < trace.samples.size(); ++i)
	{
		const auto &a = trace.samples[i];
		const auto &b = trace.samples[i + 1];
		if (a.t < tWindowStart)
			continue;
		double ds = std::log(b.t) - std::log(a.t);
		double mid = 0.5 * (a.amplitude + b.amplitude);
		num += (b.amplitude - a.amplitude) / ds / (mid * mid * mid);
		++count;
	}
	if (!count)
		throw std::invalid_argument("measured_cubic_rate: empty window");
	return num / count;
}

} // namespace gburgers
