#pragma once

#include "gburgers/amp_poly.hpp"
#include "gburgers/gauss_series.hpp"

#include <stdexcept>
#include <string>

namespace gburgers {

// The linear operator S_sigma = d^2/dz^2 + z d/dz + sigma acting on Gaussian
// series, its Hermite eigenmodes, the recursive inverse on the range, and the
// Gaussian-weighted integral used for the amplitude projection.

struct OperatorSigma
{
	Rational sigma = Rational(1);
};

// S_sigma v, truncated. Composed from diff_zeta so there is a single source
// of truth for the derivative rule; intermediate degrees exceed t.zetaOrder
// by up to two, so callers must pass a working (guarded) truncation.
inline GaussianSeries apply_S(const OperatorSigma &op, const GaussianSeries &v,
                              const Truncation &t)
{
	GaussianSeries d1 = v.diff_zeta();
	GaussianSeries d2 = d1.diff_zeta();
	GaussianSeries zd1 = d1.shifted(0, 1, 0, 0, t.with_zeta_guard(2));
	return (d2 + zd1 + v.scaled(op.sigma)).truncated(t);
}

inline GaussianSeries apply_S(const Rational &sigma, const GaussianSeries &v,
                              const Truncation &t)
{
	return apply_S(OperatorSigma{sigma}, v, t);
}

// Probabilists' Hermite polynomial H_l(z) times G, the eigenmode of S_sigma
// with eigenvalue sigma - 1 - l (phi'' - z phi' + l phi = 0).
inline GaussianSeries hermite_mode(int l)
{
	if (l < 0)
		throw std::invalid_argument("hermite_mode: l < 0");
	// He_{j+1} = z He_j - j He_{j-1}
	std::vector<Rational> prev{Rational(1)}, cur{Rational(0), Rational(1)};
	if (l == 0)
		cur = prev;
	for (int j = 1; j < l; ++j)
	{
		std::vector<Rational> next(j + 2, Rational(0));
		for (size_t i = 0; i < cur.size(); ++i)
			next[i + 1] += cur[i];
		for (size_t i = 0; i < prev.size(); ++i)
			next[i] -= Rational(j) * prev[i];
		prev = std::move(cur);
		cur = std::move(next);
	}
	GaussianSeries s;
	for (size_t n = 0; n < cur.size(); ++n)
		if (!cur[n].is_zero())
			s = s + GaussianSeries::term(cur[n], 1, static_cast<int>(n), 0, 0);
	return s;
}

// eigenvalue lambda_l = sigma - 1 - l
inline Rational spectrum_eigenvalue(const Rational &sigma, int l)
{
	return sigma - Rational(1) - Rational(l);
}

struct LinvError : std::runtime_error
{
	explicit LinvError(const std::string &what) : std::runtime_error(what) {}
};

namespace detail {

// linv on a single monomial z^n G^k (amplitude factors ride along unchanged).
// Rewrite recursion:
//   odd n, k == 1:  exact downward chain ending at linv(z G) = -z G
//   otherwise:      (z^{n+2} G^k - linv((3+n-5k-2nk) z^{n+2} G^k
//                     + k(k-1) z^{n+4} G^k)) / ((n+2)(n+1))
// The upward branch terminates because degrees at or above t.zetaOrder are
// discarded; depth is capped to catch inputs outside the representable range.
inline void linv_term(int k, int n, const RadicalSum &c, int ampPow, int thetaPow,
                      const Truncation &t, GaussianSeries &out, int depth)
{
	if (c.is_zero() || n >= t.zetaOrder)
		return;
	if (k < 1)
		throw LinvError("linv: term z^" + std::to_string(n) + "*G^" + std::to_string(k) +
		                " has no Gaussian factor");
	if (depth > 8 * t.zetaOrder + 64)
		throw LinvError("linv: recursion cap exceeded at z^" + std::to_string(n) + "*G^" +
		                std::to_string(k));
	if (k == 1 && n % 2 == 1)
	{
		if (n == 1)
		{
			out = out + GaussianSeries::term(-c, 1, 1, ampPow, thetaPow);
			return;
		}
		// (z^n G - linv((n^2 - n) z^{n-2} G)) / (-n)
		//   = -(1/n) z^n G + linv((n - 1) z^{n-2} G)
		out = out + GaussianSeries::term(c * Rational(-1, n), 1, n, ampPow, thetaPow);
		linv_term(1, n - 2, c * Rational(n - 1), ampPow, thetaPow, t, out, depth + 1);
		return;
	}
	Rational inv(1, static_cast<std::int64_t>(n + 2) * (n + 1));
	RadicalSum lead = c * inv;
	if (n + 2 < t.zetaOrder)
		out = out + GaussianSeries::term(lead, k, n + 2, ampPow, thetaPow);
	std::int64_t c1 = 3 + n - 5ll * k - 2ll * n * k;
	linv_term(k, n + 2, lead * Rational(-c1), ampPow, thetaPow, t, out, depth + 1);
	if (k > 1)
		linv_term(k, n + 4, lead * Rational(-static_cast<std::int64_t>(k) * (k - 1)), ampPow,
		          thetaPow, t, out, depth + 1);
}

} // namespace detail

// Solve S_1 w = rhs up to the truncation order. The result is the rewrite
// rules' particular solution; it carries no normalization, the reducer
// restores the amplitude condition separately.
inline GaussianSeries linv(const GaussianSeries &rhs, const Truncation &t)
{
	GaussianSeries out;
	for (auto &[key, c] : rhs.terms())
		detail::linv_term(key.gaussPow, key.zetaPow, c, key.ampPow, key.thetaPow, t, out, 0);
	return out.truncated(t);
}

// integral over the real line of v * G^weightPow, returned as an exact
// polynomial in (A, theta) whose coefficients multiply sqrt(pi):
//   integral z^{2m} exp(-a z^2 / 2) dz = (2m-1)!! a^{-m} sqrt(2 pi / a),
// with a = gaussPow + weightPow, and sqrt(2 pi / a) = sqrt(pi) * sqrt(2a)/a.
// Odd zeta powers vanish. weightPow 1 is the amplitude weight, 0 the plain
// mass integral (which then requires gaussPow >= 1 on every term).
inline AmpPoly weighted_integral(const GaussianSeries &v, int weightPow = 1)
{
	AmpPoly out;
	for (auto &[key, c] : v.terms())
	{
		if (key.zetaPow % 2 == 1)
			continue;
		int a = key.gaussPow + weightPow;
		if (a < 1)
			throw std::invalid_argument("weighted_integral: divergent term (no Gaussian)");
		int m = key.zetaPow / 2;
		Rational factor(odd_double_factorial(m), BigInt(1));
		factor = factor / Rational(a).pow(m);
		RadicalSum radical = RadicalSum::sqrt_term(Rational(1, a), 2 * static_cast<std::uint64_t>(a));
		out.accumulate(key.ampPow, key.thetaPow, c * (radical * factor));
	}
	return out;
}

// (1/sqrt(pi)) * integral of v * G; equals A on any valid manifold state
inline AmpPoly project_amplitude(const GaussianSeries &v) { return weighted_integral(v, 1); }

// plain integral of v over the line, as a multiple of sqrt(pi)
inline AmpPoly mass_integral(const GaussianSeries &v) { return weighted_integral(v, 0); }

// The progressive-power moment recurrence
//   I(z^p G^k) = (p-1)/(k+1) * I(z^{p-2} G^{k+1}),  I(G^k) = sqrt(2 pi/(k+1)),
// which raises the Gaussian power with every reduction step, so
//   I(z^{2m} G^k) = (2m-1)!! / ((k+1)...(k+m)) * sqrt(2 pi / (k+m+1)).
// It agrees with the true moments only at k = 1, m <= 1; it is kept (exactly)
// because the shipped model tables were produced with it. Returned as the
// cofactor of sqrt(pi), like weighted_integral.
inline AmpPoly weighted_integral_recurrence(const GaussianSeries &v)
{
	AmpPoly out;
	for (auto &[key, c] : v.terms())
	{
		if (key.zetaPow % 2 == 1)
			continue;
		int k = key.gaussPow, m = key.zetaPow / 2;
		Rational factor(odd_double_factorial(m), BigInt(1));
		for (int j = k + 1; j <= k + m; ++j)
			factor = factor / Rational(j);
		int a = k + m + 1;
		RadicalSum radical =
		    RadicalSum::sqrt_term(Rational(1, a), 2 * static_cast<std::uint64_t>(a));
		out.accumulate(key.ampPow, key.thetaPow, c * (radical * factor));
	}
	return out;
}

} // namespace gburgers
