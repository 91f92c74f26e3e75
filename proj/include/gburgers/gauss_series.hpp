#pragma once

#include "gburgers/radical.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gburgers {

// One monomial zeta^n * G^k * A^p * theta^q with G = exp(-zeta^2/2).
// Canonical ordering: gaussPow, then ampPow, thetaPow, zetaPow.
struct TermKey
{
	int gaussPow = 0;  // k
	int zetaPow = 0;   // n
	int ampPow = 0;    // p
	int thetaPow = 0;  // q

	friend bool operator==(const TermKey &, const TermKey &) = default;
	friend bool operator<(const TermKey &a, const TermKey &b)
	{
		return std::tie(a.gaussPow, a.ampPow, a.thetaPow, a.zetaPow) <
		       std::tie(b.gaussPow, b.ampPow, b.thetaPow, b.zetaPow);
	}
};

// Discard zeta^n for n >= zetaOrder, A^p for p >= ampOrder, theta^q for
// q >= thetaOrder. thetaOrder 1 means theta never appears.
struct Truncation
{
	int zetaOrder = 8;
	int ampOrder = 6;
	int thetaOrder = 1;

	bool keeps(const TermKey &t) const
	{
		return t.zetaPow < zetaOrder && t.ampPow < ampOrder && t.thetaPow < thetaOrder;
	}
	Truncation with_zeta_guard(int extra) const
	{
		return Truncation{zetaOrder + extra, ampOrder, thetaOrder};
	}
};

// Finite sum of TermKey monomials with exact RadicalSum coefficients.
// Canonical: no stored zeros, keys unique. Values are immutable in spirit;
// every operation returns a fresh series.
class GaussianSeries {
  public:
	using Map = std::map<TermKey, RadicalSum>;

	GaussianSeries() = default;

	static GaussianSeries term(RadicalSum c, int k, int n, int p, int q)
	{
		if (k < 0 || n < 0 || p < 0 || q < 0)
			throw std::invalid_argument("GaussianSeries: negative exponent");
		GaussianSeries s;
		if (!c.is_zero())
			s.terms_.emplace(TermKey{k, n, p, q}, std::move(c));
		return s;
	}
	static GaussianSeries term(Rational c, int k, int n, int p, int q)
	{
		return term(RadicalSum(std::move(c)), k, n, p, q);
	}
	// the critical mode A*G
	static GaussianSeries amplitude_mode() { return term(Rational(1), 1, 0, 1, 0); }

	bool empty() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	const Map &terms() const { return terms_; }
	RadicalSum coeff(int k, int n, int p, int q) const
	{
		auto it = terms_.find(TermKey{k, n, p, q});
		return it == terms_.end() ? RadicalSum() : it->second;
	}

	friend GaussianSeries operator+(const GaussianSeries &a, const GaussianSeries &b)
	{
		GaussianSeries r = a;
		for (auto &[key, c] : b.terms_)
			r.accumulate(key, c);
		return r;
	}
	friend GaussianSeries operator-(const GaussianSeries &a, const GaussianSeries &b)
	{
		GaussianSeries r = a;
		for (auto &[key, c] : b.terms_)
			r.accumulate(key, -c);
		return r;
	}
	friend GaussianSeries operator-(const GaussianSeries &a)
	{
		GaussianSeries r;
		for (auto &[key, c] : a.terms_)
			r.terms_.emplace(key, -c);
		return r;
	}

	GaussianSeries scaled(const RadicalSum &c) const
	{
		GaussianSeries r;
		if (c.is_zero())
			return r;
		for (auto &[key, v] : terms_)
		{
			RadicalSum w = v * c;
			if (!w.is_zero())
				r.terms_.emplace(key, std::move(w));
		}
		return r;
	}
	GaussianSeries scaled(const Rational &c) const { return scaled(RadicalSum(c)); }

	// distributed product; Gaussian powers add (G^k * G^l = G^(k+l))
	static GaussianSeries mul(const GaussianSeries &a, const GaussianSeries &b,
	                          const Truncation &t)
	{
		GaussianSeries r;
		for (auto &[ka, ca] : a.terms_)
			for (auto &[kb, cb] : b.terms_)
			{
				TermKey key{ka.gaussPow + kb.gaussPow, ka.zetaPow + kb.zetaPow,
				            ka.ampPow + kb.ampPow, ka.thetaPow + kb.thetaPow};
				if (!t.keeps(key))
					continue;
				r.accumulate(key, ca * cb);
			}
		return r;
	}

	GaussianSeries truncated(const Truncation &t) const
	{
		GaussianSeries r;
		for (auto &[key, c] : terms_)
			if (t.keeps(key))
				r.terms_.emplace(key, c);
		return r;
	}

	// d/dzeta: zeta^n G^k -> n zeta^(n-1) G^k - k zeta^(n+1) G^k.
	// Raises the top zeta degree by one; callers carry guard order.
	GaussianSeries diff_zeta() const
	{
		GaussianSeries r;
		for (auto &[key, c] : terms_)
		{
			if (key.zetaPow > 0)
				r.accumulate(TermKey{key.gaussPow, key.zetaPow - 1, key.ampPow, key.thetaPow},
				             c * Rational(key.zetaPow));
			if (key.gaussPow > 0)
				r.accumulate(TermKey{key.gaussPow, key.zetaPow + 1, key.ampPow, key.thetaPow},
				             c * Rational(-key.gaussPow));
		}
		return r;
	}

	// partial derivative in the amplitude: A^p -> p A^(p-1)
	GaussianSeries diff_amp() const
	{
		GaussianSeries r;
		for (auto &[key, c] : terms_)
			if (key.ampPow > 0)
				r.accumulate(TermKey{key.gaussPow, key.zetaPow, key.ampPow - 1, key.thetaPow},
				             c * Rational(key.ampPow));
		return r;
	}

	// theta * d/dtheta: A^p theta^q -> q A^p theta^q (used for the c*theta rate term)
	GaussianSeries theta_euler() const
	{
		GaussianSeries r;
		for (auto &[key, c] : terms_)
			if (key.thetaPow > 0)
				r.terms_.emplace(key, c * Rational(key.thetaPow));
		return r;
	}

	// multiply by a plain monomial zeta^n G^k A^p theta^q
	GaussianSeries shifted(int k, int n, int p, int q, const Truncation &t) const
	{
		GaussianSeries r;
		for (auto &[key, c] : terms_)
		{
			TermKey nk{key.gaussPow + k, key.zetaPow + n, key.ampPow + p, key.thetaPow + q};
			if (t.keeps(nk))
				r.terms_.emplace(nk, c);
		}
		return r;
	}

	double evaluate(double zeta, double amp, double theta) const
	{
		double v = 0;
		for (auto &[key, c] : terms_)
			v += c.to_double() * std::pow(zeta, key.zetaPow) *
			     std::exp(-0.5 * key.gaussPow * zeta * zeta) * std::pow(amp, key.ampPow) *
			     std::pow(theta, key.thetaPow);
		return v;
	}

	int max_zeta_pow() const
	{
		int m = -1;
		for (auto &[key, c] : terms_)
			m = std::max(m, key.zetaPow);
		return m;
	}

	friend bool operator==(const GaussianSeries &a, const GaussianSeries &b)
	{
		return a.terms_ == b.terms_;
	}
	friend bool operator!=(const GaussianSeries &a, const GaussianSeries &b)
	{
		return !(a == b);
	}

	std::string to_string() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (auto &[key, c] : terms_)
		{
			if (!s.empty())
				s += " + ";
			s += "(" + c.to_string() + ")";
			if (key.zetaPow)
				s += "*z^" + std::to_string(key.zetaPow);
			if (key.gaussPow)
				s += "*G^" + std::to_string(key.gaussPow);
			if (key.ampPow)
				s += "*A^" + std::to_string(key.ampPow);
			if (key.thetaPow)
				s += "*th^" + std::to_string(key.thetaPow);
		}
		return s;
	}

  private:
	Map terms_;

	void accumulate(const TermKey &key, const RadicalSum &c)
	{
		if (c.is_zero())
			return;
		auto it = terms_.find(key);
		if (it == terms_.end())
		{
			terms_.emplace(key, c);
			return;
		}
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
};

} // namespace gburgers
