#pragma once

#include "gburgers/gauss_series.hpp"
#include "gburgers/radical.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace gburgers {

// Polynomial in the amplitude A and the perturbation theta with exact
// RadicalSum coefficients. Used for projections and evolution laws.
class AmpPoly {
  public:
	using Key = std::pair<int, int>; // (ampPow, thetaPow)
	using Map = std::map<Key, RadicalSum>;

	AmpPoly() = default;

	static AmpPoly term(RadicalSum c, int p, int q)
	{
		AmpPoly r;
		if (!c.is_zero())
			r.terms_.emplace(Key{p, q}, std::move(c));
		return r;
	}

	bool empty() const { return terms_.empty(); }
	const Map &terms() const { return terms_; }
	RadicalSum coeff(int p, int q) const
	{
		auto it = terms_.find(Key{p, q});
		return it == terms_.end() ? RadicalSum() : it->second;
	}

	void accumulate(int p, int q, const RadicalSum &c)
	{
		if (c.is_zero())
			return;
		Key key{p, q};
		auto it = terms_.find(key);
		if (it == terms_.end())
			terms_.emplace(key, c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	friend AmpPoly operator+(const AmpPoly &a, const AmpPoly &b)
	{
		AmpPoly r = a;
		for (auto &[k, c] : b.terms_)
			r.accumulate(k.first, k.second, c);
		return r;
	}
	friend AmpPoly operator-(const AmpPoly &a)
	{
		AmpPoly r;
		for (auto &[k, c] : a.terms_)
			r.terms_.emplace(k, -c);
		return r;
	}
	friend AmpPoly operator-(const AmpPoly &a, const AmpPoly &b) { return a + (-b); }
	AmpPoly &operator+=(const AmpPoly &b) { return *this = *this + b; }

	AmpPoly scaled(const Rational &c) const
	{
		AmpPoly r;
		if (c.is_zero())
			return r;
		for (auto &[k, v] : terms_)
			r.terms_.emplace(k, v * c);
		return r;
	}

	// embed as a Gaussian series (k = n = 0)
	GaussianSeries as_series() const
	{
		GaussianSeries s;
		for (auto &[k, c] : terms_)
			s = s + GaussianSeries::term(c, 0, 0, k.first, k.second);
		return s;
	}

	// series * poly, exponents add in (A, theta)
	static GaussianSeries mul_series(const GaussianSeries &s, const AmpPoly &p,
	                                 const Truncation &t)
	{
		return GaussianSeries::mul(s, p.as_series(), t);
	}

	double evaluate(double amp, double theta) const
	{
		double v = 0;
		for (auto &[k, c] : terms_)
			v += c.to_double() * std::pow(amp, k.first) * std::pow(theta, k.second);
		return v;
	}

	friend bool operator==(const AmpPoly &a, const AmpPoly &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const AmpPoly &a, const AmpPoly &b) { return !(a == b); }

	std::string to_string() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		for (auto &[k, c] : terms_)
		{
			if (!s.empty())
				s += " + ";
			s += "(" + c.to_string() + ")";
			if (k.first)
				s += "*A^" + std::to_string(k.first);
			if (k.second)
				s += "*th^" + std::to_string(k.second);
		}
		return s;
	}

  private:
	Map terms_;
};

} // namespace gburgers
