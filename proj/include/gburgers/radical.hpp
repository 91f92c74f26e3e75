#pragma once

#include "gburgers/rational.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace gburgers {

// Exact number of the form sum_u q_u * sqrt(u) with u squarefree positive
// integers and q_u exact rationals. Closed under +, -, * (sqrt(u)*sqrt(v) =
// g*sqrt(uv/g^2) for g = gcd(u,v)); that is all the engine needs. Pure
// rationals are the u = 1 component.
class RadicalSum {
  public:
	RadicalSum() = default;
	RadicalSum(std::int64_t v) { set(1, Rational(v)); }
	RadicalSum(Rational q) { set(1, std::move(q)); }

	// q * sqrt(radicand); the square part of the radicand is extracted
	static RadicalSum sqrt_term(Rational q, std::uint64_t radicand)
	{
		if (radicand == 0)
			return RadicalSum();
		std::uint64_t outside = 1;
		for (std::uint64_t f = 2; f * f <= radicand; ++f)
			while (radicand % (f * f) == 0)
			{
				radicand /= f * f;
				outside *= f;
			}
		RadicalSum r;
		r.set(radicand, q * Rational(static_cast<std::int64_t>(outside)));
		return r;
	}

	bool is_zero() const { return parts_.empty(); }
	bool is_rational() const
	{
		return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
	}
	// rational component (coefficient of sqrt(1))
	Rational rational_part() const
	{
		auto it = parts_.find(1);
		return it == parts_.end() ? Rational() : it->second;
	}
	const std::map<std::uint64_t, Rational> &parts() const { return parts_; }

	friend RadicalSum operator-(const RadicalSum &a)
	{
		RadicalSum r;
		for (auto &[u, q] : a.parts_)
			r.parts_.emplace(u, -q);
		return r;
	}
	friend RadicalSum operator+(const RadicalSum &a, const RadicalSum &b)
	{
		RadicalSum r = a;
		for (auto &[u, q] : b.parts_)
			r.set(u, r.get(u) + q);
		return r;
	}
	friend RadicalSum operator-(const RadicalSum &a, const RadicalSum &b) { return a + (-b); }
	friend RadicalSum operator*(const RadicalSum &a, const RadicalSum &b)
	{
		RadicalSum r;
		for (auto &[u, qa] : a.parts_)
			for (auto &[v, qb] : b.parts_)
			{
				std::uint64_t g = std::gcd(u, v);
				std::uint64_t w = (u / g) * (v / g);
				r.set(w, r.get(w) + qa * qb * Rational(static_cast<std::int64_t>(g)));
			}
		return r;
	}
	RadicalSum &operator+=(const RadicalSum &b) { return *this = *this + b; }
	RadicalSum &operator-=(const RadicalSum &b) { return *this = *this - b; }
	RadicalSum &operator*=(const RadicalSum &b) { return *this = *this * b; }

	friend RadicalSum operator*(const RadicalSum &a, const Rational &q)
	{
		RadicalSum r;
		if (q.is_zero())
			return r;
		for (auto &[u, c] : a.parts_)
			r.parts_.emplace(u, c * q);
		return r;
	}
	friend RadicalSum operator/(const RadicalSum &a, const Rational &q)
	{
		RadicalSum r;
		for (auto &[u, c] : a.parts_)
			r.parts_.emplace(u, c / q);
		return r;
	}

	friend bool operator==(const RadicalSum &a, const RadicalSum &b)
	{
		return a.parts_ == b.parts_;
	}
	friend bool operator!=(const RadicalSum &a, const RadicalSum &b) { return !(a == b); }

	double to_double() const
	{
		double v = 0;
		for (auto &[u, q] : parts_)
			v += q.to_double() * std::sqrt(static_cast<double>(u));
		return v;
	}

	std::string to_string() const
	{
		if (parts_.empty())
			return "0";
		std::string s;
		bool first = true;
		for (auto &[u, q] : parts_)
		{
			if (!first)
				s += " + ";
			first = false;
			s += q.to_string();
			if (u != 1)
				s += "*sqrt(" + std::to_string(u) + ")";
		}
		return s;
	}

  private:
	std::map<std::uint64_t, Rational> parts_; // squarefree radicand -> coefficient

	Rational get(std::uint64_t u) const
	{
		auto it = parts_.find(u);
		return it == parts_.end() ? Rational() : it->second;
	}
	void set(std::uint64_t u, Rational q)
	{
		if (q.is_zero())
			parts_.erase(u);
		else
			parts_[u] = std::move(q);
	}
};

} // namespace gburgers
