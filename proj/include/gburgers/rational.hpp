#pragma once

#include "gburgers/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gburgers {

// Exact rational over BigInt, always stored reduced with positive denominator.
class Rational {
  public:
	Rational() : num_(0), den_(1) {}
	Rational(std::int64_t v) : num_(v), den_(1) {}
	Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
	Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

	// parses "n", "n/d" and plain decimals like "-0.0641"
	static Rational from_string(std::string_view s)
	{
		if (auto pos = s.find('/'); pos != std::string_view::npos)
			return Rational(BigInt::from_string(s.substr(0, pos)),
			                BigInt::from_string(s.substr(pos + 1)));
		if (auto pos = s.find('.'); pos != std::string_view::npos)
		{
			std::string digits(s.substr(0, pos));
			digits += s.substr(pos + 1);
			BigInt den(1);
			for (size_t i = 0; i < s.size() - pos - 1; ++i)
				den = den * BigInt(10);
			return Rational(BigInt::from_string(digits), den);
		}
		return Rational(BigInt::from_string(s), BigInt(1));
	}

	const BigInt &num() const { return num_; }
	const BigInt &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_integer() const { return den_ == BigInt(1); }
	int sign() const { return num_.sign(); }

	friend Rational operator-(const Rational &a) { return Rational::raw(-a.num_, a.den_); }
	friend Rational operator+(const Rational &a, const Rational &b)
	{
		return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
	}
	friend Rational operator-(const Rational &a, const Rational &b)
	{
		return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
	}
	friend Rational operator*(const Rational &a, const Rational &b)
	{
		return Rational(a.num_ * b.num_, a.den_ * b.den_);
	}
	friend Rational operator/(const Rational &a, const Rational &b)
	{
		if (b.is_zero())
			throw std::domain_error("Rational: division by zero");
		return Rational(a.num_ * b.den_, a.den_ * b.num_);
	}
	Rational &operator+=(const Rational &b) { return *this = *this + b; }
	Rational &operator-=(const Rational &b) { return *this = *this - b; }
	Rational &operator*=(const Rational &b) { return *this = *this * b; }
	Rational &operator/=(const Rational &b) { return *this = *this / b; }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
	friend bool operator<(const Rational &a, const Rational &b)
	{
		return a.num_ * b.den_ < b.num_ * a.den_;
	}
	friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
	friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
	friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

	static Rational abs(const Rational &a) { return a.sign() < 0 ? -a : a; }

	Rational pow(int e) const
	{
		if (e < 0)
			return Rational(1) / pow(-e);
		Rational r(1), b = *this;
		while (e)
		{
			if (e & 1)
				r *= b;
			b *= b;
			e >>= 1;
		}
		return r;
	}

	double to_double() const
	{
		// scale down first when either side would overflow a double
		if (num_.bit_length() < 1000 && den_.bit_length() < 1000)
			return num_.to_double() / den_.to_double();
		BigInt n = num_, d = den_;
		size_t shift = std::max(n.bit_length(), d.bit_length()) - 512;
		BigInt two(2), p(1);
		for (size_t i = 0; i < shift; ++i)
			p = p * two;
		return (n / p).to_double() / (d / p).to_double();
	}

	std::string to_string() const
	{
		if (is_integer())
			return num_.to_string();
		return num_.to_string() + "/" + den_.to_string();
	}

  private:
	BigInt num_, den_;

	static Rational raw(BigInt n, BigInt d)
	{
		Rational r;
		r.num_ = std::move(n);
		r.den_ = std::move(d);
		return r;
	}
	void normalize()
	{
		if (den_.is_zero())
			throw std::domain_error("Rational: zero denominator");
		if (den_.negative())
		{
			num_ = -num_;
			den_ = -den_;
		}
		if (num_.is_zero())
		{
			den_ = BigInt(1);
			return;
		}
		BigInt g = BigInt::gcd(num_, den_);
		if (g != BigInt(1))
		{
			num_ = num_ / g;
			den_ = den_ / g;
		}
	}
};

// double factorial (2m-1)!! as an exact integer, (-1)!! = 1
inline BigInt odd_double_factorial(int m)
{
	BigInt r(1);
	for (int j = 3; j <= 2 * m - 1; j += 2)
		r = r * BigInt(j);
	return m >= 1 ? r : BigInt(1);
}

} // namespace gburgers
