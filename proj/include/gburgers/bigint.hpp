#pragma once

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gburgers {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
// (little endian). Magnitudes in this project stay small (a few hundred
// bits), so schoolbook multiplication and long division are plenty.
class BigInt {
  public:
	BigInt() = default;
	BigInt(std::int64_t v)
	{
		if (v < 0)
		{
			neg_ = true;
			// avoid overflow on INT64_MIN
			std::uint64_t m = ~static_cast<std::uint64_t>(v) + 1;
			push_u64(m);
		}
		else
			push_u64(static_cast<std::uint64_t>(v));
		trim();
	}

	static BigInt from_string(std::string_view s)
	{
		BigInt r;
		bool neg = false;
		size_t i = 0;
		if (i < s.size() && (s[i] == '+' || s[i] == '-'))
			neg = (s[i++] == '-');
		if (i == s.size())
			throw std::invalid_argument("BigInt: empty literal");
		for (; i < s.size(); ++i)
		{
			if (s[i] < '0' || s[i] > '9')
				throw std::invalid_argument("BigInt: bad digit");
			r.mul_small(10);
			r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
		}
		r.neg_ = neg && !r.is_zero();
		return r;
	}

	bool is_zero() const { return limbs_.empty(); }
	bool negative() const { return neg_; }
	int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

	friend BigInt operator-(BigInt a)
	{
		if (!a.is_zero())
			a.neg_ = !a.neg_;
		return a;
	}

	friend BigInt operator+(const BigInt &a, const BigInt &b)
	{
		if (a.neg_ == b.neg_)
		{
			BigInt r = add_mag(a, b);
			r.neg_ = a.neg_ && !r.is_zero();
			return r;
		}
		int c = cmp_mag(a, b);
		if (c == 0)
			return BigInt();
		BigInt r = (c > 0) ? sub_mag(a, b) : sub_mag(b, a);
		r.neg_ = (c > 0 ? a.neg_ : b.neg_) && !r.is_zero();
		return r;
	}
	friend BigInt operator-(const BigInt &a, const BigInt &b) { return a + (-b); }

	friend BigInt operator*(const BigInt &a, const BigInt &b)
	{
		if (a.is_zero() || b.is_zero())
			return BigInt();
		BigInt r;
		r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
		for (size_t i = 0; i < a.limbs_.size(); ++i)
		{
			std::uint64_t carry = 0;
			for (size_t j = 0; j < b.limbs_.size(); ++j)
			{
				std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
				                    r.limbs_[i + j] + carry;
				r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
				carry = cur >> 32;
			}
			r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
		}
		r.trim();
		r.neg_ = (a.neg_ != b.neg_) && !r.is_zero();
		return r;
	}

	// quotient truncated toward zero, remainder has the dividend's sign
	static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r)
	{
		if (b.is_zero())
			throw std::domain_error("BigInt: division by zero");
		BigInt qq, rr;
		if (cmp_mag(a, b) < 0)
		{
			rr = a;
		}
		else if (b.limbs_.size() == 1)
		{
			qq = a;
			std::uint32_t rem = qq.divmod_small(b.limbs_[0]);
			if (rem)
				rr.limbs_.push_back(rem);
		}
		else
		{
			// schoolbook long division on limbs with normalized divisor
			int shift = 0;
			for (std::uint32_t top = b.limbs_.back(); !(top & 0x80000000u); top <<= 1)
				++shift;
			BigInt u = a, v = b;
			u.neg_ = v.neg_ = false;
			u.shl_bits(shift);
			v.shl_bits(shift);
			size_t n = v.limbs_.size(), m = u.limbs_.size() - n;
			u.limbs_.push_back(0);
			qq.limbs_.assign(m + 1, 0);
			std::uint64_t vTop = v.limbs_[n - 1], vNext = v.limbs_[n - 2];
			for (size_t j = m + 1; j-- > 0;)
			{
				std::uint64_t num =
				    (static_cast<std::uint64_t>(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
				std::uint64_t qhat, rhat;
				if ((num >> 32) == vTop)
				{
					qhat = 0xffffffffull;
					rhat = num - qhat * vTop;
				}
				else
				{
					qhat = num / vTop;
					rhat = num % vTop;
				}
				while (rhat <= 0xffffffffull &&
				       qhat * vNext > ((rhat << 32) | u.limbs_[j + n - 2]))
				{
					--qhat;
					rhat += vTop;
				}
				// multiply-subtract, with add-back correction when qhat was high
				std::int64_t borrow = 0;
				std::uint64_t carry = 0;
				for (size_t i = 0; i < n; ++i)
				{
					std::uint64_t p = qhat * v.limbs_[i] + carry;
					carry = p >> 32;
					std::int64_t t = static_cast<std::int64_t>(u.limbs_[i + j]) -
					                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
					borrow = t < 0;
					if (t < 0)
						t += std::int64_t{1} << 32;
					u.limbs_[i + j] = static_cast<std::uint32_t>(t);
				}
				std::int64_t t = static_cast<std::int64_t>(u.limbs_[j + n]) -
				                 static_cast<std::int64_t>(carry) - borrow;
				if (t < 0)
				{
					--qhat;
					std::uint64_t c2 = 0;
					for (size_t i = 0; i < n; ++i)
					{
						std::uint64_t s =
						    static_cast<std::uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + c2;
						u.limbs_[i + j] = static_cast<std::uint32_t>(s);
						c2 = s >> 32;
					}
					t += static_cast<std::int64_t>(c2);
				}
				u.limbs_[j + n] = static_cast<std::uint32_t>(t);
				qq.limbs_[j] = static_cast<std::uint32_t>(qhat);
			}
			u.limbs_.resize(n);
			u.trim();
			u.shr_bits(shift);
			qq.trim();
			rr = u;
		}
		qq.neg_ = (a.neg_ != b.neg_) && !qq.is_zero();
		rr.neg_ = a.neg_ && !rr.is_zero();
		q = qq;
		r = rr;
	}
	friend BigInt operator/(const BigInt &a, const BigInt &b)
	{
		BigInt q, r;
		divmod(a, b, q, r);
		return q;
	}
	friend BigInt operator%(const BigInt &a, const BigInt &b)
	{
		BigInt q, r;
		divmod(a, b, q, r);
		return r;
	}

	friend bool operator==(const BigInt &a, const BigInt &b)
	{
		return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
	}
	friend bool operator!=(const BigInt &a, const BigInt &b) { return !(a == b); }
	friend bool operator<(const BigInt &a, const BigInt &b)
	{
		if (a.neg_ != b.neg_)
			return a.neg_;
		int c = cmp_mag(a, b);
		return a.neg_ ? c > 0 : c < 0;
	}
	friend bool operator>(const BigInt &a, const BigInt &b) { return b < a; }
	friend bool operator<=(const BigInt &a, const BigInt &b) { return !(b < a); }
	friend bool operator>=(const BigInt &a, const BigInt &b) { return !(a < b); }

	static BigInt abs(BigInt a)
	{
		a.neg_ = false;
		return a;
	}

	static BigInt gcd(BigInt a, BigInt b)
	{
		a.neg_ = b.neg_ = false;
		if (a.is_zero())
			return b;
		if (b.is_zero())
			return a;
		// binary gcd: strip shared powers of two, then subtract-and-shift
		size_t za = a.trailing_zero_bits(), zb = b.trailing_zero_bits();
		size_t shift = std::min(za, zb);
		a.shr_bits(za);
		b.shr_bits(zb);
		while (true)
		{
			int c = cmp_mag(a, b);
			if (c == 0)
				break;
			if (c < 0)
				std::swap(a, b);
			a = sub_mag(a, b);
			a.shr_bits(a.trailing_zero_bits());
		}
		a.shl_bits(shift);
		return a;
	}

	std::string to_string() const
	{
		if (is_zero())
			return "0";
		BigInt t = *this;
		t.neg_ = false;
		std::string s;
		while (!t.is_zero())
			s.push_back(static_cast<char>('0' + t.divmod_small(10)));
		if (neg_)
			s.push_back('-');
		std::reverse(s.begin(), s.end());
		return s;
	}

	double to_double() const
	{
		double v = 0;
		for (size_t i = limbs_.size(); i-- > 0;)
			v = v * 4294967296.0 + limbs_[i];
		return neg_ ? -v : v;
	}

	// bits in the magnitude; 0 for zero
	size_t bit_length() const
	{
		if (limbs_.empty())
			return 0;
		std::uint32_t top = limbs_.back();
		size_t n = (limbs_.size() - 1) * 32;
		while (top)
		{
			++n;
			top >>= 1;
		}
		return n;
	}

	bool fits_int64() const
	{
		return bit_length() <= 62; // conservative
	}
	std::int64_t to_int64() const
	{
		std::int64_t v = 0;
		for (size_t i = limbs_.size(); i-- > 0;)
			v = (v << 32) | limbs_[i];
		return neg_ ? -v : v;
	}

  private:
	std::vector<std::uint32_t> limbs_; // empty == zero
	bool neg_ = false;

	void push_u64(std::uint64_t m)
	{
		if (m)
			limbs_.push_back(static_cast<std::uint32_t>(m));
		if (m >> 32)
			limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
	}
	void trim()
	{
		while (!limbs_.empty() && limbs_.back() == 0)
			limbs_.pop_back();
		if (limbs_.empty())
			neg_ = false;
	}
	void shl_bits(size_t bits)
	{
		if (limbs_.empty() || bits == 0)
			return;
		size_t words = bits / 32, rem = bits % 32;
		if (words)
			limbs_.insert(limbs_.begin(), words, 0);
		if (rem)
		{
			std::uint32_t carry = 0;
			for (auto &l : limbs_)
			{
				std::uint32_t nc = l >> (32 - rem);
				l = (l << rem) | carry;
				carry = nc;
			}
			if (carry)
				limbs_.push_back(carry);
		}
	}
	void shr_bits(size_t bits)
	{
		size_t words = bits / 32, rem = bits % 32;
		if (words >= limbs_.size())
		{
			limbs_.clear();
			neg_ = false;
			return;
		}
		if (words)
			limbs_.erase(limbs_.begin(), limbs_.begin() + words);
		if (rem)
		{
			for (size_t i = 0; i < limbs_.size(); ++i)
			{
				limbs_[i] >>= rem;
				if (i + 1 < limbs_.size())
					limbs_[i] |= limbs_[i + 1] << (32 - rem);
			}
		}
		trim();
	}
	size_t trailing_zero_bits() const
	{
		for (size_t i = 0; i < limbs_.size(); ++i)
			if (limbs_[i])
			{
				std::uint32_t v = limbs_[i];
				size_t b = 0;
				while (!(v & 1u))
				{
					v >>= 1;
					++b;
				}
				return i * 32 + b;
			}
		return 0;
	}
	void mul_small(std::uint32_t m)
	{
		std::uint64_t carry = 0;
		for (auto &l : limbs_)
		{
			std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
			l = static_cast<std::uint32_t>(cur);
			carry = cur >> 32;
		}
		if (carry)
			limbs_.push_back(static_cast<std::uint32_t>(carry));
		trim();
	}
	void add_small(std::uint32_t v)
	{
		std::uint64_t carry = v;
		for (auto &l : limbs_)
		{
			if (!carry)
				break;
			std::uint64_t cur = l + carry;
			l = static_cast<std::uint32_t>(cur);
			carry = cur >> 32;
		}
		if (carry)
			limbs_.push_back(static_cast<std::uint32_t>(carry));
	}
	// divide magnitude in place by a small divisor, return remainder
	std::uint32_t divmod_small(std::uint32_t d)
	{
		std::uint64_t rem = 0;
		for (size_t i = limbs_.size(); i-- > 0;)
		{
			std::uint64_t cur = (rem << 32) | limbs_[i];
			limbs_[i] = static_cast<std::uint32_t>(cur / d);
			rem = cur % d;
		}
		trim();
		return static_cast<std::uint32_t>(rem);
	}

	static int cmp_mag(const BigInt &a, const BigInt &b)
	{
		if (a.limbs_.size() != b.limbs_.size())
			return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
		for (size_t i = a.limbs_.size(); i-- > 0;)
			if (a.limbs_[i] != b.limbs_[i])
				return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
		return 0;
	}
	static BigInt add_mag(const BigInt &a, const BigInt &b)
	{
		BigInt r;
		const auto &x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
		const auto &y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
		r.limbs_.resize(x.size());
		std::uint64_t carry = 0;
		for (size_t i = 0; i < x.size(); ++i)
		{
			std::uint64_t cur = static_cast<std::uint64_t>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
			r.limbs_[i] = static_cast<std::uint32_t>(cur);
			carry = cur >> 32;
		}
		if (carry)
			r.limbs_.push_back(static_cast<std::uint32_t>(carry));
		return r;
	}
	// requires |a| >= |b|
	static BigInt sub_mag(const BigInt &a, const BigInt &b)
	{
		BigInt r;
		r.limbs_.resize(a.limbs_.size());
		std::int64_t borrow = 0;
		for (size_t i = 0; i < a.limbs_.size(); ++i)
		{
			std::int64_t cur = static_cast<std::int64_t>(a.limbs_[i]) -
			                   (i < b.limbs_.size() ? b.limbs_[i] : 0) - borrow;
			borrow = cur < 0;
			if (cur < 0)
				cur += (std::int64_t{1} << 32);
			r.limbs_[i] = static_cast<std::uint32_t>(cur);
		}
		r.trim();
		return r;
	}
};

} // namespace gburgers
