#include "gburgers/bigint.hpp"
#include "gburgers/radical.hpp"
#include "gburgers/rational.hpp"

#include <doctest.h>

#include <random>

using namespace gburgers;

TEST_CASE("BigInt arithmetic agrees with __int128 on random inputs")
{
	std::mt19937_64 rng(42);
	std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000'000ll, 1'000'000'000'000ll);
	for (int i = 0; i < 2000; ++i)
	{
		std::int64_t a = dist(rng), b = dist(rng);
		CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
		CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
		__int128 p = static_cast<__int128>(a) * b;
		std::string ps;
		{
			__int128 m = p < 0 ? -p : p;
			if (m == 0)
				ps = "0";
			while (m)
			{
				ps.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
				m /= 10;
			}
			if (p < 0)
				ps.push_back('-');
			std::reverse(ps.begin(), ps.end());
		}
		CHECK((BigInt(a) * BigInt(b)).to_string() == ps);
		if (b != 0)
		{
			BigInt q, r;
			BigInt::divmod(BigInt(a), BigInt(b), q, r);
			CHECK(q.to_string() == std::to_string(a / b));
			CHECK(r.to_string() == std::to_string(a % b));
		}
	}
}

TEST_CASE("BigInt multi-limb round trips through strings")
{
	BigInt a = BigInt::from_string("123456789012345678901234567890123456789");
	BigInt b = BigInt::from_string("-987654321098765432109876543210");
	CHECK(a.to_string() == "123456789012345678901234567890123456789");
	CHECK((a * b).negative());
	CHECK(((a * b) / b).to_string() == a.to_string());
	CHECK(((a * b) % b).is_zero());
	CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
}

TEST_CASE("BigInt divmod invariant on random multi-limb operands")
{
	std::mt19937_64 rng(7);
	auto randBig = [&](int limbs) {
		BigInt v(static_cast<std::int64_t>(rng() >> 34));
		for (int i = 0; i < limbs; ++i)
			v = v * BigInt(static_cast<std::int64_t>(1) << 31) +
			    BigInt(static_cast<std::int64_t>(rng() & 0x7fffffff));
		return rng() & 1 ? -v : v;
	};
	for (int i = 0; i < 500; ++i)
	{
		BigInt a = randBig(1 + static_cast<int>(rng() % 6));
		BigInt b = randBig(1 + static_cast<int>(rng() % 4));
		if (b.is_zero())
			continue;
		BigInt q, r;
		BigInt::divmod(a, b, q, r);
		CHECK(q * b + r == a);
		CHECK(BigInt::abs(r) < BigInt::abs(b));
		if (!r.is_zero())
			CHECK(r.negative() == a.negative());
		BigInt g = BigInt::gcd(a, b);
		if (!a.is_zero())
		{
			CHECK((a % g).is_zero());
			CHECK((b % g).is_zero());
		}
	}
}

TEST_CASE("Rational reduces and orders correctly")
{
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(1, -2) == Rational(-1, 2));
	CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
	CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
	CHECK(Rational(1, 3) < Rational(1, 2));
	CHECK(Rational(-5).pow(3) == Rational(-125));
	CHECK(Rational(2).pow(-2) == Rational(1, 4));
	CHECK(Rational::from_string("-0.0641") == Rational(-641, 10000));
	CHECK(Rational::from_string("23/512") == Rational(23, 512));
	CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
	CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("RadicalSum extracts square parts and multiplies radicals")
{
	CHECK(RadicalSum::sqrt_term(Rational(1), 8) == RadicalSum::sqrt_term(Rational(2), 2));
	CHECK(RadicalSum::sqrt_term(Rational(1), 12) == RadicalSum::sqrt_term(Rational(2), 3));
	CHECK(RadicalSum::sqrt_term(Rational(1), 9) == RadicalSum(Rational(3)));

	RadicalSum r2 = RadicalSum::sqrt_term(Rational(1), 2);
	RadicalSum r3 = RadicalSum::sqrt_term(Rational(1), 3);
	CHECK(r2 * r2 == RadicalSum(Rational(2)));
	CHECK(r2 * r3 == RadicalSum::sqrt_term(Rational(1), 6));
	CHECK((r2 * r3) * r2 == RadicalSum::sqrt_term(Rational(2), 3));

	RadicalSum mixed = RadicalSum(Rational(1, 2)) + r2 - r3;
	CHECK(!mixed.is_rational());
	CHECK(mixed.rational_part() == Rational(1, 2));
	CHECK(mixed.to_double() ==
	      doctest::Approx(0.5 + std::sqrt(2.0) - std::sqrt(3.0)).epsilon(1e-15));
	CHECK((mixed - mixed).is_zero());
}

TEST_CASE("double factorial")
{
	CHECK(odd_double_factorial(0).to_string() == "1");
	CHECK(odd_double_factorial(1).to_string() == "1");
	CHECK(odd_double_factorial(2).to_string() == "3");
	CHECK(odd_double_factorial(3).to_string() == "15");
	CHECK(odd_double_factorial(6).to_string() == "10395");
}
