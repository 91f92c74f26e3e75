#pragma once

#include "gburgers/models.hpp"
#include "gburgers/pde.hpp"
#include "gburgers/reducer.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <string>
#include <vector>

namespace gburgers {

inline constexpr const char *kToolVersion = "0.1.0";

// Round to four decimals, ties to even, as an exact integer operation when
// the value is rational; report rendering relies on this being deterministic.
inline std::string round4(const Rational &v)
{
	BigInt scaled = v.num() * BigInt(10000);
	BigInt q, rem;
	BigInt::divmod(scaled, v.den(), q, rem);
	// q truncated toward zero; decide the final unit from the remainder
	BigInt twice = BigInt::abs(rem) * BigInt(2);
	int cmp = twice == v.den() ? 0 : (twice < v.den() ? -1 : 1);
	bool roundAway = cmp > 0 || (cmp == 0 && q % BigInt(2) != BigInt(0));
	if (roundAway)
		q = v.sign() < 0 ? q - BigInt(1) : q + BigInt(1);
	bool neg = q.negative();
	BigInt mag = BigInt::abs(q);
	std::string digits = mag.to_string();
	while (digits.size() < 5)
		digits.insert(digits.begin(), '0');
	std::string s = digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
	if (neg && s.find_first_not_of("0.") != std::string::npos)
		s.insert(s.begin(), '-');
	return s;
}

inline std::string round4(double v)
{
	double r = std::nearbyint(v * 1e4); // FE_TONEAREST: ties to even
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.4f", r / 1e4);
	std::string s = buf;
	if (s == "-0.0000")
		s = "0.0000";
	return s;
}

inline std::string round4(const RadicalSum &v)
{
	if (v.is_rational())
		return round4(v.rational_part());
	return round4(v.to_double());
}

namespace jsonio {

using nlohmann::json;

inline json to_json(const Rational &r)
{
	return json{r.num().to_string(), r.den().to_string()};
}

inline json to_json(const RadicalSum &c)
{
	json j;
	Rational rat = c.rational_part();
	j["numerator"] = rat.num().to_string();
	j["denominator"] = rat.den().to_string();
	json radicals = json::object();
	for (auto &[u, q] : c.parts())
		if (u != 1)
			radicals[std::to_string(u)] = to_json(q);
	if (!radicals.empty())
		j["radicals"] = radicals;
	return j;
}

inline json to_json(const GaussianSeries &s)
{
	json terms = json::array();
	for (auto &[key, c] : s.terms())
	{
		json t = to_json(c);
		t["k"] = key.gaussPow;
		t["n"] = key.zetaPow;
		t["p"] = key.ampPow;
		t["q"] = key.thetaPow;
		terms.push_back(std::move(t));
	}
	return json{{"terms", std::move(terms)}};
}

inline GaussianSeries series_from_json(const json &j)
{
	GaussianSeries s;
	for (auto &t : j.at("terms"))
	{
		RadicalSum c(Rational(BigInt::from_string(t.at("numerator").get<std::string>()),
		                      BigInt::from_string(t.at("denominator").get<std::string>())));
		if (t.contains("radicals"))
			for (auto &[u, q] : t.at("radicals").items())
				c += RadicalSum::sqrt_term(
				    Rational(BigInt::from_string(q.at(0).get<std::string>()),
				             BigInt::from_string(q.at(1).get<std::string>())),
				    std::stoull(u));
		s = s + GaussianSeries::term(c, t.at("k").get<int>(), t.at("n").get<int>(),
		                             t.at("p").get<int>(), t.at("q").get<int>());
	}
	return s;
}

inline json to_json(const AmplitudeTrace &trace)
{
	json samples = json::array();
	for (auto &s : trace.samples)
		samples.push_back({{"t", s.t}, {"A", s.amplitude}, {"theta", s.theta}});
	return json{{"samples", std::move(samples)}};
}

inline json to_json(const AmpPoly &p)
{
	json terms = json::array();
	for (auto &[key, c] : p.terms())
	{
		json t = to_json(c);
		t["p"] = key.first;
		t["q"] = key.second;
		terms.push_back(std::move(t));
	}
	return json{{"terms", std::move(terms)}};
}

} // namespace jsonio

// evolution law in the style of the model tables: "0.0641*A^3 - 0.0022*A^5"
inline std::string render_law(const AmpPoly &law, const std::string &ampName = "A",
                              const std::string &thetaName = "th")
{
	if (law.empty())
		return "0";
	std::string s;
	for (auto &[key, c] : law.terms())
	{
		std::string mag = round4(c);
		bool neg = !mag.empty() && mag[0] == '-';
		if (neg)
			mag.erase(mag.begin());
		if (s.empty())
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		s += mag;
		if (key.first)
			s += "*" + ampName + (key.first > 1 ? "^" + std::to_string(key.first) : "");
		if (key.second)
			s += "*" + thetaName + (key.second > 1 ? "^" + std::to_string(key.second) : "");
	}
	return s;
}

// manifold grouped by (A-power, G-power) blocks, four-decimal coefficients
inline std::string render_manifold(const GaussianSeries &v)
{
	struct Block
	{
		int p, k;
		std::string body;
	};
	std::vector<Block> blocks;
	for (auto &[key, c] : v.terms())
	{
		Block *blk = nullptr;
		for (auto &b : blocks)
			if (b.p == key.ampPow && b.k == key.gaussPow)
				blk = &b;
		if (!blk)
		{
			blocks.push_back({key.ampPow, key.gaussPow, ""});
			blk = &blocks.back();
		}
		std::string mag = round4(c);
		bool neg = !mag.empty() && mag[0] == '-';
		if (neg)
			mag.erase(mag.begin());
		if (blk->body.empty())
			blk->body += neg ? "-" : "";
		else
			blk->body += neg ? " - " : " + ";
		blk->body += mag;
		if (key.zetaPow)
			blk->body += "*z" + std::string(key.zetaPow > 1 ? "^" + std::to_string(key.zetaPow) : "");
		if (key.thetaPow)
			blk->body +=
			    "*th" + std::string(key.thetaPow > 1 ? "^" + std::to_string(key.thetaPow) : "");
	}
	std::sort(blocks.begin(), blocks.end(), [](const Block &a, const Block &b) {
		return std::tie(a.p, a.k) < std::tie(b.p, b.k);
	});
	std::string s;
	for (auto &b : blocks)
	{
		s += "  G";
		if (b.k != 1)
			s += "^" + std::to_string(b.k);
		s += "*A";
		if (b.p != 1)
			s += "^" + std::to_string(b.p);
		s += " * ( " + b.body + " )\n";
	}
	return s;
}

inline nlohmann::json manifest_json(const std::string &command, const nlohmann::json &params,
                                    const std::vector<std::string> &outputs)
{
	nlohmann::json j;
	j["tool"] = "gburgers";
	j["version"] = kToolVersion;
	j["command"] = command;
	j["parameters"] = params;
	j["outputs"] = outputs;
	std::time_t now = std::time(nullptr);
	char buf[32];
	std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
	j["timestamp"] = buf;
	return j;
}

inline void write_text(const std::string &path, const std::string &content)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	out << content;
}

inline void write_trace_csv(const std::string &path, const AmplitudeTrace &trace)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	out << "t,A,theta\n";
	char buf[96];
	for (auto &s : trace.samples)
	{
		std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", s.t, s.amplitude, s.theta);
		out << buf;
	}
}

inline void write_snapshot_csv(const std::string &path, const Field &f, const Grid &g)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	out << "x,u\n";
	char buf[96];
	for (int i = 0; i < g.N; ++i)
	{
		std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", g.x(i), f.values[i]);
		out << buf;
	}
}

} // namespace gburgers
