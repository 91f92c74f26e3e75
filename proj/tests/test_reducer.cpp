#include "gburgers/reducer.hpp"
#include "gburgers/report.hpp"

#include <doctest.h>

using namespace gburgers;

namespace {

const Truncation kA1{8, 6, 1};
const Truncation kA2{8, 6, 2};
const Truncation kB2{8, 6, 3};

RadicalSum rad(std::int64_t n, std::int64_t d, std::uint64_t u = 1)
{
	return u == 1 ? RadicalSum(Rational(n, d)) : RadicalSum::sqrt_term(Rational(n, d), u);
}

} // namespace

TEST_CASE("residual: steady kernel mode")
{
	// with no nonlinearity the critical mode solves the system outright
	GaussianSeries resid = residual(system_case_b(false), GaussianSeries::amplitude_mode(),
	                                AmpPoly(), kA1.with_zeta_guard(4));
	CHECK(resid.empty());
}

TEST_CASE("residual: quadratic self-interaction of the critical mode")
{
	GaussianSeries resid = residual(system_case_a(false), GaussianSeries::amplitude_mode(),
	                                AmpPoly(), kA1.with_zeta_guard(4));
	// v v_z = -A^2 z G^2 is the only content
	CHECK(resid == GaussianSeries::term(Rational(-1), 2, 1, 2, 0));
}

TEST_CASE("solvability split examples")
{
	GaussianSeries g = GaussianSeries::term(Rational(1), 1, 0, 0, 0);
	SolvabilitySplit s = solvability_split(g);
	CHECK(s.hCorrection == AmpPoly::term(RadicalSum(Rational(-1)), 0, 0));
	CHECK(project_amplitude(s.rangePart).empty());
	CHECK(s.rangePart.empty()); // r = G splits entirely into the kernel direction

	SolvabilitySplit odd = solvability_split(GaussianSeries::term(Rational(1), 2, 1, 0, 0));
	CHECK(odd.hCorrection.empty());

	SolvabilitySplit none = solvability_split(GaussianSeries());
	CHECK(none.hCorrection.empty());
	CHECK(none.rangePart.empty());
}

TEST_CASE("case A1: exact frozen coefficients under closed-form moments")
{
	ReduceOptions closed;
	closed.projection = ProjectionKind::ClosedForm;
	ReductionResult res = reduce(system_case_a(false), kA1, closed);
	CHECK(res.converged);
	CHECK(res.iterations <= 20);

	// law: 23 sqrt(2)/512 A^3 + (161/131072 - sqrt(3)/31104) A^5
	CHECK(res.amplitudeLaw.coeff(3, 0) == rad(23, 512, 2));
	CHECK(res.amplitudeLaw.coeff(5, 0) == rad(161, 131072) + rad(-1, 31104, 3));
	CHECK(res.amplitudeLaw.coeff(1, 0).is_zero());

	// hand-derived inverse chains
	const GaussianSeries &v = res.manifold;
	CHECK(v.coeff(1, 0, 1, 0) == RadicalSum(Rational(1)));
	CHECK(v.coeff(2, 3, 2, 0) == rad(-1, 6));
	CHECK(v.coeff(2, 5, 2, 0) == rad(-1, 12));
	CHECK(v.coeff(2, 7, 2, 0) == rad(-1, 42));
	CHECK(v.coeff(3, 4, 3, 0) == rad(-1, 24));
	CHECK(v.coeff(3, 6, 3, 0) == rad(-1, 36));

	// the G A^3 block is the solvability feedback through the kernel chain:
	// coefficient of z^2 is h3/2, of z^4 h3/12, of z^6 h3/90
	CHECK(v.coeff(1, 2, 3, 0) == rad(23, 1024, 2));
	CHECK(v.coeff(1, 4, 3, 0) == rad(23, 6144, 2));
	CHECK(v.coeff(1, 6, 3, 0) == rad(23, 46080, 2));

	for (auto &rec : res.history)
	{
		CHECK(rec.amplitudeExact);
		CHECK(rec.roundTripEmpty);
	}
}

TEST_CASE("case A1: structural grading and parity follow the block pattern")
{
	ReductionResult res = reduce(system_case_a(false), model_truncation(CaseTag::A1));
	GaussianSeries rep = res.report_manifold(report_truncation(CaseTag::A1));
	for (auto &[key, c] : rep.terms())
	{
		CHECK(key.thetaPow == 0);
		CHECK(key.ampPow >= 1);
		CHECK(key.ampPow <= 5);
		CHECK(key.gaussPow >= 1);
		CHECK(key.gaussPow <= key.ampPow);           // G^k appears only with A^p, p >= k
		CHECK((key.ampPow - key.gaussPow) % 2 == 0); // blocks step by A^2
		CHECK(key.zetaPow % 2 == (key.gaussPow + 1) % 2);
		CHECK(key.zetaPow <= 7);
	}
}

TEST_CASE("case B1: the critical mode is exact and the law vanishes")
{
	ReductionResult res = reduce(system_case_b(false), kA1);
	CHECK(res.converged);
	CHECK(res.iterations == 0);
	CHECK(res.manifold == GaussianSeries::amplitude_mode());
	CHECK(res.amplitudeLaw.empty());
}

TEST_CASE("case A2 (c = 0): theta-linear law coefficient is exactly -1 under closed-form moments")
{
	ReduceOptions closed;
	closed.projection = ProjectionKind::ClosedForm;
	ReductionResult res = reduce(system_case_a(true, Rational(0)), kA2, closed);
	CHECK(res.converged);
	CHECK(res.amplitudeLaw.coeff(1, 1) == RadicalSum(Rational(-1)));
	// theta-free part equals the one-mode law
	CHECK(res.amplitudeLaw.coeff(3, 0) == rad(23, 512, 2));
	for (auto &[key, c] : res.manifold.terms())
		CHECK(key.thetaPow <= 1);
	for (auto &rec : res.history)
		CHECK(rec.amplitudeExact);
}

TEST_CASE("case A2, listing-recurrence projection: the model-table theta values")
{
	ReduceOptions opt;
	opt.projection = ProjectionKind::ListingRecurrence;
	ReductionResult res = reduce(system_case_a(true, Rational(0)), kA2, opt);
	CHECK(res.converged);

	// exactly sqrt(2/3) - 2, which renders as -1.1835
	CHECK(res.amplitudeLaw.coeff(1, 1) == rad(1, 3, 6) + rad(-2, 1));
	CHECK(round4(res.amplitudeLaw.coeff(1, 1)) == "-1.1835");

	// the G A theta block of the two-mode manifold
	CHECK(res.manifold.coeff(1, 2, 1, 1) == rad(1, 6, 6));
	CHECK(round4(res.manifold.coeff(1, 2, 1, 1)) == "0.4082"); // 1/sqrt(6)
	CHECK(round4(res.manifold.coeff(1, 4, 1, 1)) == "-0.0986");
	CHECK(round4(res.manifold.coeff(1, 6, 1, 1)) == "-0.0132");
	// quadratic block, theta-linear part
	CHECK(round4(res.manifold.coeff(2, 3, 2, 1)) == "0.5113");
	CHECK(round4(res.manifold.coeff(2, 5, 2, 1)) == "0.1482");
	CHECK(round4(res.manifold.coeff(2, 7, 2, 1)) == "0.0317");
	// cubic G^3 block, theta-linear part
	CHECK(round4(res.manifold.coeff(3, 4, 3, 1)) == "0.2164");
	CHECK(round4(res.manifold.coeff(3, 6, 3, 1)) == "0.1061");
}

TEST_CASE("case B2 (c = 0): the one-mode results reappear graded by theta")
{
	ReductionResult res = reduce(system_case_b(true, Rational(0)), kB2);
	ReductionResult a1 = reduce(system_case_a(false), kA1);
	CHECK(res.converged);
	CHECK(res.amplitudeLaw.coeff(3, 2) == a1.amplitudeLaw.coeff(3, 0));
	CHECK(res.amplitudeLaw.terms().size() == 1); // A^5 needs theta^4, beyond order

	// every B2 term is an A1 term carrying theta^(p-1)
	GaussianSeries rep = res.report_manifold();
	for (auto &[key, c] : rep.terms())
	{
		CHECK(key.thetaPow == key.ampPow - 1);
		CHECK(c == a1.manifold.coeff(key.gaussPow, key.zetaPow, key.ampPow, 0));
	}
}

TEST_CASE("mass-weighted solvability diagnostic")
{
	ReduceOptions opt;
	opt.weight = SolvabilityWeight::Mass;
	opt.projection = ProjectionKind::ClosedForm;
	ReductionResult res = reduce(system_case_a(false), kA1, opt);
	CHECK(res.converged);
	// at this window the mass split leaves exactly 5 sqrt(3)/162 on A^3
	CHECK(res.amplitudeLaw.coeff(3, 0) == rad(5, 162, 3));
}

TEST_CASE("model defaults reproduce the reference four-decimal values")
{
	ReductionResult a1 = reduce(system_case_a(false), model_truncation(CaseTag::A1));
	CHECK(round4(a1.amplitudeLaw.coeff(3, 0)) == "0.0641");
	CHECK(round4(a1.amplitudeLaw.coeff(5, 0)) == "-0.0022");
	CHECK(round4(a1.manifold.coeff(1, 0, 3, 0)) == "-0.0090");
	CHECK(round4(a1.manifold.coeff(1, 2, 3, 0)) == "0.0321");
	CHECK(round4(a1.manifold.coeff(2, 3, 4, 0)) == "0.0137");

	ReductionResult a2 = reduce(system_case_a(true, Rational(0)), model_truncation(CaseTag::A2));
	CHECK(round4(a2.amplitudeLaw.coeff(1, 1)) == "-1.1835");
	CHECK(round4(a2.amplitudeLaw.coeff(3, 1)) == "-0.1631");
	CHECK(round4(a2.amplitudeLaw.coeff(5, 1)) == "0.0133");

	ReductionResult b2 = reduce(system_case_b(true, Rational(0)), model_truncation(CaseTag::B2));
	CHECK(round4(b2.amplitudeLaw.coeff(3, 2)) == "0.0641");
}

TEST_CASE("determinism: identical runs give identical serialized results")
{
	ReductionResult a = reduce(system_case_a(true, Rational(0)), kA2);
	ReductionResult b = reduce(system_case_a(true, Rational(0)), kA2);
	CHECK(jsonio::to_json(a.manifold) == jsonio::to_json(b.manifold));
	CHECK(jsonio::to_json(a.amplitudeLaw) == jsonio::to_json(b.amplitudeLaw));
}

TEST_CASE("validation and non-convergence errors")
{
	ReduceOptions zero;
	zero.maxIter = 0;
	CHECK_THROWS_AS(reduce(system_case_a(false), kA1, zero), std::invalid_argument);
	CHECK_THROWS_AS(reduce(system_case_a(false), Truncation{0, 6, 1}), std::invalid_argument);
	ReduceOptions one;
	one.maxIter = 1;
	CHECK_THROWS_WITH_AS(reduce(system_case_a(false), kA1, one),
	                     doctest::Contains("surviving residual"), std::runtime_error);
}
