// Minimal usage example: derive the one-mode reduced model for a slowly
// decaying diffusivity and print the evolution law.

#include "gburgers/models.hpp"
#include "gburgers/report.hpp"

#include <cstdio>

int main()
{
	using namespace gburgers;
	CaseConfig cfg = configure(/*gamma=*/1.0, /*delta=*/1.0, /*r=*/-0.5);
	ReductionResult res = reduce(system_for(cfg), default_truncation(cfg.caseTag));
	std::printf("case %s, %d correction sweeps\n", to_string(cfg.caseTag), res.iterations);
	std::printf("dA/dtau' = %s\n", render_law(res.amplitudeLaw).c_str());
	std::printf("%s", render_manifold(res.report_manifold(report_truncation(cfg.caseTag))).c_str());
}
