// Usage example: integrate the full equation at desk scale and print the
// measured amplitude against the reduced model's prediction.

#include "gburgers/models.hpp"
#include "gburgers/pde.hpp"
#include "gburgers/report.hpp"

#include <cstdio>

int main()
{
	using namespace gburgers;
	CaseConfig cfg = configure(0.0, 1.0, -0.5); // pure self-similar spreading
	Grid grid = grid_for(cfg, 100.0, 256);
	AmplitudeTrace trace = amplitude_trace(cfg, grid, 0.3, 1.0, 100.0, 40);
	std::printf("        t           A        theta\n");
	for (auto &s : trace.samples)
		std::printf("%10.3f  %10.6f  %10.6f\n", s.t, s.amplitude, s.theta);
}
