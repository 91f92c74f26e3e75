#pragma once

#include <string>
#include <vector>

namespace gburgers::reference {

// Reference four-decimal coefficient tables for the shipped model cases.
// Terms are identified by (gaussPow k, zetaPow n, ampPow p, thetaPow q);
// `value` is the v-coefficient with its sign.

struct Coefficient
{
	int k, n, p, q;
	const char *value;
};

// case A1 manifold, the nineteen table entries checked by the acceptance
// suite (two further printed entries are known-inconsistent across the
// source tables and are reported without being asserted; see kManifoldA1Flagged)
inline const std::vector<Coefficient> kManifoldA1 = {
    {2, 3, 2, 0, "-0.1667"}, {2, 5, 2, 0, "-0.0833"}, {2, 7, 2, 0, "-0.0238"},
    {1, 0, 3, 0, "-0.0090"}, {1, 2, 3, 0, "0.0321"},  {1, 4, 3, 0, "0.0053"},
    {1, 6, 3, 0, "0.0007"},  {3, 4, 3, 0, "-0.0417"}, {3, 6, 3, 0, "-0.0278"},
    {2, 3, 4, 0, "0.0137"},  {2, 5, 4, 0, "0.0036"},  {4, 5, 4, 0, "-0.0083"},
    {4, 7, 4, 0, "-0.0056"}, {1, 2, 5, 0, "-0.0020"}, {1, 4, 5, 0, "0.0002"},
    {1, 6, 5, 0, "0.0001"},  {3, 4, 5, 0, "0.0038"},  {3, 6, 5, 0, "0.0008"},
    {5, 6, 5, 0, "-0.0014"},
};

inline const std::vector<Coefficient> kManifoldA1Flagged = {
    {2, 7, 4, 0, "0.0010"}, // printed 0.001 in one table, 0.0003 in the other
    {1, 0, 5, 0, "0.0040"}, // printed 0.004 in one table, 0.0004 in the other
};

// case A1 law dA/dtau'
inline const std::vector<Coefficient> kLawA1 = {
    {0, 0, 3, 0, "0.0641"},
    {0, 0, 5, 0, "-0.0022"},
};

// case A2 law dA/dtau' (c = 0 resolvent convention)
inline const std::vector<Coefficient> kLawA2 = {
    {0, 0, 1, 1, "-1.1835"}, {0, 0, 3, 0, "0.0641"},  {0, 0, 3, 1, "-0.1631"},
    {0, 0, 5, 0, "-0.0022"}, {0, 0, 5, 1, "0.0133"},
};

// case B2 law dA/dtau'
inline const std::vector<Coefficient> kLawB2 = {
    {0, 0, 3, 2, "0.0641"},
};

// case B2 manifold table
inline const std::vector<Coefficient> kManifoldB2 = {
    {1, 0, 3, 2, "-0.0090"}, {1, 2, 3, 2, "0.0321"},  {1, 4, 3, 2, "0.0053"},
    {1, 6, 3, 2, "0.0007"},  {2, 3, 2, 1, "-0.1667"}, {2, 5, 2, 1, "-0.0833"},
    {2, 7, 2, 1, "-0.0238"}, {3, 4, 3, 2, "-0.0417"}, {3, 6, 3, 2, "-0.0278"},
};

// case A2 manifold, theta-linear blocks (reported, not asserted; the
// theta-free blocks coincide with kManifoldA1)
inline const std::vector<Coefficient> kManifoldA2Theta = {
    {1, 0, 1, 1, "-0.1257"}, {1, 2, 1, 1, "0.4082"},  {1, 4, 1, 1, "-0.0986"},
    {1, 6, 1, 1, "-0.0132"}, {2, 3, 2, 1, "0.5113"},  {2, 5, 2, 1, "0.1482"},
    {2, 7, 2, 1, "0.0317"},  {1, 0, 3, 1, "0.0361"},  {1, 2, 3, 1, "-0.1427"},
    {1, 4, 3, 1, "-0.0136"}, {1, 6, 3, 1, "-0.0030"}, {3, 4, 3, 1, "0.2164"},
    {3, 6, 3, 1, "0.1061"},
};

} // namespace gburgers::reference
