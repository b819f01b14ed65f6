#pragma once

#include "khopos/diagram.hpp"

namespace khopos {

struct CableParams {
  int p = 2;
  int q = 0;
  int m = 0;  // partial negative twist on the first m+1 strands
};

/// (s1 s2 ... s_{p-1})^q on p strands.
BraidWord torus_braid(int p, int q);

/// n = p * w - q, the number of negative 1/p twists added to the blackboard
/// p-parallel of the companion.
int cable_twist_count(const BraidWord& companion, const CableParams& params);

/// Twisted (p, q; m) cable of the closure of `companion` (which must be a knot).
/// Each negative 1/p twist is s1^-1 s2^-1 ... s_{p-1}^-1 on the first bundle, so
/// the (p, q+1; p-1) word coincides with the (p, q; 0) word whenever n > 0.
/// Exponent sum of the result is p^2 w - n (p - 1) - m.
BraidWord cable_braid(const BraidWord& companion, const CableParams& params);

int schubert_chi(int chiK, int p, int q);
/// Quantum grading of the first homology of a twisted cable: 2 - p chi(K) + q (p - 1) - m.
int predicted_kh1_grading(int chiK, const CableParams& params);

struct CableFlags {
  bool lspaceCompatible = false;      // q >= p (2g - 1)
  bool positivityGuaranteed = false;  // q >= p w
  bool khTheoremApplies = false;      // q >= p >= 2
};
CableFlags cable_condition_report(int genus, int writhe, int p, int q);

/// [(2,1,3,2)^{2n+1}, -1, 2, 1, 1, 2] on 4 strands.
BraidWord beta_n(int n);

}  // namespace khopos
