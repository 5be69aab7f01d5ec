// Reference constants for the test suite.
//
// Generated by tools/gen_reference_values.py using 300-digit decimal
// arithmetic (mpmath).  Do not edit by hand; regenerate instead.
#pragma once

namespace refvals {

// Binary entropy h(p) in bits.
inline constexpr double h_quarter = 0.81127812445913286;
inline constexpr double h_tenth = 0.46899559358928124;
inline constexpr double h_1e6 = 2.1374262888865377e-5;
inline constexpr double h_1e12 = 4.1305832179536590e-11;
inline constexpr double h_1e100 = 3.3363550452962520e-98;
inline constexpr double h_1e200 = 6.6582831401836143e-198;

// h(a/(a+b)) at an extreme ratio: a = 0.81, b = 1e-201.
inline constexpr double eor_extreme = 8.2573609373624530e-199;

// Mutual information of a symmetric binary pair, crossover 0.25.
inline constexpr double mi_dsbs_quarter = 0.18872187554086714;

// psi on the symmetric joint (crossover 0.25) at alphas (0.5, 0.5);
// equals (1 + 0.5) * h(0.25) = 1.5 * h(0.25).
inline constexpr double psi_dsbs_quarter_half = 1.2169171866886993;

// C(p, 0.1, 0.5, 1) / h(p) at small p; the p->0 limit is 1.95.
inline constexpr double c_over_h_1e12 = 1.8680275563404452;
inline constexpr double c_over_h_1e100 = 1.9398513798586050;

// Relative midpoint gap (rhs_lower - lhs)/h(p) at q=0.1, a0=0.5;
// the p->0 limit is (1-2q)(1-a0) = 0.4.
inline constexpr double gap_rel_1e2 = -0.016102090365868522;
inline constexpr double gap_rel_1e3 = 0.10329362355466361;
inline constexpr double gap_rel_1e12 = 0.31802755634004519;
inline constexpr double gap_rel_1e50 = 0.37979015044551527;
inline constexpr double gap_rel_1e100 = 0.38985137985860496;
inline constexpr double gap_rel_1e200 = 0.39491469507999854;

// Midpoint certificate at p=1e-6, q=0.1, a0=0.5.
inline constexpr double cert_1e6_distortion = 0.55000040000000000;
inline constexpr double cert_1e6_lhs = 3.3130116027446489e-5;
inline constexpr double cert_1e6_rhs_lower = 3.8293878392882914e-5;
inline constexpr double cert_1e6_gap_lower = 5.1637623654364252e-6;
inline constexpr double cert_1e6_rhs_exact = 3.8293878392882914e-5;

// Midpoint gap at p=0.25, q=0.1, a0=0.5 (negative: no violation
// at large crossover).
inline constexpr double cert_quarter_gap_lower = -0.34169500903314300;

// Two-round erasure scheme point at p=1e-200, q=0.1, alpha=0.5.
inline constexpr double point_1e200_r1 = 2.5359400011538499e-200;
inline constexpr double point_1e200_r2 = 3.4141415700918072e-199;
inline constexpr double point_1e200_distortion = 0.55000000000000000;
inline constexpr double point_1e200_sum_ratio = 8.1691478453921587;
inline constexpr double point_1e200_split_ratio = 0.074277529185342417;

// Two-round erasure scheme point at p=0.01, q=0.2, alpha=0.3.
inline constexpr double point_moderate_r1 = 0.011838894643473227;
inline constexpr double point_moderate_r2 = 0.024033569163114059;
inline constexpr double point_moderate_distortion = 0.44420000000000000;

// C2(0.25, 0.2) and a moderate-parameter C/eta spot value.
inline constexpr double c2_quarter_fifth = 0.59913816397100421;
inline constexpr double c_moderate = 1.0350075124747908;
inline constexpr double eta_moderate = 0.51400000000000000;

// h(2p)/h(p) at small p; tends to 2 as p -> 0.
inline constexpr double ratio2_1e6 = 1.9064294542882994;
inline constexpr double ratio2_1e9 = 1.9361838881613269;
inline constexpr double ratio2_1e12 = 1.9515806874121697;

// Exact rate reduction on an asymmetric instance:
// joint = biased-BSC(p=0.2, q=0.3), D = 0.4.
inline constexpr double rho1_asym_p2_q3_d4 = 0.94855131560467355;

}  // namespace refvals
