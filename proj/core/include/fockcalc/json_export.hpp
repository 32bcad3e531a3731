#pragma once

// JSON serialization for reports and matrices. Exact scalars are
// emitted as their canonical strings, so a parse of the exported text
// reproduces the value bit for bit; floating-point fields use
// shortest-round-trip formatting.

#include <fockcalc/criteria.hpp>
#include <fockcalc/forms.hpp>
#include <fockcalc/numeric.hpp>
#include <fockcalc/poly.hpp>
#include <fockcalc/scalar.hpp>

#include <string>

namespace fockcalc {

// {"unit":"pi","dim":n,"entries":[[...]]}
std::string matrix_json(const PiMatrix& m);

// {"theorem","case","k","lhs","rhs","holds","cross_check"}
std::string criterion_report_json(const CriterionReport& rep);

// The same shape plus a "kind" discriminator, theorem "thm31".
std::string quasi_report_json(const QuasiReport& rep);

// {"theorem","reports":[...],"first_failing_k":int|null}
std::string sweep_json(const SweepResult& sweep);

// {"status","witness":[...]|null,"witness_value":str|null}
std::string psd_json(const PSDVerdict& verdict);

// Zero scan of a defect matrix with the matrix embedded.
std::string zero_scan_json(const ZeroScanResult& scan, const PiMatrix& matrix);

// {"max_rel_err","nodes_radial","nodes_angular","kernel_truncation","pass"}
std::string comparison_json(const ComparisonReport& rep);

// Radial-plus-shift form values; the reduced block is null when absent.
std::string zn_c_json(const ZnCFormResult& res, int n, int s, const GaussianRational& C, int m);

// Discriminant bound value with its <= 1 verdict and equality marker.
std::string remark27_json(int m, int s, const Rational& bound);

std::string poly_json(const AnalyticPoly& f);
std::string pi_value_json(const PiScalar& v);

}  // namespace fockcalc
