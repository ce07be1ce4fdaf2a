#pragma once

// Rational profiles sum_i c_i s^{m_i} (s^2 + a^2)^{-n_i} used for the
// image-term integrands of g_hat. Internal header.

#include <vector>

namespace cpwall::detail {

struct RationalTerm {
  double c;
  int m;
  int n;
};

class RationalProfile {
 public:
  RationalProfile(double a, std::vector<RationalTerm> terms);

  double a() const { return a_; }
  const std::vector<RationalTerm>& terms() const { return terms_; }

  double operator()(double s) const;
  // sum |c| |s|^m q^{-n}
  double envelope(double s) const;
  // sum over terms of sup_{t >= x} |c| t^m q(t)^{-n}, x >= 0
  double envelope_sup(double x) const;
  // integral over the whole line of the envelope
  double mass() const;
  RationalProfile derivative() const;
  // integral_S^inf of the profile; only m = 0 terms supported
  double tail_integral(double S) const;

 private:
  double a_;
  std::vector<RationalTerm> terms_;
};

// integral_S^inf (s^2 + a^2)^{-n} ds, S >= 0, n >= 1
double lorentz_tail(int n, double a, double S);

}  // namespace cpwall::detail
