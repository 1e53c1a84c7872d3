#pragma once

namespace nlslab {

// Smooth even cutoff: chi == 1 on |x| <= c0/4, chi == 0 on |x| >= c0/3,
// C-infinity in between. The transition is the normalized integral of the
// bump exp(-1/((u-a)(b-u))) on (a, b) = (c0/4, c0/3), so chi', chi'' and
// chi''' come in closed form from the bump's derivatives with no
// differentiation noise. Plateau and support values are exact.
class CutoffChi {
 public:
  explicit CutoffChi(double c0);

  double c0() const { return c0_; }
  double inner() const { return a_; }  // chi == 1 for |x| <= inner()
  double outer() const { return b_; }  // chi == 0 for |x| >= outer()

  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;
  double d3(double x) const;

  double sup_d1() const { return sup_d1_; }
  double sup_d2() const { return sup_d2_; }

 private:
  double bump(double u) const;       // exp(-1/((u-a)(b-u))) on (a,b), else 0
  double bump_d1(double u) const;
  double bump_d2(double u) const;

  double c0_, a_, b_, norm_;
  double sup_d1_ = 0.0, sup_d2_ = 0.0;
};

}  // namespace nlslab
