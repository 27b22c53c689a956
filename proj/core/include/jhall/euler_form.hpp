#pragma once

#include "jhall/scalar.hpp"

namespace jhall {

/// Multiplicative Euler form <a, b> = q^{e(a,b)} on K0 classes, encoded by
/// its integer exponent so that the half twists <a, b>^{1/2} = v^{e(a,b)}
/// used by the twisted products stay inside Q(v).
///
/// The nilpotent Jordan-quiver category has e = 0 identically; that is the
/// only instance the library builds, but every structure constant is
/// multiplied through `value`/`half` so a skew-symmetric form plugs in here.
class EulerForm {
 public:
  static const EulerForm& jordan() {
    static const EulerForm form;
    return form;
  }

  [[nodiscard]] int exponent(int /*a*/, int /*b*/) const { return 0; }
  [[nodiscard]] Scalar value(int a, int b) const { return Scalar::v_power(2 * exponent(a, b)); }
  [[nodiscard]] Scalar half(int a, int b) const { return Scalar::v_power(exponent(a, b)); }
};

}  // namespace jhall
