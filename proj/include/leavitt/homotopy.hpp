// Contracting homotopies: d h + h d = Id on both Leavitt complexes.

#ifndef LEAVITT_HOMOTOPY_HPP_
#define LEAVITT_HOMOTOPY_HPP_

#include "bimodule.hpp"
#include "complexes.hpp"
#include "report.hpp"

namespace leavitt {

  // h(alpha^# z(p,q)) = 0 and h(e_i^# z(p,q)) = sum_{s(b)=i} psi_b(p^* q b^*).
  [[nodiscard]] ChainVector h_inj(Bimodule const& bm, CxBasis const& x);

  // h(e_i z(p,q)) = 0. For a z(p,q): if p is trivial and q = q~ a with a
  // associated, e z(e_{t(a)}, q~) - sum_{b in T(a)} e z(b, q~ b); otherwise
  // e_{t(a)} z(a p, q).
  [[nodiscard]] ChainVector h_proj(LeavittComplex const& cx, CxBasis const& x);

  [[nodiscard]] ChainVector homotopy(Bimodule const& bm, CxBasis const& x);
  [[nodiscard]] ChainVector homotopy(Bimodule const& bm, ChainVector const& x);

  [[nodiscard]] CheckReport check_homotopy(Bimodule const&      bm,
                                           Window const&        w,
                                           SampleOptions const& opts = {});

}  // namespace leavitt

#endif  // LEAVITT_HOMOTOPY_HPP_
