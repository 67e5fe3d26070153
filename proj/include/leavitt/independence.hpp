// Changing the special (or associated) edges gives isomorphic complexes.
//
// omega: I(c) -> I(c') sends e_i^# z(p,q) to psi'(p^* q) and alpha^# z(p,q)
// to psi'_alpha(p^* q), where p^* q is rewritten in the c' basis of L(E).
// theta is the projective mirror over L(E^op).

#ifndef LEAVITT_INDEPENDENCE_HPP_
#define LEAVITT_INDEPENDENCE_HPP_

#include <vector>

#include "bimodule.hpp"
#include "complexes.hpp"
#include "report.hpp"

namespace leavitt {

  // Phi (injective): a pair sharing a last edge that is chosen for c' gets
  // that edge replaced by the c-chosen edge at the same source. tau
  // (projective) does the same with first edges and targets. Throws Error if
  // (p, q) is not an index pair for c.
  [[nodiscard]] PathPair pair_bijection(Graph const&      g,
                                        EdgeChoice const& c,
                                        EdgeChoice const& c2,
                                        PathPair const&   pq);

  // omega or theta, depending on the modes of the two bimodules.
  [[nodiscard]] ChainVector change_choice(Bimodule const& from,
                                          Bimodule const& to,
                                          CxBasis const&  x);
  [[nodiscard]] ChainVector change_choice(Bimodule const&    from,
                                          Bimodule const&    to,
                                          ChainVector const& x);

  // Rank over the rationals of the span of the given vectors.
  [[nodiscard]] std::size_t rank(std::vector<ChainVector> const& vectors);

  [[nodiscard]] CheckReport check_independence(Bimodule const&      from,
                                               Bimodule const&      to,
                                               Window const&        w,
                                               SampleOptions const& opts = {});

}  // namespace leavitt

#endif  // LEAVITT_INDEPENDENCE_HPP_
