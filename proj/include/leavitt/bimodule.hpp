// The right dg B-module structure on a Leavitt complex.
//
// Injective side: B = L(E)^op with the special choice. A basis vector
// x = psi(m) or psi_b(m) (m = p^* q its index monomial) is acted on by
// x.b = psi(b m), resp. psi_b(b m), the product taken in L(E). Read in B this
// is m .op b, so (x.b).b' = x.(b .op b').
//
// Projective side: B = L(E^op) with the associated choice carried over as a
// special choice of E^op. The E-pair (p, q) is the monomial (p^op)^* q^op and
// x.b = phi(m b) in L(E^op).
//
// No Koszul signs anywhere; signed_right_action only exists to name the sign.

#ifndef LEAVITT_BIMODULE_HPP_
#define LEAVITT_BIMODULE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "complexes.hpp"
#include "lpa.hpp"
#include "report.hpp"

namespace leavitt {

  struct FreeCover {
    AlgebraElement                     slot0;
    std::map<EdgeId, AlgebraElement>   slots;

    // Drops empty edge slots so equality is structural.
    void prune();

    friend bool operator==(FreeCover const&, FreeCover const&) = default;
  };

  class Bimodule {
   public:
    explicit Bimodule(LeavittComplex const& cx);

    [[nodiscard]] LeavittComplex const& complex() const noexcept { return *_cx; }
    [[nodiscard]] Mode                  mode() const noexcept { return _cx->mode(); }
    // L(E) on the injective side, L(E^op) on the projective side.
    [[nodiscard]] LeavittAlgebra const& algebra() const noexcept { return _algebra; }

    // The monomial of B that names the zeta index of x.
    [[nodiscard]] Monomial index_monomial(CxBasis const& x) const;
    [[nodiscard]] PathPair index_pair(Monomial const& m) const;

    // psi / phi when edge is empty, psi_edge / phi_edge otherwise.
    [[nodiscard]] ChainVector embed(AlgebraElement const&        b,
                                    std::optional<EdgeId> const& edge) const;

    [[nodiscard]] ChainVector psi(AlgebraElement const& b) const;
    [[nodiscard]] ChainVector psi_beta(AlgebraElement const& b, EdgeId beta) const;
    [[nodiscard]] ChainVector phi(AlgebraElement const& b) const;
    [[nodiscard]] ChainVector phi_beta(AlgebraElement const& b, EdgeId beta) const;

    // m.b for index monomials, in B.
    [[nodiscard]] AlgebraElement act_on_index(AlgebraElement const& m,
                                              AlgebraElement const& b) const;
    // The product b b' of B.
    [[nodiscard]] AlgebraElement b_multiply(AlgebraElement const& b,
                                            AlgebraElement const& b2) const;

    [[nodiscard]] ChainVector right_action(CxBasis const& x, AlgebraElement const& b) const;
    [[nodiscard]] ChainVector right_action(ChainVector const&    x,
                                           AlgebraElement const& b) const;
    // (-1)^{|b||x|} x.b on homogeneous x and b.
    [[nodiscard]] ChainVector signed_right_action(ChainVector const&    x,
                                                  AlgebraElement const& b) const;

    // Xi on the injective side, Omega on the projective side.
    [[nodiscard]] FreeCover split(CxBasis const& x) const;
    [[nodiscard]] FreeCover split(ChainVector const& x) const;
    // Psi / Phi.
    [[nodiscard]] ChainVector cover_map(FreeCover const& f) const;
    [[nodiscard]] FreeCover   cover_action(FreeCover const& f, AlgebraElement const& b) const;

    // Normal-form monomials of B with both paths of length <= max_len.
    [[nodiscard]] std::vector<Monomial> monomials(std::size_t max_len) const;

   private:
    LeavittComplex const* _cx;
    LeavittAlgebra        _algebra;
  };

  // Homogeneous B elements for the sampled laws: monomials with paths of
  // length <= 2, occasionally a two-term combination of equal degree.
  [[nodiscard]] AlgebraElement sample_b(std::vector<Monomial> const& pool,
                                        std::mt19937_64&             rng);

  struct SampleOptions {
    std::uint64_t seed    = 0;
    std::size_t   samples = 500;
  };

  [[nodiscard]] CheckReport check_bimodule(Bimodule const&      bm,
                                           Window const&        w,
                                           SampleOptions const& opts = {});

}  // namespace leavitt

#endif  // LEAVITT_BIMODULE_HPP_
