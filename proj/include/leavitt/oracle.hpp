// Brute-force normalizer for free words over the generators {v, e, e^*}.
// It rewrites words with the defining relations only and shares nothing with
// LeavittAlgebra::multiply except the Monomial type it reports in, so it can
// serve as an independent check of that product.

#ifndef LEAVITT_ORACLE_HPP_
#define LEAVITT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lpa.hpp"
#include "report.hpp"

namespace leavitt::oracle {

  struct Symbol {
    enum class Kind : std::uint8_t { vertex, edge, ghost };
    Kind          kind;
    std::uint32_t id;

    friend auto operator<=>(Symbol const&, Symbol const&) = default;
  };

  // Read left to right as a product; the rightmost symbol acts first.
  using Word = std::vector<Symbol>;

  enum class Strategy { leftmost, rightmost, random };

  struct Options {
    Strategy      strategy  = Strategy::leftmost;
    std::uint64_t seed      = 0;  // used by Strategy::random
    std::size_t   step_cap  = 1'000'000;
  };

  class StepCapExceeded : public Error {
   public:
    explicit StepCapExceeded(std::size_t cap);
  };

  // Rewrites until no redex remains and reads off the admissible monomials.
  // Throws StepCapExceeded.
  [[nodiscard]] AlgebraElement normalize_word(Graph const&      g,
                                              EdgeChoice const& special,
                                              Word const&       w,
                                              Options const&    opts = {});

  // Leftmost, rightmost and five seeded random redex orders must agree.
  [[nodiscard]] bool confluence_probe(Graph const&      g,
                                      EdgeChoice const& special,
                                      Word const&       w,
                                      std::size_t       step_cap = 1'000'000);

  // Uniform symbols half of the time, otherwise a composable walk, so both the
  // zero relations and the Cuntz-Krieger relations get exercised.
  [[nodiscard]] Word random_word(Graph const& g, std::size_t max_len,
                                 std::mt19937_64& rng);

  [[nodiscard]] std::string to_string(Graph const& g, Word const& w);

  // The word as a product in the algebra, built with LeavittAlgebra::multiply.
  [[nodiscard]] AlgebraElement evaluate(LeavittAlgebra const& algebra, Word const& w);

  // Random words of length <= max_len: multiply against normalize_word,
  // splitting against the product of the two halves, and confluence.
  // StepCapExceeded propagates.
  [[nodiscard]] CheckReport check_nf_oracle(LeavittAlgebra const& algebra,
                                            std::uint64_t         seed,
                                            std::size_t           samples,
                                            std::size_t           max_len  = 8,
                                            std::size_t           step_cap = 1'000'000);

}  // namespace leavitt::oracle

#endif  // LEAVITT_ORACLE_HPP_
