// Exact rational scalars and sparse linear combinations over them.

#ifndef LEAVITT_SCALAR_HPP_
#define LEAVITT_SCALAR_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>

namespace leavitt {

  using Scalar = mpq_class;

  std::string to_string(Scalar const& s);

  // A finite formal sum  sum_k c_k * k  with every stored c_k nonzero.
  // Iteration follows Key's ordering, which is what every printer relies on.
  template <typename Key>
  class LinearCombination {
   public:
    using map_type       = std::map<Key, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    explicit LinearCombination(Key key, Scalar coeff = Scalar(1)) {
      add(std::move(key), coeff);
    }

    void add(Key const& key, Scalar const& coeff) {
      if (coeff == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    void add(LinearCombination const& other, Scalar const& coeff = Scalar(1)) {
      if (coeff == 0) {
        return;
      }
      for (auto const& [key, c] : other._terms) {
        add(key, c * coeff);
      }
    }

    [[nodiscard]] Scalar coefficient(Key const& key) const {
      auto it = _terms.find(key);
      return it == _terms.end() ? Scalar(0) : it->second;
    }

    [[nodiscard]] bool contains(Key const& key) const {
      return _terms.count(key) != 0;
    }

    [[nodiscard]] bool        is_zero() const noexcept { return _terms.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return _terms.size(); }

    [[nodiscard]] const_iterator begin() const noexcept { return _terms.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return _terms.end(); }

    [[nodiscard]] map_type const& terms() const noexcept { return _terms; }

    LinearCombination& operator+=(LinearCombination const& other) {
      add(other);
      return *this;
    }

    LinearCombination& operator-=(LinearCombination const& other) {
      add(other, Scalar(-1));
      return *this;
    }

    LinearCombination& operator*=(Scalar const& s) {
      if (s == 0) {
        _terms.clear();
      } else {
        for (auto& [key, c] : _terms) {
          c *= s;
        }
      }
      return *this;
    }

    friend LinearCombination operator+(LinearCombination lhs,
                                       LinearCombination const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend LinearCombination operator-(LinearCombination lhs,
                                       LinearCombination const& rhs) {
      lhs -= rhs;
      return lhs;
    }

    friend LinearCombination operator-(LinearCombination x) {
      x *= Scalar(-1);
      return x;
    }

    friend LinearCombination operator*(Scalar const& s, LinearCombination x) {
      x *= s;
      return x;
    }

    friend bool operator==(LinearCombination const& a,
                           LinearCombination const& b) {
      return a._terms == b._terms;
    }

   private:
    map_type _terms;
  };

  // Applies a basis-level linear map to a combination.
  template <typename Out, typename In, typename Fn>
  LinearCombination<Out> apply_linear(Fn&& fn, LinearCombination<In> const& x) {
    LinearCombination<Out> result;
    for (auto const& [key, c] : x) {
      result.add(fn(key), c);
    }
    return result;
  }

}  // namespace leavitt

#endif  // LEAVITT_SCALAR_HPP_
