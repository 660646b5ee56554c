#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace sbs {

/*! \brief Set of 1-based variable indices, used for flips and blocks. */
using index_set = std::vector<int>;

/*! \brief Assignment to Boolean variables x_1..x_n.
 *
 * Bit i-1 of the packed word holds x_i, so x_1 is the least significant
 * bit of the canonical index: index(w) = sum x_i * 2^(i-1). Strings are
 * written x_1 first ("110" means x_1 = x_2 = 1, x_3 = 0).
 */
class input {
public:
  input(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > 64)
      throw std::invalid_argument("input: n must be in 1..64");
    if (n < 64 && (bits >> n) != 0)
      throw std::invalid_argument("input: bits exceed n variables");
  }

  static input all_zero(int n) { return input(n, 0); }

  static input from_string(std::string_view s) {
    if (s.empty() || s.size() > 64)
      throw std::invalid_argument("input: string length must be in 1..64");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw std::invalid_argument("input: string must be over {0,1}");
    }
    return input(static_cast<int>(s.size()), bits);
  }

  int num_vars() const { return n_; }
  std::uint64_t index() const { return bits_; }

  /*! \brief Value of x_i (1-based). */
  bool get(int i) const {
    check_index(i);
    return (bits_ >> (i - 1)) & 1u;
  }

  /*! \brief Copy with the single bit x_i flipped. */
  input flipped(int i) const {
    check_index(i);
    return input(n_, bits_ ^ (std::uint64_t{1} << (i - 1)));
  }

  /*! \brief Copy with all bits in S flipped. */
  input flipped(std::span<const int> s) const {
    return input(n_, bits_ ^ mask_of(s));
  }

  /*! \brief Packed mask of an index set, validating each index. */
  std::uint64_t mask_of(std::span<const int> s) const {
    std::uint64_t m = 0;
    for (int i : s) {
      check_index(i);
      m |= std::uint64_t{1} << (i - 1);
    }
    return m;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if ((bits_ >> i) & 1u)
        s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const input&, const input&) = default;

private:
  void check_index(int i) const {
    if (i < 1 || i > n_)
      throw std::invalid_argument("input: variable index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n_));
  }

  int n_;
  std::uint64_t bits_;
};

/*! \brief w with all bits in S flipped; involutive in S. */
inline input flip(const input& w, std::span<const int> s) { return w.flipped(s); }

inline input flip(const input& w, std::initializer_list<int> s) {
  return w.flipped(std::span<const int>(s.begin(), s.size()));
}

} // namespace sbs
