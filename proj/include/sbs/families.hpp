#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "analysis.hpp"
#include "input.hpp"
#include "structured_function.hpp"

namespace sbs {

/*! \brief Section-based separating family: n = (2k+1)^2.
 *
 * Variables split into 2k+1 contiguous sections of width 2k+1; section t
 * (1-based) owns global indices (t-1)(2k+1)+1 .. t(2k+1). f is 1 iff some
 * section, read locally, is good: exactly one complete aligned pair
 * x_{2i-1} = x_{2i} = 1 with everything else 0, or the lone last bit
 * x_{2k+1} = 1. Achieves s(f) = 2k+1 and bs(f) = (2k+1)(k+1).
 */
class virza_function {
public:
  explicit virza_function(int k) : k_(k), width_(2 * k + 1) {
    if (k < 0)
      throw std::invalid_argument("virza_function: k must be non-negative");
    if (width_ * width_ > 64)
      throw std::invalid_argument("virza_function: n = (2k+1)^2 exceeds 64 bits");
  }

  int k() const { return k_; }
  int section_width() const { return width_; }
  int num_vars() const { return width_ * width_; }

  int expected_sensitivity() const { return width_; }
  int expected_block_sensitivity() const { return width_ * (k_ + 1); }

  bool operator()(std::uint64_t idx) const {
    const std::uint64_t mask = (width_ == 64) ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << width_) - 1;
    for (int t = 0; t < width_; ++t) {
      if (good_section(static_cast<std::uint32_t>((idx >> (t * width_)) & mask)))
        return true;
    }
    return false;
  }

  bool good_section(std::uint32_t local) const {
    if (local == std::uint32_t{1} << (width_ - 1))
      return true;
    if (std::popcount(local) != 2)
      return false;
    const int e = std::countr_zero(local);
    return (e & 1) == 0 && local == (std::uint32_t{3} << e);
  }

private:
  int k_;
  int width_;
};

inline structured_function virza_family(int k) {
  virza_function f(k);
  return structured_function(f.num_vars(), f);
}

/*! \brief The disjoint certificate at the all-zero input: per section, the
 * k complete pairs plus the lone-last-bit singleton; (2k+1)(k+1) blocks. */
inline block_set virza_witness_blocks(int k) {
  virza_function f(k);
  const int w = f.section_width();
  block_set bs{input::all_zero(f.num_vars()), {}};
  for (int t = 0; t < w; ++t) {
    const int off = t * w;
    for (int i = 1; i <= k; ++i)
      bs.blocks.push_back({off + 2 * i - 1, off + 2 * i});
    bs.blocks.push_back({off + w});
  }
  return bs;
}

/*! \brief Rubinstein's family: n = m^2 for even m, intervals of width m.
 *
 * g_i is 1 iff the input meets interval i in exactly one complete aligned
 * pair {2j-1, 2j}; f is the disjunction of the g_i. Achieves 2 bs(f) =
 * s(f)^2 = n.
 */
class rubinstein_function {
public:
  explicit rubinstein_function(int m) : m_(m) {
    if (m < 2 || (m % 2) != 0)
      throw std::invalid_argument("rubinstein_function: m must be even and >= 2");
    if (m * m > 64)
      throw std::invalid_argument("rubinstein_function: n = m^2 exceeds 64 bits");
  }

  int m() const { return m_; }
  int num_vars() const { return m_ * m_; }

  int expected_sensitivity() const { return m_; }
  int expected_block_sensitivity() const { return m_ * m_ / 2; }

  bool operator()(std::uint64_t idx) const {
    const std::uint64_t mask = (std::uint64_t{1} << m_) - 1;
    for (int i = 0; i < m_; ++i) {
      const auto local = static_cast<std::uint32_t>((idx >> (i * m_)) & mask);
      if (std::popcount(local) == 2) {
        const int e = std::countr_zero(local);
        if ((e & 1) == 0 && local == (std::uint32_t{3} << e))
          return true;
      }
    }
    return false;
  }

private:
  int m_;
};

inline structured_function rubinstein_family(int m) {
  rubinstein_function f(m);
  return structured_function(f.num_vars(), f);
}

} // namespace sbs
