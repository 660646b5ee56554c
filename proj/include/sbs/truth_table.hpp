#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "input.hpp"

namespace sbs {

/*! \brief Explicit truth table of a Boolean function on n <= 20 variables.
 *
 * Entry idx holds f at the input with canonical index idx (x_1 is the
 * least significant bit of idx).
 */
class truth_table {
public:
  static constexpr int max_vars = 20;

  explicit truth_table(int n) : n_(check_n(n)), words_(word_count(n), 0) {}

  int num_vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool operator()(std::uint64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63u)) & 1u;
  }

  void set(std::uint64_t idx, bool value) {
    const std::uint64_t m = std::uint64_t{1} << (idx & 63u);
    if (value)
      words_[idx >> 6] |= m;
    else
      words_[idx >> 6] &= ~m;
  }

  /*! \brief Pointwise negation; preserves s(f) and bs(f). */
  truth_table complemented() const {
    truth_table g(*this);
    for (auto& w : g.words_)
      w = ~w;
    // mask tail bits of the last word back to zero
    if (n_ < 6)
      g.words_[0] &= (std::uint64_t{1} << size()) - 1;
    return g;
  }

  friend bool operator==(const truth_table& a, const truth_table& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /*! \brief Two-line text form: "n=<int>" then 2^n chars '0'/'1'. */
  std::string to_text() const {
    std::string out = "n=" + std::to_string(n_) + "\n";
    out.reserve(out.size() + size() + 1);
    for (std::uint64_t i = 0; i < size(); ++i)
      out.push_back((*this)(i) ? '1' : '0');
    out.push_back('\n');
    return out;
  }

  static truth_table from_text(const std::string& text) {
    std::istringstream is(text);
    return read(is);
  }

  static truth_table read(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
      throw std::invalid_argument("truth table text: expected first line n=<int>");
    int n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoi(header.substr(2), &pos);
      if (pos + 2 != header.size())
        throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("truth table text: bad n in header '" + header + "'");
    }
    truth_table f(n);
    std::string row;
    if (!std::getline(is, row) || row.size() != f.size())
      throw std::invalid_argument("truth table text: table line must hold exactly 2^n characters");
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      if (row[i] == '1')
        f.set(i, true);
      else if (row[i] != '0')
        throw std::invalid_argument("truth table text: table line must be over {0,1}");
    }
    return f;
  }

private:
  static int check_n(int n) {
    if (n < 1)
      throw std::invalid_argument("truth_table: n must be positive");
    if (n > max_vars)
      throw capacity_error("truth_table: n = " + std::to_string(n) +
                           " exceeds the explicit-table limit " + std::to_string(max_vars));
    return n;
  }
  static std::size_t word_count(int n) {
    return static_cast<std::size_t>(((std::uint64_t{1} << n) + 63) >> 6);
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const truth_table& f) {
  return os << f.to_text();
}

} // namespace sbs
