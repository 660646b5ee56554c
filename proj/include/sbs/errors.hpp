#pragma once

#include <stdexcept>
#include <string>

namespace sbs {

/*! \brief Requested computation exceeds a configured size limit. */
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief Solver executable missing or command not runnable. */
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief External solver produced output we cannot interpret. */
class protocol_error : public std::runtime_error {
public:
  explicit protocol_error(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief A model lacks assignments needed to read a function back. */
class decode_error : public std::runtime_error {
public:
  explicit decode_error(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief Internal cross-check failed; indicates a bug, not bad input. */
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace sbs
