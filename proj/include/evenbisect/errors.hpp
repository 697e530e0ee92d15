#pragma once

#include <stdexcept>
#include <string>

namespace evenbisect {

/// Malformed caller input: out-of-range vertex, self-loop, bad parameter.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation declined to run because a documented guard failed
/// (oracle size limit, max-degree precondition).
class refusal_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A guarantee the algorithm relies on did not hold for this input.
class contract_breach : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace evenbisect
