#pragma once

#include <stdexcept>
#include <string>

namespace fracscatter
{
// Every failure raised by the library derives from error so callers can
// catch the whole family at one site (the CLI maps subclasses to exit codes).
struct error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// bad grid / parameter / config values
struct config_error : error
{
  using error::error;
};

// operands in the wrong representation, or living on different grids
struct usage_error : error
{
  using error::error;
};

// argument outside the domain of a closed-form symbol
struct domain_error : error
{
  using error::error;
};

// a negative power of |xi| queried at xi = 0
struct singular_input_error : domain_error
{
  using domain_error::domain_error;
};

// time not on the splitting lattice, or a malformed diagnostic grid
struct schedule_error : error
{
  using error::error;
};

// modifier applied to a state carrying spectral mass below epsilon
struct support_violation : error
{
  using error::error;
};

struct construction_error : error
{
  using error::error;
};

struct fit_error : error
{
  using error::error;
};

struct io_error : error
{
  using error::error;
};

} // namespace fracscatter
