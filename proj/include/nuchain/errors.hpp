#ifndef NUCHAIN_ERRORS_HPP
#define NUCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nuchain {

struct SystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Materialized levels stop at 4; |nu_5| = 2^65536.
struct LevelTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connecting maps only go downward: sigma_{j,i} needs j <= i.
struct IndexOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DepthUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPredecessorLevel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyChannel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAChannel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIncreasing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nuchain

#endif
