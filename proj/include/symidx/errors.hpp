#pragma once

#include <stdexcept>
#include <string>

namespace symidx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterOutOfRange : Error { using Error::Error; };
struct WindowTooLarge : Error { using Error::Error; };
struct EmptyProduct : Error { using Error::Error; };
struct UnknownGroupIndex : Error { using Error::Error; };
struct RankExceeded : Error { using Error::Error; };
struct MissingReflectiveIndex : Error { using Error::Error; };
struct UnsupportedRank : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct NotAnEasyCase : Error { using Error::Error; };
struct UnknownSpace : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace symidx
