#ifndef CORNERS_ERRORS_HPP
#define CORNERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corners {

struct MalformedPartition : std::invalid_argument {
  explicit MalformedPartition(const std::string& what)
      : std::invalid_argument("MalformedPartition: " + what) {}
};

struct WrongCornerCount : std::invalid_argument {
  explicit WrongCornerCount(const std::string& what)
      : std::invalid_argument("WrongCornerCount: " + what) {}
};

struct BadTruncation : std::invalid_argument {
  explicit BadTruncation(const std::string& what)
      : std::invalid_argument("BadTruncation: " + what) {}
};

struct LengthBudgetExceeded : std::invalid_argument {
  explicit LengthBudgetExceeded(const std::string& what)
      : std::invalid_argument("LengthBudgetExceeded: " + what) {}
};

struct NotInImage : std::invalid_argument {
  explicit NotInImage(const std::string& what)
      : std::invalid_argument("NotInImage: " + what) {}
};

struct OutOfRange : std::invalid_argument {
  explicit OutOfRange(const std::string& what)
      : std::invalid_argument("OutOfRange: " + what) {}
};

struct MalformedBFile : std::runtime_error {
  explicit MalformedBFile(const std::string& what)
      : std::runtime_error("MalformedBFile: " + what) {}
};

}  // namespace corners

#endif
