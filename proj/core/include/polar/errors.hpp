#pragma once

#include <stdexcept>

namespace polar {

/// A computation ran past its configured resource cap.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace polar
