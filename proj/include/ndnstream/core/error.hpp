#ifndef NDNSTREAM_CORE_ERROR_HPP
#define NDNSTREAM_CORE_ERROR_HPP

#include <stdexcept>

namespace ndnstream {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define NDNSTREAM_DECLARE_ERROR(Type)        \
  class Type : public ::ndnstream::Error     \
  {                                          \
  public:                                    \
    using ::ndnstream::Error::Error;         \
  }

} // namespace ndnstream

#endif // NDNSTREAM_CORE_ERROR_HPP
