#ifndef NDNSTREAM_CORE_NAME_HPP
#define NDNSTREAM_CORE_NAME_HPP

#include "ndnstream/core/error.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ndnstream {

NDNSTREAM_DECLARE_ERROR(MalformedName);

/**
 * \brief Hierarchical content name made of non-empty byte-string components.
 *
 * The text form joins components with '/' and percent-escapes '/', '%' and any
 * byte outside the printable ASCII range, so parse(toUri()) is the identity.
 * Names order component-wise, and a name always sorts immediately before all
 * names it is a prefix of.
 */
class Name
{
public:
  using Component = std::string;

  Name() = default;

  /// \throw MalformedName if any component is empty
  explicit
  Name(std::vector<Component> components);

  /// \throw MalformedName on an empty component, a bad escape, or a missing leading '/'
  static Name
  parse(std::string_view uri);

  std::string
  toUri() const;

  size_t
  size() const noexcept
  {
    return m_components.size();
  }

  bool
  empty() const noexcept
  {
    return m_components.empty();
  }

  const Component&
  operator[](size_t i) const
  {
    return m_components[i];
  }

  const Component&
  back() const
  {
    return m_components.back();
  }

  auto
  begin() const noexcept
  {
    return m_components.begin();
  }

  auto
  end() const noexcept
  {
    return m_components.end();
  }

  Name&
  append(Component component);

  /// Returns a copy with \p component appended.
  Name
  operator/(Component component) const;

  /// First \p n components (all of them if n >= size()).
  Name
  getPrefix(size_t n) const;

  /// True iff this name's components are a leading sub-list of \p other's.
  bool
  isPrefixOf(const Name& other) const noexcept;

  friend bool
  operator==(const Name&, const Name&) = default;

  friend std::strong_ordering
  operator<=>(const Name& a, const Name& b) noexcept
  {
    return a.m_components <=> b.m_components;
  }

private:
  std::vector<Component> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

struct NameHash
{
  size_t
  operator()(const Name& name) const noexcept;
};

/// True for the "v=<n>" and "c=<n>" marker components used by versioned chunk names.
bool
isMarkerComponent(std::string_view component) noexcept;

/**
 * \brief A file name plus version and chunk index.
 *
 * Full form is base + "v=<version>" + "c=<chunk>". The base never contains a marker.
 */
struct VersionedChunkName
{
  Name base;
  uint64_t version = 0;
  uint64_t chunk = 0;

  /// \throw MalformedName if base contains a marker component
  VersionedChunkName(Name base, uint64_t version, uint64_t chunk);

  Name
  toName() const;

  /// \throw MalformedName if \p full is not of the form base/v=N/c=M
  static VersionedChunkName
  fromName(const Name& full);

  static std::optional<VersionedChunkName>
  tryFromName(const Name& full);

  VersionedChunkName
  withChunk(uint64_t c) const
  {
    return {base, version, c};
  }

  friend bool
  operator==(const VersionedChunkName&, const VersionedChunkName&) = default;
};

std::ostream&
operator<<(std::ostream& os, const VersionedChunkName& name);

} // namespace ndnstream

#endif // NDNSTREAM_CORE_NAME_HPP
