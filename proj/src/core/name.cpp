#include "ndnstream/core/name.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

namespace ndnstream {

namespace {

bool
needsEscape(unsigned char c) noexcept
{
  return c == '/' || c == '%' || c < 0x21 || c > 0x7e;
}

int
hexValue(char c) noexcept
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

Name::Component
decodeComponent(std::string_view text)
{
  Name::Component out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out.push_back(text[i]);
      continue;
    }
    if (i + 2 >= text.size()) {
      throw MalformedName("truncated escape in name component '" + std::string(text) + "'");
    }
    int hi = hexValue(text[i + 1]);
    int lo = hexValue(text[i + 2]);
    if (hi < 0 || lo < 0) {
      throw MalformedName("bad escape in name component '" + std::string(text) + "'");
    }
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 2;
  }
  return out;
}

std::optional<uint64_t>
parseMarker(std::string_view component, char marker) noexcept
{
  if (component.size() < 3 || component[0] != marker || component[1] != '=')
    return std::nullopt;
  auto digits = component.substr(2);
  if (digits.size() > 1 && digits[0] == '0')
    return std::nullopt;
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    return std::nullopt;
  return value;
}

} // namespace

Name::Name(std::vector<Component> components)
  : m_components(std::move(components))
{
  for (const auto& c : m_components) {
    if (c.empty())
      throw MalformedName("name component must not be empty");
  }
}

Name
Name::parse(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/')
    throw MalformedName("name must start with '/': '" + std::string(uri) + "'");

  Name name;
  if (uri == "/")
    return name;

  size_t pos = 1;
  while (true) {
    size_t next = uri.find('/', pos);
    auto part = uri.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (part.empty())
      throw MalformedName("empty component in name '" + std::string(uri) + "'");
    name.m_components.push_back(decodeComponent(part));
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return name;
}

std::string
Name::toUri() const
{
  if (m_components.empty())
    return "/";

  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  for (const auto& comp : m_components) {
    out.push_back('/');
    for (char ch : comp) {
      auto c = static_cast<unsigned char>(ch);
      if (needsEscape(c)) {
        out.push_back('%');
        out.push_back(hex[c >> 4]);
        out.push_back(hex[c & 0xF]);
      }
      else {
        out.push_back(ch);
      }
    }
  }
  return out;
}

Name&
Name::append(Component component)
{
  if (component.empty())
    throw MalformedName("name component must not be empty");
  m_components.push_back(std::move(component));
  return *this;
}

Name
Name::operator/(Component component) const
{
  Name copy(*this);
  copy.append(std::move(component));
  return copy;
}

Name
Name::getPrefix(size_t n) const
{
  Name prefix;
  n = std::min(n, m_components.size());
  prefix.m_components.assign(m_components.begin(), m_components.begin() + n);
  return prefix;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  if (m_components.size() > other.m_components.size())
    return false;
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

size_t
NameHash::operator()(const Name& name) const noexcept
{
  size_t seed = name.size();
  for (const auto& c : name) {
    seed ^= std::hash<std::string>{}(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

bool
isMarkerComponent(std::string_view component) noexcept
{
  return parseMarker(component, 'v').has_value() || parseMarker(component, 'c').has_value();
}

VersionedChunkName::VersionedChunkName(Name b, uint64_t v, uint64_t c)
  : base(std::move(b))
  , version(v)
  , chunk(c)
{
  for (const auto& comp : base) {
    if (isMarkerComponent(comp))
      throw MalformedName("base name must not contain version/chunk markers: " + base.toUri());
  }
}

Name
VersionedChunkName::toName() const
{
  Name full(base);
  full.append("v=" + std::to_string(version));
  full.append("c=" + std::to_string(chunk));
  return full;
}

std::optional<VersionedChunkName>
VersionedChunkName::tryFromName(const Name& full)
{
  if (full.size() < 2)
    return std::nullopt;
  auto version = parseMarker(full[full.size() - 2], 'v');
  auto chunk = parseMarker(full[full.size() - 1], 'c');
  if (!version || !chunk)
    return std::nullopt;
  auto base = full.getPrefix(full.size() - 2);
  for (const auto& comp : base) {
    if (isMarkerComponent(comp))
      return std::nullopt;
  }
  return VersionedChunkName(std::move(base), *version, *chunk);
}

VersionedChunkName
VersionedChunkName::fromName(const Name& full)
{
  auto parsed = tryFromName(full);
  if (!parsed)
    throw MalformedName("not a versioned chunk name: " + full.toUri());
  return *parsed;
}

std::ostream&
operator<<(std::ostream& os, const VersionedChunkName& name)
{
  return os << name.toName();
}

} // namespace ndnstream
