#ifndef NDNSTREAM_CORE_INTEGRITY_HPP
#define NDNSTREAM_CORE_INTEGRITY_HPP

#include "ndnstream/core/packet.hpp"

#include <string>

namespace ndnstream {

NDNSTREAM_DECLARE_ERROR(InvalidKey);

/// Producer signing key. The tag is HMAC-SHA256 keyed with \c secret.
class KeyMaterial
{
public:
  /// \throw InvalidKey if \p secret is empty
  KeyMaterial(std::string keyId, Bytes secret);

  const std::string&
  keyId() const noexcept
  {
    return m_keyId;
  }

  const Bytes&
  secret() const noexcept
  {
    return m_secret;
  }

  /// Deterministic key derived from a text seed.
  static KeyMaterial
  fromPassphrase(std::string keyId, std::string_view passphrase);

private:
  std::string m_keyId;
  Bytes m_secret;
};

IntegrityTag
computeIntegrityTag(const Data& data, const KeyMaterial& key);

Data
signData(Data data, const KeyMaterial& key);

bool
verifyData(const Data& data, const KeyMaterial& key);

} // namespace ndnstream

#endif // NDNSTREAM_CORE_INTEGRITY_HPP
