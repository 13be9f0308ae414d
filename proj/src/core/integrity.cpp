#include "ndnstream/core/integrity.hpp"
#include "ndnstream/core/detail/tlv-encoder.hpp"

#include <sodium.h>

namespace ndnstream {

namespace {

void
ensureSodium()
{
  static const int rc = sodium_init();
  if (rc < 0)
    throw Error("libsodium initialization failed");
}

struct HmacSink
{
  crypto_auth_hmacsha256_state state;

  void
  put(std::span<const uint8_t> bytes)
  {
    crypto_auth_hmacsha256_update(&state, bytes.data(), bytes.size());
  }
};

} // namespace

KeyMaterial::KeyMaterial(std::string keyId, Bytes secret)
  : m_keyId(std::move(keyId))
  , m_secret(std::move(secret))
{
  if (m_secret.empty())
    throw InvalidKey("key secret must not be empty");
}

KeyMaterial
KeyMaterial::fromPassphrase(std::string keyId, std::string_view passphrase)
{
  ensureSodium();
  Bytes secret(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(secret.data(), reinterpret_cast<const uint8_t*>(passphrase.data()),
                     passphrase.size());
  return KeyMaterial(std::move(keyId), std::move(secret));
}

IntegrityTag
computeIntegrityTag(const Data& data, const KeyMaterial& key)
{
  ensureSodium();
  HmacSink sink;
  crypto_auth_hmacsha256_init(&sink.state, key.secret().data(), key.secret().size());
  detail::TlvEncoder enc(sink);
  enc.dataSignedFields(data);
  IntegrityTag tag;
  crypto_auth_hmacsha256_final(&sink.state, tag.data());
  return tag;
}

Data
signData(Data data, const KeyMaterial& key)
{
  data.integrityTag = computeIntegrityTag(data, key);
  return data;
}

bool
verifyData(const Data& data, const KeyMaterial& key)
{
  auto expected = computeIntegrityTag(data, key);
  return crypto_verify_32(expected.data(), data.integrityTag.data()) == 0;
}

} // namespace ndnstream
