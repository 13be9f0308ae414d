#ifndef NDNSTREAM_PRODUCER_REPOSITORY_HPP
#define NDNSTREAM_PRODUCER_REPOSITORY_HPP

#include "ndnstream/core/integrity.hpp"
#include "ndnstream/producer/catalog.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <variant>

namespace ndnstream::producer {

NDNSTREAM_DECLARE_ERROR(VersionRegression);
NDNSTREAM_DECLARE_ERROR(RepositoryIoError);

inline constexpr size_t DEFAULT_CHUNK_SIZE = 8000;
inline constexpr double DEFAULT_PROCESSING_DELAY_MS = 1.0;
inline constexpr uint64_t DEFAULT_FRESHNESS_MS = 3'600'000;

/// Splits \p payload into ceil(len / chunkSize) slices sharing its storage.
/// An empty payload yields a single empty chunk. \throw InvalidConfig if chunkSize is 0
std::vector<Content>
chunkPayload(std::shared_ptr<const Bytes> payload, size_t chunkSize);

std::vector<Bytes>
chunkPayload(const Bytes& payload, size_t chunkSize);

/**
 * \brief Signed chunk store of a producer.
 *
 * Holds every published Data by full name and the latest version of each
 * file. A chunk is signed the first time a lookup returns it. Publishing must
 * finish before serving starts; lookups are const and may run concurrently.
 */
class Repository
{
public:
  explicit
  Repository(KeyMaterial key,
             double processingDelayMs = DEFAULT_PROCESSING_DELAY_MS,
             uint64_t freshnessMs = DEFAULT_FRESHNESS_MS);

  /// Publishes every file of \p catalog under \p prefix. Returns the number of Data stored.
  /// \throw VersionRegression if \p version is not newer than a file's latest version
  size_t
  publish(const VideoCatalog& catalog, const Name& prefix, size_t chunkSize, uint64_t version);

  /// Publishes one file; same contract as publish().
  size_t
  publishFile(const Name& base, Bytes payload, size_t chunkSize, uint64_t version);

  /**
   * Fully named Interest: the exact Data, else Nack(NoContent).
   * Discovery Interest on a published file name: chunk 0 of its latest version.
   */
  std::variant<Data, Nack>
  resolve(const Interest& interest) const;

  std::optional<uint64_t>
  latestVersion(const Name& base) const;

  const Data*
  find(const Name& fullName) const;

  const KeyMaterial&
  key() const noexcept
  {
    return m_key;
  }

  double
  processingDelayMs() const noexcept
  {
    return m_processingDelayMs;
  }

  size_t
  size() const noexcept
  {
    return m_data.size();
  }

  /// Writes each Data as a varint length followed by its wire encoding.
  void
  dump(const std::filesystem::path& file) const;

  /// \throw RepositoryIoError on I/O failure, malformed records, or Data failing verification
  static Repository
  load(const std::filesystem::path& file, KeyMaterial key,
       double processingDelayMs = DEFAULT_PROCESSING_DELAY_MS);

private:
  void
  checkVersion(const Name& base, uint64_t version) const;

  size_t
  store(const Name& base, std::shared_ptr<const Bytes> payload, size_t chunkSize, uint64_t version);

  void
  insert(Data data, bool isSigned);

private:
  struct Entry
  {
    explicit
    Entry(Data d)
      : data(std::move(d))
    {
    }

    mutable Data data;
    mutable std::once_flag signOnce;
  };

  const Data&
  signedData(const Entry& entry) const;

  KeyMaterial m_key;
  double m_processingDelayMs;
  uint64_t m_freshnessMs;
  std::map<Name, Entry> m_data;
  std::map<Name, uint64_t> m_latest;
};

/// Response-time log of a file server.
struct ServerStats
{
  uint64_t interests = 0;
  uint64_t dataSent = 0;
  uint64_t nacksSent = 0;
  std::vector<double> responseTimesMs;

  /// Fraction of Interests answered within \p thresholdMs (1.0 when none were received).
  double
  fractionWithin(double thresholdMs) const;
};

/// Answers Interests from a repository after its processing delay.
class FileServer
{
public:
  struct Response
  {
    std::variant<Data, Nack> packet;
    double delayMs;
  };

  explicit
  FileServer(const Repository& repo)
    : m_repo(repo)
  {
  }

  Response
  handle(const Interest& interest);

  const ServerStats&
  stats() const noexcept
  {
    return m_stats;
  }

  const Repository&
  repository() const noexcept
  {
    return m_repo;
  }

private:
  const Repository& m_repo;
  ServerStats m_stats;
};

} // namespace ndnstream::producer

#endif // NDNSTREAM_PRODUCER_REPOSITORY_HPP
