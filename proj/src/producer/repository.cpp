#include "ndnstream/producer/repository.hpp"
#include "ndnstream/core/wire.hpp"

#include <algorithm>
#include <fstream>

namespace ndnstream::producer {

std::vector<Content>
chunkPayload(std::shared_ptr<const Bytes> payload, size_t chunkSize)
{
  if (chunkSize == 0)
    throw InvalidConfig("chunk size must be positive");
  if (payload == nullptr || payload->empty())
    return {Content()};

  std::vector<Content> chunks;
  for (size_t off = 0; off < payload->size(); off += chunkSize)
    chunks.emplace_back(payload, off, std::min(chunkSize, payload->size() - off));
  return chunks;
}

std::vector<Bytes>
chunkPayload(const Bytes& payload, size_t chunkSize)
{
  std::vector<Bytes> out;
  for (const auto& c : chunkPayload(std::make_shared<const Bytes>(payload), chunkSize))
    out.emplace_back(c.bytes().begin(), c.bytes().end());
  return out;
}

Repository::Repository(KeyMaterial key, double processingDelayMs, uint64_t freshnessMs)
  : m_key(std::move(key))
  , m_processingDelayMs(processingDelayMs)
  , m_freshnessMs(freshnessMs)
{
  if (processingDelayMs < 0)
    throw InvalidConfig("processing delay must be non-negative");
}

void
Repository::checkVersion(const Name& base, uint64_t version) const
{
  auto latest = latestVersion(base);
  if (latest && version <= *latest) {
    throw VersionRegression(base.toUri() + ": version " + std::to_string(version) +
                            " is not newer than " + std::to_string(*latest));
  }
}

void
Repository::insert(Data data, bool isSigned)
{
  auto& latest = m_latest[data.name.base];
  latest = std::max(latest, data.name.version);
  auto name = data.fullName();
  m_data.erase(name);
  auto& entry = m_data.try_emplace(std::move(name), std::move(data)).first->second;
  if (isSigned)
    std::call_once(entry.signOnce, [] {});
}

const Data&
Repository::signedData(const Entry& entry) const
{
  std::call_once(entry.signOnce, [&] { entry.data = signData(std::move(entry.data), m_key); });
  return entry.data;
}

size_t
Repository::store(const Name& base, std::shared_ptr<const Bytes> payload, size_t chunkSize,
                  uint64_t version)
{
  auto chunks = chunkPayload(std::move(payload), chunkSize);
  uint64_t finalChunk = chunks.size() - 1;
  for (uint64_t c = 0; c < chunks.size(); ++c) {
    Data data{VersionedChunkName(base, version, c), std::move(chunks[c]), finalChunk, m_freshnessMs, {}};
    insert(std::move(data), false);
  }
  return chunks.size();
}

size_t
Repository::publishFile(const Name& base, Bytes payload, size_t chunkSize, uint64_t version)
{
  if (chunkSize == 0)
    throw InvalidConfig("chunk size must be positive");
  checkVersion(base, version);
  return store(base, std::make_shared<const Bytes>(std::move(payload)), chunkSize, version);
}

size_t
Repository::publish(const VideoCatalog& catalog, const Name& prefix, size_t chunkSize,
                    uint64_t version)
{
  if (chunkSize == 0)
    throw InvalidConfig("chunk size must be positive");
  auto files = catalog.files();
  auto baseOf = [&] (const CatalogFile& f) {
    Name base = prefix;
    for (const auto& c : f.path)
      base.append(c);
    return base;
  };
  for (const auto& f : files)
    checkVersion(baseOf(f), version);

  size_t stored = 0;
  for (const auto& f : files)
    stored += store(baseOf(f), std::make_shared<const Bytes>(catalog.payload(f)), chunkSize, version);
  return stored;
}

std::optional<uint64_t>
Repository::latestVersion(const Name& base) const
{
  auto it = m_latest.find(base);
  if (it == m_latest.end())
    return std::nullopt;
  return it->second;
}

const Data*
Repository::find(const Name& fullName) const
{
  auto it = m_data.find(fullName);
  return it == m_data.end() ? nullptr : &signedData(it->second);
}

std::variant<Data, Nack>
Repository::resolve(const Interest& interest) const
{
  const Data* found = nullptr;
  if (interest.canBePrefix) {
    if (auto latest = latestVersion(interest.name))
      found = find(VersionedChunkName(interest.name, *latest, 0).toName());
  }
  else {
    found = find(interest.name);
  }
  if (found == nullptr)
    return Nack{interest.name, NackReason::NoContent};
  return *found;
}

void
Repository::dump(const std::filesystem::path& file) const
{
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out)
    throw RepositoryIoError("cannot open " + file.string() + " for writing");
  for (const auto& [name, entry] : m_data) {
    auto wire = encodePacket(signedData(entry));
    uint64_t len = wire.size();
    while (len >= 0x80) {
      out.put(static_cast<char>((len & 0x7F) | 0x80));
      len >>= 7;
    }
    out.put(static_cast<char>(len));
    out.write(reinterpret_cast<const char*>(wire.data()), static_cast<std::streamsize>(wire.size()));
  }
  if (!out)
    throw RepositoryIoError("write to " + file.string() + " failed");
}

Repository
Repository::load(const std::filesystem::path& file, KeyMaterial key, double processingDelayMs)
{
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw RepositoryIoError("cannot open " + file.string());

  Repository repo(std::move(key), processingDelayMs);
  while (in.peek() != std::ifstream::traits_type::eof()) {
    uint64_t len = 0;
    for (int shift = 0;; shift += 7) {
      int b = in.get();
      if (b == std::ifstream::traits_type::eof() || shift > 56)
        throw RepositoryIoError("truncated record length in " + file.string());
      len |= uint64_t(b & 0x7F) << shift;
      if ((b & 0x80) == 0)
        break;
    }
    Bytes wire(len);
    if (!in.read(reinterpret_cast<char*>(wire.data()), static_cast<std::streamsize>(len)))
      throw RepositoryIoError("truncated record in " + file.string());
    Packet pkt;
    try {
      pkt = decodePacket(wire);
    }
    catch (const MalformedPacket& e) {
      throw RepositoryIoError(std::string("malformed record: ") + e.what());
    }
    auto* data = std::get_if<Data>(&pkt);
    if (data == nullptr)
      throw RepositoryIoError("repository record is not a Data packet");
    if (!verifyData(*data, repo.m_key))
      throw RepositoryIoError("record fails verification: " + data->fullName().toUri());
    repo.m_freshnessMs = data->freshnessMs;
    repo.insert(std::move(*data), true);
  }
  return repo;
}

double
ServerStats::fractionWithin(double thresholdMs) const
{
  if (responseTimesMs.empty())
    return 1.0;
  auto n = std::count_if(responseTimesMs.begin(), responseTimesMs.end(),
                         [thresholdMs] (double t) { return t <= thresholdMs; });
  return static_cast<double>(n) / static_cast<double>(responseTimesMs.size());
}

FileServer::Response
FileServer::handle(const Interest& interest)
{
  ++m_stats.interests;
  auto packet = m_repo.resolve(interest);
  if (std::holds_alternative<Data>(packet))
    ++m_stats.dataSent;
  else
    ++m_stats.nacksSent;
  double delay = m_repo.processingDelayMs();
  m_stats.responseTimesMs.push_back(delay);
  return {std::move(packet), delay};
}

} // namespace ndnstream::producer
