#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace ndnstream::test {

bool
ShadowContentStore::stale(const Record& r, SimTime now) const
{
  return (now - r.inserted) * 1000.0 > static_cast<double>(r.data.freshnessMs);
}

std::optional<Data>
ShadowContentStore::lookup(const Interest& interest, SimTime now)
{
  std::optional<size_t> best;
  for (size_t i = 0; i < m_records.size();) {
    const auto& r = m_records[i];
    bool candidate = interest.canBePrefix ? interest.name.isPrefixOf(r.name) : interest.name == r.name;
    if (candidate && stale(r, now)) {
      m_records.erase(m_records.begin() + static_cast<std::ptrdiff_t>(i));
      if (best && *best > i)
        --*best;
      continue;
    }
    if (candidate) {
      if (!best) {
        best = i;
      }
      else {
        const auto& b = m_records[*best].data.name;
        const auto& n = r.data.name;
        if (n.version > b.version || (n.version == b.version && n.chunk < b.chunk))
          best = i;
      }
    }
    ++i;
  }
  if (!best)
    return std::nullopt;
  m_records[*best].lastUse = ++m_clock;
  return m_records[*best].data;
}

std::vector<Name>
ShadowContentStore::insert(const Data& data, size_t wireBytes, SimTime now)
{
  if (wireBytes > m_capacity)
    return {};
  Name name = data.name.toName();
  std::erase_if(m_records, [&] (const Record& r) { return r.name == name; });

  std::vector<Name> evicted;
  while (usedBytes() + wireBytes > m_capacity) {
    auto victim = std::min_element(m_records.begin(), m_records.end(),
                                   [] (const Record& a, const Record& b) { return a.lastUse < b.lastUse; });
    evicted.push_back(victim->name);
    m_records.erase(victim);
  }
  m_records.push_back({name, data, wireBytes, ++m_clock, now});
  return evicted;
}

size_t
ShadowContentStore::usedBytes() const
{
  size_t total = 0;
  for (const auto& r : m_records)
    total += r.bytes;
  return total;
}

std::vector<Name>
ShadowContentStore::lruOrder() const
{
  auto sorted = m_records;
  std::sort(sorted.begin(), sorted.end(),
            [] (const Record& a, const Record& b) { return a.lastUse < b.lastUse; });
  std::vector<Name> out;
  for (const auto& r : sorted)
    out.push_back(r.name);
  return out;
}

double
oracleFileRttMs(const std::vector<consumer::ChunkTiming>& timings)
{
  double sum = 0;
  for (const auto& t : timings)
    sum += (t.received - t.lastSent) * 1000.0;
  return sum / static_cast<double>(timings.size());
}

double
oracleJitterMs(const std::vector<consumer::ChunkTiming>& timings, metrics::JitterMode mode)
{
  // order by chunk index with a selection scan rather than a sort
  std::vector<double> ordered;
  std::vector<bool> used(timings.size(), false);
  for (size_t k = 0; k < timings.size(); ++k) {
    size_t pick = timings.size();
    for (size_t i = 0; i < timings.size(); ++i) {
      if (!used[i] && (pick == timings.size() || timings[i].chunk < timings[pick].chunk))
        pick = i;
    }
    used[pick] = true;
    ordered.push_back((timings[pick].received - timings[pick].lastSent) * 1000.0);
  }

  if (mode == metrics::JitterMode::Variance) {
    double m = 0;
    for (double v : ordered)
      m += v;
    m /= static_cast<double>(ordered.size());
    double acc = 0;
    for (double v : ordered)
      acc += (v - m) * (v - m);
    return acc / static_cast<double>(ordered.size());
  }

  if (ordered.size() < 2)
    return 0;
  double acc = 0;
  for (size_t i = 1; i < ordered.size(); ++i)
    acc += std::abs(ordered[i] - ordered[i - 1]);
  return acc / static_cast<double>(ordered.size() - 1);
}

std::vector<metrics::CdfPoint>
oracleCdf(const std::vector<double>& values)
{
  std::vector<double> distinct;
  for (double v : values) {
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end())
      distinct.push_back(v);
  }
  std::sort(distinct.begin(), distinct.end());
  std::vector<metrics::CdfPoint> out;
  for (double d : distinct) {
    size_t atOrBelow = 0;
    for (double v : values)
      atOrBelow += v <= d ? 1 : 0;
    out.push_back({d, static_cast<double>(atOrBelow) / static_cast<double>(values.size())});
  }
  return out;
}

double
oraclePercentile(std::vector<double> values, double p)
{
  std::sort(values.begin(), values.end());
  auto rank = static_cast<size_t>(std::ceil(p / 100.0 * static_cast<double>(values.size())));
  rank = std::clamp<size_t>(rank, 1, values.size());
  return values[rank - 1];
}

double
oracleEwma(const std::vector<WeightedSample>& samples, double halfLife)
{
  // each sample keeps (1 - d_i) of its value and then decays by every later sample's weight
  double total = 0;
  for (const auto& s : samples)
    total += s.weight;
  double acc = 0;
  double later = total;
  for (const auto& s : samples) {
    later -= s.weight;
    acc += s.value * (1 - std::pow(0.5, s.weight / halfLife)) * std::pow(0.5, later / halfLife);
  }
  return acc / (1 - std::pow(0.5, total / halfLife));
}

namespace {

size_t
leb128Size(uint64_t v)
{
  size_t n = 0;
  do {
    ++n;
    v /= 128;
  } while (v != 0);
  return n;
}

size_t
bigEndianSize(uint64_t v)
{
  size_t n = 1;
  for (; v >= 256; v /= 256)
    ++n;
  return n;
}

size_t
tlv(size_t valueLength)
{
  return 1 + leb128Size(valueLength) + valueLength;
}

} // namespace

size_t
oracleNameValueSize(const Name& name)
{
  size_t total = 0;
  for (const auto& c : name)
    total += tlv(c.size());
  return total;
}

size_t
oracleInterestWireSize(const Interest& interest)
{
  return 1 + tlv(oracleNameValueSize(interest.name)) + tlv(1) + tlv(4) +
         tlv(bigEndianSize(interest.lifetimeMs));
}

size_t
oracleDataWireSize(const Name& fullName, size_t contentSize, uint64_t finalChunk,
                   uint64_t freshnessMs)
{
  return 1 + tlv(oracleNameValueSize(fullName)) + tlv(contentSize) + tlv(bigEndianSize(finalChunk)) +
         tlv(bigEndianSize(freshnessMs)) + tlv(32);
}

double
serializationS(size_t bytes, uint64_t bandwidthBps)
{
  if (bandwidthBps == 0)
    return 0;
  return static_cast<double>(bytes) * 8.0 / static_cast<double>(bandwidthBps);
}

double
oracleChainRttMs(const std::vector<Hop>& hops, size_t interestBytes, size_t dataBytes,
                 double processingMs)
{
  double s = processingMs / 1000.0;
  for (const auto& h : hops) {
    s += 2 * h.propagationMs / 1000.0;
    s += serializationS(interestBytes, h.bandwidthBps) + serializationS(dataBytes, h.bandwidthBps);
  }
  return s * 1000.0;
}

} // namespace ndnstream::test
