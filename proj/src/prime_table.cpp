#include "goldbach/prime_table.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace goldbach {

namespace {

// 2^12 words = 2^18 odd numbers per segment (32 KiB of bitset).
constexpr std::uint64_t kSegmentWords = 1u << 12;

constexpr char kCacheMagic[8] = {'G', 'B', 'S', 'I', 'E', 'V', 'E', '\0'};
constexpr std::uint32_t kCacheVersion = 1;

std::vector<std::uint64_t> small_odd_primes(std::uint64_t bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 3; i <= bound; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = 1;
  }
  return out;
}

void sieve_segment(std::vector<std::uint64_t>& words, std::uint64_t w0, std::uint64_t w1,
                   const std::vector<std::uint64_t>& base) {
  std::fill(words.begin() + static_cast<std::ptrdiff_t>(w0),
            words.begin() + static_cast<std::ptrdiff_t>(w1), ~std::uint64_t{0});
  const std::uint64_t bit_lo = w0 * 64;
  const std::uint64_t bit_hi = w1 * 64;  // exclusive
  const std::uint64_t n_lo = 2 * bit_lo + 1;
  const std::uint64_t n_hi = 2 * (bit_hi - 1) + 1;
  for (std::uint64_t p : base) {
    if (p * p > n_hi) break;
    std::uint64_t start = std::max(p * p, n_lo);
    std::uint64_t k = (start + p - 1) / p;
    if ((k & 1) == 0) ++k;
    for (std::uint64_t i = (k * p) >> 1; i < bit_hi; i += p) {
      words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
}

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
std::uint64_t get_le(const unsigned char* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

// FNV-1a, 64-bit.
std::uint64_t checksum(const unsigned char* data, std::size_t size) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t words_for(std::uint64_t limit) { return ((limit >> 1) >> 6) + 1; }

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_even_target(std::uint64_t E) {
  if (E <= 2 || (E & 1) != 0) {
    throw std::domain_error("target must be an even integer > 2, got " + std::to_string(E));
  }
}

PrimeTable PrimeTable::build(std::uint64_t limit, unsigned threads) {
  if (limit < 2) throw std::domain_error("sieve limit must be >= 2, got " + std::to_string(limit));
  if (limit > (std::uint64_t{1} << 40)) throw std::out_of_range("sieve limit too large");

  PrimeTable t;
  t.limit_ = limit;
  t.words_.assign(words_for(limit), 0);
  const auto base = small_odd_primes(isqrt(limit));

  const std::uint64_t total = t.words_.size();
  const std::uint64_t segments = (total + kSegmentWords - 1) / kSegmentWords;
  auto run = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t s = next++; s < segments; s = next++) {
      sieve_segment(t.words_, s * kSegmentWords, std::min(total, (s + 1) * kSegmentWords), base);
    }
  };

  std::atomic<std::uint64_t> next{0};
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(segments)));
  if (threads == 1) {
    run(next);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back([&] { run(next); });
  }
  t.finish();
  return t;
}

void PrimeTable::finish() {
  words_[0] &= ~std::uint64_t{1};  // 1 is not prime
  // Clear bits for odd numbers above limit.
  const std::uint64_t last_bit = (limit_ - 1) >> 1;  // largest odd <= limit
  const std::uint64_t w = last_bit >> 6;
  const unsigned b = last_bit & 63;
  if (b != 63) words_[w] &= (std::uint64_t{1} << (b + 1)) - 1;
  for (std::uint64_t k = w + 1; k < words_.size(); ++k) words_[k] = 0;

  rank_.assign(words_.size() + 1, 0);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    rank_[k + 1] = rank_[k] + static_cast<std::uint64_t>(std::popcount(words_[k]));
  }
}

void PrimeTable::check_covered(std::uint64_t n) const {
  if (n > limit_) {
    throw std::out_of_range("value " + std::to_string(n) + " exceeds sieve limit " +
                            std::to_string(limit_));
  }
}

std::uint64_t PrimeTable::count_up_to(std::uint64_t x) const {
  check_covered(x);
  if (x < 2) return 0;
  const std::uint64_t last_bit = (x - 1) >> 1;
  const std::uint64_t w = last_bit >> 6;
  const unsigned b = last_bit & 63;
  std::uint64_t word = words_[w];
  if (b != 63) word &= (std::uint64_t{1} << (b + 1)) - 1;
  return 1 + rank_[w] + static_cast<std::uint64_t>(std::popcount(word));
}

std::uint64_t PrimeTable::prev_prime_below(std::uint64_t n) const {
  if (n <= 2) return 0;
  check_covered(n - 1);
  if (n == 3) return 2;
  const std::uint64_t y = ((n - 1) & 1) ? n - 1 : n - 2;  // largest odd < n
  std::uint64_t i = y >> 1;
  std::uint64_t w = i >> 6;
  unsigned b = i & 63;
  std::uint64_t word = words_[w];
  if (b != 63) word &= (std::uint64_t{1} << (b + 1)) - 1;
  while (true) {
    if (word != 0) {
      const std::uint64_t bit = w * 64 + 63 - static_cast<std::uint64_t>(std::countl_zero(word));
      return 2 * bit + 1;
    }
    if (w == 0) return 2;
    word = words_[--w];
  }
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  if (hi < lo || hi < 2) return out;
  check_covered(hi);
  if (lo <= 2) out.push_back(2);
  const std::uint64_t first = std::max<std::uint64_t>(lo, 3);
  if (first > hi) return out;
  const std::uint64_t i0 = first >> 1;  // odd numbers >= first
  const std::uint64_t i1 = (hi - 1) >> 1;
  for (std::uint64_t w = i0 >> 6; w <= (i1 >> 6); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const std::uint64_t bit = w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
      word &= word - 1;
      if (bit < i0) continue;
      if (bit > i1) break;
      out.push_back(2 * bit + 1);
    }
  }
  return out;
}

// Cache layout, all integers little-endian:
//   magic[8] "GBSIEVE\0" | u32 version | u32 reserved(0) | u64 limit |
//   u64 word_count | word_count * u64 odd-only bitset words | u64 checksum
// The checksum is FNV-1a 64 over every byte from `limit` through the last word.
void PrimeTable::save(const std::filesystem::path& path) const {
  std::string buf;
  buf.reserve(40 + words_.size() * 8);
  buf.append(kCacheMagic, sizeof kCacheMagic);
  put_u32(buf, kCacheVersion);
  put_u32(buf, 0);
  const std::size_t body = buf.size();
  put_u64(buf, limit_);
  put_u64(buf, words_.size());
  for (std::uint64_t w : words_) put_u64(buf, w);
  put_u64(buf, checksum(reinterpret_cast<const unsigned char*>(buf.data()) + body, buf.size() - body));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open sieve cache for writing: " + path.string());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed writing sieve cache: " + path.string());
}

PrimeTable PrimeTable::load(const std::filesystem::path& path, std::uint64_t min_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sieve cache: " + path.string());
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());

  auto corrupt = [&](const char* what) {
    return std::runtime_error("invalid sieve cache " + path.string() + ": " + what);
  };
  if (buf.size() < 40) throw corrupt("truncated header");
  if (!std::equal(kCacheMagic, kCacheMagic + 8, buf.data())) throw corrupt("bad magic");
  if (get_le(p + 8, 4) != kCacheVersion) throw corrupt("unsupported version");

  const std::uint64_t limit = get_le(p + 16, 8);
  const std::uint64_t count = get_le(p + 24, 8);
  if (limit < 2 || count != words_for(limit)) throw corrupt("limit and word count disagree");
  if (buf.size() != 32 + count * 8 + 8) throw corrupt("size mismatch");
  const std::size_t body_end = 32 + count * 8;
  if (checksum(p + 16, body_end - 16) != get_le(p + body_end, 8)) throw corrupt("checksum mismatch");
  if (limit < min_limit) {
    throw std::out_of_range("sieve cache covers " + std::to_string(limit) + ", need " +
                            std::to_string(min_limit));
  }

  PrimeTable t;
  t.limit_ = limit;
  t.words_.resize(count);
  for (std::uint64_t k = 0; k < count; ++k) t.words_[k] = get_le(p + 32 + 8 * k, 8);
  t.finish();
  return t;
}

std::uint64_t largest_prime_below(const PrimeTable& table, std::uint64_t E) {
  if (E <= 2) throw std::domain_error("largest_prime_below requires E > 2");
  return table.prev_prime_below(E);
}

std::uint64_t prime_count_up_to(const PrimeTable& table, std::uint64_t x) {
  return table.count_up_to(x);
}

std::vector<std::uint64_t> divisor_set(const PrimeTable& table, std::uint64_t E) {
  require_even_target(E);
  if (E == 4) return {2};
  return table.primes_in(2, isqrt(E - 1));
}

std::vector<std::uint64_t> divisor_set(std::uint64_t E) {
  require_even_target(E);
  if (E == 4) return {2};
  std::vector<std::uint64_t> out{2};
  const auto odd = small_odd_primes(isqrt(E - 1));
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

}  // namespace goldbach
