#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "propclass/csv.hpp"
#include "propclass/errors.hpp"
#include "propclass/features.hpp"
#include "propclass/listing.hpp"
#include "propclass/rng.hpp"

namespace propclass {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool parse_double_strict(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

inline bool parse_nonneg_int_strict(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && out >= 0;
}

}  // namespace detail

// Parses the advertised price format ("Rp. 250.000.000") or a bare integer.
// Dots are thousand separators; "Rp"/"Rp." prefixes and surrounding
// whitespace are tolerated. Letters among the digits or a minus sign are
// malformed.
inline std::int64_t parse_price(std::string_view text) {
  std::string_view rest = detail::trim(text);
  if (rest.size() >= 2 && rest[0] == 'R' && rest[1] == 'p') {
    rest.remove_prefix(2);
    if (!rest.empty() && rest.front() == '.') rest.remove_prefix(1);
    rest = detail::trim(rest);
  }
  if (rest.empty()) {
    raise(ErrorKind::MalformedPrice,
          "no digits in price: \"" + std::string(text) + "\"");
  }
  std::int64_t value = 0;
  bool any_digit = false;
  for (const char c : rest) {
    if (c >= '0' && c <= '9') {
      const int digit = c - '0';
      if (value > (INT64_MAX - digit) / 10) {
        raise(ErrorKind::MalformedPrice,
              "price out of range: \"" + std::string(text) + "\"");
      }
      value = value * 10 + digit;
      any_digit = true;
    } else if (c == '.') {
      continue;
    } else {
      raise(ErrorKind::MalformedPrice,
            "unexpected character in price: \"" + std::string(text) + "\"");
    }
  }
  if (!any_digit) {
    raise(ErrorKind::MalformedPrice,
          "no digits in price: \"" + std::string(text) + "\"");
  }
  return value;
}

// Dual of parse_price: "Rp. " + dot-grouped digits.
inline std::string format_rupiah(std::int64_t value) {
  std::string digits = std::to_string(value);
  std::string grouped;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) grouped += '.';
    grouped += digits[i];
  }
  return "Rp. " + grouped;
}

// Column order mirrors the input CSV schema.
inline constexpr std::array<const char*, 6> kListingColumns = {
    "location", "building_size", "land_size", "bedroom", "bathroom", "price"};

// Parses one row of (location, building_size, land_size, bedroom, bathroom,
// price) text fields. Raises MalformedRow on a field-count mismatch and
// MalformedField naming the offending column otherwise.
inline ListingRecord parse_listing(std::span<const std::string> fields) {
  if (fields.size() != kListingColumns.size()) {
    raise(ErrorKind::MalformedRow,
          "expected 6 fields, got " + std::to_string(fields.size()));
  }
  ListingRecord rec;
  rec.location = std::string(detail::trim(fields[0]));
  if (rec.location.empty()) {
    raise(ErrorKind::MalformedField, "location: empty");
  }
  if (!detail::parse_double_strict(fields[1], rec.building_size) ||
      rec.building_size <= 0) {
    raise(ErrorKind::MalformedField,
          "building_size: not a positive number: \"" + fields[1] + "\"");
  }
  if (!detail::parse_double_strict(fields[2], rec.land_size) ||
      rec.land_size <= 0) {
    raise(ErrorKind::MalformedField,
          "land_size: not a positive number: \"" + fields[2] + "\"");
  }
  if (!detail::parse_nonneg_int_strict(fields[3], rec.bedroom)) {
    raise(ErrorKind::MalformedField,
          "bedroom: not a non-negative integer: \"" + fields[3] + "\"");
  }
  if (!detail::parse_nonneg_int_strict(fields[4], rec.bathroom)) {
    raise(ErrorKind::MalformedField,
          "bathroom: not a non-negative integer: \"" + fields[4] + "\"");
  }
  try {
    rec.price = parse_price(fields[5]);
  } catch (const Error& e) {
    raise(ErrorKind::MalformedField, std::string("price: ") + e.what());
  }
  return rec;
}

struct CleanStats {
  std::size_t duplicates_removed = 0;
  std::size_t invalid_removed = 0;
};

struct CleanResult {
  Dataset dataset;
  CleanStats stats;
};

// A record survives cleaning when all invariants hold and the price is
// strictly positive (a zero price is permitted pre-cleaning only).
inline bool is_valid_record(const ListingRecord& r) {
  return std::isfinite(r.building_size) && r.building_size > 0 &&
         std::isfinite(r.land_size) && r.land_size > 0 && r.bedroom >= 0 &&
         r.bathroom >= 0 && !detail::trim(r.location).empty() && r.price > 0;
}

namespace detail {

inline std::string record_key(const ListingRecord& r) {
  const auto hex = [](std::uint64_t v) {
    char buf[17];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
    return std::string(buf, ptr);
  };
  std::uint64_t b, l;
  static_assert(sizeof(double) == sizeof(std::uint64_t));
  std::memcpy(&b, &r.building_size, sizeof(b));
  std::memcpy(&l, &r.land_size, sizeof(l));
  return r.location + '\x1f' + hex(b) + '\x1f' + hex(l) + '\x1f' +
         std::to_string(r.bedroom) + '\x1f' + std::to_string(r.bathroom) +
         '\x1f' + std::to_string(r.price);
}

}  // namespace detail

// Drops invalid records and collapses exact duplicates to their first
// occurrence, preserving the original order of survivors. Idempotent.
inline CleanResult clean(const Dataset& raw) {
  CleanResult result;
  result.dataset.provenance = raw.provenance;
  std::unordered_set<std::string> seen;
  for (const ListingRecord& r : raw.records) {
    if (!is_valid_record(r)) {
      ++result.stats.invalid_removed;
      continue;
    }
    if (!seen.insert(detail::record_key(r)).second) {
      ++result.stats.duplicates_removed;
      continue;
    }
    result.dataset.records.push_back(r);
  }
  if (result.dataset.records.empty()) {
    raise(ErrorKind::EmptyDataset, "no records survive cleaning");
  }
  return result;
}

inline std::vector<std::string> default_location_pool() {
  return {"Bojongsoang, Bandung", "Katapang, Bandung", "Geger Kalong, Bandung",
          "Cimahi, Bandung",      "Antapani, Bandung", "Ciwastra, Bandung",
          "Cibiru, Bandung",      "Arcamanik, Bandung", "Kopo, Bandung"};
}

struct SynthConfig {
  std::size_t n = 100;
  double noise_rate = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> location_pool = default_location_pool();

  void validate() const {
    if (n < 1) {
      raise(ErrorKind::ConfigError, "synth requires n >= 1");
    }
    if (!(noise_rate >= 0.0 && noise_rate <= 1.0)) {
      raise(ErrorKind::ConfigError, "synth noise_rate must be in [0,1]");
    }
    if (location_pool.empty()) {
      raise(ErrorKind::ConfigError, "synth location pool must be non-empty");
    }
  }

  std::string tag() const {
    std::string t = "synth(n=" + std::to_string(n) + ",noise=";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), noise_rate);
    t.append(buf, ptr);
    t += ",seed=" + std::to_string(seed) + ")";
    return t;
  }
};

namespace detail {

// Planted generator intervals. Each size bin is sampled with a margin away
// from its boundary so the planted class stays recoverable from finite
// samples; the planted class is max(building bin, land bin) and the price is
// then drawn (in whole millions) inside that class's interval.
inline constexpr std::int64_t kBuildingLo[3] = {30, 98, 180};
inline constexpr std::int64_t kBuildingHi[3] = {80, 162, 400};
inline constexpr std::int64_t kLandLo[3] = {40, 116, 184};
inline constexpr std::int64_t kLandHi[3] = {98, 167, 500};
inline constexpr std::int64_t kPriceMillionsLo[3] = {95, 604, 1488};
inline constexpr std::int64_t kPriceMillionsHi[3] = {603, 1487, 3500};

// Bin pairs whose max equals the planted class, so uniform class sampling
// stays balanced.
inline constexpr std::pair<int, int> kBinPairs[3][5] = {
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
    {{0, 1}, {1, 0}, {1, 1}, {0, 1}, {0, 1}},
    {{0, 2}, {1, 2}, {2, 2}, {2, 0}, {2, 1}},
};
inline constexpr int kBinPairCount[3] = {1, 3, 5};

}  // namespace detail

// Deterministic synthetic listings from a planted piecewise price model.
// Stand-in for the unavailable scraped dataset; the true labeling rule is
// known, enabling exact recovery tests.
inline Dataset generate_synthetic(const SynthConfig& config) {
  config.validate();
  Dataset ds;
  ds.provenance = config.tag();
  ds.records.reserve(config.n);
  Rng rng(config.seed);

  // location groups by planted class: pool index i serves class i % 3
  std::array<std::vector<std::size_t>, 3> groups;
  for (std::size_t i = 0; i < config.location_pool.size(); ++i) {
    groups[i % 3].push_back(i);
  }
  const bool partitioned =
      !groups[0].empty() && !groups[1].empty() && !groups[2].empty();

  for (std::size_t i = 0; i < config.n; ++i) {
    const int planted = static_cast<int>(rng.uniform_int(0, 2));
    const int pair_idx =
        static_cast<int>(rng.uniform_int(0, detail::kBinPairCount[planted] - 1));
    const auto [b_bin, l_bin] = detail::kBinPairs[planted][pair_idx];

    ListingRecord rec;
    rec.building_size = static_cast<double>(
        rng.uniform_int(detail::kBuildingLo[b_bin], detail::kBuildingHi[b_bin]));
    rec.land_size = static_cast<double>(
        rng.uniform_int(detail::kLandLo[l_bin], detail::kLandHi[l_bin]));
    rec.bedroom = 2 + b_bin;
    rec.bathroom = 1 + b_bin;

    if (partitioned) {
      const auto& group = groups[planted];
      rec.location = config.location_pool[group[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(group.size()) - 1))]];
    } else {
      rec.location = config.location_pool[static_cast<std::size_t>(
          rng.uniform_int(0,
                          static_cast<std::int64_t>(config.location_pool.size()) - 1))];
    }

    int label_class = planted;
    if (config.noise_rate > 0.0 && rng.bernoulli(config.noise_rate)) {
      label_class = static_cast<int>(rng.uniform_int(0, 2));
    }
    rec.price = 1'000'000 *
                rng.uniform_int(detail::kPriceMillionsLo[label_class],
                                detail::kPriceMillionsHi[label_class]);
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace detail

struct IngestResult {
  Dataset dataset;
  std::vector<std::string> skipped_rows;  // "row N: reason", 1-based data rows
};

// Reads a listings CSV (header: location,building_size,land_size,bedroom,
// bathroom,price). Prices may be in the Rupiah text format or bare integers.
// Rows that fail to parse are skipped and reported, mirroring the removal of
// incomplete raw data during preprocessing.
inline IngestResult read_listings_csv(const std::string& path) {
  const CsvTable table = read_csv(path);
  std::vector<std::string> expected(kListingColumns.begin(),
                                    kListingColumns.end());
  std::vector<std::string> got;
  got.reserve(table.header.size());
  for (const auto& h : table.header) got.emplace_back(detail::trim(h));
  if (got != expected) {
    raise(ErrorKind::MalformedRow,
          "unexpected header in " + path +
              " (want location,building_size,land_size,bedroom,bathroom,price)");
  }
  IngestResult result;
  result.dataset.provenance = path;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    try {
      result.dataset.records.push_back(parse_listing(table.rows[i]));
    } catch (const Error& e) {
      result.skipped_rows.push_back("row " + std::to_string(i + 1) + ": " +
                                    e.what());
    }
  }
  return result;
}

enum class PriceFormat { Bare, Rupiah };

inline void write_listings_csv(const std::string& path, const Dataset& data,
                               PriceFormat format = PriceFormat::Bare) {
  std::vector<std::string> header(kListingColumns.begin(),
                                  kListingColumns.end());
  std::vector<std::vector<std::string>> rows;
  rows.reserve(data.records.size());
  for (const ListingRecord& r : data.records) {
    rows.push_back({r.location, detail::format_double(r.building_size),
                    detail::format_double(r.land_size),
                    std::to_string(r.bedroom), std::to_string(r.bathroom),
                    format == PriceFormat::Bare ? std::to_string(r.price)
                                                : format_rupiah(r.price)});
  }
  write_csv(path, header, rows);
}

}  // namespace propclass
