#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propclass/errors.hpp"
#include "propclass/listing.hpp"

namespace propclass {

// The three-way price label. The order A < B < C is part of the contract:
// tie-breaks throughout the toolkit resolve to the lower class.
enum class PriceClass : int { A = 0, B = 1, C = 2 };

inline constexpr int kClassCount = 3;
inline constexpr std::array<PriceClass, kClassCount> kAllClasses = {
    PriceClass::A, PriceClass::B, PriceClass::C};

inline int class_index(PriceClass c) { return static_cast<int>(c); }

inline const char* to_string(PriceClass c) {
  switch (c) {
    case PriceClass::A: return "Price_A";
    case PriceClass::B: return "Price_B";
    case PriceClass::C: return "Price_C";
  }
  return "Price_?";
}

inline std::optional<PriceClass> price_class_from_string(
    const std::string& text) {
  for (const PriceClass c : kAllClasses) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

// Interval boundaries for the three-way discretization of price, land size
// and building size. Defaults are the published constants; all three follow
// the same rule: below lower -> A, [lower, upper) -> B, at or above upper -> C.
struct BinTable {
  std::int64_t price_lower = 603'500'000;
  std::int64_t price_upper = 1'487'500'000;
  double land_lower = 107.0;
  double land_upper = 175.5;
  double building_lower = 89.0;
  double building_upper = 171.0;

  void validate() const {
    if (price_lower >= price_upper || land_lower >= land_upper ||
        building_lower >= building_upper) {
      raise(ErrorKind::ConfigError,
            "bin table requires lower bound < upper bound for each variable");
    }
  }
};

enum class Bin : int { A = 0, B = 1, C = 2 };
enum class SizeVariable { Land, Building };

namespace detail {
template <typename T>
int three_way(T value, T lower, T upper) {
  if (value < lower) return 0;
  if (value < upper) return 1;
  return 2;
}
}  // namespace detail

inline PriceClass price_class(std::int64_t price, const BinTable& bins) {
  return static_cast<PriceClass>(
      detail::three_way(price, bins.price_lower, bins.price_upper));
}

inline PriceClass price_class(std::int64_t price) {
  return price_class(price, BinTable{});
}

// Optional derived feature; the classifiers consume the continuous sizes.
inline Bin size_bin(double value, SizeVariable variable, const BinTable& bins) {
  const double lower =
      variable == SizeVariable::Land ? bins.land_lower : bins.building_lower;
  const double upper =
      variable == SizeVariable::Land ? bins.land_upper : bins.building_upper;
  return static_cast<Bin>(detail::three_way(value, lower, upper));
}

// The classifier-facing view of a record: price is dropped, it only feeds
// the label.
struct FeatureVector {
  std::string location;
  double building_size = 0.0;
  double land_size = 0.0;
  int bedroom = 0;
  int bathroom = 0;

  bool operator==(const FeatureVector&) const = default;
};

struct LabeledInstance {
  std::string location;
  double building_size = 0.0;
  double land_size = 0.0;
  int bedroom = 0;
  int bathroom = 0;
  PriceClass label = PriceClass::A;

  bool operator==(const LabeledInstance&) const = default;
};

inline FeatureVector features_of(const LabeledInstance& inst) {
  return {inst.location, inst.building_size, inst.land_size, inst.bedroom,
          inst.bathroom};
}

// Shared feature indexing for the classifiers: 0..3 numeric, 4 categorical.
inline constexpr int kNumericFeatureCount = 4;
inline constexpr int kLocationFeature = 4;
inline constexpr int kFeatureCount = 5;

inline const char* feature_name(int feature) {
  switch (feature) {
    case 0: return "building_size";
    case 1: return "land_size";
    case 2: return "bedroom";
    case 3: return "bathroom";
    case 4: return "location";
  }
  return "?";
}

inline double numeric_feature(const FeatureVector& x, int feature) {
  switch (feature) {
    case 0: return x.building_size;
    case 1: return x.land_size;
    case 2: return static_cast<double>(x.bedroom);
    case 3: return static_cast<double>(x.bathroom);
  }
  raise(ErrorKind::MissingFeature,
        std::string("not a numeric feature: ") + feature_name(feature));
}

inline double numeric_feature(const LabeledInstance& inst, int feature) {
  switch (feature) {
    case 0: return inst.building_size;
    case 1: return inst.land_size;
    case 2: return static_cast<double>(inst.bedroom);
    case 3: return static_cast<double>(inst.bathroom);
  }
  raise(ErrorKind::MissingFeature,
        std::string("not a numeric feature: ") + feature_name(feature));
}

struct LabelSummary {
  std::vector<LabeledInstance> instances;
  std::array<std::int64_t, kClassCount> class_counts{};
};

// One instance per record, order preserved; price feeds the label only.
inline LabelSummary label_dataset(const Dataset& data, const BinTable& bins) {
  LabelSummary out;
  out.instances.reserve(data.records.size());
  for (const ListingRecord& r : data.records) {
    const PriceClass label = price_class(r.price, bins);
    out.instances.push_back({r.location, r.building_size, r.land_size,
                             r.bedroom, r.bathroom, label});
    ++out.class_counts[class_index(label)];
  }
  return out;
}

struct MinMax {
  double min = 0.0;
  double max = 0.0;

  bool operator==(const MinMax&) const = default;
};

// Per-numeric-feature training ranges backing the k-NN distance. Fitted on
// the training set only, never on test data.
struct Normalizer {
  std::array<MinMax, kNumericFeatureCount> ranges{};

  bool operator==(const Normalizer&) const = default;
};

inline Normalizer fit_normalizer(std::span<const LabeledInstance> train) {
  if (train.empty()) {
    raise(ErrorKind::EmptyTrainingSet, "cannot fit normalizer on empty set");
  }
  Normalizer norm;
  for (int f = 0; f < kNumericFeatureCount; ++f) {
    double lo = numeric_feature(train[0], f);
    double hi = lo;
    for (const LabeledInstance& inst : train) {
      const double v = numeric_feature(inst, f);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    norm.ranges[f] = {lo, hi};
  }
  return norm;
}

// (x - min) / (max - min), clamped to [0, 1]; a degenerate range maps to 0.
inline double normalize(double x, MinMax range) {
  if (range.min >= range.max) return 0.0;
  const double scaled = (x - range.min) / (range.max - range.min);
  return std::clamp(scaled, 0.0, 1.0);
}

}  // namespace propclass
