#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace propclass {

// One raw advertised property. Prices are integer Rupiah; sizes are m².
struct ListingRecord {
  std::string location;
  double building_size = 0.0;
  double land_size = 0.0;
  int bedroom = 0;
  int bathroom = 0;
  std::int64_t price = 0;

  bool operator==(const ListingRecord&) const = default;
};

struct Dataset {
  std::vector<ListingRecord> records;
  std::string provenance;  // source file path or synth tag
};

}  // namespace propclass
