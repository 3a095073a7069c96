// Copyright 2026 The fogplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Raw datasheet rows behind the default device profiles.

#ifndef FOGPLACE_DEVICE_TABLES_HPP_
#define FOGPLACE_DEVICE_TABLES_HPP_

#include <array>
#include <string_view>

namespace fogplace::tables {

struct DeviceRow {
  std::string_view device;
  double max_power;   // W
  double idle_power;  // W
  double capacity;    // GFLOPS per CPU, or Gb/s for network devices
  double efficiency;  // published W/GFLOPS or W/(Gb/s)
};

inline constexpr std::array<DeviceRow, 4> kCpuRows{{
    {"IoT CPU", 7.3, 2.56, 13.5, 0.35},
    {"AFN CPU", 37.2, 13.8, 34.5, 0.67},
    {"MFN CPU", 37.2, 13.8, 34.5, 0.67},
    {"Cloud CPU", 298.0, 58.7, 428.0, 0.55},
}};

inline constexpr std::array<DeviceRow, 5> kNetworkRows{{
    {"ONU Wi-Fi AP", 15.0, 9.0, 10.0, 0.6},
    {"OLT", 1940.0, 60.0, 8600.0, 0.22},
    {"Metro Router Port", 30.0, 27.0, 40.0, 0.08},
    {"Metro Switch", 470.0, 423.0, 600.0, 0.08},
    // The published efficiency does not equal (max - idle) / bitrate here;
    // the efficiency column is used as given.
    {"IP/WDM Node", 878.0, 790.0, 40.0, 0.14},
}};

constexpr double implied_efficiency(const DeviceRow& row) {
  return (row.max_power - row.idle_power) / row.capacity;
}

}  // namespace fogplace::tables

#endif  // FOGPLACE_DEVICE_TABLES_HPP_
