// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shape-program value types. A cabinet is an ordered list of primitive
// instances; each instance is (model id, oriented box, model-specific params).
// All lengths are millimeters, all angles degrees.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cabprog {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

// Maps any finite angle into [0, 360). Negative zero becomes +0.
inline double canonical_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;  // -tiny + 360 may round up to 360
  return r == 0.0 ? 0.0 : r;
}

// B_i: center position, extents along the local axes, rotation about +z.
struct OrientedBox {
  Vec3 position;
  Vec3 size;
  double rotation_deg = 0.0;

  friend bool operator==(const OrientedBox&, const OrientedBox&) = default;
};

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Member of an enumeration-typed parameter domain, e.g. DBXX's "1".
struct EnumToken {
  std::string token;
  friend auto operator<=>(const EnumToken&, const EnumToken&) = default;
};

// integer | real (mm when dimensional) | enumeration token | text
using ParamValue = std::variant<std::int64_t, double, EnumToken, std::string>;

// Insertion-ordered key -> value map. Keys are unique.
class ParamMap {
 public:
  struct Entry {
    std::string key;
    ParamValue value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ParamMap() = default;
  ParamMap(std::initializer_list<Entry> entries) {
    for (const auto& e : entries) insert(e.key, e.value);
  }

  // Returns false (and leaves the map untouched) if the key already exists.
  bool insert(std::string key, ParamValue value) {
    if (contains(key)) return false;
    entries_.push_back({std::move(key), std::move(value)});
    return true;
  }

  void set(std::string_view key, ParamValue value) {
    if (auto* v = find(key)) {
      *v = std::move(value);
    } else {
      entries_.push_back({std::string(key), std::move(value)});
    }
  }

  bool erase(std::string_view key) {
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
      if (it->key == key) {
        entries_.erase(it);
        return true;
      }
    }
    return false;
  }

  const ParamValue* find(std::string_view key) const {
    for (const auto& e : entries_) {
      if (e.key == key) return &e.value;
    }
    return nullptr;
  }
  ParamValue* find(std::string_view key) {
    for (auto& e : entries_) {
      if (e.key == key) return &e.value;
    }
    return nullptr;
  }
  bool contains(std::string_view key) const { return find(key) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  friend bool operator==(const ParamMap&, const ParamMap&) = default;

 private:
  std::vector<Entry> entries_;
};

struct PrimitiveInstance {
  std::string model_id;  // M_i, opaque
  std::string name;      // display name
  OrientedBox box;       // B_i
  ParamMap params;       // P_i, possibly empty

  friend bool operator==(const PrimitiveInstance&,
                         const PrimitiveInstance&) = default;
};

struct CabinetModel {
  std::vector<PrimitiveInstance> instances;

  friend bool operator==(const CabinetModel&, const CabinetModel&) = default;
};

}  // namespace cabprog
