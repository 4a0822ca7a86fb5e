#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace topo {

// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
// image_[i] is the image of vertex i.
class Perm4 {
public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}
  constexpr explicit Perm4(std::array<std::uint8_t, 4> image) : image_(image) {}

  // Parses the four-character form "2103"; returns false on anything that
  // is not a bijection of {0,1,2,3}.
  static bool parse(const std::string& text, Perm4& out);

  static constexpr Perm4 identity() { return Perm4(); }

  constexpr int operator[](int i) const { return image_[i]; }

  Perm4 inverse() const;

  // Composition acting left to right on points: (a.then(b))[i] == b[a[i]].
  Perm4 then(const Perm4& next) const;

  // Sign of the permutation, +1 or -1.
  int sign() const;

  bool is_identity() const { return image_ == std::array<std::uint8_t, 4>{0, 1, 2, 3}; }

  std::string str() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;

private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace topo
