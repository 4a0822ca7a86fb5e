#include "topo/permutation.hpp"

namespace topo {

bool Perm4::parse(const std::string& text, Perm4& out) {
  if (text.size() != 4) return false;
  std::array<std::uint8_t, 4> image{};
  std::array<bool, 4> seen{};
  for (int i = 0; i < 4; ++i) {
    char c = text[i];
    if (c < '0' || c > '3') return false;
    int v = c - '0';
    if (seen[v]) return false;
    seen[v] = true;
    image[i] = static_cast<std::uint8_t>(v);
  }
  out = Perm4(image);
  return true;
}

Perm4 Perm4::inverse() const {
  std::array<std::uint8_t, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[image_[i]] = static_cast<std::uint8_t>(i);
  return Perm4(inv);
}

Perm4 Perm4::then(const Perm4& next) const {
  std::array<std::uint8_t, 4> image{};
  for (int i = 0; i < 4; ++i)
    image[i] = static_cast<std::uint8_t>(next.image_[image_[i]]);
  return Perm4(image);
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (image_[i] > image_[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
  return s;
}

}  // namespace topo
