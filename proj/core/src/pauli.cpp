#include "lsmap/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace lsmap {

PauliString PauliString::single(int site, char p) {
  PauliString s;
  std::uint32_t bit = 1u << site;
  switch (p) {
    case 'I': break;
    case 'X': s.x = bit; break;
    case 'Z': s.z = bit; break;
    case 'Y':
      s.x = bit;
      s.z = bit;
      s.iexp = 1;
      break;
    default: throw std::invalid_argument("unknown Pauli letter");
  }
  return s;
}

PauliString PauliString::from_letters(const std::string& letters) {
  PauliString s;
  for (size_t i = 0; i < letters.size(); i++)
    s = s.times(single(static_cast<int>(i), letters[i]));
  return s;
}

bool PauliString::commutes_with(const PauliString& o) const {
  int cross = std::popcount(x & o.z) + std::popcount(z & o.x);
  return cross % 2 == 0;
}

PauliString PauliString::times(const PauliString& o) const {
  PauliString r;
  // move o's X factors left through this string's Z factors
  int crossings = std::popcount(z & o.x);
  r.x = x ^ o.x;
  r.z = z ^ o.z;
  r.iexp = static_cast<std::uint8_t>((iexp + o.iexp + 2 * (crossings % 2)) % 4);
  r.neg = neg ^ o.neg;
  r.outcome_mask = outcome_mask ^ o.outcome_mask;
  return r;
}

PauliString PauliString::with_outcome(int var) const {
  PauliString r = *this;
  r.outcome_mask ^= (1ull << var);
  return r;
}

bool PauliString::hermitian() const {
  return static_cast<int>(iexp % 2) == std::popcount(x & z) % 2;
}

bool PauliString::sign_on(std::uint64_t branch) const {
  if (!hermitian()) throw std::logic_error("sign of a non-Hermitian string");
  // canonical form uses Y with phase +1; XZ = -iY costs i^-1 per Y site
  int w = std::popcount(x & z);
  int e = ((iexp - w) % 4 + 4) % 4;  // even by hermiticity
  bool sign = (e == 2);
  sign ^= neg;
  sign ^= std::popcount(outcome_mask & branch) % 2 == 1;
  return sign;
}

char PauliString::letter(int site) const {
  std::uint32_t bit = 1u << site;
  bool bx = x & bit, bz = z & bit;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliString::letters(int n_sites) const {
  std::string s;
  for (int i = 0; i < n_sites; i++) s += letter(i);
  return s;
}

std::string PauliString::to_string(int n_sites) const {
  std::string s;
  if (outcome_mask) {
    s += "(-1)^{";
    bool first = true;
    for (int v = 0; v < 64; v++)
      if (outcome_mask & (1ull << v)) {
        if (!first) s += "+";
        s += "m" + std::to_string(v);
        first = false;
      }
    s += "} ";
  }
  int w = std::popcount(x & z);
  int e = ((iexp - w) % 4 + 4) % 4;
  if ((e == 2) ^ neg) s += "-";
  return s + letters(n_sites);
}

}  // namespace lsmap
